#ifndef FUSIONLOC_CORE_H_
#define FUSIONLOC_CORE_H_

#include <memory>
#include <optional>
#include <vector>

#include "fusionloc/group.h"

namespace fusionloc {

struct LocalSubgroups {
  Subgroup normalizer;
  Subgroup centralizer;
};

// Throws InputError when H is not contained in G.
LocalSubgroups LocalSubgroupsOf(const Subgroup& g, const Subgroup& h);

// Sylow p-subgroup by ascent: starting from 1, adjoin the first element of
// N_G(P) whose image in N_G(P)/P is a nontrivial p-element.
Subgroup Sylow(const Subgroup& g, unsigned p);

struct CoreBundle {
  Subgroup o_p;
  Subgroup o_p_prime;
  Subgroup o_up_p;
  Subgroup derived;
  Subgroup center;
  Subgroup frattini;
  Subgroup omega1_center;
};

CoreBundle CoreBundleOf(const Subgroup& g, unsigned p);

// Largest normal p-subgroup.
Subgroup OpOf(const Subgroup& g, unsigned p);
// Largest normal p'-subgroup.
Subgroup OpPrimeOf(const Subgroup& g, unsigned p);
// O^p(G): generated by all p'-elements.
Subgroup UpperPOf(const Subgroup& g, unsigned p);
Subgroup FittingSubgroup(const Subgroup& g);
// Intersection of the maximal subgroups. For p-groups this is G'G^p. In
// general x lies in it iff its normal closure has no proper supplement,
// which is tested on lifts of one minimal generating tuple of G/N.
Subgroup Frattini(const Subgroup& g);

bool IsCharacteristicP(const Subgroup& g, unsigned p);

// First g in element order with P^g = Q, or nullopt.
std::optional<Elem> Transporter(const Subgroup& g, const Subgroup& p,
                                const Subgroup& q);
// All g in G with P^g <= Q, as a member set.
Bitset TransporterSet(const Subgroup& g, const Subgroup& p,
                      const Subgroup& q);

// Every subgroup of G, ascending in the canonical subgroup order. Built
// bottom-up from cyclic subgroups by joins; throws ResourceError past
// Caps::lattice_cap.
std::vector<Subgroup> AllSubgroups(const Subgroup& g);

// Partition of `subs` into orbits under conjugation by `by`. Each orbit
// lists indices into `subs`; orbits are ordered by smallest index. Every
// conjugate must itself appear in `subs`.
std::vector<std::vector<size_t>> ConjugacyClassesOfSubgroups(
    const std::vector<Subgroup>& subs, const Subgroup& by);

// A homomorphic image of a subgroup of some universe.
struct Image {
  std::shared_ptr<const Group> group;
  std::vector<Elem> map;  // universe element -> image element (members only)
  Subgroup source;
  Elem operator()(Elem x) const { return map[x]; }
  Subgroup ImageOf(const Subgroup& h) const;
};

// G/N via the right-multiplication action on cosets.
Image Quotient(const Subgroup& g, const Subgroup& n);
// Conjugation action of A on the elements of P (A must normalize P).
Image ConjugationAction(const Subgroup& a, const Subgroup& p);
// H as a standalone group on the same points.
Image AsGroup(const Subgroup& h);

// Y_G: the largest p-reduced elementary abelian normal p-subgroup. Scans
// G-normal subgroups of Omega_1(Z(O_p(G))) and joins those whose action
// image has trivial O_p. Throws InternalError if the join is not p-reduced.
Subgroup YSubgroup(const Subgroup& g, unsigned p);
// O_p(G/C_G(Y)) = 1 for the conjugation action of G on Y.
bool IsPReducedFor(const Subgroup& g, const Subgroup& y, unsigned p);

}  // namespace fusionloc

#endif  // FUSIONLOC_CORE_H_
