#ifndef FUSIONLOC_FUSION_H_
#define FUSIONLOC_FUSION_H_

#include <memory>
#include <optional>
#include <string>
#include <unordered_map>
#include <vector>

#include "fusionloc/group.h"

namespace fusionloc {

// c_g restricted to `source`, landing in `target`.
struct Morphism {
  Subgroup source;
  Subgroup target;
  Elem witness = 0;

  Elem operator()(Elem x) const { return source.group().conj(x, witness); }
};

// Fusion data of x^H within T for every x in T, used for strong closure in
// a (possibly non-Sylow) pair T <= H.
class ElementFusion {
 public:
  ElementFusion(const Subgroup& h, const Subgroup& t);
  const Subgroup& h() const { return h_; }
  const Subgroup& t() const { return t_; }
  // x^H intersected with T, for x in T.
  const Bitset& ClassInT(Elem x) const { return in_t_[class_of_[x]]; }
  // No element of X is H-conjugate into T \ X. X must lie in T.
  bool StronglyClosed(const Subgroup& x) const;

 private:
  Subgroup h_, t_;
  std::vector<uint32_t> class_of_;
  std::vector<Bitset> in_t_;
};

// Q is normal in F_T(H): Q is normal in T and every H-conjugation between
// subgroups of T extends to one that normalizes Q. `t_subgroups` lists all
// subgroups of T (pass an empty vector to have them computed).
bool IsNormalInRealized(const Subgroup& h, const Subgroup& t,
                        const Subgroup& q,
                        const std::vector<Subgroup>& t_subgroups = {});
// A series 1 = Q_0 < ... < Q_n = Q of subgroups strongly closed in (H, T)
// with [Q_i, Q] <= Q_{i-1}, found breadth-first; nullopt if none.
std::optional<std::vector<Subgroup>> StronglyClosedCentralSeries(
    const ElementFusion& ef, const Subgroup& q);

// The realized fusion system F_S(G). Subgroups of S, their F-classes and
// element fusion are computed on first use; not safe for concurrent first
// use.
class FusionSystem {
 public:
  // Throws InputError unless S is a Sylow p-subgroup of G.
  FusionSystem(const Subgroup& g, const Subgroup& s, unsigned p);

  const Group& universe() const { return g_.group(); }
  const Subgroup& group() const { return g_; }
  const Subgroup& sylow() const { return s_; }
  unsigned p() const { return p_; }

  // Every subgroup of S in canonical order.
  const std::vector<Subgroup>& subgroups() const;
  size_t IndexOf(const Subgroup& p) const;
  // Index of the subgroup with these members, if it is one of ours.
  std::optional<size_t> FindIndex(const Bitset& members) const;
  // F-classes of subgroups as index lists, ordered by smallest index.
  const std::vector<std::vector<size_t>>& classes() const;
  size_t ClassOf(size_t index) const;
  // Member with the largest N_S, smallest index on ties.
  size_t FullyNormalizedRep(size_t cls) const;
  bool IsFullyNormalized(const Subgroup& p) const;
  // All F-conjugates of p inside S, as indices.
  const std::vector<size_t>& ClassMembers(const Subgroup& p) const;
  const ElementFusion& element_fusion() const;

 private:
  void BuildLattice() const;
  void BuildClasses() const;

  Subgroup g_, s_;
  unsigned p_;
  mutable std::vector<Subgroup> subs_;
  mutable std::unordered_map<Bitset, size_t, BitsetHash> index_;
  mutable std::vector<std::vector<size_t>> classes_;
  mutable std::vector<size_t> class_of_;
  mutable std::unique_ptr<ElementFusion> fusion_;
};

// One morphism per coset C_G(P)g of the transporter {g : P^g <= Q}, in
// element order of the coset minima.
std::vector<Morphism> HomSet(const FusionSystem& f, const Subgroup& p,
                             const Subgroup& q);

struct SubgroupClassReport {
  size_t representative = 0;  // fully normalized member (index)
  size_t class_size = 0;
  bool fully_normalized = true;
  bool fully_centralized = false;
  bool centric = false;
  bool radical = false;
  bool essential = false;
  bool weakly_closed = false;
  bool strongly_closed = false;
};
// One report per F-class. Throws ResourceError when |S| > 2^10.
std::vector<SubgroupClassReport> ClassifySubgroups(const FusionSystem& f);

// Out_F(P) = N_G(P) / P C_G(P).
struct OutImage {
  std::shared_ptr<const Group> group;
  Subgroup kernel;  // P C_G(P)
};
OutImage OutF(const FusionSystem& f, const Subgroup& p);
// Disconnected Sylow p-intersection graph (with p | |H| and O_p(H) = 1).
bool HasStronglyPEmbedded(const Subgroup& h, unsigned p);
// Definition scan: some proper M with p | |M| and p not dividing
// |M cap M^g| for every g outside M. Exponential; for cross-checks.
bool HasStronglyPEmbeddedBrute(const Subgroup& h, unsigned p);

// Fully normalized centric representatives whose Out_F has a strongly
// p-embedded subgroup, one per class.
std::vector<Subgroup> EssentialSubgroups(const FusionSystem& f);

struct EssentialStructure {
  bool applicable = false;
  std::string reason;
  Subgroup offender;
  uint64_t q = 0;                 // |N_S(R)/R|
  uint64_t offender_image = 0;    // |A / (A cap R)|
  uint64_t out_p_order = 0;       // |O^{p'}(Out_F(R))|
  uint64_t sylow_count = 0;       // Sylow p-subgroups of O^{p'}(Out_F(R))
  bool sl2_order = false;         // out_p_order == q(q^2 - 1)
  bool sl2_sylow = false;         // q + 1 Sylow subgroups of order q
  std::optional<bool> natural;    // checked for q prime only
  uint64_t frattini_quotient = 0; // |R / Phi(R)|
};
// Throws InternalError if |R/Phi(R)| < |N_S(R)/R|^2 for an essential R.
EssentialStructure EssentialLocalStructure(const FusionSystem& f,
                                           const Subgroup& r);

// alpha defined on N_S(P) with P alpha fully normalized; the identity on
// N_S(P) when P already is.
Morphism FullyNormalize(const FusionSystem& f, const Subgroup& p);

// F_{N_S(P)}(N_G(P)); throws PreconditionError unless P is fully
// normalized.
FusionSystem NormalizerSubsystem(const FusionSystem& f, const Subgroup& p);

struct NormalityReport {
  bool extension = false;                  // Q normal in F by definition
  bool characteristic_closed = false;      // every char subgroup strongly closed
  std::optional<std::vector<Subgroup>> series;  // witness for the series form
  bool normal() const { return extension; }
};
// Evaluates all three forms; throws InternalError if they disagree.
NormalityReport IsNormalInF(const FusionSystem& f, const Subgroup& q);

struct GroupLargeness {
  bool large = false;
  std::string witness;  // first failing clause
};
GroupLargeness IsLargeInGroup(const Subgroup& g, const Subgroup& q, unsigned p);

struct CriterionVerdict {
  std::string name;
  bool holds = false;
  std::string witness;
  double millis = 0;
};
struct LargenessReport {
  bool self_centralizing = false;
  std::vector<CriterionVerdict> criteria;  // (i) (ii) (ii') (iii) (iii') (iv) (iv')
  bool large = false;
  bool weakly_closed = false;
  bool normal_in_s = false;
};
// Throws InternalError when C_S(Q) <= Q and the criteria disagree, or when
// a large Q is not weakly closed or not normal in S.
LargenessReport IsLargeInFusion(const FusionSystem& f, const Subgroup& q);

// O_p(F): the largest subgroup of S normal in F.
Subgroup OpOfFusion(const FusionSystem& f);
// Membership over f.subgroups(). Throws InternalError unless the set is
// closed under F-conjugacy and overgroups.
Bitset SubcentricSet(const FusionSystem& f);
bool IsCentric(const FusionSystem& f, const Subgroup& p);

struct HyperfocalFocal {
  Subgroup hyp;
  Subgroup foc;
};
HyperfocalFocal HyperfocalAndFocal(const FusionSystem& f);

// Does the probe factor through restrictions of morphisms of the listed
// realized subsystems of F? Breadth-first over maps out of the probe
// source; throws ResourceError past Caps::node_cap states.
bool SubsystemGeneratedContains(const FusionSystem& f,
                                const std::vector<const FusionSystem*>& gens,
                                const Morphism& probe);

// N_F(P) constrained for every nontrivial P normal in S, i.e. every such
// P is subcentric.
bool ParabolicCharacteristic(const FusionSystem& f);
// The group version: N_G(P) of characteristic p for every nontrivial P
// normal in S.
bool GroupParabolicCharacteristic(const FusionSystem& f);

}  // namespace fusionloc

#endif  // FUSIONLOC_FUSION_H_
