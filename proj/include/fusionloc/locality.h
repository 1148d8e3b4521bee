#ifndef FUSIONLOC_LOCALITY_H_
#define FUSIONLOC_LOCALITY_H_

#include <cstdint>
#include <optional>
#include <span>
#include <string>
#include <vector>

#include "fusionloc/fusion.h"
#include "fusionloc/group.h"
#include "fusionloc/report.h"

namespace fusionloc {

enum class ObjectPreset {
  kCentric,     // F^c
  kCharP,       // N_G(P) of characteristic p
  kCStar,       // N_G(P) / O_p'(N_G(P)) of characteristic p
  kSubcentric,  // F^s
};

// Throws InputError for anything but cp, cstar, centric or subcentric.
ObjectPreset ParseObjectPreset(const std::string& name);
const char* PresetName(ObjectPreset p);

// A family of subgroups of S, as membership over f.subgroups(). Keeps a
// pointer to the fusion system, which must outlive it.
class ObjectSet {
 public:
  ObjectSet(const FusionSystem& f, Bitset members);

  const FusionSystem& fusion() const { return *f_; }
  const Bitset& members() const { return members_; }
  size_t size() const { return members_.count(); }
  bool contains(const Subgroup& p) const;
  bool contains_index(size_t i) const { return members_.test(i); }
  std::vector<Subgroup> Subgroups() const;
  // Fully normalized representative of every F-class that meets the set.
  std::vector<Subgroup> Representatives() const;
  // Empty when closed under F-conjugacy and overgroups in S and S is a
  // member; otherwise names the first offending subgroup.
  std::optional<std::string> ClosureViolation() const;

 private:
  const FusionSystem* f_;
  Bitset members_;
};

// Throws InputError when the preset family is empty or not closed (the
// latter would be a bug in the preset, so it is reported).
ObjectSet BuildObjectSet(const FusionSystem& f, ObjectPreset preset);
// Smallest closed family containing the seeds; throws InputError unless
// every seed lies in S.
ObjectSet ObjectSetFromSeeds(const FusionSystem& f,
                             const std::vector<Subgroup>& seeds);

// w in D via the chain X_w = P_0, P_1 = P_0^{f_1}, ..., P_n.
struct DomainWitness {
  Subgroup x;
  std::vector<Subgroup> chain;
};

struct AlperinFactor {
  Elem g;
  Subgroup r;
};

struct AlperinFactorization {
  Elem original = 0;
  std::vector<AlperinFactor> factors;
};

// L_Delta(G) with D the words admitting a Delta-chain. A realized word
// lies in D iff X_w = {x in S : x^{f_1...f_i} in S for all i} is in Delta:
// any chain starts inside X_w, and Delta is closed under overgroups.
class Locality {
 public:
  // Throws InputError unless Delta is closed (skipped when
  // `require_closed` is false, for fault injection), ResourceError above
  // Caps::element_cap.
  explicit Locality(const ObjectSet& delta, bool require_closed = true);

  const FusionSystem& fusion() const { return delta_.fusion(); }
  const ObjectSet& objects() const { return delta_; }
  const Group& universe() const { return fusion().universe(); }
  const Subgroup& group() const { return fusion().group(); }
  const Subgroup& sylow() const { return fusion().sylow(); }
  unsigned p() const { return fusion().p(); }

  const Bitset& elements() const { return elements_; }
  bool contains(Elem g) const { return elements_.test(g); }
  size_t size() const { return elements_.count(); }

  // S_g for g in G.
  Subgroup SOf(Elem g) const;
  // X_w for any word over G.
  Subgroup XOf(std::span<const Elem> w) const;
  std::optional<DomainWitness> DomainCheck(std::span<const Elem> w) const;
  bool InDomain(std::span<const Elem> w) const;
  // Throws UndefinedProductError outside D.
  Elem Product(std::span<const Elem> w) const;
  Elem Inverse(Elem g) const { return universe().inv(g); }

  // {f in L : X in D(f), X^f = X} and the pointwise version.
  Bitset NormalizerIn(const Subgroup& x) const;
  Bitset CentralizerIn(const Subgroup& x) const;
  // P_H in Delta and H inside L.
  bool IsSubgroupOfL(const Subgroup& h) const;

  Subgroup OpOfLocality() const;
  // O^p(L) as a member set over the universe. Throws InternalError if
  // the closure is not a partial normal subgroup with K S = L.
  Bitset UpperPOfLocality() const;

  // Throws PreconditionError outside L; InternalError if an invariant
  // fails on the result.
  AlperinFactorization Factorize(Elem g) const;
  // Empty when every invariant holds.
  std::optional<std::string> CheckFactorization(
      const AlperinFactorization& a) const;

  // Elements of L in element order.
  std::vector<Elem> ElementList() const { return elements_.to_vector(); }

 private:
  AlperinFactorization FactorizeRec(Elem f, int depth) const;

  ObjectSet delta_;
  Bitset elements_;
  std::vector<Elem> s_elems_;
};

// Whether c_g : A -> T is a composite of restrictions of c_h : T_h -> T
// with h in `gens`, where T_h = {x in T : x^h in T}. Breadth-first over
// maps out of A up to C_G(A); throws ResourceError past Caps::node_cap.
bool GeneratedByElements(const Subgroup& g, const Subgroup& t,
                         const Bitset& gens, const Subgroup& a, Elem target);

struct VerifyOptions {
  int word_cap = 3;
  // Above this many words of one length the words are sampled.
  uint64_t exhaustive_limit = 2000000;
  uint64_t samples = 200000;
  uint64_t seed = 20240601;
};

// Partial-group axioms on words of length <= word_cap, (L1), (L2) through
// the chain returned by DomainCheck, (L3), and S_g in Delta for all g.
ReportNode VerifyLocality(const Locality& l, const VerifyOptions& opt = {});

struct LocalityFlags {
  bool objective_char_p = false;
  bool fusion_matches = false;  // F_S(L) = F_S(G)
  bool cr_in_delta = false;     // F^cr inside Delta
  bool linking = false;
  std::optional<bool> replete;  // when Q is given
};
// Throws InternalError when the two forms of Q-repleteness disagree.
LocalityFlags ComputeLocalityFlags(const Locality& l,
                                   const std::optional<Subgroup>& q);
ReportNode FlagsReport(const LocalityFlags& f);

struct LocalityLargeness {
  bool large = false;
  bool self_centralizing = false;  // C_L(Q) inside Q
  std::string witness;             // first failing U, if any
};
LocalityLargeness IsLargeInLocality(const Locality& l, const Subgroup& q);

// Q weakly closed in L: Q^f = Q for each f in L with Q <= S_f.
bool IsWeaklyClosedInLocality(const Locality& l, const Subgroup& q);

std::string FormatFactorization(const Locality& l,
                                const AlperinFactorization& a);

}  // namespace fusionloc

#endif  // FUSIONLOC_LOCALITY_H_
