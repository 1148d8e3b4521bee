#ifndef FUSIONLOC_GROUP_H_
#define FUSIONLOC_GROUP_H_

#include <memory>
#include <optional>
#include <span>
#include <string>
#include <unordered_map>
#include <vector>

#include "fusionloc/bitset.h"
#include "fusionloc/perm.h"
#include "fusionloc/perm_group.h"

namespace fusionloc {

using Elem = uint32_t;
class Subgroup;

// A finite permutation group with every element enumerated. Elements are
// indexed 0..size-1 in lexicographic order of their image lists, so the
// identity is always element 0 and all "first found" searches are canonical.
// Groups up to Caps::table_cap carry a full product table.
//
// Subgroups keep a raw pointer to their group, so a Group must outlive them;
// create groups through Group::Create and hold the shared_ptr.
class Group {
 public:
  static std::shared_ptr<const Group> Create(const PermGroup& pg);
  // `elements` must form a group; throws InputError otherwise.
  static std::shared_ptr<const Group> FromElements(size_t degree,
                                                   std::vector<Perm> elements);

  size_t size() const { return perms_.size(); }
  size_t degree() const { return degree_; }
  const PermGroup& perm_group() const { return pg_; }

  Elem mul(Elem a, Elem b) const {
    return table_.empty() ? SlowMul(a, b) : table_[size_t{a} * size() + b];
  }
  Elem inv(Elem a) const { return inv_[a]; }
  // a^g = g^-1 a g.
  Elem conj(Elem a, Elem g) const { return mul(mul(inv_[g], a), g); }
  // [a, b] = a^-1 b^-1 a b.
  Elem comm(Elem a, Elem b) const {
    return mul(mul(inv_[a], inv_[b]), mul(a, b));
  }
  Elem pow(Elem a, long k) const;
  uint32_t order(Elem a) const { return order_[a]; }

  const Perm& perm(Elem a) const { return perms_[a]; }
  std::optional<Elem> find(const Perm& p) const;
  Elem index(const Perm& p) const;  // throws InputError when absent
  std::string name(Elem a) const { return perms_[a].ToCycles(); }

  Subgroup whole() const;
  Subgroup trivial() const;

 private:
  Group() = default;
  void Finish();
  Elem SlowMul(Elem a, Elem b) const;

  size_t degree_ = 0;
  PermGroup pg_;
  std::vector<Perm> perms_;
  std::unordered_map<Perm, Elem, PermHash> index_;
  std::vector<Elem> table_;
  std::vector<Elem> inv_;
  std::vector<uint32_t> order_;
};

// A subgroup of an enumerated Group: member bitset plus a short generating
// sequence (each generator lies outside the span of the earlier ones).
class Subgroup {
 public:
  Subgroup() = default;

  const Group& group() const { return *g_; }
  const Bitset& members() const { return members_; }
  size_t order() const { return order_; }
  bool contains(Elem x) const { return members_.test(x); }
  const std::vector<Elem>& gens() const { return gens_; }
  std::vector<Elem> elements() const { return members_.to_vector(); }

  bool is_subgroup_of(const Subgroup& o) const {
    return members_.is_subset_of(o.members_);
  }
  bool is_trivial() const { return order_ == 1; }

  // Trusted constructor: `members` must be the subgroup generated by `gens`.
  static Subgroup Unchecked(const Group& g, Bitset members,
                            std::vector<Elem> gens);

  friend bool operator==(const Subgroup& a, const Subgroup& b) {
    return a.members_ == b.members_;
  }
  // Orders by size, then by member set; a canonical total order.
  friend bool operator<(const Subgroup& a, const Subgroup& b) {
    if (a.order_ != b.order_) return a.order_ < b.order_;
    return a.members_ < b.members_;
  }

 private:
  friend Subgroup Generate(const Group&, std::span<const Elem>);
  friend Subgroup FromMembers(const Group&, Bitset);
  friend Subgroup Extend(const Subgroup&, Elem);

  const Group* g_ = nullptr;
  Bitset members_;
  size_t order_ = 0;
  std::vector<Elem> gens_;
};

struct SubgroupHash {
  size_t operator()(const Subgroup& s) const { return s.members().hash(); }
};

Subgroup Generate(const Group& g, std::span<const Elem> gens);
inline Subgroup Generate(const Group& g, std::initializer_list<Elem> gens) {
  return Generate(g, std::span<const Elem>(gens.begin(), gens.size()));
}
// Adds x to H and closes.
Subgroup Extend(const Subgroup& h, Elem x);
// `members` must be closed under multiplication.
Subgroup FromMembers(const Group& g, Bitset members);

Subgroup Join(const Subgroup& a, const Subgroup& b);
Subgroup Intersect(const Subgroup& a, const Subgroup& b);
Subgroup ConjugateSubgroup(const Subgroup& h, Elem g);
// Member set of h^g without building generators.
Bitset ConjugateMembers(const Subgroup& h, Elem g);

bool IsNormalIn(const Subgroup& h, const Subgroup& g);
Subgroup Normalizer(const Subgroup& g, const Subgroup& h);
Subgroup Centralizer(const Subgroup& g, const Subgroup& h);
Subgroup CentralizerOfElement(const Subgroup& g, Elem x);
Subgroup NormalClosure(const Subgroup& g, const Subgroup& h);
Subgroup NormalClosureOfElement(const Subgroup& g, Elem x);
// [A, B]; A and B must lie in a common group.
Subgroup CommutatorSubgroup(const Subgroup& a, const Subgroup& b);
Subgroup DerivedSubgroup(const Subgroup& g);
Subgroup Center(const Subgroup& g);
// <g^p : g in G>.
Subgroup PowerSubgroup(const Subgroup& g, unsigned p);
// Subgroup generated by the elements of order p (and 1) of G.
Subgroup Omega1(const Subgroup& g, unsigned p);

bool IsAbelian(const Subgroup& g);
bool IsPGroup(const Subgroup& g, unsigned p);
bool IsElementaryAbelian(const Subgroup& g, unsigned p);
bool IsPPower(uint64_t n, unsigned p);
uint64_t PPart(uint64_t n, unsigned p);
std::vector<unsigned> PrimeDivisors(uint64_t n);

// Conjugacy classes of elements of G under G, each sorted, classes ordered
// by smallest member.
std::vector<std::vector<Elem>> ConjugacyClasses(const Subgroup& g);
// Orbit of a subgroup under conjugation by `by`, as member sets.
std::vector<Bitset> SubgroupConjugates(const Subgroup& h, const Subgroup& by);

// Readable form: "<(1 2),(1 2 3 4)> order 24".
std::string Describe(const Subgroup& h);

}  // namespace fusionloc

#endif  // FUSIONLOC_GROUP_H_
