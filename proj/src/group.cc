#include "fusionloc/group.h"

#include <algorithm>
#include <numeric>
#include <sstream>
#include <unordered_set>

#include "fusionloc/caps.h"
#include "fusionloc/errors.h"

namespace fusionloc {

std::shared_ptr<const Group> Group::Create(const PermGroup& pg) {
  auto g = std::shared_ptr<Group>(new Group());
  g->degree_ = pg.degree();
  g->pg_ = pg;
  g->perms_ = pg.Elements(GlobalCaps().element_cap);
  g->Finish();
  return g;
}

std::shared_ptr<const Group> Group::FromElements(size_t degree,
                                                 std::vector<Perm> elements) {
  auto g = std::shared_ptr<Group>(new Group());
  g->degree_ = degree;
  std::sort(elements.begin(), elements.end());
  elements.erase(std::unique(elements.begin(), elements.end()),
                 elements.end());
  if (elements.empty() || !elements[0].is_identity()) {
    throw InputError("element list does not contain the identity");
  }
  // Greedy generating set, checking closure along the way.
  std::unordered_set<Perm, PermHash> all(elements.begin(), elements.end());
  std::vector<Perm> gens;
  std::unordered_set<Perm, PermHash> span{Perm(degree)};
  for (const Perm& x : elements) {
    if (span.count(x)) continue;
    gens.push_back(x);
    std::vector<Perm> queue(span.begin(), span.end());
    for (size_t k = 0; k < queue.size(); ++k) {
      for (const Perm& s : gens) {
        Perm y = queue[k] * s;
        if (span.insert(y).second) {
          if (!all.count(y)) throw InputError("element list is not closed");
          queue.push_back(std::move(y));
        }
      }
    }
  }
  g->pg_ = PermGroup(degree, gens);
  g->perms_ = std::move(elements);
  g->Finish();
  return g;
}

void Group::Finish() {
  std::sort(perms_.begin(), perms_.end());
  const size_t n = perms_.size();
  index_.reserve(n * 2);
  for (size_t i = 0; i < n; ++i) index_.emplace(perms_[i], static_cast<Elem>(i));
  inv_.resize(n);
  for (size_t i = 0; i < n; ++i) inv_[i] = index(perms_[i].inverse());

  if (n <= GlobalCaps().table_cap) {
    std::vector<Perm> gens;
    for (const Perm& s : pg_.generators()) {
      if (!s.is_identity()) gens.push_back(s);
    }
    const size_t k = gens.size();
    std::vector<Elem> right(n * k);
    for (size_t a = 0; a < n; ++a) {
      for (size_t s = 0; s < k; ++s) right[a * k + s] = index(perms_[a] * gens[s]);
    }
    // Spanning tree of the Cayley graph: b = parent[b] * gens[via[b]].
    std::vector<Elem> order{0}, parent(n, 0);
    std::vector<uint32_t> via(n, 0);
    std::vector<bool> seen(n, false);
    seen[0] = true;
    for (size_t q = 0; q < order.size(); ++q) {
      for (size_t s = 0; s < k; ++s) {
        Elem b = right[order[q] * k + s];
        if (!seen[b]) {
          seen[b] = true;
          parent[b] = order[q];
          via[b] = static_cast<uint32_t>(s);
          order.push_back(b);
        }
      }
    }
    if (order.size() != n) throw InternalError("generators do not span group");
    table_.assign(n * n, 0);
    for (size_t a = 0; a < n; ++a) {
      Elem* row = &table_[a * n];
      row[0] = static_cast<Elem>(a);
      for (size_t q = 1; q < n; ++q) {
        Elem b = order[q];
        row[b] = right[size_t{row[parent[b]]} * k + via[b]];
      }
    }
  }
  order_.resize(n);
  for (size_t i = 0; i < n; ++i) order_[i] = static_cast<uint32_t>(perms_[i].order());
}

Elem Group::SlowMul(Elem a, Elem b) const { return index(perms_[a] * perms_[b]); }

Elem Group::pow(Elem a, long k) const {
  Elem base = k < 0 ? inv_[a] : a;
  unsigned long e = k < 0 ? -static_cast<unsigned long>(k) : k;
  e %= order_[a];
  Elem r = 0;
  while (e) {
    if (e & 1) r = mul(r, base);
    base = mul(base, base);
    e >>= 1;
  }
  return r;
}

std::optional<Elem> Group::find(const Perm& p) const {
  auto it = index_.find(p);
  if (it == index_.end()) return std::nullopt;
  return it->second;
}

Elem Group::index(const Perm& p) const {
  auto it = index_.find(p);
  if (it == index_.end()) {
    throw InputError("permutation " + p.ToCycles() + " is not in the group");
  }
  return it->second;
}

Subgroup Group::whole() const {
  Bitset all(size());
  for (size_t i = 0; i < size(); ++i) all.set(i);
  return FromMembers(*this, std::move(all));
}

Subgroup Group::trivial() const { return Generate(*this, {}); }

Subgroup Subgroup::Unchecked(const Group& g, Bitset members,
                             std::vector<Elem> gens) {
  Subgroup h;
  h.g_ = &g;
  h.order_ = members.count();
  h.members_ = std::move(members);
  h.gens_ = std::move(gens);
  return h;
}

Subgroup Extend(const Subgroup& h, Elem x) {
  if (h.contains(x)) return h;
  const Group& g = h.group();
  Subgroup r;
  r.g_ = &g;
  r.gens_ = h.gens_;
  r.gens_.push_back(x);
  r.members_ = h.members_;
  std::vector<Elem> queue = h.elements();
  for (size_t q = 0; q < queue.size(); ++q) {
    for (Elem s : r.gens_) {
      Elem y = g.mul(queue[q], s);
      if (!r.members_.test(y)) {
        r.members_.set(y);
        queue.push_back(y);
      }
    }
  }
  r.order_ = queue.size();
  return r;
}

Subgroup Generate(const Group& g, std::span<const Elem> gens) {
  Subgroup h;
  h.g_ = &g;
  h.members_ = Bitset(g.size());
  h.members_.set(0);
  h.order_ = 1;
  for (Elem x : gens) h = Extend(h, x);
  return h;
}

Subgroup FromMembers(const Group& g, Bitset members) {
  Subgroup h = Generate(g, {});
  members.for_each([&](Elem x) {
    if (!h.contains(x)) h = Extend(h, x);
  });
  if (!(h.members_ == members)) {
    throw InternalError("element set is not a subgroup");
  }
  return h;
}

Subgroup Join(const Subgroup& a, const Subgroup& b) {
  Subgroup r = a;
  for (Elem x : b.gens()) r = Extend(r, x);
  return r;
}

Subgroup Intersect(const Subgroup& a, const Subgroup& b) {
  return FromMembers(a.group(), a.members() & b.members());
}

Bitset ConjugateMembers(const Subgroup& h, Elem g) {
  const Group& G = h.group();
  Bitset r(G.size());
  h.members().for_each([&](Elem x) { r.set(G.conj(x, g)); });
  return r;
}

Subgroup ConjugateSubgroup(const Subgroup& h, Elem g) {
  std::vector<Elem> gens;
  for (Elem x : h.gens()) gens.push_back(h.group().conj(x, g));
  return Subgroup::Unchecked(h.group(), ConjugateMembers(h, g), std::move(gens));
}

bool IsNormalIn(const Subgroup& h, const Subgroup& g) {
  const Group& G = h.group();
  for (Elem s : g.gens()) {
    for (Elem x : h.gens()) {
      if (!h.contains(G.conj(x, s))) return false;
    }
  }
  return true;
}

Subgroup Normalizer(const Subgroup& g, const Subgroup& h) {
  const Group& G = g.group();
  Bitset r(G.size());
  g.members().for_each([&](Elem s) {
    for (Elem x : h.gens()) {
      if (!h.contains(G.conj(x, s))) return;
    }
    r.set(s);
  });
  return FromMembers(G, std::move(r));
}

Subgroup Centralizer(const Subgroup& g, const Subgroup& h) {
  const Group& G = g.group();
  Bitset r(G.size());
  g.members().for_each([&](Elem s) {
    for (Elem x : h.gens()) {
      if (G.mul(x, s) != G.mul(s, x)) return;
    }
    r.set(s);
  });
  return FromMembers(G, std::move(r));
}

Subgroup CentralizerOfElement(const Subgroup& g, Elem x) {
  return Centralizer(g, Generate(g.group(), {x}));
}

Subgroup NormalClosure(const Subgroup& g, const Subgroup& h) {
  const Group& G = g.group();
  Subgroup n = h;
  bool changed = true;
  while (changed) {
    changed = false;
    for (size_t i = 0; i < n.gens().size(); ++i) {
      for (Elem s : g.gens()) {
        Elem y = G.conj(n.gens()[i], s);
        if (!n.contains(y)) {
          n = Extend(n, y);
          changed = true;
        }
      }
    }
  }
  return n;
}

Subgroup NormalClosureOfElement(const Subgroup& g, Elem x) {
  return NormalClosure(g, Generate(g.group(), {x}));
}

Subgroup CommutatorSubgroup(const Subgroup& a, const Subgroup& b) {
  const Group& G = a.group();
  std::vector<Elem> gens;
  for (Elem x : a.gens()) {
    for (Elem y : b.gens()) gens.push_back(G.comm(x, y));
  }
  return NormalClosure(Join(a, b), Generate(G, gens));
}

Subgroup DerivedSubgroup(const Subgroup& g) { return CommutatorSubgroup(g, g); }

Subgroup Center(const Subgroup& g) { return Centralizer(g, g); }

Subgroup PowerSubgroup(const Subgroup& g, unsigned p) {
  const Group& G = g.group();
  Subgroup r = G.trivial();
  g.members().for_each([&](Elem x) {
    Elem y = G.pow(x, p);
    if (!r.contains(y)) r = Extend(r, y);
  });
  return r;
}

Subgroup Omega1(const Subgroup& g, unsigned p) {
  const Group& G = g.group();
  Subgroup r = G.trivial();
  g.members().for_each([&](Elem x) {
    if (G.order(x) == p && !r.contains(x)) r = Extend(r, x);
  });
  return r;
}

bool IsAbelian(const Subgroup& g) {
  const Group& G = g.group();
  for (Elem x : g.gens()) {
    for (Elem y : g.gens()) {
      if (G.mul(x, y) != G.mul(y, x)) return false;
    }
  }
  return true;
}

bool IsPPower(uint64_t n, unsigned p) {
  while (n % p == 0) n /= p;
  return n == 1;
}

bool IsPGroup(const Subgroup& g, unsigned p) { return IsPPower(g.order(), p); }

bool IsElementaryAbelian(const Subgroup& g, unsigned p) {
  if (!IsAbelian(g)) return false;
  for (Elem x : g.gens()) {
    if (g.group().order(x) != p) return false;
  }
  return true;
}

uint64_t PPart(uint64_t n, unsigned p) {
  uint64_t r = 1;
  while (n % p == 0) {
    n /= p;
    r *= p;
  }
  return r;
}

std::vector<unsigned> PrimeDivisors(uint64_t n) {
  std::vector<unsigned> r;
  for (uint64_t q = 2; q * q <= n; ++q) {
    if (n % q == 0) {
      r.push_back(static_cast<unsigned>(q));
      while (n % q == 0) n /= q;
    }
  }
  if (n > 1) r.push_back(static_cast<unsigned>(n));
  return r;
}

std::vector<std::vector<Elem>> ConjugacyClasses(const Subgroup& g) {
  const Group& G = g.group();
  Bitset done(G.size());
  std::vector<std::vector<Elem>> classes;
  g.members().for_each([&](Elem x) {
    if (done.test(x)) return;
    std::vector<Elem> orbit{x};
    done.set(x);
    for (size_t q = 0; q < orbit.size(); ++q) {
      for (Elem s : g.gens()) {
        Elem y = G.conj(orbit[q], s);
        if (!done.test(y)) {
          done.set(y);
          orbit.push_back(y);
        }
      }
    }
    std::sort(orbit.begin(), orbit.end());
    classes.push_back(std::move(orbit));
  });
  return classes;
}

std::vector<Bitset> SubgroupConjugates(const Subgroup& h, const Subgroup& by) {
  const Group& G = h.group();
  std::vector<Bitset> orbit{h.members()};
  std::unordered_set<Bitset, BitsetHash> seen{h.members()};
  for (size_t q = 0; q < orbit.size(); ++q) {
    for (Elem s : by.gens()) {
      Bitset img(G.size());
      orbit[q].for_each([&](Elem x) { img.set(G.conj(x, s)); });
      if (seen.insert(img).second) orbit.push_back(std::move(img));
    }
  }
  return orbit;
}

std::string Describe(const Subgroup& h) {
  std::ostringstream out;
  out << '<';
  for (size_t i = 0; i < h.gens().size(); ++i) {
    if (i) out << ',';
    out << h.group().name(h.gens()[i]);
  }
  out << "> order " << h.order();
  return out.str();
}

}  // namespace fusionloc
