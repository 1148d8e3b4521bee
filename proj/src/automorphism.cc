#include "fusionloc/automorphism.h"

#include <algorithm>
#include <map>
#include <tuple>

#include "fusionloc/caps.h"
#include "fusionloc/core.h"
#include "fusionloc/errors.h"

namespace fusionloc {

namespace {

using Signature = std::tuple<uint32_t, size_t, size_t>;

// Per-element invariants preserved by isomorphisms.
std::vector<Signature> Signatures(const Subgroup& h) {
  const Group& G = h.group();
  std::vector<Signature> sig(G.size());
  std::vector<size_t> class_size(G.size(), 0), roots(G.size(), 0);
  for (const auto& cls : ConjugacyClasses(h)) {
    for (Elem x : cls) class_size[x] = cls.size();
  }
  h.members().for_each([&](Elem x) { ++roots[G.mul(x, x)]; });
  h.members().for_each([&](Elem x) {
    sig[x] = {G.order(x), class_size[x], roots[x]};
  });
  return sig;
}

constexpr Elem kUnset = ~Elem{0};

class HomSearch {
 public:
  HomSearch(const Subgroup& a, const Subgroup& b, bool all)
      : a_(a), b_(b), ga_(a.group()), gb_(b.group()), all_(all) {
    sig_a_ = Signatures(a);
    sig_b_ = Signatures(b);
    ChooseGenerators();
    for (Elem x : gens_) {
      std::vector<Elem> c;
      b.members().for_each([&](Elem y) {
        if (sig_b_[y] == sig_a_[x]) c.push_back(y);
      });
      candidates_.push_back(std::move(c));
    }
    phi_.assign(ga_.size(), kUnset);
    used_ = Bitset(gb_.size());
    phi_[0] = 0;
    used_.set(0);
    mapped_.push_back(0);
  }

  void Run() { Search(0); }

  const std::vector<Elem>& gens() const { return gens_; }
  const std::vector<std::vector<Elem>>& results() const { return results_; }

 private:
  void ChooseGenerators() {
    Subgroup span = ga_.trivial();
    while (span.order() < a_.order()) {
      Elem best = kUnset;
      size_t best_span = 0;
      size_t best_cands = SIZE_MAX;
      a_.members().for_each([&](Elem x) {
        if (span.contains(x)) return;
        size_t s = Extend(span, x).order();
        size_t c = 0;
        b_.members().for_each([&](Elem y) { c += sig_b_[y] == sig_a_[x]; });
        if (s > best_span || (s == best_span && c < best_cands)) {
          best = x;
          best_span = s;
          best_cands = c;
        }
      });
      gens_.push_back(best);
      span = Extend(span, best);
    }
  }

  // Assigns gens_[i] -> y and closes the map over <gens_[0..i]>.
  bool Assign(size_t i, Elem y, size_t& mark) {
    mark = mapped_.size();
    if (phi_[gens_[i]] != kUnset) return phi_[gens_[i]] == y;
    if (used_.test(y)) return false;
    phi_[gens_[i]] = y;
    used_.set(y);
    mapped_.push_back(gens_[i]);
    for (size_t q = 0; q < mapped_.size(); ++q) {
      Elem e = mapped_[q];
      for (size_t j = 0; j <= i; ++j) {
        Elem z = ga_.mul(e, gens_[j]);
        Elem img = gb_.mul(phi_[e], phi_[gens_[j]]);
        if (phi_[z] == kUnset) {
          if (used_.test(img)) return false;
          phi_[z] = img;
          used_.set(img);
          mapped_.push_back(z);
        } else if (phi_[z] != img) {
          return false;
        }
      }
    }
    return true;
  }

  void Undo(size_t mark) {
    while (mapped_.size() > mark) {
      Elem e = mapped_.back();
      used_.reset(phi_[e]);
      phi_[e] = kUnset;
      mapped_.pop_back();
    }
  }

  bool Search(size_t i) {
    if (++nodes_ > GlobalCaps().node_cap) {
      throw ResourceError("homomorphism search exceeded node cap");
    }
    if (i == gens_.size()) {
      if (mapped_.size() != a_.order()) return false;
      results_.push_back(phi_);
      return !all_;
    }
    for (Elem y : candidates_[i]) {
      size_t mark;
      bool ok = Assign(i, y, mark);
      if (ok && Search(i + 1)) return true;
      Undo(mark);
    }
    return false;
  }

  const Subgroup& a_;
  const Subgroup& b_;
  const Group& ga_;
  const Group& gb_;
  bool all_;
  std::vector<Signature> sig_a_, sig_b_;
  std::vector<Elem> gens_;
  std::vector<std::vector<Elem>> candidates_;
  std::vector<Elem> phi_;
  Bitset used_;
  std::vector<Elem> mapped_;
  std::vector<std::vector<Elem>> results_;
  uint64_t nodes_ = 0;
};

void CheckCap(const Subgroup& h) {
  if (h.order() > GlobalCaps().aut_cap) {
    throw ResourceError("group order " + std::to_string(h.order()) +
                        " exceeds automorphism cap " +
                        std::to_string(GlobalCaps().aut_cap));
  }
}

// Cheap isomorphism invariants: order, signature multiset, center and
// derived series orders.
bool InvariantsMatch(const Subgroup& a, const Subgroup& b) {
  if (a.order() != b.order()) return false;
  auto sa = Signatures(a), sb = Signatures(b);
  std::vector<Signature> la, lb;
  a.members().for_each([&](Elem x) { la.push_back(sa[x]); });
  b.members().for_each([&](Elem x) { lb.push_back(sb[x]); });
  std::sort(la.begin(), la.end());
  std::sort(lb.begin(), lb.end());
  if (la != lb) return false;
  if (Center(a).order() != Center(b).order()) return false;
  Subgroup da = a, db = b;
  while (true) {
    Subgroup na = DerivedSubgroup(da), nb = DerivedSubgroup(db);
    if (na.order() != nb.order()) return false;
    if (na.order() == da.order()) break;
    da = na;
    db = nb;
  }
  return true;
}

}  // namespace

size_t Automorphisms::position(Elem x) const {
  auto it = std::lower_bound(points.begin(), points.end(), x);
  if (it == points.end() || *it != x) throw InputError("element not in group");
  return static_cast<size_t>(it - points.begin());
}

Automorphisms AutomorphismsOf(const Subgroup& h) {
  CheckCap(h);
  HomSearch search(h, h, /*all=*/true);
  search.Run();
  Automorphisms aut;
  aut.source = h;
  aut.points = h.elements();
  std::vector<Perm> gens;
  PermGroup pg(aut.points.size(), {});
  for (const auto& phi : search.results()) {
    std::vector<Elem> img(aut.points.size());
    std::vector<Point> perm(aut.points.size());
    for (size_t i = 0; i < aut.points.size(); ++i) {
      img[i] = phi[aut.points[i]];
      perm[i] = static_cast<Point>(aut.position(img[i]));
    }
    aut.maps.push_back(std::move(img));
    Perm p(std::move(perm));
    if (!pg.contains(p)) {
      gens.push_back(p);
      pg = PermGroup(aut.points.size(), gens);
    }
  }
  if (pg.order() != aut.maps.size()) {
    throw InternalError("automorphism enumeration is not a group");
  }
  aut.group = std::move(pg);
  return aut;
}

std::optional<GeneratorMap> FindIsomorphism(const Subgroup& a,
                                            const Subgroup& b) {
  CheckCap(a);
  CheckCap(b);
  if (!InvariantsMatch(a, b)) return std::nullopt;
  HomSearch search(a, b, /*all=*/false);
  search.Run();
  if (search.results().empty()) return std::nullopt;
  GeneratorMap m;
  for (Elem x : search.gens()) m.emplace_back(x, search.results()[0][x]);
  return m;
}

std::vector<Elem> ExtendGeneratorMap(const Subgroup& a, const Subgroup& b,
                                     const GeneratorMap& m) {
  const Group& ga = a.group();
  const Group& gb = b.group();
  std::vector<Elem> phi(ga.size(), kUnset);
  phi[0] = 0;
  std::vector<Elem> queue{0};
  for (size_t q = 0; q < queue.size(); ++q) {
    for (const auto& [x, y] : m) {
      Elem z = ga.mul(queue[q], x);
      Elem img = gb.mul(phi[queue[q]], y);
      if (phi[z] == kUnset) {
        phi[z] = img;
        queue.push_back(z);
      } else if (phi[z] != img) {
        throw InputError("generator map does not define a homomorphism");
      }
    }
  }
  return phi;
}

bool IsCharacteristicSubgroup(const Automorphisms& aut, const Subgroup& q) {
  std::vector<size_t> pos;
  for (Elem x : q.gens()) pos.push_back(aut.position(x));
  for (const auto& m : aut.maps) {
    for (size_t i : pos) {
      if (!q.contains(m[i])) return false;
    }
  }
  return true;
}

bool IsCharacteristicSubgroup(const Subgroup& g, const Subgroup& q) {
  if (!q.is_subgroup_of(g)) throw InputError("Q is not contained in G");
  return IsCharacteristicSubgroup(AutomorphismsOf(g), q);
}

std::vector<Subgroup> CharacteristicSubgroups(const Subgroup& q) {
  Automorphisms aut = AutomorphismsOf(q);
  std::vector<Subgroup> r;
  for (const Subgroup& s : AllSubgroups(q)) {
    if (IsNormalIn(s, q) && IsCharacteristicSubgroup(aut, s)) r.push_back(s);
  }
  return r;
}

std::vector<Elem> ExtendAutomorphismSemidirect(const Subgroup& g, Elem x,
                                               const Subgroup& h, Elem z) {
  const Group& G = g.group();
  if (!h.is_subgroup_of(g) || !IsNormalIn(h, g)) {
    throw PreconditionError("H is not a normal subgroup of G");
  }
  if (!g.contains(x)) throw PreconditionError("x is not in G");
  Subgroup xs = Generate(G, {x});
  if (Intersect(xs, h).order() != 1 || xs.order() * h.order() != g.order()) {
    throw PreconditionError("G is not <x> semidirect H");
  }
  if (!Center(h).contains(z)) throw PreconditionError("z is not in Z(H)");
  Elem xz = G.mul(x, z);
  if (G.order(x) != G.order(xz)) throw PreconditionError("o(x) != o(xz)");
  std::vector<Elem> beta(G.size(), kUnset);
  Elem xi = 0, xzi = 0;
  for (uint32_t i = 0; i < G.order(x); ++i) {
    h.members().for_each([&](Elem y) { beta[G.mul(xi, y)] = G.mul(xzi, y); });
    xi = G.mul(xi, x);
    xzi = G.mul(xzi, xz);
  }
  // Homomorphism check on generator products.
  g.members().for_each([&](Elem a) {
    for (Elem s : g.gens()) {
      if (beta[G.mul(a, s)] != G.mul(beta[a], beta[s])) {
        throw InternalError("semidirect extension is not a homomorphism");
      }
    }
  });
  return beta;
}

}  // namespace fusionloc
