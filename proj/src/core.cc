#include "fusionloc/core.h"

#include <algorithm>
#include <functional>
#include <unordered_map>
#include <unordered_set>

#include "fusionloc/caps.h"
#include "fusionloc/errors.h"

namespace fusionloc {

LocalSubgroups LocalSubgroupsOf(const Subgroup& g, const Subgroup& h) {
  if (!h.is_subgroup_of(g)) throw InputError("H is not contained in G");
  return {Normalizer(g, h), Centralizer(g, h)};
}

Subgroup Sylow(const Subgroup& g, unsigned p) {
  const Group& G = g.group();
  const uint64_t target = PPart(g.order(), p);
  Subgroup s = G.trivial();
  while (s.order() < target) {
    Subgroup n = Normalizer(g, s);
    bool grown = false;
    for (Elem x : n.elements()) {
      if (s.contains(x)) continue;
      if (s.contains(G.pow(x, static_cast<long>(PPart(G.order(x), p))))) {
        s = Extend(s, x);
        grown = true;
        break;
      }
    }
    if (!grown) throw InternalError("Sylow ascent stalled");
  }
  return s;
}

namespace {

// Union of the G-classes whose normal closure satisfies `keep`.
Subgroup NormalUnion(const Subgroup& g,
                     const std::function<bool(Elem)>& candidate,
                     const std::function<bool(const Subgroup&)>& keep) {
  const Group& G = g.group();
  Subgroup r = G.trivial();
  for (const auto& cls : ConjugacyClasses(g)) {
    Elem x = cls.front();
    if (x == 0 || r.contains(x) || !candidate(x)) continue;
    Subgroup n = NormalClosureOfElement(g, x);
    if (keep(n)) r = Join(r, n);
  }
  return r;
}

bool IsCoprime(uint64_t n, unsigned p) { return n % p != 0; }

}  // namespace

Subgroup OpOf(const Subgroup& g, unsigned p) {
  const Group& G = g.group();
  return NormalUnion(
      g, [&](Elem x) { return IsPPower(G.order(x), p); },
      [&](const Subgroup& n) { return IsPGroup(n, p); });
}

Subgroup OpPrimeOf(const Subgroup& g, unsigned p) {
  const Group& G = g.group();
  return NormalUnion(
      g, [&](Elem x) { return IsCoprime(G.order(x), p); },
      [&](const Subgroup& n) { return IsCoprime(n.order(), p); });
}

Subgroup UpperPOf(const Subgroup& g, unsigned p) {
  const Group& G = g.group();
  Subgroup r = G.trivial();
  g.members().for_each([&](Elem x) {
    if (IsCoprime(G.order(x), p) && !r.contains(x)) r = Extend(r, x);
  });
  return r;
}

Subgroup FittingSubgroup(const Subgroup& g) {
  Subgroup f = g.group().trivial();
  for (unsigned q : PrimeDivisors(g.order())) f = Join(f, OpOf(g, q));
  return f;
}

namespace {

// Coset representatives of N in G: the smallest element of each coset Nx.
std::vector<Elem> CosetMinima(const Subgroup& g, const Subgroup& n) {
  const Group& G = g.group();
  Bitset seen(G.size());
  std::vector<Elem> reps;
  g.members().for_each([&](Elem x) {
    if (seen.test(x)) return;
    reps.push_back(x);
    n.members().for_each([&](Elem y) { seen.set(G.mul(y, x)); });
  });
  return reps;
}

// True iff no proper subgroup H of G has HN = G.
bool HasNoProperSupplement(const Subgroup& g, const Subgroup& n) {
  const Group& G = g.group();
  if (n.is_trivial()) return true;
  auto spans = [&](const std::vector<Elem>& xs) {
    Subgroup h = n;
    for (Elem x : xs) h = Extend(h, x);
    return h.order() == g.order();
  };
  std::vector<Elem> class_reps;
  for (const auto& cls : ConjugacyClasses(g)) class_reps.push_back(cls.front());
  std::vector<Elem> cosets = CosetMinima(g, n);

  // Smallest tuple generating G modulo N; the first entry can be taken up
  // to conjugacy.
  std::vector<Elem> tuple;
  std::function<bool(size_t)> search = [&](size_t d) -> bool {
    if (tuple.size() == d) return spans(tuple);
    const auto& pool = tuple.empty() ? class_reps : cosets;
    for (Elem x : pool) {
      tuple.push_back(x);
      if (search(d)) return true;
      tuple.pop_back();
    }
    return false;
  };
  size_t d = 0;
  while (!search(d)) {
    ++d;
    if (d > 6) throw ResourceError("generating tuple search exceeded depth 6");
  }
  std::vector<Elem> nelems = n.elements();
  double combos = 1;
  for (size_t i = 0; i < d; ++i) combos *= nelems.size();
  if (combos > static_cast<double>(GlobalCaps().node_cap)) {
    throw ResourceError("Frattini supplement search exceeds node cap");
  }
  // A proper supplement surjects onto G/N, so it contains lifts of the
  // fixed tuple.
  std::vector<size_t> idx(d, 0);
  while (true) {
    std::vector<Elem> lift(d);
    for (size_t i = 0; i < d; ++i) lift[i] = G.mul(tuple[i], nelems[idx[i]]);
    if (Generate(G, lift).order() != g.order()) return false;
    size_t i = 0;
    while (i < d && ++idx[i] == nelems.size()) idx[i++] = 0;
    if (i == d) break;
  }
  return true;
}

}  // namespace

Subgroup Frattini(const Subgroup& g) {
  const Group& G = g.group();
  if (g.is_trivial()) return g;
  auto primes = PrimeDivisors(g.order());
  if (primes.size() == 1) {
    return Join(DerivedSubgroup(g), PowerSubgroup(g, primes[0]));
  }
  Subgroup fit = FittingSubgroup(g);
  Subgroup phi = G.trivial();
  for (const auto& cls : ConjugacyClasses(g)) {
    Elem x = cls.front();
    if (x == 0 || !fit.contains(x) || phi.contains(x)) continue;
    Subgroup n = NormalClosureOfElement(g, x);
    if (HasNoProperSupplement(g, n)) phi = Join(phi, n);
  }
  return phi;
}

CoreBundle CoreBundleOf(const Subgroup& g, unsigned p) {
  CoreBundle b;
  b.o_p = OpOf(g, p);
  b.o_p_prime = OpPrimeOf(g, p);
  b.o_up_p = UpperPOf(g, p);
  b.derived = DerivedSubgroup(g);
  b.center = Center(g);
  b.frattini = Frattini(g);
  b.omega1_center = Omega1(b.center, p);
  return b;
}

bool IsCharacteristicP(const Subgroup& g, unsigned p) {
  Subgroup op = OpOf(g, p);
  return Centralizer(g, op).is_subgroup_of(op);
}

std::optional<Elem> Transporter(const Subgroup& g, const Subgroup& p,
                                const Subgroup& q) {
  if (p.order() != q.order()) return std::nullopt;
  const Group& G = g.group();
  std::optional<Elem> found;
  for (Elem x : g.elements()) {
    bool ok = true;
    for (Elem s : p.gens()) {
      if (!q.contains(G.conj(s, x))) {
        ok = false;
        break;
      }
    }
    if (ok) return x;
  }
  return found;
}

Bitset TransporterSet(const Subgroup& g, const Subgroup& p,
                      const Subgroup& q) {
  const Group& G = g.group();
  Bitset r(G.size());
  if (p.order() > q.order()) return r;
  g.members().for_each([&](Elem x) {
    for (Elem s : p.gens()) {
      if (!q.contains(G.conj(s, x))) return;
    }
    r.set(x);
  });
  return r;
}

std::vector<Subgroup> AllSubgroups(const Subgroup& g) {
  const Group& G = g.group();
  const uint64_t cap = GlobalCaps().lattice_cap;
  std::vector<Subgroup> subs{G.trivial()};
  std::unordered_set<Bitset, BitsetHash> seen{subs[0].members()};
  std::vector<Elem> cyclic_gens;
  g.members().for_each([&](Elem x) {
    if (x == 0) return;
    Subgroup c = Generate(G, {x});
    if (seen.insert(c.members()).second) {
      cyclic_gens.push_back(x);
      subs.push_back(std::move(c));
    }
  });
  for (size_t i = 0; i < subs.size(); ++i) {
    for (Elem x : cyclic_gens) {
      if (subs[i].contains(x)) continue;
      Subgroup j = Extend(subs[i], x);
      if (seen.insert(j.members()).second) {
        subs.push_back(std::move(j));
        if (subs.size() > cap) {
          throw ResourceError("subgroup lattice exceeds cap of " +
                              std::to_string(cap) + " subgroups");
        }
      }
    }
  }
  std::sort(subs.begin(), subs.end());
  return subs;
}

std::vector<std::vector<size_t>> ConjugacyClassesOfSubgroups(
    const std::vector<Subgroup>& subs, const Subgroup& by) {
  std::unordered_map<Bitset, size_t, BitsetHash> where;
  for (size_t i = 0; i < subs.size(); ++i) where.emplace(subs[i].members(), i);
  std::vector<bool> done(subs.size(), false);
  std::vector<std::vector<size_t>> classes;
  for (size_t i = 0; i < subs.size(); ++i) {
    if (done[i]) continue;
    std::vector<size_t> cls;
    for (const Bitset& b : SubgroupConjugates(subs[i], by)) {
      auto it = where.find(b);
      if (it == where.end()) {
        throw PreconditionError("subgroup list is not closed under conjugation");
      }
      done[it->second] = true;
      cls.push_back(it->second);
    }
    std::sort(cls.begin(), cls.end());
    classes.push_back(std::move(cls));
  }
  return classes;
}

Subgroup Image::ImageOf(const Subgroup& h) const {
  std::vector<Elem> gens;
  for (Elem x : h.gens()) gens.push_back(map[x]);
  return Generate(*group, gens);
}

namespace {

Image BuildImage(const Subgroup& src, size_t degree,
                 const std::function<Perm(Elem)>& act) {
  const Group& G = src.group();
  std::vector<Perm> gens;
  for (Elem s : src.gens()) gens.push_back(act(s));
  Image img;
  img.group = Group::Create(PermGroup(degree, gens));
  img.map.assign(G.size(), 0);
  img.source = src;
  src.members().for_each([&](Elem x) { img.map[x] = img.group->index(act(x)); });
  return img;
}

}  // namespace

Image Quotient(const Subgroup& g, const Subgroup& n) {
  const Group& G = g.group();
  if (!n.is_subgroup_of(g) || !IsNormalIn(n, g)) {
    throw PreconditionError("quotient by a subgroup that is not normal");
  }
  std::vector<Elem> reps = CosetMinima(g, n);
  std::vector<uint32_t> coset_of(G.size(), 0);
  for (size_t c = 0; c < reps.size(); ++c) {
    n.members().for_each([&](Elem y) {
      coset_of[G.mul(y, reps[c])] = static_cast<uint32_t>(c);
    });
  }
  return BuildImage(g, reps.size(), [&](Elem x) {
    std::vector<Point> img(reps.size());
    for (size_t c = 0; c < reps.size(); ++c) img[c] = coset_of[G.mul(reps[c], x)];
    return Perm(std::move(img));
  });
}

Image ConjugationAction(const Subgroup& a, const Subgroup& p) {
  const Group& G = a.group();
  std::vector<Elem> pts = p.elements();
  std::unordered_map<Elem, Point> pos;
  for (size_t i = 0; i < pts.size(); ++i) pos.emplace(pts[i], static_cast<Point>(i));
  return BuildImage(a, pts.size(), [&](Elem x) {
    std::vector<Point> img(pts.size());
    for (size_t i = 0; i < pts.size(); ++i) {
      auto it = pos.find(G.conj(pts[i], x));
      if (it == pos.end()) throw PreconditionError("acting group does not normalize P");
      img[i] = it->second;
    }
    return Perm(std::move(img));
  });
}

Image AsGroup(const Subgroup& h) {
  const Group& G = h.group();
  std::vector<Perm> elems;
  for (Elem x : h.elements()) elems.push_back(G.perm(x));
  Image img;
  img.group = Group::FromElements(G.degree(), std::move(elems));
  img.map.assign(G.size(), 0);
  img.source = h;
  h.members().for_each([&](Elem x) { img.map[x] = img.group->index(G.perm(x)); });
  return img;
}

bool IsPReducedFor(const Subgroup& g, const Subgroup& y, unsigned p) {
  Image img = ConjugationAction(g, y);
  return OpOf(img.group->whole(), p).is_trivial();
}

Subgroup YSubgroup(const Subgroup& g, unsigned p) {
  Subgroup r = OpOf(g, p);
  Subgroup omega = Omega1(Center(r), p);
  Subgroup y = g.group().trivial();
  for (const Subgroup& cand : AllSubgroups(omega)) {
    if (cand.is_trivial() || cand.is_subgroup_of(y)) continue;
    if (!IsNormalIn(cand, g)) continue;
    if (IsPReducedFor(g, cand, p)) y = Join(y, cand);
  }
  if (!IsPReducedFor(g, y, p)) {
    throw InternalError("join of p-reduced submodules is not p-reduced");
  }
  return y;
}

}  // namespace fusionloc
