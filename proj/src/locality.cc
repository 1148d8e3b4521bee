#include "fusionloc/locality.h"

#include <algorithm>
#include <chrono>
#include <deque>
#include <random>
#include <set>
#include <sstream>
#include <unordered_set>

#include "fusionloc/caps.h"
#include "fusionloc/core.h"
#include "fusionloc/errors.h"

namespace fusionloc {

namespace {

std::string WordName(const Group& g, std::span<const Elem> w) {
  std::string s = "(";
  for (size_t i = 0; i < w.size(); ++i) {
    if (i) s += ", ";
    s += g.name(w[i]);
  }
  return s + ")";
}

bool NormalizesSubgroup(const Group& g, const Subgroup& p, Elem f) {
  for (Elem x : p.gens()) {
    if (!p.contains(g.conj(x, f))) return false;
  }
  return true;
}

bool SylowNormalizer(const Subgroup& s, const Subgroup& g, const Subgroup& r,
                     unsigned p) {
  return Normalizer(s, r).order() == PPart(Normalizer(g, r).order(), p);
}

double MillisSince(std::chrono::steady_clock::time_point t0) {
  return std::chrono::duration<double, std::milli>(
             std::chrono::steady_clock::now() - t0)
      .count();
}

}  // namespace

// ---- object sets ----

ObjectPreset ParseObjectPreset(const std::string& name) {
  if (name == "centric") return ObjectPreset::kCentric;
  if (name == "cp") return ObjectPreset::kCharP;
  if (name == "cstar") return ObjectPreset::kCStar;
  if (name == "subcentric") return ObjectPreset::kSubcentric;
  throw InputError("unknown object preset '" + name +
                   "' (expected cp, cstar, centric, subcentric or seed=...)");
}

const char* PresetName(ObjectPreset p) {
  switch (p) {
    case ObjectPreset::kCentric:
      return "centric";
    case ObjectPreset::kCharP:
      return "cp";
    case ObjectPreset::kCStar:
      return "cstar";
    case ObjectPreset::kSubcentric:
      return "subcentric";
  }
  return "?";
}

ObjectSet::ObjectSet(const FusionSystem& f, Bitset members)
    : f_(&f), members_(std::move(members)) {
  if (members_.size() != f.subgroups().size()) {
    throw InputError("object set size does not match the subgroups of S");
  }
}

bool ObjectSet::contains(const Subgroup& p) const {
  auto i = f_->FindIndex(p.members());
  return i && members_.test(*i);
}

std::vector<Subgroup> ObjectSet::Subgroups() const {
  std::vector<Subgroup> r;
  members_.for_each([&](uint32_t i) { r.push_back(f_->subgroups()[i]); });
  return r;
}

std::vector<Subgroup> ObjectSet::Representatives() const {
  std::vector<Subgroup> r;
  const auto& classes = f_->classes();
  for (size_t c = 0; c < classes.size(); ++c) {
    bool meets = false;
    for (size_t m : classes[c]) meets |= members_.test(m);
    if (meets) r.push_back(f_->subgroups()[f_->FullyNormalizedRep(c)]);
  }
  return r;
}

std::optional<std::string> ObjectSet::ClosureViolation() const {
  const auto& subs = f_->subgroups();
  if (!members_.test(f_->IndexOf(f_->sylow()))) return "S is not an object";
  std::optional<std::string> bad;
  members_.for_each([&](uint32_t i) {
    if (bad) return;
    for (size_t m : f_->classes()[f_->ClassOf(i)]) {
      if (!members_.test(m)) {
        bad = "conjugate " + Describe(subs[m]) + " of " + Describe(subs[i]) +
              " missing";
        return;
      }
    }
    for (size_t j = 0; j < subs.size(); ++j) {
      if (!members_.test(j) && subs[i].is_subgroup_of(subs[j])) {
        bad = "overgroup " + Describe(subs[j]) + " of " + Describe(subs[i]) +
              " missing";
        return;
      }
    }
  });
  return bad;
}

ObjectSet BuildObjectSet(const FusionSystem& f, ObjectPreset preset) {
  const auto& subs = f.subgroups();
  Bitset in(subs.size());
  if (preset == ObjectPreset::kSubcentric) {
    in = SubcentricSet(f);
  } else {
    for (size_t i = 0; i < subs.size(); ++i) {
      bool ok = false;
      switch (preset) {
        case ObjectPreset::kCentric:
          ok = IsCentric(f, subs[i]);
          break;
        case ObjectPreset::kCharP:
          ok = IsCharacteristicP(Normalizer(f.group(), subs[i]), f.p());
          break;
        case ObjectPreset::kCStar: {
          Subgroup n = Normalizer(f.group(), subs[i]);
          Subgroup o = OpPrimeOf(n, f.p());
          if (o.is_trivial()) {
            ok = IsCharacteristicP(n, f.p());
          } else {
            Image q = Quotient(n, o);
            ok = IsCharacteristicP(q.group->whole(), f.p());
          }
          break;
        }
        case ObjectPreset::kSubcentric:
          break;
      }
      if (ok) in.set(i);
    }
  }
  if (in.none()) {
    throw InputError(std::string("object preset ") + PresetName(preset) +
                     " is empty here");
  }
  ObjectSet d(f, std::move(in));
  if (auto bad = d.ClosureViolation()) {
    throw InternalError(std::string("preset ") + PresetName(preset) +
                        " not closed: " + *bad);
  }
  return d;
}

ObjectSet ObjectSetFromSeeds(const FusionSystem& f,
                             const std::vector<Subgroup>& seeds) {
  const auto& subs = f.subgroups();
  Bitset in(subs.size());
  for (const Subgroup& s : seeds) {
    auto i = f.FindIndex(s.members());
    if (!i) throw InputError("seed " + Describe(s) + " is not contained in S");
    for (size_t m : f.classes()[f.ClassOf(*i)]) in.set(m);
  }
  in.set(f.IndexOf(f.sylow()));
  // Overgroups of a conjugation-closed family stay conjugation-closed.
  Bitset closed = in;
  in.for_each([&](uint32_t i) {
    for (size_t j = 0; j < subs.size(); ++j) {
      if (subs[i].is_subgroup_of(subs[j])) closed.set(j);
    }
  });
  ObjectSet d(f, std::move(closed));
  if (auto bad = d.ClosureViolation()) throw InternalError("seed closure: " + *bad);
  return d;
}

// ---- the locality ----

Locality::Locality(const ObjectSet& delta, bool require_closed)
    : delta_(delta) {
  if (auto bad = delta_.ClosureViolation(); bad && require_closed) {
    throw InputError("object set is not closed: " + *bad);
  }
  const Subgroup& g = group();
  if (g.order() > GlobalCaps().element_cap) {
    throw ResourceError("locality element scan: |G| = " +
                        std::to_string(g.order()) + " exceeds element cap " +
                        std::to_string(GlobalCaps().element_cap));
  }
  s_elems_ = sylow().elements();
  elements_ = Bitset(universe().size());
  // g is in L iff S_g is an object: any P with P^g <= S lies in S_g.
  g.members().for_each([&](Elem x) {
    Bitset sg(universe().size());
    for (Elem s : s_elems_) {
      if (sylow().contains(universe().conj(s, x))) sg.set(s);
    }
    auto i = fusion().FindIndex(sg);
    if (i && delta_.contains_index(*i)) elements_.set(x);
  });
}

Subgroup Locality::SOf(Elem g) const {
  const Elem w[1] = {g};
  return XOf(w);
}

Subgroup Locality::XOf(std::span<const Elem> w) const {
  const Group& u = universe();
  Bitset x(u.size());
  for (Elem s : s_elems_) {
    Elem y = s;
    bool ok = true;
    for (Elem f : w) {
      y = u.conj(y, f);
      if (!sylow().contains(y)) {
        ok = false;
        break;
      }
    }
    if (ok) x.set(s);
  }
  auto i = fusion().FindIndex(x);
  if (!i) throw InternalError("X_w is not a subgroup of S");
  return fusion().subgroups()[*i];
}

bool Locality::InDomain(std::span<const Elem> w) const {
  return delta_.contains(XOf(w));
}

std::optional<DomainWitness> Locality::DomainCheck(
    std::span<const Elem> w) const {
  Subgroup x = XOf(w);
  if (!delta_.contains(x)) return std::nullopt;
  DomainWitness d{x, {x}};
  for (Elem f : w) d.chain.push_back(ConjugateSubgroup(d.chain.back(), f));
  return d;
}

Elem Locality::Product(std::span<const Elem> w) const {
  if (!InDomain(w)) {
    throw UndefinedProductError("word " + WordName(universe(), w) +
                                " is not in the domain");
  }
  Elem r = 0;
  for (Elem f : w) r = universe().mul(r, f);
  return r;
}

Bitset Locality::NormalizerIn(const Subgroup& x) const {
  const Group& u = universe();
  Bitset r(u.size());
  const std::vector<Elem> xs = x.elements();
  elements_.for_each([&](Elem f) {
    if (!NormalizesSubgroup(u, x, f)) return;
    const Elem fi = u.inv(f);
    for (Elem a : xs) {
      const Elem w[3] = {fi, a, f};
      if (!InDomain(w)) return;
    }
    r.set(f);
  });
  return r;
}

Bitset Locality::CentralizerIn(const Subgroup& x) const {
  const Group& u = universe();
  Bitset r(u.size());
  const std::vector<Elem> xs = x.elements();
  elements_.for_each([&](Elem f) {
    const Elem fi = u.inv(f);
    for (Elem a : xs) {
      if (u.conj(a, f) != a) return;
      const Elem w[3] = {fi, a, f};
      if (!InDomain(w)) return;
    }
    r.set(f);
  });
  return r;
}

bool Locality::IsSubgroupOfL(const Subgroup& h) const {
  if (!h.members().is_subset_of(elements_)) return false;
  const Group& u = universe();
  Bitset ph(u.size());
  for (Elem s : s_elems_) {
    bool ok = true;
    h.members().for_each([&](Elem x) {
      if (ok && !sylow().contains(u.conj(s, x))) ok = false;
    });
    if (ok) ph.set(s);
  }
  auto i = fusion().FindIndex(ph);
  return i && delta_.contains_index(*i);
}

Subgroup Locality::OpOfLocality() const {
  const auto& subs = fusion().subgroups();
  const Group& u = universe();
  for (size_t k = subs.size(); k-- > 0;) {
    const Subgroup& p = subs[k];
    if (!IsNormalIn(p, sylow())) continue;
    bool all = true;
    elements_.for_each([&](Elem f) {
      if (all && !NormalizesSubgroup(u, p, f)) all = false;
    });
    if (!all) continue;
    // Normalized by every element; also require P inside every D(f).
    if (NormalizerIn(p) == elements_) return p;
  }
  return u.trivial();
}

Bitset Locality::UpperPOfLocality() const {
  const Group& u = universe();
  Bitset k(u.size());
  std::vector<Elem> queue;
  auto add = [&](Elem x) {
    if (!k.test(x)) {
      k.set(x);
      queue.push_back(x);
    }
  };
  for (const Subgroup& p : delta_.Subgroups()) {
    UpperPOf(Normalizer(group(), p), this->p()).members().for_each(add);
  }
  const std::vector<Elem> l = ElementList();
  // Conjugation first, then products, to a fixpoint.
  for (size_t q = 0; q < queue.size(); ++q) {
    const Elem x = queue[q];
    add(u.inv(x));
    for (Elem f : l) {
      const Elem w[3] = {u.inv(f), x, f};
      if (InDomain(w)) add(u.conj(x, f));
    }
    for (size_t j = 0; j <= q; ++j) {
      const Elem y = queue[j];
      const Elem xy[2] = {x, y}, yx[2] = {y, x};
      if (InDomain(xy)) add(u.mul(x, y));
      if (InDomain(yx)) add(u.mul(y, x));
    }
  }
  if (!k.is_subset_of(elements_)) throw InternalError("O^p(L) escaped L");
  // K S = L.
  for (Elem g : l) {
    bool found = false;
    for (Elem s : s_elems_) {
      const Elem kk = u.mul(g, u.inv(s));
      const Elem w[2] = {kk, s};
      if (k.test(kk) && InDomain(w)) {
        found = true;
        break;
      }
    }
    if (!found) {
      throw InternalError("O^p(L) S misses " + u.name(g));
    }
  }
  return k;
}

// ---- Alperin factorization ----

AlperinFactorization Locality::Factorize(Elem g) const {
  if (!contains(g)) throw PreconditionError(universe().name(g) + " is not in L");
  AlperinFactorization a = FactorizeRec(g, 0);
  a.original = g;
  if (a.factors.size() > 1) {
    std::vector<AlperinFactor> kept;
    for (const AlperinFactor& f : a.factors) {
      if (f.g != 0) kept.push_back(f);
    }
    if (kept.empty()) kept.push_back(a.factors.front());
    a.factors = std::move(kept);
  }
  if (auto bad = CheckFactorization(a)) {
    throw InternalError("factorization of " + universe().name(g) + ": " + *bad);
  }
  return a;
}

AlperinFactorization Locality::FactorizeRec(Elem f, int depth) const {
  if (depth > 64) throw InternalError("factorization recursion too deep");
  const Group& u = universe();
  const Subgroup& s = sylow();
  Subgroup p = SOf(f);
  AlperinFactorization out;
  if (p == s) {
    out.factors.push_back({f, s});
    return out;
  }
  if (NormalizesSubgroup(u, p, f) && SylowNormalizer(s, group(), p, this->p())) {
    out.factors.push_back({f, p});
    return out;
  }
  // g with N_S(P^f) <= S_g and N_S(P^{fg}) Sylow in N_L(P^{fg}).
  const Subgroup pf = ConjugateSubgroup(p, f);
  const Subgroup npf = Normalizer(s, pf);
  std::optional<Elem> gsel;
  Subgroup r;
  elements_.for_each([&](Elem g) {
    if (gsel) return;
    for (Elem x : npf.gens()) {
      if (!s.contains(u.conj(x, g))) return;
    }
    Subgroup cand = ConjugateSubgroup(pf, g);
    if (!SylowNormalizer(s, group(), cand, this->p())) return;
    gsel = g;
    r = cand;
  });
  if (!gsel) throw InternalError("no fully normalizing conjugator for " + Describe(p));
  const Elem g = *gsel;
  // h in N_L(R) with N_S(P)^{fgh} <= N_S(R).
  const Subgroup nsp = Normalizer(s, p);
  const Subgroup nr = Normalizer(group(), r);
  const Subgroup nsr = Normalizer(s, r);
  const Elem fg = u.mul(f, g);
  std::optional<Elem> hsel;
  nr.members().for_each([&](Elem h) {
    if (hsel) return;
    const Elem fgh = u.mul(fg, h);
    for (Elem x : nsp.gens()) {
      if (!nsr.contains(u.conj(x, fgh))) return;
    }
    hsel = h;
  });
  if (!hsel) throw InternalError("no Sylow correction inside N_L(" + Describe(r) + ")");
  const Elem h = *hsel;
  // f = (fgh) h^-1 g^-1; both outer pieces have larger S_x.
  AlperinFactorization a = FactorizeRec(u.mul(fg, h), depth + 1);
  out.factors = std::move(a.factors);
  out.factors.push_back({u.inv(h), r});
  AlperinFactorization c = FactorizeRec(u.inv(g), depth + 1);
  for (auto& x : c.factors) out.factors.push_back(std::move(x));
  return out;
}

std::optional<std::string> Locality::CheckFactorization(
    const AlperinFactorization& a) const {
  const Group& u = universe();
  if (a.factors.empty()) return "no factors";
  std::vector<Elem> word;
  for (const AlperinFactor& f : a.factors) {
    if (!delta_.contains(f.r)) return Describe(f.r) + " is not an object";
    if (!contains(f.g) || !NormalizesSubgroup(u, f.r, f.g)) {
      return u.name(f.g) + " does not normalize " + Describe(f.r);
    }
    if (!SylowNormalizer(sylow(), group(), f.r, p())) {
      return "N_S(" + Describe(f.r) + ") is not Sylow in its normalizer";
    }
    word.push_back(f.g);
  }
  if (!InDomain(word)) return "factor word not in D";
  if (Product(word) != a.original) return "product differs from the original";
  const Subgroup sg = SOf(a.original);
  if (!sg.is_subgroup_of(XOf(word))) return "S_g not inside S_w";
  Subgroup cur = sg;
  for (size_t i = 0; i < a.factors.size(); ++i) {
    if (!cur.is_subgroup_of(a.factors[i].r)) {
      return "S_g image not inside R_" + std::to_string(i + 1);
    }
    cur = ConjugateSubgroup(cur, a.factors[i].g);
  }
  return std::nullopt;
}

std::string FormatFactorization(const Locality& l,
                                const AlperinFactorization& a) {
  const Group& u = l.universe();
  std::ostringstream out;
  out << u.name(a.original) << " = ";
  for (size_t i = 0; i < a.factors.size(); ++i) {
    if (i) out << " * ";
    out << u.name(a.factors[i].g) << " [R" << i + 1 << " = "
        << Describe(a.factors[i].r) << "]";
  }
  return out.str();
}

// ---- generation of morphisms by elements ----

bool GeneratedByElements(const Subgroup& g, const Subgroup& t,
                         const Bitset& gens, const Subgroup& a, Elem target) {
  const Group& u = g.group();
  const std::vector<Elem> cent = Centralizer(g, a).elements();
  const std::vector<Elem> as = a.elements();
  // c_x and c_y agree on A iff x y^-1 centralizes A.
  auto canon = [&](Elem x) {
    Elem m = x;
    for (Elem c : cent) m = std::min(m, u.mul(c, x));
    return m;
  };
  const Elem goal = canon(target);
  std::unordered_set<Elem> seen{canon(0)};
  std::deque<Elem> queue{0};
  const std::vector<Elem> hs = gens.to_vector();
  uint64_t nodes = 0;
  while (!queue.empty()) {
    const Elem cur = queue.front();
    queue.pop_front();
    if (canon(cur) == goal) return true;
    for (Elem h : hs) {
      if (++nodes > GlobalCaps().node_cap) {
        throw ResourceError("morphism generation search exceeded node cap");
      }
      const Elem nxt = u.mul(cur, h);
      bool inside = true;
      for (Elem x : as) {
        if (!t.contains(u.conj(x, nxt))) {
          inside = false;
          break;
        }
      }
      if (!inside) continue;
      const Elem c = canon(nxt);
      if (seen.insert(c).second) queue.push_back(c);
    }
  }
  return false;
}

// ---- verification ----

namespace {

class WordSource {
 public:
  WordSource(const Locality& l, const VerifyOptions& opt)
      : l_(l), opt_(opt), elems_(l.ElementList()), rng_(opt.seed) {
    for (const Subgroup& p : l.objects().Subgroups()) {
      normalizers_.push_back(Normalizer(l.group(), p).elements());
    }
  }

  // Calls fn on every word of length n, or on a seeded sample when there
  // are too many. Half of the sampled words are drawn through a single
  // object normalizer so that D is well represented.
  template <typename F>
  bool ForEach(int n, F&& fn) {
    uint64_t total = 1;
    bool exhaustive = true;
    for (int i = 0; i < n; ++i) {
      total *= elems_.size();
      if (total > opt_.exhaustive_limit) exhaustive = false;
    }
    std::vector<Elem> w(n);
    if (exhaustive) {
      std::vector<size_t> idx(n, 0);
      for (uint64_t c = 0; c < total; ++c) {
        for (int i = 0; i < n; ++i) w[i] = elems_[idx[i]];
        fn(std::span<const Elem>(w));
        for (int i = n - 1; i >= 0; --i) {
          if (++idx[i] < elems_.size()) break;
          idx[i] = 0;
        }
      }
      return true;
    }
    std::uniform_int_distribution<size_t> pick(0, elems_.size() - 1);
    std::uniform_int_distribution<size_t> pickn(0, normalizers_.size() - 1);
    for (uint64_t c = 0; c < opt_.samples; ++c) {
      if (c % 2) {
        const auto& nz = normalizers_[pickn(rng_)];
        std::uniform_int_distribution<size_t> pe(0, nz.size() - 1);
        for (int i = 0; i < n; ++i) w[i] = nz[pe(rng_)];
      } else {
        for (int i = 0; i < n; ++i) w[i] = elems_[pick(rng_)];
      }
      fn(std::span<const Elem>(w));
    }
    return false;
  }

 private:
  const Locality& l_;
  const VerifyOptions& opt_;
  std::vector<Elem> elems_;
  std::vector<std::vector<Elem>> normalizers_;
  std::mt19937_64 rng_;
};

}  // namespace

ReportNode VerifyLocality(const Locality& l, const VerifyOptions& opt) {
  const auto t0 = std::chrono::steady_clock::now();
  const Group& u = l.universe();
  const Subgroup& s = l.sylow();
  ReportNode root;
  root.name = "locality";
  root.witness = "|L| = " + std::to_string(l.size()) + ", |Delta| = " +
                 std::to_string(l.objects().size()) +
                 ", seed = " + std::to_string(opt.seed);

  // (L1): no element of N_L(S) outside S generates a p-group with S.
  {
    std::optional<std::string> bad;
    l.elements().for_each([&](Elem x) {
      if (bad || s.contains(x) || !NormalizesSubgroup(u, s, x)) return;
      if (IsPPower(Extend(s, x).order(), l.p())) bad = u.name(x);
    });
    root.Check("L1 S maximal", !bad, bad);
  }
  // (L3) and S_g in Delta with c_g : S_g -> S_{g^-1}.
  {
    auto bad = l.objects().ClosureViolation();
    root.Check("L3 objects closed", !bad, bad);
    std::optional<std::string> sg_bad;
    l.elements().for_each([&](Elem g) {
      if (sg_bad) return;
      Subgroup sg = l.SOf(g);
      if (!l.objects().contains(sg)) sg_bad = u.name(g) + ": S_g not an object";
      else if (ConjugateSubgroup(sg, g) != l.SOf(u.inv(g)))
        sg_bad = u.name(g) + ": S_g^g != S_{g^-1}";
      else if (!l.contains(u.inv(g))) sg_bad = u.name(g) + ": inverse outside L";
    });
    root.Check("S_g in Delta", !sg_bad, sg_bad);
    std::optional<std::string> n_bad;
    for (const Subgroup& p : l.objects().Representatives()) {
      if (l.NormalizerIn(p) != Normalizer(l.group(), p).members()) {
        n_bad = "N_L(" + Describe(p) + ") differs from N_G";
        break;
      }
    }
    root.Check("N_L(P) subgroup", !n_bad, n_bad);
  }
  // (L2) and the partial-group axioms on bounded words.
  WordSource src(l, opt);
  ReportNode& axioms = root.Add(ReportNode{"partial group axioms"});
  std::optional<std::string> l2_bad, split_bad, assoc_bad, inv_bad, single_bad;
  std::unordered_map<Bitset, bool, BitsetHash> no_object_inside;
  const auto objects = l.objects().Subgroups();
  bool all_exhaustive = true;
  {
    const Elem empty[1] = {0};
    if (!l.InDomain(std::span<const Elem>(empty, 0)) ||
        l.Product(std::span<const Elem>(empty, 0)) != 0) {
      single_bad = "empty word";
    }
  }
  l.elements().for_each([&](Elem g) {
    const Elem w[1] = {g};
    if (!single_bad && (!l.InDomain(w) || l.Product(w) != g)) single_bad = u.name(g);
  });
  for (int n = 1; n <= opt.word_cap; ++n) {
    all_exhaustive &= src.ForEach(n, [&](std::span<const Elem> w) {
      const Subgroup x = l.XOf(w);
      const bool in_d = l.objects().contains(x);
      // (L2): the returned chain is a Delta-chain, and outside D nothing in
      // Delta fits below X_w.
      if (in_d) {
        auto d = l.DomainCheck(w);
        for (size_t i = 0; i < d->chain.size() && !l2_bad; ++i) {
          if (!l.objects().contains(d->chain[i]) || !d->chain[i].is_subgroup_of(s))
            l2_bad = WordName(u, w);
        }
      } else {
        auto it = no_object_inside.find(x.members());
        if (it == no_object_inside.end()) {
          bool none = true;
          for (const Subgroup& o : objects) none &= !o.is_subgroup_of(x);
          it = no_object_inside.emplace(x.members(), none).first;
        }
        if (!it->second && !l2_bad) l2_bad = WordName(u, w);
        return;
      }
      const Elem prod = l.Product(w);
      // u o v in D => u, v in D.
      for (size_t k = 0; k <= w.size() && !split_bad; ++k) {
        if (!l.InDomain(w.subspan(0, k)) || !l.InDomain(w.subspan(k))) {
          split_bad = WordName(u, w);
        }
      }
      // u o v o w in D => u o (Pi v) o w in D with the same product.
      for (size_t i = 0; i <= w.size() && !assoc_bad; ++i) {
        for (size_t j = i; j <= w.size() && !assoc_bad; ++j) {
          std::vector<Elem> c(w.begin(), w.begin() + i);
          Elem pv = 0;
          for (size_t k = i; k < j; ++k) pv = u.mul(pv, w[k]);
          c.push_back(pv);
          c.insert(c.end(), w.begin() + j, w.end());
          if (!l.InDomain(c) || l.Product(c) != prod) assoc_bad = WordName(u, w);
        }
      }
      // w^-1 o w in D with product 1.
      if (!inv_bad) {
        std::vector<Elem> c;
        for (size_t k = w.size(); k-- > 0;) c.push_back(u.inv(w[k]));
        c.insert(c.end(), w.begin(), w.end());
        if (!l.InDomain(c) || l.Product(c) != 0) inv_bad = WordName(u, w);
      }
    });
  }
  axioms.Check("L subset D, Pi identity on L", !single_bad, single_bad);
  axioms.Check("prefix and suffix closed", !split_bad, split_bad);
  axioms.Check("associativity", !assoc_bad, assoc_bad);
  axioms.Check("inverse words", !inv_bad, inv_bad);
  axioms.witness = std::string(all_exhaustive ? "exhaustive" : "sampled") +
                   " up to length " + std::to_string(opt.word_cap);
  root.Check("L2 chain criterion", !l2_bad, l2_bad);
  root.Finish();
  root.millis = MillisSince(t0);
  return root;
}

LocalityFlags ComputeLocalityFlags(const Locality& l,
                                   const std::optional<Subgroup>& q) {
  const FusionSystem& f = l.fusion();
  const Subgroup& s = l.sylow();
  LocalityFlags r;
  r.objective_char_p = true;
  for (const Subgroup& p : l.objects().Representatives()) {
    if (!IsCharacteristicP(Normalizer(l.group(), p), l.p())) {
      r.objective_char_p = false;
      break;
    }
  }
  // F_S(L) = F_S(G): every c_g : S_g -> S with g outside L must factor
  // through elements of L.
  r.fusion_matches = true;
  std::set<std::pair<size_t, Elem>> done;
  const Group& u = l.universe();
  l.group().members().for_each([&](Elem g) {
    if (!r.fusion_matches || l.contains(g)) return;
    const Subgroup a = l.SOf(g);
    if (a.is_trivial()) return;
    Elem m = g;
    for (Elem c : Centralizer(l.group(), a).elements()) m = std::min(m, u.mul(c, g));
    if (!done.insert({f.IndexOf(a), m}).second) return;
    if (!GeneratedByElements(l.group(), s, l.elements(), a, g)) r.fusion_matches = false;
  });
  r.cr_in_delta = true;
  for (const auto& c : ClassifySubgroups(f)) {
    if (c.centric && c.radical &&
        !l.objects().contains_index(c.representative)) {
      r.cr_in_delta = false;
    }
  }
  r.linking = r.objective_char_p && r.fusion_matches && r.cr_in_delta;
  if (q) {
    bool first = true, second = true;
    const Subgroup cq = Centralizer(s, *q);
    for (const Subgroup& p : f.subgroups()) {
      if (p.is_trivial()) continue;
      if (q->is_subgroup_of(Normalizer(s, p)) && !l.objects().contains(p)) first = false;
      if (p.is_subgroup_of(cq) && !l.objects().contains(p)) second = false;
    }
    if (first != second) {
      throw InternalError("the two forms of " + Describe(*q) +
                          "-repleteness disagree");
    }
    r.replete = first;
  }
  return r;
}

ReportNode FlagsReport(const LocalityFlags& f) {
  ReportNode r{"locality flags"};
  auto yes = [](bool b) { return std::string(b ? "true" : "false"); };
  r.Add({"objective characteristic p", Status::kPass, yes(f.objective_char_p)});
  r.Add({"F_S(L) = F_S(G)", Status::kPass, yes(f.fusion_matches)});
  r.Add({"F^cr in Delta", Status::kPass, yes(f.cr_in_delta)});
  r.Add({"linking", Status::kPass, yes(f.linking)});
  if (f.replete) r.Add({"Q-replete", Status::kPass, yes(*f.replete)});
  r.Finish();
  return r;
}

LocalityLargeness IsLargeInLocality(const Locality& l, const Subgroup& q) {
  LocalityLargeness r;
  r.self_centralizing = l.CentralizerIn(q).is_subset_of(q.members());
  if (!r.self_centralizing) {
    r.witness = "C_L(Q) not inside Q";
    return r;
  }
  const Bitset nq = l.NormalizerIn(q);
  const Subgroup z = Center(q);
  for (const Subgroup& u : l.fusion().subgroups()) {
    if (u.is_trivial() || !u.is_subgroup_of(z)) continue;
    if (!l.NormalizerIn(u).is_subset_of(nq)) {
      r.witness = "N_L(" + Describe(u) + ") not inside N_L(Q)";
      return r;
    }
  }
  r.large = true;
  return r;
}

bool IsWeaklyClosedInLocality(const Locality& l, const Subgroup& q) {
  const Group& u = l.universe();
  bool ok = true;
  l.elements().for_each([&](Elem f) {
    if (!ok) return;
    bool inside = true;
    for (Elem x : q.gens()) inside &= l.sylow().contains(u.conj(x, f));
    if (inside && ConjugateSubgroup(q, f) != q) ok = false;
  });
  return ok;
}

}  // namespace fusionloc
