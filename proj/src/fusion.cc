#include "fusionloc/fusion.h"

#include <algorithm>
#include <chrono>
#include <deque>
#include <functional>
#include <limits>
#include <map>
#include <numeric>

#include "fusionloc/automorphism.h"
#include "fusionloc/caps.h"
#include "fusionloc/core.h"
#include "fusionloc/errors.h"
#include "fusionloc/modrep.h"

namespace fusionloc {

namespace {

constexpr Elem kNone = std::numeric_limits<Elem>::max();

bool ConjugateInside(const Subgroup& x, Elem g, const Subgroup& t) {
  const Group& G = x.group();
  for (Elem y : x.gens())
    if (!t.contains(G.conj(y, g))) return false;
  return true;
}

// label[g] = smallest element of the left coset gN, for g in H.
std::vector<Elem> LeftCosetLabels(const Subgroup& h, const Subgroup& n) {
  const Group& G = h.group();
  std::vector<Elem> label(G.size(), kNone);
  const std::vector<Elem> ne = n.elements();
  h.members().for_each([&](Elem g) {
    if (label[g] != kNone) return;
    for (Elem y : ne) label[G.mul(g, y)] = g;
  });
  return label;
}

// Every g in `trans` lies in C * N, where N has the given left-coset labels.
bool InsideCN(const Subgroup& c, const std::vector<Elem>& label,
              const Bitset& trans) {
  const Group& G = c.group();
  Bitset labels(G.size());
  c.members().for_each([&](Elem x) { labels.set(label[x]); });
  bool ok = true;
  trans.for_each([&](Elem g) {
    if (ok && !labels.test(label[g])) ok = false;
  });
  return ok;
}

std::vector<Subgroup> SubgroupsInside(const std::vector<Subgroup>& subs,
                                      const Subgroup& t) {
  std::vector<Subgroup> r;
  for (const Subgroup& x : subs)
    if (x.is_subgroup_of(t)) r.push_back(x);
  return r;
}

// Subgroup generated by the p-elements.
Subgroup PElementSubgroup(const Subgroup& g, unsigned p) {
  const Group& G = g.group();
  Subgroup r = G.trivial();
  g.members().for_each([&](Elem x) {
    if (IsPPower(G.order(x), p) && !r.contains(x)) r = Extend(r, x);
  });
  return r;
}

Subgroup OpOfRealized(const Subgroup& h, const Subgroup& t,
                      const std::vector<Subgroup>& tsubs) {
  for (auto it = tsubs.rbegin(); it != tsubs.rend(); ++it) {
    if (!IsNormalIn(*it, t)) continue;
    if (IsNormalInRealized(h, t, *it, tsubs)) return *it;
  }
  return t.group().trivial();
}

double MillisSince(std::chrono::steady_clock::time_point t0) {
  return std::chrono::duration<double, std::milli>(
             std::chrono::steady_clock::now() - t0)
      .count();
}

}  // namespace

// ---- ElementFusion ----

ElementFusion::ElementFusion(const Subgroup& h, const Subgroup& t)
    : h_(h), t_(t) {
  const Group& G = h.group();
  if (!t.is_subgroup_of(h)) throw PreconditionError("T is not contained in H");
  class_of_.assign(G.size(), 0);
  for (const auto& cls : ConjugacyClasses(h)) {
    Bitset b(G.size());
    for (Elem x : cls) {
      class_of_[x] = static_cast<uint32_t>(in_t_.size());
      if (t.contains(x)) b.set(x);
    }
    in_t_.push_back(std::move(b));
  }
}

bool ElementFusion::StronglyClosed(const Subgroup& x) const {
  std::vector<bool> done(in_t_.size(), false);
  bool ok = true;
  x.members().for_each([&](Elem y) {
    if (!ok || done[class_of_[y]]) return;
    done[class_of_[y]] = true;
    ok = in_t_[class_of_[y]].is_subset_of(x.members());
  });
  return ok;
}

bool IsNormalInRealized(const Subgroup& h, const Subgroup& t,
                        const Subgroup& q,
                        const std::vector<Subgroup>& t_subgroups) {
  if (!q.is_subgroup_of(t) || !IsNormalIn(q, t)) return false;
  const std::vector<Subgroup> subs =
      t_subgroups.empty() ? AllSubgroups(t) : t_subgroups;
  const std::vector<Elem> label = LeftCosetLabels(h, Normalizer(h, q));
  for (const auto& cls : ConjugacyClassesOfSubgroups(subs, t)) {
    const Subgroup& p = subs[cls.front()];
    if (!InsideCN(Centralizer(h, p), label, TransporterSet(h, p, t))) return false;
  }
  return true;
}

std::optional<std::vector<Subgroup>> StronglyClosedCentralSeries(
    const ElementFusion& ef, const Subgroup& q) {
  if (!q.is_subgroup_of(ef.t())) return std::nullopt;
  std::vector<Subgroup> closed;
  for (const Subgroup& x : AllSubgroups(q))
    if (ef.StronglyClosed(x)) closed.push_back(x);
  if (closed.empty() || !(closed.back() == q)) return std::nullopt;
  // Breadth-first from the trivial subgroup (closed[0]).
  std::vector<int> parent(closed.size(), -2);
  parent[0] = -1;
  std::deque<size_t> todo{0};
  while (!todo.empty()) {
    size_t i = todo.front();
    todo.pop_front();
    if (closed[i] == q) {
      std::vector<Subgroup> series;
      for (int k = static_cast<int>(i); k >= 0; k = parent[k]) series.push_back(closed[k]);
      std::reverse(series.begin(), series.end());
      return series;
    }
    for (size_t j = 0; j < closed.size(); ++j) {
      if (parent[j] != -2 || closed[j].order() <= closed[i].order()) continue;
      if (!closed[i].is_subgroup_of(closed[j])) continue;
      if (!CommutatorSubgroup(closed[j], q).is_subgroup_of(closed[i])) continue;
      parent[j] = static_cast<int>(i);
      todo.push_back(j);
    }
  }
  return std::nullopt;
}

// ---- FusionSystem ----

FusionSystem::FusionSystem(const Subgroup& g, const Subgroup& s, unsigned p)
    : g_(g), s_(s), p_(p) {
  if (!s.is_subgroup_of(g)) throw InputError("S is not contained in G");
  if (!IsPGroup(s, p) || s.order() != PPart(g.order(), p)) {
    throw InputError("S is not a Sylow " + std::to_string(p) + "-subgroup of G");
  }
}

void FusionSystem::BuildLattice() const {
  if (!subs_.empty()) return;
  subs_ = AllSubgroups(s_);
  for (size_t i = 0; i < subs_.size(); ++i) index_.emplace(subs_[i].members(), i);
}

const std::vector<Subgroup>& FusionSystem::subgroups() const {
  BuildLattice();
  return subs_;
}

size_t FusionSystem::IndexOf(const Subgroup& p) const {
  BuildLattice();
  auto it = index_.find(p.members());
  if (it == index_.end()) throw PreconditionError("subgroup is not contained in S");
  return it->second;
}

std::optional<size_t> FusionSystem::FindIndex(const Bitset& members) const {
  BuildLattice();
  auto it = index_.find(members);
  if (it == index_.end()) return std::nullopt;
  return it->second;
}

void FusionSystem::BuildClasses() const {
  if (!classes_.empty()) return;
  BuildLattice();
  constexpr size_t kUnset = std::numeric_limits<size_t>::max();
  class_of_.assign(subs_.size(), kUnset);
  for (size_t i = 0; i < subs_.size(); ++i) {
    if (class_of_[i] != kUnset) continue;
    std::vector<size_t> members;
    for (const Bitset& b : SubgroupConjugates(subs_[i], g_)) {
      if (!b.is_subset_of(s_.members())) continue;
      members.push_back(index_.at(b));
    }
    std::sort(members.begin(), members.end());
    for (size_t m : members) class_of_[m] = classes_.size();
    classes_.push_back(std::move(members));
  }
}

const std::vector<std::vector<size_t>>& FusionSystem::classes() const {
  BuildClasses();
  return classes_;
}

size_t FusionSystem::ClassOf(size_t index) const {
  BuildClasses();
  return class_of_[index];
}

const std::vector<size_t>& FusionSystem::ClassMembers(const Subgroup& p) const {
  return classes()[ClassOf(IndexOf(p))];
}

size_t FusionSystem::FullyNormalizedRep(size_t cls) const {
  const auto& members = classes()[cls];
  size_t best = members.front();
  size_t best_order = 0;
  for (size_t m : members) {
    size_t n = Normalizer(s_, subs_[m]).order();
    if (n > best_order) {
      best_order = n;
      best = m;
    }
  }
  return best;
}

bool FusionSystem::IsFullyNormalized(const Subgroup& p) const {
  const size_t rep = FullyNormalizedRep(ClassOf(IndexOf(p)));
  return Normalizer(s_, p).order() == Normalizer(s_, subs_[rep]).order();
}

const ElementFusion& FusionSystem::element_fusion() const {
  if (!fusion_) fusion_ = std::make_unique<ElementFusion>(g_, s_);
  return *fusion_;
}

// ---- morphisms and classification ----

std::vector<Morphism> HomSet(const FusionSystem& f, const Subgroup& p,
                             const Subgroup& q) {
  const Group& G = f.universe();
  const Bitset trans = TransporterSet(f.group(), p, q);
  const std::vector<Elem> c = Centralizer(f.group(), p).elements();
  Bitset seen(G.size());
  std::vector<Morphism> out;
  trans.for_each([&](Elem g) {
    if (seen.test(g)) return;
    out.push_back({p, q, g});
    for (Elem x : c) seen.set(G.mul(x, g));
  });
  return out;
}

OutImage OutF(const FusionSystem& f, const Subgroup& p) {
  Subgroup n = Normalizer(f.group(), p);
  Subgroup k = Join(p, Centralizer(f.group(), p));
  Image img = Quotient(n, k);
  return {img.group, k};
}

bool HasStronglyPEmbedded(const Subgroup& h, unsigned p) {
  if (h.order() % p != 0) return false;
  if (!OpOf(h, p).is_trivial()) return false;
  std::vector<Bitset> syl = SubgroupConjugates(Sylow(h, p), h);
  std::vector<size_t> root(syl.size());
  std::iota(root.begin(), root.end(), 0);
  std::function<size_t(size_t)> find = [&](size_t x) {
    return root[x] == x ? x : root[x] = find(root[x]);
  };
  for (size_t i = 0; i < syl.size(); ++i)
    for (size_t j = i + 1; j < syl.size(); ++j)
      if ((syl[i] & syl[j]).count() > 1) root[find(i)] = find(j);
  for (size_t i = 1; i < syl.size(); ++i)
    if (find(i) != find(0)) return true;
  return false;
}

bool HasStronglyPEmbeddedBrute(const Subgroup& h, unsigned p) {
  for (const Subgroup& m : AllSubgroups(h)) {
    if (m == h || m.order() % p != 0) continue;
    bool ok = true;
    h.members().for_each([&](Elem g) {
      if (!ok || m.contains(g)) return;
      if ((m.members() & ConjugateMembers(m, g)).count() % p == 0) ok = false;
    });
    if (ok) return true;
  }
  return false;
}

bool IsCentric(const FusionSystem& f, const Subgroup& p) {
  for (size_t m : f.ClassMembers(p)) {
    const Subgroup& x = f.subgroups()[m];
    if (!Centralizer(f.sylow(), x).is_subgroup_of(x)) return false;
  }
  return true;
}

std::vector<SubgroupClassReport> ClassifySubgroups(const FusionSystem& f) {
  if (f.sylow().order() > 1024) throw ResourceError("classification limited to |S| <= 2^10");
  const auto& subs = f.subgroups();
  const ElementFusion& ef = f.element_fusion();
  std::vector<SubgroupClassReport> out;
  for (size_t c = 0; c < f.classes().size(); ++c) {
    const auto& members = f.classes()[c];
    SubgroupClassReport r;
    r.representative = f.FullyNormalizedRep(c);
    r.class_size = members.size();
    const Subgroup& p = subs[r.representative];
    size_t best_c = 0;
    r.centric = true;
    for (size_t m : members) {
      Subgroup cs = Centralizer(f.sylow(), subs[m]);
      best_c = std::max(best_c, cs.order());
      if (!cs.is_subgroup_of(subs[m])) r.centric = false;
    }
    r.fully_centralized = Centralizer(f.sylow(), p).order() == best_c;
    OutImage out_f = OutF(f, p);
    r.radical = OpOf(out_f.group->whole(), f.p()).is_trivial();
    r.essential = r.centric && HasStronglyPEmbedded(out_f.group->whole(), f.p());
    r.weakly_closed = members.size() == 1;
    r.strongly_closed = r.weakly_closed && ef.StronglyClosed(p);
    out.push_back(r);
  }
  return out;
}

std::vector<Subgroup> EssentialSubgroups(const FusionSystem& f) {
  std::vector<Subgroup> r;
  for (const auto& rep : ClassifySubgroups(f))
    if (rep.essential) r.push_back(f.subgroups()[rep.representative]);
  return r;
}

EssentialStructure EssentialLocalStructure(const FusionSystem& f,
                                           const Subgroup& r) {
  EssentialStructure e;
  const unsigned p = f.p();
  if (!f.IsFullyNormalized(r) || !IsCentric(f, r)) {
    e.reason = "R is not fully normalized and centric";
    return e;
  }
  OutImage out = OutF(f, r);
  if (!HasStronglyPEmbedded(out.group->whole(), p)) {
    e.reason = "Out_F(R) has no strongly p-embedded subgroup";
    return e;
  }
  const Subgroup n = Normalizer(f.group(), r);
  const Subgroup ns = Normalizer(f.sylow(), r);
  const Subgroup phi = Frattini(r);
  e.q = ns.order() / r.order();
  e.frattini_quotient = r.order() / phi.order();

  SectionModule m = BuildSectionModule(r, phi, n, p);
  for (const Subgroup& a : AllSubgroups(ns)) {
    const uint64_t image = a.order() / Intersect(a, r).order();
    if (image < 2) continue;
    CommutatorAndFixed cf = CommutatorAndFixedOf(m, a);
    if (r.order() / cf.fixed.order() <= image) {
      e.offender = a;
      e.offender_image = image;
      break;
    }
  }
  if (e.offender_image == 0) {
    e.reason = "no offender in N_S(R)";
    return e;
  }
  e.applicable = true;

  Subgroup k = PElementSubgroup(n, p);
  Subgroup kbar = Join(k, out.kernel);
  e.out_p_order = kbar.order() / out.kernel.order();
  Image img = Quotient(n, out.kernel);
  Subgroup op = img.ImageOf(kbar);
  Subgroup syl = Sylow(op, p);
  e.sylow_count = SubgroupConjugates(syl, op).size();
  e.sl2_order = e.out_p_order == e.q * (e.q * e.q - 1);
  e.sl2_sylow = syl.order() == e.q && e.sylow_count == e.q + 1;
  if (e.q == p) {
    Subgroup fixed = CommutatorAndFixedOf(m, k).fixed;
    SectionModule top = BuildSectionModule(r, fixed, k, p);
    auto n_nat = IsNaturalSLnp(top);
    e.natural = n_nat.has_value() && *n_nat == 2;
  }
  if (e.frattini_quotient < e.q * e.q) {
    throw InternalError("essential subgroup with |R/Phi(R)| < |N_S(R)/R|^2");
  }
  return e;
}

Morphism FullyNormalize(const FusionSystem& f, const Subgroup& p) {
  const Group& G = f.universe();
  const Subgroup ns = Normalizer(f.sylow(), p);
  if (f.IsFullyNormalized(p)) return {ns, ns, 0};
  const Subgroup& target = f.subgroups()[f.FullyNormalizedRep(f.ClassOf(f.IndexOf(p)))];
  auto g0 = Transporter(f.group(), p, target);
  if (!g0) throw InternalError("class member without a transporter");
  const Subgroup x = ConjugateSubgroup(ns, *g0);
  const Bitset fix = TransporterSet(Normalizer(f.group(), target), x,
                                    Normalizer(f.sylow(), target));
  if (fix.none()) throw InternalError("N_S of a fully normalized subgroup is not Sylow");
  const Elem g = G.mul(*g0, fix.to_vector().front());
  return {ns, ConjugateSubgroup(ns, g), g};
}

FusionSystem NormalizerSubsystem(const FusionSystem& f, const Subgroup& p) {
  if (!f.IsFullyNormalized(p)) throw PreconditionError("P is not fully normalized");
  return FusionSystem(Normalizer(f.group(), p), Normalizer(f.sylow(), p), f.p());
}

NormalityReport IsNormalInF(const FusionSystem& f, const Subgroup& q) {
  NormalityReport r;
  r.extension = IsNormalInRealized(f.group(), f.sylow(), q, f.subgroups());
  r.characteristic_closed = true;
  for (const Subgroup& c : CharacteristicSubgroups(q)) {
    if (!f.element_fusion().StronglyClosed(c)) {
      r.characteristic_closed = false;
      break;
    }
  }
  r.series = StronglyClosedCentralSeries(f.element_fusion(), q);
  if (r.extension != r.characteristic_closed || r.extension != r.series.has_value()) {
    throw InternalError("normality criteria disagree for " + Describe(q));
  }
  return r;
}

GroupLargeness IsLargeInGroup(const Subgroup& g, const Subgroup& q, unsigned p) {
  if (!IsPGroup(q, p) || !q.is_subgroup_of(g)) throw PreconditionError("Q is not a p-subgroup of G");
  GroupLargeness r;
  if (!Centralizer(g, q).is_subgroup_of(q)) {
    r.witness = "C_G(Q) is not contained in Q";
    return r;
  }
  const Subgroup nq = Normalizer(g, q);
  for (const Subgroup& u : AllSubgroups(Center(q))) {
    if (u.is_trivial()) continue;
    if (!Normalizer(g, u).is_subgroup_of(nq)) {
      r.witness = "N_G(U) not in N_G(Q) for U = " + Describe(u);
      return r;
    }
  }
  r.large = true;
  return r;
}

LargenessReport IsLargeInFusion(const FusionSystem& f, const Subgroup& q) {
  using Clock = std::chrono::steady_clock;
  LargenessReport rep;
  const Subgroup& G = f.group();
  const Subgroup& S = f.sylow();
  if (!q.is_subgroup_of(S)) throw PreconditionError("Q is not contained in S");
  rep.self_centralizing = Centralizer(S, q).is_subgroup_of(q);

  const char* names[7] = {"(i)", "(ii)", "(ii')", "(iii)", "(iii')", "(iv)", "(iv')"};
  rep.criteria.resize(7);
  for (int i = 0; i < 7; ++i) {
    rep.criteria[i].name = names[i];
    rep.criteria[i].holds = true;
  }
  auto fail = [&](int i, const std::string& w) {
    if (rep.criteria[i].holds) {
      rep.criteria[i].holds = false;
      rep.criteria[i].witness = w;
    }
  };

  const std::vector<Subgroup> chars = CharacteristicSubgroups(q);
  const std::vector<Elem> label_q = LeftCosetLabels(G, Normalizer(G, q));
  for (const Subgroup& u : AllSubgroups(Center(q))) {
    if (u.is_trivial()) continue;
    const bool full = f.IsFullyNormalized(u);
    const std::string tag = "U = " + Describe(u);
    const Subgroup h = Normalizer(G, u);
    const Subgroup t = Normalizer(S, u);
    const std::vector<Subgroup> tsubs = SubgroupsInside(f.subgroups(), t);

    // (i): Hom_{N_F(U)}(X, T) inside Hom_{N_F(Q)}(X, T) for every X <= T.
    auto t0 = Clock::now();
    bool ok = IsNormalIn(q, t);
    for (size_t i = 0; ok && i < tsubs.size(); ++i) {
      ok = InsideCN(Centralizer(G, tsubs[i]), label_q, TransporterSet(h, tsubs[i], t));
    }
    rep.criteria[0].millis += MillisSince(t0);
    if (!ok) fail(0, tag);

    t0 = Clock::now();
    ok = IsNormalInRealized(h, t, q, tsubs);
    double ms = MillisSince(t0);
    rep.criteria[1].millis += ms;
    if (!ok) fail(1, tag);
    if (full) {
      rep.criteria[2].millis += ms;
      if (!ok) fail(2, tag);
    }

    t0 = Clock::now();
    ElementFusion ef(h, t);
    ok = true;
    for (const Subgroup& c : chars) {
      if (!ef.StronglyClosed(c)) {
        ok = false;
        break;
      }
    }
    ms = MillisSince(t0);
    rep.criteria[3].millis += ms;
    if (!ok) fail(3, tag);
    if (full) {
      rep.criteria[4].millis += ms;
      if (!ok) fail(4, tag);
    }

    t0 = Clock::now();
    ok = StronglyClosedCentralSeries(ef, q).has_value();
    ms = MillisSince(t0);
    rep.criteria[5].millis += ms;
    if (!ok) fail(5, tag);
    if (full) {
      rep.criteria[6].millis += ms;
      if (!ok) fail(6, tag);
    }
  }

  if (rep.self_centralizing) {
    for (const auto& c : rep.criteria) {
      if (c.holds != rep.criteria[0].holds) {
        throw InternalError("largeness criteria " + rep.criteria[0].name + " and " +
                            c.name + " disagree for " + Describe(q));
      }
    }
  }
  rep.large = rep.self_centralizing && rep.criteria[0].holds;
  rep.weakly_closed = f.ClassMembers(q).size() == 1;
  rep.normal_in_s = IsNormalIn(q, S);
  if (rep.large && (!rep.weakly_closed || !rep.normal_in_s)) {
    throw InternalError("large subgroup that is not weakly closed and normal in S");
  }
  return rep;
}

Subgroup OpOfFusion(const FusionSystem& f) {
  return OpOfRealized(f.group(), f.sylow(), f.subgroups());
}

Bitset SubcentricSet(const FusionSystem& f) {
  const auto& subs = f.subgroups();
  Bitset in(subs.size());
  for (size_t c = 0; c < f.classes().size(); ++c) {
    const Subgroup& p = subs[f.FullyNormalizedRep(c)];
    const Subgroup t = Normalizer(f.sylow(), p);
    Subgroup o = OpOfRealized(Normalizer(f.group(), p), t, SubgroupsInside(subs, t));
    if (!IsCentric(f, o)) continue;
    for (size_t m : f.classes()[c]) in.set(m);
  }
  for (size_t i = 0; i < subs.size(); ++i) {
    if (!in.test(i)) continue;
    for (size_t j = i + 1; j < subs.size(); ++j) {
      if (subs[i].is_subgroup_of(subs[j]) && !in.test(j)) {
        throw InternalError("subcentric set is not closed under overgroups");
      }
    }
  }
  return in;
}

HyperfocalFocal HyperfocalAndFocal(const FusionSystem& f) {
  const Group& G = f.universe();
  const auto& subs = f.subgroups();
  Subgroup hyp = G.trivial();
  for (const auto& cls : f.classes()) {
    const Subgroup& p = subs[cls.front()];
    Subgroup k = UpperPOf(Normalizer(f.group(), p), f.p());
    Subgroup c = CommutatorSubgroup(p, k);
    if (c.is_trivial()) continue;
    for (size_t m : cls) {
      auto g = Transporter(f.group(), p, subs[m]);
      hyp = Join(hyp, ConjugateSubgroup(c, *g));
    }
  }
  const ElementFusion& ef = f.element_fusion();
  Subgroup foc = G.trivial();
  f.sylow().members().for_each([&](Elem x) {
    ef.ClassInT(x).for_each([&](Elem y) {
      Elem d = G.mul(G.inv(x), y);
      if (!foc.contains(d)) foc = Extend(foc, d);
    });
  });
  return {hyp, foc};
}

bool SubsystemGeneratedContains(const FusionSystem& f,
                                const std::vector<const FusionSystem*>& gens,
                                const Morphism& probe) {
  const Group& G = f.universe();
  const Subgroup& p = probe.source;
  if (!ConjugateInside(p, probe.witness, f.sylow())) {
    throw PreconditionError("probe is not a morphism into S");
  }
  for (const FusionSystem* e : gens) {
    if (&e->universe() != &G || !e->group().is_subgroup_of(f.group()) ||
        !e->sylow().is_subgroup_of(f.sylow())) {
      throw PreconditionError("generator is not a subsystem of F");
    }
  }
  const std::vector<Elem> c = Centralizer(f.group(), p).elements();
  auto canon = [&](Elem w) {
    Elem best = kNone;
    for (Elem x : c) best = std::min(best, G.mul(x, w));
    return best;
  };
  const Elem goal = canon(probe.witness);
  Bitset seen(G.size());
  std::deque<Elem> todo{canon(0)};
  seen.set(todo.front());
  const uint64_t cap = GlobalCaps().node_cap;
  uint64_t nodes = 0;
  while (!todo.empty()) {
    Elem w = todo.front();
    todo.pop_front();
    if (w == goal) return true;
    if (++nodes > cap) throw ResourceError("subsystem closure exceeds node cap");
    const Subgroup x = ConjugateSubgroup(p, w);
    for (const FusionSystem* e : gens) {
      if (!x.is_subgroup_of(e->sylow())) continue;
      e->group().members().for_each([&](Elem h) {
        if (!ConjugateInside(x, h, e->sylow())) return;
        Elem nw = canon(G.mul(w, h));
        if (!seen.test(nw)) {
          seen.set(nw);
          todo.push_back(nw);
        }
      });
    }
  }
  return false;
}

bool ParabolicCharacteristic(const FusionSystem& f) {
  const Bitset sub = SubcentricSet(f);
  const auto& subs = f.subgroups();
  for (size_t i = 0; i < subs.size(); ++i) {
    if (subs[i].is_trivial() || !IsNormalIn(subs[i], f.sylow())) continue;
    if (!sub.test(i)) return false;
  }
  return true;
}

bool GroupParabolicCharacteristic(const FusionSystem& f) {
  for (const Subgroup& x : f.subgroups()) {
    if (x.is_trivial() || !IsNormalIn(x, f.sylow())) continue;
    if (!IsCharacteristicP(Normalizer(f.group(), x), f.p())) return false;
  }
  return true;
}

}  // namespace fusionloc
