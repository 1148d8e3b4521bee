#include <gtest/gtest.h>

#include <set>

#include "fusionloc/catalog.h"
#include "fusionloc/core.h"
#include "fusionloc/errors.h"
#include "fusionloc/group_file.h"
#include "fusionloc/modrep.h"

namespace fusionloc {
namespace {

// Row i is e_{perm[i]}: coordinates are permuted like the points.
Matrix PermMatrix(size_t n, const std::vector<size_t>& perm) {
  Matrix m(n, Vec(n, 0));
  for (size_t i = 0; i < perm.size(); ++i) m[i][perm[i]] = 1;
  for (size_t i = perm.size(); i < n; ++i) m[i][i] = 1;
  return m;
}

const Matrix kT12 = {{1, 1, 0}, {0, 1, 0}, {0, 0, 1}};
const Matrix kT13 = {{1, 0, 1}, {0, 1, 0}, {0, 0, 1}};
const Matrix kCycle3 = {{0, 1, 0}, {0, 0, 1}, {1, 0, 0}};

Matrix Pad(const Matrix& m, size_t n) {
  Matrix r = IdentityMatrix(n);
  for (size_t i = 0; i < m.size(); ++i)
    for (size_t j = 0; j < m.size(); ++j) r[i][j] = m[i][j];
  return r;
}

AffineModel Agl32() { return AffineGroup(2, 3, {kT12, kCycle3}); }

// C2 wr Sym4 base module: Sym4 permuting four coordinates.
AffineModel PermModuleSym4() {
  return AffineGroup(2, 4, {PermMatrix(4, {1, 0, 2, 3}), PermMatrix(4, {1, 2, 3, 0})});
}

// Alt4 permuting four coordinates plus k trivial coordinates.
AffineModel PermModuleAlt4(size_t k) {
  return AffineGroup(2, 4 + k, {PermMatrix(4 + k, {1, 2, 0, 3}),
                                PermMatrix(4 + k, {1, 0, 3, 2})});
}

// SL_3(2) on natural + trivial, dimension 4.
AffineModel NaturalPlusTrivial() {
  return AffineGroup(2, 4, {Pad(kT12, 4), Pad(kCycle3, 4)});
}

SectionModule ModuleOf(const AffineModel& a, const Subgroup& h) {
  return BuildSectionModule(a.translations, a.group->trivial(), h, 2);
}

TEST(Linear, SubspaceBasics) {
  Subspace a = Subspace::Span(2, 3, {{1, 1, 0}, {0, 1, 1}});
  Subspace b = Subspace::Span(2, 3, {{1, 0, 1}, {0, 1, 1}});
  EXPECT_EQ(a, b);
  EXPECT_EQ(a.dim(), 2u);
  EXPECT_TRUE(a.contains({1, 0, 1}));
  EXPECT_FALSE(a.contains({1, 0, 0}));
  Subspace c = Subspace::Span(2, 3, {{1, 0, 0}});
  EXPECT_EQ((a + c).dim(), 3u);
  EXPECT_EQ(a.Intersect(c).dim(), 0u);
  EXPECT_EQ(a.Vectors().size(), 4u);
  Subspace t = Subspace::Span(3, 2, {{2, 1}, {1, 2}});
  EXPECT_EQ(t.dim(), 1u);
  EXPECT_TRUE(t.contains({1, 2}));
  EXPECT_EQ(Subspace::Whole(3, 2).Vectors().size(), 9u);
}

TEST(SectionModule, Sym4OnV4) {
  LoadedGroup g = LoadGroup(CatalogSym4().file);
  SectionModule m = BuildSectionModule(g["V4"], g.whole.group().trivial(), g.whole, 2);
  EXPECT_EQ(m.dim(), 2u);
  EXPECT_EQ(m.Kernel(), g["V4"]);
  // Matrices agree with conjugation on every element.
  for (Elem h : g.whole.elements()) {
    Matrix mat = m.MatrixOf(h);
    for (Elem v : g["V4"].elements()) {
      EXPECT_EQ(Apply(m.Coords(v), mat, 2), m.Coords(g.whole.group().conj(v, h)));
    }
  }
  std::set<Matrix> distinct;
  for (Elem h : g.whole.elements()) distinct.insert(m.MatrixOf(h));
  EXPECT_EQ(distinct.size(), 6u);
  EXPECT_EQ(m.ToSubspace(m.top()), m.Whole());
  EXPECT_EQ(m.ToSubgroup(m.Whole()), g["V4"]);
}

TEST(SectionModule, DegenerateAndErrors) {
  LoadedGroup g = LoadGroup(CatalogSym4().file);
  SectionModule zero = BuildSectionModule(g["V4"], g["V4"], g.whole, 2);
  EXPECT_EQ(zero.dim(), 0u);
  EXPECT_TRUE(IsPReduced(zero));
  SectionModule central = BuildSectionModule(g["V4"], g.whole.group().trivial(), g["V4"], 2);
  for (const Matrix& mat : central.generator_matrices()) EXPECT_EQ(mat, IdentityMatrix(2));
  // D8 is not elementary abelian; C4 modulo 1 has exponent 4.
  EXPECT_THROW(BuildSectionModule(g["S"], g.whole.group().trivial(), g["S"], 2), InputError);
  EXPECT_THROW(BuildSectionModule(g["C4"], g.whole.group().trivial(), g["S"], 2), InputError);
  // S does not normalize Z.
  EXPECT_THROW(BuildSectionModule(g["V4"], g["Z"], g.whole, 2), InputError);
  EXPECT_THROW(BuildSectionModule(g["V4"], g.whole.group().trivial(), g.whole, 5), InputError);
}

TEST(Lattice, Examples) {
  LoadedGroup g = LoadGroup(CatalogSym4().file);
  const Subgroup one = g.whole.group().trivial();
  SubmoduleLattice nat = SubmoduleLatticeOf(BuildSectionModule(g["V4"], one, g.whole, 2));
  ASSERT_EQ(nat.members.size(), 2u);
  EXPECT_TRUE(nat.irreducible[1]);
  EXPECT_EQ(nat.composition_length, 1u);
  SubmoduleLattice triv = SubmoduleLatticeOf(BuildSectionModule(g["V4"], one, g["V4"], 2));
  EXPECT_EQ(triv.members.size(), 5u);
  EXPECT_EQ(triv.composition_length, 2u);

  AffineModel y = NaturalPlusTrivial();
  EXPECT_EQ(y.linear.order(), 168u);
  SectionModule ym = ModuleOf(y, y.linear);
  SubmoduleLattice lat = SubmoduleLatticeOf(ym);
  bool has3 = false;
  for (const Subspace& w : lat.members) has3 |= w.dim() == 3;
  EXPECT_TRUE(has3);
  // Natural + trivial splits: 0, T, V, V+T.
  EXPECT_EQ(lat.members.size(), 4u);
  EXPECT_EQ(lat.composition_length, 2u);
}

TEST(Lattice, ClosedUnderSumAndIntersection) {
  std::vector<SectionModule> mods;
  AffineModel a = Agl32(), b = PermModuleSym4(), c = NaturalPlusTrivial(), d = PermModuleAlt4(1);
  mods.push_back(ModuleOf(a, a.linear));
  mods.push_back(ModuleOf(b, b.linear));
  mods.push_back(ModuleOf(c, c.linear));
  mods.push_back(ModuleOf(d, d.linear));
  for (const SectionModule& m : mods) {
    SubmoduleLattice lat = SubmoduleLatticeOf(m);
    std::set<Subspace> s(lat.members.begin(), lat.members.end());
    EXPECT_TRUE(s.count(m.Zero()));
    EXPECT_TRUE(s.count(m.Whole()));
    for (const Subspace& x : lat.members) {
      EXPECT_TRUE(IsInvariant(x, m.generator_matrices()));
      for (const Subspace& y : lat.members) {
        EXPECT_TRUE(s.count(x + y));
        EXPECT_TRUE(s.count(x.Intersect(y)));
      }
    }
    // Brute force: every invariant subspace is listed.
    size_t invariant = 0;
    std::set<Subspace> seen;
    const auto vecs = m.Whole().Vectors();
    for (const Vec& u : vecs)
      for (const Vec& v : vecs)
        for (const Vec& w : vecs) {
          Subspace sp = Subspace::Span(2, m.dim(), {u, v, w});
          if (seen.insert(sp).second && IsInvariant(sp, m.generator_matrices())) ++invariant;
        }
    if (m.dim() <= 3) EXPECT_EQ(invariant, lat.members.size());
  }
  // Perm module of Sym4: 0, <1111>, even weight, whole.
  EXPECT_EQ(SubmoduleLatticeOf(mods[1]).members.size(), 4u);
}

TEST(Module, PReduced) {
  LoadedGroup g = LoadGroup(CatalogSym4().file);
  const Subgroup one = g.whole.group().trivial();
  EXPECT_TRUE(IsPReduced(BuildSectionModule(g["V4"], one, g.whole, 2)));
  EXPECT_FALSE(IsPReduced(BuildSectionModule(g["V4"], one, g["S"], 2)));
  EXPECT_TRUE(IsPReduced(BuildSectionModule(g["V4"], one, g["V4"], 2)));
}

TEST(Module, CommutatorAndFixed) {
  LoadedGroup g = LoadGroup(CatalogSym4().file);
  const Subgroup one = g.whole.group().trivial();
  SectionModule m = BuildSectionModule(g["V4"], one, g.whole, 2);
  CommutatorAndFixed full = CommutatorAndFixedOf(m, g.whole);
  EXPECT_EQ(full.commutator, g["V4"]);
  EXPECT_TRUE(full.fixed.is_trivial());
  CommutatorAndFixed none = CommutatorAndFixedOf(m, one);
  EXPECT_TRUE(none.commutator.is_trivial());
  EXPECT_EQ(none.fixed, g["V4"]);

  AffineModel y = NaturalPlusTrivial();
  SectionModule ym = ModuleOf(y, y.linear);
  CommutatorAndFixed cf = CommutatorAndFixedOf(ym, y.linear);
  EXPECT_EQ(cf.commutator.order(), 8u);
  EXPECT_EQ(y.translations.order() / cf.commutator.order(), 2u);
  EXPECT_EQ(cf.fixed.order(), 2u);
}

// Brute-force natural-module check: image order and one orbit on nonzero
// vectors.
bool BruteNatural(const SectionModule& m) {
  if (m.dim() < 2) return false;
  std::set<Matrix> image;
  for (Elem h : m.actors().elements()) image.insert(m.MatrixOf(h));
  uint64_t sl = 1;
  for (size_t i = 0; i < m.dim(); ++i) sl *= (1u << m.dim()) - (1u << i);
  if (image.size() != sl) return false;
  Vec e(m.dim(), 0);
  e[0] = 1;
  std::set<Vec> orbit;
  for (const Matrix& mat : image) orbit.insert(Apply(e, mat, 2));
  return orbit.size() == (1u << m.dim()) - 1;
}

TEST(Module, NaturalRecognition) {
  LoadedGroup g = LoadGroup(CatalogSym4().file);
  const Subgroup one = g.whole.group().trivial();
  EXPECT_EQ(IsNaturalSLn2(BuildSectionModule(g["V4"], one, g.whole, 2)), 2u);
  EXPECT_EQ(IsNaturalSLn2(BuildSectionModule(g["V4"], one, g["V4"], 2)), std::nullopt);
  AffineModel a = Agl32();
  EXPECT_EQ(IsNaturalSLn2(ModuleOf(a, a.linear)), 3u);

  // Every subgroup restriction of the dim <= 4 corpus.
  size_t natural = 0, total = 0;
  std::vector<AffineModel> corpus = {a, PermModuleSym4(), NaturalPlusTrivial()};
  for (const AffineModel& am : corpus) {
    for (const Subgroup& h : AllSubgroups(am.linear)) {
      SectionModule m = ModuleOf(am, h);
      bool fast = IsNaturalSLn2(m).has_value();
      EXPECT_EQ(fast, BruteNatural(m));
      natural += fast;
      ++total;
    }
  }
  for (const Subgroup& h : AllSubgroups(g.whole)) {
    SectionModule m = BuildSectionModule(g["V4"], one, h, 2);
    EXPECT_EQ(IsNaturalSLn2(m).has_value(), BruteNatural(m));
  }
  EXPECT_GT(natural, 0u);
  EXPECT_GT(total, 200u);
}

TEST(Module, QuadraticAction) {
  AffineModel a = Agl32();
  SectionModule m = ModuleOf(a, a.linear);
  const Group& G = *a.group;
  EXPECT_TRUE(QuadraticAction(m, G.trivial()));
  EXPECT_FALSE(QuadraticAction(m, a.linear));
  Subgroup tv = Generate(G, {a.ElementOf(kT12), a.ElementOf(kT13)});
  ASSERT_EQ(tv.order(), 4u);
  EXPECT_TRUE(QuadraticAction(m, tv));
}

TEST(Module, Offenders) {
  LoadedGroup g = LoadGroup(CatalogSym4().file);
  const Group& G = g.whole.group();
  SectionModule m = BuildSectionModule(g["V4"], G.trivial(), g.whole, 2);
  Subgroup tr = Generate(G, {g.elem("(1 2)")});
  Subgroup three = Generate(G, {g.elem("(1 2 3)")});
  auto off = Offenders(m, {tr, G.trivial(), three});
  ASSERT_EQ(off.size(), 1u);
  EXPECT_EQ(off[0].a, tr);
  EXPECT_EQ(off[0].module_index, 2u);
  EXPECT_EQ(off[0].image_order, 2u);

  AffineModel b = PermModuleSym4();
  SectionModule pm = ModuleOf(b, b.linear);
  Subgroup dbl = Generate(*b.group, {b.ElementOf(PermMatrix(4, {1, 0, 3, 2}))});
  EXPECT_TRUE(Offenders(pm, {dbl}).empty());
  CommutatorAndFixed cf = CommutatorAndFixedOf(pm, dbl);
  EXPECT_EQ(b.translations.order() / cf.fixed.order(), 4u);
}

TEST(Gaschutz, Examples) {
  auto u = Group::Create(PermGroup(6, {Perm::FromCycles(6, "(1 2)"),
                                       Perm::FromCycles(6, "(1 2 3 4)"),
                                       Perm::FromCycles(6, "(5 6)")}));
  const Group& G = *u;
  Elem a = G.index(Perm::FromCycles(6, "(1 2)(3 4)"));
  Elem b = G.index(Perm::FromCycles(6, "(1 3)(2 4)"));
  Elem c = G.index(Perm::FromCycles(6, "(5 6)"));
  Subgroup v = Generate(G, {a, b, c});
  Subgroup v4 = Generate(G, {a, b});
  Subgroup c2 = Generate(G, {c});
  Subgroup s = Sylow(G.whole(), 2);
  EXPECT_EQ(GaschutzComplement(G.whole(), v, v4, c2, s), c2);
  EXPECT_TRUE(GaschutzComplement(G.whole(), v, v, G.trivial(), s).is_trivial());
  EXPECT_EQ(GaschutzComplement(G.whole(), v, G.trivial(), v, s), v);
  // Output is always a G-invariant complement.
  for (const Subgroup& u1 : AllSubgroups(v)) {
    if (!IsNormalIn(u1, G.whole())) continue;
    for (const Subgroup& u2 : AllSubgroups(v)) {
      if (!IsNormalIn(u2, s) || !Intersect(u1, u2).is_trivial() ||
          u1.order() * u2.order() != v.order()) {
        continue;
      }
      Subgroup w = GaschutzComplement(G.whole(), v, u1, u2, s);
      EXPECT_TRUE(Intersect(w, u1).is_trivial());
      EXPECT_EQ(Join(w, u1), v);
      EXPECT_TRUE(IsNormalIn(w, G.whole()));
    }
  }
  Subgroup t = Generate(G, {a});
  Subgroup other = Generate(G, {b, c});
  EXPECT_THROW(GaschutzComplement(G.whole(), v, t, other, s), PreconditionError);
  EXPECT_THROW(GaschutzComplement(G.whole(), v, v4, c2, v), PreconditionError);
  EXPECT_THROW(GaschutzComplement(G.whole(), G.whole(), v4, c2, s), PreconditionError);
}

// For A normal in B <= H and an irreducible B-submodule Y of W with
// [W,A] <= Y and W = <Y^H>, every proper H-submodule of W is centralized by
// <A^H>. Returns the number of instances meeting the hypotheses.
size_t CheckProperSubmodulesCentralized(const AffineModel& am) {
  SectionModule full = ModuleOf(am, am.linear);
  SubmoduleLattice hlat = SubmoduleLatticeOf(full);
  const std::vector<Subgroup> subs = AllSubgroups(am.linear);
  size_t instances = 0;
  for (const Subgroup& b : subs) {
    SectionModule mb = ModuleOf(am, b);
    SubmoduleLattice blat = SubmoduleLatticeOf(mb);
    for (const Subgroup& a : subs) {
      if (!a.is_subgroup_of(b) || !IsNormalIn(a, b)) continue;
      Subspace wa = mb.ToSubspace(CommutatorAndFixedOf(mb, a).commutator);
      Subgroup ah = NormalClosure(am.linear, a);
      Subspace fixed = full.ToSubspace(CommutatorAndFixedOf(full, ah).fixed);
      for (size_t i = 0; i < blat.members.size(); ++i) {
        if (!blat.irreducible[i]) continue;
        const Subspace& y = blat.members[i];
        if (!wa.is_subspace_of(y)) continue;
        if (InvariantClosure(y, full.generator_matrices()) != full.Whole()) continue;
        ++instances;
        for (const Subspace& x : hlat.members) {
          if (x == full.Whole()) continue;
          EXPECT_TRUE(x.is_subspace_of(fixed));
        }
      }
    }
  }
  return instances;
}

TEST(Property, ProperSubmodulesCentralized) {
  LoadedGroup g = LoadGroup(CatalogSym4().file);
  EXPECT_GT(CheckProperSubmodulesCentralized(AffineGroup(
                2, 2, {{{0, 1}, {1, 0}}, {{0, 1}, {1, 1}}})),
            0u);
  EXPECT_GT(CheckProperSubmodulesCentralized(PermModuleSym4()), 0u);
  EXPECT_GT(CheckProperSubmodulesCentralized(Agl32()), 0u);
  EXPECT_GT(CheckProperSubmodulesCentralized(NaturalPlusTrivial()), 0u);
}

// Alt4 acting on U = (perm module) + (trivial)^k: whenever V <= Y with
// |V| = 8, |Y| = 16, V = [U,G], |C_V(O_2(G))| = 2 and C_Y(t) <= V for all
// involutions t, then U = Y C_U(G).
TEST(Property, Alt4ModuleDecomposition) {
  size_t instances = 0, rejected = 0;
  for (size_t k = 0; k <= 2; ++k) {
    AffineModel am = PermModuleAlt4(k);
    const Group& G = *am.group;
    ASSERT_EQ(am.linear.order(), 12u);
    SectionModule full = ModuleOf(am, am.linear);
    Subspace v = full.ToSubspace(CommutatorAndFixedOf(full, am.linear).commutator);
    ASSERT_EQ(v.dim(), 3u);
    Subgroup o2 = OpOf(am.linear, 2);
    Subspace cvo = v.Intersect(full.ToSubspace(CommutatorAndFixedOf(full, o2).fixed));
    ASSERT_EQ(cvo.dim(), 1u);
    Subspace cug = full.ToSubspace(CommutatorAndFixedOf(full, am.linear).fixed);
    std::vector<Subspace> inv_fixed;
    am.linear.members().for_each([&](Elem x) {
      if (G.order(x) == 2) {
        inv_fixed.push_back(full.ToSubspace(
            CommutatorAndFixedOf(full, Generate(G, {x})).fixed));
      }
    });
    std::set<Subspace> ys;
    for (const Vec& u : full.Whole().Vectors()) {
      Subspace y = v + Subspace::Span(2, full.dim(), {u});
      if (y.dim() == 4) ys.insert(y);
    }
    for (const Subspace& y : ys) {
      bool ok = true;
      for (const Subspace& f : inv_fixed) ok &= y.Intersect(f).is_subspace_of(v);
      if (!ok) {
        ++rejected;
        continue;
      }
      ++instances;
      EXPECT_EQ(y + cug, full.Whole());
    }
  }
  EXPECT_GT(instances, 0u);
  EXPECT_GT(rejected, 0u);
}

}  // namespace
}  // namespace fusionloc
