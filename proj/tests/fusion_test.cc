#include <gtest/gtest.h>

#include <map>
#include <set>

#include "fusionloc/catalog.h"
#include "fusionloc/core.h"
#include "fusionloc/errors.h"
#include "fusionloc/fusion.h"
#include "fusionloc/group_file.h"
#include "fusionloc/modrep.h"

namespace fusionloc {
namespace {

struct Instance {
  std::string name;
  LoadedGroup g;
  unsigned p;
  Subgroup s;
};

Instance Make(const NamedGroup& n, unsigned p) {
  LoadedGroup g = LoadGroup(n.file);
  Subgroup s = g.named.count("S") && p == 2 ? g["S"] : Sylow(g.whole, p);
  return {n.name + "/p" + std::to_string(p), std::move(g), p, s};
}

std::vector<Instance> Corpus() {
  std::vector<Instance> c;
  for (const char* n : {"sym3", "sym4", "alt4", "d8", "q8", "sl32", "sym4xc3", "d8xc3", "gl23", "alt5"}) {
    c.push_back(Make(CatalogByName(n), 2));
  }
  for (const char* n : {"sym4", "alt5", "gl23", "sym3"}) c.push_back(Make(CatalogByName(n), 3));
  return c;
}

// Restriction of c_g to P as an element map.
std::vector<Elem> MapOf(const Subgroup& p, Elem g) {
  std::vector<Elem> r;
  for (Elem x : p.elements()) r.push_back(p.group().conj(x, g));
  return r;
}

TEST(Fusion, Construction) {
  LoadedGroup g = LoadGroup(CatalogSym4().file);
  EXPECT_NO_THROW(FusionSystem(g.whole, g["S"], 2));
  EXPECT_THROW(FusionSystem(g.whole, g["V4"], 2), InputError);
  EXPECT_THROW(FusionSystem(g.whole, g["S"], 3), InputError);
  FusionSystem fp(g["S"], g["S"], 2);
  EXPECT_EQ(fp.classes().size(), ConjugacyClassesOfSubgroups(fp.subgroups(), g["S"]).size());
}

TEST(Fusion, HomSetExamples) {
  LoadedGroup g = LoadGroup(CatalogSym4().file);
  FusionSystem f(g.whole, g["S"], 2);
  EXPECT_EQ(HomSet(f, g["Z"], g["Z"]).size(), 1u);
  EXPECT_EQ(HomSet(f, g["Z"], g["V4"]).size(), 3u);
  for (const Subgroup& p : f.subgroups()) EXPECT_GE(HomSet(f, p, g["S"]).size(), 1u);
}

TEST(Fusion, HomSetsAgainstDistinctMaps) {
  for (const char* n : {"sym4", "gl23", "d8xc3"}) {
    Instance in = Make(CatalogByName(n), 2);
    FusionSystem f(in.g.whole, in.s, 2);
    const auto& subs = f.subgroups();
    for (size_t i = 0; i < subs.size(); i += 3) {
      for (size_t j = 0; j < subs.size(); j += 5) {
        std::set<std::vector<Elem>> maps;
        in.g.whole.members().for_each([&](Elem x) {
          bool inside = true;
          for (Elem y : subs[i].elements()) inside &= subs[j].contains(in.g.whole.group().conj(y, x));
          if (inside) maps.insert(MapOf(subs[i], x));
        });
        auto homs = HomSet(f, subs[i], subs[j]);
        EXPECT_EQ(homs.size(), maps.size()) << n;
        for (const Morphism& m : homs) EXPECT_TRUE(maps.count(MapOf(subs[i], m.witness)));
      }
    }
  }
}

TEST(Fusion, ClassificationSym4) {
  LoadedGroup g = LoadGroup(CatalogSym4().file);
  FusionSystem f(g.whole, g["S"], 2);
  auto reps = ClassifySubgroups(f);
  auto find = [&](const Subgroup& x) {
    size_t c = f.ClassOf(f.IndexOf(x));
    return reps[c];
  };
  SubgroupClassReport v = find(g["V4"]);
  EXPECT_TRUE(v.centric && v.radical && v.fully_normalized && v.weakly_closed && v.strongly_closed);
  EXPECT_TRUE(v.essential);
  SubgroupClassReport z = find(g["Z"]);
  EXPECT_FALSE(z.weakly_closed);
  EXPECT_EQ(z.class_size, 3u);
  SubgroupClassReport s = find(g["S"]);
  EXPECT_TRUE(s.centric && s.fully_normalized && s.weakly_closed);
}

// Definitions evaluated by brute force for every class report.
TEST(Fusion, ClassificationAgainstDefinitions) {
  for (const Instance& in : Corpus()) {
    FusionSystem f(in.g.whole, in.s, in.p);
    const auto& subs = f.subgroups();
    const Group& G = in.g.whole.group();
    auto reps = ClassifySubgroups(f);
    for (size_t c = 0; c < reps.size(); ++c) {
      const auto& members = f.classes()[c];
      // Class = G-conjugates inside S.
      for (size_t m : members) {
        EXPECT_TRUE(Transporter(in.g.whole, subs[members[0]], subs[m]).has_value());
      }
      size_t maxn = 0;
      for (size_t m : members) maxn = std::max(maxn, Normalizer(in.s, subs[m]).order());
      EXPECT_EQ(Normalizer(in.s, subs[reps[c].representative]).order(), maxn);
      // Fully normalized implies fully centralized for realized systems.
      EXPECT_TRUE(reps[c].fully_centralized) << in.name;
      bool strongly = true;
      const Subgroup& p = subs[reps[c].representative];
      for (Elem x : p.elements())
        in.g.whole.members().for_each([&](Elem h) {
          Elem y = G.conj(x, h);
          if (in.s.contains(y) && !p.contains(y)) strongly = false;
        });
      EXPECT_EQ(reps[c].strongly_closed, strongly) << in.name;
      if (reps[c].essential) EXPECT_TRUE(reps[c].centric && reps[c].radical) << in.name;
    }
  }
}

TEST(Fusion, StronglyPEmbeddedAgainstBrute) {
  size_t checked = 0, positive = 0;
  for (const char* n : {"sym3", "sym4", "alt4", "alt5", "sl32", "gl23", "d8xc3"}) {
    LoadedGroup g = LoadGroup(CatalogByName(n).file);
    for (const Subgroup& h : AllSubgroups(g.whole)) {
      if (h.order() > 360) continue;
      for (unsigned p : {2u, 3u}) {
        bool fast = HasStronglyPEmbedded(h, p);
        EXPECT_EQ(fast, HasStronglyPEmbeddedBrute(h, p)) << n << " " << Describe(h) << " p=" << p;
        positive += fast;
        ++checked;
      }
    }
  }
  EXPECT_GT(positive, 10u);
  EXPECT_GT(checked, 500u);
}

TEST(Fusion, Essentials) {
  LoadedGroup g = LoadGroup(CatalogSym4().file);
  FusionSystem f(g.whole, g["S"], 2);
  auto ess = EssentialSubgroups(f);
  ASSERT_EQ(ess.size(), 1u);
  EXPECT_EQ(ess[0], g["V4"]);

  Instance sl = Make(CatalogSL32(), 2);
  FusionSystem fs(sl.g.whole, sl.s, 2);
  auto e2 = EssentialSubgroups(fs);
  ASSERT_EQ(e2.size(), 2u);
  for (const Subgroup& r : e2) {
    EXPECT_EQ(r.order(), 4u);
    EXPECT_TRUE(IsElementaryAbelian(r, 2));
    EXPECT_EQ(OutF(fs, r).group->size(), 6u);
  }
  LoadedGroup d8 = LoadGroup(CatalogD8().file);
  EXPECT_TRUE(EssentialSubgroups(FusionSystem(d8.whole, d8.whole, 2)).empty());
}

TEST(Fusion, EssentialLocalStructure) {
  LoadedGroup g = LoadGroup(CatalogSym4().file);
  FusionSystem f(g.whole, g["S"], 2);
  EssentialStructure e = EssentialLocalStructure(f, g["V4"]);
  ASSERT_TRUE(e.applicable) << e.reason;
  EXPECT_EQ(e.q, 2u);
  EXPECT_EQ(e.offender_image, 2u);
  EXPECT_EQ(e.out_p_order, 6u);
  EXPECT_TRUE(e.sl2_order);
  EXPECT_TRUE(e.sl2_sylow);
  ASSERT_TRUE(e.natural.has_value());
  EXPECT_TRUE(*e.natural);
  EXPECT_FALSE(EssentialLocalStructure(f, g["S"]).applicable);

  // Every essential subgroup in the corpus satisfies the conclusions.
  size_t seen = 0;
  for (const Instance& in : Corpus()) {
    FusionSystem fc(in.g.whole, in.s, in.p);
    for (const Subgroup& r : EssentialSubgroups(fc)) {
      EssentialStructure x = EssentialLocalStructure(fc, r);
      if (!x.applicable) continue;
      ++seen;
      EXPECT_EQ(x.offender_image, x.q) << in.name;
      EXPECT_TRUE(x.sl2_order && x.sl2_sylow) << in.name;
      if (x.natural) EXPECT_TRUE(*x.natural) << in.name;
      EXPECT_GE(x.frattini_quotient, x.q * x.q);
    }
  }
  EXPECT_GE(seen, 4u);
}

TEST(Property, OutActsFaithfullyOnFrattiniQuotient) {
  for (const Instance& in : Corpus()) {
    FusionSystem f(in.g.whole, in.s, in.p);
    auto reps = ClassifySubgroups(f);
    for (const auto& r : reps) {
      if (!r.centric || !r.radical) continue;
      const Subgroup& p = f.subgroups()[r.representative];
      SectionModule m = BuildSectionModule(p, Frattini(p), Normalizer(in.g.whole, p), in.p);
      EXPECT_EQ(m.Kernel(), OutF(f, p).kernel) << in.name << " " << Describe(p);
    }
  }
}

TEST(Fusion, FullyNormalize) {
  LoadedGroup g = LoadGroup(CatalogSym4().file);
  FusionSystem f(g.whole, g["S"], 2);
  Subgroup four = g.sub({"(1 3)", "(2 4)"});
  Morphism a = FullyNormalize(f, four);
  EXPECT_EQ(a.witness, 0u);
  EXPECT_EQ(a.source.order(), 8u);
  Morphism b = FullyNormalize(f, g.sub({"(1 3)"}));
  EXPECT_EQ(b.source.order(), 4u);
  for (const Instance& in : Corpus()) {
    FusionSystem fc(in.g.whole, in.s, in.p);
    for (const Subgroup& p : fc.subgroups()) {
      Morphism m = FullyNormalize(fc, p);
      EXPECT_EQ(m.source, Normalizer(in.s, p));
      EXPECT_TRUE(m.target.is_subgroup_of(in.s));
      EXPECT_TRUE(fc.IsFullyNormalized(ConjugateSubgroup(p, m.witness))) << in.name;
    }
  }
}

TEST(Property, CenterFullyNormalizedConjugate) {
  for (const Instance& in : Corpus()) {
    FusionSystem f(in.g.whole, in.s, in.p);
    for (const Subgroup& r : f.subgroups()) {
      Morphism a = FullyNormalize(f, Center(r));
      Subgroup r2 = ConjugateSubgroup(r, a.witness);
      ASSERT_TRUE(r2.is_subgroup_of(in.s));
      EXPECT_EQ(f.ClassOf(f.IndexOf(r2)), f.ClassOf(f.IndexOf(r)));
      EXPECT_TRUE(f.IsFullyNormalized(Center(r2))) << in.name;
    }
  }
}

TEST(Property, FullyNormalizedConjugatesStayCentral) {
  size_t checked = 0;
  for (const Instance& in : Corpus()) {
    FusionSystem f(in.g.whole, in.s, in.p);
    const auto& subs = f.subgroups();
    for (const Subgroup& q : subs) {
      if (f.ClassMembers(q).size() != 1) continue;
      Subgroup zq = Center(q);
      for (const Subgroup& u : subs) {
        if (!u.is_subgroup_of(zq)) continue;
        for (size_t v : f.ClassMembers(u)) {
          if (!f.IsFullyNormalized(subs[v])) continue;
          EXPECT_TRUE(subs[v].is_subgroup_of(zq)) << in.name;
          ++checked;
        }
      }
    }
  }
  EXPECT_GT(checked, 50u);
}

TEST(Fusion, NormalizerSubsystem) {
  LoadedGroup g = LoadGroup(CatalogSym4().file);
  FusionSystem f(g.whole, g["S"], 2);
  FusionSystem nv = NormalizerSubsystem(f, g["V4"]);
  EXPECT_EQ(nv.group(), g.whole);
  FusionSystem ns = NormalizerSubsystem(f, g["S"]);
  EXPECT_EQ(ns.group(), g["S"]);
  FusionSystem nz = NormalizerSubsystem(f, g["Z"]);
  EXPECT_EQ(nz.group(), g["S"]);
  EXPECT_EQ(nz.sylow(), g["S"]);
  // Anything not fully normalized is rejected.
  for (const Subgroup& p : f.subgroups()) {
    if (!f.IsFullyNormalized(p)) EXPECT_THROW(NormalizerSubsystem(f, p), PreconditionError);
  }
}

// Q normal in F by the definition: every c_g : P -> S extends to some c_h
// on PQ with h in C_G(P) g, Q^h = Q.
bool NormalBrute(const FusionSystem& f, const Subgroup& q) {
  if (!IsNormalIn(q, f.sylow())) return false;
  const Group& G = f.universe();
  for (const Subgroup& p : f.subgroups()) {
    const Subgroup c = Centralizer(f.group(), p);
    bool ok = true;
    TransporterSet(f.group(), p, f.sylow()).for_each([&](Elem g) {
      if (!ok) return;
      bool ext = false;
      c.members().for_each([&](Elem x) {
        Elem h = G.mul(x, g);
        if (!ext && ConjugateSubgroup(q, h) == q) ext = true;
      });
      ok = ext;
    });
    if (!ok) return false;
  }
  return true;
}

TEST(Fusion, NormalityExamplesAndBrute) {
  LoadedGroup g = LoadGroup(CatalogSym4().file);
  FusionSystem f(g.whole, g["S"], 2);
  EXPECT_TRUE(IsNormalInF(f, g["V4"]).normal());
  EXPECT_FALSE(IsNormalInF(f, g["Z"]).normal());
  FusionSystem fs(g["S"], g["S"], 2);
  EXPECT_TRUE(IsNormalInF(fs, g["S"]).normal());
  for (const char* n : {"sym4", "gl23", "sl32", "d8xc3", "alt4"}) {
    Instance in = Make(CatalogByName(n), 2);
    FusionSystem fc(in.g.whole, in.s, 2);
    for (const Subgroup& q : fc.subgroups()) {
      NormalityReport r = IsNormalInF(fc, q);  // throws on disagreement
      EXPECT_EQ(r.normal(), NormalBrute(fc, q)) << n << " " << Describe(q);
    }
  }
}

TEST(Largeness, GroupExamples) {
  LoadedGroup g = LoadGroup(CatalogSym4().file);
  EXPECT_TRUE(IsLargeInGroup(g.whole, g["V4"], 2).large);
  EXPECT_FALSE(IsLargeInGroup(g.whole, g["Z"], 2).large);
  LoadedGroup d8 = LoadGroup(CatalogD8().file);
  EXPECT_TRUE(IsLargeInGroup(d8.whole, d8.whole, 2).large);
}

TEST(Largeness, FusionExamples) {
  LoadedGroup g = LoadGroup(CatalogSym4().file);
  FusionSystem f(g.whole, g["S"], 2);
  LargenessReport v = IsLargeInFusion(f, g["V4"]);
  EXPECT_TRUE(v.large);
  EXPECT_EQ(v.criteria.size(), 7u);
  EXPECT_FALSE(IsLargeInFusion(f, g["Z"]).large);
  FusionSystem fs(g["S"], g["S"], 2);
  EXPECT_TRUE(IsLargeInFusion(fs, g["S"]).large);

  LoadedGroup x = LoadGroup(CatalogSym4xC3().file);
  FusionSystem fx(x.whole, x["S"], 2);
  EXPECT_FALSE(IsLargeInGroup(x.whole, x["V4"], 2).large);
  EXPECT_TRUE(IsLargeInFusion(fx, x["V4"]).large);
}

// Over every subgroup of S in the corpus: criteria agree (checked inside),
// group-large implies fusion-large, and the consequences for large Q.
TEST(Property, LargenessSuite) {
  size_t large_count = 0;
  for (const Instance& in : Corpus()) {
    FusionSystem f(in.g.whole, in.s, in.p);
    const auto& subs = f.subgroups();
    std::vector<Subgroup> large;
    for (const Subgroup& q : subs) {
      LargenessReport r = IsLargeInFusion(f, q);
      if (IsLargeInGroup(in.g.whole, q, in.p).large) EXPECT_TRUE(r.large) << in.name;
      if (r.large) large.push_back(q);
    }
    large_count += large.size();
    for (const Subgroup& q : large) {
      // (a) O_p(N_F(Q)) is large.
      FusionSystem nq = NormalizerSubsystem(f, q);
      EXPECT_TRUE(IsLargeInFusion(f, OpOfFusion(nq)).large) << in.name;
      // (b) Q normal in N_F(U) for 1 != U <= Z(Q).
      for (const Subgroup& u : AllSubgroups(Center(q))) {
        if (u.is_trivial()) continue;
        EXPECT_TRUE(IsNormalInRealized(Normalizer(in.g.whole, u), Normalizer(in.s, u), q));
      }
      // (c) Q normal in S.
      EXPECT_TRUE(IsNormalIn(q, in.s));
      // (d) QR large.
      for (const Subgroup& r : large) EXPECT_TRUE(IsLargeInFusion(f, Join(q, r)).large);
    }
  }
  EXPECT_GT(large_count, 10u);
}

// Q large in G and 1 != P normalized by Q: N_G(P) has characteristic p.
TEST(Property, LargeGroupNormalizersCharacteristicP) {
  size_t checked = 0;
  for (const Instance& in : Corpus()) {
    FusionSystem f(in.g.whole, in.s, in.p);
    for (const Subgroup& q : f.subgroups()) {
      if (!IsLargeInGroup(in.g.whole, q, in.p).large) continue;
      for (const Subgroup& p : f.subgroups()) {
        if (p.is_trivial() || !CommutatorSubgroup(p, q).is_subgroup_of(p)) continue;
        EXPECT_TRUE(IsCharacteristicP(Normalizer(in.g.whole, p), in.p)) << in.name;
        ++checked;
      }
    }
  }
  EXPECT_GT(checked, 20u);
}

TEST(Fusion, Subcentric) {
  LoadedGroup g = LoadGroup(CatalogSym4().file);
  FusionSystem f(g.whole, g["S"], 2);
  Bitset s = SubcentricSet(f);
  EXPECT_EQ(s.count(), f.subgroups().size());
  EXPECT_EQ(OpOfFusion(f), g["V4"]);
  FusionSystem fs(g["S"], g["S"], 2);
  EXPECT_EQ(SubcentricSet(fs).count(), fs.subgroups().size());
  // SL_3(2) at p = 2: both four-groups are essential, O_2(F) = 1.
  Instance sl = Make(CatalogSL32(), 2);
  FusionSystem fa(sl.g.whole, sl.s, 2);
  EXPECT_FALSE(SubcentricSet(fa).test(0));
  EXPECT_TRUE(OpOfFusion(fa).is_trivial());
  for (const Instance& in : Corpus()) SubcentricSet(FusionSystem(in.g.whole, in.s, in.p));
}

TEST(Fusion, HyperfocalAndFocal) {
  LoadedGroup g = LoadGroup(CatalogSym4().file);
  FusionSystem f(g.whole, g["S"], 2);
  HyperfocalFocal hf = HyperfocalAndFocal(f);
  EXPECT_EQ(hf.hyp, g["V4"]);
  FusionSystem fs(g["S"], g["S"], 2);
  EXPECT_TRUE(HyperfocalAndFocal(fs).hyp.is_trivial());
  for (const Instance& in : Corpus()) {
    FusionSystem fc(in.g.whole, in.s, in.p);
    HyperfocalFocal x = HyperfocalAndFocal(fc);
    EXPECT_TRUE(x.hyp.is_subgroup_of(x.foc));
    EXPECT_EQ(x.hyp, Intersect(in.s, UpperPOf(in.g.whole, in.p))) << in.name;
    EXPECT_EQ(x.foc, Intersect(in.s, DerivedSubgroup(in.g.whole))) << in.name;
  }
}

TEST(Fusion, SubsystemGeneration) {
  LoadedGroup g = LoadGroup(CatalogSym4().file);
  FusionSystem f(g.whole, g["S"], 2);
  FusionSystem nv = NormalizerSubsystem(f, g["V4"]);
  FusionSystem ns = NormalizerSubsystem(f, g["S"]);
  Elem x = g.elem("(2 3)");
  Subgroup z = g["Z"];
  Subgroup target = ConjugateSubgroup(z, x);
  Morphism probe{z, target, x};
  ASSERT_NE(target, z);
  EXPECT_TRUE(SubsystemGeneratedContains(f, {&nv}, probe));
  EXPECT_FALSE(SubsystemGeneratedContains(f, {&ns}, probe));
  EXPECT_TRUE(SubsystemGeneratedContains(f, {&ns}, Morphism{z, z, 0}));
  // Alperin: the normalizers of S and of the essential subgroups generate.
  Instance sl = Make(CatalogSL32(), 2);
  FusionSystem fsl(sl.g.whole, sl.s, 2);
  std::vector<FusionSystem> parts;
  parts.push_back(NormalizerSubsystem(fsl, sl.s));
  for (const Subgroup& r : EssentialSubgroups(fsl)) parts.push_back(NormalizerSubsystem(fsl, r));
  std::vector<const FusionSystem*> ptrs;
  for (const auto& p : parts) ptrs.push_back(&p);
  for (const Subgroup& p : fsl.subgroups()) {
    for (const Morphism& m : HomSet(fsl, p, sl.s)) {
      EXPECT_TRUE(SubsystemGeneratedContains(fsl, ptrs, m));
    }
  }
}

TEST(Fusion, ParabolicCharacteristic) {
  LoadedGroup g = LoadGroup(CatalogSym4().file);
  EXPECT_TRUE(ParabolicCharacteristic(FusionSystem(g.whole, g["S"], 2)));
  EXPECT_TRUE(ParabolicCharacteristic(FusionSystem(g["S"], g["S"], 2)));
  // Sym4 x C3 has the same 2-fusion as Sym4, so the fusion-level property
  // holds; the group-level one fails at N_G(S) = S x C3.
  LoadedGroup x = LoadGroup(CatalogSym4xC3().file);
  FusionSystem fx(x.whole, x["S"], 2);
  EXPECT_TRUE(ParabolicCharacteristic(fx));
  EXPECT_FALSE(GroupParabolicCharacteristic(fx));
  EXPECT_TRUE(GroupParabolicCharacteristic(FusionSystem(g.whole, g["S"], 2)));
}

}  // namespace
}  // namespace fusionloc
