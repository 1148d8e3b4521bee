// fusionloc: command-line front end.
//
//   fusionloc analyze FILE --p P [--subgroup NAME]
//   fusionloc locality FILE --p P --objects PRESET [--verify] [--word-cap K]
//                      [--factorize "(1 2 3)"]
//   fusionloc g2 [--ingest FILE]
//
// Every command prints a report tree (text, or JSON with --json). Exit
// status: 0 when the root is PASS or SKIPPED, 1 on FAIL, 2 for bad input,
// 3 when a cap is exceeded, 4 on an internal error.

#include <chrono>
#include <iostream>
#include <sstream>
#include <string>
#include <vector>

#include "CLI11.hpp"
#include "fusionloc/caps.h"
#include "fusionloc/core.h"
#include "fusionloc/errors.h"
#include "fusionloc/fusion.h"
#include "fusionloc/g2study.h"
#include "fusionloc/group_file.h"
#include "fusionloc/locality.h"
#include "fusionloc/report.h"

namespace fl = fusionloc;

namespace {

struct Common {
  bool json = false;
};

double Since(std::chrono::steady_clock::time_point t0) {
  return std::chrono::duration<double, std::milli>(
             std::chrono::steady_clock::now() - t0)
      .count();
}

std::string Label(const fl::LoadedGroup& g, const fl::Subgroup& h) {
  for (const auto& [name, sub] : g.named) {
    if (sub == h) return name + " order " + std::to_string(h.order());
  }
  return fl::Describe(h);
}

// A named Sylow p-subgroup when the file provides one, else by ascent.
fl::Subgroup SylowFor(const fl::LoadedGroup& g, unsigned p) {
  uint64_t want = fl::PPart(g.whole.order(), p);
  for (const auto& [name, sub] : g.named) {
    if (sub.order() == want && fl::IsPGroup(sub, p)) return sub;
  }
  return fl::Sylow(g.whole, p);
}

void Validate(unsigned p) {
  if (p < 2 || fl::PrimeDivisors(p).size() != 1 || fl::PrimeDivisors(p)[0] != p) {
    throw fl::InputError("--p must be a prime, got " + std::to_string(p));
  }
}

fl::ReportNode LargenessNode(const fl::FusionSystem& f, const fl::LoadedGroup& g,
                             const fl::Subgroup& q) {
  fl::ReportNode r;
  r.name = "largeness of " + Label(g, q);
  if (!q.is_subgroup_of(f.sylow())) {
    throw fl::InputError("subgroup " + Label(g, q) + " is not inside S");
  }
  fl::LargenessReport lr = fl::IsLargeInFusion(f, q);
  r.Check("C_S(Q) <= Q", lr.self_centralizing);
  for (const fl::CriterionVerdict& c : lr.criteria) {
    fl::ReportNode& n = r.Check(c.name, c.holds,
                                c.witness.empty() ? std::nullopt
                                                  : std::optional(c.witness));
    n.millis = c.millis;
  }
  fl::GroupLargeness gl = fl::IsLargeInGroup(f.group(), q, f.p());
  r.Check("large in G", gl.large,
          gl.witness.empty() ? std::nullopt : std::optional(gl.witness));
  r.Finish();
  return r;
}

fl::ReportNode Analyze(const std::string& file, unsigned p,
                       const std::string& subgroup) {
  Validate(p);
  fl::LoadedGroup g = fl::LoadGroup(fl::ReadGroupFile(file));
  fl::Subgroup s = SylowFor(g, p);
  fl::FusionSystem f(g.whole, s, p);
  fl::ReportNode root;
  root.name = "analyze " + file;
  root.Check("group", true,
             "order " + std::to_string(g.whole.order()) + ", Sylow " +
                 std::to_string(p) + "-subgroup order " + std::to_string(s.order()));

  fl::ReportNode& cls = root.Add(fl::ReportNode{});
  cls.name = "subgroup classes";
  const auto& subs = f.subgroups();
  for (const fl::SubgroupClassReport& c : fl::ClassifySubgroups(f)) {
    std::ostringstream w;
    w << "size " << c.class_size;
    if (c.centric) w << ", centric";
    if (c.radical) w << ", radical";
    if (c.essential) w << ", essential";
    if (c.weakly_closed) w << ", weakly closed";
    if (c.strongly_closed) w << ", strongly closed";
    cls.Check(Label(g, subs[c.representative]), true, w.str());
  }
  fl::Subgroup y = fl::YSubgroup(g.whole, p);
  root.Check("Y_G", true, Label(g, y));
  std::vector<fl::Subgroup> ess = fl::EssentialSubgroups(f);
  std::string names;
  for (const fl::Subgroup& e : ess) names += (names.empty() ? "" : ", ") + Label(g, e);
  root.Check("essential subgroups", true,
             std::to_string(ess.size()) + (ess.empty() ? "" : ": " + names));
  if (!subgroup.empty()) root.Add(LargenessNode(f, g, g[subgroup]));
  root.Finish();
  return root;
}

fl::ObjectSet Objects(const fl::FusionSystem& f, const fl::LoadedGroup& g,
                      const std::string& spec) {
  if (spec.rfind("seed=", 0) == 0) {
    std::vector<fl::Subgroup> seeds;
    std::stringstream in(spec.substr(5));
    std::string name;
    while (std::getline(in, name, ',')) seeds.push_back(g[name]);
    if (seeds.empty()) throw fl::InputError("seed= needs subgroup names");
    return fl::ObjectSetFromSeeds(f, seeds);
  }
  return fl::BuildObjectSet(f, fl::ParseObjectPreset(spec));
}

fl::ReportNode LocalityCmd(const std::string& file, unsigned p,
                           const std::string& objects, bool verify,
                           int word_cap, const std::string& factorize,
                           uint64_t seed) {
  Validate(p);
  fl::LoadedGroup g = fl::LoadGroup(fl::ReadGroupFile(file));
  fl::Subgroup s = SylowFor(g, p);
  fl::FusionSystem f(g.whole, s, p);
  fl::ObjectSet delta = Objects(f, g, objects);
  fl::Locality l(delta);
  fl::ReportNode root;
  root.name = "locality " + file;
  root.Check("L_Delta(G)", true,
             "|L| = " + std::to_string(l.size()) + ", " +
                 std::to_string(delta.size()) + " objects (" + objects + ")");
  if (verify) {
    fl::VerifyOptions opt;
    opt.word_cap = word_cap;
    opt.seed = seed;
    root.Add(fl::VerifyLocality(l, opt));
    root.Add(fl::FlagsReport(fl::ComputeLocalityFlags(l, std::nullopt)));
  }
  if (!factorize.empty()) {
    fl::Elem e = g.elem(factorize);
    if (!l.contains(e)) throw fl::InputError(factorize + " is not in L");
    fl::AlperinFactorization a = l.Factorize(e);
    std::optional<std::string> bad = l.CheckFactorization(a);
    root.Check("Alperin factorization of " + factorize, !bad,
               bad ? *bad : fl::FormatFactorization(l, a));
  }
  root.Finish();
  return root;
}

int Emit(fl::ReportNode r, const Common& c, uint64_t seed) {
  if (c.json) {
    std::cout << fl::ToJson(r, 2) << "\n";
  } else {
    std::cout << "caps: " << fl::GlobalCaps().Describe() << "; seed " << seed
              << "\n"
              << fl::ToText(r);
  }
  if (r.status == fl::Status::kFail) {
    std::cerr << "FAIL: " << r.FirstFailure() << "\n";
    return 1;
  }
  return 0;
}

}  // namespace

int main(int argc, char** argv) {
  CLI::App app{"Fusion systems, localities and the C~ study over small groups"};
  app.require_subcommand(1);
  Common common;
  uint64_t seed = fl::VerifyOptions{}.seed;
  app.add_flag("--json", common.json, "Print the report as JSON");

  std::string file, subgroup, objects, factorize, ingest;
  unsigned p = 2;
  bool verify = false;
  int word_cap = 3;

  CLI::App* analyze = app.add_subcommand("analyze", "Classify subgroups and test largeness");
  analyze->add_option("file", file, "Group file")->required();
  analyze->add_option("--p", p, "Prime")->required();
  analyze->add_option("--subgroup", subgroup, "Named subgroup for the largeness report");
  analyze->add_flag("--json", common.json, "Print the report as JSON");

  CLI::App* locality = app.add_subcommand("locality", "Build and verify L_Delta(G)");
  locality->add_option("file", file, "Group file")->required();
  locality->add_option("--p", p, "Prime")->required();
  locality->add_option("--objects", objects,
                       "centric, cp, cstar, subcentric or seed=NAME,NAME")
      ->required();
  locality->add_flag("--verify", verify, "Run the locality verifier");
  locality->add_option("--word-cap", word_cap, "Longest word checked")
      ->check(CLI::Range(1, 6));
  locality->add_option("--seed", seed, "Seed for sampled word checks");
  locality->add_option("--factorize", factorize, "Element in cycle notation");
  locality->add_flag("--json", common.json, "Print the report as JSON");

  CLI::App* g2 = app.add_subcommand("g2", "Assemble and verify C~");
  g2->add_option("--ingest", ingest, "Aut(G2(3)) generator file");
  g2->add_flag("--json", common.json, "Print the report as JSON");

  CLI11_PARSE(app, argc, argv);

  auto t0 = std::chrono::steady_clock::now();
  try {
    fl::GlobalCaps();  // reject a bad FUSIONLOC_CAPS before any work
    fl::ReportNode r;
    if (*analyze) {
      r = Analyze(file, p, subgroup);
    } else if (*locality) {
      r = LocalityCmd(file, p, objects, verify, word_cap, factorize, seed);
    } else {
      fl::G2Options opt;
      if (!ingest.empty()) opt.ingest = ingest;
      r = fl::G2Study(opt);
    }
    r.millis = Since(t0);
    return Emit(std::move(r), common, seed);
  } catch (const fl::InputError& e) {
    std::cerr << "input error: " << e.what() << "\n";
    return 2;
  } catch (const fl::PreconditionError& e) {
    std::cerr << "input error: " << e.what() << "\n";
    return 2;
  } catch (const fl::ResourceError& e) {
    std::cerr << "cap exceeded: " << e.what() << "\n";
    return 3;
  } catch (const fl::InternalError& e) {
    std::cerr << "internal error: " << e.what() << "\n";
    return 4;
  }
}
