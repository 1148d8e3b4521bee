#ifndef FUSIONLOC_G2STUDY_H_
#define FUSIONLOC_G2STUDY_H_

#include <array>
#include <cstdint>
#include <memory>
#include <optional>
#include <string>

#include "fusionloc/automorphism.h"
#include "fusionloc/group.h"
#include "fusionloc/report.h"

namespace fusionloc {

// Q8 o Q8 as Q8 (x) 1 times 1 (x) Q8 inside GL_4(3), acting on the 80
// nonzero vectors of F_3^4. i = [[0,1],[-1,0]], j = [[1,1],[1,-1]].
struct Q8CentralProduct {
  std::shared_ptr<const Group> universe;
  Subgroup q, p1, p2, z;
  Elem i = 0, j = 0, iy = 0, jy = 0;
};
Q8CentralProduct BuildQ8CentralProduct();

struct Q8Facts {
  uint64_t order = 0;
  uint64_t center = 0;
  uint64_t involutions = 0;
  uint64_t aut = 0;
  uint64_t out = 0;
  bool frattini_quotient_elementary = false;  // Q/Z elementary abelian
  bool has_elementary_8 = false;              // plus type
};
Q8Facts ComputeQ8Facts(const Q8CentralProduct& m);
ReportNode Q8Report(const Q8Facts& f);

// The order-1152 group 2^{1+4}_+.(S3 x S3) with named witnesses.
//
// Inside GL_4(3) the normalizer of Q8 o Q8 has no D8 over Z meeting Q in Z
// (every admissible t commutes with the tensor swap), so the model is the
// fiber product of K = <H1 H2, y0, t0> <= GL_4(3) with a D8 <= GL_2(3)
// over their common C2 x C2 quotient, taken modulo the diagonal -1. It is
// realized by Kronecker products in GL_8(3), acting on the union of the
// orbits of the standard basis vectors.
struct TildeCModel {
  std::shared_ptr<const Group> universe;
  Subgroup group;
  Elem i = 0, j = 0, iy = 0, jy = 0, d1 = 0, d2 = 0, y = 0, t = 0;
  Subgroup q, p1, p2, z, d, h1, h2, t_sub, s, s_star, c_star;
  // Position of t among the search witnesses, and their number.
  uint64_t t_rank = 0;
  uint64_t t_witnesses = 0;
};

enum class TChoice { kFirst, kLast };

// Throws InternalError when no admissible t exists or the result does not
// have order 1152.
TildeCModel AssembleTildeC(TChoice choice = TChoice::kFirst);

// The same t-search run inside N_{GL_4(3)}(Q) on the 80 points.
struct TSearchStats {
  uint64_t candidates = 0;
  uint64_t admissible = 0;   // t^2 = 1, inverts D, swaps i,j and i^y,j^y
  uint64_t commute_with_y = 0;
  uint64_t witnesses = 0;    // additionally <y,t> = D8 with centre Z
};
TSearchStats SearchTInGL43();
// Assembles in degree 80; throws InternalError when the search exhausts,
// which it does.
TildeCModel AssembleTildeCInGL43();

// A copy of `m` with the points renamed by a seeded random permutation.
TildeCModel Relabeled(const TildeCModel& m, uint64_t seed);

ReportNode VerifyTildeC(const TildeCModel& m);

// An explicit isomorphism between the two assembled groups; throws
// InternalError when none exists.
GeneratorMap UniquenessTildeC(const TildeCModel& a, const TildeCModel& b);

// Checks an Aut(G2(3)) generator file with subgroup blocks M_G and C_G.
// SKIPPED when `path` is empty or missing.
ReportNode IngestAutG23(const std::optional<std::string>& path);

struct G2Options {
  std::optional<std::string> ingest;
};
// Q8 o Q8 facts, the degree-80 search, the assembled model, its
// verification and uniqueness, and the ingest pipeline.
ReportNode G2Study(const G2Options& opt = {});

}  // namespace fusionloc

#endif  // FUSIONLOC_G2STUDY_H_
