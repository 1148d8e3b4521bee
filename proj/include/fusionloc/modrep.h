#ifndef FUSIONLOC_MODREP_H_
#define FUSIONLOC_MODREP_H_

#include <cstdint>
#include <memory>
#include <optional>
#include <vector>

#include "fusionloc/group.h"

namespace fusionloc {

// Vectors over F_p for p in {2, 3}, one coordinate per byte. Matrices act on
// row vectors from the right, so v * (MN) = (v * M) * N matches right
// conjugation in the group.
using Vec = std::vector<uint8_t>;
using Matrix = std::vector<Vec>;

Vec Apply(const Vec& v, const Matrix& m, unsigned p);
Matrix MatMul(const Matrix& a, const Matrix& b, unsigned p);
Matrix IdentityMatrix(size_t n);
// Index of v in 0..p^n-1 (little-endian base p) and back.
uint64_t VecCode(const Vec& v, unsigned p);
Vec VecFromCode(uint64_t code, size_t n, unsigned p);

// A subspace of F_p^n stored as a reduced row echelon basis, so equal
// subspaces have equal representations.
class Subspace {
 public:
  Subspace() = default;
  Subspace(unsigned p, size_t n) : p_(p), n_(n) {}
  static Subspace Span(unsigned p, size_t n, const std::vector<Vec>& vs);
  static Subspace Whole(unsigned p, size_t n);

  unsigned p() const { return p_; }
  size_t ambient_dim() const { return n_; }
  size_t dim() const { return rows_.size(); }
  const std::vector<Vec>& rows() const { return rows_; }

  bool contains(const Vec& v) const;
  bool is_subspace_of(const Subspace& o) const;
  Subspace operator+(const Subspace& o) const;
  Subspace Intersect(const Subspace& o) const;
  // Every vector, in code order of the coefficient tuples.
  std::vector<Vec> Vectors() const;

  friend bool operator==(const Subspace&, const Subspace&) = default;
  friend bool operator<(const Subspace& a, const Subspace& b) {
    if (a.dim() != b.dim()) return a.dim() < b.dim();
    return a.rows_ < b.rows_;
  }

 private:
  Vec Reduce(Vec v) const;  // v minus its projection onto the pivots
  void Insert(Vec v);

  unsigned p_ = 2;
  size_t n_ = 0;
  std::vector<Vec> rows_;
};

// The F_p H-module A/B. Coordinates are taken with respect to coset
// representatives basis[i] chosen greedily from A in element order.
class SectionModule {
 public:
  const Group& group() const { return top_.group(); }
  const Subgroup& top() const { return top_; }
  const Subgroup& bottom() const { return bottom_; }
  const Subgroup& actors() const { return actors_; }
  unsigned p() const { return p_; }
  size_t dim() const { return basis_.size(); }
  const std::vector<Elem>& basis() const { return basis_; }

  // Coordinates of aB; a must lie in A.
  Vec Coords(Elem a) const;
  // b_1^{v_1} ... b_n^{v_n}.
  Elem Lift(const Vec& v) const;
  // Matrix of conjugation by h (row i holds the coordinates of b_i^h).
  Matrix MatrixOf(Elem h) const;
  // Matrices of the generators of the actors.
  const std::vector<Matrix>& generator_matrices() const { return gen_mats_; }

  Subgroup ToSubgroup(const Subspace& w) const;
  // X must satisfy B <= X <= A.
  Subspace ToSubspace(const Subgroup& x) const;
  Subspace Zero() const { return Subspace(p_, dim()); }
  Subspace Whole() const { return Subspace::Whole(p_, dim()); }

  // C_H(A/B) as a subgroup of the actors.
  Subgroup Kernel() const;

 private:
  friend SectionModule BuildSectionModule(const Subgroup&, const Subgroup&,
                                          const Subgroup&, unsigned);
  Subgroup top_, bottom_, actors_;
  unsigned p_ = 2;
  std::vector<Elem> basis_;
  std::vector<int64_t> code_;  // universe element -> coset code, -1 outside A
  std::vector<Matrix> gen_mats_;
};

// Throws InputError unless B is normal in A, A/B is elementary abelian of
// exponent p, and H normalizes A and B.
SectionModule BuildSectionModule(const Subgroup& a, const Subgroup& b,
                                 const Subgroup& h, unsigned p);

// Smallest subspace containing w and invariant under the matrices.
Subspace InvariantClosure(const Subspace& w, const std::vector<Matrix>& gens);
bool IsInvariant(const Subspace& w, const std::vector<Matrix>& gens);

struct SubmoduleLattice {
  std::vector<Subspace> members;  // ascending in the Subspace order
  std::vector<bool> irreducible;  // member is a minimal nonzero submodule
  size_t composition_length = 0;
};

// Every H-invariant subspace, from cyclic submodules closed under sums.
// Throws ResourceError above dimension 16.
SubmoduleLattice SubmoduleLatticeOf(const SectionModule& m);

bool IsPReduced(const SectionModule& m);

struct CommutatorAndFixed {
  Subgroup commutator;  // [A/B, K] lifted to B <= X <= A
  Subgroup fixed;       // C_{A/B}(K) lifted likewise
};
CommutatorAndFixed CommutatorAndFixedOf(const SectionModule& m,
                                        const Subgroup& k);

// n when the module is a natural SL_n(2)-module for the induced image
// (n >= 2), else nullopt.
std::optional<unsigned> IsNaturalSLn2(const SectionModule& m);
// Same test over F_p for p in {2, 3}: image of order |SL_n(p)|, transitive
// on nonzero vectors with the matching stabilizer order.
std::optional<unsigned> IsNaturalSLnp(const SectionModule& m);

// [A/B, K, K] = 0.
bool QuadraticAction(const SectionModule& m, const Subgroup& k);

struct Offender {
  Subgroup a;
  uint64_t module_index = 0;  // |V / C_V(A)|
  uint64_t image_order = 0;   // |A / C_A(V)|
};
// Candidates A with |V/C_V(A)| <= |A/C_A(V)| and |A/C_A(V)| >= 2.
std::vector<Offender> Offenders(const SectionModule& m,
                                const std::vector<Subgroup>& candidates);

// G-invariant complement W to U1 in V, scanning the subgroups of V in
// canonical order. Throws PreconditionError when the hypotheses fail and
// InternalError when no complement exists.
Subgroup GaschutzComplement(const Subgroup& g, const Subgroup& v,
                            const Subgroup& u1, const Subgroup& u2,
                            const Subgroup& s);

// The affine group F_p^n : <linear> on p^n points (point k is the vector
// with code k). Translations are generated by the unit vectors.
struct AffineModel {
  std::shared_ptr<const Group> group;
  Subgroup translations;
  Subgroup linear;  // stabilizer of the zero vector
  unsigned p = 2;
  size_t n = 0;
  // The linear map m as a group element; throws InputError if absent.
  Elem ElementOf(const Matrix& m) const;
};
AffineModel AffineGroup(unsigned p, size_t n,
                        const std::vector<Matrix>& linear);

}  // namespace fusionloc

#endif  // FUSIONLOC_MODREP_H_
