#include "fusionloc/modrep.h"

#include <algorithm>
#include <set>

#include "fusionloc/caps.h"
#include "fusionloc/core.h"
#include "fusionloc/errors.h"

namespace fusionloc {

namespace {

uint8_t InvMod(uint8_t a, unsigned p) {
  // Only p = 2, 3: every nonzero element is its own inverse.
  (void)p;
  return a;
}

uint64_t IPow(uint64_t b, size_t e) {
  uint64_t r = 1;
  while (e--) r *= b;
  return r;
}

void CheckPrime(unsigned p) {
  if (p != 2 && p != 3) throw InputError("modules are supported over F_2 and F_3 only");
}

}  // namespace

Vec Apply(const Vec& v, const Matrix& m, unsigned p) {
  const size_t n = m.empty() ? 0 : m[0].size();
  std::vector<unsigned> acc(n, 0);
  for (size_t i = 0; i < v.size(); ++i) {
    if (!v[i]) continue;
    for (size_t j = 0; j < n; ++j) acc[j] += v[i] * m[i][j];
  }
  Vec r(n);
  for (size_t j = 0; j < n; ++j) r[j] = static_cast<uint8_t>(acc[j] % p);
  return r;
}

Matrix MatMul(const Matrix& a, const Matrix& b, unsigned p) {
  Matrix r;
  r.reserve(a.size());
  for (const Vec& row : a) r.push_back(Apply(row, b, p));
  return r;
}

Matrix IdentityMatrix(size_t n) {
  Matrix m(n, Vec(n, 0));
  for (size_t i = 0; i < n; ++i) m[i][i] = 1;
  return m;
}

uint64_t VecCode(const Vec& v, unsigned p) {
  uint64_t c = 0;
  for (size_t i = v.size(); i-- > 0;) c = c * p + v[i];
  return c;
}

Vec VecFromCode(uint64_t code, size_t n, unsigned p) {
  Vec v(n);
  for (size_t i = 0; i < n; ++i) {
    v[i] = static_cast<uint8_t>(code % p);
    code /= p;
  }
  return v;
}

// ---- Subspace ----

Vec Subspace::Reduce(Vec v) const {
  for (const Vec& r : rows_) {
    size_t piv = 0;
    while (!r[piv]) ++piv;
    if (!v[piv]) continue;
    const unsigned c = p_ - v[piv];
    for (size_t j = piv; j < n_; ++j) v[j] = static_cast<uint8_t>((v[j] + c * r[j]) % p_);
  }
  return v;
}

void Subspace::Insert(Vec v) {
  v = Reduce(std::move(v));
  size_t piv = 0;
  while (piv < n_ && !v[piv]) ++piv;
  if (piv == n_) return;
  const uint8_t s = InvMod(v[piv], p_);
  for (auto& x : v) x = static_cast<uint8_t>((x * s) % p_);
  for (Vec& r : rows_) {
    if (!r[piv]) continue;
    const unsigned c = p_ - r[piv];
    for (size_t j = 0; j < n_; ++j) r[j] = static_cast<uint8_t>((r[j] + c * v[j]) % p_);
  }
  rows_.push_back(std::move(v));
  std::sort(rows_.begin(), rows_.end(), [](const Vec& a, const Vec& b) {
    return std::find_if(a.begin(), a.end(), [](uint8_t x) { return x; }) - a.begin() <
           std::find_if(b.begin(), b.end(), [](uint8_t x) { return x; }) - b.begin();
  });
}

Subspace Subspace::Span(unsigned p, size_t n, const std::vector<Vec>& vs) {
  Subspace s(p, n);
  for (const Vec& v : vs) {
    if (v.size() != n) throw InputError("vector length does not match the space");
    s.Insert(v);
  }
  return s;
}

Subspace Subspace::Whole(unsigned p, size_t n) {
  return Span(p, n, IdentityMatrix(n));
}

bool Subspace::contains(const Vec& v) const {
  Vec r = Reduce(v);
  return std::all_of(r.begin(), r.end(), [](uint8_t x) { return x == 0; });
}

bool Subspace::is_subspace_of(const Subspace& o) const {
  return std::all_of(rows_.begin(), rows_.end(),
                     [&](const Vec& r) { return o.contains(r); });
}

Subspace Subspace::operator+(const Subspace& o) const {
  Subspace s = *this;
  for (const Vec& r : o.rows_) s.Insert(r);
  return s;
}

Subspace Subspace::Intersect(const Subspace& o) const {
  const Subspace& small = dim() <= o.dim() ? *this : o;
  const Subspace& big = dim() <= o.dim() ? o : *this;
  Subspace r(p_, n_);
  for (const Vec& v : small.Vectors()) {
    if (big.contains(v)) r.Insert(v);
  }
  return r;
}

std::vector<Vec> Subspace::Vectors() const {
  const uint64_t total = IPow(p_, dim());
  std::vector<Vec> out;
  out.reserve(total);
  for (uint64_t c = 0; c < total; ++c) {
    Vec coeff = VecFromCode(c, dim(), p_);
    Vec v(n_, 0);
    for (size_t i = 0; i < dim(); ++i) {
      if (!coeff[i]) continue;
      for (size_t j = 0; j < n_; ++j) v[j] = static_cast<uint8_t>((v[j] + coeff[i] * rows_[i][j]) % p_);
    }
    out.push_back(std::move(v));
  }
  return out;
}

// ---- SectionModule ----

SectionModule BuildSectionModule(const Subgroup& a, const Subgroup& b,
                                 const Subgroup& h, unsigned p) {
  CheckPrime(p);
  const Group& G = a.group();
  if (!b.is_subgroup_of(a)) throw InputError("section bottom is not inside the top");
  if (!IsNormalIn(b, a)) throw InputError("section bottom is not normal in the top");
  for (Elem x : a.gens()) {
    if (!b.contains(G.pow(x, p))) throw InputError("section is not of exponent p");
    for (Elem y : a.gens()) {
      if (!b.contains(G.comm(x, y))) throw InputError("section is not abelian");
    }
  }
  for (Elem x : h.gens()) {
    for (Elem y : a.gens()) {
      if (!a.contains(G.conj(y, x))) throw InputError("actors do not normalize the top");
    }
    for (Elem y : b.gens()) {
      if (!b.contains(G.conj(y, x))) throw InputError("actors do not normalize the bottom");
    }
  }

  SectionModule m;
  m.top_ = a;
  m.bottom_ = b;
  m.actors_ = h;
  m.p_ = p;
  Subgroup cur = b;
  a.members().for_each([&](Elem x) {
    if (cur.contains(x)) return;
    m.basis_.push_back(x);
    cur = Extend(cur, x);
  });
  m.code_.assign(G.size(), -1);
  const uint64_t total = IPow(p, m.basis_.size());
  const std::vector<Elem> belems = b.elements();
  for (uint64_t c = 0; c < total; ++c) {
    Elem e = m.Lift(VecFromCode(c, m.basis_.size(), p));
    for (Elem y : belems) m.code_[G.mul(e, y)] = static_cast<int64_t>(c);
  }
  for (Elem x : h.gens()) m.gen_mats_.push_back(m.MatrixOf(x));
  return m;
}

Vec SectionModule::Coords(Elem a) const {
  if (code_[a] < 0) throw InputError("element is not in the section top");
  return VecFromCode(static_cast<uint64_t>(code_[a]), dim(), p_);
}

Elem SectionModule::Lift(const Vec& v) const {
  const Group& G = group();
  Elem e = 0;
  for (size_t i = 0; i < basis_.size(); ++i) {
    for (uint8_t k = 0; k < v[i]; ++k) e = G.mul(e, basis_[i]);
  }
  return e;
}

Matrix SectionModule::MatrixOf(Elem h) const {
  Matrix m;
  m.reserve(dim());
  for (Elem b : basis_) m.push_back(Coords(group().conj(b, h)));
  return m;
}

Subgroup SectionModule::ToSubgroup(const Subspace& w) const {
  std::vector<Elem> gens = bottom_.gens();
  for (const Vec& r : w.rows()) gens.push_back(Lift(r));
  return Generate(group(), gens);
}

Subspace SectionModule::ToSubspace(const Subgroup& x) const {
  if (!bottom_.is_subgroup_of(x) || !x.is_subgroup_of(top_)) {
    throw PreconditionError("subgroup does not lie between bottom and top");
  }
  std::vector<Vec> vs;
  for (Elem g : x.gens()) vs.push_back(Coords(g));
  return Subspace::Span(p_, dim(), vs);
}

Subgroup SectionModule::Kernel() const {
  const Group& G = group();
  Bitset k(G.size());
  actors_.members().for_each([&](Elem x) {
    bool fixes = true;
    for (size_t i = 0; i < basis_.size() && fixes; ++i) {
      fixes = code_[G.conj(basis_[i], x)] == code_[basis_[i]];
    }
    if (fixes) k.set(x);
  });
  return FromMembers(G, std::move(k));
}

// ---- lattice and module properties ----

Subspace InvariantClosure(const Subspace& w, const std::vector<Matrix>& gens) {
  Subspace s = w;
  std::vector<Vec> todo = s.rows();
  while (!todo.empty()) {
    Vec v = std::move(todo.back());
    todo.pop_back();
    for (const Matrix& m : gens) {
      Vec u = Apply(v, m, s.p());
      if (s.contains(u)) continue;
      s = s + Subspace::Span(s.p(), s.ambient_dim(), {u});
      todo.push_back(std::move(u));
    }
  }
  return s;
}

bool IsInvariant(const Subspace& w, const std::vector<Matrix>& gens) {
  for (const Vec& r : w.rows()) {
    for (const Matrix& m : gens) {
      if (!w.contains(Apply(r, m, w.p()))) return false;
    }
  }
  return true;
}

SubmoduleLattice SubmoduleLatticeOf(const SectionModule& m) {
  if (m.dim() > 16) throw ResourceError("submodule lattice limited to dimension 16");
  const unsigned p = m.p();
  const size_t n = m.dim();
  const auto& gens = m.generator_matrices();
  std::set<Subspace> cyclic;
  for (const Vec& v : m.Whole().Vectors()) {
    cyclic.insert(InvariantClosure(Subspace::Span(p, n, {v}), gens));
  }
  std::set<Subspace> all(cyclic.begin(), cyclic.end());
  std::vector<Subspace> frontier(all.begin(), all.end());
  const uint64_t cap = GlobalCaps().lattice_cap;
  while (!frontier.empty()) {
    std::vector<Subspace> next;
    for (const Subspace& w : frontier) {
      for (const Subspace& c : cyclic) {
        Subspace s = w + c;
        if (all.insert(s).second) {
          next.push_back(s);
          if (all.size() > cap) throw ResourceError("submodule lattice exceeds lattice cap");
        }
      }
    }
    frontier = std::move(next);
  }

  SubmoduleLattice lat;
  lat.members.assign(all.begin(), all.end());
  const size_t k = lat.members.size();
  lat.irreducible.assign(k, false);
  std::vector<size_t> chain(k, 0);
  for (size_t i = 0; i < k; ++i) {
    const Subspace& w = lat.members[i];
    bool minimal = w.dim() > 0;
    for (size_t j = 0; j < i; ++j) {
      const Subspace& u = lat.members[j];
      if (u.dim() < w.dim() && u.is_subspace_of(w)) {
        chain[i] = std::max(chain[i], chain[j] + 1);
        if (u.dim() > 0) minimal = false;
      }
    }
    lat.irreducible[i] = minimal;
  }
  lat.composition_length = chain[k - 1];
  return lat;
}

namespace {

// The image of the actors acting on the p^n vectors (point = code).
PermGroup ImageOnVectors(const SectionModule& m) {
  const uint64_t total = IPow(m.p(), m.dim());
  std::vector<Perm> gens;
  for (const Matrix& mat : m.generator_matrices()) {
    std::vector<Point> img(total);
    for (uint64_t c = 0; c < total; ++c) {
      img[c] = static_cast<Point>(VecCode(Apply(VecFromCode(c, m.dim(), m.p()), mat, m.p()), m.p()));
    }
    gens.emplace_back(std::move(img));
  }
  return PermGroup(total, gens);
}

}  // namespace

bool IsPReduced(const SectionModule& m) {
  if (m.dim() == 0) return true;
  auto img = Group::Create(ImageOnVectors(m));
  return OpOf(img->whole(), m.p()).is_trivial();
}

CommutatorAndFixed CommutatorAndFixedOf(const SectionModule& m,
                                        const Subgroup& k) {
  if (!k.is_subgroup_of(m.actors())) throw PreconditionError("K is not among the actors");
  const unsigned p = m.p();
  const size_t n = m.dim();
  std::vector<Matrix> mats;
  for (Elem x : k.gens()) mats.push_back(m.MatrixOf(x));
  // [V,K] is spanned by v(x-1) for basis v and generators x, closed under K.
  std::vector<Vec> comm;
  for (const Matrix& mat : mats) {
    for (size_t i = 0; i < n; ++i) {
      Vec d = mat[i];
      d[i] = static_cast<uint8_t>((d[i] + p - 1) % p);
      comm.push_back(std::move(d));
    }
  }
  Subspace c = InvariantClosure(Subspace::Span(p, n, comm), mats);
  std::vector<Vec> fixed;
  for (const Vec& v : m.Whole().Vectors()) {
    bool ok = true;
    for (const Matrix& mat : mats) {
      if (Apply(v, mat, p) != v) {
        ok = false;
        break;
      }
    }
    if (ok) fixed.push_back(v);
  }
  return {m.ToSubgroup(c), m.ToSubgroup(Subspace::Span(p, n, fixed))};
}

std::optional<unsigned> IsNaturalSLn2(const SectionModule& m) {
  if (m.p() != 2) throw PreconditionError("natural SL_n(2) recognition needs p = 2");
  return IsNaturalSLnp(m);
}

std::optional<unsigned> IsNaturalSLnp(const SectionModule& m) {
  const size_t n = m.dim();
  const uint64_t p = m.p();
  if (n < 2) return std::nullopt;
  PermGroup img = ImageOnVectors(m);
  // |SL_n(p)| = p^{n(n-1)/2} prod_{i=2}^{n} (p^i - 1).
  auto sl_order = [&](size_t k) {
    uint64_t r = IPow(p, k * (k - 1) / 2);
    for (size_t i = 2; i <= k; ++i) r *= IPow(p, i) - 1;
    return r;
  };
  const uint64_t sl = sl_order(n);
  if (img.order() != sl) return std::nullopt;
  const size_t total = IPow(p, n);
  std::vector<bool> seen(total, false);
  std::vector<Point> orbit{1};  // code 1 is the first unit vector
  seen[1] = true;
  for (size_t i = 0; i < orbit.size(); ++i) {
    for (const Perm& g : img.generators()) {
      Point y = g[orbit[i]];
      if (!seen[y]) {
        seen[y] = true;
        orbit.push_back(y);
      }
    }
  }
  if (orbit.size() != total - 1) return std::nullopt;
  // Vector stabilizer: p^{n-1} : SL_{n-1}(p).
  if (sl / orbit.size() != IPow(p, n - 1) * sl_order(n - 1)) return std::nullopt;
  return static_cast<unsigned>(n);
}

bool QuadraticAction(const SectionModule& m, const Subgroup& k) {
  if (!k.is_subgroup_of(m.actors())) throw PreconditionError("K is not among the actors");
  CommutatorAndFixed cf = CommutatorAndFixedOf(m, k);
  // [[V,K],K] = 0 iff K centralizes [V,K].
  return cf.commutator.is_subgroup_of(cf.fixed);
}

std::vector<Offender> Offenders(const SectionModule& m,
                                const std::vector<Subgroup>& candidates) {
  std::vector<Offender> out;
  const Group& G = m.group();
  for (const Subgroup& a : candidates) {
    if (!a.is_subgroup_of(m.actors())) throw PreconditionError("candidate does not act on the module");
    CommutatorAndFixed cf = CommutatorAndFixedOf(m, a);
    const uint64_t index = m.top().order() / cf.fixed.order();
    uint64_t kernel = 0;
    a.members().for_each([&](Elem x) {
      bool triv = true;
      for (Elem b : m.basis()) {
        if (m.Coords(G.conj(b, x)) != m.Coords(b)) {
          triv = false;
          break;
        }
      }
      if (triv) ++kernel;
    });
    const uint64_t image = a.order() / kernel;
    if (image >= 2 && index <= image) out.push_back({a, index, image});
  }
  return out;
}

Subgroup GaschutzComplement(const Subgroup& g, const Subgroup& v,
                            const Subgroup& u1, const Subgroup& u2,
                            const Subgroup& s) {
  const Group& G = g.group();
  std::vector<unsigned> primes = PrimeDivisors(v.order());
  if (primes.size() > 1 || !IsAbelian(v)) {
    throw PreconditionError("V must be an abelian p-group");
  }
  const unsigned p = primes.empty() ? 2 : primes[0];
  auto invariant = [&](const Subgroup& x, const Subgroup& by) {
    for (Elem h : by.gens())
      for (Elem y : x.gens())
        if (!x.contains(G.conj(y, h))) return false;
    return true;
  };
  if (!invariant(v, g)) throw PreconditionError("G does not normalize V");
  if (!s.is_subgroup_of(g) || !IsPGroup(s, p) || s.order() != PPart(g.order(), p)) {
    throw PreconditionError("S is not a Sylow p-subgroup of G");
  }
  if (!u1.is_subgroup_of(v) || !u2.is_subgroup_of(v)) throw PreconditionError("U1, U2 must lie in V");
  if (!Intersect(u1, u2).is_trivial() || u1.order() * u2.order() != v.order()) {
    throw PreconditionError("V is not U1 x U2");
  }
  if (!invariant(u1, g)) throw PreconditionError("U1 is not G-invariant");
  if (!invariant(u2, s)) throw PreconditionError("U2 is not S-invariant");

  for (const Subgroup& w : AllSubgroups(v)) {
    if (w.order() * u1.order() != v.order()) continue;
    if (!Intersect(w, u1).is_trivial()) continue;
    if (!invariant(w, g)) continue;
    return w;
  }
  throw InternalError("no G-invariant complement to U1 in V");
}

namespace {

Perm LinearPerm(unsigned p, size_t n, const Matrix& m) {
  if (m.size() != n) throw InputError("matrix size does not match the space");
  const uint64_t total = IPow(p, n);
  std::vector<Point> img(total);
  for (uint64_t c = 0; c < total; ++c) {
    img[c] = static_cast<Point>(VecCode(Apply(VecFromCode(c, n, p), m, p), p));
  }
  return Perm(std::move(img));  // throws InputError when singular
}

}  // namespace

Elem AffineModel::ElementOf(const Matrix& m) const {
  return group->index(LinearPerm(p, n, m));
}

AffineModel AffineGroup(unsigned p, size_t n,
                        const std::vector<Matrix>& linear) {
  CheckPrime(p);
  const uint64_t total = IPow(p, n);
  std::vector<Perm> trans, lin;
  for (size_t i = 0; i < n; ++i) {
    std::vector<Point> img(total);
    for (uint64_t c = 0; c < total; ++c) {
      Vec v = VecFromCode(c, n, p);
      v[i] = static_cast<uint8_t>((v[i] + 1) % p);
      img[c] = static_cast<Point>(VecCode(v, p));
    }
    trans.emplace_back(std::move(img));
  }
  for (const Matrix& m : linear) lin.push_back(LinearPerm(p, n, m));
  std::vector<Perm> all = trans;
  all.insert(all.end(), lin.begin(), lin.end());
  AffineModel a;
  a.p = p;
  a.n = n;
  a.group = Group::Create(PermGroup(total, all));
  std::vector<Elem> t, l;
  for (const Perm& x : trans) t.push_back(a.group->index(x));
  for (const Perm& x : lin) l.push_back(a.group->index(x));
  a.translations = Generate(*a.group, t);
  a.linear = Generate(*a.group, l);
  return a;
}

}  // namespace fusionloc
