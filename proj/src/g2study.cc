#include "fusionloc/g2study.h"

#include <algorithm>
#include <array>
#include <chrono>
#include <filesystem>
#include <functional>
#include <random>
#include <set>
#include <sstream>
#include <unordered_map>
#include <unordered_set>
#include <vector>

#include "fusionloc/caps.h"
#include "fusionloc/catalog.h"
#include "fusionloc/core.h"
#include "fusionloc/errors.h"
#include "fusionloc/fusion.h"
#include "fusionloc/group_file.h"

namespace fusionloc {

namespace {

// Square matrices over F_3, row-vector convention: v -> v M.
struct Mat {
  int n = 0;
  std::array<uint8_t, 64> a{};

  uint8_t at(int r, int c) const { return a[r * n + c]; }
  uint8_t& at(int r, int c) { return a[r * n + c]; }
  friend bool operator==(const Mat& x, const Mat& y) {
    return x.n == y.n && x.a == y.a;
  }
  friend bool operator<(const Mat& x, const Mat& y) {
    return x.n != y.n ? x.n < y.n : x.a < y.a;
  }
};

Mat Identity(int n) {
  Mat m;
  m.n = n;
  for (int r = 0; r < n; ++r) m.at(r, r) = 1;
  return m;
}

Mat Scalar(int n, int s) {
  Mat m = Identity(n);
  for (int r = 0; r < n; ++r) m.at(r, r) = static_cast<uint8_t>(s % 3);
  return m;
}

Mat Make2(int a, int b, int c, int d) {
  Mat m;
  m.n = 2;
  m.a[0] = static_cast<uint8_t>(a);
  m.a[1] = static_cast<uint8_t>(b);
  m.a[2] = static_cast<uint8_t>(c);
  m.a[3] = static_cast<uint8_t>(d);
  return m;
}

Mat operator*(const Mat& x, const Mat& y) {
  Mat m;
  m.n = x.n;
  for (int r = 0; r < x.n; ++r) {
    for (int c = 0; c < x.n; ++c) {
      int s = 0;
      for (int k = 0; k < x.n; ++k) s += x.at(r, k) * y.at(k, c);
      m.at(r, c) = static_cast<uint8_t>(s % 3);
    }
  }
  return m;
}

Mat Inverse(const Mat& x) {
  Mat y = x, id = Identity(x.n);
  for (;;) {
    Mat z = y * x;
    if (z == id) return y;
    y = z;
  }
}

Mat Kron(const Mat& x, const Mat& y) {
  Mat m;
  m.n = x.n * y.n;
  for (int r = 0; r < m.n; ++r) {
    for (int c = 0; c < m.n; ++c) {
      m.at(r, c) = static_cast<uint8_t>(
          x.at(r / y.n, c / y.n) * y.at(r % y.n, c % y.n) % 3);
    }
  }
  return m;
}

std::vector<Mat> GL23() {
  std::vector<Mat> out;
  for (int a = 0; a < 3; ++a)
    for (int b = 0; b < 3; ++b)
      for (int c = 0; c < 3; ++c)
        for (int d = 0; d < 3; ++d)
          if ((a * d - b * c + 9) % 3 != 0) out.push_back(Make2(a, b, c, d));
  return out;
}

std::vector<Mat> MatClosure(const std::vector<Mat>& gens) {
  std::set<Mat> seen{Identity(gens.front().n)};
  std::vector<Mat> queue(seen.begin(), seen.end());
  for (size_t k = 0; k < queue.size(); ++k) {
    for (const Mat& g : gens) {
      Mat y = queue[k] * g;
      if (seen.insert(y).second) queue.push_back(y);
    }
  }
  return queue;
}

using Vec = std::vector<uint8_t>;

Vec Apply(const Vec& v, const Mat& m) {
  Vec w(m.n, 0);
  for (int c = 0; c < m.n; ++c) {
    int s = 0;
    for (int k = 0; k < m.n; ++k) s += v[k] * m.at(k, c);
    w[c] = static_cast<uint8_t>(s % 3);
  }
  return w;
}

uint32_t Code(const Vec& v) {
  uint32_t c = 0;
  for (uint8_t x : v) c = 3 * c + x;
  return c;
}

// Points: all nonzero vectors when `all`, else the union of the orbits of
// the basis vectors under `gens`.
std::vector<Vec> PointSet(const std::vector<Mat>& gens, int n, bool all) {
  std::vector<Vec> pts;
  std::unordered_set<uint32_t> seen;
  if (all) {
    uint32_t total = 1;
    for (int k = 0; k < n; ++k) total *= 3;
    for (uint32_t c = 1; c < total; ++c) {
      Vec v(n);
      uint32_t x = c;
      for (int k = n - 1; k >= 0; --k, x /= 3) v[k] = static_cast<uint8_t>(x % 3);
      pts.push_back(v);
    }
    return pts;
  }
  for (int b = 0; b < n; ++b) {
    Vec e(n, 0);
    e[b] = 1;
    if (!seen.insert(Code(e)).second) continue;
    size_t start = pts.size();
    pts.push_back(e);
    for (size_t k = start; k < pts.size(); ++k) {
      for (const Mat& g : gens) {
        Vec w = Apply(pts[k], g);
        if (seen.insert(Code(w)).second) pts.push_back(w);
      }
    }
  }
  return pts;
}

struct Action {
  std::vector<Vec> points;
  std::unordered_map<uint32_t, Point> index;

  Perm operator()(const Mat& m) const {
    std::vector<Point> img(points.size());
    for (size_t k = 0; k < points.size(); ++k) {
      img[k] = index.at(Code(Apply(points[k], m)));
    }
    return Perm(std::move(img));
  }
};

Action MakeAction(const std::vector<Mat>& gens, int n, bool all) {
  Action a;
  a.points = PointSet(gens, n, all);
  for (size_t k = 0; k < a.points.size(); ++k) {
    a.index.emplace(Code(a.points[k]), static_cast<Point>(k));
  }
  return a;
}

// The building blocks over F_3^2 (x) F_3^2.
struct Blocks {
  Mat i2 = Make2(0, 1, 2, 0);
  Mat j2 = Make2(1, 1, 1, 2);
  Mat d2 = Make2(1, 1, 0, 1);
  Mat one = Identity(2);
  Mat i, j, iy, jy, d1, dd2, swap;
  std::vector<Mat> q;  // the 32 elements of Q8 o Q8

  Blocks() {
    i = Kron(i2, one);
    j = Kron(j2, one);
    iy = Kron(one, i2);
    jy = Kron(one, j2);
    d1 = Kron(d2, one);
    dd2 = Kron(one, d2);
    swap.n = 4;
    const int perm[4] = {0, 2, 1, 3};
    for (int r = 0; r < 4; ++r) swap.at(r, perm[r]) = 1;
    q = MatClosure({i, j, iy, jy});
  }
};

// Lifts GL_4(3) into the ambient matrix group of the model.
struct Frame {
  int n = 4;
  std::function<Mat(const Mat&)> lift;        // k -> element acting as k
  Mat y;                                       // the tensor swap
  std::vector<std::function<Mat(const Mat&)>> t_lifts;  // k -> candidates
  Mat z;                                       // central -1
};

Frame Degree80Frame(const Blocks& b) {
  Frame f;
  f.n = 4;
  f.lift = [](const Mat& k) { return k; };
  f.y = b.swap;
  f.t_lifts = {[](const Mat& k) { return k; }};
  f.z = Scalar(4, 2);
  return f;
}

// D8 = <yd, td> <= GL_2(3) with centre -1; y lies over yd, t over +-td.
Frame TwistedFrame(const Blocks& b) {
  Mat yd = Make2(1, 0, 0, 2), td = Make2(0, 1, 1, 0);
  Mat one = Identity(2);
  Frame f;
  f.n = 8;
  f.lift = [one](const Mat& k) { return Kron(k, one); };
  f.y = Kron(b.swap, yd);
  f.t_lifts = {[td](const Mat& k) { return Kron(k, td); },
               [td](const Mat& k) { return Kron(k, td * Scalar(2, 2)); }};
  f.z = Scalar(8, 2);
  return f;
}

struct SearchResult {
  TSearchStats stats;
  std::vector<Mat> witnesses;
};

// t = lift((tau1 (x) tau2) q) over all tau_i in GL_2(3) and q in Q. The
// constraints are checked on the ambient matrices.
SearchResult SearchT(const Blocks& b, const Frame& f) {
  SearchResult r;
  Mat id = Identity(f.n);
  Mat i = f.lift(b.i), j = f.lift(b.j), iy = f.lift(b.iy), jy = f.lift(b.jy);
  Mat d1 = f.lift(b.d1), d2 = f.lift(b.dd2);
  Mat d1i = Inverse(d1), d2i = Inverse(d2);
  std::set<Mat> cores;
  std::vector<Mat> gl = GL23();
  for (const Mat& t1 : gl) {
    for (const Mat& t2 : gl) {
      Mat base = Kron(t1, t2);
      for (const Mat& q : b.q) cores.insert(base * q);
    }
  }
  // Distinct ambient matrices only: k (x) -td = (-k) (x) td.
  std::set<Mat> candidates;
  for (const Mat& k : cores) {
    for (const auto& lift : f.t_lifts) candidates.insert(lift(k));
  }
  r.stats.candidates = candidates.size();
  for (const Mat& t : candidates) {
    if (!(t * t == id)) continue;
    // t is an involution, so x^t = t x t.
    auto conj = [&](const Mat& x) { return t * x * t; };
    if (!(conj(d1) == d1i && conj(d2) == d2i)) continue;
    if (!(conj(i) == j && conj(j) == i && conj(iy) == jy && conj(jy) == iy)) {
      continue;
    }
    ++r.stats.admissible;
    Mat yt = f.y * t;
    if (yt == t * f.y) ++r.stats.commute_with_y;
    // <y,t> = D8 with centre Z: (yt)^2 = z (then (yt)^4 = 1).
    if (yt * yt == f.z) {
      ++r.stats.witnesses;
      r.witnesses.push_back(t);
    }
  }
  return r;
}

std::shared_ptr<const Group> ReferenceGroup(
    size_t degree, const std::vector<std::string>& cycles) {
  std::vector<Perm> gens;
  for (const std::string& c : cycles) gens.push_back(Perm::FromCycles(degree, c));
  return Group::Create(PermGroup(degree, gens));
}

bool IsomorphicTo(const Subgroup& h, const std::shared_ptr<const Group>& ref) {
  if (h.order() != ref->size()) return false;
  return FindIsomorphism(h, ref->whole()).has_value();
}

const std::shared_ptr<const Group>& RefS3xS3() {
  static auto g = ReferenceGroup(6, {"(1 2 3)", "(1 2)", "(4 5 6)", "(4 5)"});
  return g;
}
const std::shared_ptr<const Group>& RefS3xC3() {
  static auto g = ReferenceGroup(6, {"(1 2 3)", "(1 2)", "(4 5 6)"});
  return g;
}
const std::shared_ptr<const Group>& RefD8() {
  static auto g = ReferenceGroup(4, {"(1 2 3 4)", "(1 3)"});
  return g;
}
const std::shared_ptr<const Group>& RefQ8() {
  static auto g = LoadGroup(CatalogQ8().file).universe;
  return g;
}
const std::shared_ptr<const Group>& RefSL23() {
  static std::shared_ptr<const Group> g = [] {
    LoadedGroup gl = LoadGroup(CatalogGL23().file);
    return AsGroup(DerivedSubgroup(gl.whole)).group;
  }();
  return g;
}

bool IsQ8(const Subgroup& h) {
  return h.order() == 8 && IsomorphicTo(h, RefQ8());
}

std::string Ord(const Subgroup& h) { return "order " + std::to_string(h.order()); }

TildeCModel BuildModel(const Blocks& b, const Frame& f, bool all_points,
                       const Mat& tmat, uint64_t rank, uint64_t total) {
  std::vector<Mat> gens = {f.lift(b.i),  f.lift(b.j),   f.lift(b.d1),
                           f.lift(b.iy), f.lift(b.jy),  f.lift(b.dd2),
                           f.y,          tmat};
  Action act = MakeAction(gens, f.n, all_points);
  std::vector<Perm> perms;
  for (const Mat& m : gens) perms.push_back(act(m));
  TildeCModel m;
  m.universe = Group::Create(PermGroup(act.points.size(), perms));
  const Group& G = *m.universe;
  if (G.size() != 1152) {
    throw InternalError("assembled group has order " + std::to_string(G.size()) +
                        ", expected 1152");
  }
  m.group = G.whole();
  m.i = G.index(perms[0]);
  m.j = G.index(perms[1]);
  m.d1 = G.index(perms[2]);
  m.y = G.index(perms[6]);
  m.t = G.index(perms[7]);
  m.iy = G.conj(m.i, m.y);
  m.jy = G.conj(m.j, m.y);
  m.d2 = G.conj(m.d1, m.y);
  if (m.iy != G.index(perms[3]) || m.jy != G.index(perms[4]) ||
      m.d2 != G.index(perms[5])) {
    throw InternalError("tensor swap does not exchange the two factors");
  }
  m.t_rank = rank;
  m.t_witnesses = total;
  m.p1 = Generate(G, {m.i, m.j});
  m.p2 = Generate(G, {m.iy, m.jy});
  m.q = Join(m.p1, m.p2);
  m.z = Center(m.q);
  m.d = Generate(G, {m.d1, m.d2});
  m.h1 = Generate(G, {m.i, m.j, m.d1});
  m.h2 = Generate(G, {m.iy, m.jy, m.d2});
  m.t_sub = Generate(G, {m.y, m.t});
  m.s = Join(m.q, m.t_sub);
  m.s_star = Extend(m.q, m.t);
  // C~*: the first index-2 overgroup of O^2(C~) over Q with quotient
  // S3 x C3. O^2(C~) S* itself has quotient (C3 x C3):2.
  Subgroup o2 = UpperPOf(m.group, 2);
  for (Elem x : {m.y, m.t, G.mul(m.y, m.t)}) {
    Subgroup c = Extend(o2, x);
    if (c.order() * 2 == G.size() &&
        IsomorphicTo(Quotient(c, m.q).group->whole(), RefS3xC3())) {
      m.c_star = c;
      break;
    }
  }
  if (m.c_star.order() == 0) m.c_star = Extend(o2, m.t);
  return m;
}

Subgroup MapSub(const Subgroup& h, const Group& to,
                const std::function<Elem(Elem)>& f) {
  std::vector<Elem> gens;
  for (Elem g : h.gens()) gens.push_back(f(g));
  return Generate(to, gens);
}

std::string Stats(const TSearchStats& s) {
  std::ostringstream o;
  o << s.candidates << " candidates, " << s.admissible << " admissible, "
    << s.commute_with_y << " commuting with y, " << s.witnesses
    << " with <y,t> = D8 over Z";
  return o.str();
}

double Since(std::chrono::steady_clock::time_point t0) {
  return std::chrono::duration<double, std::milli>(
             std::chrono::steady_clock::now() - t0)
      .count();
}

}  // namespace

Q8CentralProduct BuildQ8CentralProduct() {
  Blocks b;
  std::vector<Mat> gens = {b.i, b.j, b.iy, b.jy};
  Action act = MakeAction(gens, 4, true);
  std::vector<Perm> perms;
  for (const Mat& m : gens) perms.push_back(act(m));
  Q8CentralProduct m;
  m.universe = Group::Create(PermGroup(act.points.size(), perms));
  const Group& G = *m.universe;
  m.i = G.index(perms[0]);
  m.j = G.index(perms[1]);
  m.iy = G.index(perms[2]);
  m.jy = G.index(perms[3]);
  m.q = G.whole();
  m.p1 = Generate(G, {m.i, m.j});
  m.p2 = Generate(G, {m.iy, m.jy});
  m.z = Center(m.q);
  return m;
}

Q8Facts ComputeQ8Facts(const Q8CentralProduct& m) {
  const Group& G = *m.universe;
  Q8Facts f;
  f.order = m.q.order();
  f.center = m.z.order();
  m.q.members().for_each([&](Elem x) { f.involutions += G.order(x) == 2; });
  Automorphisms aut = AutomorphismsOf(m.q);
  f.aut = aut.order();
  // Inn(Q) = Q/Z(Q).
  f.out = f.aut / (f.order / f.center);
  f.frattini_quotient_elementary =
      Frattini(m.q) == m.z && DerivedSubgroup(m.q) == m.z;
  for (const Subgroup& h : AllSubgroups(m.q)) {
    if (h.order() == 8 && IsElementaryAbelian(h, 2)) f.has_elementary_8 = true;
  }
  return f;
}

ReportNode Q8Report(const Q8Facts& f) {
  ReportNode r;
  r.name = "Q8 o Q8";
  r.Check("order 32", f.order == 32, std::to_string(f.order));
  r.Check("centre of order 2", f.center == 2, std::to_string(f.center));
  r.Check("Q/Z elementary abelian of order 16", f.frattini_quotient_elementary);
  r.Check("more than 11 involutions", f.involutions > 11,
          std::to_string(f.involutions));
  r.Check("elementary abelian 2^3 present (plus type)", f.has_elementary_8);
  r.Check("|Aut| = 1152", f.aut == 1152, std::to_string(f.aut));
  r.Check("|Out| = 72", f.out == 72, std::to_string(f.out));
  r.Finish();
  return r;
}

TSearchStats SearchTInGL43() {
  Blocks b;
  return SearchT(b, Degree80Frame(b)).stats;
}

TildeCModel AssembleTildeCInGL43() {
  Blocks b;
  Frame f = Degree80Frame(b);
  SearchResult r = SearchT(b, f);
  if (r.witnesses.empty()) {
    throw InternalError("no admissible t in N_GL4(3)(Q): " + Stats(r.stats));
  }
  return BuildModel(b, f, true, r.witnesses.front(), 0, r.witnesses.size());
}

TildeCModel AssembleTildeC(TChoice choice) {
  Blocks b;
  Frame f = TwistedFrame(b);
  SearchResult r = SearchT(b, f);
  if (r.witnesses.empty()) {
    throw InternalError("t-search exhausted: " + Stats(r.stats));
  }
  uint64_t k = choice == TChoice::kFirst ? 0 : r.witnesses.size() - 1;
  return BuildModel(b, f, false, r.witnesses[k], k, r.witnesses.size());
}

TildeCModel Relabeled(const TildeCModel& m, uint64_t seed) {
  const Group& G = *m.universe;
  std::vector<Point> pts(G.degree());
  for (size_t k = 0; k < pts.size(); ++k) pts[k] = static_cast<Point>(k);
  std::mt19937_64 rng(seed);
  std::shuffle(pts.begin(), pts.end(), rng);
  Perm pi(pts);
  std::vector<Perm> gens;
  for (Elem g : m.group.gens()) gens.push_back(Conjugate(G.perm(g), pi));
  TildeCModel r = m;
  r.universe = Group::Create(PermGroup(G.degree(), gens));
  const Group& H = *r.universe;
  auto f = [&](Elem x) { return H.index(Conjugate(G.perm(x), pi)); };
  r.group = H.whole();
  for (Elem* e : {&r.i, &r.j, &r.iy, &r.jy, &r.d1, &r.d2, &r.y, &r.t}) *e = f(*e);
  r.q = MapSub(m.q, H, f);
  r.p1 = MapSub(m.p1, H, f);
  r.p2 = MapSub(m.p2, H, f);
  r.z = MapSub(m.z, H, f);
  r.d = MapSub(m.d, H, f);
  r.h1 = MapSub(m.h1, H, f);
  r.h2 = MapSub(m.h2, H, f);
  r.t_sub = MapSub(m.t_sub, H, f);
  r.s = MapSub(m.s, H, f);
  r.s_star = MapSub(m.s_star, H, f);
  r.c_star = MapSub(m.c_star, H, f);
  return r;
}

ReportNode VerifyTildeC(const TildeCModel& m) {
  const Group& G = *m.universe;
  const Subgroup& C = m.group;
  ReportNode r;
  r.name = "C~ structure";
  auto t0 = std::chrono::steady_clock::now();

  r.Check("order 1152", C.order() == 1152, std::to_string(C.order()));
  Subgroup o2 = OpOf(C, 2);
  r.Check("Q = O_2(C~)", o2 == m.q, Ord(o2));
  r.Check("Q = Q8 o Q8", IsomorphicTo(m.q, BuildQ8CentralProduct().universe));
  r.Check("Z(Q) = Z of order 2", Center(m.q) == m.z && m.z.order() == 2);
  r.Check("C~/Q = S3 x S3",
          IsomorphicTo(Quotient(C, m.q).group->whole(), RefS3xS3()));
  r.Check("C_C~(Q) <= Q", Centralizer(C, m.q).is_subgroup_of(m.q));
  r.Check("Q large in C~", IsLargeInGroup(C, m.q, 2).large);

  {
    ReportNode& rel = r.Add(ReportNode{});
    rel.name = "witness relations";
    auto is1 = [&](Elem x) { return x == 0; };
    Elem yt = G.mul(m.y, m.t);
    rel.Check("y^2 = 1, t^2 = 1", is1(G.mul(m.y, m.y)) && is1(G.mul(m.t, m.t)));
    rel.Check("(yt)^2 = z, (yt)^4 = 1",
              m.z.contains(G.pow(yt, 2)) && G.pow(yt, 2) != 0 &&
                  is1(G.pow(yt, 4)));
    rel.Check("d1^3 = 1, d2 = d1^y",
              G.order(m.d1) == 3 && m.d2 == G.conj(m.d1, m.y));
    rel.Check("[D1, P2] = 1, [D2, P1] = 1",
              Centralizer(C, m.p2).contains(m.d1) &&
                  Centralizer(C, m.p1).contains(m.d2));
    rel.Check("P2 = P1^y", ConjugateSubgroup(m.p1, m.y) == m.p2);
    rel.Check("t swaps i, j and i^y, j^y",
              G.conj(m.i, m.t) == m.j && G.conj(m.j, m.t) == m.i &&
                  G.conj(m.iy, m.t) == m.jy && G.conj(m.jy, m.t) == m.iy);
    rel.Check("t inverts D", G.conj(m.d1, m.t) == G.inv(m.d1) &&
                                 G.conj(m.d2, m.t) == G.inv(m.d2));
  }

  Subgroup o2up = UpperPOf(C, 2);
  r.Check("O^2(C~) = D Q with D and Q disjoint",
          o2up == Join(m.d, m.q) && Intersect(m.d, m.q).is_trivial() &&
              o2up.order() == 288,
          Ord(o2up));
  r.Check("H1, H2 = SL2(3)",
          IsomorphicTo(m.h1, RefSL23()) && IsomorphicTo(m.h2, RefSL23()));
  r.Check("O^2(C~) = H1 o H2",
          Join(m.h1, m.h2) == o2up && Intersect(m.h1, m.h2) == m.z &&
              CommutatorSubgroup(m.h1, m.h2).is_trivial());
  {
    // C_{Q/Z}(D) = 1: no coset xZ other than Z is fixed by both
    // generators. Single elements of D do fix cosets (d1 centralizes P2).
    std::optional<std::string> w;
    m.q.members().for_each([&](Elem x) {
      if (w || m.z.contains(x)) return;
      bool fixed = true;
      for (Elem d : m.d.gens()) {
        fixed &= m.z.contains(G.mul(G.inv(x), G.conj(x, d)));
      }
      if (fixed) w = "xZ fixed for x = " + G.name(x);
    });
    r.Check("D fixed-point-free on Q/Z", !w, w);
  }


  Subgroup syl = Sylow(C, 2);
  r.Check("|S| = 2^7 and S Sylow", m.s.order() == 128 && syl.order() == 128,
          Ord(m.s));
  r.Check("S = QT", Join(m.q, m.t_sub) == m.s);
  Subgroup nsd = Normalizer(m.s, m.d);
  r.Check("T = N_S(D)", nsd == m.t_sub, Ord(nsd));
  r.Check("T = D8", IsomorphicTo(m.t_sub, RefD8()));
  r.Check("T n Q = T n O^2(C~) = Z = Z(T)",
          Intersect(m.t_sub, m.q) == m.z && Intersect(m.t_sub, o2up) == m.z &&
              Center(m.t_sub) == m.z);
  r.Check("C~ = O^2(C~) T", Join(o2up, m.t_sub) == C);
  {
    Subgroup ty = Extend(m.z, m.y), tt = Extend(m.z, m.t);
    bool fours = ty.order() == 4 && tt.order() == 4 && IsAbelian(ty) &&
                 IsAbelian(tt) && !ty.is_subgroup_of(m.q) &&
                 !tt.is_subgroup_of(m.q) && ty != tt;
    r.Check("<y,Z> and <t,Z> are the fours groups of T, outside Q", fours);
    r.Check("S* n T = <t,Z>", Intersect(m.s_star, m.t_sub) == tt);
  }
  r.Check("S* = Q<t> of index 2 in S",
          m.s_star.order() * 2 == m.s.order() && m.s_star.is_subgroup_of(m.s));

  {
    std::vector<std::string> good;
    std::string gd;
    Elem yt = G.mul(m.y, m.t);
    const std::pair<Elem, const char*> tops[] = {
        {m.y, "y"}, {m.t, "t"}, {yt, "yt"}};
    for (const auto& [x, label] : tops) {
      Subgroup c = Extend(o2up, x);
      Image qt = Quotient(c, m.q);
      if (IsomorphicTo(qt.group->whole(), RefS3xC3())) good.push_back(label);
    }
    std::string w = "O^2(C~)<x>/Q = S3 x C3 for x in {";
    for (size_t k = 0; k < good.size(); ++k) w += (k ? ", " : "") + good[k];
    w += "}; O^2(C~)S* gives (C3 x C3):2";
    bool ok = !good.empty() && m.c_star.order() == 576 &&
              m.q.is_subgroup_of(m.c_star) &&
              IsomorphicTo(Quotient(m.c_star, m.q).group->whole(), RefS3xC3());
    r.Check("index-2 C~* over Q with C~*/Q = S3 x C3", ok, w);
  }

  r.Check("P1, P2 normal in S*",
          IsNormalIn(m.p1, m.s_star) && IsNormalIn(m.p2, m.s_star));
  {
    size_t rank = 0;
    for (const Subgroup& h : AllSubgroups(m.s_star)) {
      if (IsElementaryAbelian(h, 2)) rank = std::max(rank, h.order());
    }
    r.Check("no elementary abelian 2^4 in S*", rank < 16,
            "largest elementary abelian order " + std::to_string(rank));
  }
  {
    std::vector<Subgroup> q8s;
    for (const Subgroup& h : AllSubgroups(m.q)) {
      if (IsQ8(h)) q8s.push_back(h);
    }
    bool ok = q8s.size() == 2 &&
              ((q8s[0] == m.p1 && q8s[1] == m.p2) ||
               (q8s[0] == m.p2 && q8s[1] == m.p1));
    r.Check("P1, P2 are the only Q8 in Q", ok,
            std::to_string(q8s.size()) + " quaternion subgroups");
  }
  r.Finish();
  r.millis = Since(t0);
  return r;
}

GeneratorMap UniquenessTildeC(const TildeCModel& a, const TildeCModel& b) {
  std::optional<GeneratorMap> m = FindIsomorphism(a.group, b.group);
  if (!m) throw InternalError("assembled C~ variants are not isomorphic");
  return *m;
}

namespace {

// Every product maps to the product of images.
bool IsHomomorphism(const Subgroup& a, const Subgroup& b,
                    const std::vector<Elem>& map) {
  const Group& A = a.group();
  const Group& B = b.group();
  std::vector<Elem> elems = a.elements();
  for (Elem x : elems) {
    for (Elem y : elems) {
      if (map[A.mul(x, y)] != B.mul(map[x], map[y])) return false;
    }
  }
  return true;
}

ReportNode UniquenessReport() {
  ReportNode r;
  r.name = "uniqueness";
  auto t0 = std::chrono::steady_clock::now();
  TildeCModel first = AssembleTildeC(TChoice::kFirst);
  TildeCModel last = AssembleTildeC(TChoice::kLast);
  TildeCModel moved = Relabeled(first, 7);
  r.Check("distinct t witnesses", first.t_rank != last.t_rank,
          std::to_string(first.t_witnesses) + " t witnesses");
  auto iso = [&](const TildeCModel& x, const TildeCModel& y, const char* name) {
    std::optional<GeneratorMap> m = FindIsomorphism(x.group, y.group);
    bool ok = m.has_value() &&
              IsHomomorphism(x.group, y.group, ExtendGeneratorMap(x.group, y.group, *m));
    r.Check(name, ok);
  };
  iso(first, last, "first and last t give isomorphic groups");
  iso(first, moved, "relabeled points give an isomorphic group");
  iso(first, first, "a model is isomorphic to itself");
  r.Finish();
  r.millis = Since(t0);
  return r;
}

bool IsExtraspecial32(const Subgroup& q) {
  Subgroup z = Center(q);
  return q.order() == 32 && z.order() == 2 && DerivedSubgroup(q) == z &&
         Frattini(q) == z;
}

}  // namespace

ReportNode IngestAutG23(const std::optional<std::string>& path) {
  ReportNode r;
  r.name = "Aut(G2(3)) ingest";
  if (!path || path->empty() || !std::filesystem::exists(*path)) {
    r.status = Status::kSkipped;
    r.witness = path && !path->empty() ? "no file at " + *path
                                       : "no generator file supplied";
    return r;
  }
  auto t0 = std::chrono::steady_clock::now();
  GroupFile f = ReadGroupFile(*path);
  for (const char* need : {"M_G", "C_G"}) {
    if (!f.subgroups.count(need)) {
      throw InputError(*path + ": missing subgroup block " + need);
    }
  }
  PermGroup g(f.degree, f.generators);
  uint64_t order = g.order();
  r.Check("|G| = 8491392", order == 8491392, std::to_string(order));
  r.Check("Sylow 2-subgroup of order 2^7", PPart(order, 2) == 128,
          std::to_string(PPart(order, 2)));
  for (const auto& [name, gens] : f.subgroups) {
    for (const Perm& x : gens) {
      if (!g.contains(x)) throw InputError(name + " generator outside G");
    }
  }

  auto c = Group::Create(PermGroup(f.degree, f.subgroups.at("C_G")));
  auto mg = Group::Create(PermGroup(f.degree, f.subgroups.at("M_G")));
  Subgroup qg = OpOf(c->whole(), 2);
  r.Check("Q_G = O_2(C_G) extraspecial 2^{1+4}", IsExtraspecial32(qg), Ord(qg));

  // C_G(z) = C_G exactly when |z^G| |C_G| = |G|; z is central in C_G.
  bool large = false;
  std::string lw;
  Subgroup zg = Center(qg);
  if (zg.order() == 2) {
    Elem z = zg.elements()[1];
    bool central = Center(c->whole()).contains(z);
    std::unordered_set<Perm, PermHash> orbit{c->perm(z)};
    std::vector<Perm> queue{c->perm(z)};
    for (size_t k = 0; k < queue.size(); ++k) {
      for (const Perm& x : f.generators) {
        Perm w = Conjugate(queue[k], x);
        if (orbit.insert(w).second) queue.push_back(w);
      }
    }
    bool cz = central && orbit.size() * c->size() == order;
    bool selfc = Centralizer(c->whole(), qg).is_subgroup_of(qg);
    large = cz && selfc;
    lw = "|z^G| = " + std::to_string(orbit.size()) + ", |C_G| = " +
         std::to_string(c->size());
  }
  r.Check("Q_G large in G", large, lw);

  Subgroup ym = YSubgroup(mg->whole(), 2);
  r.Check("|Y_{M_G}| = 2^4", ym.order() == 16, Ord(ym));
  Subgroup vg = CommutatorSubgroup(ym, mg->whole());
  bool natural = false;
  if (ym.order() == 16) {
    LoadedGroup sl = LoadGroup(CatalogSL32().file);
    natural = vg.order() == 8 && OpOf(mg->whole(), 2) == ym &&
              FindIsomorphism(Quotient(mg->whole(), ym).group->whole(),
                              sl.whole)
                  .has_value();
  }
  r.Check("M_G/Y_{M_G} = SL3(2), V_G = [Y, M_G] of order 8", natural);
  auto in_q = [&](Elem x) {
    std::optional<Elem> e = c->find(mg->perm(x));
    return e && qg.contains(*e);
  };
  bool y_out = false, v_in = true;
  ym.members().for_each([&](Elem x) { y_out |= !in_q(x); });
  vg.members().for_each([&](Elem x) { v_in &= in_q(x); });
  r.Check("Y_{M_G} not in Q_G", y_out);
  r.Check("V_G <= Q_G", v_in);
  r.Finish();
  r.millis = Since(t0);
  return r;
}

ReportNode G2Study(const G2Options& opt) {
  ReportNode root;
  root.name = "g2";
  auto t0 = std::chrono::steady_clock::now();

  {
    auto t1 = std::chrono::steady_clock::now();
    ReportNode q = Q8Report(ComputeQ8Facts(BuildQ8CentralProduct()));
    q.millis = Since(t1);
    root.Add(std::move(q));
  }
  {
    auto t1 = std::chrono::steady_clock::now();
    TSearchStats s = SearchTInGL43();
    ReportNode& n = root.Check("GL4(3) t-search exhausts",
                               s.witnesses == 0 && s.admissible > 0 &&
                                   s.commute_with_y == s.admissible,
                               Stats(s));
    n.millis = Since(t1);
  }
  {
    auto t1 = std::chrono::steady_clock::now();
    TildeCModel m = AssembleTildeC();
    ReportNode& a = root.Check(
        "C~ assembly", m.group.order() == 1152,
        "order " + std::to_string(m.group.order()) + " on " +
            std::to_string(m.universe->degree()) + " vectors of F_3^8, t " +
            std::to_string(m.t_rank + 1) + " of " + std::to_string(m.t_witnesses));
    a.millis = Since(t1);
    root.Add(VerifyTildeC(m));
  }
  root.Add(UniquenessReport());
  root.Add(IngestAutG23(opt.ingest));
  root.Finish();
  root.millis = Since(t0);
  return root;
}

}  // namespace fusionloc
