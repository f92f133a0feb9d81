// The seven affine untwisted families: parameter validation, simple root
// systems, the Cartan matrix derived from root pairings, and the hard-coded
// catalogue diagrams the derivation is checked against.

#pragma once

#include <optional>
#include <string>
#include <vector>

#include "dynkin.hpp"
#include "gcm.hpp"
#include "root_vector.hpp"

namespace vogan {

enum class Family { A, B, B0, C, D, D21, F4, G3 };

inline std::string family_name(Family f) {
  switch (f) {
    case Family::A: return "A";
    case Family::B: return "B";
    case Family::B0: return "B0";
    case Family::C: return "C";
    case Family::D: return "D";
    case Family::D21: return "D21";
    case Family::F4: return "F4";
    default: return "G3";
  }
}

inline std::optional<Family> parse_family(const std::string& s) {
  if (s == "A") return Family::A;
  if (s == "B") return Family::B;
  if (s == "B0") return Family::B0;
  if (s == "C") return Family::C;
  if (s == "D") return Family::D;
  if (s == "D21") return Family::D21;
  if (s == "F4") return Family::F4;
  if (s == "G3") return Family::G3;
  return std::nullopt;
}

struct FamilySpec {
  Family family = Family::A;
  int m = 0;
  int n = 0;
  Rational alpha = Rational(1);  // D21 only

  static FamilySpec A(int m, int n) { return {Family::A, m, n, Rational(1)}; }
  static FamilySpec B(int m, int n) { return {Family::B, m, n, Rational(1)}; }
  static FamilySpec B0(int n) { return {Family::B0, 0, n, Rational(1)}; }
  static FamilySpec C(int n) { return {Family::C, 0, n, Rational(1)}; }
  static FamilySpec D(int m, int n) { return {Family::D, m, n, Rational(1)}; }
  static FamilySpec D21(const Rational& a = Rational(1)) {
    return {Family::D21, 0, 0, a};
  }
  static FamilySpec F4() { return {Family::F4, 0, 0, Rational(1)}; }
  static FamilySpec G3() { return {Family::G3, 0, 0, Rational(1)}; }

  void validate() const {
    switch (family) {
      case Family::A:
        if (m < 0 || n < 0) fail("A(m,n): parameters must be nonnegative");
        if (m == 0 && n == 0) fail("A(0,0) is excluded (degenerate pairings)");
        break;
      case Family::B:
        if (m < 2) fail("B(m,n): m >= 2 required");
        if (n < 1) fail("B(m,n): n >= 1 required");
        break;
      case Family::B0:
        if (n < 1) fail("B0(n): n >= 1 required");
        break;
      case Family::C:
        if (n < 2) fail("C(n): n >= 2 required");
        break;
      case Family::D:
        if (m < 2) fail("D(m,n): m >= 2 required");
        if (n < 1) fail("D(m,n): n >= 1 required");
        break;
      case Family::D21:
        if (alpha == Rational(0) || alpha == Rational(-1))
          fail("D21(alpha): alpha must avoid 0 and -1");
        break;
      default:
        break;
    }
  }

  std::vector<std::string> warnings() const {
    std::vector<std::string> w;
    if ((family == Family::B || family == Family::D) && m == 2)
      w.push_back(family_name(family) + ": m = 2 sits at the boundary of the listed range m > 2");
    if (family == Family::A && m == n)
      w.push_back("A(m,m): Cartan matrix has a 2-dimensional null space; marks are the decreed all-ones vector");
    return w;
  }

  // Number of simple roots including the affine one.
  int rank() const {
    switch (family) {
      case Family::A: return m + n + 2;
      case Family::B: return m + n + 1;
      case Family::B0: return n + 1;
      case Family::C: return n + 1;
      case Family::D: return m + n + 1;
      case Family::D21: return 4;
      case Family::F4: return 5;
      default: return 4;
    }
  }

  InnerProduct form() const {
    switch (family) {
      case Family::D21: return InnerProduct::d21(alpha);
      case Family::F4: return InnerProduct::f4();
      case Family::G3: return InnerProduct::g3();
      default: return InnerProduct::standard();
    }
  }

  std::string name() const {
    switch (family) {
      case Family::A: return "A(" + std::to_string(m) + "," + std::to_string(n) + ")";
      case Family::B: return "B(" + std::to_string(m) + "," + std::to_string(n) + ")";
      case Family::B0: return "B(0," + std::to_string(n) + ")";
      case Family::C: return "C(" + std::to_string(n) + ")";
      case Family::D: return "D(" + std::to_string(m) + "," + std::to_string(n) + ")";
      case Family::D21: return "D(2,1;" + alpha.str() + ")";
      case Family::F4: return "F(4)";
      default: return "G(3)";
    }
  }
};

namespace detail {
inline RootVector rv_k() {
  RootVector r;
  r.set(BasisSymbol::K(), Rational(1));
  return r;
}
inline RootVector rv_e(int i, std::int64_t c = 1) {
  RootVector r;
  r.set(BasisSymbol::E(i), Rational(c));
  return r;
}
inline RootVector rv_d(int i, std::int64_t c = 1) {
  RootVector r;
  r.set(BasisSymbol::Delta(i), Rational(c));
  return r;
}
}  // namespace detail

// Simple roots, affine root first. Index layout per family:
//   A(m,n):  a0 = k + d_{n+1} - e1, e-chain 1..m, e_{m+1} - d1, d-chain.
//   B(m,n):  a0 = k - 2 d1, d-chain, d_n - e1, e-chain, e_m.
//   B0(n):   a0 = k - 2 d1, d-chain, d_n.
//   C(n):    a0 = k - e1 - d1, e1 - d1, d-chain on d1..d_{n-1}, 2 d_{n-1}.
//   D(m,n):  as B(m,n) but ending in the fork e_{m-1} -+ e_m.
//   D21:     a0 = k - (e1+e2+e3), e1 - e2 - e3, 2 e2, 2 e3.
//   F4:      a0 = k - 2 d, d - (e1+e2+e3)/2, e3, e2 - e3, e1 - e2.
//   G3:      a0 = k - 2 d, d + e1, e2, e3 - e2.
inline std::vector<RootVector> simple_roots(const FamilySpec& spec) {
  using namespace detail;
  spec.validate();
  std::vector<RootVector> roots;
  switch (spec.family) {
    case Family::A: {
      roots.push_back(rv_k() + rv_d(spec.n + 1) - rv_e(1));
      for (int i = 1; i <= spec.m; ++i) roots.push_back(rv_e(i) - rv_e(i + 1));
      roots.push_back(rv_e(spec.m + 1) - rv_d(1));
      for (int j = 1; j <= spec.n; ++j) roots.push_back(rv_d(j) - rv_d(j + 1));
      break;
    }
    case Family::B: {
      roots.push_back(rv_k() - rv_d(1, 2));
      for (int j = 1; j < spec.n; ++j) roots.push_back(rv_d(j) - rv_d(j + 1));
      roots.push_back(rv_d(spec.n) - rv_e(1));
      for (int i = 1; i < spec.m; ++i) roots.push_back(rv_e(i) - rv_e(i + 1));
      roots.push_back(rv_e(spec.m));
      break;
    }
    case Family::B0: {
      roots.push_back(rv_k() - rv_d(1, 2));
      for (int j = 1; j < spec.n; ++j) roots.push_back(rv_d(j) - rv_d(j + 1));
      roots.push_back(rv_d(spec.n));
      break;
    }
    case Family::C: {
      roots.push_back(rv_k() - rv_e(1) - rv_d(1));
      roots.push_back(rv_e(1) - rv_d(1));
      for (int j = 1; j < spec.n - 1; ++j) roots.push_back(rv_d(j) - rv_d(j + 1));
      roots.push_back(rv_d(spec.n - 1, 2));
      break;
    }
    case Family::D: {
      roots.push_back(rv_k() - rv_d(1, 2));
      for (int j = 1; j < spec.n; ++j) roots.push_back(rv_d(j) - rv_d(j + 1));
      roots.push_back(rv_d(spec.n) - rv_e(1));
      for (int i = 1; i < spec.m - 1; ++i) roots.push_back(rv_e(i) - rv_e(i + 1));
      roots.push_back(rv_e(spec.m - 1) - rv_e(spec.m));
      roots.push_back(rv_e(spec.m - 1) + rv_e(spec.m));
      break;
    }
    case Family::D21: {
      roots.push_back(rv_k() - rv_e(1) - rv_e(2) - rv_e(3));
      roots.push_back(rv_e(1) - rv_e(2) - rv_e(3));
      roots.push_back(rv_e(2, 2));
      roots.push_back(rv_e(3, 2));
      break;
    }
    case Family::F4: {
      RootVector half_sum;
      for (int i = 1; i <= 3; ++i) half_sum.add(BasisSymbol::E(i), Rational(1, 2));
      roots.push_back(rv_k() - rv_d(0, 2));
      roots.push_back(rv_d(0) - half_sum);
      roots.push_back(rv_e(3));
      roots.push_back(rv_e(2) - rv_e(3));
      roots.push_back(rv_e(1) - rv_e(2));
      break;
    }
    case Family::G3: {
      roots.push_back(rv_k() - rv_d(0, 2));
      roots.push_back(rv_d(0) + rv_e(1));
      roots.push_back(rv_e(2));
      roots.push_back(rv_e(3) - rv_e(2));
      break;
    }
  }
  return roots;
}

// Cartan matrix of a simple root list. Non-isotropic rows are the canonical
// 2(a_i|a_j)/(a_i|a_i). Isotropic rows keep the raw pairings, scaled to a
// primitive integer vector and negated when the leading nonzero entry is
// positive; this is invariant under rescaling the form.
inline GeneralizedCartanMatrix gcm_from_roots(const std::vector<RootVector>& roots,
                                              const InnerProduct& form) {
  const int r = static_cast<int>(roots.size());
  if (r == 0) fail("gcm_from_roots: empty root list");
  for (int i = 0; i < r; ++i) {
    if (roots[i].is_zero()) fail("degenerate root system: zero root");
    for (int j = i + 1; j < r; ++j)
      if (roots[i] == roots[j]) fail("degenerate root system: repeated root");
  }

  RatMatrix gram(r, r);
  for (int i = 0; i < r; ++i)
    for (int j = 0; j < r; ++j) gram(i, j) = form.inner(roots[i], roots[j]);

  GeneralizedCartanMatrix gcm;
  gcm.rank = r;
  gcm.entries = RatMatrix(r, r);
  for (int i = 0; i < r; ++i) {
    if (!gram(i, i).is_zero()) {
      for (int j = 0; j < r; ++j)
        gcm.entries(i, j) = Rational(2) * gram(i, j) / gram(i, i);
      continue;
    }
    // Isotropic row.
    std::vector<Rational> row(r);
    bool all_zero = true;
    for (int j = 0; j < r; ++j) {
      row[j] = gram(i, j);
      if (j != i && !row[j].is_zero()) all_zero = false;
    }
    if (all_zero) fail("degenerate root system: isotropic root orthogonal to all others");
    std::vector<std::int64_t> prim = primitive_integer(row);
    int lead_sign = 0;
    for (int j = 0; j < r && lead_sign == 0; ++j)
      if (j != i && prim[j] != 0) lead_sign = prim[j] > 0 ? 1 : -1;
    for (int j = 0; j < r; ++j)
      gcm.entries(i, j) = Rational(lead_sign > 0 ? -prim[j] : prim[j]);
  }
  for (int i = 0; i < r; ++i)
    if (form.parity(roots[i]) == 1) gcm.tau.insert(i);
  gcm.validate();
  return gcm;
}

inline GeneralizedCartanMatrix gcm_from_roots(const std::vector<RootVector>& roots) {
  return gcm_from_roots(roots, InnerProduct::standard());
}

// Catalogue Cartan matrix. Every family derives from its simple roots except
// D(2,1;alpha), whose stored root list pairs to an all-ones null vector; the
// catalogue matrix for it comes from the distinguished system
// {k - 2 e1, e1 - e2 - e3, 2 e2, 2 e3}, which carries the figure marks
// (1,2,1,1) for every alpha.
inline GeneralizedCartanMatrix catalogue_gcm(const FamilySpec& spec) {
  using namespace detail;
  spec.validate();
  if (spec.family == Family::D21) {
    std::vector<RootVector> dist;
    dist.push_back(rv_k() - rv_e(1, 2));
    dist.push_back(rv_e(1) - rv_e(2) - rv_e(3));
    dist.push_back(rv_e(2, 2));
    dist.push_back(rv_e(3, 2));
    return gcm_from_roots(dist, spec.form());
  }
  return gcm_from_roots(simple_roots(spec), spec.form());
}

namespace detail {

inline DynkinVertex vx(int i, Color c, std::int64_t mark) { return {i, c, mark}; }

}  // namespace detail

// Hard-coded catalogue diagrams, built independently of the derivation so the
// round-trip check is meaningful.
inline DynkinDiagram catalogue_diagram(const FamilySpec& spec) {
  using detail::vx;
  spec.validate();
  DynkinDiagram d;
  switch (spec.family) {
    case Family::A: {
      int N = spec.rank();
      for (int i = 0; i < N; ++i)
        d.vertices.push_back(vx(i, i == 0 || i == spec.m + 1 ? Color::grey : Color::white, 1));
      for (int i = 0; i < N; ++i) d.add_edge(i, (i + 1) % N, 1, Arrow::none);
      break;
    }
    case Family::B: {
      int N = spec.rank();  // n+m+1 vertices, grey at n
      for (int i = 0; i < N; ++i)
        d.vertices.push_back(vx(i, i == spec.n ? Color::grey : Color::white, i == 0 ? 1 : 2));
      d.add_edge(0, 1, 2, Arrow::toward_j);
      for (int i = 1; i < N - 2; ++i) d.add_edge(i, i + 1, 1, Arrow::none);
      if (N >= 3) d.add_edge(N - 2, N - 1, 2, Arrow::toward_j);
      break;
    }
    case Family::B0: {
      int N = spec.rank();
      for (int i = 0; i < N; ++i)
        d.vertices.push_back(vx(i, i == N - 1 ? Color::black : Color::white, i == 0 ? 1 : 2));
      if (N == 2) {
        d.add_edge(0, 1, 4, Arrow::toward_j);
      } else {
        d.add_edge(0, 1, 2, Arrow::toward_j);
        for (int i = 1; i < N - 2; ++i) d.add_edge(i, i + 1, 1, Arrow::none);
        d.add_edge(N - 2, N - 1, 2, Arrow::toward_j);
      }
      break;
    }
    case Family::C: {
      int N = spec.rank();  // greys 0,1; chain 2..n-1; end n
      for (int i = 0; i < N; ++i) {
        Color c = i <= 1 ? Color::grey : Color::white;
        std::int64_t mark = (i <= 1 || i == N - 1) ? 1 : 2;
        d.vertices.push_back(vx(i, c, mark));
      }
      if (spec.n == 2) {
        d.add_edge(0, 1, 1, Arrow::none);
        d.add_edge(0, 2, 1, Arrow::none);
        d.add_edge(1, 2, 1, Arrow::none);
      } else {
        d.add_edge(0, 1, 2, Arrow::none);
        d.add_edge(0, 2, 1, Arrow::none);
        d.add_edge(1, 2, 1, Arrow::none);
        for (int i = 2; i < N - 2; ++i) d.add_edge(i, i + 1, 1, Arrow::none);
        d.add_edge(N - 2, N - 1, 2, Arrow::toward_i);
      }
      break;
    }
    case Family::D: {
      int N = spec.rank();  // chain 0..n+m-2, fork n+m-1, n+m; grey at n
      for (int i = 0; i < N; ++i) {
        std::int64_t mark = (i == 0 || i >= N - 2) ? 1 : 2;
        d.vertices.push_back(vx(i, i == spec.n ? Color::grey : Color::white, mark));
      }
      d.add_edge(0, 1, 2, Arrow::toward_j);
      for (int i = 1; i < N - 3; ++i) d.add_edge(i, i + 1, 1, Arrow::none);
      d.add_edge(N - 3, N - 2, 1, Arrow::none);
      d.add_edge(N - 3, N - 1, 1, Arrow::none);
      break;
    }
    case Family::D21: {
      d.vertices = {vx(0, Color::white, 1), vx(1, Color::grey, 2),
                    vx(2, Color::white, 1), vx(3, Color::white, 1)};
      d.add_edge(0, 1, 1, Arrow::none);
      d.add_edge(1, 2, 1, Arrow::none);
      d.add_edge(1, 3, 1, Arrow::none);
      break;
    }
    case Family::F4: {
      d.vertices = {vx(0, Color::white, 1), vx(1, Color::grey, 2),
                    vx(2, Color::white, 3), vx(3, Color::white, 2),
                    vx(4, Color::white, 1)};
      d.add_edge(0, 1, 3, Arrow::toward_j);
      d.add_edge(1, 2, 1, Arrow::none);
      d.add_edge(2, 3, 2, Arrow::toward_i);
      d.add_edge(3, 4, 1, Arrow::none);
      break;
    }
    case Family::G3: {
      d.vertices = {vx(0, Color::white, 1), vx(1, Color::grey, 2),
                    vx(2, Color::white, 4), vx(3, Color::white, 2)};
      d.add_edge(0, 1, 4, Arrow::toward_j);
      d.add_edge(1, 2, 1, Arrow::none);
      d.add_edge(2, 3, 3, Arrow::toward_i);
      break;
    }
  }
  d.sort_edges();
  return d;
}

struct Erratum {
  std::string family;
  std::string item;
  std::string printed;
  std::string stored;
  std::string note;
};

// Variant readings repaired in the stored root lists, kept machine-readable.
inline std::vector<Erratum> root_errata() {
  return {
      {"B", "alpha_{n+m-1}", "alpha_{n+m+1} = e_{m-1} - e_m", "alpha_{n+m-1} = e_{m-1} - e_m",
       "chain index adjusted; the listing skips to n+m+1"},
      {"D", "alpha_{n+m}", "alpha_{n+m-1} listed twice", "e_{m-1} - e_m and e_{m-1} + e_m",
       "duplicated index split into the two fork roots"},
      {"C", "alpha_n", "alpha_n = d_{n-1} - d_n with end 2 d_{n-1}",
       "chain ends at d_{n-2} - d_{n-1}; affine rank n+1",
       "delta indices run 1..n-1 so the end root 2 d_{n-1} is consistent"},
      {"C", "e", "bare symbol e", "e1", "the single even direction is stored as e1"},
      {"F4", "alpha_0", "k - 3 d", "k - 2 d",
       "only the coefficient 2 gives an integer Cartan pairing with the grey root"},
      {"G3", "alpha_0", "k - 4 d", "k - 2 d",
       "only the coefficient 2 gives an integer Cartan pairing with the grey root"},
      {"D21", "catalogue matrix", "null vector of the stored roots is (1,1,1,1)",
       "distinguished system k - 2 e1, e1 - e2 - e3, 2 e2, 2 e3",
       "the distinguished system carries the figure marks (1,2,1,1) for every alpha"},
      {"F4/G3", "figure headings", "exceptional diagram sets under swapped headings",
       "F4: 5-vertex chain, marks (1,2,3,2,1); G3: 4-vertex chain, marks (1,2,4,2)",
       "shapes follow the derivation; label rows keep their printed heading"},
  };
}

}  // namespace vogan
