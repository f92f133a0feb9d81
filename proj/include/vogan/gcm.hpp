// Generalized Cartan matrices with a parity subset, affineness tests, and
// the primitive positive marks vector.

#pragma once

#include <cstdint>
#include <set>
#include <string>
#include <vector>

#include "matrix.hpp"

namespace vogan {

struct GeneralizedCartanMatrix {
  int rank = 0;
  RatMatrix entries;      // rank x rank
  std::set<int> tau;      // indices of odd generators

  const Rational& at(int i, int j) const { return entries(i, j); }

  // Structural invariants: square, diagonal in {0,2}, zero diagonal only on
  // odd generators, and a symmetric zero pattern off the diagonal.
  void validate() const {
    if (rank <= 0 || entries.rows() != static_cast<std::size_t>(rank) ||
        entries.cols() != static_cast<std::size_t>(rank))
      fail("gcm: matrix is not rank x rank");
    for (int i = 0; i < rank; ++i) {
      const Rational& d = at(i, i);
      if (d != Rational(0) && d != Rational(2))
        fail("gcm: unsupported diagonal entry " + d.str());
      if (d == Rational(0) && tau.count(i) == 0)
        fail("gcm: zero diagonal at index " + std::to_string(i) +
             " outside the odd subset");
    }
    for (int i = 0; i < rank; ++i)
      for (int j = 0; j < rank; ++j)
        if (i != j && at(i, j).is_zero() != at(j, i).is_zero())
          fail("gcm: asymmetric zero pattern at (" + std::to_string(i) + "," +
               std::to_string(j) + ")");
    for (int i : tau)
      if (i < 0 || i >= rank) fail("gcm: odd index out of range");
  }
};

// The unique primitive positive integer vector a with A a = 0.
inline std::vector<std::int64_t> marks(const GeneralizedCartanMatrix& gcm) {
  gcm.validate();
  std::vector<std::vector<Rational>> ns = null_space(gcm.entries);
  if (ns.size() != 1)
    fail("not affine: null space dimension " + std::to_string(ns.size()));
  std::vector<std::int64_t> a = primitive_integer(ns[0]);
  bool all_pos = true, all_neg = true;
  for (std::int64_t x : a) {
    if (x <= 0) all_pos = false;
    if (x >= 0) all_neg = false;
  }
  if (all_neg)
    for (auto& x : a) x = -x;
  else if (!all_pos)
    fail("not affine type: no positive null vector");
  return a;
}

struct AffineCheck {
  bool affine = false;
  std::string reason;  // empty when affine
};

inline bool is_indecomposable(const GeneralizedCartanMatrix& gcm) {
  std::vector<int> parent(gcm.rank);
  for (int i = 0; i < gcm.rank; ++i) parent[i] = i;
  auto find = [&](int x) {
    while (parent[x] != x) x = parent[x] = parent[parent[x]];
    return x;
  };
  for (int i = 0; i < gcm.rank; ++i)
    for (int j = i + 1; j < gcm.rank; ++j)
      if (!gcm.at(i, j).is_zero() || !gcm.at(j, i).is_zero())
        parent[find(i)] = find(j);
  for (int i = 1; i < gcm.rank; ++i)
    if (find(i) != find(0)) return false;
  return true;
}

// Affine means: indecomposable with a one-dimensional null space spanned by
// a positive vector.
inline AffineCheck validate_affine(const GeneralizedCartanMatrix& gcm) {
  gcm.validate();
  if (!is_indecomposable(gcm)) return {false, "decomposable"};
  std::vector<std::vector<Rational>> ns = null_space(gcm.entries);
  if (ns.empty()) return {false, "no null vector"};
  if (ns.size() > 1)
    return {false, "null space dimension " + std::to_string(ns.size())};
  std::vector<std::int64_t> a = primitive_integer(ns[0]);
  bool uniform = true;
  for (std::int64_t x : a)
    if (x == 0 || x * a[0] < 0) uniform = false;
  if (!uniform) return {false, "no positive null vector"};
  return {true, ""};
}

}  // namespace vogan
