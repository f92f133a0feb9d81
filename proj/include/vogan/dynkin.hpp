// Dynkin diagrams: colored, marked multigraphs with edge arrows, built from
// a generalized Cartan matrix, plus automorphism and isomorphism search.

#pragma once

#include <algorithm>
#include <cstdint>
#include <map>
#include <string>
#include <vector>

#include "gcm.hpp"

namespace vogan {

enum class Color { white, black, grey };
enum class Arrow { none, toward_i, toward_j };

inline std::string color_name(Color c) {
  switch (c) {
    case Color::white: return "white";
    case Color::black: return "black";
    default: return "grey";
  }
}

struct DynkinVertex {
  int index = 0;
  Color color = Color::white;
  std::int64_t mark = 1;
};

struct DynkinEdge {
  int i = 0, j = 0;     // i < j
  int lines = 1;
  Arrow arrow = Arrow::none;
};

struct DynkinDiagram {
  std::vector<DynkinVertex> vertices;
  std::vector<DynkinEdge> edges;

  int rank() const { return static_cast<int>(vertices.size()); }

  const DynkinEdge* find_edge(int a, int b) const {
    if (a > b) std::swap(a, b);
    for (const auto& e : edges)
      if (e.i == a && e.j == b) return &e;
    return nullptr;
  }
  bool adjacent(int a, int b) const { return find_edge(a, b) != nullptr; }

  std::vector<int> neighbors(int v) const {
    std::vector<int> out;
    for (const auto& e : edges) {
      if (e.i == v) out.push_back(e.j);
      if (e.j == v) out.push_back(e.i);
    }
    std::sort(out.begin(), out.end());
    return out;
  }

  std::vector<int> grey_vertices() const {
    std::vector<int> g;
    for (const auto& v : vertices)
      if (v.color == Color::grey) g.push_back(v.index);
    return g;
  }

  // Marks carried by odd-colored (grey or black) vertices.
  std::int64_t odd_color_mark_sum() const {
    std::int64_t s = 0;
    for (const auto& v : vertices)
      if (v.color != Color::white) s += v.mark;
    return s;
  }

  void add_edge(int a, int b, int lines, Arrow arrow) {
    DynkinEdge e;
    if (a < b) {
      e.i = a; e.j = b; e.arrow = arrow;
    } else {
      e.i = b; e.j = a;
      e.arrow = arrow == Arrow::toward_i   ? Arrow::toward_j
                : arrow == Arrow::toward_j ? Arrow::toward_i
                                           : Arrow::none;
    }
    e.lines = lines;
    edges.push_back(e);
  }

  void sort_edges() {
    std::sort(edges.begin(), edges.end(), [](const DynkinEdge& a, const DynkinEdge& b) {
      return std::tie(a.i, a.j) < std::tie(b.i, b.j);
    });
  }
};

// Diagram of an affine GCM. Vertex colors follow the diagonal/parity rules:
// white for a_ii = 2 off the odd set, black for a_ii = 2 on it, grey for
// a_ii = 0. Edge multiplicity is max(|a_ij|, |a_ji|); an arrow points at the
// vertex whose row has the larger entry magnitude.
inline DynkinDiagram diagram_from_gcm(const GeneralizedCartanMatrix& gcm) {
  gcm.validate();
  AffineCheck chk = validate_affine(gcm);
  if (!chk.affine) fail("not affine type: " + chk.reason);
  std::vector<std::int64_t> mk = marks(gcm);

  DynkinDiagram d;
  for (int i = 0; i < gcm.rank; ++i) {
    DynkinVertex v;
    v.index = i;
    v.mark = mk[i];
    if (gcm.at(i, i) == Rational(0))
      v.color = Color::grey;
    else
      v.color = gcm.tau.count(i) ? Color::black : Color::white;
    d.vertices.push_back(v);
  }
  for (int i = 0; i < gcm.rank; ++i)
    for (int j = i + 1; j < gcm.rank; ++j) {
      const Rational& aij = gcm.at(i, j);
      const Rational& aji = gcm.at(j, i);
      if (aij.is_zero()) continue;
      if (!aij.is_integer() || !aji.is_integer())
        fail("non-integer off-diagonal entry at (" + std::to_string(i) + "," +
             std::to_string(j) + ")");
      std::int64_t mi = std::abs(aij.num());
      std::int64_t mj = std::abs(aji.num());
      if (mi * mj > 4) fail("edge multiplicity out of range at (" +
                            std::to_string(i) + "," + std::to_string(j) + ")");
      int lines = static_cast<int>(std::max(mi, mj));
      Arrow arrow = Arrow::none;
      if (lines > 1 && mi != mj) arrow = mi > mj ? Arrow::toward_i : Arrow::toward_j;
      d.add_edge(i, j, lines, arrow);
    }
  d.sort_edges();
  return d;
}

inline bool preserves_structure(const DynkinDiagram& from, const DynkinDiagram& to,
                                const std::vector<int>& perm) {
  for (const auto& v : from.vertices) {
    const DynkinVertex& w = to.vertices[perm[v.index]];
    if (v.color != w.color || v.mark != w.mark) return false;
  }
  if (from.edges.size() != to.edges.size()) return false;
  for (const auto& e : from.edges) {
    int a = perm[e.i], b = perm[e.j];
    const DynkinEdge* f = to.find_edge(a, b);
    if (!f || f->lines != e.lines) return false;
    // Arrow must point at the image of the vertex it pointed at.
    int head_from = e.arrow == Arrow::toward_i ? e.i
                    : e.arrow == Arrow::toward_j ? e.j : -1;
    int head_to = f->arrow == Arrow::toward_i ? f->i
                  : f->arrow == Arrow::toward_j ? f->j : -1;
    if (head_from == -1) {
      if (head_to != -1) return false;
    } else if (head_to != perm[head_from]) {
      return false;
    }
  }
  return true;
}

inline bool is_automorphism(const DynkinDiagram& d, const std::vector<int>& perm) {
  return preserves_structure(d, d, perm);
}

namespace detail {

inline void automorphism_search(const DynkinDiagram& from, const DynkinDiagram& to,
                                std::vector<int>& perm, std::vector<bool>& used,
                                std::size_t pos, bool stop_at_first,
                                std::vector<std::vector<int>>& out) {
  int n = from.rank();
  if (pos == static_cast<std::size_t>(n)) {
    if (preserves_structure(from, to, perm)) out.push_back(perm);
    return;
  }
  const DynkinVertex& v = from.vertices[pos];
  for (int img = 0; img < n; ++img) {
    if (used[img]) continue;
    const DynkinVertex& w = to.vertices[img];
    if (v.color != w.color || v.mark != w.mark) continue;
    // Partial consistency against already-assigned vertices.
    bool ok = true;
    for (std::size_t prev = 0; prev < pos && ok; ++prev) {
      const DynkinEdge* e = from.find_edge(static_cast<int>(pos), static_cast<int>(prev));
      const DynkinEdge* f = to.find_edge(img, perm[prev]);
      if ((e == nullptr) != (f == nullptr)) ok = false;
      else if (e && e->lines != f->lines) ok = false;
    }
    if (!ok) continue;
    perm[pos] = img;
    used[img] = true;
    automorphism_search(from, to, perm, used, pos + 1, stop_at_first, out);
    used[img] = false;
    if (stop_at_first && !out.empty()) return;
  }
}

}  // namespace detail

// All structure-preserving vertex permutations, sorted lexicographically;
// always contains the identity.
inline std::vector<std::vector<int>> diagram_automorphisms(const DynkinDiagram& d) {
  std::vector<std::vector<int>> out;
  std::vector<int> perm(d.rank());
  std::vector<bool> used(d.rank(), false);
  detail::automorphism_search(d, d, perm, used, 0, false, out);
  std::sort(out.begin(), out.end());
  return out;
}

inline bool structurally_isomorphic(const DynkinDiagram& a, const DynkinDiagram& b) {
  if (a.rank() != b.rank() || a.edges.size() != b.edges.size()) return false;
  std::vector<std::vector<int>> out;
  std::vector<int> perm(a.rank());
  std::vector<bool> used(a.rank(), false);
  detail::automorphism_search(a, b, perm, used, 0, true, out);
  return !out.empty();
}

}  // namespace vogan
