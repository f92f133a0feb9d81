// Vogan diagrams: a diagram involution plus a painting of fixed vertices,
// the orbit set entering the parity sum, and the validity test.

#pragma once

#include <algorithm>
#include <set>
#include <string>
#include <vector>

#include "dynkin.hpp"

namespace vogan {

struct DiagramInvolution {
  std::vector<int> perm;

  static DiagramInvolution identity(int rank) {
    DiagramInvolution d;
    d.perm.resize(rank);
    for (int i = 0; i < rank; ++i) d.perm[i] = i;
    return d;
  }

  bool is_identity() const {
    for (std::size_t i = 0; i < perm.size(); ++i)
      if (perm[i] != static_cast<int>(i)) return false;
    return true;
  }

  bool fixes(int v) const { return perm[v] == v; }

  std::vector<int> fixed_vertices() const {
    std::vector<int> out;
    for (std::size_t i = 0; i < perm.size(); ++i)
      if (perm[i] == static_cast<int>(i)) out.push_back(static_cast<int>(i));
    return out;
  }

  // Two-element orbits as ordered pairs (a < b).
  std::vector<std::pair<int, int>> two_orbits() const {
    std::vector<std::pair<int, int>> out;
    for (std::size_t i = 0; i < perm.size(); ++i)
      if (perm[i] > static_cast<int>(i)) out.push_back({static_cast<int>(i), perm[i]});
    return out;
  }

  void validate(const DynkinDiagram& diagram) const {
    if (perm.size() != static_cast<std::size_t>(diagram.rank()))
      fail("involution: size mismatch");
    for (std::size_t i = 0; i < perm.size(); ++i)
      if (perm[perm[i]] != static_cast<int>(i)) fail("involution: not order <= 2");
    if (!is_automorphism(diagram, perm))
      fail("involution: not a diagram automorphism");
  }

  friend bool operator==(const DiagramInvolution& a, const DiagramInvolution& b) {
    return a.perm == b.perm;
  }
  friend bool operator<(const DiagramInvolution& a, const DiagramInvolution& b) {
    return a.perm < b.perm;
  }
};

struct Painting {
  std::set<int> painted;

  bool contains(int v) const { return painted.count(v) > 0; }

  friend bool operator==(const Painting& a, const Painting& b) {
    return a.painted == b.painted;
  }
  friend bool operator<(const Painting& a, const Painting& b) {
    return a.painted < b.painted;
  }
};

struct VoganDiagram {
  DynkinDiagram diagram;
  DiagramInvolution d;
  Painting p;

  // Paintings live on involution-fixed white or black vertices.
  void validate() const {
    d.validate(diagram);
    for (int v : p.painted) {
      if (v < 0 || v >= diagram.rank()) fail("painting: vertex out of range");
      if (!d.fixes(v)) fail("painting: vertex " + std::to_string(v) + " not fixed");
      if (diagram.vertices[v].color == Color::grey)
        fail("painting: grey vertex " + std::to_string(v) + " not paintable");
    }
  }

  friend bool operator==(const VoganDiagram& a, const VoganDiagram& b) {
    return a.d == b.d && a.p == b.p;
  }
  friend bool operator<(const VoganDiagram& a, const VoganDiagram& b) {
    if (a.d.perm != b.d.perm) return a.d.perm < b.d.perm;
    return a.p.painted < b.p.painted;
  }
};

// Orbits entering the parity sum: painted singletons, adjacent white pairs,
// and non-adjacent grey pairs. Black two-element orbits are excluded; the
// flag reports whether any were seen.
struct SSet {
  std::vector<std::vector<int>> orbits;
  bool black_pair_seen = false;
};

inline SSet s_set(const VoganDiagram& vd) {
  SSet s;
  for (int v : vd.p.painted) s.orbits.push_back({v});
  for (auto [a, b] : vd.d.two_orbits()) {
    Color ca = vd.diagram.vertices[a].color;
    Color cb = vd.diagram.vertices[b].color;
    bool adj = vd.diagram.adjacent(a, b);
    if (ca == Color::white && cb == Color::white && adj)
      s.orbits.push_back({a, b});
    else if (ca == Color::grey && cb == Color::grey && !adj)
      s.orbits.push_back({a, b});
    else if (ca == Color::black && cb == Color::black)
      s.black_pair_seen = true;
  }
  std::sort(s.orbits.begin(), s.orbits.end());
  return s;
}

// Each orbit contributes the mark of one representative (orbit members carry
// equal marks).
inline std::int64_t odd_mark_sum(const VoganDiagram& vd) {
  std::int64_t sum = 0;
  for (const auto& orbit : s_set(vd).orbits)
    sum += vd.diagram.vertices[orbit.front()].mark;
  return sum;
}

// Valid when one of: (1) the involution fixes every grey vertex; (2) it
// interchanges the two grey vertices and the orbit mark sum is odd; (3) the
// orbit mark sum is odd. Returns the first satisfied condition, 0 if none.
inline int validity_condition(const VoganDiagram& vd) {
  std::vector<int> greys = vd.diagram.grey_vertices();
  bool greys_fixed = true;
  for (int g : greys)
    if (!vd.d.fixes(g)) greys_fixed = false;
  if (greys_fixed) return 1;
  bool sum_odd = odd_mark_sum(vd) % 2 != 0;
  if (greys.size() == 2 && vd.d.perm[greys[0]] == greys[1] && sum_odd) return 2;
  if (sum_odd) return 3;
  return 0;
}

inline bool is_valid(const VoganDiagram& vd) { return validity_condition(vd) != 0; }

// Unpaint v and toggle each involution-fixed non-grey neighbor. The result
// may be invalid; callers re-check.
inline VoganDiagram painting_flip(const VoganDiagram& vd, int v) {
  if (!vd.p.contains(v)) fail("painting_flip: vertex not painted");
  if (!vd.d.fixes(v)) fail("painting_flip: vertex not fixed");
  VoganDiagram out = vd;
  out.p.painted.erase(v);
  for (int u : vd.diagram.neighbors(v)) {
    if (!vd.d.fixes(u)) continue;
    if (vd.diagram.vertices[u].color == Color::grey) continue;
    if (out.p.painted.count(u))
      out.p.painted.erase(u);
    else
      out.p.painted.insert(u);
  }
  return out;
}

}  // namespace vogan
