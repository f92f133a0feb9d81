// Exhaustive enumeration of valid Vogan diagrams over a Dynkin diagram, and
// their partition under painting flips and diagram relabelings. The moves
// generating the partition are an extrapolated equivalence, labeled as such
// in all outputs.

#pragma once

#include <map>
#include <numeric>
#include <vector>

#include "vogan_diagram.hpp"

namespace vogan {

// Order <= 2 elements of the automorphism group, identity first
// (lexicographic order on permutations).
inline std::vector<DiagramInvolution> enumerate_involutions(const DynkinDiagram& diagram) {
  std::vector<DiagramInvolution> out;
  for (const auto& perm : diagram_automorphisms(diagram)) {
    bool involutive = true;
    for (std::size_t i = 0; i < perm.size(); ++i)
      if (perm[perm[i]] != static_cast<int>(i)) involutive = false;
    if (involutive) out.push_back(DiagramInvolution{perm});
  }
  return out;  // already sorted by diagram_automorphisms
}

// All valid (involution, painting) pairs; involutions in lexicographic
// order, paintings as ascending bitmasks over the fixed paintable vertices.
inline std::vector<VoganDiagram> enumerate_vogan(const DynkinDiagram& diagram) {
  std::vector<VoganDiagram> out;
  for (const auto& d : enumerate_involutions(diagram)) {
    std::vector<int> paintable;
    for (int v : d.fixed_vertices())
      if (diagram.vertices[v].color != Color::grey) paintable.push_back(v);
    const std::size_t count = std::size_t(1) << paintable.size();
    for (std::size_t mask = 0; mask < count; ++mask) {
      VoganDiagram vd{diagram, d, {}};
      for (std::size_t b = 0; b < paintable.size(); ++b)
        if (mask & (std::size_t(1) << b)) vd.p.painted.insert(paintable[b]);
      if (is_valid(vd)) out.push_back(vd);
    }
  }
  return out;
}

namespace detail {

struct UnionFind {
  std::vector<int> parent;
  explicit UnionFind(std::size_t n) : parent(n) {
    std::iota(parent.begin(), parent.end(), 0);
  }
  int find(int x) {
    while (parent[x] != x) x = parent[x] = parent[parent[x]];
    return x;
  }
  void unite(int a, int b) { parent[find(a)] = find(b); }
};

}  // namespace detail

// Partition of a list of Vogan diagrams (all over one underlying diagram)
// under painting flips at any painted vertex and relabeling by diagram
// automorphisms. Classes are listed by smallest member index.
inline std::vector<std::vector<int>> equivalence_classes(
    const std::vector<VoganDiagram>& diagrams) {
  if (diagrams.empty()) return {};
  const DynkinDiagram& base = diagrams.front().diagram;
  std::map<VoganDiagram, int> index;
  for (std::size_t i = 0; i < diagrams.size(); ++i)
    index.emplace(diagrams[i], static_cast<int>(i));

  detail::UnionFind uf(diagrams.size());
  std::vector<std::vector<int>> autos = diagram_automorphisms(base);

  for (std::size_t i = 0; i < diagrams.size(); ++i) {
    const VoganDiagram& vd = diagrams[i];
    for (int v : vd.p.painted) {
      VoganDiagram flipped = painting_flip(vd, v);
      if (!is_valid(flipped)) continue;
      auto it = index.find(flipped);
      if (it != index.end()) uf.unite(static_cast<int>(i), it->second);
    }
    for (const auto& g : autos) {
      VoganDiagram relabeled{base, {}, {}};
      relabeled.d.perm.resize(g.size());
      // d' = g d g^{-1}
      for (std::size_t x = 0; x < g.size(); ++x)
        relabeled.d.perm[g[x]] = g[vd.d.perm[x]];
      for (int v : vd.p.painted) relabeled.p.painted.insert(g[v]);
      auto it = index.find(relabeled);
      if (it != index.end()) uf.unite(static_cast<int>(i), it->second);
    }
  }

  std::map<int, std::vector<int>> groups;
  for (std::size_t i = 0; i < diagrams.size(); ++i)
    groups[uf.find(static_cast<int>(i))].push_back(static_cast<int>(i));
  std::vector<std::vector<int>> out;
  for (auto& [root, members] : groups) out.push_back(members);
  std::sort(out.begin(), out.end(),
            [](const std::vector<int>& a, const std::vector<int>& b) {
              return a.front() < b.front();
            });
  return out;
}

}  // namespace vogan
