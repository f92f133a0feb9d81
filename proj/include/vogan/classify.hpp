// Real-form labels: the catalogue of painted-figure patterns per family and
// the structural lookup that maps a Vogan diagram to its label. Patterns are
// rank-generic; label strings keep the catalogue's exact caption text with
// quirk flags, alongside canonical component names.

#pragma once

#include <optional>
#include <string>
#include <vector>

#include "enumerate.hpp"
#include "families.hpp"

namespace vogan {

struct RealFormLabel {
  std::vector<std::string> components;  // canonical, e.g. "sp(m,ℝ)"
  std::string appendix = "⊕ℝiK⊕ℝiD";
  std::string source_figure;            // family + figure ordinal, e.g. "B.2"
  std::string verbatim_label;           // caption TeX, exactly as printed
  std::vector<std::string> errata_flags;

  std::string display() const {
    std::string out;
    for (std::size_t i = 0; i < components.size(); ++i) {
      if (i) out += "⊕";
      out += components[i];
    }
    return out;
  }
};

struct LabelEntry {
  Family family;
  std::string pattern;  // matcher id, see pattern_matches
  RealFormLabel label;
};

inline std::vector<LabelEntry> default_label_table() {
  auto entry = [](Family fam, const std::string& pattern,
                  std::vector<std::string> components, const std::string& figure,
                  const std::string& verbatim,
                  std::vector<std::string> flags) {
    LabelEntry e;
    e.family = fam;
    e.pattern = pattern;
    e.label.components = std::move(components);
    e.label.source_figure = figure;
    e.label.verbatim_label = verbatim;
    e.label.errata_flags = std::move(flags);
    return e;
  };
  std::vector<LabelEntry> t;
  t.push_back(entry(Family::A, "free_involution",
                    {"sl(m,ℝ)", "sl(n,ℝ)", "ℝ"}, "A.1",
                    "L(t,t^{1})\\otimes (sl(m,\\mathbb{R})\\oplus sl(n,\\mathbb{R})\\oplus \\mathbb{R})\\oplus \\mathbb{R}iK\\oplus \\mathbb{R}iD",
                    {"caption prints t^{1} for t^{-1}"}));
  t.push_back(entry(Family::A, "two_white_fixed",
                    {"su*(m)", "su*(n)", "ℝ"}, "A.2",
                    "L(t,t^{1})\\otimes (su*(m)\\oplus su*(n,\\mathbb{R})\\oplus \\mathbb{R})\\oplus \\mathbb{R}iK\\oplus \\mathbb{R}iD",
                    {"caption prints su*(n,ℝ)", "caption prints t^{1} for t^{-1}"}));
  t.push_back(entry(Family::A, "two_grey_fixed",
                    {"sl(n,ℂ)", "ℝ"}, "A.3",
                    "L(t,t^{1})\\otimes (sl(n,\\mathbb{C}))\\oplus \\mathbb{R})\\oplus \\mathbb{R}iK\\oplus \\mathbb{R}iD",
                    {"caption parentheses unbalanced", "caption prints t^{1} for t^{-1}"}));
  t.push_back(entry(Family::A, "paint_each_run",
                    {"su(p,m-p)", "su(r,n-r)", "iℝ"}, "A.4",
                    "L(t,t^{-1})\\otimes (su(p,m-p,\\mathbb{R})\\oplus su(r,n-r,\\mathbb{R})\\oplus i\\mathbb{R}) \\oplus \\mathbb{R}ic\\oplus\\mathbb{R}id",
                    {"caption prints su(p,m-p,ℝ)", "caption uses ic/id for iK/iD"}));
  t.push_back(entry(Family::B, "paint_affine",
                    {"sp(m,ℝ)"}, "B.1",
                    "L(t,t^{-1})\\otimes (sp(m,\\mathbb{R}) \\oplus \\mathbb{R}ic\\oplus\\mathbb{R}id",
                    {"caption parentheses unbalanced; compact orthogonal factor omitted",
                     "caption uses ic/id for iK/iD"}));
  t.push_back(entry(Family::B, "paint_both_ends",
                    {"sp(m,ℝ)", "so(p,q)"}, "B.2",
                    "L(t,t^{-1})\\otimes (sp(m,\\mathbb{R})\\oplus so(p,q)) \\oplus \\mathbb{R}ic\\oplus\\mathbb{R}id",
                    {"caption uses ic/id for iK/iD"}));
  t.push_back(entry(Family::C, "paint_long_end",
                    {"sp(n,ℝ)", "so(2)"}, "C.1",
                    "L(t,t^{-1})\\otimes (sp(n,\\mathbb{R})\\oplus so(2))\\oplus \\mathbb{R}ic\\oplus\\mathbb{R}id",
                    {"caption uses ic/id for iK/iD"}));
  t.push_back(entry(Family::C, "paint_chain",
                    {"sp(r,s)", "so(2)"}, "C.2",
                    "L(t,t^{-1})\\otimes (sp(r,s)\\oplus so(2))\\oplus \\mathbb{R}ic\\oplus\\mathbb{R}id",
                    {"caption uses ic/id for iK/iD"}));
  t.push_back(entry(Family::D, "paint_each_run",
                    {"sp(r,s)", "so*(2p)"}, "D.1",
                    "L(t,t^{-1})\\otimes (sp(r,s)\\oplus so^{*}(2p))\\oplus \\mathbb{R}iC\\oplus\\mathbb{R}iD",
                    {"caption uses iC for iK"}));
  t.push_back(entry(Family::D, "fork_swap_paint_ends",
                    {"sp(m,ℝ)", "so(p,q)"}, "D.3",
                    "L(t,t^{-1})\\otimes (sp(m,\\mathbb{R})\\oplus so(p,q))\\oplus \\mathbb{R}iC\\oplus\\mathbb{R}iD",
                    {"caption uses iC for iK"}));
  t.push_back(entry(Family::D21, "plain",
                    {"sl(2,ℝ)", "sl(2,ℝ)", "sl(2,ℝ)"}, "D21.1",
                    "sl(2,\\mathbb{R})\\oplus sl(2,\\mathbb{R})\\oplus sl(2,\\mathbb{R})",
                    {"caption omits the loop and central factors"}));
  t.push_back(entry(Family::D21, "paint_leaf",
                    {"su(2)", "su(2)", "sl(2,ℝ)"}, "D21.2",
                    "su(2)\\oplus su(2)\\oplus sl(2,\\mathbb{R})",
                    {"caption omits the loop and central factors"}));
  t.push_back(entry(Family::D21, "leaf_swap",
                    {"sl(2,ℂ)", "sl(2,ℝ)"}, "D21.3",
                    "sl(2,\\mathbb{C}\\oplus sl(2,\\mathbb{R})",
                    {"caption parentheses unbalanced",
                     "caption omits the loop and central factors"}));
  t.push_back(entry(Family::F4, "paint_last",
                    {"sl(2,ℝ)", "g_c"}, "F4.1",
                    "L(t,t^{-1})\\otimes (sl(2,\\mathbb{R})\\oplus g_{c})\\oplus \\mathbb{R}ic\\oplus\\mathbb{R}id",
                    {"caption uses ic/id for iK/iD"}));
  t.push_back(entry(Family::F4, "paint_affine",
                    {"sl(2,ℝ)", "g_s"}, "F4.2",
                    "L(t,t^{-1})\\otimes (sl(2,\\mathbb{R})\\oplus g_{s})\\oplus \\mathbb{R}ic\\oplus\\mathbb{R}id",
                    {"caption uses ic/id for iK/iD"}));
  t.push_back(entry(Family::G3, "paint_first_white",
                    {"sl(2,ℝ)", "so(1,6)"}, "G3.1",
                    "L(t,t^{-1})\\otimes (su(2,\\mathbb{R})\\oplus so(1,6))\\oplus \\mathbb{R}iK\\oplus \\mathbb{R}iD",
                    {"caption prints su(2,ℝ)"}));
  t.push_back(entry(Family::G3, "paint_second_white",
                    {"sl(2,ℝ)", "so(2,5)"}, "G3.2",
                    "L(t,t^{-1})\\otimes (su(2,\\mathbb{R})\\oplus so(2,5))\\oplus \\mathbb{R}iK\\oplus \\mathbb{R}iD",
                    {"caption prints su(2,ℝ)"}));
  t.push_back(entry(Family::G3, "paint_affine_and_last",
                    {"sl(2,ℝ)", "so(3,4)"}, "G3.3",
                    "L(t,t^{-1})\\otimes (sl(2,\\mathbb{R})\\oplus so(3,4))\\oplus \\mathbb{R}iK\\oplus \\mathbb{R}iD",
                    {}));
  t.push_back(entry(Family::G3, "paint_affine",
                    {"sl(2,ℝ)", "so(7)"}, "G3.4",
                    "L(t,t^{-1})\\otimes (sl(2,\\mathbb{R})\\oplus so(7))\\oplus \\mathbb{R}iK\\oplus \\mathbb{R}iD",
                    {}));
  return t;
}

namespace detail {

struct FamilyLayout {
  std::vector<int> run1, run2;  // white runs (A: e/delta; D: delta/e-chain)
  int affine = 0;
  int last = -1;
  std::vector<int> fork;        // D only
  std::vector<int> leaves;      // D21 only
};

inline FamilyLayout layout(const FamilySpec& spec) {
  FamilyLayout L;
  int N = spec.rank();
  L.last = N - 1;
  switch (spec.family) {
    case Family::A:
      for (int i = 1; i <= spec.m; ++i) L.run1.push_back(i);
      for (int i = spec.m + 2; i <= spec.m + spec.n + 1; ++i) L.run2.push_back(i);
      break;
    case Family::D:
      for (int i = 1; i < spec.n; ++i) L.run1.push_back(i);
      for (int i = spec.n + 1; i <= spec.n + spec.m - 2; ++i) L.run2.push_back(i);
      L.fork = {N - 2, N - 1};
      break;
    case Family::D21:
      L.leaves = {0, 2, 3};
      break;
    default:
      break;
  }
  return L;
}

inline bool in(const std::vector<int>& v, int x) {
  return std::find(v.begin(), v.end(), x) != v.end();
}

inline bool pattern_matches(const FamilySpec& spec, const std::string& pattern,
                            const VoganDiagram& vd) {
  const FamilyLayout L = layout(spec);
  const bool id = vd.d.is_identity();
  const auto& p = vd.p.painted;
  auto single = [&](int v) { return p.size() == 1 && p.count(v) > 0; };
  auto pair = [&](int a, int b) {
    return p.size() == 2 && p.count(a) > 0 && p.count(b) > 0;
  };

  if (pattern == "free_involution")
    return !vd.d.is_identity() && vd.d.fixed_vertices().empty() && p.empty();
  if (pattern == "two_white_fixed") {
    std::vector<int> fx = vd.d.fixed_vertices();
    if (vd.d.is_identity() || fx.size() != 2 || !p.empty()) return false;
    for (int v : fx)
      if (vd.diagram.vertices[v].color != Color::white) return false;
    return true;
  }
  if (pattern == "two_grey_fixed") {
    std::vector<int> fx = vd.d.fixed_vertices();
    if (vd.d.is_identity() || fx.size() != 2 || !p.empty()) return false;
    for (int v : fx)
      if (vd.diagram.vertices[v].color != Color::grey) return false;
    return true;
  }
  if (pattern == "paint_each_run") {
    if (!id || p.size() != 2) return false;
    int in1 = 0, in2 = 0;
    for (int v : p) {
      if (in(L.run1, v)) ++in1;
      if (in(L.run2, v)) ++in2;
    }
    return in1 == 1 && in2 == 1;
  }
  if (pattern == "paint_affine") return id && single(L.affine);
  if (pattern == "paint_both_ends") return id && pair(L.affine, L.last);
  if (pattern == "paint_long_end") return id && single(L.last);
  if (pattern == "paint_chain") {
    if (!id || p.size() != 1) return false;
    int v = *p.begin();
    return v >= 2 && v < L.last;  // interior chain vertex
  }
  if (pattern == "fork_swap_paint_ends") {
    if (vd.d.is_identity() || L.fork.size() != 2) return false;
    if (vd.d.perm[L.fork[0]] != L.fork[1]) return false;
    for (int v = 0; v < vd.diagram.rank(); ++v)
      if (!in(L.fork, v) && !vd.d.fixes(v)) return false;
    return pair(L.affine, L.fork[0] - 1);
  }
  if (pattern == "plain") return id && p.empty();
  if (pattern == "paint_leaf")
    return id && p.size() == 1 && in(L.leaves, *p.begin());
  if (pattern == "leaf_swap") {
    if (vd.d.is_identity() || !p.empty()) return false;
    std::vector<int> moved;
    for (int v = 0; v < vd.diagram.rank(); ++v)
      if (!vd.d.fixes(v)) moved.push_back(v);
    if (moved.size() != 2) return false;
    return in(L.leaves, moved[0]) && in(L.leaves, moved[1]);
  }
  if (pattern == "paint_first_white") return id && single(2);
  if (pattern == "paint_second_white") return id && single(3);
  if (pattern == "paint_affine_and_last") return id && pair(L.affine, L.last);
  if (pattern == "paint_last") return id && single(L.last);
  return false;
}

}  // namespace detail

// Concrete painted diagrams realizing a pattern on this instance, if the
// pattern is expressible at its rank. One representative per pattern.
inline std::optional<VoganDiagram> instantiate_pattern(const FamilySpec& spec,
                                                       const std::string& pattern) {
  DynkinDiagram diagram = catalogue_diagram(spec);
  for (const auto& d : enumerate_involutions(diagram)) {
    std::vector<int> paintable;
    for (int v : d.fixed_vertices())
      if (diagram.vertices[v].color != Color::grey) paintable.push_back(v);
    const std::size_t count = std::size_t(1) << paintable.size();
    for (std::size_t mask = 0; mask < count; ++mask) {
      VoganDiagram vd{diagram, d, {}};
      for (std::size_t b = 0; b < paintable.size(); ++b)
        if (mask & (std::size_t(1) << b)) vd.p.painted.insert(paintable[b]);
      if (detail::pattern_matches(spec, pattern, vd) && is_valid(vd)) return vd;
    }
  }
  return std::nullopt;
}

// Catalogue lookup, matching up to diagram relabeling. Returns nothing when
// no figure carries this painting ("unlabelled").
inline std::optional<RealFormLabel> classify(const FamilySpec& spec,
                                             const VoganDiagram& vd,
                                             const std::vector<LabelEntry>& table) {
  vd.validate();
  std::vector<std::vector<int>> autos = diagram_automorphisms(vd.diagram);
  for (const auto& entry : table) {
    if (entry.family != spec.family) continue;
    for (const auto& g : autos) {
      VoganDiagram relabeled{vd.diagram, {}, {}};
      relabeled.d.perm.resize(g.size());
      for (std::size_t x = 0; x < g.size(); ++x)
        relabeled.d.perm[g[x]] = g[vd.d.perm[x]];
      for (int v : vd.p.painted) relabeled.p.painted.insert(g[v]);
      if (detail::pattern_matches(spec, entry.pattern, relabeled))
        return entry.label;
    }
  }
  return std::nullopt;
}

inline std::optional<RealFormLabel> classify(const FamilySpec& spec,
                                             const VoganDiagram& vd) {
  return classify(spec, vd, default_label_table());
}

}  // namespace vogan
