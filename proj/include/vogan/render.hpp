// ASCII and DOT renderings of catalogue diagrams. Glyphs: O white, * black,
// X grey; edge runs '-' single and '=' multiple, with the line count spelled
// out in the middle for triple and quadruple bonds; '<'/'>' sit next to the
// vertex the arrow points at.

#pragma once

#include <set>
#include <string>
#include <vector>

#include "families.hpp"

namespace vogan {

struct RenderSpec {
  enum class Format { ascii, dot, json };
  Format format = Format::ascii;
  bool show_marks = true;
  bool show_involution = false;
};

namespace detail {

inline char vertex_glyph(Color c, bool painted = false) {
  if (painted) return '*';
  switch (c) {
    case Color::white: return 'O';
    case Color::black: return '*';
    default: return 'X';
  }
}

struct Canvas {
  std::vector<std::string> grid;
  void put(int row, int col, char ch) {
    if (row < 0 || col < 0) return;
    if (row >= static_cast<int>(grid.size())) grid.resize(row + 1);
    if (col >= static_cast<int>(grid[row].size())) grid[row].resize(col + 1, ' ');
    grid[row][col] = ch;
  }
  void text(int row, int col, const std::string& s) {
    for (std::size_t i = 0; i < s.size(); ++i) put(row, col + static_cast<int>(i), s[i]);
  }
  std::string str() const {
    std::string out;
    for (const auto& line : grid) {
      std::string trimmed = line;
      while (!trimmed.empty() && trimmed.back() == ' ') trimmed.pop_back();
      out += trimmed;
      out += '\n';
    }
    return out;
  }
};

// Horizontal edge occupying five cells; `toward_left` / `toward_right` refer
// to the arrow head.
inline std::string edge_run(int lines, bool toward_left, bool toward_right) {
  std::string run;
  switch (lines) {
    case 1: run = "-----"; break;
    case 2: run = "====="; break;
    case 3: run = "==3=="; break;
    default: run = "==4=="; break;
  }
  if (toward_left) run[0] = '<';
  if (toward_right) run[4] = '>';
  return run;
}

inline void place_path_row(Canvas& canvas, const DynkinDiagram& d,
                           const std::vector<int>& order, int row, int col0,
                           bool show_marks, std::vector<int>& cols,
                           const std::set<int>* painted = nullptr) {
  for (std::size_t k = 0; k < order.size(); ++k) {
    int v = order[k];
    int col = col0 + 6 * static_cast<int>(k);
    cols[v] = col;
    canvas.put(row, col, vertex_glyph(d.vertices[v].color, painted && painted->count(v)));
    if (show_marks) canvas.text(row - 1, col, std::to_string(d.vertices[v].mark));
    if (k + 1 < order.size()) {
      int w = order[k + 1];
      const DynkinEdge* e = d.find_edge(v, w);
      if (e) {
        int head = e->arrow == Arrow::toward_i ? e->i
                   : e->arrow == Arrow::toward_j ? e->j : -1;
        canvas.text(row, col + 1, edge_run(e->lines, head == v, head == w));
      }
    }
  }
}

}  // namespace detail

inline std::string render_ascii(const FamilySpec& spec, const DynkinDiagram& d,
                                bool show_marks = true,
                                const std::set<int>* painted = nullptr) {
  using detail::Canvas;
  Canvas canvas;
  const int N = d.rank();
  std::vector<int> cols(N, 0);
  auto glyph = [&](int v) {
    return detail::vertex_glyph(d.vertices[v].color, painted && painted->count(v));
  };

  // Cycle as two rows; odd lengths get slanted closing edges.
  auto render_cycle = [&]() {
    int top = (N + 1) / 2;
    std::vector<int> top_order, bottom_order;
    for (int i = 0; i < top; ++i) top_order.push_back(i);
    for (int i = N - 1; i >= top; --i) bottom_order.push_back(i);
    bool odd = N % 2 != 0;
    detail::place_path_row(canvas, d, top_order, 1, 0, show_marks, cols, painted);
    detail::place_path_row(canvas, d, bottom_order, 3, odd ? 2 : 0, false, cols, painted);
    if (show_marks)
      for (int v : bottom_order)
        canvas.text(4, cols[v], std::to_string(d.vertices[v].mark));
    if (odd) {
      canvas.put(2, 1, '\\');
      canvas.put(2, cols[top - 1] - 1, '/');
    } else {
      canvas.put(2, 0, '|');
      canvas.put(2, cols[top - 1], '|');
    }
  };

  switch (spec.family) {
    case Family::A: {
      render_cycle();
      break;
    }
    case Family::C: {
      if (spec.n == 2) {  // triangle
        render_cycle();
        break;
      }
      // Grey pair joined by a double bond, both hanging off the chain head.
      std::vector<int> chain;
      for (int i = 2; i < N; ++i) chain.push_back(i);
      detail::place_path_row(canvas, d, chain, 3, 2, show_marks, cols, painted);
      cols[0] = 0;
      cols[1] = 4;
      canvas.put(1, 0, glyph(0));
      canvas.put(1, 4, glyph(1));
      canvas.text(1, 1, "===");
      if (show_marks) {
        canvas.text(0, 0, "1");
        canvas.text(0, 4, "1");
      }
      canvas.put(2, 1, '\\');
      canvas.put(2, 3, '/');
      break;
    }
    case Family::D: {
      std::vector<int> chain;
      for (int i = 0; i <= N - 3; ++i) chain.push_back(i);
      detail::place_path_row(canvas, d, chain, 2, 0, show_marks, cols, painted);
      int c = cols[N - 3];
      canvas.put(0, c + 4, glyph(N - 2));
      canvas.put(1, c + 2, '/');
      canvas.put(3, c + 2, '\\');
      canvas.put(4, c + 4, glyph(N - 1));
      if (show_marks) {
        canvas.text(0, c + 6, std::to_string(d.vertices[N - 2].mark));
        canvas.text(4, c + 6, std::to_string(d.vertices[N - 1].mark));
      }
      break;
    }
    case Family::D21: {
      detail::place_path_row(canvas, d, {0, 1, 2}, 1, 0, show_marks, cols, painted);
      canvas.put(2, 6, '|');
      canvas.put(3, 6, glyph(3));
      if (show_marks) canvas.text(3, 8, "1");
      break;
    }
    default: {
      std::vector<int> order;
      for (int i = 0; i < N; ++i) order.push_back(i);
      detail::place_path_row(canvas, d, order, 1, 0, show_marks, cols, painted);
      break;
    }
  }
  return canvas.str();
}

inline std::string render_dot(const DynkinDiagram& d, bool show_marks = true,
                              const std::set<int>* painted = nullptr,
                              const std::vector<int>* involution = nullptr) {
  std::string out = "graph dynkin {\n  node [shape=circle];\n";
  for (const auto& v : d.vertices) {
    std::string attrs = "label=\"";
    if (show_marks) attrs += std::to_string(v.mark);
    attrs += "\"";
    bool filled = v.color == Color::black || (painted && painted->count(v.index));
    if (filled) attrs += ", style=filled, fillcolor=black, fontcolor=white";
    if (v.color == Color::grey) attrs += ", shape=Mcircle";
    out += "  v" + std::to_string(v.index) + " [" + attrs + "];\n";
  }
  for (const auto& e : d.edges) {
    std::string attrs;
    if (e.lines > 1) attrs += "label=\"" + std::to_string(e.lines) + "\"";
    if (e.arrow != Arrow::none) {
      if (!attrs.empty()) attrs += ", ";
      attrs += e.arrow == Arrow::toward_j ? "dir=forward" : "dir=back";
    }
    out += "  v" + std::to_string(e.i) + " -- v" + std::to_string(e.j);
    if (!attrs.empty()) out += " [" + attrs + "]";
    out += ";\n";
  }
  if (involution)
    for (std::size_t i = 0; i < involution->size(); ++i) {
      int j = (*involution)[i];
      if (j > static_cast<int>(i))
        out += "  v" + std::to_string(i) + " -- v" + std::to_string(j) +
               " [style=dashed, constraint=false];\n";
    }
  out += "}\n";
  return out;
}

}  // namespace vogan
