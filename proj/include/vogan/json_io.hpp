// JSON serialization for the exact types. Rationals are [num, den] pairs;
// the documented schemas live in the README.

#pragma once

#include <json.hpp>

#include "chevalley.hpp"
#include "classify.hpp"
#include "families.hpp"
#include "involution.hpp"
#include "render.hpp"

namespace vogan {

using json = nlohmann::json;

inline json to_json(const Rational& r) { return json::array({r.num(), r.den()}); }

inline Rational rational_from_json(const json& j) {
  if (j.is_number_integer()) return Rational(j.get<std::int64_t>());
  if (j.is_array() && j.size() == 2)
    return Rational(j[0].get<std::int64_t>(), j[1].get<std::int64_t>());
  if (j.is_string()) {
    std::string s = j.get<std::string>();
    auto slash = s.find('/');
    if (slash == std::string::npos) return Rational(std::stoll(s));
    return Rational(std::stoll(s.substr(0, slash)), std::stoll(s.substr(slash + 1)));
  }
  fail("rational: expected integer, [num,den], or \"p/q\"");
}

inline json to_json(const GeneralizedCartanMatrix& gcm) {
  json entries = json::array();
  for (int i = 0; i < gcm.rank; ++i) {
    json row = json::array();
    for (int j = 0; j < gcm.rank; ++j) row.push_back(to_json(gcm.at(i, j)));
    entries.push_back(row);
  }
  json tau = json::array();
  for (int i : gcm.tau) tau.push_back(i);
  return json{{"rank", gcm.rank}, {"entries", entries}, {"tau", tau}};
}

inline GeneralizedCartanMatrix gcm_from_json(const json& j) {
  GeneralizedCartanMatrix gcm;
  gcm.rank = j.at("rank").get<int>();
  gcm.entries = RatMatrix(gcm.rank, gcm.rank);
  const json& entries = j.at("entries");
  for (int i = 0; i < gcm.rank; ++i)
    for (int k = 0; k < gcm.rank; ++k)
      gcm.entries(i, k) = rational_from_json(entries.at(i).at(k));
  for (const auto& t : j.at("tau")) gcm.tau.insert(t.get<int>());
  gcm.validate();
  return gcm;
}

inline json to_json(const DynkinDiagram& d) {
  json vertices = json::array();
  for (const auto& v : d.vertices)
    vertices.push_back(
        {{"index", v.index}, {"color", color_name(v.color)}, {"mark", v.mark}});
  json edges = json::array();
  for (const auto& e : d.edges) {
    std::string arrow = e.arrow == Arrow::none      ? "none"
                        : e.arrow == Arrow::toward_i ? "toward_i"
                                                     : "toward_j";
    edges.push_back({{"i", e.i}, {"j", e.j}, {"lines", e.lines}, {"arrow", arrow}});
  }
  return json{{"vertices", vertices}, {"edges", edges}};
}

inline DynkinDiagram diagram_from_json(const json& j) {
  DynkinDiagram d;
  for (const auto& v : j.at("vertices")) {
    DynkinVertex vx;
    vx.index = v.at("index").get<int>();
    std::string c = v.at("color").get<std::string>();
    vx.color = c == "white" ? Color::white : c == "black" ? Color::black : Color::grey;
    vx.mark = v.at("mark").get<std::int64_t>();
    d.vertices.push_back(vx);
  }
  for (const auto& e : j.at("edges")) {
    std::string a = e.at("arrow").get<std::string>();
    Arrow arrow = a == "toward_i" ? Arrow::toward_i
                  : a == "toward_j" ? Arrow::toward_j
                                    : Arrow::none;
    d.add_edge(e.at("i").get<int>(), e.at("j").get<int>(), e.at("lines").get<int>(), arrow);
  }
  d.sort_edges();
  return d;
}

inline json to_json(const RootVector& r) {
  json coeffs = json::array();
  for (const auto& [sym, c] : r.coeffs) {
    json entry;
    entry["symbol"] = sym.str();
    entry["coeff"] = to_json(c);
    coeffs.push_back(entry);
  }
  return json{{"coeffs", coeffs}, {"display", r.str()}};
}

inline json to_json(const RealFormLabel& label) {
  return json{{"components", label.components},
              {"display", label.display()},
              {"appendix", label.appendix},
              {"figure", label.source_figure},
              {"label_tex", label.verbatim_label},
              {"errata_flags", label.errata_flags}};
}

inline json to_json(const VoganDiagram& vd, int condition,
                    const std::optional<RealFormLabel>& label) {
  json painted = json::array();
  for (int v : vd.p.painted) painted.push_back(v);
  json j{{"involution", vd.d.perm},
         {"painting", painted},
         {"valid", condition != 0},
         {"condition", condition}};
  if (label)
    j["label"] = to_json(*label);
  else
    j["label"] = "unlabelled";
  return j;
}

inline json to_json(const CartanReport& report) {
  json checks = json::array();
  for (const auto& c : report.checks) {
    json entry{{"name", c.name}, {"status", c.passed ? "pass" : "fail"}};
    if (!c.passed) entry["witness"] = c.witness;
    checks.push_back(entry);
  }
  int failed = 0;
  for (const auto& c : report.checks)
    if (!c.passed) ++failed;
  return json{{"checks", checks},
              {"passed", static_cast<int>(report.checks.size()) - failed},
              {"failed", failed}};
}

inline json to_json(const Erratum& e) {
  return json{{"family", e.family},
              {"item", e.item},
              {"printed", e.printed},
              {"stored", e.stored},
              {"note", e.note}};
}

}  // namespace vogan
