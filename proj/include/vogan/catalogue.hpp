// The shipped catalogue: family metadata, the real-form label table, the
// stored root lists for reference, and the errata table. The built-in data
// is authoritative; a JSON file with the same schema can override the label
// table and errata for experimentation.

#pragma once

#include <fstream>

#include "json_io.hpp"

namespace vogan {

struct FamilyInfo {
  std::string key;         // CLI name
  std::string display;     // e.g. "A(m,n) = spl(m+1,n+1)"
  std::string constraints;
  std::string rank;        // vertex-count formula
};

// Seven rows; the m = 0 boundary of the B family is reachable through its
// own CLI key B0 but shares the B row.
inline std::vector<FamilyInfo> family_table() {
  return {
      {"A", "A(m,n) = spl(m+1,n+1)", "m,n >= 0, (m,n) != (0,0); m = n degenerate for marks", "m+n+2"},
      {"B", "B(m,n) = osp(2m+1,2n)", "m >= 2, n >= 1; boundary key B0: B(0,n) = osp(1,2n), n >= 1", "m+n+1"},
      {"C", "C(n) = osp(2,2n-2)", "n >= 2", "n+1"},
      {"D", "D(m,n) = osp(2m,2n)", "m >= 2, n >= 1", "m+n+1"},
      {"D21", "D(2,1;a)", "rational a, a != 0, a != -1", "4"},
      {"F4", "F(4)", "none", "5"},
      {"G3", "G(3)", "none", "4"},
  };
}

struct Catalogue {
  std::vector<FamilyInfo> families;
  std::vector<LabelEntry> labels;
  std::vector<Erratum> errata;

  static Catalogue builtin() {
    return {family_table(), default_label_table(), root_errata()};
  }
};

inline json to_json(const Catalogue& cat) {
  json families = json::array();
  for (const auto& f : cat.families)
    families.push_back({{"key", f.key},
                        {"display", f.display},
                        {"constraints", f.constraints},
                        {"rank", f.rank}});
  json labels = json::array();
  for (const auto& e : cat.labels) {
    json j = to_json(e.label);
    j["family"] = family_name(e.family);
    j["pattern"] = e.pattern;
    labels.push_back(j);
  }
  json errata = json::array();
  for (const auto& e : cat.errata) errata.push_back(to_json(e));
  // Stored root lists and marked diagrams at representative parameters.
  json roots = json::object();
  json diagrams = json::object();
  for (const FamilySpec& spec :
       {FamilySpec::A(2, 1), FamilySpec::B(2, 1), FamilySpec::B0(2), FamilySpec::C(3),
        FamilySpec::D(3, 1), FamilySpec::D21(), FamilySpec::F4(), FamilySpec::G3()}) {
    json list = json::array();
    for (const auto& r : simple_roots(spec)) list.push_back(r.str());
    roots[spec.name()] = list;
    diagrams[spec.name()] = to_json(catalogue_diagram(spec));
  }
  return json{{"families", families}, {"labels", labels}, {"errata", errata},
              {"reference_roots", roots}, {"reference_diagrams", diagrams}};
}

inline Catalogue catalogue_from_json(const json& j) {
  Catalogue cat;
  for (const auto& f : j.at("families"))
    cat.families.push_back({f.at("key").get<std::string>(),
                            f.at("display").get<std::string>(),
                            f.at("constraints").get<std::string>(),
                            f.at("rank").get<std::string>()});
  for (const auto& l : j.at("labels")) {
    LabelEntry e;
    auto fam = parse_family(l.at("family").get<std::string>());
    if (!fam) fail("catalogue: unknown family " + l.at("family").get<std::string>());
    e.family = *fam;
    e.pattern = l.at("pattern").get<std::string>();
    e.label.components = l.at("components").get<std::vector<std::string>>();
    if (l.contains("appendix")) e.label.appendix = l.at("appendix").get<std::string>();
    e.label.source_figure = l.at("figure").get<std::string>();
    e.label.verbatim_label = l.at("label_tex").get<std::string>();
    e.label.errata_flags = l.at("errata_flags").get<std::vector<std::string>>();
    cat.labels.push_back(e);
  }
  for (const auto& er : j.at("errata"))
    cat.errata.push_back({er.at("family").get<std::string>(),
                          er.at("item").get<std::string>(),
                          er.at("printed").get<std::string>(),
                          er.at("stored").get<std::string>(),
                          er.at("note").get<std::string>()});
  return cat;
}

inline Catalogue load_catalogue(const std::string& path) {
  std::ifstream in(path);
  if (!in) fail("cannot open catalogue file " + path);
  json j;
  in >> j;
  return catalogue_from_json(j);
}

}  // namespace vogan
