// Command-line surface: construction, enumeration, classification,
// verification, and rendering of the affine family catalogue.

#include <cstdlib>
#include <iostream>
#include <optional>
#include <string>
#include <vector>

#include <CLI11.hpp>

#include <vogan/catalogue.hpp>
#include <vogan/verify.hpp>

namespace {

using namespace vogan;

constexpr int kExitOk = 0;
constexpr int kExitUsage = 2;
constexpr int kExitUnsupported = 3;

struct GlobalConfig {
  std::string catalogue_path;
  int window_lo = -2;
  int window_hi = 2;
};

bool parse_window(const std::string& s, int& lo, int& hi) {
  auto dots = s.find("..");
  if (dots == std::string::npos) return false;
  try {
    lo = std::stoi(s.substr(0, dots));
    hi = std::stoi(s.substr(dots + 2));
  } catch (...) {
    return false;
  }
  return lo <= hi;
}

// Flags beat config file, config beats environment, environment beats
// defaults.
GlobalConfig resolve_config(const std::string& config_flag,
                            const std::string& catalogue_flag,
                            const std::string& window_flag) {
  GlobalConfig cfg;
  if (const char* env = std::getenv("VOGAN_CATALOGUE")) cfg.catalogue_path = env;
  std::string config_path = config_flag;
  if (config_path.empty()) {
    if (const char* env = std::getenv("VOGAN_CONFIG")) config_path = env;
  }
  if (!config_path.empty()) {
    std::ifstream in(config_path);
    if (!in) fail("cannot open config file " + config_path);
    json j;
    in >> j;
    if (j.contains("catalogue")) cfg.catalogue_path = j["catalogue"].get<std::string>();
    if (j.contains("window")) {
      if (j["window"].is_array() && j["window"].size() == 2) {
        cfg.window_lo = j["window"][0].get<int>();
        cfg.window_hi = j["window"][1].get<int>();
      } else if (!parse_window(j["window"].get<std::string>(), cfg.window_lo,
                               cfg.window_hi)) {
        fail("config: bad window");
      }
    }
  }
  if (!catalogue_flag.empty()) cfg.catalogue_path = catalogue_flag;
  if (!window_flag.empty() && !parse_window(window_flag, cfg.window_lo, cfg.window_hi))
    fail("bad --window, expected A..B");
  return cfg;
}

Catalogue load_or_builtin(const GlobalConfig& cfg) {
  if (cfg.catalogue_path.empty()) return Catalogue::builtin();
  return load_catalogue(cfg.catalogue_path);
}

FamilySpec spec_from_args(const std::string& family, const std::vector<int>& params,
                          const std::string& alpha) {
  auto fam = parse_family(family);
  if (!fam) fail("unknown family " + family + " (A, B, B0, C, D, D21, F4, G3)");
  FamilySpec spec;
  spec.family = *fam;
  auto need = [&](std::size_t n, const char* what) {
    if (params.size() != n)
      fail(family + " takes " + what);
  };
  switch (*fam) {
    case Family::A:
    case Family::B:
    case Family::D:
      need(2, "two parameters m n");
      spec.m = params[0];
      spec.n = params[1];
      break;
    case Family::B0:
    case Family::C:
      need(1, "one parameter n");
      spec.n = params[0];
      break;
    default:
      need(0, "no parameters");
      break;
  }
  if (*fam == Family::D21 && !alpha.empty()) {
    auto slash = alpha.find('/');
    if (slash == std::string::npos)
      spec.alpha = Rational(std::stoll(alpha));
    else
      spec.alpha = Rational(std::stoll(alpha.substr(0, slash)),
                            std::stoll(alpha.substr(slash + 1)));
  }
  spec.validate();
  for (const auto& w : spec.warnings()) std::cerr << "note: " << w << "\n";
  return spec;
}

int cmd_families(const Catalogue& cat, bool as_json) {
  if (as_json) {
    json out = json::array();
    for (const auto& f : cat.families)
      out.push_back({{"key", f.key},
                     {"display", f.display},
                     {"constraints", f.constraints},
                     {"rank", f.rank}});
    std::cout << out.dump(2) << "\n";
    return kExitOk;
  }
  for (const auto& f : cat.families)
    std::cout << f.display << "  [" << f.constraints << "; rank " << f.rank << "]\n";
  return kExitOk;
}

DiagramInvolution parse_involution(const DynkinDiagram& diagram, const std::string& invol) {
  DiagramInvolution d = DiagramInvolution::identity(diagram.rank());
  if (invol == "id" || invol.empty()) return d;
  for (std::size_t pos = 0; pos < invol.size();) {
    auto comma = invol.find(',', pos);
    std::string swap = invol.substr(pos, comma == std::string::npos ? std::string::npos
                                                                    : comma - pos);
    auto dash = swap.find('-');
    if (dash == std::string::npos) fail("bad --invol, expected id or a-b[,c-d...]");
    int a = std::stoi(swap.substr(0, dash));
    int b = std::stoi(swap.substr(dash + 1));
    if (a < 0 || b < 0 || a >= diagram.rank() || b >= diagram.rank() || a == b)
      fail("bad swap " + swap);
    std::swap(d.perm[a], d.perm[b]);
    if (comma == std::string::npos) break;
    pos = comma + 1;
  }
  return d;
}

std::set<int> parse_painting(const FamilySpec& spec, const std::string& paint) {
  std::set<int> painted;
  if (paint == "none" || paint.empty()) return painted;
  if (paint == "tail" && spec.family == Family::D21) {
    painted.insert(3);
    return painted;
  }
  for (std::size_t pos = 0; pos < paint.size();) {
    auto comma = paint.find(',', pos);
    std::string tok = paint.substr(pos, comma == std::string::npos ? std::string::npos
                                                                   : comma - pos);
    painted.insert(std::stoi(tok));
    if (comma == std::string::npos) break;
    pos = comma + 1;
  }
  return painted;
}

int cmd_diagram(const FamilySpec& spec, const RenderSpec& render,
                const std::string& paint, const std::string& invol) {
  DynkinDiagram d = catalogue_diagram(spec);
  std::set<int> painted = parse_painting(spec, paint);
  DiagramInvolution inv = parse_involution(d, invol);
  if (!painted.empty() || !inv.is_identity()) {
    VoganDiagram vd{d, inv, Painting{painted}};
    vd.validate();  // reject grey or moved paintings
  }
  switch (render.format) {
    case RenderSpec::Format::ascii:
      std::cout << render_ascii(spec, d, render.show_marks, &painted);
      break;
    case RenderSpec::Format::dot:
      std::cout << render_dot(d, render.show_marks, &painted,
                              render.show_involution ? &inv.perm : nullptr);
      break;
    case RenderSpec::Format::json: {
      json j = to_json(d);
      if (!painted.empty()) {
        json p = json::array();
        for (int v : painted) p.push_back(v);
        j["painting"] = p;
      }
      if (render.show_involution) j["involution"] = inv.perm;
      std::cout << j.dump(2) << "\n";
      break;
    }
  }
  return kExitOk;
}

int cmd_gcm(const FamilySpec& spec) {
  std::cout << to_json(catalogue_gcm(spec)).dump(2) << "\n";
  return kExitOk;
}

int cmd_roots(const FamilySpec& spec, bool as_json) {
  std::vector<RootVector> roots = simple_roots(spec);
  if (as_json) {
    json out = json::array();
    for (const auto& r : roots) out.push_back(to_json(r));
    std::cout << out.dump(2) << "\n";
  } else {
    for (std::size_t i = 0; i < roots.size(); ++i)
      std::cout << "alpha" << i << " = " << roots[i].str() << "\n";
  }
  return kExitOk;
}

int cmd_marks(const FamilySpec& spec, bool as_json) {
  std::vector<std::int64_t> a = marks(catalogue_gcm(spec));
  if (as_json) {
    std::cout << json(a).dump() << "\n";
  } else {
    for (std::size_t i = 0; i < a.size(); ++i)
      std::cout << (i ? " " : "") << a[i];
    std::cout << "\n";
  }
  return kExitOk;
}

int cmd_vogan(const FamilySpec& spec, const Catalogue& cat, bool count_only,
              bool only_labelled) {
  DynkinDiagram diagram = catalogue_diagram(spec);
  std::vector<VoganDiagram> all = enumerate_vogan(diagram);
  if (count_only) {
    std::cout << all.size() << "\n";
    return kExitOk;
  }
  bool black_pair_warned = false;
  for (const auto& vd : all) {
    if (!black_pair_warned && s_set(vd).black_pair_seen) {
      std::cerr << "warning: black two-element orbit excluded from the parity sum\n";
      black_pair_warned = true;
    }
    auto label = classify(spec, vd, cat.labels);
    if (only_labelled && !label) continue;
    std::cout << to_json(vd, validity_condition(vd), label).dump() << "\n";
  }
  return kExitOk;
}

int cmd_classify(const FamilySpec& spec, const Catalogue& cat,
                 const std::string& paint, const std::string& invol, bool as_json) {
  DynkinDiagram diagram = catalogue_diagram(spec);
  VoganDiagram vd{diagram, parse_involution(diagram, invol),
                  Painting{parse_painting(spec, paint)}};
  vd.validate();
  int condition = validity_condition(vd);
  std::optional<RealFormLabel> label;
  if (condition != 0) label = classify(spec, vd, cat.labels);
  if (as_json) {
    std::cout << to_json(vd, condition, label).dump(2) << "\n";
  } else {
    if (label)
      std::cout << label->display() << "\n";
    else
      std::cout << "unlabelled\n";
  }
  return kExitOk;
}

int cmd_verify(const FamilySpec& spec, int lo, int hi, bool as_json) {
  if (!has_matrix_model(spec)) {
    std::cerr << "no matrix model; combinatorial checks only\n";
    return kExitUnsupported;
  }
  VerificationRun run = run_verification(spec, lo, hi);
  if (as_json) {
    json j = to_json(run.report);
    j["family"] = spec.name();
    j["window"] = {lo, hi};
    std::cout << j.dump(2) << "\n";
  } else {
    for (const auto& c : run.report.checks) {
      std::cout << (c.passed ? "PASS " : "FAIL ") << c.name;
      if (!c.passed) std::cout << "  (" << c.witness << ")";
      std::cout << "\n";
    }
  }
  return run.report.all_passed() ? kExitOk : 1;
}

int cmd_equiv(const FamilySpec& spec, bool as_json) {
  DynkinDiagram diagram = catalogue_diagram(spec);
  std::vector<VoganDiagram> all = enumerate_vogan(diagram);
  std::vector<std::vector<int>> classes = equivalence_classes(all);
  if (as_json) {
    json out;
    out["count"] = classes.size();
    out["moves"] = "EXTRAPOLATED";  // the flip/relabel moves are not part of the catalogue
    json cls = json::array();
    for (const auto& c : classes) cls.push_back(c);
    out["classes"] = cls;
    std::cout << out.dump(2) << "\n";
  } else {
    std::cout << "classes (EXTRAPOLATED equivalence): " << classes.size() << "\n";
    for (std::size_t k = 0; k < classes.size(); ++k) {
      std::cout << "class " << k << ":";
      for (int i : classes[k]) std::cout << " " << i;
      std::cout << "\n";
    }
  }
  return kExitOk;
}

}  // namespace

int main(int argc, char** argv) {
  CLI::App app{"affine untwisted Kac-Moody superalgebra catalogue"};
  app.require_subcommand(1);

  std::string catalogue_flag, config_flag, window_flag;
  app.add_option("--catalogue", catalogue_flag, "catalogue JSON path override");
  app.add_option("--config", config_flag, "config JSON path");
  app.add_option("--window", window_flag, "degree window A..B for verification");

  std::string family, alpha, format = "ascii", paint = "none", invol = "id";
  std::vector<int> params;
  bool as_json = false, count_only = false, only_labelled = false, no_marks = false;
  bool show_involution = false;
  app.add_flag("--json", as_json, "JSON output");
  app.add_option("--format", format, "diagram format: ascii, dot, or json")
      ->check(CLI::IsMember({"ascii", "dot", "json"}));

  auto add_spec_args = [&](CLI::App* sub) {
    sub->add_option("family", family, "family key (A, B, B0, C, D, D21, F4, G3)")
        ->required();
    sub->add_option("params", params, "family parameters (m n, or n)");
    sub->add_option("--alpha", alpha, "rational parameter for D21, e.g. 1 or 2/3");
  };

  CLI::App* families = app.add_subcommand("families", "list the seven families");

  CLI::App* diagram = app.add_subcommand("diagram", "render the catalogue diagram");
  add_spec_args(diagram);
  diagram->add_flag("--no-marks", no_marks, "hide marks");
  diagram->add_option("--paint", paint, "painted vertices: none, tail, or i,j,...");
  diagram->add_option("--invol", invol, "involution overlay: id or swaps a-b[,c-d...]");
  diagram->add_flag("--show-involution", show_involution, "draw involution arcs (dot/json)");

  CLI::App* gcm = app.add_subcommand("gcm", "catalogue Cartan matrix as JSON");
  add_spec_args(gcm);

  CLI::App* roots = app.add_subcommand("roots", "simple roots, affine first");
  add_spec_args(roots);

  CLI::App* marks_cmd = app.add_subcommand("marks", "primitive positive null vector");
  add_spec_args(marks_cmd);

  CLI::App* vogan_cmd = app.add_subcommand("vogan", "enumerate valid painted diagrams");
  add_spec_args(vogan_cmd);
  vogan_cmd->add_flag("--count", count_only, "print only the count");
  vogan_cmd->add_flag("--only-labelled", only_labelled, "skip unlabelled diagrams");

  CLI::App* classify_cmd = app.add_subcommand("classify", "look up a real-form label");
  add_spec_args(classify_cmd);
  classify_cmd->add_option("--paint", paint, "painted vertices: none, tail, or i,j,...");
  classify_cmd->add_option("--invol", invol, "involution: id or swaps a-b[,c-d...]");

  CLI::App* verify_cmd = app.add_subcommand("verify", "run the exact verification suites");
  add_spec_args(verify_cmd);

  CLI::App* equiv_cmd = app.add_subcommand("equiv", "partition under flip/relabel moves");
  add_spec_args(equiv_cmd);

  // Global options remain usable after the subcommand name.
  for (CLI::App* sub : app.get_subcommands(nullptr)) sub->fallthrough();

  try {
    app.parse(argc, argv);
  } catch (const CLI::CallForHelp& e) {
    return app.exit(e);
  } catch (const CLI::ParseError& e) {
    app.exit(e);
    return kExitUsage;
  }

  try {
    GlobalConfig cfg = resolve_config(config_flag, catalogue_flag, window_flag);
    Catalogue cat = load_or_builtin(cfg);
    if (families->parsed()) return cmd_families(cat, as_json);
    FamilySpec spec = spec_from_args(family, params, alpha);
    if (diagram->parsed()) {
      RenderSpec render;
      render.format = format == "dot"    ? RenderSpec::Format::dot
                      : format == "json" ? RenderSpec::Format::json
                                         : RenderSpec::Format::ascii;
      render.show_marks = !no_marks;
      render.show_involution = show_involution;
      return cmd_diagram(spec, render, paint, invol);
    }
    if (gcm->parsed()) return cmd_gcm(spec);
    if (roots->parsed()) return cmd_roots(spec, as_json);
    if (marks_cmd->parsed()) return cmd_marks(spec, as_json);
    if (vogan_cmd->parsed()) return cmd_vogan(spec, cat, count_only, only_labelled);
    if (classify_cmd->parsed()) return cmd_classify(spec, cat, paint, invol, as_json);
    if (verify_cmd->parsed()) return cmd_verify(spec, cfg.window_lo, cfg.window_hi, as_json);
    if (equiv_cmd->parsed()) return cmd_equiv(spec, as_json);
  } catch (const std::exception& e) {
    std::string msg = e.what();
    std::cerr << "error: " << msg << "\n";
    if (msg.find("no matrix model") != std::string::npos) return kExitUnsupported;
    return kExitUsage;
  }
  return kExitUsage;
}
