#include <catch2/catch_amalgamated.hpp>

#include <vogan/classify.hpp>

using namespace vogan;

namespace {

VoganDiagram make_vd(const DynkinDiagram& diagram, std::vector<int> perm,
                     std::set<int> painted) {
  VoganDiagram vd{diagram, DiagramInvolution{std::move(perm)}, Painting{std::move(painted)}};
  vd.validate();
  return vd;
}

std::string classify_display(const FamilySpec& spec, const VoganDiagram& vd) {
  auto label = classify(spec, vd);
  return label ? label->display() : "unlabelled";
}

}  // namespace

TEST_CASE("D21 rows") {
  auto spec = FamilySpec::D21();
  auto d = catalogue_diagram(spec);
  CHECK(classify_display(spec, make_vd(d, {0, 1, 2, 3}, {})) ==
        "sl(2,ℝ)⊕sl(2,ℝ)⊕sl(2,ℝ)");
  CHECK(classify_display(spec, make_vd(d, {0, 1, 2, 3}, {3})) ==
        "su(2)⊕su(2)⊕sl(2,ℝ)");
  CHECK(classify_display(spec, make_vd(d, {0, 1, 2, 3}, {2})) ==
        "su(2)⊕su(2)⊕sl(2,ℝ)");  // any single leaf, up to relabeling
  CHECK(classify_display(spec, make_vd(d, {2, 1, 0, 3}, {})) == "sl(2,ℂ)⊕sl(2,ℝ)");
  // Two painted leaves carry no figure.
  CHECK(classify_display(spec, make_vd(d, {0, 1, 2, 3}, {2, 3})) == "unlabelled");
}

TEST_CASE("B rows") {
  auto spec = FamilySpec::B(2, 1);
  auto d = catalogue_diagram(spec);
  CHECK(classify_display(spec, make_vd(d, {0, 1, 2, 3}, {0, 3})) == "sp(m,ℝ)⊕so(p,q)");
  CHECK(classify_display(spec, make_vd(d, {0, 1, 2, 3}, {0})) == "sp(m,ℝ)");
  CHECK(classify_display(spec, make_vd(d, {0, 1, 2, 3}, {2})) == "unlabelled");
}

TEST_CASE("C rows") {
  auto spec = FamilySpec::C(3);
  auto d = catalogue_diagram(spec);
  CHECK(classify_display(spec, make_vd(d, {0, 1, 2, 3}, {3})) == "sp(n,ℝ)⊕so(2)");
  CHECK(classify_display(spec, make_vd(d, {0, 1, 2, 3}, {2})) == "sp(r,s)⊕so(2)");
}

TEST_CASE("D rows") {
  auto spec = FamilySpec::D(3, 2);
  auto d = catalogue_diagram(spec);
  // delta-run {1}, e-run {3}; fork {4,5}; pre-fork 3.
  CHECK(classify_display(spec, make_vd(d, {0, 1, 2, 3, 4, 5}, {1, 3})) ==
        "sp(r,s)⊕so*(2p)");
  CHECK(classify_display(spec, make_vd(d, {0, 1, 2, 3, 5, 4}, {0, 3})) ==
        "sp(m,ℝ)⊕so(p,q)");
  // Fork swap with no painting is drawn but unlabeled.
  CHECK(classify_display(spec, make_vd(d, {0, 1, 2, 3, 5, 4}, {})) == "unlabelled");
}

TEST_CASE("G3 rows keep their printed heading") {
  auto spec = FamilySpec::G3();
  auto d = catalogue_diagram(spec);
  CHECK(classify_display(spec, make_vd(d, {0, 1, 2, 3}, {2})) == "sl(2,ℝ)⊕so(1,6)");
  CHECK(classify_display(spec, make_vd(d, {0, 1, 2, 3}, {3})) == "sl(2,ℝ)⊕so(2,5)");
  CHECK(classify_display(spec, make_vd(d, {0, 1, 2, 3}, {0, 3})) == "sl(2,ℝ)⊕so(3,4)");
  CHECK(classify_display(spec, make_vd(d, {0, 1, 2, 3}, {0})) == "sl(2,ℝ)⊕so(7)");
}

TEST_CASE("F4 rows keep their printed heading") {
  auto spec = FamilySpec::F4();
  auto d = catalogue_diagram(spec);
  CHECK(classify_display(spec, make_vd(d, {0, 1, 2, 3, 4}, {4})) == "sl(2,ℝ)⊕g_c");
  CHECK(classify_display(spec, make_vd(d, {0, 1, 2, 3, 4}, {0})) == "sl(2,ℝ)⊕g_s");
}

TEST_CASE("A rows") {
  auto spec = FamilySpec::A(2, 2);
  auto d = catalogue_diagram(spec);
  // Free reflection (no fixed vertices): i -> 3 - i mod 6.
  CHECK(classify_display(spec, make_vd(d, {3, 2, 1, 0, 5, 4}, {})) ==
        "sl(m,ℝ)⊕sl(n,ℝ)⊕ℝ");
  // Reflection fixing the two greys.
  CHECK(classify_display(spec, make_vd(d, {0, 5, 4, 3, 2, 1}, {})) == "sl(n,ℂ)⊕ℝ");
  // Identity with one painted vertex in each white run.
  CHECK(classify_display(spec, make_vd(d, {0, 1, 2, 3, 4, 5}, {1, 4})) ==
        "su(p,m-p)⊕su(r,n-r)⊕iℝ");

  auto odd = FamilySpec::A(1, 1);
  auto od = catalogue_diagram(odd);
  // Reflection with two fixed whites.
  CHECK(classify_display(odd, make_vd(od, {2, 1, 0, 3}, {})) == "su*(m)⊕su*(n)⊕ℝ");
}

TEST_CASE("labels carry captions, figures, and quirk flags") {
  auto spec = FamilySpec::G3();
  auto d = catalogue_diagram(spec);
  auto label = classify(spec, make_vd(d, {0, 1, 2, 3}, {3}));
  REQUIRE(label.has_value());
  CHECK(label->source_figure == "G3.2");
  CHECK(label->verbatim_label.find("su(2,\\mathbb{R})\\oplus so(2,5)") != std::string::npos);
  REQUIRE_FALSE(label->errata_flags.empty());
  CHECK(label->errata_flags[0].find("su(2,ℝ)") != std::string::npos);
  CHECK(label->appendix == "⊕ℝiK⊕ℝiD");
}

TEST_CASE("every pattern instantiates somewhere and classifies to itself") {
  struct Case {
    FamilySpec spec;
  };
  std::vector<FamilySpec> instances{
      FamilySpec::A(2, 2), FamilySpec::A(1, 1), FamilySpec::B(2, 1),
      FamilySpec::C(3),    FamilySpec::D(3, 2), FamilySpec::D21(),
      FamilySpec::F4(),    FamilySpec::G3()};
  std::set<std::string> hit;
  for (const auto& spec : instances) {
    for (const auto& entry : default_label_table()) {
      if (entry.family != spec.family) continue;
      auto vd = instantiate_pattern(spec, entry.pattern);
      if (!vd) continue;
      auto label = classify(spec, *vd);
      REQUIRE(label.has_value());
      CHECK(label->display() == entry.label.display());
      hit.insert(family_name(entry.family) + ":" + entry.pattern);
    }
  }
  // All nineteen figure rows are realized across these instances.
  CHECK(hit.size() == default_label_table().size());
}
