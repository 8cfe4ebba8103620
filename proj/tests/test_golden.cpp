// Cap graphs and homology classes transcribed by hand, matched up to graph
// isomorphism and renaming of e_i.
#include <doctest.h>

#include "cuspatlas/blowdown.hpp"
#include "cuspatlas/obstruct.hpp"
#include "support.hpp"

using namespace cuspatlas;
using testsupport::FigureGraph;
using testsupport::golden_embedding_found;
using testsupport::isomorphisms;
using testsupport::parse_classes;

namespace {

std::string e(int i) { return "e" + std::to_string(i); }
std::string diff(int i, int j) { return e(i) + " - " + e(j); }

// Chain +1, -1, (p-1) x -2, center -2, (p-1) x -2 on the lower leg, plus the -(p+1) arm on the center.
FigureGraph figure_Ap(int p) {
  FigureGraph f;
  f.euler = {1, -1};
  for (int i = 0; i < p - 1; ++i) f.euler.push_back(-2);
  const int center = int(f.euler.size());
  f.euler.push_back(-2);
  for (int i = 0; i < p - 1; ++i) f.euler.push_back(-2);
  for (int i = 0; i + 1 < int(f.euler.size()); ++i) f.edges.emplace_back(i, i + 1, 1);
  f.euler.push_back(-p - 1);
  f.edges.emplace_back(center, int(f.euler.size()) - 1, 1);
  return f;
}

std::vector<std::string> classes_Ap(int p) {
  std::vector<std::string> v{"h", "h - e0 - e1"};
  for (int i = 1; i <= 2 * p - 1; ++i) v.push_back(diff(i, i + 1));
  std::string arm = "e0";
  for (int i = 1; i <= p; ++i) arm += " - " + e(i);
  v.push_back(arm);
  return v;
}

// Chain +1, -1, (p-2) x -2, center, (p-2) x -2, -3, -2, -2 with the -p arm on the center.
FigureGraph figure_Bp(int p) {
  FigureGraph f;
  f.euler = {1, -1};
  for (int i = 0; i < p - 2; ++i) f.euler.push_back(-2);
  const int center = int(f.euler.size());
  f.euler.push_back(-2);
  for (int i = 0; i < p - 2; ++i) f.euler.push_back(-2);
  for (auto x : {-3, -2, -2}) f.euler.push_back(x);
  for (int i = 0; i + 1 < int(f.euler.size()); ++i) f.edges.emplace_back(i, i + 1, 1);
  f.euler.push_back(-p);
  f.edges.emplace_back(center, int(f.euler.size()) - 1, 1);
  return f;
}

std::vector<std::string> classes_Bp(int p, bool last_red) {
  std::vector<std::string> v{"h", "h - e0 - e1"};
  for (int i = 1; i <= 2 * p - 3; ++i) v.push_back(diff(i, i + 1));
  v.push_back(e(2 * p - 2) + " - " + e(2 * p - 1) + " - " + e(2 * p));
  v.push_back(diff(2 * p, 2 * p + 1));
  v.push_back(last_red ? diff(2 * p + 1, 2 * p + 2) : diff(2 * p - 1, 2 * p));
  std::string arm = "e0";
  for (int i = 1; i <= p - 1; ++i) arm += " - " + e(i);
  v.push_back(arm);
  return v;
}

FigureGraph figure_E3() {
  // +1 =3= -1 - -2 x 6 in a line
  FigureGraph f;
  f.euler = {1, -1, -2, -2, -2, -2, -2, -2};
  f.edges.emplace_back(0, 1, 3);
  for (int i = 1; i < 7; ++i) f.edges.emplace_back(i, i + 1, 1);
  return f;
}

FigureGraph figure_E6() {
  // lower line +1 =3= -4 - -2 x 6; upper chain -1 - -2 - -2 with the -1 through the tangency point
  FigureGraph f;
  f.euler = {1, -4, -2, -2, -2, -2, -2, -2, -1, -2, -2};
  f.edges.emplace_back(0, 1, 3);
  for (int i = 1; i < 7; ++i) f.edges.emplace_back(i, i + 1, 1);
  f.edges.emplace_back(8, 0, 1);
  f.edges.emplace_back(8, 1, 1);
  f.edges.emplace_back(8, 9, 1);
  f.edges.emplace_back(9, 10, 1);
  return f;
}

void check_figure(const Cap& cap, const FigureGraph& fig) {
  CHECK(!isomorphisms(fig.build(), cap.graph, 1).empty());
}

void check_golden(const Cap& cap, const std::vector<Embedding>& embs, const std::vector<std::string>& cls,
                  const FigureGraph* fig = nullptr) {
  const auto golden = parse_classes(cls);
  if (fig) CHECK(!isomorphisms(fig->build(), testsupport::graph_of_classes(golden), 1).empty());
  CHECK(golden_embedding_found(cap.graph, embs, golden));
}

}  // namespace

TEST_CASE("A_p caps match the figure and the unique listed embedding") {
  for (int p = 2; p <= 6; ++p) {
    CAPTURE(p);
    const Cap cap = build_cap(CapRecipe::A(p));
    const auto fig = figure_Ap(p);
    check_figure(cap, fig);
    const auto embs = enumerate_embeddings(cap.graph);
    REQUIRE(embs.size() == 1);
    check_golden(cap, embs, classes_Ap(p), &fig);
  }
}

TEST_CASE("B_p caps match the figure and both listed embeddings") {
  for (int p = 2; p <= 5; ++p) {
    CAPTURE(p);
    const Cap cap = build_cap(CapRecipe::B(p));
    const auto fig = figure_Bp(p);
    check_figure(cap, fig);
    const auto embs = enumerate_embeddings(cap.graph);
    CHECK(embs.size() == (p == 2 ? 3u : 2u));
    check_golden(cap, embs, classes_Bp(p, true), &fig);
    check_golden(cap, embs, classes_Bp(p, false), &fig);
  }
  // p = 2 additional case
  const Cap cap = build_cap(CapRecipe::B(2));
  const auto embs = enumerate_embeddings(cap.graph);
  check_golden(cap, embs, {"h", "h - e0 - e1", "e1 - e2", "e0 - e1 - e3", "e3 - e4", "e4 - e5", "e2 - e6"});
}

TEST_CASE("E3 cap and its three embeddings") {
  const Cap cap = build_cap(CapRecipe{CapFamily::E3, 0, {}, 0, {}});
  const auto fig = figure_E3();
  check_figure(cap, fig);
  const auto embs = enumerate_embeddings(cap.graph);
  REQUIRE(embs.size() == 3);
  const std::string cubic = "3h - 2e0 - e1 - e2 - e3 - e4 - e5 - e6";
  check_golden(cap, embs, {"h", cubic, "e1 - e7", "e7 - e8", "e8 - e9", "e9 - e10", "e10 - e11", "e11 - e12"}, &fig);
  check_golden(cap, embs, {"h", cubic, "e1 - e7", "e2 - e1", "e3 - e2", "e4 - e3", "e5 - e4", "e6 - e5"}, &fig);
  check_golden(cap, embs, {"h", cubic, "e0 - e1", "e1 - e2", "e2 - e3", "e3 - e4", "e4 - e5", "e5 - e6"}, &fig);
}

TEST_CASE("E6 cap and its six embeddings") {
  const Cap cap = build_cap(CapRecipe{CapFamily::E6, 0, {}, 0, {}});
  const auto fig = figure_E6();
  check_figure(cap, fig);
  const auto embs = enumerate_embeddings(cap.graph);
  REQUIRE(embs.size() == 6);
  const std::string quartic = "3h - 2e0 - e1 - e2 - e3 - e4 - e5 - e6 - e7 - e8 - e9";
  const std::vector<std::string> d1{"h", quartic, "e1 - e10", "e10 - e11", "e11 - e12", "e12 - e13", "e13 - e14", "e14 - e15"};
  const std::vector<std::string> d2{"h", quartic, "e1 - e10", "e2 - e1", "e3 - e2", "e4 - e3", "e5 - e4", "e6 - e5"};
  const std::vector<std::string> d3{"h", quartic, "e0 - e1", "e1 - e2", "e2 - e3", "e3 - e4", "e4 - e5", "e5 - e6"};
  auto with = [](std::vector<std::string> lower, std::vector<std::string> upper) {
    lower.insert(lower.end(), upper.begin(), upper.end());
    return lower;
  };
  const std::vector<std::string> d4{"h - e8 - e9", "e8 - e7", "e7 - e6"};
  const std::vector<std::string> d5a{"h - e0 - e16", "e16 - e17", "e17 - e18"};
  const std::vector<std::string> d5b{"h - e0 - e11", "e11 - e12", "e12 - e13"};
  const std::vector<std::string> d6{"h - e8 - e9", "e8 - e7", "e9 - e8"};
  check_golden(cap, embs, with(d1, d4), &fig);
  check_golden(cap, embs, with(d1, d5a), &fig);
  check_golden(cap, embs, with(d2, d5b), &fig);
  check_golden(cap, embs, with(d1, d6), &fig);
  check_golden(cap, embs, with(d2, d6), &fig);
  check_golden(cap, embs, with(d3, d6), &fig);
}

namespace {

Cap combo_cap(std::vector<CuspType> cusps, int d) {
  auto r = cap_recipe_for(CuspCombo::make(std::move(cusps), d));
  REQUIRE(r.has_value());
  return build_cap(*r);
}

}  // namespace

TEST_CASE("bicuspidal quartic: three listed embeddings") {
  const Cap cap = combo_cap({CuspType::make(2, 5), CuspType::make(2, 3)}, 4);
  const auto embs = enumerate_embeddings(cap.graph);
  REQUIRE(embs.size() == 3);
  const std::vector<std::string> common{"h", "h - e1 - e2", "h - e3 - e4 - e5", "e5 - e6", "h - e1 - e3"};
  auto opt = [&](std::string m3, std::string m2) {
    auto v = common;
    v.push_back(m3);
    v.push_back(m2);
    return v;
  };
  check_golden(cap, embs, opt("e3 - e5 - e6", "e1 - e2"));
  check_golden(cap, embs, opt("e3 - e4 - e7", "e1 - e2"));
  check_golden(cap, embs, opt("e1 - e2 - e7", "e3 - e4"));
}

TEST_CASE("tricuspidal quartic: three listed embeddings") {
  const auto c = CuspType::make(2, 3);
  const Cap cap = combo_cap({c, c, c}, 4);
  const auto embs = enumerate_embeddings(cap.graph);
  REQUIRE(embs.size() == 3);
  const std::vector<std::string> common{"h", "h - e1 - e2", "h - e3 - e4 - e5", "h - e1 - e3", "h - e2 - e4 - e6"};
  auto opt = [&](std::string m1, std::string m2) {
    auto v = common;
    v.push_back(m1);
    v.push_back(m2);
    return v;
  };
  check_golden(cap, embs, opt("h - e1 - e4", "h - e2 - e3 - e7"));
  check_golden(cap, embs, opt("h - e2 - e3", "h - e1 - e4 - e7"));
  check_golden(cap, embs, opt("h - e2 - e3", "h - e1 - e5 - e6"));
}

TEST_CASE("(3,7) quintic cap matches the figure and has no embedding") {
  const Cap cap = combo_cap({CuspType::make(3, 7)}, 5);
  // +1 - -1 - -2 x 5, the -4 on the third -2, and a -2 on the -4
  FigureGraph f;
  f.euler = {1, -1, -2, -2, -2, -2, -2, -4, -2};
  for (int i = 0; i < 6; ++i) f.edges.emplace_back(i, i + 1, 1);
  f.edges.emplace_back(4, 7, 1);
  f.edges.emplace_back(7, 8, 1);
  check_figure(cap, f);
  CHECK(enumerate_embeddings(cap.graph).empty());
}

TEST_CASE("quintic minimal resolutions with two listed embeddings") {
  SUBCASE("(2,11)+(2,3)") {
    const Cap cap = combo_cap({CuspType::make(2, 11), CuspType::make(2, 3)}, 5);
    const auto embs = enumerate_embeddings(cap.graph);
    CHECK(embs.size() == 2);
    const std::vector<std::string> tangents{"h", "2h - e1 - e2 - e3 - e4 - e5", "2h - e2 - e3 - e4 - e5 - e6"};
    auto opt = [&](std::vector<std::string> chain) {
      auto v = tangents;
      v.insert(v.end(), chain.begin(), chain.end());
      return v;
    };
    check_golden(cap, embs, opt({"e1 - e7", "e7 - e8", "e8 - e9", "e9 - e10"}));
    check_golden(cap, embs, opt({"e5 - e6", "e4 - e5", "e3 - e4", "e2 - e3"}));
  }
  SUBCASE("(2,9)+(2,5)") {
    const Cap cap = combo_cap({CuspType::make(2, 9), CuspType::make(2, 5)}, 5);
    const auto embs = enumerate_embeddings(cap.graph);
    CHECK(embs.size() == 2);
    const std::vector<std::string> tangents{"h", "2h - e1 - e2 - e3 - e4 - e5", "2h - e2 - e3 - e4 - e5 - e6"};
    auto opt = [&](std::vector<std::string> chain) {
      auto v = tangents;
      v.insert(v.end(), chain.begin(), chain.end());
      return v;
    };
    check_golden(cap, embs, opt({"e6 - e10", "e1 - e7", "e7 - e8", "e8 - e9"}));
    check_golden(cap, embs, opt({"e2 - e1", "e5 - e6", "e4 - e5", "e3 - e4"}));
  }
  SUBCASE("3(2,5)") {
    const auto c = CuspType::make(2, 5);
    const Cap cap = combo_cap({c, c, c}, 5);
    FigureGraph f;
    f.euler = {1, -1, -2, -1, -2, -1, -2};
    for (int i : {1, 3, 5}) {
      f.edges.emplace_back(0, i, 2);
      f.edges.emplace_back(i, i + 1, 1);
    }
    check_figure(cap, f);
    const auto embs = enumerate_embeddings(cap.graph);
    CHECK(embs.size() == 2);
    check_golden(cap, embs,
                 {"h", "2h - e1 - e2 - e3 - e4 - e7", "e7 - e10", "2h - e1 - e2 - e3 - e4 - e6", "e6 - e9",
                  "2h - e1 - e2 - e3 - e4 - e5", "e5 - e8"});
    check_golden(cap, embs,
                 {"h", "2h - e1 - e2 - e3 - e5 - e6", "e1 - e4", "2h - e1 - e2 - e3 - e4 - e6", "e2 - e5",
                  "2h - e1 - e2 - e3 - e4 - e5", "e3 - e6"});
  }
}

TEST_CASE("resolution examples") {
  // proper transform weight of the bicuspidal quartic resolution
  const auto g = curve_resolution({CuspType::make(2, 3), CuspType::make(2, 5)}, 16);
  CHECK(g.vertices[std::size_t(*g.root)].euler == 0);
  const auto g45 = curve_resolution({CuspType::make(4, 5)}, 25);
  CHECK(g45.vertices[std::size_t(*g45.root)].euler == 5);
}
