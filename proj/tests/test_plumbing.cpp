#include <doctest.h>

#include "cuspatlas/detail/smith.hpp"
#include "cuspatlas/plumbing.hpp"

#include <sstream>

using namespace cuspatlas;

namespace {

std::vector<std::int64_t> leg(const PlumbingGraph& g, const std::string& tag) {
  std::vector<std::int64_t> out;
  for (const auto& v : g.vertices)
    if (v.label.rfind(tag, 0) == 0) out.push_back(v.euler);
  return out;
}

BigInt det(const PlumbingGraph& g) {
  detail::IntMatrix m;
  for (const auto& row : g.matrix()) m.emplace_back(row.begin(), row.end());
  return detail::determinant(m);
}

}  // namespace

TEST_CASE("graph editing") {
  PlumbingGraph g;
  const int a = g.add_vertex(-2, "a"), b = g.add_vertex(-3, "b");
  g.add_intersection(b, a, 2);
  CHECK(g.intersection(a, b) == 2);
  CHECK(g.edges.front().u == a);
  g.add_intersection(a, b, -2);
  CHECK(g.edges.empty());
  CHECK_THROWS_AS(g.add_intersection(a, b, -1), DomainError);
  CHECK_THROWS_AS(g.add_intersection(a, a, 1), DomainError);
}

TEST_CASE("normal crossing resolutions") {
  auto g23 = nc_resolution(CuspType::make(2, 3));
  CHECK(g23.vertices[0].euler == -1);
  CHECK(g23.hollow == 0);
  CHECK(leg(g23, "a") == std::vector<std::int64_t>{-2});
  CHECK(leg(g23, "b") == std::vector<std::int64_t>{-3});
  auto g25 = nc_resolution(CuspType::make(2, 5));
  CHECK(leg(g25, "a") == std::vector<std::int64_t>{-2});
  CHECK(leg(g25, "b") == std::vector<std::int64_t>{-3, -2});
  for (std::int64_t p = 2; p <= 7; ++p) {
    auto g = nc_resolution(CuspType::make(p, p + 1));
    CHECK(leg(g, "a") == std::vector<std::int64_t>(std::size_t(p - 1), -2));
    CHECK(leg(g, "b") == std::vector<std::int64_t>{-(p + 1)});
  }
}

TEST_CASE("curve resolution weight") {
  CHECK(curve_resolution({CuspType::make(2, 3), CuspType::make(2, 5)}, 16).vertices[0].euler == 0);
  CHECK(curve_resolution({CuspType::make(4, 5)}, 25).vertices[0].euler == 5);
  auto bare = curve_resolution({}, 1);
  CHECK(bare.size() == 1);
  CHECK(bare.vertices[0].euler == 1);
  CHECK(bare.root == 0);
}

TEST_CASE("blow_up") {
  PlumbingGraph g;
  g.add_vertex(1, "L");
  auto g1 = blow_up(g, SmoothPoint{0});
  CHECK(g1.vertices[0].euler == 0);
  CHECK(g1.vertices[1].euler == -1);
  CHECK(g1.intersection(0, 1) == 1);

  PlumbingGraph h;
  h.add_vertex(-2, "u");
  h.add_vertex(-3, "v");
  h.add_intersection(0, 1, 1);
  auto h1 = blow_up(h, EdgePoint{0, 1});
  CHECK(h1.intersection(0, 1) == 0);
  CHECK(h1.intersection(2, 0) == 1);
  CHECK(h1.intersection(2, 1) == 1);
  CHECK(h1.vertices[0].euler == -3);
  CHECK(h1.vertices[1].euler == -4);
  CHECK(det(h1) == -det(h));
  CHECK_THROWS_AS(blow_up(h1, EdgePoint{0, 1}), DomainError);
  CHECK_THROWS_AS(blow_up(h1, SmoothPoint{7}), DomainError);
}

TEST_CASE("A_p comes from blowing up the curve edge of the curve resolution") {
  for (std::int64_t p = 2; p <= 6; ++p) {
    auto g = curve_resolution({CuspType::make(p, p + 1)}, (p + 1) * (p + 1));
    // the curve meets the center once; follow the newest exceptional vertex
    int other = g.neighbors(*g.root).front();
    for (int i = 0; i < p; ++i) {
      g = blow_up(g, EdgePoint{*g.root, other});
      other = int(g.size()) - 1;
    }
    const Cap cap = build_cap(CapRecipe::A(p));
    CHECK(cap.graph.size() == g.size());
    CHECK(cap.graph.matrix() == g.matrix());
    CHECK(cap.graph.size() == std::size_t(2 * p + 2));
  }
}

TEST_CASE("cap recipes") {
  CHECK(build_cap(CapRecipe::A(3)).blowups == 7);
  CHECK(build_cap(CapRecipe::B(3)).blowups == 8);
  const Cap e3 = build_cap(CapRecipe{CapFamily::E3, 0, {}, 0, {}});
  CHECK(e3.graph.vertices[std::size_t(*e3.graph.root)].euler == 1);
  CHECK(e3.blowups == 7);
  CHECK_THROWS(build_cap(CapRecipe::A(1)));
  const auto r = cap_recipe_for(CuspCombo::make({CuspType::make(2, 5), CuspType::make(2, 5), CuspType::make(2, 5)}, 5));
  REQUIRE(r.has_value());
  const Cap c = build_cap(*r);
  CHECK(c.graph.size() == 7);
  int tangent = 0;
  for (const auto& e : c.graph.edges) tangent += e.mult == 2 && (e.u == *c.graph.root || e.v == *c.graph.root);
  CHECK(tangent == 3);
  // minimal resolution weight below 1: no cap
  CHECK(!cap_recipe_for(CuspCombo::make(std::vector<CuspType>(10, CuspType::make(2, 3)), 6)).has_value());
}

TEST_CASE("to_dot") {
  CHECK(to_dot(PlumbingGraph{}) == "graph plumbing {\n}\n");
  const Cap a2 = build_cap(CapRecipe::A(2));
  const std::string dot = to_dot(a2.graph);
  CHECK(dot == to_dot(a2.graph));
  std::size_t nodes = 0;
  std::istringstream in(dot);
  for (std::string line; std::getline(in, line);) nodes += line.find("[label=") != std::string::npos && line.find("--") == std::string::npos;
  CHECK(nodes == 6);
  CHECK(dot.find("shape=doublecircle") != std::string::npos);
}
