#pragma once

#include <cstdint>
#include <optional>
#include <string>
#include <variant>
#include <vector>

#include "cuspatlas/cusp.hpp"

namespace cuspatlas {

struct Vertex {
  int id = 0;
  std::int64_t euler = 0;
  std::string label;
};

// Stored with u < v; at most one edge per pair, mult is the local
// intersection number.
struct Edge {
  int u = 0;
  int v = 0;
  std::int64_t mult = 1;
  friend bool operator==(const Edge&, const Edge&) = default;
};

struct PlumbingGraph {
  std::vector<Vertex> vertices;
  std::vector<Edge> edges;  // sorted by (u,v)
  std::optional<int> root;
  // nc_resolution only: the vertex the proper transform will meet.
  std::optional<int> hollow;

  int add_vertex(std::int64_t euler, std::string label);
  // Adds delta to the intersection number of u and v, dropping the edge at 0.
  void add_intersection(int u, int v, std::int64_t delta);
  std::int64_t intersection(int u, int v) const;
  std::vector<int> neighbors(int v) const;
  std::size_t size() const { return vertices.size(); }
  // Intersection matrix: eulers on the diagonal.
  std::vector<std::vector<std::int64_t>> matrix() const;

  friend bool operator==(const PlumbingGraph&, const PlumbingGraph&);
};

bool operator==(const Vertex& a, const Vertex& b);

PlumbingGraph nc_resolution(const CuspType& c);
PlumbingGraph curve_resolution(const std::vector<CuspType>& cusps, std::int64_t s);

struct SmoothPoint {
  int v = 0;
};
struct EdgePoint {
  int u = 0;
  int v = 0;
};
using BlowUpSite = std::variant<SmoothPoint, EdgePoint>;

PlumbingGraph blow_up(const PlumbingGraph& g, const BlowUpSite& site, std::string label = "E");

// Blows up each cusp of a curve with self-intersection s the given number of
// times, following the infinitely near points on the curve. Vertex 0 is the
// proper transform. The first mult_seq(c).size() steps give the minimal
// resolution; further steps separate the curve from the exceptional curves.
PlumbingGraph partial_resolution(const std::vector<std::pair<CuspType, int>>& steps, std::int64_t s);

enum class CapFamily { Ap, Bp, E3, E6, QuarticMin, QuinticMin, Custom };

struct CapRecipe {
  CapFamily family = CapFamily::Custom;
  std::int64_t p = 0;               // Ap, Bp
  std::vector<CuspType> cusps;      // QuarticMin, QuinticMin, Custom
  int degree = 0;                   // QuarticMin, QuinticMin, Custom
  std::vector<int> extra;           // Custom: blow-ups beyond the minimal resolution, per cusp

  static CapRecipe A(std::int64_t p) { return CapRecipe{CapFamily::Ap, p, {}, 0, {}}; }
  static CapRecipe B(std::int64_t p) { return CapRecipe{CapFamily::Bp, p, {}, 0, {}}; }
  std::string str() const;
};

struct Cap {
  PlumbingGraph graph;  // root is the +1 proper transform
  int blowups = 0;      // exceptional vertices
  CapRecipe recipe;
  std::vector<int> extra;  // per cusp (descending order) beyond the minimal resolution
};

Cap build_cap(const CapRecipe& r);

// Chooses a recipe for a combo: the unicuspidal family caps, the quartic and
// quintic figure recipes, otherwise round robin extra blow-ups. nullopt when
// the minimal resolution already has proper-transform weight < 1.
std::optional<CapRecipe> cap_recipe_for(const CuspCombo& combo);

std::string family_name(CapFamily f);

std::string to_dot(const PlumbingGraph& g);

}  // namespace cuspatlas
