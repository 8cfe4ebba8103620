#include "cuspatlas/plumbing.hpp"

#include <algorithm>
#include <limits>
#include <map>
#include <sstream>
#include <stdexcept>

#include "cuspatlas/numtheory.hpp"

namespace cuspatlas {

bool operator==(const Vertex& a, const Vertex& b) {
  return a.id == b.id && a.euler == b.euler && a.label == b.label;
}

bool operator==(const PlumbingGraph& a, const PlumbingGraph& b) {
  return a.vertices == b.vertices && a.edges == b.edges && a.root == b.root && a.hollow == b.hollow;
}

int PlumbingGraph::add_vertex(std::int64_t euler, std::string label) {
  int id = int(vertices.size());
  vertices.push_back(Vertex{id, euler, std::move(label)});
  return id;
}

void PlumbingGraph::add_intersection(int u, int v, std::int64_t delta) {
  if (u == v) throw DomainError("plumbing: self-edge");
  if (u < 0 || v < 0 || std::size_t(u) >= size() || std::size_t(v) >= size())
    throw DomainError("plumbing: vertex out of range");
  if (u > v) std::swap(u, v);
  auto it = std::lower_bound(edges.begin(), edges.end(), std::pair{u, v},
                             [](const Edge& e, const std::pair<int, int>& k) { return std::pair{e.u, e.v} < k; });
  if (it != edges.end() && it->u == u && it->v == v) {
    it->mult += delta;
    if (it->mult < 0) throw DomainError("plumbing: negative intersection");
    if (it->mult == 0) edges.erase(it);
    return;
  }
  if (delta < 0) throw DomainError("plumbing: negative intersection");
  if (delta > 0) edges.insert(it, Edge{u, v, delta});
}

std::int64_t PlumbingGraph::intersection(int u, int v) const {
  if (u == v) return vertices.at(std::size_t(u)).euler;
  if (u > v) std::swap(u, v);
  for (const auto& e : edges)
    if (e.u == u && e.v == v) return e.mult;
  return 0;
}

std::vector<int> PlumbingGraph::neighbors(int v) const {
  std::vector<int> out;
  for (const auto& e : edges) {
    if (e.u == v) out.push_back(e.v);
    if (e.v == v) out.push_back(e.u);
  }
  std::sort(out.begin(), out.end());
  return out;
}

std::vector<std::vector<std::int64_t>> PlumbingGraph::matrix() const {
  std::vector<std::vector<std::int64_t>> m(size(), std::vector<std::int64_t>(size(), 0));
  for (const auto& v : vertices) m[std::size_t(v.id)][std::size_t(v.id)] = v.euler;
  for (const auto& e : edges) m[std::size_t(e.u)][std::size_t(e.v)] = m[std::size_t(e.v)][std::size_t(e.u)] = e.mult;
  return m;
}

PlumbingGraph nc_resolution(const CuspType& c0) {
  CuspType c = CuspType::make(c0.p, c0.q);
  const std::int64_t qs = inverse_mod(c.q, c.p), ps = inverse_mod(c.p, c.q);
  PlumbingGraph g;
  int center = g.add_vertex(-1, "center");
  g.hollow = center;
  auto leg = [&](const CFString& cf, const std::string& tag) {
    int prev = center;
    for (std::size_t i = 0; i < cf.size(); ++i) {
      int v = g.add_vertex(-cf[i], tag + std::to_string(i + 1));
      g.add_intersection(prev, v, 1);
      prev = v;
    }
  };
  leg(cf_expand(c.p, c.p - qs), "a");
  leg(cf_expand(c.q, c.q - ps), "b");
  return g;
}

PlumbingGraph curve_resolution(const std::vector<CuspType>& cusps, std::int64_t s) {
  PlumbingGraph g;
  std::int64_t w = s;
  for (const auto& c : cusps) w -= c.p * c.q;
  int C = g.add_vertex(w, "C");
  g.root = C;
  for (std::size_t k = 0; k < cusps.size(); ++k) {
    PlumbingGraph r = nc_resolution(cusps[k]);
    const int off = int(g.size());
    for (const auto& v : r.vertices) g.add_vertex(v.euler, "c" + std::to_string(k) + "." + v.label);
    for (const auto& e : r.edges) g.add_intersection(e.u + off, e.v + off, e.mult);
    g.add_intersection(C, *r.hollow + off, 1);
  }
  return g;
}

PlumbingGraph blow_up(const PlumbingGraph& g0, const BlowUpSite& site, std::string label) {
  PlumbingGraph g = g0;
  auto check = [&](int v) {
    if (v < 0 || std::size_t(v) >= g.size()) throw DomainError("blow_up: vertex out of range");
  };
  if (auto sp = std::get_if<SmoothPoint>(&site)) {
    check(sp->v);
    int E = g.add_vertex(-1, std::move(label));
    g.vertices[std::size_t(sp->v)].euler -= 1;
    g.add_intersection(E, sp->v, 1);
  } else {
    const auto& ep = std::get<EdgePoint>(site);
    check(ep.u);
    check(ep.v);
    if (ep.u == ep.v || g.intersection(ep.u, ep.v) < 1) throw DomainError("blow_up: no such edge");
    int E = g.add_vertex(-1, std::move(label));
    g.vertices[std::size_t(ep.u)].euler -= 1;
    g.vertices[std::size_t(ep.v)].euler -= 1;
    g.add_intersection(ep.u, ep.v, -1);
    g.add_intersection(E, ep.u, 1);
    g.add_intersection(E, ep.v, 1);
  }
  return g;
}

PlumbingGraph partial_resolution(const std::vector<std::pair<CuspType, int>>& steps, std::int64_t s) {
  constexpr std::int64_t kInf = std::numeric_limits<std::int64_t>::max();
  PlumbingGraph g;
  const int C = g.add_vertex(s, "C");
  g.root = C;
  for (std::size_t k = 0; k < steps.size(); ++k) {
    const auto& [c, n] = steps[k];
    // Local state: the curve is y^p = x^q up to the current chart; X and Y
    // are the exceptional curves currently playing the coordinate axes.
    std::int64_t u = c.p, v = c.q;
    std::optional<int> X, Y;
    for (int st = 0; st < n; ++st) {
      const std::int64_t m = std::min(u, v);
      std::vector<std::pair<int, std::int64_t>> through{{C, m}};
      if (X) through.emplace_back(*X, 1);
      if (Y) through.emplace_back(*Y, 1);
      const int E = g.add_vertex(-1, "c" + std::to_string(k) + ".E" + std::to_string(st + 1));
      for (const auto& [w, mw] : through) {
        g.vertices[std::size_t(w)].euler -= mw * mw;
        g.add_intersection(w, E, mw);
      }
      for (std::size_t i = 0; i < through.size(); ++i)
        for (std::size_t j = i + 1; j < through.size(); ++j)
          g.add_intersection(through[i].first, through[j].first, -through[i].second * through[j].second);
      if (u == 1 && v == 1) {
        v = kInf;
        X = E;
        Y.reset();
      } else if (u < v) {
        if (v != kInf) v -= u;
        X = E;
      } else {
        u -= v;
        Y = E;
      }
    }
  }
  return g;
}

std::string family_name(CapFamily f) {
  switch (f) {
    case CapFamily::Ap: return "A_p";
    case CapFamily::Bp: return "B_p";
    case CapFamily::E3: return "E3";
    case CapFamily::E6: return "E6";
    case CapFamily::QuarticMin: return "QuarticMin";
    case CapFamily::QuinticMin: return "QuinticMin";
    case CapFamily::Custom: return "Custom";
  }
  return "?";
}

std::string CapRecipe::str() const {
  std::string s = family_name(family);
  if (family == CapFamily::Ap || family == CapFamily::Bp) s += "(p=" + std::to_string(p) + ")";
  if (!cusps.empty()) {
    s += "[";
    for (std::size_t i = 0; i < cusps.size(); ++i) s += (i ? "+" : "") + cusps[i].str();
    s += " d=" + std::to_string(degree) + "]";
  }
  return s;
}

namespace {

std::int64_t min_weight(const std::vector<CuspType>& cusps, int d) {
  std::int64_t w = std::int64_t(d) * d;
  for (const auto& c : cusps)
    for (auto m : mult_seq(c)) w -= m * m;
  return w;
}

// Extra blow-ups per cusp for multi-cusp combos whose minimal resolution has
// weight > 1. Cusp order is descending (p,q), as in CuspCombo.
const std::map<std::vector<CuspType>, std::vector<int>>& figure_extras() {
  static const std::map<std::vector<CuspType>, std::vector<int>> t = {
      {{{3, 5}, {2, 5}}, {2, 1}},
      {{{3, 4}, {2, 7}}, {2, 1}},
      {{{3, 4}, {2, 5}, {2, 3}}, {2, 1, 0}},
      {{{3, 5}, {2, 3}, {2, 3}}, {1, 1, 1}},
      {{{3, 4}, {2, 3}, {2, 3}, {2, 3}}, {0, 1, 1, 1}},
      {{{3, 4}, {3, 4}}, {3, 3}},
      {{{2, 5}, {2, 3}}, {1, 2}},
      {{{2, 3}, {2, 3}, {2, 3}}, {1, 1, 1}},
  };
  return t;
}

std::vector<int> choose_extras(const std::vector<CuspType>& cusps, int d, bool allow_table) {
  const std::int64_t w = min_weight(cusps, d);
  if (w < 1) throw DomainError("cap: minimal resolution already has weight " + std::to_string(w));
  std::vector<int> ex(cusps.size(), 0);
  if (cusps.size() == 1) {
    ex[0] = int(w - 1);
  } else if (w > 1) {
    auto it = figure_extras().find(cusps);
    if (allow_table && it != figure_extras().end()) {
      ex = it->second;
    } else {
      for (std::int64_t i = 0; i < w - 1; ++i) ++ex[std::size_t(i) % ex.size()];
    }
  }
  return ex;
}

Cap cap_from_extras(const CapRecipe& r, const std::vector<CuspType>& cusps, int d, const std::vector<int>& ex) {
  std::vector<std::pair<CuspType, int>> steps;
  int blowups = 0;
  for (std::size_t i = 0; i < cusps.size(); ++i) {
    int n = int(mult_seq(cusps[i]).size()) + ex[i];
    steps.emplace_back(cusps[i], n);
    blowups += n;
  }
  Cap cap{partial_resolution(steps, std::int64_t(d) * d), blowups, r, ex};
  if (cap.graph.vertices[0].euler != 1)
    throw DomainError("cap: proper transform has weight " + std::to_string(cap.graph.vertices[0].euler));
  return cap;
}

}  // namespace

Cap build_cap(const CapRecipe& r) {
  switch (r.family) {
    case CapFamily::Ap:
    case CapFamily::Bp: {
      const std::int64_t p = r.p;
      if (p < 2) throw DomainError("cap: p must be >= 2");
      const bool a = r.family == CapFamily::Ap;
      const CuspType c = a ? CuspType::make(p, p + 1) : CuspType::make(p, 4 * p - 1);
      const std::int64_t d = a ? p + 1 : 2 * p;
      PlumbingGraph g = curve_resolution({c}, d * d);
      // Slide along the curve edge until the proper transform has weight +1.
      int last = *g.root + 1;
      const std::int64_t extra = g.vertices[0].euler - 1;
      for (std::int64_t i = 0; i < extra; ++i) {
        g = blow_up(g, EdgePoint{*g.root, last}, "x" + std::to_string(i + 1));
        last = int(g.size()) - 1;
      }
      const int blowups = int(g.size()) - 1;
      std::vector<int> ex{blowups - int(mult_seq(c).size())};
      return Cap{std::move(g), blowups, r, ex};
    }
    case CapFamily::E3:
      return cap_from_extras(r, {CuspType{3, 22}}, 8, choose_extras({CuspType{3, 22}}, 8, false));
    case CapFamily::E6:
      return cap_from_extras(r, {CuspType{6, 43}}, 16, choose_extras({CuspType{6, 43}}, 16, false));
    case CapFamily::QuarticMin:
    case CapFamily::QuinticMin:
    case CapFamily::Custom: {
      CuspCombo combo = CuspCombo::make(r.cusps, r.degree);
      if (r.family == CapFamily::QuarticMin && combo.degree != 4) throw DomainError("cap: QuarticMin needs degree 4");
      if (r.family == CapFamily::QuinticMin && combo.degree != 5) throw DomainError("cap: QuinticMin needs degree 5");
      if (combo.cusps.empty() || combo.degree < 3) throw DomainError("cap: empty recipe");
      std::vector<int> ex = r.extra;
      if (ex.empty()) {
        ex = choose_extras(combo.cusps, combo.degree, r.family != CapFamily::Custom);
      } else if (ex.size() != combo.cusps.size()) {
        throw DomainError("cap: extra blow-up list has the wrong length");
      }
      return cap_from_extras(r, combo.cusps, combo.degree, ex);
    }
  }
  throw DomainError("cap: unknown recipe");
}

std::optional<CapRecipe> cap_recipe_for(const CuspCombo& combo0) {
  CuspCombo combo = CuspCombo::make(combo0.cusps, combo0.degree);
  if (min_weight(combo.cusps, combo.degree) < 1) return std::nullopt;
  const int d = combo.degree;
  if (combo.cusps.size() == 1) {
    const CuspType c = combo.cusps[0];
    if (c == CuspType{d - 1, d}) return CapRecipe::A(d - 1);
    if (d % 2 == 0 && c == CuspType{d / 2, 2 * d - 1}) return CapRecipe::B(d / 2);
    if (d == 8 && c == CuspType{3, 22}) return CapRecipe{CapFamily::E3, 0, {}, 0, {}};
    if (d == 16 && c == CuspType{6, 43}) return CapRecipe{CapFamily::E6, 0, {}, 0, {}};
  }
  CapFamily f = d == 4 ? CapFamily::QuarticMin : d == 5 ? CapFamily::QuinticMin : CapFamily::Custom;
  return CapRecipe{f, 0, combo.cusps, d, {}};
}

std::string to_dot(const PlumbingGraph& g) {
  std::ostringstream os;
  os << "graph plumbing {\n";
  for (const auto& v : g.vertices) {
    os << "  v" << v.id << " [label=\"" << (v.euler > 0 ? "+" : "") << v.euler << "\"";
    if (!v.label.empty()) os << ", tooltip=\"" << v.label << "\"";
    if (g.root && *g.root == v.id) os << ", shape=doublecircle";
    os << "];\n";
  }
  for (const auto& e : g.edges) os << "  v" << e.u << " -- v" << e.v << " [label=\"" << e.mult << "\"];\n";
  os << "}\n";
  return os.str();
}

}  // namespace cuspatlas
