#pragma once

#include <algorithm>
#include <cctype>
#include <functional>
#include <map>
#include <optional>
#include <stdexcept>
#include <string>
#include <vector>

#include "cuspatlas/lattice.hpp"
#include "cuspatlas/plumbing.hpp"

namespace testsupport {

using cuspatlas::HClass;
using cuspatlas::PlumbingGraph;

// Parses classes written like "3h - 2e0 - e1 + e_12". Indices are kept as written.
inline HClass parse_class(const std::string& text) {
  HClass c;
  std::size_t i = 0;
  auto skip = [&] {
    while (i < text.size() && std::isspace(static_cast<unsigned char>(text[i]))) ++i;
  };
  skip();
  while (i < text.size()) {
    std::int64_t sign = 1;
    if (text[i] == '+' || text[i] == '-') {
      sign = text[i] == '-' ? -1 : 1;
      ++i;
      skip();
    }
    std::int64_t k = 1;
    if (std::isdigit(static_cast<unsigned char>(text[i]))) {
      std::size_t used = 0;
      k = std::stoll(text.substr(i), &used);
      i += used;
    }
    if (text[i] == 'h') {
      c.a0 += sign * k;
      ++i;
    } else if (text[i] == 'e') {
      ++i;
      if (text[i] == '_') ++i;
      std::size_t used = 0;
      const int idx = std::stoi(text.substr(i), &used);
      i += used;
      c.set(idx, c.coeff(idx) + sign * k);
    } else {
      throw std::invalid_argument("bad class text: " + text);
    }
    skip();
  }
  return c;
}

inline std::vector<HClass> parse_classes(const std::vector<std::string>& v) {
  std::vector<HClass> out;
  for (const auto& s : v) out.push_back(parse_class(s));
  return out;
}

// Graph whose matrix is the pairing matrix of the given classes.
inline PlumbingGraph graph_of_classes(const std::vector<HClass>& cls) {
  PlumbingGraph g;
  for (const auto& c : cls) g.add_vertex(cuspatlas::pairing(c, c), "");
  for (std::size_t i = 0; i < cls.size(); ++i)
    for (std::size_t j = i + 1; j < cls.size(); ++j) {
      const auto x = cuspatlas::pairing(cls[i], cls[j]);
      if (x < 0) throw std::invalid_argument("negative pairing in golden classes");
      if (x) g.add_intersection(int(i), int(j), x);
    }
  return g;
}

// All bijections f with a.matrix()[i][j] == b.matrix()[f(i)][f(j)].
inline std::vector<std::vector<int>> isomorphisms(const PlumbingGraph& a, const PlumbingGraph& b, std::size_t cap = 64) {
  std::vector<std::vector<int>> out;
  const std::size_t n = a.size();
  if (n != b.size()) return out;
  const auto ma = a.matrix(), mb = b.matrix();
  std::vector<int> f(n, -1);
  std::vector<bool> used(n, false);
  std::function<void(std::size_t)> rec = [&](std::size_t i) {
    if (out.size() >= cap) return;
    if (i == n) {
      out.push_back(f);
      return;
    }
    for (std::size_t j = 0; j < n; ++j) {
      if (used[j] || ma[i][i] != mb[j][j]) continue;
      if (a.neighbors(int(i)).size() != b.neighbors(int(j)).size()) continue;
      bool ok = true;
      for (std::size_t k = 0; k < i && ok; ++k) ok = ma[i][k] == mb[j][std::size_t(f[k])];
      if (!ok) continue;
      f[i] = int(j);
      used[j] = true;
      rec(i + 1);
      used[j] = false;
    }
    f[i] = -1;
  };
  rec(0);
  return out;
}

// Embedding data up to renaming exceptional indices: the h-degrees plus the
// sorted list of coefficient columns.
using ClassKey = std::pair<std::vector<std::int64_t>, std::vector<std::vector<std::int64_t>>>;

inline ClassKey class_key(const std::vector<HClass>& cls) {
  ClassKey k;
  std::map<int, std::vector<std::int64_t>> cols;
  for (const auto& c : cls) {
    k.first.push_back(c.a0);
    for (const auto& [i, v] : c.coeffs) cols[i];
  }
  for (auto& [i, col] : cols)
    for (const auto& c : cls) col.push_back(c.coeff(i));
  for (auto& [i, col] : cols) k.second.push_back(col);
  std::sort(k.second.begin(), k.second.end());
  return k;
}

// True when the golden classes, listed in golden vertex order, match one of the
// embeddings of g under some isomorphism between their graphs.
inline bool golden_embedding_found(const PlumbingGraph& g, const std::vector<cuspatlas::Embedding>& embs,
                                   const std::vector<HClass>& golden) {
  const PlumbingGraph gg = graph_of_classes(golden);
  for (const auto& f : isomorphisms(gg, g, 4096)) {
    std::vector<HClass> mapped(golden.size());
    for (std::size_t i = 0; i < golden.size(); ++i) mapped[std::size_t(f[i])] = golden[i];
    const ClassKey want = class_key(mapped);
    for (const auto& e : embs)
      if (class_key(e.classes) == want) return true;
  }
  return false;
}

// Plain graph from eulers and edges given by figure positions.
struct FigureGraph {
  std::vector<std::int64_t> euler;
  std::vector<std::tuple<int, int, std::int64_t>> edges;
  PlumbingGraph build() const {
    PlumbingGraph g;
    for (auto e : euler) g.add_vertex(e, "");
    for (auto [u, v, m] : edges) g.add_intersection(u, v, m);
    return g;
  }
};

}  // namespace testsupport
