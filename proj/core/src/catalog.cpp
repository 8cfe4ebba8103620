#include <algorithm>
#include <functional>
#include <map>
#include <optional>
#include <set>

#include "cuspatlas/blowdown.hpp"

namespace cuspatlas {

std::string to_string(CatalogStatus s) {
  switch (s) {
    case CatalogStatus::Obstructed: return "Obstructed";
    case CatalogStatus::UniqueIsotopy: return "UniqueIsotopy";
    case CatalogStatus::Unknown: return "Unknown";
  }
  return "?";
}

namespace {

using Pair = std::pair<int, int>;

struct Pt {
  std::map<int, std::int64_t> mult;  // every curve through the point (0 allowed for deeper-only)
  std::map<Pair, std::int64_t> local;

  bool has(int u) const { return mult.count(u) > 0; }
  std::int64_t loc(int a, int b) const {
    auto it = local.find(a < b ? Pair{a, b} : Pair{b, a});
    return it == local.end() ? 0 : it->second;
  }
  bool singular() const {
    if (mult.size() >= 2) return true;
    for (const auto& [u, m] : mult)
      if (m >= 2) return true;
    return false;
  }
};

struct View {
  std::map<int, std::int64_t> deg;
  std::vector<Pt> pts;

  std::vector<int> of_degree(std::int64_t d) const {
    std::vector<int> out;
    for (const auto& [u, x] : deg)
      if (x == d) out.push_back(u);
    return out;
  }
  std::size_t count(std::int64_t d) const { return of_degree(d).size(); }
  // Local intersections of a and b, largest first.
  std::vector<std::int64_t> meets(int a, int b) const {
    std::vector<std::int64_t> out;
    for (const auto& p : pts)
      if (std::int64_t l = p.loc(a, b); l > 0) out.push_back(l);
    std::sort(out.rbegin(), out.rend());
    return out;
  }
  // Line tangent to a smooth curve at a single point off every other curve.
  bool tangent_alone(int line, int c) const {
    if (meets(line, c) != std::vector<std::int64_t>{2}) return false;
    for (const auto& p : pts)
      if (p.loc(line, c) == 2 && p.mult.size() != 2) return false;
    return true;
  }
  bool tangent(int line, int c) const {
    auto m = meets(line, c);
    return std::find(m.begin(), m.end(), 2) != m.end() && m.size() == std::size_t(deg.at(c)) - 1;
  }
};

View restrict_to(const View& v, const std::set<int>& keep) {
  View r;
  for (int u : keep) r.deg[u] = v.deg.at(u);
  for (const auto& p : v.pts) {
    Pt q;
    for (const auto& [u, m] : p.mult)
      if (keep.count(u)) q.mult[u] = m;
    for (const auto& [k, l] : p.local)
      if (keep.count(k.first) && keep.count(k.second)) q.local[k] = l;
    if (q.singular()) r.pts.push_back(std::move(q));
  }
  return r;
}

View view_of(const ConfigFingerprint& f) {
  View v;
  for (const auto& c : f.components) v.deg[c.curve] = c.degree;
  for (const auto& cl : f.clusters) {
    Pt p;
    p.mult = cl.root_mult;
    p.local = cl.local;
    if (p.singular()) v.pts.push_back(std::move(p));
  }
  return v;
}

template <class F>
bool any_subset(const std::vector<int>& items, std::size_t k, F&& f) {
  if (items.size() < k) return false;
  std::vector<int> pick;
  std::function<bool(std::size_t)> rec = [&](std::size_t from) -> bool {
    if (pick.size() == k) return f(pick);
    for (std::size_t i = from; i + (k - pick.size()) <= items.size(); ++i) {
      pick.push_back(items[i]);
      if (rec(i + 1)) return true;
      pick.pop_back();
    }
    return false;
  };
  return rec(0);
}

bool all_transverse(const Pt& p) {
  for (const auto& [u, m] : p.mult)
    if (m != 1) return false;
  for (const auto& [k, l] : p.local)
    if (l != 1) return false;
  return true;
}

// Sub-configuration obstructions.

bool has_fano(const View& v) {
  return any_subset(v.of_degree(1), 7, [&](const std::vector<int>& ls) {
    View r = restrict_to(v, {ls.begin(), ls.end()});
    if (r.pts.size() != 7) return false;
    for (const auto& p : r.pts)
      if (p.mult.size() != 3 || !all_transverse(p)) return false;
    return true;
  });
}

bool has_concurrent_tangents(const View& v) {
  for (int Q : v.of_degree(2)) {
    if (any_subset(v.of_degree(1), 3, [&](const std::vector<int>& ls) {
          View r = restrict_to(v, {Q, ls[0], ls[1], ls[2]});
          for (int L : ls)
            if (r.meets(L, Q) != std::vector<std::int64_t>{2}) return false;
          for (const auto& p : r.pts)
            if (p.has(ls[0]) && p.has(ls[1]) && p.has(ls[2])) return true;
          return false;
        }))
      return true;
  }
  return false;
}

bool has_pencil_with_tangent(const View& v) {
  for (int L : v.of_degree(1)) {
    if (any_subset(v.of_degree(2), 3, [&](const std::vector<int>& qs) {
          View r = restrict_to(v, {qs[0], qs[1], qs[2]});
          if (r.pts.size() != 4) return false;
          for (const auto& p : r.pts)
            if (p.mult.size() != 3 || !all_transverse(p)) return false;
          View t = restrict_to(v, {qs[0], qs[1], qs[2], L});
          for (int Q : qs)
            if (t.meets(L, Q) != std::vector<std::int64_t>{2}) return false;
          return true;
        }))
      return true;
  }
  return false;
}

bool has_two_conics_tangent_line(const View& v, const std::vector<std::int64_t>& conic_meet) {
  for (int L : v.of_degree(1)) {
    if (any_subset(v.of_degree(2), 2, [&](const std::vector<int>& qs) {
          View r = restrict_to(v, {qs[0], qs[1], L});
          return r.meets(qs[0], qs[1]) == conic_meet && r.meets(L, qs[0]) == std::vector<std::int64_t>{2} &&
                 r.meets(L, qs[1]) == std::vector<std::int64_t>{2};
        }))
      return true;
  }
  return false;
}

// Whole-configuration uniqueness facts.

std::optional<std::string> unique_base(const View& v) {
  const std::size_t nl = v.count(1), nq = v.count(2), nc = v.count(3);
  const std::size_t n = v.deg.size();
  if (nl == n && nl <= 6) return "line-arrangement";
  if (nq == 1 && nl + 1 == n && nl <= 3) return "conic-with-lines";
  if (nq == 2 && n == 2) return "two-conics";
  if (nq == 2 && nl == 1 && n == 3) {
    const auto qs = v.of_degree(2);
    const int L = v.of_degree(1)[0];
    if (v.tangent_alone(L, qs[0]) && v.tangent_alone(L, qs[1])) {
      auto m = v.meets(qs[0], qs[1]);
      if (m == std::vector<std::int64_t>{1, 1, 1, 1}) return "two-conics-common-tangent-4";
      if (m == std::vector<std::int64_t>{2, 1, 1}) return "two-conics-common-tangent-3";
      if (m == std::vector<std::int64_t>{3, 1}) return "two-conics-common-tangent-2";
    }
  }
  if (nq == 3 && nl == 1 && n == 4) {
    const auto qs = v.of_degree(2);
    const int L = v.of_degree(1)[0];
    bool ok = true;
    for (int Q : qs) ok = ok && v.tangent_alone(L, Q);
    View r = restrict_to(v, {qs.begin(), qs.end()});
    std::set<Pair> tangent_pairs;
    if (ok && r.pts.size() == 3) {
      for (const auto& p : r.pts) {
        if (p.mult.size() != 3) ok = false;
        int twos = 0;
        for (const auto& [k, l] : p.local) {
          if (l == 2) {
            ++twos;
            tangent_pairs.insert(k);
          } else if (l != 1) {
            ok = false;
          }
        }
        if (twos != 1) ok = false;
      }
      if (ok && tangent_pairs.size() == 3) return "three-conics-pairwise-tangent";
    }
  }
  if (nq == 4 && nl == 1 && n == 5) {
    const auto qs = v.of_degree(2);
    const int L = v.of_degree(1)[0];
    bool ok = true;
    for (int Q : qs) ok = ok && v.tangent_alone(L, Q);
    View r = restrict_to(v, {qs.begin(), qs.end()});
    if (ok && r.pts.size() == 4) {
      for (int Q4 : qs) {
        std::vector<int> others;
        for (int Q : qs)
          if (Q != Q4) others.push_back(Q);
        int big = 0, triples = 0;
        for (const auto& p : r.pts) {
          if (p.mult.size() == 4) {
            bool good = true;
            for (std::size_t i = 0; i < 3; ++i) {
              good = good && p.loc(others[i], Q4) == 2;
              for (std::size_t j = i + 1; j < 3; ++j) good = good && p.loc(others[i], others[j]) == 3;
            }
            big += good;
          } else if (p.mult.size() == 3 && p.has(Q4) && all_transverse(p)) {
            ++triples;
          }
        }
        if (big == 1 && triples == 3) return "four-conics-osculating";
      }
    }
  }
  if (nc == 1 && nl >= 1 && nl <= 2 && n == nl + 1) {
    const int C = v.of_degree(3)[0];
    bool node = false;
    for (const auto& p : v.pts)
      if (p.mult.count(C) && p.mult.at(C) == 2) node = true;
    for (int F : v.of_degree(1)) {
      if (!node || v.meets(F, C) != std::vector<std::int64_t>{3}) continue;
      const Pt* flex = nullptr;
      for (const auto& p : v.pts)
        if (p.loc(F, C) == 3) flex = &p;
      if (flex->mult.at(C) != 1) continue;
      if (nl == 1) return "cubic-with-flex-line";
      int M = v.of_degree(1)[0] == F ? v.of_degree(1)[1] : v.of_degree(1)[0];
      // Second line through the flex point, tangent to the cubic elsewhere.
      if (flex->has(M) && v.meets(M, C) == std::vector<std::int64_t>{2, 1} && flex->loc(M, C) == 1)
        return "cubic-with-flex-line-and-tangent";
    }
  }
  return std::nullopt;
}

// Can line L be added last to the rest of the view in one of the two ways
// that preserve uniqueness of the isotopy class?
bool removable_line(const View& v, int L) {
  if (v.deg.at(L) != 1) return false;
  int tangencies = 0, singular_hits = 0;
  bool bad = false, tangency_at_special = false;
  for (const auto& p : v.pts) {
    if (!p.has(L)) continue;
    if (p.mult.at(L) != 1) return false;
    int others = 0;
    bool other_singular = false;
    bool here_tangent = false;
    for (const auto& [u, m] : p.mult) {
      if (u == L) continue;
      ++others;
      if (m >= 2) other_singular = true;
      const std::int64_t l = p.loc(L, u);
      if (l == m) continue;
      if (m == 1 && l == 2) {
        ++tangencies;
        here_tangent = true;
      } else {
        bad = true;
      }
    }
    const bool special = others >= 2 || other_singular;
    if (special) {
      ++singular_hits;
      if (here_tangent) tangency_at_special = true;
    }
  }
  if (bad) return false;
  if (tangencies == 0) return singular_hits <= 2;
  if (tangencies == 1) return singular_hits == 0 || (singular_hits == 1 && tangency_at_special);
  return false;
}

std::optional<std::string> reduce_to_base(const View& v, std::map<std::set<int>, bool>& memo,
                                          std::string* base_name) {
  std::set<int> key;
  for (const auto& [u, d] : v.deg) key.insert(u);
  if (auto it = memo.find(key); it != memo.end() && !it->second) return std::nullopt;
  if (auto b = unique_base(v)) {
    if (base_name) *base_name = *b;
    return b;
  }
  for (int L : v.of_degree(1)) {
    if (!removable_line(v, L)) continue;
    std::set<int> rest = key;
    rest.erase(L);
    if (auto r = reduce_to_base(restrict_to(v, rest), memo, base_name)) return r;
  }
  memo[key] = false;
  return std::nullopt;
}

}  // namespace

CatalogEntry catalog_lookup(const ConfigFingerprint& f) {
  const View v = view_of(f);
  const auto obstructed = [](std::string name, std::string why) {
    return CatalogEntry{std::move(name), CatalogStatus::Obstructed, "contains " + why,
                        why + " has no symplectic realization in the plane"};
  };
  if (has_fano(v)) return obstructed("fano", "seven lines with seven triple points (Fano plane)");
  if (has_concurrent_tangents(v)) return obstructed("conic-concurrent-tangents", "a conic with three concurrent tangent lines");
  if (has_pencil_with_tangent(v))
    return obstructed("conic-pencil-tangent", "three conics through four common points with a common tangent line");
  if (has_two_conics_tangent_line(v, {4}))
    return obstructed("conics-order4-tangent", "two conics with an order 4 tangency and a common tangent line");
  if (has_two_conics_tangent_line(v, {2, 2}))
    return obstructed("conics-double-tangent", "two conics with two simple tangencies and a common tangent line");

  if (auto b = unique_base(v))
    return CatalogEntry{*b, CatalogStatus::UniqueIsotopy, "matches " + *b, *b + " is unique up to symplectic isotopy"};
  std::map<std::set<int>, bool> memo;
  std::string base;
  if (reduce_to_base(v, memo, &base))
    return CatalogEntry{"line-addition", CatalogStatus::UniqueIsotopy, "reduces to " + base + " by removing lines",
                        "adding a line with one simple tangency, or transverse through at most two singular points, "
                        "preserves uniqueness up to symplectic isotopy"};
  return CatalogEntry{"unknown", CatalogStatus::Unknown, "no catalog pattern matches", ""};
}

}  // namespace cuspatlas
