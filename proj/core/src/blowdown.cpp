#include "cuspatlas/blowdown.hpp"

#include <algorithm>
#include <functional>
#include <set>
#include <sstream>
#include <stdexcept>

namespace cuspatlas {

std::int64_t ConfigFingerprint::degree_of(int curve) const {
  for (const auto& c : components)
    if (c.curve == curve) return c.degree;
  return 0;
}

bool ConfigFingerprint::bezout_closed() const {
  for (std::size_t i = 0; i < components.size(); ++i)
    for (std::size_t j = i + 1; j < components.size(); ++j) {
      const auto key = std::pair{components[i].curve, components[j].curve};
      std::int64_t tot = 0;
      for (const auto& cl : clusters) {
        auto it = cl.local.find(key);
        if (it != cl.local.end()) tot += it->second;
      }
      if (tot != components[i].degree * components[j].degree) return false;
    }
  return true;
}

std::string ConfigFingerprint::summary() const {
  std::vector<std::int64_t> degs;
  for (const auto& c : components) degs.push_back(c.degree);
  std::sort(degs.begin(), degs.end());
  std::ostringstream os;
  os << "deg[";
  for (std::size_t i = 0; i < degs.size(); ++i) os << (i ? "," : "") << degs[i];
  os << "]";
  std::vector<std::string> pts;
  for (const auto& cl : clusters) {
    // Curves as degree^mult, then the nontrivial local intersections.
    std::vector<std::string> cs;
    for (const auto& [u, m] : cl.root_mult)
      cs.push_back(std::to_string(degree_of(u)) + (m > 1 ? "^" + std::to_string(m) : ""));
    std::sort(cs.begin(), cs.end());
    std::vector<std::int64_t> loc;
    for (const auto& [k, v] : cl.local) loc.push_back(v);
    std::sort(loc.rbegin(), loc.rend());
    std::string s = "{";
    for (std::size_t i = 0; i < cs.size(); ++i) s += (i ? "," : "") + cs[i];
    if (std::any_of(loc.begin(), loc.end(), [](std::int64_t v) { return v > 1; })) {
      s += "|";
      for (std::size_t i = 0; i < loc.size(); ++i) s += (i ? "," : "") + std::to_string(loc[i]);
    }
    pts.push_back(s + "}");
  }
  std::sort(pts.begin(), pts.end());
  for (const auto& p : pts) os << " " << p;
  return os.str();
}

namespace {

struct Node {
  std::optional<int> parent;
  std::map<int, std::int64_t> mult;
};

std::vector<std::vector<int>> maximal_cliques(const std::vector<std::set<int>>& adj) {
  std::vector<std::vector<int>> out;
  std::function<void(std::set<int>, std::set<int>, std::set<int>)> bk = [&](std::set<int> R, std::set<int> P,
                                                                            std::set<int> X) {
    if (P.empty() && X.empty()) {
      if (R.size() >= 3) out.emplace_back(R.begin(), R.end());
      return;
    }
    const std::set<int> cand = P;
    for (int v : cand) {
      std::set<int> R2 = R, P2, X2;
      R2.insert(v);
      for (int w : P)
        if (adj[std::size_t(v)].count(w)) P2.insert(w);
      for (int w : X)
        if (adj[std::size_t(v)].count(w)) X2.insert(w);
      bk(R2, P2, X2);
      P.erase(v);
      X.insert(v);
    }
  };
  std::set<int> all;
  for (std::size_t i = 0; i < adj.size(); ++i) all.insert(int(i));
  bk({}, all, {});
  std::sort(out.begin(), out.end());
  return out;
}

}  // namespace

ConfigFingerprint blow_down_trace(const PlumbingGraph& g, const Embedding& e) {
  const int n = int(g.size());
  if (e.classes.size() != g.size()) throw DomainError("blow_down_trace: embedding does not match graph");
  std::vector<HClass> cls = e.classes;
  std::vector<std::set<int>> adj(static_cast<std::size_t>(n));
  for (const auto& ed : g.edges) {
    adj[std::size_t(ed.u)].insert(ed.v);
    adj[std::size_t(ed.v)].insert(ed.u);
  }
  std::vector<Node> nodes;
  std::set<std::pair<int, int>> used;

  // Points where three or more curves meet: a clique whose pairwise numbers
  // fit a chain of infinitely near points, curve u staying on the first
  // depth(u) of them.
  for (const auto& K : maximal_cliques(adj)) {
    bool fresh = true;
    for (std::size_t i = 0; i < K.size() && fresh; ++i)
      for (std::size_t j = i + 1; j < K.size(); ++j)
        if (used.count(std::pair{K[i], K[j]})) fresh = false;
    if (!fresh) continue;
    std::map<int, std::int64_t> depth;
    for (int u : K) {
      std::int64_t d = 0;
      for (int v : K)
        if (v != u) d = std::max(d, g.intersection(u, v));
      depth[u] = d;
    }
    bool ok = true;
    for (std::size_t i = 0; i < K.size(); ++i)
      for (std::size_t j = i + 1; j < K.size(); ++j)
        if (std::min(depth[K[i]], depth[K[j]]) != g.intersection(K[i], K[j])) ok = false;
    if (!ok) continue;
    std::int64_t D = 0;
    for (const auto& [u, d] : depth) D = std::max(D, d);
    std::optional<int> par;
    for (std::int64_t t = 0; t < D; ++t) {
      Node nd{par, {}};
      for (int u : K)
        if (depth[u] > t) nd.mult[u] = 1;
      nodes.push_back(nd);
      par = int(nodes.size()) - 1;
    }
    for (std::size_t i = 0; i < K.size(); ++i)
      for (std::size_t j = i + 1; j < K.size(); ++j) used.insert(std::pair{K[i], K[j]});
  }
  for (const auto& ed : g.edges) {
    if (used.count(std::pair{ed.u, ed.v})) continue;
    std::optional<int> par;
    for (std::int64_t t = 0; t < ed.mult; ++t) {
      nodes.push_back(Node{par, {{ed.u, 1}, {ed.v, 1}}});
      par = int(nodes.size()) - 1;
    }
  }

  std::set<int> active;
  for (int v = 0; v < n; ++v) active.insert(v);
  int steps = 0;
  auto any_left = [&] {
    for (int v : active)
      if (!cls[std::size_t(v)].coeffs.empty()) return true;
    return false;
  };
  while (any_left()) {
    ++steps;
    std::optional<int> S;
    for (int v : active) {
      const auto& c = cls[std::size_t(v)];
      if (c.a0 == 0 && c.coeffs.size() == 1 && c.coeffs.begin()->second == 1) {
        S = v;
        break;
      }
    }
    int k = -1;
    const int q = int(nodes.size());
    nodes.push_back(Node{});
    if (S) {
      // A curve in class e_k contracts to a point; the points on it become
      // infinitely near to that point.
      k = cls[std::size_t(*S)].coeffs.begin()->first;
      for (int i = 0; i < q; ++i)
        if (!nodes[std::size_t(i)].parent && nodes[std::size_t(i)].mult.count(*S)) nodes[std::size_t(i)].parent = q;
      for (auto& nd : nodes) nd.mult.erase(*S);
      active.erase(*S);
    } else {
      std::set<int> ks;
      for (int v : active)
        for (const auto& [i, c] : cls[std::size_t(v)].coeffs) ks.insert(i);
      for (int cand : ks) {
        bool ok = true;
        for (int v : active)
          if (cls[std::size_t(v)].coeff(cand) > 0) ok = false;
        if (ok) {
          k = cand;
          break;
        }
      }
      if (k < 0) throw std::logic_error("blow_down_trace: no removable exceptional index");
    }
    for (int v : active) {
      std::int64_t c = cls[std::size_t(v)].coeff(k);
      if (c < 0) nodes[std::size_t(q)].mult[v] = -c;
    }
    for (auto& c : cls) c.coeffs.erase(k);
  }

  for (int v : active)
    if (cls[std::size_t(v)].a0 <= 0) throw std::logic_error("blow_down_trace: curve left with degree <= 0");

  // Drop leaves that carry no information: at most one surviving curve, smooth.
  std::vector<char> alive(nodes.size(), 1);
  auto children = [&](int i) {
    std::vector<int> ch;
    for (std::size_t j = 0; j < nodes.size(); ++j)
      if (alive[j] && nodes[j].parent == i) ch.push_back(int(j));
    return ch;
  };
  for (bool changed = true; changed;) {
    changed = false;
    for (std::size_t i = 0; i < nodes.size(); ++i) {
      if (!alive[i] || !children(int(i)).empty()) continue;
      int cnt = 0;
      bool singular = false;
      for (const auto& [u, m] : nodes[i].mult)
        if (active.count(u)) {
          ++cnt;
          if (m >= 2) singular = true;
        }
      if (cnt <= 1 && !singular) {
        alive[i] = 0;
        changed = true;
      }
    }
  }

  ConfigFingerprint f;
  f.steps = steps;
  for (int v : active) f.components.push_back(Component{v, cls[std::size_t(v)].a0, g.vertices[std::size_t(v)].label});
  std::vector<int> newid(nodes.size(), -1);
  for (std::size_t i = 0; i < nodes.size(); ++i)
    if (alive[i]) {
      newid[i] = int(f.nodes.size());
      PointNode pn;
      pn.id = newid[i];
      for (const auto& [u, m] : nodes[i].mult)
        if (active.count(u)) pn.mult[u] = m;
      f.nodes.push_back(pn);
    }
  for (std::size_t i = 0; i < nodes.size(); ++i)
    if (alive[i] && nodes[i].parent && alive[std::size_t(*nodes[i].parent)])
      f.nodes[std::size_t(newid[i])].parent = newid[std::size_t(*nodes[i].parent)];

  std::function<void(int, std::vector<int>&)> subtree = [&](int i, std::vector<int>& acc) {
    acc.push_back(i);
    for (const auto& pn : f.nodes)
      if (pn.parent == i) subtree(pn.id, acc);
  };
  for (const auto& pn : f.nodes) {
    if (pn.parent) continue;
    std::vector<int> sub;
    subtree(pn.id, sub);
    std::set<int> curves;
    for (int i : sub)
      for (const auto& [u, m] : f.nodes[std::size_t(i)].mult) curves.insert(u);
    Cluster cl;
    cl.root = pn.id;
    for (int u : curves) cl.root_mult[u] = pn.mult.count(u) ? pn.mult.at(u) : 0;
    for (auto a = curves.begin(); a != curves.end(); ++a)
      for (auto b = std::next(a); b != curves.end(); ++b) {
        std::int64_t s = 0;
        for (int i : sub) {
          const auto& m = f.nodes[std::size_t(i)].mult;
          auto ia = m.find(*a), ib = m.find(*b);
          if (ia != m.end() && ib != m.end()) s += ia->second * ib->second;
        }
        if (s > 0) cl.local[{*a, *b}] = s;
      }
    f.clusters.push_back(std::move(cl));
  }
  if (!f.bezout_closed()) throw std::logic_error("blow_down_trace: Bezout closure fails");
  return f;
}

}  // namespace cuspatlas
