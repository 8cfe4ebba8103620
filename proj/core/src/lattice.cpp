#include "cuspatlas/lattice.hpp"

#include <algorithm>
#include <atomic>
#include <cmath>
#include <deque>
#include <functional>
#include <set>
#include <sstream>
#include <thread>

#include "cuspatlas/detail/simplex.hpp"
#include "cuspatlas/detail/smith.hpp"

namespace cuspatlas {

HClass HClass::K(int n) {
  HClass k{-3, {}};
  for (int i = 0; i < n; ++i) k.coeffs[i] = 1;
  return k;
}

std::int64_t HClass::coeff(int i) const {
  auto it = coeffs.find(i);
  return it == coeffs.end() ? 0 : it->second;
}

void HClass::set(int i, std::int64_t v) {
  if (v == 0)
    coeffs.erase(i);
  else
    coeffs[i] = v;
}

std::string HClass::str() const {
  std::ostringstream os;
  bool first = true;
  auto term = [&](std::int64_t c, const std::string& name) {
    if (c == 0) return;
    if (c < 0)
      os << (first ? "-" : " - ");
    else if (!first)
      os << " + ";
    std::int64_t a = c < 0 ? -c : c;
    if (a != 1) os << a;
    os << name;
    first = false;
  };
  term(a0, "h");
  for (const auto& [i, c] : coeffs) term(c, "e" + std::to_string(i + 1));
  if (first) os << "0";
  return os.str();
}

HClass operator+(const HClass& a, const HClass& b) {
  HClass r = a;
  r.a0 += b.a0;
  for (const auto& [i, c] : b.coeffs) r.set(i, r.coeff(i) + c);
  return r;
}

HClass operator-(const HClass& a, const HClass& b) { return a + (-1) * b; }

HClass operator*(std::int64_t k, const HClass& a) {
  HClass r{k * a.a0, {}};
  if (k != 0)
    for (const auto& [i, c] : a.coeffs) r.coeffs[i] = k * c;
  return r;
}

std::int64_t pairing(const HClass& x, const HClass& y) {
  std::int64_t s = x.a0 * y.a0;
  for (const auto& [i, c] : x.coeffs) s -= c * y.coeff(i);
  return s;
}

std::vector<Profile> adjunction_profiles(std::int64_t a0, std::int64_t s) {
  std::vector<Profile> out;
  if (a0 < 0) return out;
  if (a0 == 0) {
    const std::int64_t t = -1 - s;
    if (t < 0) return out;
    Profile p{{1, 1}};
    if (t > 0) p[-1] = int(t);
    out.push_back(p);
    return out;
  }
  // Negative coefficients with sum of squares S2 and sum S1.
  const std::int64_t S2 = a0 * a0 - s, S1 = 2 - 3 * a0 + s;
  if (S2 < 0 || S1 > 0) return out;
  Profile cur;
  std::function<void(std::int64_t, std::int64_t, std::int64_t)> rec = [&](std::int64_t maxabs, std::int64_t s2,
                                                                          std::int64_t s1) {
    if (s2 == 0) {
      if (s1 == 0) out.push_back(cur);
      return;
    }
    // Each remaining entry has |a| <= a^2, so the sum can only catch up if -s1 <= s2.
    if (-s1 > s2 || s1 >= 0) return;
    std::int64_t top = std::min<std::int64_t>(maxabs, std::int64_t(std::sqrt(double(s2))) + 1);
    for (std::int64_t a = top; a >= 1; --a) {
      if (a * a > s2) continue;
      ++cur[-a];
      rec(a, s2 - a * a, s1 + a);
      if (--cur[-a] == 0) cur.erase(-a);
    }
  };
  rec(S2, S2, S1);
  // Emit in a fixed order: fewest large entries first.
  std::sort(out.begin(), out.end());
  return out;
}

namespace {

// Rows are (a0, c_0..c_{N-1}); all N indices count as used.
bool area_feasible_dense(const std::vector<std::vector<std::int64_t>>& rows, std::size_t N) {
  std::vector<std::vector<Rational>> A;
  std::vector<Rational> b;
  A.reserve(rows.size());
  for (const auto& r : rows) {
    std::vector<Rational> row(N + 1);
    std::int64_t sum = 0;
    for (std::size_t j = 0; j < r.size(); ++j) {
      row[j] = r[j];
      sum += r[j];
    }
    A.push_back(std::move(row));
    b.emplace_back(1 - sum);
  }
  return detail::lp_feasible(A, b);
}

}  // namespace

bool area_feasible(const std::vector<HClass>& classes) {
  std::set<int> used;
  for (const auto& c : classes)
    for (const auto& [i, v] : c.coeffs) used.insert(i);
  std::vector<int> idx(used.begin(), used.end());
  std::vector<std::vector<std::int64_t>> rows;
  for (const auto& c : classes) {
    std::vector<std::int64_t> r{c.a0};
    for (int i : idx) r.push_back(c.coeff(i));
    rows.push_back(std::move(r));
  }
  return area_feasible_dense(rows, idx.size());
}

namespace {

using Col = std::vector<std::int64_t>;

class Search {
 public:
  Search(const PlumbingGraph& g, const EnumOptions& opt) : g_(g), opt_(opt) {
    if (!g.root) throw DomainError("enumerate_embeddings: graph has no root");
    root_ = *g.root;
    if (g.vertices.at(std::size_t(root_)).euler != 1) throw DomainError("enumerate_embeddings: root euler must be +1");
    M_ = g.matrix();
    const std::size_t n = g.size();
    std::vector<char> seen(n, 0);
    std::deque<int> dq{root_};
    seen[std::size_t(root_)] = 1;
    while (!dq.empty()) {
      int x = dq.front();
      dq.pop_front();
      order_.push_back(x);
      for (int y : g.neighbors(x))
        if (!seen[std::size_t(y)]) {
          seen[std::size_t(y)] = 1;
          dq.push_back(y);
        }
    }
    for (std::size_t i = 0; i < n; ++i)
      if (!seen[i]) order_.push_back(int(i));
    for (int v : order_) {
      std::int64_t a0 = v == root_ ? 1 : M_[std::size_t(v)][std::size_t(root_)];
      a0_.push_back(a0);
      profiles_.push_back(v == root_ ? std::vector<Profile>{} : adjunction_profiles(a0, M_[std::size_t(v)][std::size_t(v)]));
    }
  }

  struct State {
    int N = 0;
    std::vector<Col> cls;  // cls[t] has length <= N; missing entries are 0
  };

  std::size_t steps() const { return order_.size(); }

  template <class F>
  void children(const State& st, F&& emit) {
    ++nodes_;
    const std::size_t k = st.cls.size();
    if (k == 0) {
      State c = st;
      c.cls.emplace_back();
      emit(std::move(c));
      return;
    }
    const int v = order_[k];
    // Indices with equal columns over the assigned steps are interchangeable.
    std::map<Col, std::vector<int>> by_col;
    for (int i = 0; i < st.N; ++i) {
      Col c(k);
      for (std::size_t t = 0; t < k; ++t) c[t] = i < int(st.cls[t].size()) ? st.cls[t][std::size_t(i)] : 0;
      by_col[c].push_back(i);
    }
    std::vector<std::vector<int>> groups;
    for (auto& [c, m] : by_col) groups.push_back(std::move(m));

    for (const Profile& prof : profiles_[k]) {
      std::vector<std::int64_t> vals;
      std::vector<int> left;
      for (const auto& [val, cnt] : prof) {
        vals.push_back(val);
        left.push_back(cnt);
      }
      Col coef(std::size_t(st.N), 0);
      std::function<void(std::size_t)> dist;
      std::function<void(std::size_t, std::size_t, std::size_t)> choose;
      dist = [&](std::size_t gi) {
        if (gi == groups.size()) {
          leaf(st, k, v, vals, left, coef, emit);
          return;
        }
        choose(gi, 0, 0);
      };
      // Assign values vals[vi..] to group gi starting at member position pos.
      choose = [&](std::size_t gi, std::size_t vi, std::size_t pos) {
        if (vi == vals.size()) {
          dist(gi + 1);
          return;
        }
        const auto& mem = groups[gi];
        const int room = int(mem.size() - pos);
        for (int c = 0; c <= std::min(left[vi], room); ++c) {
          for (int j = 0; j < c; ++j) coef[std::size_t(mem[pos + std::size_t(j)])] = vals[vi];
          left[vi] -= c;
          choose(gi, vi + 1, pos + std::size_t(c));
          left[vi] += c;
          for (int j = 0; j < c; ++j) coef[std::size_t(mem[pos + std::size_t(j)])] = 0;
        }
      };
      dist(0);
    }
  }

  template <class F>
  void leaf(const State& st, std::size_t k, int v, const std::vector<std::int64_t>& vals, const std::vector<int>& left,
            const Col& coef, F&& emit) {
    Col full = coef;
    for (std::size_t vi = 0; vi < vals.size(); ++vi)
      for (int j = 0; j < left[vi]; ++j) full.push_back(vals[vi]);
    // Fresh indices pair to zero with everything assigned so far.
    for (std::size_t t = 0; t < k; ++t) {
      std::int64_t p = a0_[k] * a0_[t];
      const Col& ct = st.cls[t];
      for (std::size_t i = 0; i < ct.size(); ++i) p -= ct[i] * full[i];
      if (p != M_[std::size_t(v)][std::size_t(order_[t])]) return;
    }
    State c;
    c.N = int(full.size());
    c.cls = st.cls;
    c.cls.push_back(std::move(full));
    if (opt_.use_area) {
      std::vector<Col> rows;
      for (std::size_t t = 0; t <= k; ++t) {
        Col r(std::size_t(c.N) + 1, 0);
        r[0] = a0_[t];
        for (std::size_t i = 0; i < c.cls[t].size(); ++i) r[i + 1] = c.cls[t][i];
        rows.push_back(std::move(r));
      }
      if (!area_feasible_dense(rows, std::size_t(c.N))) return;
    }
    emit(std::move(c));
  }

  void dfs(const State& st, std::vector<State>& out) {
    if (st.cls.size() == steps()) {
      out.push_back(st);
      return;
    }
    children(st, [&](State c) { dfs(c, out); });
  }

  // Relabels indices by (first use in search order, column) and maps steps
  // back to vertex ids.
  Embedding canonical(const State& st) const {
    const std::size_t n = steps();
    std::vector<std::pair<std::pair<std::size_t, Col>, int>> keys;
    for (int i = 0; i < st.N; ++i) {
      Col c(n, 0);
      std::size_t first = n;
      for (std::size_t t = 0; t < n; ++t) {
        c[t] = i < int(st.cls[t].size()) ? st.cls[t][std::size_t(i)] : 0;
        if (c[t] != 0 && first == n) first = t;
      }
      keys.push_back({{first, std::move(c)}, i});
    }
    std::sort(keys.begin(), keys.end());
    std::vector<int> relabel(std::size_t(st.N));
    for (std::size_t j = 0; j < keys.size(); ++j) relabel[std::size_t(keys[j].second)] = int(j);
    Embedding e;
    e.n_used = st.N;
    e.classes.resize(n);
    for (std::size_t t = 0; t < n; ++t) {
      HClass h{a0_[t], {}};
      for (std::size_t i = 0; i < st.cls[t].size(); ++i) h.set(relabel[i], st.cls[t][i]);
      e.classes[std::size_t(order_[t])] = std::move(h);
    }
    return e;
  }

  std::atomic<std::uint64_t> nodes_{0};

 private:
  const PlumbingGraph& g_;
  EnumOptions opt_;
  int root_ = 0;
  std::vector<std::vector<std::int64_t>> M_;
  std::vector<int> order_;
  std::vector<std::int64_t> a0_;
  std::vector<std::vector<Profile>> profiles_;
};

// Total order used for the output: fewer indices first, then classes by vertex.
bool embedding_less(const Embedding& a, const Embedding& b) {
  if (a.n_used != b.n_used) return a.n_used < b.n_used;
  auto dense = [](const Embedding& e) {
    std::vector<Col> out;
    for (const auto& c : e.classes) {
      Col r{c.a0};
      for (int i = 0; i < e.n_used; ++i) r.push_back(c.coeff(i));
      out.push_back(std::move(r));
    }
    return out;
  };
  return dense(a) < dense(b);
}

}  // namespace

std::vector<Embedding> enumerate_embeddings(const PlumbingGraph& g, const EnumOptions& opt, EnumStats* stats) {
  Search s(g, opt);
  const unsigned threads = std::max(1u, opt.threads);
  std::vector<Search::State> frontier{Search::State{}};
  std::vector<Search::State> done;
  if (threads > 1) {
    // Expand breadth first until there is enough work to share.
    while (!frontier.empty() && frontier.size() < 8 * threads) {
      std::vector<Search::State> next;
      for (const auto& st : frontier) {
        if (st.cls.size() == s.steps()) {
          done.push_back(st);
          continue;
        }
        s.children(st, [&](Search::State c) { next.push_back(std::move(c)); });
      }
      frontier = std::move(next);
    }
  }
  std::vector<std::vector<Search::State>> results(frontier.size());
  std::atomic<std::size_t> next_job{0};
  auto worker = [&] {
    for (;;) {
      std::size_t j = next_job.fetch_add(1);
      if (j >= frontier.size()) return;
      s.dfs(frontier[j], results[j]);
    }
  };
  if (threads > 1 && frontier.size() > 1) {
    std::vector<std::thread> pool;
    for (unsigned t = 0; t < std::min<std::size_t>(threads, frontier.size()); ++t) pool.emplace_back(worker);
    for (auto& t : pool) t.join();
  } else {
    worker();
  }
  std::vector<Embedding> out;
  for (const auto& st : done) out.push_back(s.canonical(st));
  for (const auto& r : results)
    for (const auto& st : r) out.push_back(s.canonical(st));
  const std::size_t raw = out.size();
  std::sort(out.begin(), out.end(), embedding_less);
  out.erase(std::unique(out.begin(), out.end()), out.end());
  if (stats) {
    stats->nodes = s.nodes_.load();
    stats->raw = raw;
  }
  return out;
}

std::string validate_embedding(const PlumbingGraph& g, const Embedding& e) {
  if (e.classes.size() != g.size()) return "class count differs from vertex count";
  if (!g.root) return "graph has no root";
  if (!(e.classes[std::size_t(*g.root)] == HClass::h())) return "root class is not h";
  for (std::size_t u = 0; u < g.size(); ++u) {
    for (std::size_t v = u; v < g.size(); ++v)
      if (pairing(e.classes[u], e.classes[v]) != g.intersection(int(u), int(v)))
        return "pairing mismatch at (" + std::to_string(u) + "," + std::to_string(v) + ")";
    // Sphere adjunction: K.c + c.c = -2.
    const auto& c = e.classes[u];
    if (pairing(HClass::K(e.n_used), c) + pairing(c, c) != -2) return "adjunction fails at " + std::to_string(u);
    if (c.max_index() >= e.n_used) return "index beyond n_used at " + std::to_string(u);
  }
  if (!area_feasible(e.classes)) return "area infeasible";
  return {};
}

namespace {

GramForm complement_of(const std::vector<HClass>& classes, int N) {
  const std::size_t n = std::size_t(N) + 1;
  detail::IntMatrix A;
  for (const auto& c : classes) {
    std::vector<BigInt> row(n);
    row[0] = c.a0;
    for (int i = 0; i < N; ++i) row[std::size_t(i) + 1] = -c.coeff(i);
    A.push_back(std::move(row));
  }
  if (!A.empty() && detail::column_echelon(A, n).rank < int(A.size()))
    throw DomainError("complement_form: classes are linearly dependent (rank drop)");
  detail::IntMatrix K = A.empty() ? detail::IntMatrix{} : detail::integer_kernel(A, n);
  GramForm f;
  const std::size_t r = A.empty() ? n : (K.empty() ? 0 : K[0].size());
  for (std::size_t c = 0; c < r; ++c) {
    HClass b;
    for (std::size_t i = 0; i < n; ++i) {
      std::int64_t x = A.empty() ? (i == c) : K[i][c].convert_to<std::int64_t>();
      if (i == 0)
        b.a0 = x;
      else
        b.set(int(i) - 1, x);
    }
    f.basis.push_back(std::move(b));
  }
  f.matrix.assign(r, std::vector<BigInt>(r));
  for (std::size_t i = 0; i < r; ++i)
    for (std::size_t j = 0; j < r; ++j) f.matrix[i][j] = pairing(f.basis[i], f.basis[j]);
  f.det = detail::determinant(f.matrix);
  f.even = true;
  for (std::size_t i = 0; i < r; ++i)
    if (f.matrix[i][i] % 2 != 0) f.even = false;
  return f;
}

}  // namespace

GramForm complement_form(const Embedding& e) { return complement_of(e.classes, e.n_used); }

GramForm ambient_form(const Embedding& e, int root) {
  std::vector<HClass> cs;
  for (std::size_t v = 0; v < e.classes.size(); ++v)
    if (int(v) != root) cs.push_back(e.classes[v]);
  return complement_of(cs, e.n_used);
}

BigInt lattice_index(const Embedding& e) {
  const std::size_t n = std::size_t(e.n_used) + 1;
  detail::IntMatrix A;
  for (const auto& c : e.classes) {
    std::vector<BigInt> row(n);
    row[0] = c.a0;
    for (int i = 0; i < e.n_used; ++i) row[std::size_t(i) + 1] = c.coeff(i);
    A.push_back(std::move(row));
  }
  return detail::saturation_index(A, n);
}

std::string AmbientReport::str() const {
  switch (kind) {
    case AmbientKind::Plane: return "plane";
    case AmbientKind::SphereProduct: return "sphere-product";
    case AmbientKind::Blowup: return "blowup(" + std::to_string(k) + ")";
  }
  return "?";
}

AmbientReport ambient(const Embedding& e, int blowups, int root) {
  AmbientReport r;
  r.k = e.n_used - blowups;
  if (r.k < 0) throw DomainError("ambient: embedding uses fewer indices than the cap has blow-ups");
  r.form = ambient_form(e, root);
  if (r.k == 0)
    r.kind = AmbientKind::Plane;
  else if (r.k == 1 && r.form.even)
    r.kind = AmbientKind::SphereProduct;
  else
    r.kind = AmbientKind::Blowup;
  return r;
}

}  // namespace cuspatlas
