#include "cuspatlas/detail/simplex.hpp"

#include <optional>

namespace cuspatlas::detail {

bool lp_feasible(const std::vector<std::vector<Rational>>& A, const std::vector<Rational>& b) {
  const std::size_t m = A.size();
  if (m == 0) return true;
  const std::size_t n = A[0].size();
  // Rows: A x - s = b with surplus s >= 0; an artificial where b_i > 0,
  // otherwise the negated row is feasible with s_i = -b_i.
  std::vector<std::size_t> arts;
  for (std::size_t i = 0; i < m; ++i)
    if (b[i] > 0) arts.push_back(i);
  if (arts.empty()) return true;
  const std::size_t W = n + m + arts.size();
  std::vector<std::vector<Rational>> T(m, std::vector<Rational>(W + 1));
  std::vector<std::size_t> basis(m);
  std::size_t next_art = 0;
  for (std::size_t i = 0; i < m; ++i) {
    auto& row = T[i];
    for (std::size_t j = 0; j < n; ++j) row[j] = A[i][j];
    row[n + i] = -1;
    if (b[i] > 0) {
      row[n + m + next_art] = 1;
      basis[i] = n + m + next_art;
      ++next_art;
      row[W] = b[i];
    } else {
      for (auto& v : row) v = -v;
      row[W] = -b[i];
      basis[i] = n + i;
    }
  }
  // Objective: minimize the sum of artificials; obj holds the reduced row.
  std::vector<Rational> obj(W + 1);
  for (std::size_t i = 0; i < m; ++i)
    if (basis[i] >= n + m)
      for (std::size_t j = 0; j <= W; ++j) obj[j] += T[i][j];
  for (;;) {
    std::optional<std::size_t> enter;
    for (std::size_t j = 0; j < n + m; ++j)
      if (obj[j] > 0) {
        enter = j;
        break;
      }
    if (!enter) break;
    const std::size_t e = *enter;
    std::optional<std::size_t> leave;
    Rational best;
    for (std::size_t i = 0; i < m; ++i) {
      if (T[i][e] <= 0) continue;
      Rational r = T[i][W] / T[i][e];
      if (!leave || r < best || (r == best && basis[i] < basis[*leave])) {
        best = r;
        leave = i;
      }
    }
    if (!leave) break;  // unbounded direction cannot occur in phase one
    const std::size_t l = *leave;
    const Rational piv = T[l][e];
    for (auto& v : T[l]) v /= piv;
    for (std::size_t i = 0; i < m; ++i) {
      if (i == l || T[i][e] == 0) continue;
      const Rational f = T[i][e];
      for (std::size_t j = 0; j <= W; ++j) T[i][j] -= f * T[l][j];
    }
    const Rational f = obj[e];
    for (std::size_t j = 0; j <= W; ++j) obj[j] -= f * T[l][j];
    basis[l] = e;
  }
  return obj[W] == 0;
}

}  // namespace cuspatlas::detail
