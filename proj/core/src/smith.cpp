#include "cuspatlas/detail/smith.hpp"

#include <utility>

namespace cuspatlas::detail {

namespace {

void col_swap(IntMatrix& M, std::size_t a, std::size_t b) {
  for (auto& row : M) std::swap(row[a], row[b]);
}

// col[a] -= f * col[b]
void col_sub(IntMatrix& M, std::size_t a, std::size_t b, const BigInt& f) {
  for (auto& row : M) row[a] -= f * row[b];
}

}  // namespace

ColumnEchelon column_echelon(IntMatrix A, std::size_t n) {
  const std::size_t m = A.size();
  IntMatrix U(n, std::vector<BigInt>(n));
  for (std::size_t i = 0; i < n; ++i) U[i][i] = 1;
  std::size_t piv = 0;
  for (std::size_t r = 0; r < m && piv < n; ++r) {
    // Euclid across columns piv..n-1 until only column piv is nonzero in row r.
    for (;;) {
      std::size_t best = n;
      for (std::size_t c = piv; c < n; ++c)
        if (A[r][c] != 0 && (best == n || abs(A[r][c]) < abs(A[r][best]))) best = c;
      if (best == n) break;
      if (best != piv) {
        col_swap(A, best, piv);
        col_swap(U, best, piv);
      }
      bool done = true;
      for (std::size_t c = piv + 1; c < n; ++c) {
        if (A[r][c] == 0) continue;
        BigInt f = A[r][c] / A[r][piv];
        col_sub(A, c, piv, f);
        col_sub(U, c, piv, f);
        if (A[r][c] != 0) done = false;
      }
      if (done) break;
    }
    if (A[r][piv] != 0) ++piv;
  }
  return ColumnEchelon{std::move(A), std::move(U), int(piv)};
}

IntMatrix integer_kernel(const IntMatrix& A, std::size_t n) {
  ColumnEchelon ce = column_echelon(A, n);
  IntMatrix K(n);
  for (std::size_t i = 0; i < n; ++i)
    for (std::size_t c = std::size_t(ce.rank); c < n; ++c) K[i].push_back(ce.U[i][c]);
  return K;
}

BigInt saturation_index(const IntMatrix& A, std::size_t n) {
  ColumnEchelon ce = column_echelon(A, n);
  if (std::size_t(ce.rank) < A.size()) return 0;
  // Row lattice becomes the row space of the square lower triangular part.
  IntMatrix H(A.size());
  for (std::size_t i = 0; i < A.size(); ++i)
    for (std::size_t j = 0; j < A.size(); ++j) H[i].push_back(ce.H[i][j]);
  return abs(determinant(H));
}

BigInt determinant(IntMatrix M) {
  // Bareiss fraction-free elimination.
  const std::size_t n = M.size();
  if (n == 0) return 1;
  BigInt sign = 1, prev = 1;
  for (std::size_t k = 0; k + 1 < n; ++k) {
    if (M[k][k] == 0) {
      std::size_t s = k + 1;
      while (s < n && M[s][k] == 0) ++s;
      if (s == n) return 0;
      std::swap(M[s], M[k]);
      sign = -sign;
    }
    for (std::size_t i = k + 1; i < n; ++i)
      for (std::size_t j = k + 1; j < n; ++j) M[i][j] = (M[i][j] * M[k][k] - M[i][k] * M[k][j]) / prev;
    prev = M[k][k];
  }
  return sign * M[n - 1][n - 1];
}

}  // namespace cuspatlas::detail
