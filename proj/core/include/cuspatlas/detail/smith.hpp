#pragma once

#include <vector>

#include "cuspatlas/numtheory.hpp"

namespace cuspatlas::detail {

using IntMatrix = std::vector<std::vector<BigInt>>;

// A U = [H | 0] with U unimodular and H in column echelon form.
struct ColumnEchelon {
  IntMatrix H;  // m x n, same shape as A
  IntMatrix U;  // n x n
  int rank = 0;
};

ColumnEchelon column_echelon(IntMatrix A, std::size_t ncols);

// Basis (as columns) of {x in Z^n : A x = 0}; always saturated.
IntMatrix integer_kernel(const IntMatrix& A, std::size_t ncols);

// Index of the row lattice of A in its saturation; 0 if rows are dependent.
BigInt saturation_index(const IntMatrix& A, std::size_t ncols);

BigInt determinant(IntMatrix M);

}  // namespace cuspatlas::detail
