#pragma once

#include <Eigen/LU>
#include <vector>

#include "relaxfeas/generators.hpp"
#include "relaxfeas/model.hpp"

namespace relaxfeas::testing {

inline Matrix mat(std::initializer_list<std::initializer_list<double>> rows) {
  const Index r = static_cast<Index>(rows.size());
  const Index c = r ? static_cast<Index>(rows.begin()->size()) : 0;
  Matrix M(r, c);
  Index i = 0;
  for (const auto& row : rows) {
    Index j = 0;
    for (double v : row) M(i, j++) = v;
    ++i;
  }
  return M;
}

inline Vector vec(std::initializer_list<double> v) {
  Vector out(static_cast<Index>(v.size()));
  Index i = 0;
  for (double x : v) out(i++) = x;
  return out;
}

inline Matrix none(Index n) { return Matrix(0, n); }
inline Vector none() { return Vector(0); }

/// Integer matrix with entries in [lo, hi] and no zero rows.
inline Matrix random_int_matrix(Rng& rng, Index rows, Index cols, int lo, int hi) {
  Matrix M(rows, cols);
  for (Index i = 0; i < rows; ++i) {
    do {
      for (Index j = 0; j < cols; ++j) M(i, j) = static_cast<double>(rng.uniform_int(lo, hi));
    } while (M.row(i).norm() == 0.0);
  }
  return M;
}

inline Vector random_int_vector(Rng& rng, Index n, int lo, int hi) {
  Vector v(n);
  for (Index i = 0; i < n; ++i) v(i) = static_cast<double>(rng.uniform_int(lo, hi));
  return v;
}

/// Small random system with full-row-rank equalities (possibly none).
inline LinearSystem random_system(Rng& rng, Index n, Index max_eq, Index max_ineq, int lo,
                                  int hi) {
  while (true) {
    const Index m = rng.uniform_int(0, max_eq);
    const Index l = rng.uniform_int(1, max_ineq);
    Matrix A = random_int_matrix(rng, m, n, lo, hi);
    if (m && Eigen::FullPivLU<Matrix>(A).rank() < m) continue;
    return LinearSystem(std::move(A), random_int_vector(rng, m, lo, hi),
                        random_int_matrix(rng, l, n, lo, hi), random_int_vector(rng, l, lo, hi));
  }
}

}  // namespace relaxfeas::testing
