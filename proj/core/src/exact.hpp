#pragma once

#include <boost/multiprecision/gmp.hpp>
#include <cstddef>
#include <optional>
#include <vector>

#include "relaxfeas/model.hpp"

namespace relaxfeas::exact {

using Q = boost::multiprecision::mpq_rational;
using QVec = std::vector<Q>;

inline bool zero(const Q& q) { return q.is_zero(); }

class QMat {
 public:
  QMat() = default;
  QMat(std::size_t rows, std::size_t cols) : rows_(rows), cols_(cols), data_(rows * cols) {}

  Q& operator()(std::size_t i, std::size_t j) { return data_[i * cols_ + j]; }
  const Q& operator()(std::size_t i, std::size_t j) const { return data_[i * cols_ + j]; }
  std::size_t rows() const { return rows_; }
  std::size_t cols() const { return cols_; }

  QVec row(std::size_t i) const;
  void append_row(const QVec& r);

 private:
  std::size_t rows_ = 0;
  std::size_t cols_ = 0;
  std::vector<Q> data_;
};

struct QSystem {
  std::size_t n = 0;
  QMat A;
  QVec b;
  QMat C;
  QVec d;
};

QSystem to_exact(const LinearSystem& sys);
QVec to_exact(const Vector& v);
Vector to_double(const QVec& v);

Q row_dot(const QMat& M, std::size_t i, const QVec& x);
bool satisfies(const QSystem& sys, const QVec& x);

/// Greedy maximal independent subset of the rows of M, in increasing order.
std::vector<std::size_t> independent_rows(const QMat& M);

/// Unique solution of the square system M x = rhs, or nullopt if singular.
std::optional<QVec> solve_square(QMat M, QVec rhs);

enum class LPStatus { Optimal, Infeasible, Unbounded };

struct LPResult {
  LPStatus status = LPStatus::Infeasible;
  QVec x;
  Q value;
};

/// Minimizes objective.x over the system with a two-phase simplex method and
/// Bland's rule. With an empty objective the first feasible basis is returned.
LPResult minimize(const QSystem& sys, const QVec& objective);

}  // namespace relaxfeas::exact
