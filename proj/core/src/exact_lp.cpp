#include "exact.hpp"

#include <algorithm>

namespace relaxfeas::exact {

QVec QMat::row(std::size_t i) const {
  return QVec(data_.begin() + static_cast<std::ptrdiff_t>(i * cols_),
              data_.begin() + static_cast<std::ptrdiff_t>((i + 1) * cols_));
}

void QMat::append_row(const QVec& r) {
  if (rows_ == 0 && cols_ == 0) cols_ = r.size();
  data_.insert(data_.end(), r.begin(), r.end());
  ++rows_;
}

QVec to_exact(const Vector& v) {
  QVec out(static_cast<std::size_t>(v.size()));
  for (Index i = 0; i < v.size(); ++i) out[static_cast<std::size_t>(i)] = Q(v(i));
  return out;
}

Vector to_double(const QVec& v) {
  Vector out(static_cast<Index>(v.size()));
  for (std::size_t i = 0; i < v.size(); ++i) out(static_cast<Index>(i)) = v[i].convert_to<double>();
  return out;
}

namespace {

QMat to_exact(const Matrix& M) {
  QMat out(static_cast<std::size_t>(M.rows()), static_cast<std::size_t>(M.cols()));
  for (Index i = 0; i < M.rows(); ++i) {
    for (Index j = 0; j < M.cols(); ++j) {
      out(static_cast<std::size_t>(i), static_cast<std::size_t>(j)) = Q(M(i, j));
    }
  }
  return out;
}

}  // namespace

QSystem to_exact(const LinearSystem& sys) {
  QSystem q;
  q.n = static_cast<std::size_t>(sys.n());
  q.A = to_exact(sys.A());
  q.b = to_exact(sys.b());
  q.C = to_exact(sys.C());
  q.d = to_exact(sys.d());
  return q;
}

Q row_dot(const QMat& M, std::size_t i, const QVec& x) {
  Q s = 0;
  for (std::size_t j = 0; j < M.cols(); ++j) {
    if (!zero(M(i, j))) s += M(i, j) * x[j];
  }
  return s;
}

bool satisfies(const QSystem& sys, const QVec& x) {
  for (std::size_t i = 0; i < sys.A.rows(); ++i) {
    if (row_dot(sys.A, i, x) != sys.b[i]) return false;
  }
  for (std::size_t k = 0; k < sys.C.rows(); ++k) {
    if (row_dot(sys.C, k, x) > sys.d[k]) return false;
  }
  return true;
}

std::vector<std::size_t> independent_rows(const QMat& M) {
  // Row-echelon basis of the rows accepted so far; a new row is independent
  // iff it does not reduce to zero against it.
  std::vector<QVec> basis;
  std::vector<std::size_t> pivots;
  std::vector<std::size_t> keep;
  for (std::size_t i = 0; i < M.rows(); ++i) {
    QVec r = M.row(i);
    for (std::size_t k = 0; k < basis.size(); ++k) {
      const Q f = r[pivots[k]];
      if (zero(f)) continue;
      for (std::size_t j = 0; j < r.size(); ++j) r[j] -= f * basis[k][j];
    }
    auto it = std::find_if(r.begin(), r.end(), [](const Q& v) { return !zero(v); });
    if (it == r.end()) continue;
    const std::size_t p = static_cast<std::size_t>(it - r.begin());
    const Q lead = r[p];
    for (auto& v : r) v /= lead;
    // Keep the basis reduced in column p.
    for (auto& row : basis) {
      const Q f = row[p];
      if (zero(f)) continue;
      for (std::size_t j = 0; j < row.size(); ++j) row[j] -= f * r[j];
    }
    basis.push_back(std::move(r));
    pivots.push_back(p);
    keep.push_back(i);
  }
  return keep;
}

std::optional<QVec> solve_square(QMat M, QVec rhs) {
  const std::size_t n = M.rows();
  for (std::size_t c = 0; c < n; ++c) {
    std::size_t p = c;
    while (p < n && zero(M(p, c))) ++p;
    if (p == n) return std::nullopt;
    if (p != c) {
      for (std::size_t j = 0; j < n; ++j) std::swap(M(p, j), M(c, j));
      std::swap(rhs[p], rhs[c]);
    }
    for (std::size_t i = c + 1; i < n; ++i) {
      if (zero(M(i, c))) continue;
      const Q f = M(i, c) / M(c, c);
      for (std::size_t j = c; j < n; ++j) M(i, j) -= f * M(c, j);
      rhs[i] -= f * rhs[c];
    }
  }
  QVec x(n);
  for (std::size_t i = n; i-- > 0;) {
    Q s = rhs[i];
    for (std::size_t j = i + 1; j < n; ++j) s -= M(i, j) * x[j];
    x[i] = s / M(i, i);
  }
  return x;
}

namespace {

/// Dense simplex tableau for  min c.y  s.t.  M y = q, y >= 0  with q >= 0.
/// Row R holds the reduced costs and minus the objective value.
class Tableau {
 public:
  Tableau(std::size_t rows, std::size_t cols)
      : R_(rows), W_(cols + 1), t_((rows + 1) * (cols + 1)), basis_(rows) {}

  Q& at(std::size_t i, std::size_t j) { return t_[i * W_ + j]; }
  Q& rhs(std::size_t i) { return t_[i * W_ + W_ - 1]; }
  std::size_t cols() const { return W_ - 1; }
  std::size_t rows() const { return R_; }
  std::vector<std::size_t>& basis() { return basis_; }

  void pivot(std::size_t r, std::size_t c) {
    const Q p = at(r, c);
    for (std::size_t j = 0; j < W_; ++j) {
      if (!zero(at(r, j))) at(r, j) /= p;
    }
    for (std::size_t i = 0; i <= R_; ++i) {
      if (i == r) continue;
      const Q f = at(i, c);
      if (zero(f)) continue;
      for (std::size_t j = 0; j < W_; ++j) {
        if (!zero(at(r, j))) at(i, j) -= f * at(r, j);
      }
    }
    basis_[r] = c;
  }

  /// Sets the cost row from scratch for the current basis.
  void set_costs(const QVec& cost) {
    for (std::size_t j = 0; j < W_; ++j) at(R_, j) = j < cost.size() ? cost[j] : Q(0);
    for (std::size_t i = 0; i < R_; ++i) {
      const Q cb = basis_[i] < cost.size() ? cost[basis_[i]] : Q(0);
      if (zero(cb)) continue;
      for (std::size_t j = 0; j < W_; ++j) at(R_, j) -= cb * at(i, j);
    }
  }

  /// Bland's rule over columns below `limit`. Returns false when unbounded.
  bool run(std::size_t limit) {
    while (true) {
      std::size_t enter = limit;
      for (std::size_t j = 0; j < limit; ++j) {
        if (at(R_, j) < 0) {
          enter = j;
          break;
        }
      }
      if (enter == limit) return true;
      std::size_t leave = R_;
      Q best;
      for (std::size_t i = 0; i < R_; ++i) {
        if (at(i, enter) <= 0) continue;
        const Q ratio = rhs(i) / at(i, enter);
        if (leave == R_ || ratio < best || (ratio == best && basis_[i] < basis_[leave])) {
          leave = i;
          best = ratio;
        }
      }
      if (leave == R_) return false;
      pivot(leave, enter);
    }
  }

  void drop_row(std::size_t r) {
    t_.erase(t_.begin() + static_cast<std::ptrdiff_t>(r * W_),
             t_.begin() + static_cast<std::ptrdiff_t>((r + 1) * W_));
    basis_.erase(basis_.begin() + static_cast<std::ptrdiff_t>(r));
    --R_;
  }

 private:
  std::size_t R_;
  std::size_t W_;
  std::vector<Q> t_;
  std::vector<std::size_t> basis_;
};

}  // namespace

LPResult minimize(const QSystem& sys, const QVec& objective) {
  // Variables y = (x+, x-, s, artificials); x = x+ - x-.
  const std::size_t n = sys.n, m = sys.A.rows(), l = sys.C.rows();
  const std::size_t rows = m + l;
  const std::size_t structural = 2 * n + l;
  Tableau T(rows, structural + rows);
  for (std::size_t i = 0; i < rows; ++i) {
    const bool eq = i < m;
    const QMat& M = eq ? sys.A : sys.C;
    const std::size_t r = eq ? i : i - m;
    const Q q = eq ? sys.b[r] : sys.d[r];
    const int sign = q < 0 ? -1 : 1;
    for (std::size_t j = 0; j < n; ++j) {
      T.at(i, j) = sign * M(r, j);
      T.at(i, n + j) = -sign * M(r, j);
    }
    if (!eq) T.at(i, 2 * n + r) = sign;
    T.at(i, structural + i) = 1;
    T.rhs(i) = sign * q;
    T.basis()[i] = structural + i;
  }

  QVec phase1(structural + rows, Q(0));
  for (std::size_t i = 0; i < rows; ++i) phase1[structural + i] = 1;
  T.set_costs(phase1);
  T.run(structural + rows);

  LPResult result;
  if (T.rhs(T.rows()) != 0) return result;  // infeasible

  // Pivot zero-level artificials out; rows where that is impossible are
  // redundant and dropped.
  for (std::size_t i = 0; i < T.rows();) {
    if (T.basis()[i] < structural) {
      ++i;
      continue;
    }
    std::size_t j = 0;
    while (j < structural && zero(T.at(i, j))) ++j;
    if (j < structural) {
      T.pivot(i, j);
      ++i;
    } else {
      T.drop_row(i);
    }
  }

  QVec cost(structural, Q(0));
  for (std::size_t j = 0; j < n && j < objective.size(); ++j) {
    cost[j] = objective[j];
    cost[n + j] = -objective[j];
  }
  T.set_costs(cost);
  const bool bounded = T.run(structural);

  result.status = bounded ? LPStatus::Optimal : LPStatus::Unbounded;
  QVec y(structural, Q(0));
  for (std::size_t i = 0; i < T.rows(); ++i) y[T.basis()[i]] = T.rhs(i);
  result.x.assign(n, Q(0));
  for (std::size_t j = 0; j < n; ++j) result.x[j] = y[j] - y[n + j];
  result.value = 0;
  for (std::size_t j = 0; j < n && j < objective.size(); ++j) result.value += objective[j] * result.x[j];
  return result;
}

}  // namespace relaxfeas::exact
