#ifndef QHEUN_LINEAR_SYSTEM_HPP
#define QHEUN_LINEAR_SYSTEM_HPP

#include <cstddef>
#include <string>
#include <utility>
#include <vector>

#include "qheun/errors.hpp"
#include "qheun/rational.hpp"

namespace qheun {

/// Dense row-major matrix over an exact field.
template <ExactField K = Rational>
class Matrix {
 public:
  Matrix() = default;
  Matrix(std::size_t rows, std::size_t cols) : rows_(rows), cols_(cols), data_(rows * cols, K(0)) {}
  Matrix(std::initializer_list<std::initializer_list<K>> rows) {
    rows_ = rows.size();
    cols_ = rows_ ? rows.begin()->size() : 0;
    for (const auto& r : rows) {
      if (r.size() != cols_) throw InvalidParameters("ragged matrix literal");
      data_.insert(data_.end(), r.begin(), r.end());
    }
  }

  [[nodiscard]] std::size_t rows() const { return rows_; }
  [[nodiscard]] std::size_t cols() const { return cols_; }
  K& operator()(std::size_t i, std::size_t j) { return data_[i * cols_ + j]; }
  const K& operator()(std::size_t i, std::size_t j) const { return data_[i * cols_ + j]; }

  [[nodiscard]] std::vector<K> row(std::size_t i) const {
    return {data_.begin() + static_cast<std::ptrdiff_t>(i * cols_),
            data_.begin() + static_cast<std::ptrdiff_t>((i + 1) * cols_)};
  }
  void append_row(const std::vector<K>& r) {
    if (rows_ == 0 && cols_ == 0) cols_ = r.size();
    if (r.size() != cols_) throw InvalidParameters("row length does not match matrix width");
    data_.insert(data_.end(), r.begin(), r.end());
    ++rows_;
  }

  [[nodiscard]] std::vector<K> operator*(const std::vector<K>& v) const {
    if (v.size() != cols_) throw InvalidParameters("matrix-vector size mismatch");
    std::vector<K> out(rows_, K(0));
    for (std::size_t i = 0; i < rows_; ++i)
      for (std::size_t j = 0; j < cols_; ++j)
        if (!(*this)(i, j).is_zero() && !v[j].is_zero()) out[i] = out[i] + (*this)(i, j) * v[j];
    return out;
  }

  [[nodiscard]] bool is_banded(std::size_t lower, std::size_t upper) const {
    for (std::size_t i = 0; i < rows_; ++i)
      for (std::size_t j = 0; j < cols_; ++j)
        if ((j + lower < i || i + upper < j) && !(*this)(i, j).is_zero()) return false;
    return true;
  }

  friend bool operator==(const Matrix&, const Matrix&) = default;

 private:
  std::size_t rows_ = 0;
  std::size_t cols_ = 0;
  std::vector<K> data_;
};

/// A x = b.
template <ExactField K = Rational>
struct LinSystem {
  Matrix<K> matrix;
  std::vector<K> rhs;

  LinSystem() = default;
  LinSystem(Matrix<K> m, std::vector<K> b) : matrix(std::move(m)), rhs(std::move(b)) {
    if (matrix.rows() != rhs.size()) throw InvalidParameters("system rhs length does not match rows");
  }
  explicit LinSystem(std::size_t unknowns) : matrix(0, unknowns) {}

  void add_equation(const std::vector<K>& row, const K& value) {
    matrix.append_row(row);
    rhs.push_back(value);
  }
  [[nodiscard]] std::size_t unknowns() const { return matrix.cols(); }
  [[nodiscard]] std::size_t equations() const { return matrix.rows(); }
};

enum class SolveKind { Unique, Parametric, Inconsistent };

inline const char* to_string(SolveKind k) {
  switch (k) {
    case SolveKind::Unique: return "unique";
    case SolveKind::Parametric: return "parametric";
    case SolveKind::Inconsistent: return "inconsistent";
  }
  return "?";
}

template <ExactField K = Rational>
struct Solution {
  SolveKind kind = SolveKind::Inconsistent;
  /// Particular solution with every free variable set to zero.
  std::vector<K> particular;
  /// One vector per free variable, in increasing column order.
  std::vector<std::vector<K>> null_basis;
  std::vector<std::size_t> free_columns;
  std::size_t rank = 0;

  [[nodiscard]] bool consistent() const { return kind != SolveKind::Inconsistent; }
};

namespace detail {

// Reduced row echelon form of [A | b]; returns pivot columns, or sets
// `inconsistent` when a row reduces to 0 = nonzero.
template <ExactField K>
std::vector<std::size_t> rref(std::vector<std::vector<K>>& rows, std::size_t cols, bool& inconsistent) {
  std::vector<std::size_t> pivots;
  std::size_t r = 0;
  inconsistent = false;
  for (std::size_t c = 0; c < cols && r < rows.size(); ++c) {
    std::size_t p = r;
    while (p < rows.size() && rows[p][c].is_zero()) ++p;
    if (p == rows.size()) continue;
    std::swap(rows[p], rows[r]);
    const K inv = K(1) / rows[r][c];
    for (std::size_t j = c; j <= cols; ++j)
      if (!rows[r][j].is_zero()) rows[r][j] = rows[r][j] * inv;
    for (std::size_t i = 0; i < rows.size(); ++i) {
      if (i == r || rows[i][c].is_zero()) continue;
      const K f = rows[i][c];
      for (std::size_t j = c; j <= cols; ++j)
        if (!rows[r][j].is_zero()) rows[i][j] = rows[i][j] - f * rows[r][j];
    }
    pivots.push_back(c);
    ++r;
  }
  for (std::size_t i = r; i < rows.size(); ++i)
    if (!rows[i][cols].is_zero()) inconsistent = true;
  return pivots;
}

}  // namespace detail

/// Exact Gauss-Jordan elimination.
template <ExactField K>
Solution<K> solve_exact(const LinSystem<K>& sys) {
  const std::size_t n = sys.unknowns();
  std::vector<std::vector<K>> rows;
  rows.reserve(sys.equations());
  for (std::size_t i = 0; i < sys.equations(); ++i) {
    auto r = sys.matrix.row(i);
    r.push_back(sys.rhs[i]);
    rows.push_back(std::move(r));
  }
  bool inconsistent = false;
  const auto pivots = detail::rref(rows, n, inconsistent);

  Solution<K> sol;
  sol.rank = pivots.size();
  if (inconsistent) return sol;

  std::vector<bool> is_pivot(n, false);
  for (auto c : pivots) is_pivot[c] = true;
  sol.particular.assign(n, K(0));
  for (std::size_t i = 0; i < pivots.size(); ++i) sol.particular[pivots[i]] = rows[i][n];
  for (std::size_t f = 0; f < n; ++f) {
    if (is_pivot[f]) continue;
    sol.free_columns.push_back(f);
    std::vector<K> v(n, K(0));
    v[f] = K(1);
    for (std::size_t i = 0; i < pivots.size(); ++i) v[pivots[i]] = -rows[i][f];
    sol.null_basis.push_back(std::move(v));
  }
  sol.kind = sol.null_basis.empty() ? SolveKind::Unique : SolveKind::Parametric;
  return sol;
}

template <ExactField K>
LinSystem<K> subsystem(const LinSystem<K>& sys, const std::vector<std::size_t>& rows) {
  LinSystem<K> out(sys.unknowns());
  for (auto i : rows) out.add_equation(sys.matrix.row(i), sys.rhs[i]);
  return out;
}

/// Row indices of an irreducible inconsistent subsystem (deletion filter):
/// dropping any one of the returned rows makes the rest consistent. Empty
/// when the system is consistent.
template <ExactField K>
std::vector<std::size_t> minimal_infeasible_rows(const LinSystem<K>& sys) {
  if (solve_exact(sys).consistent()) return {};
  // Shortest inconsistent prefix first (consistency is monotone in prefixes),
  // then a deletion pass over that prefix.
  std::size_t lo = 1, hi = sys.equations();
  while (lo < hi) {
    const std::size_t mid = (lo + hi) / 2;
    std::vector<std::size_t> prefix(mid);
    for (std::size_t i = 0; i < mid; ++i) prefix[i] = i;
    if (solve_exact(subsystem(sys, prefix)).consistent()) lo = mid + 1;
    else hi = mid;
  }
  std::vector<std::size_t> keep(lo);
  for (std::size_t i = 0; i < lo; ++i) keep[i] = i;
  for (std::size_t pos = keep.size(); pos-- > 0;) {
    auto trial = keep;
    trial.erase(trial.begin() + static_cast<std::ptrdiff_t>(pos));
    if (!solve_exact(subsystem(sys, trial)).consistent()) keep = std::move(trial);
  }
  return keep;
}

}  // namespace qheun

#endif  // QHEUN_LINEAR_SYSTEM_HPP
