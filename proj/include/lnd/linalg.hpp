#pragma once

#include <cstddef>
#include <optional>
#include <string>
#include <utility>
#include <vector>

#include "lnd/error.hpp"
#include "lnd/rational.hpp"

namespace lnd {

// Dense matrix over Q, row major.
class Matrix {
 public:
  Matrix() = default;
  Matrix(std::size_t rows, std::size_t cols) : rows_(rows), cols_(cols), data_(rows * cols) {}

  std::size_t rows() const noexcept { return rows_; }
  std::size_t cols() const noexcept { return cols_; }

  Rational& operator()(std::size_t r, std::size_t c) { return data_[r * cols_ + c]; }
  const Rational& operator()(std::size_t r, std::size_t c) const { return data_[r * cols_ + c]; }

  std::vector<Rational> row(std::size_t r) const {
    return std::vector<Rational>(data_.begin() + static_cast<std::ptrdiff_t>(r * cols_),
                                 data_.begin() + static_cast<std::ptrdiff_t>((r + 1) * cols_));
  }

 private:
  std::size_t rows_ = 0;
  std::size_t cols_ = 0;
  std::vector<Rational> data_;
};

// Reduced row echelon form. rows[k] has a 1 in column pivots[k] and zeros in
// every other pivot column.
struct Echelon {
  std::size_t cols = 0;
  std::vector<std::vector<Rational>> rows;
  std::vector<std::size_t> pivots;

  std::size_t rank() const noexcept { return rows.size(); }
};

namespace detail {

// Clear denominators row by row so Bareiss runs over Z.
inline std::vector<std::vector<Integer>> integer_rows(const Matrix& m) {
  std::vector<std::vector<Integer>> out(m.rows(), std::vector<Integer>(m.cols()));
  for (std::size_t r = 0; r < m.rows(); ++r) {
    Integer l = 1;
    for (std::size_t c = 0; c < m.cols(); ++c)
      if (!m(r, c).is_zero()) {
        const Integer& d = m(r, c).denominator();
        l = l / gcd(l, d) * d;
      }
    for (std::size_t c = 0; c < m.cols(); ++c)
      if (!m(r, c).is_zero()) out[r][c] = m(r, c).numerator() * (l / m(r, c).denominator());
  }
  return out;
}

}  // namespace detail

// Fraction-free (Bareiss) forward elimination, then back substitution over Q.
inline Echelon row_echelon(const Matrix& m) {
  auto a = detail::integer_rows(m);
  const std::size_t nr = m.rows(), nc = m.cols();
  std::vector<std::size_t> pivots;
  Integer prev = 1;
  std::size_t r = 0;
  for (std::size_t c = 0; c < nc && r < nr; ++c) {
    std::size_t p = r;
    while (p < nr && a[p][c] == 0) ++p;
    if (p == nr) continue;
    std::swap(a[p], a[r]);
    const Integer piv = a[r][c];
    for (std::size_t i = r + 1; i < nr; ++i) {
      const Integer f = a[i][c];
      for (std::size_t j = c; j < nc; ++j) {
        Integer v = piv * a[i][j];
        if (f != 0 && a[r][j] != 0) v -= f * a[r][j];
        if (v != 0) mpz_divexact(v.get_mpz_t(), v.get_mpz_t(), prev.get_mpz_t());
        a[i][j] = std::move(v);
      }
    }
    prev = piv;
    pivots.push_back(c);
    ++r;
  }

  Echelon e;
  e.cols = nc;
  e.pivots = pivots;
  e.rows.assign(pivots.size(), std::vector<Rational>(nc));
  for (std::size_t k = 0; k < pivots.size(); ++k) {
    const Integer& piv = a[k][pivots[k]];
    for (std::size_t j = pivots[k]; j < nc; ++j)
      if (a[k][j] != 0) e.rows[k][j] = Rational(a[k][j], piv);
  }
  for (std::size_t k = pivots.size(); k-- > 0;) {
    const std::size_t pc = pivots[k];
    for (std::size_t i = 0; i < k; ++i) {
      const Rational f = e.rows[i][pc];
      if (f.is_zero()) continue;
      for (std::size_t j = pc; j < nc; ++j)
        if (!e.rows[k][j].is_zero()) e.rows[i][j] = e.rows[i][j] - f * e.rows[k][j];
    }
  }
  return e;
}

inline std::size_t rank(const Matrix& m) { return row_echelon(m).rank(); }

// Basis of { x : M x = 0 }, one vector per free column, with a 1 in that
// column.
inline std::vector<std::vector<Rational>> nullspace(const Matrix& m) {
  const Echelon e = row_echelon(m);
  std::vector<bool> is_pivot(m.cols(), false);
  for (std::size_t p : e.pivots) is_pivot[p] = true;
  std::vector<std::vector<Rational>> basis;
  for (std::size_t f = 0; f < m.cols(); ++f) {
    if (is_pivot[f]) continue;
    std::vector<Rational> v(m.cols());
    v[f] = Rational(1);
    for (std::size_t k = 0; k < e.pivots.size(); ++k) v[e.pivots[k]] = -e.rows[k][f];
    basis.push_back(std::move(v));
  }
  return basis;
}

// Some x with M x = b, or nullopt.
inline std::optional<std::vector<Rational>> solve(const Matrix& m, const std::vector<Rational>& b) {
  if (b.size() != m.rows()) throw InvalidArgument("solve: right-hand side has wrong length");
  Matrix aug(m.rows(), m.cols() + 1);
  for (std::size_t r = 0; r < m.rows(); ++r) {
    for (std::size_t c = 0; c < m.cols(); ++c) aug(r, c) = m(r, c);
    aug(r, m.cols()) = b[r];
  }
  const Echelon e = row_echelon(aug);
  std::vector<Rational> x(m.cols());
  for (std::size_t k = 0; k < e.pivots.size(); ++k) {
    if (e.pivots[k] == m.cols()) return std::nullopt;
    x[e.pivots[k]] = e.rows[k][m.cols()];
  }
  return x;
}

inline void check_dimension(std::size_t dim, std::size_t budget, const char* what) {
  if (dim > budget)
    throw BudgetExceeded(std::string(what) + ": dimension " + std::to_string(dim) + " exceeds budget " +
                         std::to_string(budget));
}

}  // namespace lnd
