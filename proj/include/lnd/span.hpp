#pragma once

#include <algorithm>
#include <cstddef>
#include <set>
#include <unordered_map>
#include <vector>

#include "lnd/linalg.hpp"
#include "lnd/polynomial.hpp"

namespace lnd {

// All monomials in n variables of total degree <= d, ascending by degree.
inline std::vector<Monomial> monomials_up_to(std::size_t nvars, std::size_t d) {
  std::vector<Monomial> out;
  Monomial m(nvars);
  // Enumerate exponent vectors with a running remainder.
  auto rec = [&](auto&& self, std::size_t var, std::size_t left) -> void {
    if (var + 1 == nvars) {
      for (std::size_t e = 0; e <= left; ++e) {
        m.set(var, static_cast<Exponent>(e));
        out.push_back(m);
      }
      m.set(var, 0);
      return;
    }
    for (std::size_t e = 0; e <= left; ++e) {
      m.set(var, static_cast<Exponent>(e));
      self(self, var + 1, left - e);
    }
    m.set(var, 0);
  };
  if (nvars == 0) {
    out.push_back(m);
    return out;
  }
  rec(rec, 0, d);
  std::stable_sort(out.begin(), out.end(), [](const Monomial& a, const Monomial& b) { return a.degree() < b.degree(); });
  return out;
}

// Columns of a coefficient matrix, kept in descending monomial order so row
// echelon pivots are leading monomials.
class MonomialColumns {
 public:
  explicit MonomialColumns(const MonomialOrder& order) : set_(Cmp{order}) {}

  void add(const Polynomial& p) {
    for (const Term& t : p.terms()) set_.insert(t.monomial);
  }
  void add(const Monomial& m) { set_.insert(m); }

  void freeze() {
    cols_.assign(set_.begin(), set_.end());
    index_.clear();
    for (std::size_t k = 0; k < cols_.size(); ++k) index_.emplace(cols_[k], k);
  }

  std::size_t size() const noexcept { return cols_.size(); }
  const Monomial& operator[](std::size_t k) const { return cols_[k]; }
  std::size_t index(const Monomial& m) const { return index_.at(m); }

 private:
  struct Cmp {
    MonomialOrder order;
    bool operator()(const Monomial& a, const Monomial& b) const { return order.compare(a, b) > 0; }
  };
  std::set<Monomial, Cmp> set_;
  std::vector<Monomial> cols_;
  std::unordered_map<Monomial, std::size_t, MonomialHash> index_;
};

// Reduced echelon basis of the Q-span of `polys`: distinct monic leading
// monomials, no pivot monomial appearing in another element. Sorted by
// increasing leading monomial under ctx's order.
inline std::vector<Polynomial> echelon_basis(const std::vector<Polynomial>& polys, const Context& ctx) {
  MonomialColumns cols(ctx->order());
  for (const Polynomial& p : polys) cols.add(p);
  cols.freeze();
  std::vector<Polynomial> nonzero;
  for (const Polynomial& p : polys)
    if (!p.is_zero()) nonzero.push_back(p.in_context(ctx));
  if (nonzero.empty()) return {};
  Matrix m(nonzero.size(), cols.size());
  for (std::size_t r = 0; r < nonzero.size(); ++r)
    for (const Term& t : nonzero[r].terms()) m(r, cols.index(t.monomial)) = t.coeff;
  const Echelon e = row_echelon(m);
  std::vector<Polynomial> out;
  for (const auto& row : e.rows) {
    std::vector<Term> terms;
    for (std::size_t c = 0; c < row.size(); ++c)
      if (!row[c].is_zero()) terms.push_back({cols[c], row[c]});
    out.push_back(Polynomial::from_terms(ctx, std::move(terms)));
  }
  std::reverse(out.begin(), out.end());
  return out;
}

// Residue of f after eliminating against an echelon basis; zero iff f is in
// the span.
inline Polynomial reduce_by_echelon(const Polynomial& f, const std::vector<Polynomial>& basis) {
  Polynomial r = f;
  // Basis is ascending; go from largest leading monomial down.
  for (std::size_t k = basis.size(); k-- > 0;) {
    const Monomial& lm = basis[k].leading_monomial();
    for (const Term& t : r.terms()) {
      if (t.monomial == lm) {
        Rational c = -t.coeff;
        r.add_scaled(basis[k], c, Monomial(lm.size()));
        break;
      }
    }
  }
  return r;
}

}  // namespace lnd
