#pragma once

#include <algorithm>
#include <cstddef>
#include <optional>
#include <string>
#include <utility>
#include <vector>

#include "lnd/derivation.hpp"
#include "lnd/error.hpp"
#include "lnd/linalg.hpp"
#include "lnd/presentation.hpp"
#include "lnd/span.hpp"

namespace lnd {

enum class SpanVerdict { equal, strictly_contains, strictly_contained, incomparable };

inline std::string to_string(SpanVerdict v) {
  switch (v) {
    case SpanVerdict::equal: return "equal";
    case SpanVerdict::strictly_contains: return "strictly-contains";
    case SpanVerdict::strictly_contained: return "strictly-contained";
    case SpanVerdict::incomparable: return "incomparable";
  }
  return "?";
}

// Comparison of two degree-bounded pieces, from the first one's side.
struct GeneratorVerdict {
  SpanVerdict verdict = SpanVerdict::equal;
  std::size_t degree = 0;
  std::size_t left_dimension = 0;
  std::size_t right_dimension = 0;
  std::optional<Polynomial> only_left;   // in the first piece, not the second
  std::optional<Polynomial> only_right;  // in the second piece, not the first
};

struct KernelReport {
  std::size_t degree_bound = 0;
  std::vector<Polynomial> basis;
  std::vector<Polynomial> generators;
  std::optional<GeneratorVerdict> claimed;
};

// s with D(s) = image; image = 1 for a slice, otherwise a nonzero kernel
// element (local slice).
struct SliceData {
  Polynomial slice;
  Polynomial image;
  bool is_local() const { return !image.is_one(); }
};

// numerator / base^exponent; exponent 0 for a true slice.
struct DixmierValue {
  Polynomial numerator;
  Polynomial base;
  std::size_t exponent = 0;
};

namespace detail {

// Graded then lex order on leading monomials, for deterministic output.
inline bool degree_lex_less(const Polynomial& a, const Polynomial& b) {
  const Monomial& x = a.leading_monomial();
  const Monomial& y = b.leading_monomial();
  if (x.degree() != y.degree()) return x.degree() < y.degree();
  return MonomialOrder::lex().compare(x, y) < 0;
}

// Q-basis of the domain's elements of degree <= d.
inline std::vector<Polynomial> domain_space(const Derivation& d, std::size_t degree, const Limits& limits) {
  if (d.domain()) return d.domain()->degree_piece(degree, limits);
  std::vector<Polynomial> out;
  for (const Monomial& m : d.ring().standard_monomials(degree, limits.dim_budget))
    out.push_back(Polynomial::term(d.ring().context(), m, Rational(1)));
  return out;
}

// Matrix of a linear map given by its values on a spanning list: column j
// holds the coefficients of values[j].
inline std::pair<Matrix, MonomialColumns> value_matrix(const std::vector<Polynomial>& values, const Context& ctx) {
  MonomialColumns rows(ctx->order());
  for (const Polynomial& v : values) rows.add(v);
  rows.freeze();
  Matrix m(rows.size(), values.size());
  for (std::size_t c = 0; c < values.size(); ++c)
    for (const Term& t : values[c].terms()) m(rows.index(t.monomial), c) = t.coeff;
  return {std::move(m), std::move(rows)};
}

inline Polynomial combine(const std::vector<Polynomial>& space, const std::vector<Rational>& coeffs, const Context& ctx) {
  Polynomial out(ctx);
  for (std::size_t j = 0; j < space.size(); ++j)
    if (!coeffs[j].is_zero()) out = out + space[j] * coeffs[j];
  return out;
}

inline std::vector<Polynomial> kernel_of(const Derivation& d, const std::vector<Polynomial>& space,
                                         std::size_t power, const Limits& limits) {
  const Context& ctx = d.ring().context();
  std::vector<Polynomial> values;
  for (const Polynomial& e : space) values.push_back(d.iterate(e, power));
  auto [m, rows] = value_matrix(values, ctx);
  check_dimension(rows.size(), limits.dim_budget, "kernel matrix");
  std::vector<Polynomial> out;
  for (const auto& v : nullspace(m)) out.push_back(combine(space, v, ctx));
  return echelon_basis(out, ctx);
}

}  // namespace detail

// Q-basis of Ker D among the domain's elements of degree <= d, in echelon
// form, ordered by (degree, lex leading monomial).
inline KernelReport kernel_basis(const Derivation& d, std::size_t degree, const Limits& limits = {}) {
  if (degree < 1) throw InvalidArgument("kernel degree bound must be at least 1");
  const auto space = detail::domain_space(d, degree, limits);
  check_dimension(space.size(), limits.dim_budget, "kernel space");
  KernelReport k;
  k.degree_bound = degree;
  k.basis = detail::kernel_of(d, space, 1, limits);
  std::stable_sort(k.basis.begin(), k.basis.end(), detail::degree_lex_less);
  return k;
}

// Greedy minimal generating sublist of the kernel basis: keep an element only
// when it is not in the algebra generated by those kept before it.
inline KernelReport kernel_generators(const Derivation& d, std::size_t degree, const Limits& limits = {}) {
  KernelReport k = kernel_basis(d, degree, limits);
  std::optional<Subalgebra> kept;
  for (const Polynomial& f : k.basis) {
    if (f.is_constant()) continue;
    if (kept && kept->contains(f)) continue;
    k.generators.push_back(f);
    kept.emplace(d.ring(), k.generators, limits);
  }
  return k;
}

// Compare the degree <= d pieces of two subalgebras of the same ring.
inline GeneratorVerdict compare_pieces(const std::vector<Polynomial>& left, const std::vector<Polynomial>& right,
                                       std::size_t degree) {
  GeneratorVerdict v;
  v.degree = degree;
  v.left_dimension = left.size();
  v.right_dimension = right.size();
  for (const Polynomial& f : left)
    if (!reduce_by_echelon(f, right).is_zero()) {
      v.only_left = f;
      break;
    }
  for (const Polynomial& f : right)
    if (!reduce_by_echelon(f, left).is_zero()) {
      v.only_right = f;
      break;
    }
  if (v.only_left && v.only_right)
    v.verdict = SpanVerdict::incomparable;
  else if (v.only_left)
    v.verdict = SpanVerdict::strictly_contains;
  else if (v.only_right)
    v.verdict = SpanVerdict::strictly_contained;
  else
    v.verdict = SpanVerdict::equal;
  return v;
}

// Degree <= d pieces of A and of the algebra generated by `claimed`, compared
// exactly. Verdict is from A's side.
inline GeneratorVerdict verify_generators_up_to_degree(const Subalgebra& a, const std::vector<Polynomial>& claimed,
                                                       std::size_t degree, const Limits& limits = {}) {
  const Subalgebra other(a.ambient(), claimed, limits);
  return compare_pieces(a.degree_piece(degree, limits), other.degree_piece(degree, limits), degree);
}

// Kernel report with the claimed-equality verdict against a subalgebra.
inline KernelReport kernel_against(const Derivation& d, std::size_t degree, const Subalgebra& expect,
                                   const Limits& limits = {}) {
  KernelReport k = kernel_generators(d, degree, limits);
  std::vector<Polynomial> ker = echelon_basis(k.basis, d.ring().context());
  k.claimed = compare_pieces(ker, expect.degree_piece(degree, limits), degree);
  return k;
}

// Solve D(s) = 1 over the domain's degree <= d elements; failing that, the
// local slice s in Ker D^2 \ Ker D with D(s) of least leading monomial.
inline std::optional<SliceData> slice_search(const Derivation& d, std::size_t degree, const Limits& limits = {}) {
  if (degree < 1) throw InvalidArgument("slice degree bound must be at least 1");
  const Context& ctx = d.ring().context();
  const auto space = detail::domain_space(d, degree, limits);
  check_dimension(space.size(), limits.dim_budget, "slice space");

  std::vector<Polynomial> values;
  for (const Polynomial& e : space) values.push_back(d.apply(e));
  {
    std::vector<Polynomial> with_one = values;
    with_one.push_back(Polynomial::constant(ctx, Rational(1)));
    auto [m, rows] = detail::value_matrix(with_one, ctx);
    Matrix lhs(m.rows(), space.size());
    std::vector<Rational> rhs(m.rows());
    for (std::size_t r = 0; r < m.rows(); ++r) {
      for (std::size_t c = 0; c < space.size(); ++c) lhs(r, c) = m(r, c);
      rhs[r] = m(r, space.size());
    }
    if (auto x = solve(lhs, rhs)) {
      Polynomial s = detail::combine(space, *x, ctx);
      return SliceData{s, Polynomial::constant(ctx, Rational(1))};
    }
  }

  const std::vector<Polynomial> second = detail::kernel_of(d, space, 2, limits);
  if (second.empty()) return std::nullopt;
  // Rows (D(s) | s) over monomial columns in descending order; the last row
  // whose pivot falls in the D(s) block has the smallest nonzero image.
  MonomialColumns img_cols(ctx->order()), src_cols(ctx->order());
  std::vector<Polynomial> images;
  for (const Polynomial& s : second) {
    images.push_back(d.apply(s));
    img_cols.add(images.back());
    src_cols.add(s);
  }
  img_cols.freeze();
  src_cols.freeze();
  Matrix m(second.size(), img_cols.size() + src_cols.size());
  for (std::size_t r = 0; r < second.size(); ++r) {
    for (const Term& t : images[r].terms()) m(r, img_cols.index(t.monomial)) = t.coeff;
    for (const Term& t : second[r].terms()) m(r, img_cols.size() + src_cols.index(t.monomial)) = t.coeff;
  }
  const Echelon e = row_echelon(m);
  std::optional<std::size_t> pick;
  for (std::size_t k = 0; k < e.pivots.size(); ++k)
    if (e.pivots[k] < img_cols.size()) pick = k;
  if (!pick) return std::nullopt;
  std::vector<Term> terms;
  for (std::size_t c = 0; c < src_cols.size(); ++c) {
    const Rational& x = e.rows[*pick][img_cols.size() + c];
    if (!x.is_zero()) terms.push_back({src_cols[c], x});
  }
  Polynomial s = Polynomial::from_terms(ctx, std::move(terms));
  Polynomial c = d.apply(s);
  const Rational lc = c.leading_coefficient();
  s = s * lc.inverse();
  c = c * lc.inverse();
  return SliceData{s, c};
}

namespace detail {

inline std::vector<Polynomial> iterates_until_zero(const Derivation& d, const Polynomial& f, std::size_t bound) {
  std::vector<Polynomial> it;
  Polynomial g = d.ring().reduce(f);
  while (!g.is_zero()) {
    if (it.size() > bound) throw InvalidArgument("element is not annihilated within the nilpotency bound");
    it.push_back(g);
    g = d.apply(g);
  }
  return it;
}

inline Rational factorial(std::size_t n) {
  Integer f = 1;
  for (std::size_t i = 2; i <= n; ++i) f *= static_cast<unsigned long>(i);
  return Rational(f);
}

}  // namespace detail

// Dixmier map. For a slice: sum over i of (-s)^i D^i(f) / i!. For a local
// slice (s, c) the value lives in the localization at c and is returned as a
// numerator over c^k, k the last nonzero iterate.
inline DixmierValue dixmier(const Derivation& d, const SliceData& s, const Polynomial& f, std::size_t bound = 0) {
  if (bound == 0) bound = default_nilpotency_bound(d) * static_cast<std::size_t>(std::max<std::int64_t>(f.total_degree(), 1));
  const Context& ctx = d.ring().context();
  const auto it = detail::iterates_until_zero(d, f, bound);
  DixmierValue out{Polynomial(ctx), s.image, 0};
  if (it.empty()) return out;
  const std::size_t k = s.is_local() ? it.size() - 1 : 0;
  out.exponent = k;
  const Polynomial minus_s = Polynomial(ctx) - s.slice;
  Polynomial power = Polynomial::constant(ctx, Rational(1));
  for (std::size_t i = 0; i < it.size(); ++i) {
    Polynomial term = power * it[i] * detail::factorial(i).inverse();
    if (s.is_local()) term = term * s.image.pow(k - i);
    out.numerator = out.numerator + term;
    power = power * minus_s;
  }
  out.numerator = d.ring().reduce(out.numerator);
  return out;
}

// f = sum a_i s^i with a_i in Ker D, from a true slice.
inline std::vector<Polynomial> reconstruct(const Derivation& d, const SliceData& s, const Polynomial& f,
                                           std::size_t bound = 0) {
  if (s.is_local()) throw InvalidArgument("reconstruction needs a slice with D(s) = 1");
  if (bound == 0) bound = default_nilpotency_bound(d) * static_cast<std::size_t>(std::max<std::int64_t>(f.total_degree(), 1));
  const auto it = detail::iterates_until_zero(d, f, bound);
  std::vector<Polynomial> coeffs;
  for (std::size_t i = 0; i < it.size(); ++i)
    coeffs.push_back(dixmier(d, s, it[i] * detail::factorial(i).inverse(), bound).numerator);
  if (coeffs.empty()) coeffs.push_back(Polynomial(d.ring().context()));
  return coeffs;
}

// sum a_i s^i, reduced.
inline Polynomial evaluate_expansion(const Derivation& d, const std::vector<Polynomial>& coeffs, const Polynomial& s) {
  Polynomial out(d.ring().context());
  Polynomial power = Polynomial::constant(d.ring().context(), Rational(1));
  for (const Polynomial& a : coeffs) {
    out = out + a * power;
    power = power * s;
  }
  return d.ring().reduce(out);
}

}  // namespace lnd
