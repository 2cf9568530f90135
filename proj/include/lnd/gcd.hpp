#pragma once

#include <cstddef>
#include <vector>

#include "lnd/division.hpp"
#include "lnd/polynomial.hpp"

namespace lnd {

namespace detail {

inline Polynomial exact_quotient(const Polynomial& f, const Polynomial& g) {
  auto q = divide_exact(f, g);
  if (!q) throw Error("internal: inexact division in gcd");
  return *q;
}

// Coefficients of f viewed as a polynomial in `var`; coefficient i multiplies var^i.
inline std::vector<Polynomial> coefficients_in(const Polynomial& f, std::size_t var) {
  std::vector<std::vector<Term>> buckets(static_cast<std::size_t>(std::max<std::int64_t>(f.degree_in(var), 0)) + 1);
  for (const Term& t : f.terms()) {
    Monomial m = t.monomial;
    Exponent e = m[var];
    m.set(var, 0);
    buckets[e].push_back({std::move(m), t.coeff});
  }
  std::vector<Polynomial> out;
  out.reserve(buckets.size());
  for (auto& b : buckets) out.push_back(Polynomial::from_terms(f.context(), std::move(b)));
  return out;
}

inline Polynomial leading_coefficient_in(const Polynomial& f, std::size_t var) {
  return coefficients_in(f, var).back();
}

inline Polynomial var_power(const Context& ctx, std::size_t var, Exponent e) {
  return Polynomial::term(ctx, Monomial::variable(ctx->nvars(), var, e), Rational(1));
}

// lc(B)^(deg A - deg B + 1) * A  mod  B, with respect to `var`.
inline Polynomial pseudo_remainder(const Polynomial& a, const Polynomial& b, std::size_t var) {
  const std::int64_t db = b.degree_in(var);
  const Polynomial lb = leading_coefficient_in(b, var);
  std::int64_t e = a.degree_in(var) - db + 1;
  Polynomial r = a;
  while (!r.is_zero() && r.degree_in(var) >= db) {
    const std::int64_t dr = r.degree_in(var);
    Polynomial t = leading_coefficient_in(r, var) * var_power(r.context(), var, static_cast<Exponent>(dr - db));
    r = lb * r - t * b;
    --e;
  }
  if (e > 0) r = lb.pow(static_cast<std::uint64_t>(e)) * r;
  return r;
}

}  // namespace detail

Polynomial gcd(const Polynomial& f, const Polynomial& g);

// Gcd of the coefficients of f as a polynomial in `var` (monic).
inline Polynomial content_in(const Polynomial& f, std::size_t var) {
  Polynomial c(f.context());
  for (const Polynomial& coeff : detail::coefficients_in(f, var)) {
    if (coeff.is_zero()) continue;
    c = c.is_zero() ? coeff.monic() : gcd(c, coeff);
    if (c.is_one()) break;
  }
  return c;
}

inline Polynomial primitive_part_in(const Polynomial& f, std::size_t var) {
  if (f.is_zero()) return f;
  return detail::exact_quotient(f, content_in(f, var));
}

namespace detail {

// Gcd of two polynomials primitive in `var`, both of positive degree in it,
// by the subresultant pseudo-remainder sequence.
inline Polynomial subresultant_gcd(Polynomial a, Polynomial b, std::size_t var) {
  if (a.degree_in(var) < b.degree_in(var)) std::swap(a, b);
  const Context& ctx = a.context();
  Polynomial g = Polynomial::constant(ctx, Rational(1));
  Polynomial h = g;
  while (true) {
    const std::int64_t delta = a.degree_in(var) - b.degree_in(var);
    Polynomial r = pseudo_remainder(a, b, var);
    if (r.is_zero()) return primitive_part_in(b, var);
    if (r.degree_in(var) == 0) return Polynomial::constant(ctx, Rational(1));
    a = b;
    b = exact_quotient(r, g * h.pow(static_cast<std::uint64_t>(delta)));
    g = leading_coefficient_in(a, var);
    if (delta == 0) continue;
    h = exact_quotient(g.pow(static_cast<std::uint64_t>(delta)), h.pow(static_cast<std::uint64_t>(delta - 1)));
  }
}

}  // namespace detail

// Greatest common divisor normalized to leading coefficient 1 under f's order.
// Content/primitive-part recursion over the variables with a subresultant PRS
// on the main variable; gcd(0, 0) = 0.
inline Polynomial gcd(const Polynomial& f, const Polynomial& g0) {
  f.check_compatible(g0);
  const Polynomial g = g0.in_context(f.context());
  if (f.is_zero()) return g.monic();
  if (g.is_zero()) return f.monic();
  if (f.is_constant() || g.is_constant()) return Polynomial::constant(f.context(), Rational(1));

  const std::vector<bool> uf = f.support();
  const std::vector<bool> ug = g.support();
  std::size_t var = 0;
  while (!uf[var] && !ug[var]) ++var;
  if (!uf[var]) return gcd(f, content_in(g, var));
  if (!ug[var]) return gcd(content_in(f, var), g);

  const Polynomial cf = content_in(f, var);
  const Polynomial cg = content_in(g, var);
  const Polynomial pf = detail::exact_quotient(f, cf);
  const Polynomial pg = detail::exact_quotient(g, cg);
  const Polynomial c = gcd(cf, cg);
  const Polynomial h = detail::subresultant_gcd(pf, pg, var);
  return (c * h).monic();
}

}  // namespace lnd
