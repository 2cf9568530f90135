#pragma once

#include <optional>
#include <vector>

#include "lnd/polynomial.hpp"

namespace lnd {

struct DivisionResult {
  std::vector<Polynomial> quotients;
  Polynomial remainder;
};

// Multivariate division: f = sum q_i d_i + r with no term of r divisible by
// any lm(d_i). Everything is returned in f's variables under `order`.
inline DivisionResult divide(const Polynomial& f, const std::vector<Polynomial>& divisors,
                             const MonomialOrder& order) {
  if (divisors.empty()) throw InvalidArgument("divide: empty divisor list");
  const Context ctx = with_order(f.context(), order);
  std::vector<Polynomial> ds;
  ds.reserve(divisors.size());
  for (const Polynomial& d : divisors) {
    f.check_compatible(d);
    if (d.is_zero()) throw InvalidArgument("divide: zero divisor");
    ds.push_back(d.in_context(ctx));
  }
  DivisionResult out{std::vector<Polynomial>(ds.size(), Polynomial(ctx)), Polynomial(ctx)};
  Polynomial p = f.in_context(ctx);
  std::vector<Term> rem;
  while (!p.is_zero()) {
    const Term lt = p.leading_term();
    bool reduced = false;
    for (std::size_t i = 0; i < ds.size(); ++i) {
      const Term& dl = ds[i].leading_term();
      if (!dl.monomial.divides(lt.monomial)) continue;
      Monomial m = lt.monomial / dl.monomial;
      Rational c = lt.coeff / dl.coeff;
      out.quotients[i].add_scaled(Polynomial::constant(ctx, Rational(1)), c, m);
      p.add_scaled(ds[i], -c, m);
      reduced = true;
      break;
    }
    if (!reduced) {
      rem.push_back(lt);
      p.add_scaled(Polynomial::term(ctx, lt.monomial, Rational(1)), -lt.coeff, Monomial(ctx->nvars()));
    }
  }
  out.remainder = Polynomial::from_terms(ctx, std::move(rem));
  return out;
}

// f / g when g divides f exactly, otherwise nullopt. Result is in f's context.
inline std::optional<Polynomial> divide_exact(const Polynomial& f, const Polynomial& g) {
  if (g.is_zero()) throw InvalidArgument("division by the zero polynomial");
  DivisionResult r = divide(f, {g}, f.order());
  if (!r.remainder.is_zero()) return std::nullopt;
  return r.quotients.front().in_context(f.context());
}

}  // namespace lnd
