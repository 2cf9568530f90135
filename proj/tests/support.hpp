#pragma once

// Shared helpers for the test suites: parsing shorthands and seeded random
// polynomials.

#include <cstdint>
#include <optional>
#include <random>
#include <string>
#include <utility>
#include <vector>

#include "lnd/lnd.hpp"

namespace lnd::testing {

inline Polynomial P(const Context& ctx, const std::string& text) { return parse_polynomial(text, ctx); }

inline std::vector<Polynomial> Ps(const Context& ctx, const std::vector<std::string>& texts) {
  std::vector<Polynomial> out;
  for (const std::string& t : texts) out.push_back(P(ctx, t));
  return out;
}

// Random polynomial with up to `terms` terms of total degree <= `degree` and
// small integer (occasionally fractional) coefficients.
inline Polynomial random_poly(std::mt19937_64& rng, const Context& ctx, int degree, int terms, int coeff = 5) {
  std::uniform_int_distribution<int> deg(0, degree), c(-coeff, coeff), den(1, 3);
  std::uniform_int_distribution<std::size_t> var(0, ctx->nvars() - 1);
  Polynomial f(ctx);
  for (int t = 0; t < terms; ++t) {
    Monomial m(ctx->nvars());
    const int d = deg(rng);
    for (int k = 0; k < d; ++k) {
      const std::size_t v = var(rng);
      m.set(v, m[v] + 1);
    }
    f = f + Polynomial::term(ctx, m, Rational(c(rng)) / Rational(den(rng)));
  }
  return f;
}

inline Polynomial random_nonzero(std::mt19937_64& rng, const Context& ctx, int degree, int terms) {
  while (true) {
    Polynomial f = random_poly(rng, ctx, degree, terms);
    if (!f.is_zero()) return f;
  }
}

// Random element of the algebra generated by `gens`: a sum of products of
// generators with total ambient degree <= `degree`.
inline Polynomial random_algebra_element(std::mt19937_64& rng, const std::vector<Polynomial>& gens, int degree,
                                         int terms) {
  const Context& ctx = gens.front().context();
  std::uniform_int_distribution<std::size_t> pick(0, gens.size() - 1);
  std::uniform_int_distribution<int> c(-4, 4), len(0, 3);
  Polynomial f(ctx);
  for (int t = 0; t < terms; ++t) {
    Polynomial m = Polynomial::constant(ctx, Rational(c(rng)));
    const int n = len(rng);
    for (int k = 0; k < n; ++k) {
      const Polynomial& g = gens[pick(rng)];
      if (m.total_degree() + g.total_degree() > degree) break;
      m = m * g;
    }
    f = f + m;
  }
  return f;
}

// The fibration examples over Q[X^2, X^3], in the ambient ring Q[X, Y, Z].
inline const std::vector<std::string> kGeneratorsA{"X^2", "X^3", "Y + X*Y^2", "X^2*Y", "X^2*Y^3"};
inline const std::vector<std::string> kGeneratorsC{"X^2",   "X^3",     "Y + X*Y^2", "Z + X*Z^2", "X^2*Y",
                                                   "X^2*Y^3", "X^2*Z", "X^2*Z^3",   "X^2*Y*Z"};

inline PresentedRing ambient_xyz() { return PresentedRing::polynomial(make_context({"X", "Y", "Z"})); }

inline Subalgebra subalgebra_of(const PresentedRing& ring, const std::vector<std::string>& gens) {
  return Subalgebra(ring, Ps(ring.context(), gens));
}

// A derivation given by variable images, written as text.
inline Derivation on_ring(const PresentedRing& r, const std::vector<std::pair<std::string, std::string>>& images,
                          std::optional<Subalgebra> domain = std::nullopt) {
  std::vector<std::pair<std::string, Polynomial>> m;
  for (const auto& [v, p] : images) m.emplace_back(v, P(r.context(), p));
  return Derivation::from_images(r, m, std::move(domain));
}

}  // namespace lnd::testing
