#pragma once

#include <cstddef>
#include <cstdint>
#include <random>
#include <string>
#include <vector>

#include "lnd/derivation.hpp"
#include "lnd/error.hpp"
#include "lnd/groebner.hpp"
#include "lnd/presentation.hpp"

namespace lnd {

// Grade values the toolkit distinguishes. `two` means "at least two": deeper
// sequences are not searched for.
enum class Grade { zero, one, two, infinite };

inline std::string to_string(Grade g) {
  switch (g) {
    case Grade::zero: return "0";
    case Grade::one: return "1";
    case Grade::two: return "2";
    case Grade::infinite: return "INF";
  }
  return "?";
}

enum class GradeMethod { unit_ideal, two_generator, generic_combination };

inline std::string to_string(GradeMethod m) {
  switch (m) {
    case GradeMethod::unit_ideal: return "unit-ideal";
    case GradeMethod::two_generator: return "two-generator";
    case GradeMethod::generic_combination: return "generic-combination";
  }
  return "?";
}

struct GradeReport {
  Grade value = Grade::zero;
  // A regular sequence of length min(value, 2); empty for INF.
  std::vector<Polynomial> witness;
  GradeMethod method = GradeMethod::unit_ideal;
  // The deterministic (a : I) = (a) comparison decided the value.
  bool exhaustive = false;
  // Value rests on a failed random search alone. Never set when the
  // deterministic fallback runs, which it always does.
  bool probabilistic = false;
  // The ideal has more than two generators and grade >= 2 was found; the true
  // grade may be larger.
  bool capped = false;
};

struct GradeOptions {
  std::size_t trials = 32;
  int coefficient_range = 9;
  std::uint64_t seed = 0;
  Limits limits;
};

// Fixed point free: D(B)B is the unit ideal of the domain ring.
inline bool fpf_test(const Derivation& d, const Limits& limits = {}) {
  std::vector<Polynomial> gens;
  for (const Polynomial& img : d.generator_images())
    if (!img.is_zero()) gens.push_back(d.to_domain(img));
  if (gens.empty()) return false;
  return groebner(d.domain_ring().lift(gens), limits).is_unit();
}

namespace detail {

inline bool is_unit_ideal(const std::vector<Polynomial>& gens, const PresentedRing& ring, const Limits& limits) {
  return groebner(ring.lift(gens), limits).is_unit();
}

// b regular modulo (a)? Degenerate inputs (b in (a)) count as "no".
inline bool regular_after(const Polynomial& a, const Polynomial& b, const PresentedRing& ring, const Limits& limits) {
  try {
    return nzd_test(b, {a}, ring, limits).regular;
  } catch (const Degenerate&) {
    return false;
  }
}

}  // namespace detail

// Grade of (a, b) in a domain: INF for the unit ideal, 2 when a, b or b, a is
// a regular sequence, else 1.
inline GradeReport grade_two_generated(const Polynomial& a0, const Polynomial& b0, const PresentedRing& ring,
                                       const Limits& limits = {}) {
  const Polynomial a = ring.reduce(a0), b = ring.reduce(b0);
  if (a.is_zero() && b.is_zero()) throw Degenerate("grade of the zero ideal");
  GradeReport r;
  r.method = GradeMethod::two_generator;
  r.exhaustive = true;
  if (detail::is_unit_ideal({a, b}, ring, limits)) {
    r.value = Grade::infinite;
    r.method = GradeMethod::unit_ideal;
    return r;
  }
  if (a.is_zero() || b.is_zero()) {
    r.value = Grade::one;
    r.witness = {a.is_zero() ? b : a};
    return r;
  }
  if (detail::regular_after(a, b, ring, limits)) {
    r.value = Grade::two;
    r.witness = {a, b};
    return r;
  }
  if (detail::regular_after(b, a, ring, limits)) {
    r.value = Grade::two;
    r.witness = {b, a};
    return r;
  }
  r.value = Grade::one;
  r.witness = {a};
  return r;
}

// Grade of an ideal with any number of generators. Random small-integer
// combinations look for a length-two regular sequence; if none turns up, the
// grade is decided by comparing (a : I) with (a) for a nonzero a in I, which
// is exact in a domain.
inline GradeReport generic_combination_grade(const std::vector<Polynomial>& generators, const PresentedRing& ring,
                                             const GradeOptions& opt = {}) {
  const std::vector<Polynomial> gens = ring.reduce_all(generators);
  if (gens.empty()) throw Degenerate("grade of the zero ideal");
  GradeReport r;
  r.method = GradeMethod::generic_combination;
  if (detail::is_unit_ideal(gens, ring, opt.limits)) {
    r.value = Grade::infinite;
    r.method = GradeMethod::unit_ideal;
    return r;
  }
  if (gens.size() == 1) {
    r.value = Grade::one;
    r.witness = {gens.front()};
    r.exhaustive = true;
    return r;
  }

  std::mt19937_64 rng(opt.seed);
  std::uniform_int_distribution<int> coeff(-opt.coefficient_range, opt.coefficient_range);
  auto combination = [&]() {
    Polynomial c(ring.context());
    for (const Polynomial& g : gens) c = c + g * Rational(coeff(rng));
    return ring.reduce(c);
  };
  for (std::size_t t = 0; t < opt.trials; ++t) {
    Polynomial a = combination();
    Polynomial b = combination();
    if (a.is_zero() || b.is_zero()) continue;
    if (detail::regular_after(a, b, ring, opt.limits)) {
      r.value = Grade::two;
      r.witness = {a, b};
      r.capped = gens.size() > 2;
      return r;
    }
  }

  // Deterministic fallback: grade >= 2 iff I avoids every associated prime
  // of (a), i.e. (a : I) = (a).
  const Polynomial& a = gens.front();
  const Ideal principal = ring.lift({a});
  const GroebnerBasis principal_gb = groebner(principal, opt.limits);
  const Ideal colon = ideal_quotient(principal, ring.lift(gens), opt.limits);
  r.exhaustive = true;
  if (!ideal_contained(colon, principal_gb)) {
    r.value = Grade::one;
    r.witness = {a};
    return r;
  }
  r.value = Grade::two;
  r.capped = gens.size() > 2;
  // Look for an explicit second element on a growing coefficient box.
  for (int radius = 1; radius <= 4; ++radius) {
    std::vector<int> c(gens.size() - 1, -radius);
    while (true) {
      Polynomial b(ring.context());
      for (std::size_t i = 1; i < gens.size(); ++i) b = b + gens[i] * Rational(c[i - 1]);
      b = ring.reduce(b);
      if (!b.is_zero() && detail::regular_after(a, b, ring, opt.limits)) {
        r.witness = {a, b};
        return r;
      }
      std::size_t k = 0;
      while (k < c.size() && c[k] == radius) c[k++] = -radius;
      if (k == c.size()) break;
      ++c[k];
    }
  }
  r.witness = {a};
  return r;
}

// Drop generators lying in the ideal of the others, last first.
inline std::vector<Polynomial> prune_generators(std::vector<Polynomial> gens, const PresentedRing& ring,
                                                const Limits& limits = {}) {
  for (std::size_t k = gens.size(); k-- > 0 && gens.size() > 1;) {
    std::vector<Polynomial> others;
    for (std::size_t j = 0; j < gens.size(); ++j)
      if (j != k) others.push_back(gens[j]);
    if (ring.member(gens[k], others, limits)) gens.erase(gens.begin() + static_cast<std::ptrdiff_t>(k));
  }
  return gens;
}

// Grade of the ideal of `generators` in `ring`: unit check, the two-generator
// test on a pruned generator list, or the generic search.
inline GradeReport grade_of_ideal(const std::vector<Polynomial>& generators, const PresentedRing& ring,
                                  const GradeOptions& opt = {}) {
  std::vector<Polynomial> gens = ring.reduce_all(generators);
  if (gens.empty()) throw Degenerate("grade of the zero ideal");
  if (gens.size() > 2) {
    if (detail::is_unit_ideal(gens, ring, opt.limits)) {
      GradeReport r;
      r.value = Grade::infinite;
      return r;
    }
    gens = prune_generators(std::move(gens), ring, opt.limits);
  }
  if (gens.size() <= 2) return grade_two_generated(gens.front(), gens.back(), ring, opt.limits);
  return generic_combination_grade(gens, ring, opt);
}

// Grade of D(B)B in the domain ring of D.
inline GradeReport grade_of_derivation(const Derivation& d, const GradeOptions& opt = {}) {
  if (d.is_zero()) throw InvalidArgument("grade of the zero derivation");
  std::vector<Polynomial> gens;
  for (const Polynomial& img : d.generator_images())
    if (!img.is_zero()) gens.push_back(d.to_domain(img));
  if (gens.empty()) throw Degenerate("the derivation vanishes on its domain");
  return grade_of_ideal(gens, d.domain_ring(), opt);
}

}  // namespace lnd
