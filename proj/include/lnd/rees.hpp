#pragma once

#include <cstddef>
#include <map>
#include <optional>
#include <string>
#include <utility>
#include <vector>

#include "lnd/error.hpp"
#include "lnd/groebner.hpp"
#include "lnd/kernel.hpp"
#include "lnd/presentation.hpp"

namespace lnd {

// Ideals of a presented ring are kept as reduced generator lists; the
// relations are added back whenever a Gröbner basis is needed.
inline std::vector<Polynomial> ideal_power(const std::vector<Polynomial>& gens, std::size_t n,
                                           const PresentedRing& ring) {
  std::vector<Polynomial> acc{ring.constant(Rational(1))};
  const std::vector<Polynomial> base = ring.reduce_all(gens);
  for (std::size_t k = 0; k < n; ++k) {
    std::vector<Polynomial> next;
    for (const Polynomial& a : acc)
      for (const Polynomial& g : base) {
        Polynomial p = ring.reduce(a * g);
        if (p.is_zero()) continue;
        if (std::find(next.begin(), next.end(), p) == next.end()) next.push_back(std::move(p));
      }
    acc = std::move(next);
  }
  return acc;
}

// (I^n + P : s^infinity), reduced modulo P. The saturating element s must lie
// outside I; whether it really isolates the I-primary part is diagnosed by
// rees_truncation, not proved.
inline std::vector<Polynomial> symbolic_power(const std::vector<Polynomial>& gens, std::size_t n,
                                              const Polynomial& s, const PresentedRing& ring,
                                              const Limits& limits = {}) {
  if (ring.member(s, gens, limits)) throw InvalidArgument("invalid saturator: s lies in the ideal");
  if (n == 0) return {ring.constant(Rational(1))};
  const Ideal sat = saturation(ring.lift(ideal_power(gens, n, ring)), ring.reduce(s), limits);
  return ring.reduce_all(sat.nonzero_generators());
}

struct ReesData {
  PresentedRing base;
  std::vector<Polynomial> ideal;
  std::size_t truncation = 0;
  // pieces[k] generates I^(k); pieces[0] is the unit ideal.
  std::vector<std::vector<Polynomial>> pieces;
  Polynomial saturator;
  // Failed structural checks; empty when the saturator behaved.
  std::vector<std::string> diagnostics;
  std::size_t checks_run = 0;

  bool sound() const { return diagnostics.empty(); }
};

// Pieces I^(0..n) plus the checks I^k in I^(k), I^(1) = I and
// I^(a) I^(b) in I^(a+b) for a + b <= n.
inline ReesData rees_truncation(const std::vector<Polynomial>& gens, std::size_t n, const Polynomial& s,
                                const PresentedRing& ring, const Limits& limits = {}) {
  ReesData rd;
  rd.base = ring;
  rd.ideal = ring.reduce_all(gens);
  rd.truncation = n;
  rd.saturator = ring.reduce(s);
  for (std::size_t k = 0; k <= n; ++k) rd.pieces.push_back(symbolic_power(rd.ideal, k, s, ring, limits));

  std::vector<GroebnerBasis> gbs;
  for (const auto& piece : rd.pieces) gbs.push_back(groebner(ring.lift(piece), limits));
  const std::string unsound = "saturator unsound for this ideal: ";
  for (std::size_t k = 1; k <= n; ++k) {
    for (const Polynomial& g : ideal_power(rd.ideal, k, ring)) {
      ++rd.checks_run;
      if (!basis_contains(gbs[k], g))
        rd.diagnostics.push_back(unsound + "I^" + std::to_string(k) + " not inside I^(" + std::to_string(k) + ")");
    }
  }
  if (n >= 1) {
    ++rd.checks_run;
    if (!ideal_equal(ring.lift(rd.pieces[1]), ring.lift(rd.ideal), limits))
      rd.diagnostics.push_back(unsound + "I^(1) differs from I");
  }
  for (std::size_t a = 1; a <= n; ++a)
    for (std::size_t b = a; a + b <= n; ++b)
      for (const Polynomial& f : rd.pieces[a])
        for (const Polynomial& g : rd.pieces[b]) {
          ++rd.checks_run;
          if (!basis_contains(gbs[a + b], f * g))
            rd.diagnostics.push_back(unsound + "I^(" + std::to_string(a) + ")*I^(" + std::to_string(b) +
                                     ") not inside I^(" + std::to_string(a + b) + ")");
        }
  return rd;
}

struct ReesPlacement {
  Polynomial generator;
  std::optional<std::size_t> degree;  // grading degree when homogeneous
  bool placed = false;
  std::string detail;
};

struct ReesComparison {
  bool consistent = true;
  std::vector<ReesPlacement> placements;
};

// Each kernel generator must be homogeneous of some degree i in the grading
// variables with every coefficient (moved to the base ring by variable name)
// in I^(i).
inline ReesComparison compare_kernel_to_rees(const KernelReport& k, const ReesData& rd,
                                             const std::vector<std::string>& grading, const Limits& limits = {}) {
  ReesComparison out;
  std::vector<std::optional<GroebnerBasis>> gbs(rd.pieces.size());
  for (const Polynomial& g : k.generators) {
    ReesPlacement p{g, std::nullopt, false, ""};
    const Context& ctx = g.context();
    std::vector<std::size_t> gv;
    for (const std::string& name : grading) {
      auto idx = ctx->index_of(name);
      if (!idx) throw VariableMismatch("grading variable '" + name + "' is not in the kernel's ring");
      gv.push_back(*idx);
    }
    // Split g by its exponents in the grading variables.
    std::map<std::vector<Exponent>, std::vector<Term>> parts;
    for (const Term& t : g.terms()) {
      std::vector<Exponent> key;
      Monomial rest = t.monomial;
      for (std::size_t v : gv) {
        key.push_back(t.monomial[v]);
        rest.set(v, 0);
      }
      parts[key].push_back({rest, t.coeff});
    }
    std::optional<std::size_t> degree;
    bool homogeneous = true;
    for (const auto& [key, terms] : parts) {
      std::size_t dk = 0;
      for (Exponent e : key) dk += e;
      if (degree && *degree != dk) homogeneous = false;
      degree = dk;
    }
    if (!homogeneous) {
      p.detail = "not homogeneous in the grading variables";
    } else if (*degree > rd.truncation) {
      p.degree = degree;
      p.detail = "grading degree exceeds the truncation";
    } else {
      p.degree = degree;
      if (!gbs[*degree]) gbs[*degree] = groebner(rd.base.lift(rd.pieces[*degree]), limits);
      p.placed = true;
      for (const auto& [key, terms] : parts) {
        Polynomial coeff = Polynomial::from_terms(ctx, terms);
        Polynomial in_base;
        try {
          in_base = coeff.rename_by_name(rd.base.context());
        } catch (const VariableMismatch&) {
          p.placed = false;
          p.detail = "coefficient " + coeff.to_string() + " is not a base element";
          break;
        }
        if (!basis_contains(*gbs[*degree], in_base)) {
          p.placed = false;
          p.detail = "coefficient " + coeff.to_string() + " is not in I^(" + std::to_string(*degree) + ")";
          break;
        }
      }
      if (p.placed) p.detail = "piece " + std::to_string(*degree);
    }
    out.consistent = out.consistent && p.placed;
    out.placements.push_back(std::move(p));
  }
  return out;
}

}  // namespace lnd
