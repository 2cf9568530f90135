#pragma once

#include <cstddef>
#include <optional>
#include <string>
#include <utility>
#include <vector>

#include "lnd/division.hpp"
#include "lnd/error.hpp"
#include "lnd/gcd.hpp"
#include "lnd/groebner.hpp"
#include "lnd/polynomial.hpp"
#include "lnd/presentation.hpp"

namespace lnd {

// A derivation of a presented ring, given by the images of the ambient
// variables and extended by the Leibniz rule. With a subalgebra domain it is
// the restriction of that derivation to the subalgebra; D(B)B, kernels and
// slices are then taken inside the subalgebra.
class Derivation {
 public:
  Derivation() = default;

  Derivation(PresentedRing ring, std::vector<Polynomial> images, std::optional<Subalgebra> domain = std::nullopt)
      : ring_(std::move(ring)), domain_(std::move(domain)) {
    if (images.size() != ring_.nvars()) throw InvalidArgument("derivation needs one image per variable");
    for (const Polynomial& p : images) images_.push_back(ring_.reduce(p));
    if (domain_ && !domain_->ambient().context()->same_variables(*ring_.context()))
      throw VariableMismatch("subalgebra domain lives in another ring");
  }

  // Images by variable name; unlisted variables map to zero.
  static Derivation from_images(const PresentedRing& ring, const std::vector<std::pair<std::string, Polynomial>>& map,
                                std::optional<Subalgebra> domain = std::nullopt) {
    std::vector<Polynomial> images(ring.nvars(), Polynomial(ring.context()));
    std::vector<bool> seen(ring.nvars(), false);
    for (const auto& [name, image] : map) {
      auto idx = ring.context()->index_of(name);
      if (!idx) throw VariableMismatch("derivation image for unknown variable '" + name + "'");
      if (seen[*idx]) throw InvalidArgument("variable '" + name + "' has two images");
      seen[*idx] = true;
      images[*idx] = image;
    }
    return Derivation(ring, std::move(images), std::move(domain));
  }

  const PresentedRing& ring() const noexcept { return ring_; }
  const std::vector<Polynomial>& images() const noexcept { return images_; }
  const std::optional<Subalgebra>& domain() const noexcept { return domain_; }
  bool on_subalgebra() const noexcept { return domain_.has_value(); }

  bool is_zero() const {
    for (const Polynomial& p : images_)
      if (!p.is_zero()) return false;
    return true;
  }

  Polynomial apply(const Polynomial& f) const {
    if (!f.context()->same_variables(*ring_.context()))
      throw VariableMismatch("derivation applied to an element of another ring");
    Polynomial acc(ring_.context());
    for (std::size_t v = 0; v < images_.size(); ++v) {
      if (images_[v].is_zero() || !f.involves(v)) continue;
      acc = acc + images_[v] * f.derivative(v).in_context(ring_.context());
    }
    return ring_.reduce(acc);
  }

  Polynomial iterate(const Polynomial& f, std::size_t m) const {
    Polynomial g = ring_.reduce(f);
    for (std::size_t k = 0; k < m && !g.is_zero(); ++k) g = apply(g);
    return g;
  }

  // Algebra generators of the domain: the variables, or the subalgebra's
  // generators.
  std::vector<Polynomial> domain_generators() const {
    if (domain_) return domain_->generators();
    std::vector<Polynomial> out;
    for (std::size_t v = 0; v < ring_.nvars(); ++v) out.push_back(ring_.variable(v));
    return out;
  }

  // D applied to the domain generators; they generate D(B)B as an ideal of B.
  std::vector<Polynomial> generator_images() const {
    std::vector<Polynomial> out;
    for (const Polynomial& g : domain_generators()) out.push_back(apply(g));
    return out;
  }

  // The ring where ideals of the domain are computed: the ring itself, or the
  // subalgebra's presentation Q[T]/J.
  const PresentedRing& domain_ring() const { return domain_ ? domain_->presentation() : ring_; }

  Polynomial to_domain(const Polynomial& f) const { return domain_ ? domain_->to_presentation(f) : ring_.reduce(f); }
  Polynomial from_domain(const Polynomial& e) const { return domain_ ? domain_->evaluate(e) : ring_.reduce(e); }

 private:
  PresentedRing ring_;
  std::vector<Polynomial> images_;
  std::optional<Subalgebra> domain_;
};

struct WellDefinedResult {
  bool well_defined = true;
  std::optional<Polynomial> failing_relation;  // p with D(p) outside P
  std::optional<std::pair<Polynomial, Polynomial>> zero_divisors;  // visible non-domain evidence
};

// D(p) in P for every relation generator, plus the best-effort domain check.
inline WellDefinedResult check_well_defined(const Derivation& d) {
  WellDefinedResult out;
  for (const Polynomial& p : d.ring().relations().elements()) {
    if (!d.apply(p).is_zero()) {
      out.well_defined = false;
      out.failing_relation = p;
      return out;
    }
  }
  if (auto zd = d.ring().zero_divisor_pair()) {
    out.well_defined = false;
    out.zero_divisors = std::move(zd);
  }
  return out;
}

struct NilpotencyCertificate {
  bool certified = false;
  std::size_t bound = 0;
  // Least m with D^m(x) = 0 for each ambient variable; empty when not reached.
  std::vector<std::optional<std::size_t>> orders;
};

// 1 + sum over variables of (degree of the image + 1); zero images count 0.
inline std::size_t default_nilpotency_bound(const Derivation& d) {
  std::size_t b = 1;
  for (const Polynomial& p : d.images())
    if (!p.is_zero()) b += static_cast<std::size_t>(p.total_degree()) + 1;
  return b;
}

// Sound one way: certified means every variable dies, so D is locally
// nilpotent. Not certified only means "not within this bound".
inline NilpotencyCertificate certify_nilpotent(const Derivation& d, std::size_t bound) {
  if (bound < 1) throw InvalidArgument("nilpotency bound must be at least 1");
  NilpotencyCertificate cert;
  cert.bound = bound;
  cert.certified = true;
  for (std::size_t v = 0; v < d.ring().nvars(); ++v) {
    Polynomial g = d.ring().variable(v);
    std::optional<std::size_t> order;
    for (std::size_t m = 1; m <= bound; ++m) {
      g = d.apply(g);
      if (g.is_zero()) {
        order = m;
        break;
      }
    }
    if (!order) cert.certified = false;
    cert.orders.push_back(order);
  }
  return cert;
}

struct RestrictionResult {
  bool restricts = true;
  std::optional<Polynomial> generator;  // a generator g with D(g) outside A
};

inline RestrictionResult restricts_to(const Derivation& d, const Subalgebra& a) {
  if (!a.ambient().context()->same_variables(*d.ring().context()))
    throw VariableMismatch("subalgebra is not inside the derivation's ring");
  for (const Polynomial& g : a.generators())
    if (!a.contains(d.apply(g))) return {false, g};
  return {};
}

struct IrreducibilityResult {
  bool irreducible = false;
  Polynomial common_divisor;  // monic gcd of the images
};

// Over a polynomial ring: D is irreducible iff the images have unit gcd.
inline IrreducibilityResult irreducible_over_ufd(const Derivation& d) {
  if (!d.ring().is_polynomial_ring())
    throw Unsupported("irreducibility via gcd needs a polynomial ring; use contained_in_principal");
  if (d.on_subalgebra())
    throw Unsupported("irreducibility via gcd is not available on a subalgebra; use contained_in_principal");
  Polynomial g(d.ring().context());
  for (const Polynomial& p : d.images()) {
    g = gcd(g, p);
    if (g.is_one()) break;
  }
  return {g.is_one(), g};
}

struct ContainmentResult {
  bool contained = true;
  std::optional<Polynomial> image;  // first image outside bB
};

// Every generator image lies in b times the domain ring.
inline ContainmentResult contained_in_principal(const Derivation& d, const Polynomial& b0, const Limits& limits = {}) {
  const Polynomial b = d.ring().reduce(b0);
  if (b.is_zero()) throw InvalidArgument("contained_in_principal: b is zero in the ring");
  if (!d.on_subalgebra()) {
    for (const Polynomial& img : d.generator_images()) {
      if (img.is_zero()) continue;
      bool in = d.ring().is_polynomial_ring() ? divide_exact(img, b).has_value() : d.ring().member(img, {b}, limits);
      if (!in) return {false, img};
    }
    return {};
  }
  if (!d.ring().is_polynomial_ring())
    throw Unsupported("principal containment on a subalgebra of a quotient ring");
  const Subalgebra& a = *d.domain();
  if (!a.contains(b)) throw InvalidArgument("contained_in_principal: b is not in the subalgebra");
  for (const Polynomial& img : d.generator_images()) {
    if (img.is_zero()) continue;
    auto q = divide_exact(img, b);
    if (!q || !a.contains(*q)) return {false, img};
  }
  return {};
}

}  // namespace lnd
