#pragma once

#include <algorithm>
#include <cstddef>
#include <optional>
#include <string>
#include <utility>
#include <vector>

#include "lnd/division.hpp"
#include "lnd/error.hpp"
#include "lnd/gcd.hpp"
#include "lnd/groebner.hpp"
#include "lnd/linalg.hpp"
#include "lnd/polynomial.hpp"
#include "lnd/span.hpp"

namespace lnd {

// Q[x1..xn]/P with P held as a reduced Gröbner basis under the context order.
// An empty basis means the polynomial ring itself.
class PresentedRing {
 public:
  PresentedRing() = default;

  static PresentedRing polynomial(Context ctx) {
    PresentedRing r;
    r.ctx_ = std::move(ctx);
    r.relations_ = GroebnerBasis(r.ctx_, {}, true);
    return r;
  }

  static PresentedRing quotient(Context ctx, const std::vector<Polynomial>& relations, const Limits& limits = {}) {
    PresentedRing r;
    r.ctx_ = std::move(ctx);
    Ideal p(r.ctx_, relations);
    r.relations_ = p.is_zero_ideal() ? GroebnerBasis(r.ctx_, {}, true) : groebner(p, limits);
    if (r.relations_.is_unit()) throw InvalidArgument("quotient by the unit ideal is the zero ring");
    return r;
  }

  const Context& context() const noexcept { return ctx_; }
  std::size_t nvars() const noexcept { return ctx_->nvars(); }
  const GroebnerBasis& relations() const noexcept { return relations_; }
  bool is_polynomial_ring() const { return relations_.is_zero(); }

  Polynomial variable(std::size_t i) const { return Polynomial::variable(ctx_, i); }
  Polynomial constant(const Rational& c) const { return Polynomial::constant(ctx_, c); }

  // Canonical representative.
  Polynomial reduce(const Polynomial& f) const {
    if (!f.context()->same_variables(*ctx_)) throw VariableMismatch("element from another ring");
    if (is_polynomial_ring()) return f.in_context(ctx_);
    return normal_form(f, relations_);
  }

  bool is_zero(const Polynomial& f) const { return reduce(f).is_zero(); }

  // I + P in the ambient polynomial ring.
  Ideal lift(const std::vector<Polynomial>& gens) const {
    std::vector<Polynomial> all;
    for (const Polynomial& g : gens) all.push_back(g.in_context(ctx_));
    for (const Polynomial& p : relations_.elements()) all.push_back(p);
    return Ideal(ctx_, std::move(all));
  }

  bool member(const Polynomial& f, const std::vector<Polynomial>& gens, const Limits& limits = {}) const {
    return ideal_member(f.in_context(ctx_), lift(gens), limits);
  }

  // Normal-form monomials (not divisible by any leading monomial of P) of
  // degree <= d.
  std::vector<Monomial> standard_monomials(std::size_t d, std::size_t budget) const {
    std::vector<Monomial> out;
    for (Monomial& m : monomials_up_to(nvars(), d)) {
      bool standard = true;
      for (const Polynomial& p : relations_.elements())
        if (p.leading_monomial().divides(m)) {
          standard = false;
          break;
        }
      if (standard) out.push_back(std::move(m));
      check_dimension(out.size(), budget, "standard monomials");
    }
    return out;
  }

  // Best-effort search for visible zero divisors: a relation with a
  // non-unit content or a repeated factor splits as a*b with neither factor
  // in P. Finding none does not prove the ring is a domain.
  std::optional<std::pair<Polynomial, Polynomial>> zero_divisor_pair() const {
    for (const Polynomial& p : relations_.elements()) {
      for (std::size_t v = 0; v < nvars(); ++v) {
        if (!p.involves(v)) continue;
        std::vector<Polynomial> splits{content_in(p, v), gcd(p, p.derivative(v))};
        for (const Polynomial& a : splits) {
          if (a.is_constant()) continue;
          auto b = divide_exact(p, a);
          if (!b || b->is_constant()) continue;
          if (!is_zero(a) && !is_zero(*b)) return std::make_pair(reduce(a), reduce(*b));
        }
      }
    }
    return std::nullopt;
  }

  // Drop generators that vanish in the ring and reduce the rest.
  std::vector<Polynomial> reduce_all(const std::vector<Polynomial>& gens) const {
    std::vector<Polynomial> out;
    for (const Polynomial& g : gens) {
      Polynomial r = reduce(g);
      if (!r.is_zero()) out.push_back(std::move(r));
    }
    return out;
  }

 private:
  Context ctx_;
  GroebnerBasis relations_;
};

namespace detail {

inline std::vector<std::string> tag_names(const std::vector<std::string>& taken, std::size_t m) {
  for (const std::string prefix : {"T", "T_", "TT", "Tag_"}) {
    std::vector<std::string> names;
    bool clash = false;
    for (std::size_t i = 1; i <= m && !clash; ++i) {
      names.push_back(prefix + std::to_string(i));
      clash = std::find(taken.begin(), taken.end(), names.back()) != taken.end();
    }
    if (!clash) return names;
  }
  throw InvalidArgument("cannot choose tag variable names");
}

}  // namespace detail

// Q-subalgebra of a presented ring generated by finitely many elements.
//
// Membership goes through the tag ideal (T_i - g_i) + P in Q[x, T] under a
// block order that eliminates x; the tag block is weighted by the generator
// degrees, which keeps the basis small for non-homogeneous generators. The
// relations among the generators (tag basis restricted to Q[T]) present the
// subalgebra as Q[T]/J.
class Subalgebra {
 public:
  Subalgebra() = default;

  Subalgebra(PresentedRing ambient, std::vector<Polynomial> generators, const Limits& limits = {})
      : ambient_(std::move(ambient)) {
    if (generators.empty()) throw InvalidArgument("subalgebra needs at least one generator");
    for (const Polynomial& g : generators) {
      Polynomial r = ambient_.reduce(g);
      if (r.is_zero()) throw InvalidArgument("subalgebra generator is zero in the ambient ring");
      gens_.push_back(std::move(r));
    }
    const std::size_t n = ambient_.nvars(), m = gens_.size();
    std::vector<std::string> names = ambient_.context()->names();
    const std::vector<std::string> tags = detail::tag_names(names, m);
    names.insert(names.end(), tags.begin(), tags.end());

    std::vector<std::uint64_t> weights(n, 1);
    std::vector<std::uint64_t> tag_weights;
    for (const Polynomial& g : gens_)
      tag_weights.push_back(static_cast<std::uint64_t>(std::max<std::int64_t>(g.total_degree(), 1)));
    weights.insert(weights.end(), tag_weights.begin(), tag_weights.end());
    tag_ctx_ = make_context(names, MonomialOrder::block_elimination(n).with_weights(weights));

    std::vector<std::optional<std::size_t>> up(n);
    for (std::size_t v = 0; v < n; ++v) up[v] = v;
    std::vector<Polynomial> tag_gens;
    for (std::size_t i = 0; i < m; ++i)
      tag_gens.push_back(Polynomial::variable(tag_ctx_, n + i) - gens_[i].rename(tag_ctx_, up));
    for (const Polynomial& p : ambient_.relations().elements()) tag_gens.push_back(p.rename(tag_ctx_, up));
    tag_basis_ = groebner(Ideal(tag_ctx_, tag_gens), limits);

    Context pres_ctx = make_context(tags, MonomialOrder::grevlex().with_weights(tag_weights));
    std::vector<std::optional<std::size_t>> down(n + m);
    for (std::size_t i = 0; i < m; ++i) down[n + i] = i;
    std::vector<Polynomial> relations;
    for (const Polynomial& g : tag_basis_.elements())
      if (!involves_ambient(g)) relations.push_back(g.rename(pres_ctx, down));
    // Already a reduced basis under the restricted order.
    presentation_ = PresentedRing::quotient(pres_ctx, relations, limits);
  }

  const PresentedRing& ambient() const noexcept { return ambient_; }
  const std::vector<Polynomial>& generators() const noexcept { return gens_; }
  const GroebnerBasis& tag_basis() const noexcept { return tag_basis_; }
  // Q[T]/J with T_i standing for generator i.
  const PresentedRing& presentation() const noexcept { return presentation_; }
  // Generators of J (empty when the generators are algebraically independent).
  std::vector<Polynomial> presentation_ideal() const { return presentation_.relations().elements(); }

  // Expression of f in the tag variables when f lies in the subalgebra.
  std::optional<Polynomial> member(const Polynomial& f) const {
    const std::size_t n = ambient_.nvars(), m = gens_.size();
    std::vector<std::optional<std::size_t>> up(n);
    for (std::size_t v = 0; v < n; ++v) up[v] = v;
    Polynomial nf = normal_form(ambient_.reduce(f).rename(tag_ctx_, up), tag_basis_);
    if (involves_ambient(nf)) return std::nullopt;
    std::vector<std::optional<std::size_t>> down(n + m);
    for (std::size_t i = 0; i < m; ++i) down[n + i] = i;
    return presentation_.reduce(nf.rename(presentation_.context(), down));
  }

  bool contains(const Polynomial& f) const { return member(f).has_value(); }

  // Element of the presentation ring for an ambient member; throws otherwise.
  Polynomial to_presentation(const Polynomial& f) const {
    auto w = member(f);
    if (!w) throw InvalidArgument("element " + ambient_.reduce(f).to_string() + " is not in the subalgebra");
    return *w;
  }

  // Substitute the generators for the tags, reduced in the ambient ring.
  Polynomial evaluate(const Polynomial& expression) const {
    if (!expression.context()->same_variables(*presentation_.context()))
      throw VariableMismatch("expression is not in the tag variables");
    return ambient_.reduce(expression.substitute(gens_));
  }

  // Q-basis (echelon form) of the subalgebra's elements whose ambient normal
  // form has degree <= d. Exact: the tag normal form is linear, so membership
  // of a combination of monomials is a linear condition.
  std::vector<Polynomial> degree_piece(std::size_t d, const Limits& limits = {}) const {
    const std::vector<Monomial> mons = ambient_.standard_monomials(d, limits.dim_budget);
    const std::size_t n = ambient_.nvars();
    std::vector<std::optional<std::size_t>> up(n);
    for (std::size_t v = 0; v < n; ++v) up[v] = v;
    std::vector<Polynomial> residues;
    MonomialColumns rows(tag_ctx_->order());
    for (const Monomial& mon : mons) {
      Polynomial p = Polynomial::term(ambient_.context(), mon, Rational(1)).rename(tag_ctx_, up);
      Polynomial nf = normal_form(p, tag_basis_);
      std::vector<Term> outside;
      for (const Term& t : nf.terms())
        if (monomial_involves_ambient(t.monomial)) outside.push_back(t);
      residues.push_back(Polynomial::from_terms(tag_ctx_, std::move(outside)));
      rows.add(residues.back());
    }
    rows.freeze();
    check_dimension(rows.size(), limits.dim_budget, "subalgebra degree piece");
    Matrix mat(rows.size(), mons.size());
    for (std::size_t c = 0; c < mons.size(); ++c)
      for (const Term& t : residues[c].terms()) mat(rows.index(t.monomial), c) = t.coeff;
    std::vector<Polynomial> elements;
    for (const auto& v : nullspace(mat)) {
      std::vector<Term> terms;
      for (std::size_t c = 0; c < mons.size(); ++c)
        if (!v[c].is_zero()) terms.push_back({mons[c], v[c]});
      elements.push_back(Polynomial::from_terms(ambient_.context(), std::move(terms)));
    }
    return echelon_basis(elements, ambient_.context());
  }

 private:
  bool monomial_involves_ambient(const Monomial& m) const {
    for (std::size_t v = 0; v < ambient_.nvars(); ++v)
      if (m[v] != 0) return true;
    return false;
  }
  bool involves_ambient(const Polynomial& p) const {
    for (const Term& t : p.terms())
      if (monomial_involves_ambient(t.monomial)) return true;
    return false;
  }

  PresentedRing ambient_;
  std::vector<Polynomial> gens_;
  Context tag_ctx_;
  GroebnerBasis tag_basis_;
  PresentedRing presentation_;
};

inline Subalgebra present_subalgebra(const PresentedRing& ambient, const std::vector<Polynomial>& gens,
                                     const Limits& limits = {}) {
  return Subalgebra(ambient, gens, limits);
}

struct MembershipResult {
  bool member = false;
  std::optional<Polynomial> witness;  // expression in the tag variables
};

inline MembershipResult subalgebra_member(const Polynomial& f, const Subalgebra& a) {
  auto w = a.member(f);
  return {w.has_value(), std::move(w)};
}

struct NzdResult {
  bool regular = false;
  // When not regular: h outside I + P with h*g inside.
  std::optional<Polynomial> witness;
};

// Is g a nonzerodivisor on ring/(I)? Throws Degenerate when g is zero there.
inline NzdResult nzd_test(const Polynomial& g, const std::vector<Polynomial>& mod_ideal, const PresentedRing& ring,
                          const Limits& limits = {}) {
  const Ideal base = ring.lift(mod_ideal);
  const GroebnerBasis base_gb = groebner(base, limits);
  if (base_gb.is_unit()) throw Degenerate("nzd_test: the ideal is the whole ring");
  const Polynomial gg = g.in_context(ring.context());
  if (basis_contains(base_gb, gg)) throw Degenerate("nzd_test: element is zero modulo the ideal");
  const Ideal quot = ideal_quotient(base, gg, limits);
  for (const Polynomial& h : quot.nonzero_generators()) {
    Polynomial r = normal_form(h, base_gb);
    if (!r.is_zero()) return {false, r.in_context(ring.context())};
  }
  return {true, std::nullopt};
}

}  // namespace lnd
