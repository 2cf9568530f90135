#pragma once

#include <algorithm>
#include <cstddef>
#include <cstdint>
#include <optional>
#include <string>
#include <utility>
#include <vector>

#include "lnd/division.hpp"
#include "lnd/error.hpp"
#include "lnd/polynomial.hpp"

namespace lnd {

// Work budgets shared by every Gröbner-backed and linear-algebra operation.
struct Limits {
  std::size_t pair_budget = 1'000'000;  // S-pairs processed per Buchberger run
  std::size_t dim_budget = 5000;        // monomials/columns per linear system
};

// Finitely generated ideal. The zero ideal is the single generator 0.
class Ideal {
 public:
  Ideal() = default;
  Ideal(Context ctx, std::vector<Polynomial> gens) : ctx_(std::move(ctx)) {
    for (Polynomial& g : gens) {
      if (!g.context()->same_variables(*ctx_)) throw VariableMismatch("ideal generator from another ring");
      g = g.in_context(ctx_);
      if (!g.is_zero()) gens_.push_back(std::move(g));
    }
    if (gens_.empty()) gens_.push_back(Polynomial(ctx_));
  }

  static Ideal unit(const Context& ctx) { return Ideal(ctx, {Polynomial::constant(ctx, Rational(1))}); }
  static Ideal zero(const Context& ctx) { return Ideal(ctx, {}); }

  const Context& context() const noexcept { return ctx_; }
  const std::vector<Polynomial>& generators() const noexcept { return gens_; }
  bool is_zero_ideal() const { return gens_.size() == 1 && gens_.front().is_zero(); }

  std::vector<Polynomial> nonzero_generators() const {
    if (is_zero_ideal()) return {};
    return gens_;
  }

  friend Ideal operator+(const Ideal& a, const Ideal& b) {
    std::vector<Polynomial> gens = a.nonzero_generators();
    for (const Polynomial& g : b.nonzero_generators()) gens.push_back(g.in_context(a.ctx_));
    return Ideal(a.ctx_, std::move(gens));
  }

  friend Ideal operator*(const Ideal& a, const Ideal& b) {
    std::vector<Polynomial> gens;
    for (const Polynomial& f : a.nonzero_generators())
      for (const Polynomial& g : b.nonzero_generators()) gens.push_back(f * g);
    return Ideal(a.ctx_, std::move(gens));
  }

 private:
  Context ctx_;
  std::vector<Polynomial> gens_;
};

// A Gröbner basis under a fixed order. Reduced bases are monic, interreduced
// and sorted by increasing leading monomial.
class GroebnerBasis {
 public:
  GroebnerBasis() = default;
  GroebnerBasis(Context ctx, std::vector<Polynomial> elements, bool reduced)
      : ctx_(std::move(ctx)), elements_(std::move(elements)), reduced_(reduced) {}

  const Context& context() const noexcept { return ctx_; }
  const MonomialOrder& order() const { return ctx_->order(); }
  const std::vector<Polynomial>& elements() const noexcept { return elements_; }
  bool reduced() const noexcept { return reduced_; }
  bool is_unit() const { return elements_.size() == 1 && elements_.front().is_constant() && !elements_.front().is_zero(); }
  bool is_zero() const { return elements_.empty(); }

  Ideal ideal() const { return Ideal(ctx_, elements_); }

 private:
  Context ctx_;
  std::vector<Polynomial> elements_;
  bool reduced_ = false;
};

namespace detail {

// Full reduction of f by the polynomials basis[i] for i in `active`; every
// basis element must be monic.
inline Polynomial reduce_full(Polynomial p, const std::vector<Polynomial>& basis,
                              const std::vector<std::size_t>& active) {
  const Context ctx = p.context();
  std::vector<Term> rem;
  while (!p.is_zero()) {
    const Term& lt = p.leading_term();
    const Polynomial* divisor = nullptr;
    for (std::size_t idx : active) {
      const Monomial& lm = basis[idx].leading_monomial();
      if (lm.divides(lt.monomial)) {
        divisor = &basis[idx];
        break;
      }
    }
    if (divisor) {
      Monomial m = lt.monomial / divisor->leading_monomial();
      Rational c = -lt.coeff;
      p.add_scaled(*divisor, c, m);
    } else {
      rem.push_back(p.pop_leading());
    }
  }
  return Polynomial::from_terms(ctx, std::move(rem));
}

inline std::vector<std::size_t> all_indices(std::size_t n) {
  std::vector<std::size_t> v(n);
  for (std::size_t i = 0; i < n; ++i) v[i] = i;
  return v;
}

struct CriticalPair {
  std::size_t i;
  std::size_t j;
  Monomial lcm;
};

class Buchberger {
 public:
  Buchberger(Context ctx, const Limits& limits) : ctx_(std::move(ctx)), limits_(limits) {}

  std::vector<Polynomial> run(const std::vector<Polynomial>& input) {
    for (const Polynomial& f : input) {
      Polynomial h = reduce_full(f.in_context(ctx_), polys_, active_);
      if (h.is_zero()) continue;
      if (add(std::move(h))) return unit();
    }
    std::size_t processed = 0;
    while (!pairs_.empty()) {
      if (++processed > limits_.pair_budget)
        throw BudgetExceeded("Gröbner pair budget of " + std::to_string(limits_.pair_budget) + " exceeded");
      CriticalPair p = take_pair();
      Polynomial s = s_polynomial(polys_[p.i], polys_[p.j], p.lcm);
      Polynomial h = reduce_full(std::move(s), polys_, active_);
      if (h.is_zero()) continue;
      if (add(std::move(h))) return unit();
    }
    return finalize();
  }

 private:
  std::vector<Polynomial> unit() const { return {Polynomial::constant(ctx_, Rational(1))}; }

  static Polynomial s_polynomial(const Polynomial& f, const Polynomial& g, const Monomial& l) {
    Polynomial s = f.mul_term(l / f.leading_monomial(), Rational(1));
    s.add_scaled(g, Rational(-1), l / g.leading_monomial());
    return s;
  }

  // Normal selection strategy: smallest lcm degree, ties by the monomial order.
  CriticalPair take_pair() {
    std::size_t best = 0;
    const MonomialOrder& ord = ctx_->order();
    for (std::size_t k = 1; k < pairs_.size(); ++k) {
      const Monomial& a = pairs_[k].lcm;
      const Monomial& b = pairs_[best].lcm;
      if (a.degree() < b.degree() || (a.degree() == b.degree() && ord.compare(a, b) < 0)) best = k;
    }
    CriticalPair p = std::move(pairs_[best]);
    pairs_[best] = std::move(pairs_.back());
    pairs_.pop_back();
    return p;
  }

  // Gebauer–Möller update with the new element h. Returns true on a unit.
  bool add(Polynomial h) {
    h = h.monic();
    if (h.is_constant()) return true;
    const std::size_t hi = polys_.size();
    polys_.push_back(std::move(h));
    const Monomial& lh = polys_[hi].leading_monomial();

    struct Cand {
      std::size_t g;
      Monomial lcm;
      bool coprime;
      bool alive = true;
    };
    std::vector<Cand> cands;
    cands.reserve(active_.size());
    for (std::size_t g : active_) {
      const Monomial& lg = polys_[g].leading_monomial();
      cands.push_back({g, lcm(lh, lg), lh.coprime(lg)});
    }
    // Chain criterion among the new pairs; among equal lcms exactly one survives.
    std::vector<bool> kept(cands.size(), false);
    for (std::size_t a = 0; a < cands.size(); ++a) {
      if (cands[a].coprime) {
        kept[a] = true;
        continue;
      }
      bool dominated = false;
      for (std::size_t b = 0; b < cands.size() && !dominated; ++b) {
        if (b == a) continue;
        bool still_in_c = b > a;  // later candidates are still unprocessed
        if (!still_in_c && !kept[b]) continue;
        if (cands[b].lcm.divides(cands[a].lcm)) dominated = true;
      }
      kept[a] = !dominated;
    }
    // Old pairs whose lcm is divisible by lm(h) with distinct lcms are redundant.
    std::vector<CriticalPair> next;
    next.reserve(pairs_.size() + cands.size());
    for (CriticalPair& p : pairs_) {
      bool drop = lh.divides(p.lcm) &&
                  !(lcm(polys_[p.i].leading_monomial(), lh) == p.lcm) &&
                  !(lcm(polys_[p.j].leading_monomial(), lh) == p.lcm);
      if (!drop) next.push_back(std::move(p));
    }
    for (std::size_t a = 0; a < cands.size(); ++a)
      if (kept[a] && !cands[a].coprime) next.push_back({cands[a].g, hi, std::move(cands[a].lcm)});
    pairs_ = std::move(next);

    std::vector<std::size_t> act;
    act.reserve(active_.size() + 1);
    for (std::size_t g : active_)
      if (!lh.divides(polys_[g].leading_monomial())) act.push_back(g);
    act.push_back(hi);
    active_ = std::move(act);
    return false;
  }

  std::vector<Polynomial> finalize() {
    std::vector<Polynomial> minimal;
    for (std::size_t g : active_) minimal.push_back(polys_[g]);
    std::vector<Polynomial> reduced;
    reduced.reserve(minimal.size());
    for (std::size_t k = 0; k < minimal.size(); ++k) {
      std::vector<std::size_t> others;
      for (std::size_t o = 0; o < minimal.size(); ++o)
        if (o != k) others.push_back(o);
      Polynomial lead = Polynomial::term(ctx_, minimal[k].leading_monomial(), Rational(1));
      Polynomial tail = minimal[k] - lead;
      reduced.push_back(lead + reduce_full(std::move(tail), minimal, others));
    }
    const MonomialOrder& ord = ctx_->order();
    std::sort(reduced.begin(), reduced.end(), [&](const Polynomial& a, const Polynomial& b) {
      return ord.compare(a.leading_monomial(), b.leading_monomial()) < 0;
    });
    return reduced;
  }

  Context ctx_;
  Limits limits_;
  std::vector<Polynomial> polys_;
  std::vector<std::size_t> active_;
  std::vector<CriticalPair> pairs_;
};

inline std::string fresh_name(const std::vector<std::string>& taken, const std::string& base) {
  std::string name = base;
  for (int k = 0; std::find(taken.begin(), taken.end(), name) != taken.end(); ++k)
    name = base + std::to_string(k);
  return name;
}

}  // namespace detail

// Reduced Gröbner basis of I under `order`.
inline GroebnerBasis buchberger(const Ideal& ideal, const MonomialOrder& order, const Limits& limits = {}) {
  const Context ctx = with_order(ideal.context(), order);
  std::vector<Polynomial> input;
  for (const Polynomial& g : ideal.nonzero_generators()) input.push_back(g.in_context(ctx));
  // Low-degree generators first keeps the pair queue small.
  std::stable_sort(input.begin(), input.end(), [&](const Polynomial& a, const Polynomial& b) {
    return order.compare(a.leading_monomial(), b.leading_monomial()) < 0;
  });
  detail::Buchberger engine(ctx, limits);
  return GroebnerBasis(ctx, engine.run(input), true);
}

inline Polynomial normal_form(const Polynomial& f, const GroebnerBasis& basis) {
  if (!f.context()->same_variables(*basis.context()))
    throw VariableMismatch("normal_form: polynomial and basis live in different rings");
  if (!basis.reduced()) throw InvalidArgument("normal_form: basis is not reduced");
  return detail::reduce_full(f.in_context(basis.context()), basis.elements(),
                             detail::all_indices(basis.elements().size()));
}

inline bool basis_contains(const GroebnerBasis& basis, const Polynomial& f) {
  return normal_form(f, basis).is_zero();
}

// Buchberger's criterion: every S-polynomial reduces to zero.
inline bool is_groebner(const GroebnerBasis& basis) {
  const auto& el = basis.elements();
  const auto idx = detail::all_indices(el.size());
  std::vector<Polynomial> monic;
  for (const Polynomial& p : el) {
    if (p.is_zero()) return false;
    monic.push_back(p.monic());
  }
  for (std::size_t i = 0; i < monic.size(); ++i)
    for (std::size_t j = i + 1; j < monic.size(); ++j) {
      const Monomial l = lcm(monic[i].leading_monomial(), monic[j].leading_monomial());
      Polynomial s = monic[i].mul_term(l / monic[i].leading_monomial(), Rational(1));
      s.add_scaled(monic[j], Rational(-1), l / monic[j].leading_monomial());
      if (!detail::reduce_full(std::move(s), monic, idx).is_zero()) return false;
    }
  return true;
}

// Reducedness: monic, and no term of any element divisible by another's lm.
inline bool is_reduced_basis(const GroebnerBasis& basis) {
  const auto& el = basis.elements();
  for (std::size_t i = 0; i < el.size(); ++i) {
    if (el[i].is_zero() || !el[i].leading_coefficient().is_one()) return false;
    for (std::size_t j = 0; j < el.size(); ++j) {
      if (i == j) continue;
      for (const Term& t : el[j].terms())
        if (el[i].leading_monomial().divides(t.monomial)) return false;
    }
  }
  return true;
}

// Gröbner basis under the ideal's own context order.
inline GroebnerBasis groebner(const Ideal& ideal, const Limits& limits = {}) {
  return buchberger(ideal, ideal.context()->order(), limits);
}

inline bool ideal_member(const Polynomial& f, const Ideal& ideal, const Limits& limits = {}) {
  return basis_contains(groebner(ideal, limits), f);
}

// J ⊆ basis's ideal, generator by generator.
inline bool ideal_contained(const Ideal& sub, const GroebnerBasis& basis) {
  for (const Polynomial& g : sub.nonzero_generators())
    if (!basis_contains(basis, g)) return false;
  return true;
}

inline bool ideal_equal(const Ideal& a, const Ideal& b, const Limits& limits = {}) {
  if (!a.context()->same_variables(*b.context())) throw VariableMismatch("ideal_equal: different rings");
  return ideal_contained(a, groebner(b, limits)) && ideal_contained(b, groebner(a, limits));
}

// Ideal over the variables that remain after dropping the first k, generated
// by I ∩ Q[x_{k+1}, ..., x_n].
inline Ideal eliminate(const Ideal& ideal, std::size_t first_k, const Limits& limits = {}) {
  const Context& ctx = ideal.context();
  if (first_k == 0 || first_k >= ctx->nvars())
    throw InvalidArgument("eliminate: need 0 < k < number of variables");
  GroebnerBasis gb = buchberger(ideal, MonomialOrder::block_elimination(first_k), limits);
  std::vector<std::string> rest(ctx->names().begin() + static_cast<std::ptrdiff_t>(first_k), ctx->names().end());
  const auto& w = ctx->order().weights();
  std::vector<std::uint64_t> rest_weights;
  for (std::size_t v = first_k; v < w.size(); ++v) rest_weights.push_back(w[v]);
  Context target = make_context(rest, MonomialOrder::grevlex().with_weights(rest_weights));
  std::vector<std::optional<std::size_t>> map(ctx->nvars());
  for (std::size_t v = first_k; v < ctx->nvars(); ++v) map[v] = v - first_k;
  std::vector<Polynomial> kept;
  for (const Polynomial& g : gb.elements()) {
    bool free = true;
    for (std::size_t v = 0; v < first_k && free; ++v) free = !g.involves(v);
    if (free) kept.push_back(g.rename(target, map));
  }
  return Ideal(target, std::move(kept));
}

// I ∩ J via t*I + (1 - t)*J eliminating t.
inline Ideal ideal_intersection(const Ideal& a, const Ideal& b, const Limits& limits = {}) {
  const Context& ctx = a.context();
  if (!ctx->same_variables(*b.context())) throw VariableMismatch("ideal_intersection: different rings");
  if (a.is_zero_ideal() || b.is_zero_ideal()) return Ideal::zero(ctx);
  std::vector<std::string> names{detail::fresh_name(ctx->names(), "t_")};
  names.insert(names.end(), ctx->names().begin(), ctx->names().end());
  std::vector<std::uint64_t> weights{1};
  const auto& w = ctx->order().weights();
  for (std::size_t v = 0; v < ctx->nvars(); ++v) weights.push_back(v < w.size() ? w[v] : 1);
  Context ext = make_context(names, MonomialOrder::block_elimination(1).with_weights(weights));
  std::vector<std::optional<std::size_t>> shift(ctx->nvars());
  for (std::size_t v = 0; v < ctx->nvars(); ++v) shift[v] = v + 1;
  const Polynomial t = Polynomial::variable(ext, 0);
  const Polynomial one_minus_t = Polynomial::constant(ext, Rational(1)) - t;
  std::vector<Polynomial> gens;
  for (const Polynomial& f : a.nonzero_generators()) gens.push_back(t * f.rename(ext, shift));
  for (const Polynomial& g : b.nonzero_generators()) gens.push_back(one_minus_t * g.rename(ext, shift));
  GroebnerBasis gb = buchberger(Ideal(ext, gens), ext->order(), limits);
  std::vector<std::optional<std::size_t>> back(ext->nvars());
  for (std::size_t v = 1; v < ext->nvars(); ++v) back[v] = v - 1;
  std::vector<Polynomial> kept;
  for (const Polynomial& g : gb.elements())
    if (!g.involves(0)) kept.push_back(g.rename(ctx, back));
  return Ideal(ctx, std::move(kept));
}

// (I : g) = { f : f*g ∈ I }, as (I ∩ (g)) / g.
inline Ideal ideal_quotient(const Ideal& ideal, const Polynomial& g, const Limits& limits = {}) {
  if (g.is_zero()) throw InvalidArgument("ideal_quotient: g = 0");
  const Context& ctx = ideal.context();
  if (ideal.is_zero_ideal()) return ideal;
  Ideal meet = ideal_intersection(ideal, Ideal(ctx, {g}), limits);
  std::vector<Polynomial> gens;
  for (const Polynomial& h : meet.nonzero_generators()) {
    auto q = divide_exact(h, g.in_context(ctx));
    if (!q) throw Error("internal: element of I ∩ (g) not divisible by g");
    gens.push_back(*q);
  }
  return Ideal(ctx, std::move(gens));
}

// (I : J) = ∩ (I : g) over generators g of J.
inline Ideal ideal_quotient(const Ideal& ideal, const Ideal& by, const Limits& limits = {}) {
  auto gens = by.nonzero_generators();
  if (gens.empty()) throw InvalidArgument("ideal_quotient: quotient by the zero ideal");
  Ideal acc = ideal_quotient(ideal, gens.front(), limits);
  for (std::size_t k = 1; k < gens.size(); ++k)
    acc = ideal_intersection(acc, ideal_quotient(ideal, gens[k], limits), limits);
  return acc;
}

// (I : g^∞) by iterating quotients until the chain stabilizes.
inline Ideal saturation(const Ideal& ideal, const Polynomial& g, const Limits& limits = {}) {
  if (g.is_zero()) throw InvalidArgument("saturation: g = 0");
  Ideal current = ideal;
  GroebnerBasis current_gb = groebner(current, limits);
  while (true) {
    Ideal next = ideal_quotient(current_gb.ideal(), g, limits);
    if (ideal_contained(next, current_gb)) return current_gb.ideal();
    current_gb = groebner(next, limits);
  }
}

}  // namespace lnd
