#pragma once

#include <algorithm>
#include <cstddef>
#include <cstdint>
#include <memory>
#include <optional>
#include <ostream>
#include <string>
#include <utility>
#include <vector>

#include "lnd/error.hpp"
#include "lnd/monomial.hpp"
#include "lnd/rational.hpp"

namespace lnd {

// Variable names plus the active monomial order. Shared by every polynomial
// living in the same ring; immutable.
class PolyContext {
 public:
  PolyContext(std::vector<std::string> names, MonomialOrder order)
      : names_(std::move(names)), order_(std::move(order)) {}

  const std::vector<std::string>& names() const noexcept { return names_; }
  std::size_t nvars() const noexcept { return names_.size(); }
  const MonomialOrder& order() const noexcept { return order_; }

  std::optional<std::size_t> index_of(const std::string& name) const {
    auto it = std::find(names_.begin(), names_.end(), name);
    if (it == names_.end()) return std::nullopt;
    return static_cast<std::size_t>(it - names_.begin());
  }

  bool same_variables(const PolyContext& other) const { return names_ == other.names_; }

 private:
  std::vector<std::string> names_;
  MonomialOrder order_;
};

using Context = std::shared_ptr<const PolyContext>;

inline Context make_context(std::vector<std::string> names,
                            MonomialOrder order = MonomialOrder::grevlex()) {
  return std::make_shared<const PolyContext>(std::move(names), std::move(order));
}

inline Context with_order(const Context& ctx, const MonomialOrder& order) {
  if (ctx->order() == order) return ctx;
  return make_context(ctx->names(), order);
}

struct Term {
  Monomial monomial;
  Rational coeff;

  friend bool operator==(const Term&, const Term&) = default;
};

// Sparse multivariate polynomial over Q. Terms are kept sorted in decreasing
// order under the context's monomial order; no stored coefficient is zero.
class Polynomial {
 public:
  Polynomial() = default;
  explicit Polynomial(Context ctx) : ctx_(std::move(ctx)) {}

  static Polynomial constant(Context ctx, const Rational& c) {
    Polynomial p(std::move(ctx));
    if (!c.is_zero()) p.terms_.push_back({Monomial(p.nvars()), c});
    return p;
  }

  static Polynomial variable(Context ctx, std::size_t index) {
    Polynomial p(std::move(ctx));
    if (index >= p.nvars()) throw InvalidArgument("variable index out of range");
    p.terms_.push_back({Monomial::variable(p.nvars(), index), Rational(1)});
    return p;
  }

  static Polynomial variable(Context ctx, const std::string& name) {
    auto idx = ctx->index_of(name);
    if (!idx) throw VariableMismatch("unknown variable '" + name + "'");
    return variable(std::move(ctx), *idx);
  }

  static Polynomial term(Context ctx, Monomial m, const Rational& c) {
    Polynomial p(std::move(ctx));
    if (m.size() != p.nvars()) throw VariableMismatch("monomial length does not match variable count");
    if (!c.is_zero()) p.terms_.push_back({std::move(m), c});
    return p;
  }

  // Canonicalizes an arbitrary term list (merges duplicates, drops zeros, sorts).
  static Polynomial from_terms(Context ctx, std::vector<Term> terms) {
    Polynomial p(std::move(ctx));
    for (const Term& t : terms)
      if (t.monomial.size() != p.nvars()) throw VariableMismatch("monomial length does not match variable count");
    p.terms_ = std::move(terms);
    p.canonicalize();
    return p;
  }

  const Context& context() const noexcept { return ctx_; }
  std::size_t nvars() const noexcept { return ctx_ ? ctx_->nvars() : 0; }
  const MonomialOrder& order() const { return ctx_->order(); }
  const std::vector<Term>& terms() const noexcept { return terms_; }
  std::size_t size() const noexcept { return terms_.size(); }

  bool is_zero() const noexcept { return terms_.empty(); }
  bool is_constant() const noexcept { return terms_.empty() || (terms_.size() == 1 && terms_[0].monomial.is_one()); }
  bool is_one() const { return terms_.size() == 1 && terms_[0].monomial.is_one() && terms_[0].coeff.is_one(); }

  const Term& leading_term() const {
    if (terms_.empty()) throw InvalidArgument("zero polynomial has no leading term");
    return terms_.front();
  }
  const Monomial& leading_monomial() const { return leading_term().monomial; }
  const Rational& leading_coefficient() const { return leading_term().coeff; }

  // Removes and returns the leading term.
  Term pop_leading() {
    Term t = std::move(terms_.front());
    terms_.erase(terms_.begin());
    return t;
  }

  Rational constant_term() const {
    if (!terms_.empty() && terms_.back().monomial.is_one()) return terms_.back().coeff;
    return Rational(0);
  }

  // Total degree; -1 for the zero polynomial.
  std::int64_t total_degree() const {
    std::int64_t d = -1;
    for (const Term& t : terms_) d = std::max<std::int64_t>(d, static_cast<std::int64_t>(t.monomial.degree()));
    return d;
  }

  std::int64_t degree_in(std::size_t var) const {
    std::int64_t d = -1;
    for (const Term& t : terms_) d = std::max<std::int64_t>(d, t.monomial[var]);
    return d;
  }

  // Which variables occur with a nonzero exponent.
  std::vector<bool> support() const {
    std::vector<bool> used(nvars(), false);
    for (const Term& t : terms_)
      for (std::size_t i = 0; i < nvars(); ++i)
        if (t.monomial[i] != 0) used[i] = true;
    return used;
  }

  bool involves(std::size_t var) const {
    for (const Term& t : terms_)
      if (t.monomial[var] != 0) return true;
    return false;
  }

  // Same variables, re-sorted under another context's order.
  Polynomial in_context(const Context& ctx) const {
    if (ctx == ctx_) return *this;
    if (!ctx->same_variables(*ctx_)) throw VariableMismatch("variable-set mismatch");
    Polynomial p(ctx);
    p.terms_ = terms_;
    if (!(ctx->order() == ctx_->order())) p.sort_terms();
    return p;
  }

  Polynomial in_order(const MonomialOrder& order) const { return in_context(with_order(ctx_, order)); }

  Polynomial operator-() const {
    Polynomial p = *this;
    for (Term& t : p.terms_) t.coeff = -t.coeff;
    return p;
  }

  Polynomial& operator+=(const Polynomial& g) { return add_scaled(g, Rational(1), Monomial(nvars())); }
  Polynomial& operator-=(const Polynomial& g) { return add_scaled(g, Rational(-1), Monomial(nvars())); }
  Polynomial& operator*=(const Polynomial& g) { return *this = *this * g; }

  friend Polynomial operator+(Polynomial f, const Polynomial& g) { return f += g; }
  friend Polynomial operator-(Polynomial f, const Polynomial& g) { return f -= g; }

  friend Polynomial operator*(const Polynomial& f, const Polynomial& g0) {
    f.check_compatible(g0);
    const Polynomial g = g0.in_context(f.ctx_);
    Polynomial r(f.ctx_);
    if (f.is_zero() || g.is_zero()) return r;
    const Polynomial& small = f.size() <= g.size() ? f : g;
    const Polynomial& big = f.size() <= g.size() ? g : f;
    for (const Term& t : small.terms_) r.add_scaled(big, t.coeff, t.monomial);
    return r;
  }

  friend Polynomial operator*(Polynomial f, const Rational& c) {
    if (c.is_zero()) {
      f.terms_.clear();
      return f;
    }
    for (Term& t : f.terms_) t.coeff *= c;
    return f;
  }
  friend Polynomial operator*(const Rational& c, Polynomial f) { return std::move(f) * c; }

  Polynomial mul_term(const Monomial& m, const Rational& c) const {
    Polynomial r(ctx_);
    if (c.is_zero()) return r;
    r.terms_.reserve(terms_.size());
    for (const Term& t : terms_) r.terms_.push_back({t.monomial * m, t.coeff * c});
    return r;
  }

  Polynomial pow(std::uint64_t n) const {
    Polynomial result = constant(ctx_, Rational(1));
    Polynomial base = *this;
    while (n > 0) {
      if (n & 1U) result = result * base;
      n >>= 1U;
      if (n > 0) base = base * base;
    }
    return result;
  }

  // this += c * m * g, merging in place.
  Polynomial& add_scaled(const Polynomial& g0, const Rational& c, const Monomial& m) {
    check_compatible(g0);
    if (c.is_zero() || g0.is_zero()) return *this;
    const Polynomial* gp = &g0;
    Polynomial converted;
    if (g0.ctx_ != ctx_ && !(g0.ctx_->order() == ctx_->order())) {
      converted = g0.in_context(ctx_);
      gp = &converted;
    }
    const std::vector<Term>& gt = gp->terms_;
    const MonomialOrder& ord = ctx_->order();
    std::vector<Term> out;
    out.reserve(terms_.size() + gt.size());
    std::size_t i = 0, j = 0;
    const bool unit = m.is_one();
    while (i < terms_.size() || j < gt.size()) {
      if (j == gt.size()) {
        out.push_back(std::move(terms_[i++]));
        continue;
      }
      Monomial gm = unit ? gt[j].monomial : gt[j].monomial * m;
      if (i == terms_.size()) {
        out.push_back({std::move(gm), gt[j].coeff * c});
        ++j;
        continue;
      }
      int cmp = ord.compare(terms_[i].monomial, gm);
      if (cmp > 0) {
        out.push_back(std::move(terms_[i++]));
      } else if (cmp < 0) {
        out.push_back({std::move(gm), gt[j].coeff * c});
        ++j;
      } else {
        Rational s = terms_[i].coeff + gt[j].coeff * c;
        if (!s.is_zero()) out.push_back({std::move(terms_[i].monomial), std::move(s)});
        ++i;
        ++j;
      }
    }
    terms_ = std::move(out);
    return *this;
  }

  // Scaled so the leading coefficient is 1 (zero stays zero).
  Polynomial monic() const {
    if (is_zero() || leading_coefficient().is_one()) return *this;
    return *this * leading_coefficient().inverse();
  }

  Polynomial derivative(std::size_t var) const {
    Polynomial r(ctx_);
    for (const Term& t : terms_) {
      Exponent e = t.monomial[var];
      if (e == 0) continue;
      Monomial m = t.monomial;
      m.set(var, e - 1);
      r.terms_.push_back({std::move(m), t.coeff * Rational(static_cast<long>(e))});
    }
    // Lowering one exponent can reorder terms under graded orders.
    r.sort_terms();
    return r;
  }

  // Substitutes images[i] for variable i. The result lives in the images' context.
  Polynomial substitute(const std::vector<Polynomial>& images) const {
    if (images.size() != nvars()) throw VariableMismatch("substitution needs one image per variable");
    if (images.empty()) throw InvalidArgument("substitution into a ring with no variables");
    const Context& target = images.front().ctx_;
    for (const Polynomial& p : images) p.check_same_names(*target);
    std::vector<std::vector<Polynomial>> powers(nvars());
    Polynomial result(target);
    for (const Term& t : terms_) {
      Polynomial prod = constant(target, t.coeff);
      for (std::size_t v = 0; v < nvars(); ++v) {
        Exponent e = t.monomial[v];
        if (e == 0) continue;
        auto& cache = powers[v];
        if (cache.empty()) cache.push_back(constant(target, Rational(1)));
        while (cache.size() <= e) cache.push_back(cache.back() * images[v]);
        prod = prod * cache[e];
      }
      result += prod;
    }
    return result;
  }

  // Moves the polynomial into another ring by mapping variable i to target
  // variable index_map[i]; variables absent from the map must not occur.
  Polynomial rename(const Context& target, const std::vector<std::optional<std::size_t>>& index_map) const {
    if (index_map.size() != nvars()) throw VariableMismatch("rename map has wrong length");
    std::vector<Term> out;
    out.reserve(terms_.size());
    for (const Term& t : terms_) {
      Monomial m(target->nvars());
      for (std::size_t v = 0; v < nvars(); ++v) {
        if (t.monomial[v] == 0) continue;
        if (!index_map[v]) throw VariableMismatch("variable '" + ctx_->names()[v] + "' has no image in the target ring");
        m.set(*index_map[v], t.monomial[v]);
      }
      out.push_back({std::move(m), t.coeff});
    }
    return from_terms(target, std::move(out));
  }

  // Maps by variable name.
  Polynomial rename_by_name(const Context& target) const {
    std::vector<std::optional<std::size_t>> map(nvars());
    for (std::size_t v = 0; v < nvars(); ++v) map[v] = target->index_of(ctx_->names()[v]);
    return rename(target, map);
  }

  friend bool operator==(const Polynomial& f, const Polynomial& g) {
    if (f.ctx_ == g.ctx_) return f.terms_ == g.terms_;
    if (!f.ctx_ || !g.ctx_) return f.is_zero() && g.is_zero();
    if (!f.ctx_->same_variables(*g.ctx_)) return false;
    if (f.size() != g.size()) return false;
    if (f.ctx_->order() == g.ctx_->order()) return f.terms_ == g.terms_;
    return f.terms_ == g.in_context(f.ctx_).terms_;
  }

  std::string to_string() const;

  friend std::ostream& operator<<(std::ostream& os, const Polynomial& p) { return os << p.to_string(); }

  void check_compatible(const Polynomial& g) const {
    if (!ctx_ || !g.ctx_) throw VariableMismatch("polynomial without a ring");
    if (ctx_ != g.ctx_) check_same_names(*g.ctx_);
  }

 private:
  void check_same_names(const PolyContext& other) const {
    if (!ctx_->same_variables(other)) throw VariableMismatch("variable-set mismatch");
  }

  void sort_terms() {
    const MonomialOrder& ord = ctx_->order();
    std::sort(terms_.begin(), terms_.end(),
              [&](const Term& a, const Term& b) { return ord.compare(a.monomial, b.monomial) > 0; });
  }

  void canonicalize() {
    sort_terms();
    std::vector<Term> out;
    out.reserve(terms_.size());
    for (Term& t : terms_) {
      if (!out.empty() && out.back().monomial == t.monomial) {
        out.back().coeff += t.coeff;
      } else {
        if (!out.empty() && out.back().coeff.is_zero()) out.pop_back();
        out.push_back(std::move(t));
      }
    }
    if (!out.empty() && out.back().coeff.is_zero()) out.pop_back();
    terms_ = std::move(out);
  }

  Context ctx_;
  std::vector<Term> terms_;
};

inline std::string format_monomial(const Monomial& m, const std::vector<std::string>& names) {
  std::string out;
  for (std::size_t v = 0; v < m.size(); ++v) {
    if (m[v] == 0) continue;
    if (!out.empty()) out += '*';
    out += names[v];
    if (m[v] > 1) out += '^' + std::to_string(m[v]);
  }
  return out.empty() ? "1" : out;
}

inline std::string Polynomial::to_string() const {
  if (terms_.empty()) return "0";
  std::string out;
  bool first = true;
  for (const Term& t : terms_) {
    Rational c = t.coeff;
    bool negative = c.sign() < 0;
    if (negative) c = -c;
    if (first) {
      if (negative) out += '-';
    } else {
      out += negative ? " - " : " + ";
    }
    first = false;
    if (t.monomial.is_one()) {
      out += c.to_string();
    } else if (c.is_one()) {
      out += format_monomial(t.monomial, ctx_->names());
    } else {
      out += c.to_string() + '*' + format_monomial(t.monomial, ctx_->names());
    }
  }
  return out;
}

}  // namespace lnd
