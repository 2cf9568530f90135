#pragma once

#include <boost/container/small_vector.hpp>

#include <algorithm>
#include <cstddef>
#include <cstdint>
#include <functional>
#include <initializer_list>
#include <limits>
#include <numeric>
#include <string>
#include <vector>

#include "lnd/error.hpp"

namespace lnd {

using Exponent = std::uint32_t;
inline constexpr std::uint64_t kMaxExponent = std::numeric_limits<std::int32_t>::max();

// Exponent vector with one slot per ambient variable.
class Monomial {
 public:
  using Storage = boost::container::small_vector<Exponent, 8>;

  Monomial() = default;
  explicit Monomial(std::size_t nvars) : exps_(nvars, 0) {}
  Monomial(std::initializer_list<Exponent> exps) : exps_(exps) { recompute(); }
  explicit Monomial(const std::vector<Exponent>& exps) : exps_(exps.begin(), exps.end()) { recompute(); }

  static Monomial variable(std::size_t nvars, std::size_t index, Exponent power = 1) {
    Monomial m(nvars);
    m.exps_[index] = power;
    m.degree_ = power;
    return m;
  }

  std::size_t size() const noexcept { return exps_.size(); }
  Exponent operator[](std::size_t i) const { return exps_[i]; }
  std::uint64_t degree() const noexcept { return degree_; }
  bool is_one() const noexcept { return degree_ == 0; }
  const Storage& exponents() const noexcept { return exps_; }

  void set(std::size_t i, Exponent e) {
    degree_ = degree_ - exps_[i] + e;
    exps_[i] = e;
  }

  bool divides(const Monomial& other) const {
    if (degree_ > other.degree_) return false;
    for (std::size_t i = 0; i < exps_.size(); ++i)
      if (exps_[i] > other.exps_[i]) return false;
    return true;
  }

  bool coprime(const Monomial& other) const {
    for (std::size_t i = 0; i < exps_.size(); ++i)
      if (exps_[i] != 0 && other.exps_[i] != 0) return false;
    return true;
  }

  friend Monomial operator*(const Monomial& a, const Monomial& b) {
    Monomial r(a.size());
    for (std::size_t i = 0; i < a.size(); ++i) {
      std::uint64_t e = std::uint64_t(a.exps_[i]) + b.exps_[i];
      if (e > kMaxExponent) throw ExponentOverflow();
      r.exps_[i] = static_cast<Exponent>(e);
    }
    r.degree_ = a.degree_ + b.degree_;
    return r;
  }

  // Requires b | a.
  friend Monomial operator/(const Monomial& a, const Monomial& b) {
    Monomial r(a.size());
    for (std::size_t i = 0; i < a.size(); ++i) r.exps_[i] = a.exps_[i] - b.exps_[i];
    r.degree_ = a.degree_ - b.degree_;
    return r;
  }

  Monomial pow(std::uint64_t n) const {
    Monomial r(size());
    for (std::size_t i = 0; i < size(); ++i) {
      std::uint64_t e = std::uint64_t(exps_[i]) * n;
      if (n != 0 && e / n != exps_[i]) throw ExponentOverflow();
      if (e > kMaxExponent) throw ExponentOverflow();
      r.exps_[i] = static_cast<Exponent>(e);
    }
    r.degree_ = degree_ * n;
    return r;
  }

  friend Monomial lcm(const Monomial& a, const Monomial& b) {
    Monomial r(a.size());
    for (std::size_t i = 0; i < a.size(); ++i) r.exps_[i] = std::max(a.exps_[i], b.exps_[i]);
    r.recompute();
    return r;
  }

  friend Monomial gcd(const Monomial& a, const Monomial& b) {
    Monomial r(a.size());
    for (std::size_t i = 0; i < a.size(); ++i) r.exps_[i] = std::min(a.exps_[i], b.exps_[i]);
    r.recompute();
    return r;
  }

  friend bool operator==(const Monomial& a, const Monomial& b) { return a.exps_ == b.exps_; }

  std::size_t hash() const noexcept {
    std::size_t h = 0xcbf29ce484222325ULL;
    for (Exponent e : exps_) h = (h ^ e) * 0x100000001b3ULL;
    return h;
  }

 private:
  void recompute() { degree_ = std::accumulate(exps_.begin(), exps_.end(), std::uint64_t{0}); }

  Storage exps_;
  std::uint64_t degree_ = 0;
};

struct MonomialHash {
  std::size_t operator()(const Monomial& m) const noexcept { return m.hash(); }
};

// A total order on monomials compatible with multiplication.
//
// Block elimination orders compare the first `block` variables (after the
// permutation) by graded reverse lex and break ties on the remaining variables,
// again by graded reverse lex. They eliminate the first block.
class MonomialOrder {
 public:
  enum class Kind { lex, grlex, grevlex, block };

  MonomialOrder() = default;

  static MonomialOrder lex() { return MonomialOrder(Kind::lex, 0); }
  static MonomialOrder grlex() { return MonomialOrder(Kind::grlex, 0); }
  static MonomialOrder grevlex() { return MonomialOrder(Kind::grevlex, 0); }
  static MonomialOrder block_elimination(std::size_t k) { return MonomialOrder(Kind::block, k); }

  // perm[i] is the variable index that is i-th most significant.
  MonomialOrder with_permutation(std::vector<std::size_t> perm) const {
    MonomialOrder o = *this;
    std::vector<std::size_t> sorted = perm;
    std::sort(sorted.begin(), sorted.end());
    for (std::size_t i = 0; i < sorted.size(); ++i)
      if (sorted[i] != i) throw InvalidArgument("variable permutation is not a permutation");
    bool identity = true;
    for (std::size_t i = 0; i < perm.size(); ++i) identity = identity && perm[i] == i;
    o.perm_ = identity ? std::vector<std::size_t>{} : std::move(perm);
    return o;
  }

  // Positive per-variable weights for the graded parts (indexed by variable,
  // not by permuted position). Lex ignores them.
  MonomialOrder with_weights(std::vector<std::uint64_t> weights) const {
    for (std::uint64_t w : weights)
      if (w == 0) throw InvalidArgument("monomial order weights must be positive");
    bool trivial = std::all_of(weights.begin(), weights.end(), [](std::uint64_t w) { return w == 1; });
    MonomialOrder o = *this;
    o.weights_ = trivial ? std::vector<std::uint64_t>{} : std::move(weights);
    return o;
  }
  const std::vector<std::uint64_t>& weights() const noexcept { return weights_; }

  Kind kind() const noexcept { return kind_; }
  std::size_t block() const noexcept { return block_; }
  const std::vector<std::size_t>& permutation() const noexcept { return perm_; }

  // Negative, zero or positive as a <, ==, > b.
  int compare(const Monomial& a, const Monomial& b) const {
    const std::size_t n = a.size();
    switch (kind_) {
      case Kind::lex:
        return lex_range(a, b, 0, n);
      case Kind::grlex: {
        const std::uint64_t da = weighted(a, 0, n), db = weighted(b, 0, n);
        if (da != db) return da < db ? -1 : 1;
        return lex_range(a, b, 0, n);
      }
      case Kind::grevlex:
        return grevlex_range(a, b, 0, n);
      case Kind::block: {
        const std::size_t k = std::min(block_, n);
        int c = grevlex_range(a, b, 0, k);
        if (c != 0) return c;
        return grevlex_range(a, b, k, n);
      }
    }
    return 0;
  }

  bool less(const Monomial& a, const Monomial& b) const { return compare(a, b) < 0; }

  friend bool operator==(const MonomialOrder& a, const MonomialOrder& b) {
    return a.kind_ == b.kind_ && a.block_ == b.block_ && a.perm_ == b.perm_ && a.weights_ == b.weights_;
  }

  std::string name() const {
    switch (kind_) {
      case Kind::lex: return "lex";
      case Kind::grlex: return "grlex";
      case Kind::grevlex: return "grevlex";
      case Kind::block: return "block(" + std::to_string(block_) + ")";
    }
    return "?";
  }

 private:
  MonomialOrder(Kind kind, std::size_t block) : kind_(kind), block_(block) {}

  std::size_t var(std::size_t i) const { return perm_.empty() ? i : perm_[i]; }

  int lex_range(const Monomial& a, const Monomial& b, std::size_t lo, std::size_t hi) const {
    for (std::size_t i = lo; i < hi; ++i) {
      Exponent x = a[var(i)], y = b[var(i)];
      if (x != y) return x < y ? -1 : 1;
    }
    return 0;
  }

  int revlex_range(const Monomial& a, const Monomial& b, std::size_t lo, std::size_t hi) const {
    for (std::size_t i = hi; i-- > lo;) {
      Exponent x = a[var(i)], y = b[var(i)];
      if (x != y) return x > y ? -1 : 1;
    }
    return 0;
  }

  std::uint64_t weighted(const Monomial& m, std::size_t lo, std::size_t hi) const {
    if (weights_.empty() && lo == 0 && hi == m.size()) return m.degree();
    std::uint64_t d = 0;
    for (std::size_t i = lo; i < hi; ++i) {
      const std::size_t v = var(i);
      d += (v < weights_.size() ? weights_[v] : 1) * m[v];
    }
    return d;
  }

  int grevlex_range(const Monomial& a, const Monomial& b, std::size_t lo, std::size_t hi) const {
    const std::uint64_t da = weighted(a, lo, hi), db = weighted(b, lo, hi);
    if (da != db) return da < db ? -1 : 1;
    return revlex_range(a, b, lo, hi);
  }

  Kind kind_ = Kind::grevlex;
  std::size_t block_ = 0;
  std::vector<std::size_t> perm_;
  std::vector<std::uint64_t> weights_;
};

}  // namespace lnd
