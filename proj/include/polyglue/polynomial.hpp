#pragma once

#include <algorithm>
#include <cstdint>
#include <optional>
#include <ostream>
#include <string>
#include <unordered_map>
#include <vector>

#include "polyglue/rational.hpp"

namespace polyglue {

/// Exponent table of a monomial: exps[v] is the power of variable v.
/// Trailing zeros are ignored for equality/hash purposes, so tables of
/// different lengths can coexist in one polynomial.
class Monomial {
 public:
  Monomial() = default;
  explicit Monomial(std::vector<std::uint8_t> exps) : exps_(std::move(exps)) {
    trim();
  }

  static Monomial one() { return Monomial(); }

  static Monomial var(int v, int power = 1) {
    std::vector<std::uint8_t> e(v + 1, 0);
    e[v] = static_cast<std::uint8_t>(power);
    return Monomial(std::move(e));
  }

  int degree() const {
    int d = 0;
    for (auto e : exps_) d += e;
    return d;
  }

  int exp(int v) const {
    return v < static_cast<int>(exps_.size()) ? exps_[v] : 0;
  }

  int num_vars() const { return static_cast<int>(exps_.size()); }

  const std::vector<std::uint8_t>& exps() const { return exps_; }

  Monomial times_var(int v, int power = 1) const {
    std::vector<std::uint8_t> e = exps_;
    if (v >= static_cast<int>(e.size())) e.resize(v + 1, 0);
    e[v] = static_cast<std::uint8_t>(e[v] + power);
    return Monomial(std::move(e));
  }

  /// nullopt when the variable's exponent is zero.
  std::optional<Monomial> div_var(int v) const {
    if (exp(v) == 0) return std::nullopt;
    std::vector<std::uint8_t> e = exps_;
    --e[v];
    return Monomial(std::move(e));
  }

  friend Monomial operator*(const Monomial& a, const Monomial& b) {
    std::vector<std::uint8_t> e(std::max(a.exps_.size(), b.exps_.size()), 0);
    for (size_t i = 0; i < a.exps_.size(); ++i) e[i] = a.exps_[i];
    for (size_t i = 0; i < b.exps_.size(); ++i)
      e[i] = static_cast<std::uint8_t>(e[i] + b.exps_[i]);
    return Monomial(std::move(e));
  }

  friend bool operator==(const Monomial& a, const Monomial& b) {
    return a.exps_ == b.exps_;
  }

  /// Graded order, then lexicographic on the exponent table (higher first
  /// variable wins).  Used for the documented basis enumeration order.
  friend bool operator<(const Monomial& a, const Monomial& b) {
    int da = a.degree(), db = b.degree();
    if (da != db) return da < db;
    size_t n = std::max(a.exps_.size(), b.exps_.size());
    for (size_t i = 0; i < n; ++i) {
      int ea = a.exp(static_cast<int>(i)), eb = b.exp(static_cast<int>(i));
      if (ea != eb) return ea > eb;  // larger leading exponent sorts first
    }
    return false;
  }

  size_t hash() const {
    size_t h = 1469598103934665603ull;
    for (auto e : exps_) {
      h ^= e;
      h *= 1099511628211ull;
    }
    return h;
  }

 private:
  void trim() {
    while (!exps_.empty() && exps_.back() == 0) exps_.pop_back();
  }
  std::vector<std::uint8_t> exps_;
};

struct MonomialHash {
  size_t operator()(const Monomial& m) const { return m.hash(); }
};

/// Sparse multivariate polynomial with exact rational coefficients.
/// Zero coefficients are never stored.
class Polynomial {
 public:
  using TermMap = std::unordered_map<Monomial, Rational, MonomialHash>;

  Polynomial() = default;
  explicit Polynomial(Rational c) {
    if (!c.is_zero()) terms_[Monomial::one()] = std::move(c);
  }
  Polynomial(Rational c, Monomial m) {
    if (!c.is_zero()) terms_[std::move(m)] = std::move(c);
  }

  static Polynomial var(int v) { return Polynomial(Rational(1), Monomial::var(v)); }

  bool is_zero() const { return terms_.empty(); }
  size_t num_terms() const { return terms_.size(); }
  const TermMap& terms() const { return terms_; }

  Rational coeff(const Monomial& m) const {
    auto it = terms_.find(m);
    return it == terms_.end() ? Rational(0) : it->second;
  }

  void add_term(const Monomial& m, const Rational& c) {
    if (c.is_zero()) return;
    auto it = terms_.find(m);
    if (it == terms_.end()) {
      terms_.emplace(m, c);
    } else {
      it->second += c;
      if (it->second.is_zero()) terms_.erase(it);
    }
  }

  Polynomial& operator+=(const Polynomial& o) {
    for (const auto& [m, c] : o.terms_) add_term(m, c);
    return *this;
  }
  Polynomial& operator-=(const Polynomial& o) {
    for (const auto& [m, c] : o.terms_) add_term(m, -c);
    return *this;
  }
  friend Polynomial operator+(Polynomial a, const Polynomial& b) { return a += b; }
  friend Polynomial operator-(Polynomial a, const Polynomial& b) { return a -= b; }

  friend Polynomial operator*(const Polynomial& a, const Polynomial& b) {
    Polynomial r;
    for (const auto& [ma, ca] : a.terms_)
      for (const auto& [mb, cb] : b.terms_) r.add_term(ma * mb, ca * cb);
    return r;
  }

  Polynomial& operator*=(const Polynomial& o) { return *this = *this * o; }

  Polynomial& scale(const Rational& c) {
    if (c.is_zero()) {
      terms_.clear();
      return *this;
    }
    for (auto& [m, v] : terms_) v *= c;
    return *this;
  }

  friend Polynomial operator*(const Rational& c, Polynomial p) { return p.scale(c); }

  friend bool operator==(const Polynomial& a, const Polynomial& b) {
    if (a.terms_.size() != b.terms_.size()) return false;
    for (const auto& [m, c] : a.terms_) {
      auto it = b.terms_.find(m);
      if (it == b.terms_.end() || it->second != c) return false;
    }
    return true;
  }
  friend bool operator!=(const Polynomial& a, const Polynomial& b) {
    return !(a == b);
  }

  /// Common total degree of all terms, or nullopt when mixed (zero poly
  /// reports degree 0).
  std::optional<int> homogeneous_degree() const {
    if (terms_.empty()) return 0;
    int d = terms_.begin()->first.degree();
    for (const auto& [m, c] : terms_)
      if (m.degree() != d) return std::nullopt;
    return d;
  }

  /// Deterministic view: terms sorted by monomial order.
  std::vector<std::pair<Monomial, Rational>> sorted_terms() const {
    std::vector<std::pair<Monomial, Rational>> v(terms_.begin(), terms_.end());
    std::sort(v.begin(), v.end(),
              [](const auto& a, const auto& b) { return a.first < b.first; });
    return v;
  }

  std::string str(const std::string& var_prefix = "x") const {
    if (terms_.empty()) return "0";
    std::string s;
    for (const auto& [m, c] : sorted_terms()) {
      if (!s.empty()) s += " + ";
      s += c.str();
      for (int v = 0; v < m.num_vars(); ++v)
        if (m.exp(v) > 0) {
          s += "*" + var_prefix + std::to_string(v);
          if (m.exp(v) > 1) s += "^" + std::to_string(m.exp(v));
        }
    }
    return s;
  }

 private:
  TermMap terms_;
};

}  // namespace polyglue
