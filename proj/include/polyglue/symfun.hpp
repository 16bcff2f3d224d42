#pragma once

#include <map>
#include <optional>
#include <stdexcept>
#include <vector>

#include "polyglue/partition.hpp"
#include "polyglue/polynomial.hpp"

namespace polyglue::symfun {

/// Polynomial in the power-sum generators; variable v stands for p_{v+1},
/// so deg-weight of variable v is v+1.
using SymPoly = Polynomial;

inline SymPoly powersum(int m) {
  if (m < 1) throw std::invalid_argument("powersum: m must be positive");
  return Polynomial::var(m - 1);
}

/// p_Delta = prod_i p_{Delta_i}
inline SymPoly powersum_product(const Partition& delta) {
  SymPoly r{Rational(1)};
  for (int part : delta.parts()) r *= powersum(part);
  return r;
}

/// Weighted degree sum_m m * exp(p_m) when all terms agree; nullopt if mixed.
inline std::optional<int> weighted_degree(const SymPoly& f) {
  std::optional<int> deg;
  for (const auto& [m, c] : f.terms()) {
    int w = 0;
    for (int v = 0; v < m.num_vars(); ++v) w += (v + 1) * m.exp(v);
    if (!deg)
      deg = w;
    else if (*deg != w)
      return std::nullopt;
  }
  return deg ? deg : std::optional<int>(0);
}

/// Coefficient of z^i in exp(sum_{m>0} p_m z^m / m); zero for i < 0.
/// Computed by the series recurrence i*s_i = sum_{m=1..i} p_m s_{i-m}.
inline SymPoly complete_symbol(int i) {
  if (i < 0) return SymPoly{};
  std::vector<SymPoly> s(i + 1);
  s[0] = SymPoly{Rational(1)};
  for (int k = 1; k <= i; ++k) {
    SymPoly acc;
    for (int m = 1; m <= k; ++m) acc += powersum(m) * s[k - m];
    acc.scale(Rational(1, k));
    s[k] = std::move(acc);
  }
  return s[i];
}

namespace detail {

/// Determinant by Laplace expansion along rows with a memo on column masks.
template <typename T>
T determinant(const std::vector<std::vector<T>>& a) {
  int n = static_cast<int>(a.size());
  if (n == 0) return T{Rational(1)};
  std::vector<std::optional<T>> memo(size_t{1} << n);
  auto rec = [&](auto&& self, unsigned mask) -> const T& {
    if (memo[mask]) return *memo[mask];
    int row = n - __builtin_popcount(mask);  // rows 0..row-1 remain
    T det{};
    if (row == 0) {
      det = T{Rational(1)};
    } else {
      int r = row - 1;
      int sign = (r % 2 == 0) ? 1 : -1;  // expansion along row r
      for (int c = 0; c < n; ++c) {
        if (mask & (1u << c)) continue;
        const T& minor = self(self, mask | (1u << c));
        T term = a[r][c] * minor;
        if (sign < 0) term = Rational(-1) * term;
        det += term;
        sign = -sign;
      }
    }
    memo[mask] = std::move(det);
    return *memo[mask];
  };
  return rec(rec, 0);
}

template <>
inline Rational determinant<Rational>(const std::vector<std::vector<Rational>>& a) {
  int n = static_cast<int>(a.size());
  std::vector<std::optional<Rational>> memo(size_t{1} << n);
  auto rec = [&](auto&& self, unsigned mask) -> Rational {
    if (memo[mask]) return *memo[mask];
    int row = n - __builtin_popcount(mask);
    Rational det;
    if (row == 0) {
      det = Rational(1);
    } else {
      int r = row - 1, sign = (r % 2 == 0) ? 1 : -1;
      for (int c = 0; c < n; ++c) {
        if (mask & (1u << c)) continue;
        Rational term = a[r][c] * self(self, mask | (1u << c));
        det += sign < 0 ? -term : term;
        sign = -sign;
      }
    }
    memo[mask] = det;
    return det;
  };
  return rec(rec, 0);
}

}  // namespace detail

/// Schur function s_lambda as a polynomial in power sums, via the N x N
/// determinant of complete symbols with shifted row indices.  The result is
/// independent of the evaluation size N (N >= length is required).
inline SymPoly schur_in_powersums(const Partition& lambda, int N) {
  if (N < lambda.length())
    throw std::invalid_argument("schur_in_powersums: N below partition length");
  if (N == 0) return SymPoly{Rational(1)};
  std::vector<std::vector<SymPoly>> m(N, std::vector<SymPoly>(N));
  for (int i = 1; i <= N; ++i) {
    int h = lambda.part(i - 1) - i + N;
    for (int j = 1; j <= N; ++j) m[i - 1][j - 1] = complete_symbol(h + j - N);
  }
  return detail::determinant(m);
}

inline SymPoly schur_in_powersums(const Partition& lambda) {
  return schur_in_powersums(lambda, std::max(1, lambda.length()));
}

/// Evaluates a power-sum polynomial at p_m = sum_i x_i^m.
inline Rational substitute_powersums(const SymPoly& f,
                                     const std::vector<Rational>& xs) {
  int max_m = 0;
  for (const auto& [mono, c] : f.terms())
    max_m = std::max(max_m, mono.num_vars());
  std::vector<Rational> pvals(max_m + 1);
  std::vector<Rational> powers(xs.begin(), xs.end());
  for (int m = 1; m <= max_m; ++m) {
    Rational s;
    for (size_t i = 0; i < xs.size(); ++i) {
      if (m > 1) powers[i] *= xs[i];
      s += powers[i];
    }
    pvals[m] = s;
  }
  Rational total;
  for (const auto& [mono, c] : f.terms()) {
    Rational t = c;
    for (int v = 0; v < mono.num_vars(); ++v)
      for (int e = 0; e < mono.exp(v); ++e) t *= pvals[v + 1];
    total += t;
  }
  return total;
}

/// Schur polynomial evaluated at concrete points: ratio of alternants when
/// the points are distinct, and the power-sum expansion otherwise (both are
/// exact; the ratio form is 0/0 at repeated points).  Vanishes when the
/// partition has more rows than there are points.
inline Rational schur_numeric(const Partition& lambda,
                              const std::vector<Rational>& xs) {
  int N = static_cast<int>(xs.size());
  if (lambda.length() > N) return Rational(0);
  bool distinct = true;
  for (int i = 0; i < N && distinct; ++i)
    for (int j = i + 1; j < N; ++j)
      if (xs[i] == xs[j]) {
        distinct = false;
        break;
      }
  if (!distinct || N == 0)
    return substitute_powersums(schur_in_powersums(lambda, std::max(1, N)), xs);

  auto alternant = [&](auto exponent) {
    std::vector<std::vector<Rational>> m(N, std::vector<Rational>(N));
    for (int i = 0; i < N; ++i)
      for (int j = 0; j < N; ++j) {
        Rational p = 1;
        for (int e = 0; e < exponent(i); ++e) p *= xs[j];
        m[i][j] = p;
      }
    return detail::determinant(m);
  };
  Rational num = alternant([&](int i) { return lambda.part(i) - (i + 1) + N; });
  Rational den = alternant([&](int i) { return N - (i + 1); });
  return num / den;
}

namespace detail {

// Beta-set border-strip recursion for characters.
inline long long mn_character(std::vector<int> beta, const std::vector<int>& delta,
                              size_t pos) {
  if (pos == delta.size()) return 1;
  int r = delta[pos];
  long long total = 0;
  for (size_t i = 0; i < beta.size(); ++i) {
    int target = beta[i] - r;
    if (target < 0) continue;
    bool collision = false;
    int between = 0;
    for (size_t j = 0; j < beta.size(); ++j) {
      if (j == i) continue;
      if (beta[j] == target) {
        collision = true;
        break;
      }
      if (beta[j] > target && beta[j] < beta[i]) ++between;
    }
    if (collision) continue;
    std::vector<int> next = beta;
    next[i] = target;
    long long sub = mn_character(std::move(next), delta, pos + 1);
    total += (between % 2 == 0) ? sub : -sub;
  }
  return total;
}

}  // namespace detail

/// Character chi_lambda(Delta) of the symmetric group, by repeated
/// border-strip removal.
inline long long character(const Partition& lambda, const Partition& delta) {
  if (lambda.weight() != delta.weight())
    throw std::invalid_argument("character: weight mismatch");
  int L = lambda.length();
  std::vector<int> beta(L);
  for (int i = 0; i < L; ++i) beta[i] = lambda.part(i) + (L - 1 - i);
  return detail::mn_character(std::move(beta), delta.parts(), 0);
}

/// Normalized character phi_lambda(Delta) = d! chi_lambda(Delta) /
/// (zeta_Delta dim lambda); fixed by coefficient matching in the character
/// map s_lambda = (dim/d!) sum_Delta phi_lambda(Delta) p_Delta.
inline Rational normalized_character(const Partition& lambda,
                                     const Partition& delta) {
  if (lambda.weight() != delta.weight())
    throw std::invalid_argument("normalized_character: weight mismatch");
  return Rational(character(lambda, delta)) /
         (Rational(centralizer_size(delta)) * dimension_factor(lambda));
}

/// Expansion p_Delta = sum_lambda c_lambda s_lambda; the coefficients are
/// the characters chi_lambda(Delta).
inline std::map<Partition, Rational> powersum_to_schur(const Partition& delta) {
  std::map<Partition, Rational> out;
  for (const auto& lambda : partitions_of(delta.weight())) {
    long long chi = character(lambda, delta);
    if (chi != 0) out.emplace(lambda, Rational(chi));
  }
  return out;
}

/// Character data of S_d: chi and phi for every (lambda, Delta) pair.
struct CharacterTable {
  int d = 0;
  std::vector<Partition> labels;  // partitions_of(d) order
  std::vector<std::vector<long long>> chi;  // [lambda][delta]
  std::vector<std::vector<Rational>> phi;
};

inline CharacterTable build_character_table(int d) {
  CharacterTable t;
  t.d = d;
  t.labels = partitions_of(d);
  size_t n = t.labels.size();
  t.chi.assign(n, std::vector<long long>(n));
  t.phi.assign(n, std::vector<Rational>(n));
  for (size_t l = 0; l < n; ++l)
    for (size_t k = 0; k < n; ++k) {
      t.chi[l][k] = character(t.labels[l], t.labels[k]);
      t.phi[l][k] = normalized_character(t.labels[l], t.labels[k]);
    }
  return t;
}

}  // namespace polyglue::symfun
