#pragma once

#include <map>
#include <optional>
#include <ostream>
#include <stdexcept>
#include <tuple>
#include <vector>

#include "polyglue/fock.hpp"
#include "polyglue/permutation.hpp"
#include "polyglue/random.hpp"
#include "polyglue/symfun.hpp"

namespace polyglue::hurwitz {

using fock::FockState;

/// tr((xC)^m) as a state polynomial.
inline Polynomial trace_power_poly(int m, const RationalMatrix& C) {
  int N = C.size();
  // matrix of polynomials (xC)_{ij} = sum_l x_{il} C_{lj}
  std::vector<Polynomial> xc(N * N);
  for (int i = 0; i < N; ++i)
    for (int j = 0; j < N; ++j) {
      Polynomial e;
      for (int l = 0; l < N; ++l) {
        if (C(l, j).is_zero()) continue;
        e += C(l, j) * Polynomial::var(fock::FockState::var(N, i, l));
      }
      xc[i * N + j] = std::move(e);
    }
  std::vector<Polynomial> power = xc;
  for (int p = 1; p < m; ++p) {
    std::vector<Polynomial> next(N * N);
    for (int i = 0; i < N; ++i)
      for (int l = 0; l < N; ++l)
        for (int j = 0; j < N; ++j)
          next[i * N + j] += power[i * N + l] * xc[l * N + j];
    power = std::move(next);
  }
  Polynomial tr;
  for (int i = 0; i < N; ++i) tr += power[i * N + i];
  return tr;
}

/// prod_i tr((xC)^{nu_i}) |0>.
inline FockState powersum_state(const Partition& nu, const RationalMatrix& C) {
  Polynomial p(Rational(1));
  for (int part : nu.parts()) p *= trace_power_poly(part, C);
  return FockState(C.size(), std::move(p));
}

/// s_lambda(phi C)|0>: the Schur polynomial in power sums with p_m replaced
/// by tr((xC)^m).  Identically zero when the partition has more rows than N.
struct SchurState {
  Partition lambda;
  RationalMatrix C;
  FockState state;
};

inline SchurState schur_state(const Partition& lambda, const RationalMatrix& C) {
  int N = C.size();
  symfun::SymPoly sp = symfun::schur_in_powersums(lambda);
  std::vector<Polynomial> tr_cache;  // tr((xC)^m), 1-based index m
  auto tr_power = [&](int m) -> const Polynomial& {
    while (static_cast<int>(tr_cache.size()) < m)
      tr_cache.push_back(trace_power_poly(static_cast<int>(tr_cache.size()) + 1, C));
    return tr_cache[m - 1];
  };
  Polynomial out;
  for (const auto& [mono, c] : sp.terms()) {
    Polynomial term(c);
    for (int v = 0; v < mono.num_vars(); ++v)
      for (int e = 0; e < mono.exp(v); ++e) term *= tr_power(v + 1);
    out += term;
  }
  return SchurState{lambda, C, FockState(N, std::move(out))};
}

/// Exact proportionality test: returns the ratio image/state when image is a
/// scalar multiple of state; nullopt otherwise.
inline std::optional<Rational> proportionality(const FockState& image,
                                               const FockState& state) {
  if (state.is_zero()) return std::nullopt;
  const auto& ref = *state.poly.terms().begin();
  Rational ratio = image.poly.coeff(ref.first) / ref.second;
  FockState scaled = state;
  scaled.scale(ratio);
  if (scaled == image) return ratio;
  return std::nullopt;
}

/// Eigenvalue E_n(lambda) of H_n(I_N) on the Schur state s_lambda(phi C)|0>
/// for a generic rational C.  Throws when the image is not an exact scalar
/// multiple.
inline Rational eigenvalue_of(int n, const Partition& lambda, int N,
                              std::uint64_t seed = 2027) {
  if (N < lambda.length())
    throw std::invalid_argument("eigenvalue_of: N below partition length");
  if (n < 1) throw std::invalid_argument("eigenvalue_of: n must be positive");
  RationalMatrix C = random_rational_matrix(N, seed);
  SchurState s = schur_state(lambda, C);
  if (s.state.is_zero()) throw std::logic_error("eigenvalue_of: zero Schur state");
  FockState image = fock::apply(fock::build_H(n, RationalMatrix::identity(N)), s.state);
  if (image.is_zero()) return Rational(0);
  auto ratio = proportionality(image, s.state);
  if (!ratio)
    throw std::logic_error("eigenvalue_of: image is not proportional to the state");
  return *ratio;
}

struct MmnReport {
  Partition lambda, mu;
  bool pass = false;
  Rational factor;  // (|mu|!/dim mu) chi_mu(lambda)
  std::string detail;
};

/// Checks H_lambda(A) s_mu(phi C)|0> = (|mu|!/dim mu) chi_mu(lambda)
/// s_mu(phi A C)|0> exactly (H_lambda is the multi-trace family).
inline MmnReport verify_mmn(const Partition& lambda, const Partition& mu,
                            const RationalMatrix& A, const RationalMatrix& C) {
  if (lambda.weight() != mu.weight())
    throw std::invalid_argument("verify_mmn: weight mismatch");
  MmnReport rep;
  rep.lambda = lambda;
  rep.mu = mu;
  rep.factor = Rational(symfun::character(mu, lambda)) / dimension_factor(mu);

  FockState lhs = fock::apply(fock::build_H_mu(lambda, A), schur_state(mu, C).state);
  FockState rhs = schur_state(mu, A * C).state;
  rhs.scale(rep.factor);
  rep.pass = (lhs == rhs);
  if (!rep.pass) rep.detail = "states differ";
  return rep;
}

/// Structure constants of conjugacy-class sums: C_lambda C_mu =
/// sum_nu c^nu C_nu in the group algebra of S_d, by direct enumeration.
inline std::map<Partition, long long> class_structure_constants(
    const Partition& lambda, const Partition& mu) {
  int d = lambda.weight();
  if (mu.weight() != d)
    throw std::invalid_argument("class_structure_constants: weight mismatch");
  if (d > 6) throw std::invalid_argument("class_structure_constants: d too large");
  auto ca = class_elements(lambda, d);
  auto cb = class_elements(mu, d);
  std::map<Partition, long long> hist;
  for (const auto& a : ca)
    for (const auto& b : cb) ++hist[(a * b).cycle_type()];
  long long dfact = 1;
  for (int i = 2; i <= d; ++i) dfact *= i;
  std::map<Partition, long long> out;
  for (auto& [nu, count] : hist) {
    long long class_size = dfact / centralizer_size(nu);
    if (count % class_size != 0)
      throw std::logic_error("class_structure_constants: non-uniform product");
    out[nu] = count / class_size;
  }
  return out;
}

/// Three-branch-point Hurwitz pairing via the character sum
///   zeta_lambda zeta_mu sum_gamma (dim gamma/d!)^2 phi_gamma(lambda)
///   phi_gamma(mu) phi_gamma(nu).
/// Normalized so the Fock-space extraction reproduces it exactly; the
/// zeta_nu-rescaled value is fully symmetric in the three arguments.
inline Rational hurwitz_3pt(const Partition& lambda, const Partition& mu,
                            const Partition& nu) {
  int d = lambda.weight();
  if (mu.weight() != d || nu.weight() != d)
    throw std::invalid_argument("hurwitz_3pt: weight mismatch");
  if (d > 6) throw std::invalid_argument("hurwitz_3pt: d too large");
  Rational sum;
  for (const auto& gamma : partitions_of(d)) {
    Rational df = dimension_factor(gamma);
    sum += df * df * symfun::normalized_character(gamma, lambda) *
           symfun::normalized_character(gamma, mu) *
           symfun::normalized_character(gamma, nu);
  }
  return Rational(centralizer_size(lambda)) * Rational(centralizer_size(mu)) * sum;
}

/// Symmetric normalization: zeta_nu times the extracted pairing.
inline Rational hurwitz_3pt_symmetric(const Partition& lambda, const Partition& mu,
                                      const Partition& nu) {
  return Rational(centralizer_size(nu)) * hurwitz_3pt(lambda, mu, nu);
}

/// Expands H_lambda(I) applied to the power-sum state prod tr(x^{mu_i}) in
/// the basis { prod tr(x^{nu_i}) : nu of weight d } by exact elimination.
/// Requires N >= d so the trace powers are algebraically independent.
inline std::map<Partition, Rational> extract_hurwitz_from_fock(
    const Partition& lambda, const Partition& mu, int N) {
  int d = lambda.weight();
  if (mu.weight() != d)
    throw std::invalid_argument("extract_hurwitz_from_fock: weight mismatch");
  if (N < d)
    throw std::invalid_argument("extract_hurwitz_from_fock: need N >= d");
  RationalMatrix I = RationalMatrix::identity(N);

  FockState image = fock::apply(fock::build_H_mu(lambda, I), powersum_state(mu, I));

  auto nus = partitions_of(d);
  size_t P = nus.size();
  std::vector<Polynomial> cols;
  for (const auto& nu : nus) cols.push_back(powersum_state(nu, I).poly);

  // Gaussian elimination with bookkeeping: reduced[j] = sum_t expr[j][t] cols[t]
  struct Pivot {
    Monomial mono;
    Rational lead;
  };
  std::vector<Polynomial> reduced = cols;
  std::vector<std::vector<Rational>> expr(P, std::vector<Rational>(P));
  for (size_t j = 0; j < P; ++j) expr[j][j] = Rational(1);
  std::vector<Pivot> pivots;
  for (size_t j = 0; j < P; ++j) {
    for (size_t pi = 0; pi < pivots.size(); ++pi) {
      Rational c = reduced[j].coeff(pivots[pi].mono);
      if (c.is_zero()) continue;
      Rational f = c / pivots[pi].lead;
      Polynomial sub = reduced[pi];
      sub.scale(f);
      reduced[j] -= sub;
      for (size_t t = 0; t < P; ++t) expr[j][t] -= f * expr[pi][t];
    }
    if (reduced[j].is_zero())
      throw std::logic_error("extract_hurwitz_from_fock: singular basis");
    const auto& term = *reduced[j].terms().begin();
    pivots.push_back(Pivot{term.first, term.second});
  }

  // pivot monomial j is eliminated from every later column, so the
  // coefficients peel off front to back
  Polynomial residual = image.poly;
  std::vector<Rational> final_coeff(P);
  for (size_t j = 0; j < P; ++j) {
    Rational a = residual.coeff(pivots[j].mono) / pivots[j].lead;
    if (a.is_zero()) continue;
    Polynomial sub = reduced[j];
    sub.scale(a);
    residual -= sub;
    for (size_t t = 0; t < P; ++t) final_coeff[t] += a * expr[j][t];
  }
  if (!residual.is_zero())
    throw std::logic_error("extract_hurwitz_from_fock: inexact expansion");

  std::map<Partition, Rational> out;
  for (size_t t = 0; t < P; ++t)
    if (!final_coeff[t].is_zero()) out[nus[t]] = final_coeff[t];
  return out;
}

/// Full table of extracted pairings for weight d.
struct HurwitzTable {
  int d = 0;
  std::map<std::tuple<Partition, Partition, Partition>, Rational> entries;
};

inline HurwitzTable build_hurwitz_table(int d, int N) {
  HurwitzTable t;
  t.d = d;
  auto parts = partitions_of(d);
  for (const auto& lambda : parts)
    for (const auto& mu : parts) {
      auto row = extract_hurwitz_from_fock(lambda, mu, N);
      for (const auto& nu : parts) {
        auto it = row.find(nu);
        Rational v = it == row.end() ? Rational(0) : it->second;
        t.entries[{lambda, mu, nu}] = v;
      }
    }
  return t;
}

/// One JSON record per (lambda, mu, nu, value); partitions as comma-joined
/// parts, values as exact fraction strings.
inline void write_hurwitz_jsonl(std::ostream& os, const HurwitzTable& t) {
  for (const auto& [key, value] : t.entries) {
    const auto& [lambda, mu, nu] = key;
    os << "{\"lambda\":\"" << lambda.csv() << "\",\"mu\":\"" << mu.csv()
       << "\",\"nu\":\"" << nu.csv() << "\",\"value\":\"" << value.str()
       << "\"}\n";
  }
}

}  // namespace polyglue::hurwitz
