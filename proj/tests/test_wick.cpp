#include <catch_amalgamated.hpp>

#include "polyglue/random.hpp"
#include "polyglue/wick.hpp"

using namespace polyglue;
using namespace polyglue::fock;

namespace {

// :tr(A (an cr A)^p): as a trace-word op sharing the constant table of op.
TraceWordOp single_trace_power(const TraceWordOp& like, int p, const Rational& c) {
  TraceWordOp op;
  op.N = like.N;
  op.constants = like.constants;
  TraceWord w;
  w.push_back(constant(0));
  for (int i = 0; i < p; ++i) {
    w.push_back(annih());
    w.push_back(create());
    w.push_back(constant(0));
  }
  op.add_term({w}, c);
  return op;
}

long long binom(int n, int k) {
  if (k < 0 || k > n) return 0;
  long long r = 1;
  for (int i = 0; i < k; ++i) r = r * (n - i) / (i + 1);
  return r;
}

long long fact(int n) {
  long long r = 1;
  for (int i = 2; i <= n; ++i) r *= i;
  return r;
}

}  // namespace

TEST_CASE("k=0 term is the joint normal-ordered product") {
  auto e = wick_expand_detailed(build_H_symbolic(2), build_H_symbolic(3));
  REQUIRE(e.per_k[0].terms.size() == 1);
  // single product of the two words with coefficient 1
  const auto& [wp, c] = *e.per_k[0].terms.begin();
  REQUIRE(wp.size() == 2);
  REQUIRE(c == Rational(1));
  REQUIRE(e.enumerated[0] == 1);
}

TEST_CASE("k=1 term is nm times a single trace of combined length") {
  for (auto [n, m] : {std::pair{1, 1}, {2, 2}, {2, 3}, {3, 3}, {1, 4}}) {
    auto e = wick_expand_detailed(build_H_symbolic(n), build_H_symbolic(m));
    auto expect = single_trace_power(e.per_k[1], n + m - 1,
                                     Rational(static_cast<long long>(n) * m));
    REQUIRE(e.per_k[1].terms == expect.terms);
  }
}

TEST_CASE("sample counts: binom(n,k) binom(m,k) k! raw terms at each k") {
  for (auto [n, m] : {std::pair{2, 3}, {3, 3}, {1, 4}}) {
    auto e = wick_expand_detailed(build_H_symbolic(n), build_H_symbolic(m));
    for (int k = 0; k < static_cast<int>(e.enumerated.size()); ++k)
      REQUIRE(e.enumerated[k] == binom(n, k) * binom(m, k) * fact(k));
  }
}

TEST_CASE("k=3 expansion of H_3 H_3: torus single trace plus sphere product") {
  auto e = wick_expand_detailed(build_H_symbolic(3), build_H_symbolic(3));
  REQUIRE(e.per_k.size() == 4);
  const auto& q3 = e.per_k[3];
  REQUIRE(q3.terms.size() == 2);

  // single-trace (torus) term: tr(A (an cr A) A (an cr A) A (an cr A))
  TraceWord torus;
  for (int i = 0; i < 3; ++i) {
    torus.push_back(constant(0));
    torus.push_back(annih());
    torus.push_back(create());
    torus.push_back(constant(0));
  }
  // note: block form A (an cr A) repeated three times
  TraceWord torus2;
  for (int i = 0; i < 3; ++i) {
    torus2.push_back(constant(0));
    torus2.push_back(annih());
    torus2.push_back(create());
    torus2.push_back(constant(0));
  }
  WordProduct torus_wp = canonical_product({torus2});

  // three-trace (sphere) term: tr(A an cr A)^3
  TraceWord small;
  small.push_back(constant(0));
  small.push_back(annih());
  small.push_back(create());
  small.push_back(constant(0));
  WordProduct sphere_wp = canonical_product({small, small, small});

  REQUIRE(q3.terms.count(torus_wp) == 1);
  REQUIRE(q3.terms.count(sphere_wp) == 1);
  REQUIRE(q3.terms.at(torus_wp) == Rational(3));   // three cyclic pairings
  REQUIRE(q3.terms.at(sphere_wp) == Rational(3));
}

TEST_CASE("k=3 expansion of H_4 H_3 contains the single-trace family") {
  auto e = wick_expand_detailed(build_H_symbolic(4), build_H_symbolic(3));
  const auto& q3 = e.per_k[3];
  // spacing vectors of 4-3=1 over three slots give blocks {2,1,1} up to
  // rotation; the single-trace members must be present
  TraceWord w;
  auto unit = [&](int len) {
    w.push_back(constant(0));
    for (int i = 0; i < len; ++i) {
      w.push_back(annih());
      w.push_back(create());
      w.push_back(constant(0));
    }
  };
  unit(2);
  unit(1);
  unit(1);
  WordProduct wp = canonical_product({w});
  REQUIRE(q3.terms.count(wp) == 1);
  REQUIRE(q3.terms.at(wp).sign() > 0);
}

TEST_CASE("wick expansion equals sequential application") {
  int N = 2;
  for (int seed : {1, 2, 3}) {
    RationalMatrix A = random_rational_matrix(N, 7000 + seed);
    for (auto [n, m] : {std::pair{1, 2}, {2, 2}, {2, 3}, {3, 3}}) {
      auto Hn = build_H(n, A), Hm = build_H(m, A);
      auto expanded = wick_expand(Hn, Hm);
      for (int d = 0; d <= 3; ++d) {
        auto basis = monomial_basis(N, d);
        for (const auto& mono : basis.monomials) {
          FockState s(N, Polynomial(Rational(1), mono));
          REQUIRE(apply(expanded, s) == apply(Hn, apply(Hm, s)));
        }
      }
    }
  }
}

TEST_CASE("wick expansion against a multi-trace right factor") {
  int N = 2;
  RationalMatrix A = random_rational_matrix(N, 4242);
  auto H2 = build_H(2, A);
  auto Hmu = build_H_mu(Partition({2, 1}), A);
  auto expanded = wick_expand(H2, Hmu);
  for (int d = 0; d <= 3; ++d) {
    auto basis = monomial_basis(N, d);
    for (const auto& mono : basis.monomials) {
      FockState s(N, Polynomial(Rational(1), mono));
      REQUIRE(apply(expanded, s) == apply(H2, apply(Hmu, s)));
    }
  }
}

TEST_CASE("H_mu relates to repeated application through the wick terms") {
  // :tr(..):^2 differs from sequential application by the contraction terms
  int N = 2;
  auto I = RationalMatrix::identity(N);
  auto H1 = build_H(1, I);
  auto H11 = build_H_mu(Partition({1, 1}), I);
  auto e = wick_expand_detailed(H1, H1);
  Rng rng(5);
  for (int d = 1; d <= 3; ++d) {
    auto basis = monomial_basis(N, d);
    for (const auto& mono : basis.monomials) {
      FockState s(N, Polynomial(Rational(1), mono));
      FockState seq = apply(H1, apply(H1, s));        // d^2 s
      FockState prod = apply(H11, s);                 // normal-ordered part
      FockState corr = apply(e.per_k[1], s);          // single contraction
      REQUIRE(prod + corr == seq);
      FockState expect_seq = s;
      expect_seq.scale(Rational(d) * Rational(d));
      REQUIRE(seq == expect_seq);
    }
  }
}

TEST_CASE("symbolic commutator collapses to the empty sum") {
  for (auto [n, m] : {std::pair{1, 1}, {2, 2}, {2, 3}, {1, 4}, {3, 2}}) {
    auto diff = symbolic_commutator(n, m);
    INFO("n=" << n << " m=" << m << " residue: " << diff.str());
    REQUIRE(diff.is_empty());
  }
}
