#include <catch_amalgamated.hpp>

#include <random>

#include "polyglue/symfun.hpp"

using namespace polyglue;
using namespace polyglue::symfun;

namespace {

SymPoly p(int m) { return powersum(m); }

// Series-multiplication oracle for the exponential generating series:
// multiplies out exp(p_m z^m / m) factors truncated at z^order.
std::vector<SymPoly> exp_series_oracle(int order) {
  std::vector<SymPoly> series(order + 1);
  series[0] = SymPoly{Rational(1)};
  for (int m = 1; m <= order; ++m) {
    // exp(p_m z^m / m) = sum_k (p_m/m)^k z^{mk} / k!
    std::vector<SymPoly> factor(order + 1);
    factor[0] = SymPoly{Rational(1)};
    SymPoly pk{Rational(1)};
    Rational coeff = 1;
    for (int k = 1; m * k <= order; ++k) {
      pk *= p(m);
      coeff = coeff * Rational(1, m) * Rational(1, k);
      factor[m * k] = coeff * pk;
    }
    std::vector<SymPoly> next(order + 1);
    for (int i = 0; i <= order; ++i)
      for (int j = 0; i + j <= order; ++j)
        if (!series[i].is_zero() && !factor[j].is_zero())
          next[i + j] += series[i] * factor[j];
    series = std::move(next);
  }
  return series;
}

std::vector<Rational> random_points(std::mt19937_64& rng, int n) {
  std::vector<Rational> xs;
  for (int i = 0; i < n; ++i)
    xs.emplace_back(static_cast<long long>(rng() % 19) - 9,
                    static_cast<long long>(rng() % 9) + 1);
  return xs;
}

}  // namespace

TEST_CASE("complete_symbol low orders") {
  REQUIRE(complete_symbol(0) == SymPoly{Rational(1)});
  REQUIRE(complete_symbol(1) == p(1));
  SymPoly expect2 = Rational(1, 2) * (p(1) * p(1)) + Rational(1, 2) * p(2);
  REQUIRE(complete_symbol(2) == expect2);
  REQUIRE(complete_symbol(-1).is_zero());
}

TEST_CASE("complete_symbol matches the series-multiplication oracle") {
  auto oracle = exp_series_oracle(7);
  for (int i = 0; i <= 7; ++i) REQUIRE(complete_symbol(i) == oracle[i]);
}

TEST_CASE("schur_in_powersums small cases") {
  REQUIRE(schur_in_powersums(Partition({1}), 1) == p(1));
  SymPoly s2 = Rational(1, 2) * (p(1) * p(1)) + Rational(1, 2) * p(2);
  SymPoly s11 = Rational(1, 2) * (p(1) * p(1)) - Rational(1, 2) * p(2);
  REQUIRE(schur_in_powersums(Partition({2}), 2) == s2);
  REQUIRE(schur_in_powersums(Partition({1, 1}), 2) == s11);
  REQUIRE_THROWS_AS(schur_in_powersums(Partition({1, 1}), 1),
                    std::invalid_argument);
}

TEST_CASE("schur_in_powersums does not depend on N") {
  for (int d = 0; d <= 5; ++d)
    for (const auto& lam : partitions_of(d)) {
      int L = std::max(1, lam.length());
      REQUIRE(schur_in_powersums(lam, L) == schur_in_powersums(lam, L + 2));
    }
}

TEST_CASE("schur polynomials are quasi-homogeneous") {
  for (int d = 0; d <= 6; ++d)
    for (const auto& lam : partitions_of(d)) {
      auto w = weighted_degree(schur_in_powersums(lam));
      REQUIRE(w.has_value());
      if (d > 0) REQUIRE(*w == d);
    }
}

TEST_CASE("schur_numeric examples") {
  REQUIRE(schur_numeric(Partition({1}), {Rational(2, 3), Rational(1)}) ==
          Rational(5, 3));
  REQUIRE(schur_numeric(Partition({2}), {Rational(1), Rational(1)}) == Rational(3));
  REQUIRE(schur_numeric(Partition({1, 1, 1}), {Rational(1), Rational(1)}) ==
          Rational(0));
}

TEST_CASE("bialternant agrees with the power-sum route at random points") {
  std::mt19937_64 rng(99);
  for (int d = 0; d <= 6; ++d)
    for (const auto& lam : partitions_of(d))
      for (int trial = 0; trial < 3; ++trial) {
        int n = std::max(lam.length(), 1) + static_cast<int>(rng() % 2);
        auto xs = random_points(rng, n);
        Rational via_p = substitute_powersums(schur_in_powersums(lam, n), xs);
        REQUIRE(schur_numeric(lam, xs) == via_p);
      }
}

TEST_CASE("schur_numeric handles repeated points") {
  // all points equal: forces the power-sum expansion route
  std::vector<Rational> xs = {Rational(1, 2), Rational(1, 2), Rational(1, 2)};
  Rational direct = substitute_powersums(schur_in_powersums(Partition({2, 1}), 3), xs);
  REQUIRE(schur_numeric(Partition({2, 1}), xs) == direct);
}

TEST_CASE("character examples") {
  for (int d = 1; d <= 5; ++d)
    for (const auto& delta : partitions_of(d))
      REQUIRE(character(Partition({d}), delta) == 1);  // trivial representation
  REQUIRE(character(Partition({1, 1}), Partition({2})) == -1);
  REQUIRE(character(Partition({2, 1}), Partition({1, 1, 1})) == 2);
  REQUIRE_THROWS_AS(character(Partition({2}), Partition({1})),
                    std::invalid_argument);
}

TEST_CASE("sign representation brute-force oracle in S_2 and S_3") {
  // chi_{(1^d)}(delta) = sign of the class
  for (int d = 2; d <= 3; ++d) {
    std::vector<int> ones(d, 1);
    for (const auto& delta : partitions_of(d)) {
      int parity = (delta.weight() - delta.length()) % 2 == 0 ? 1 : -1;
      REQUIRE(character(Partition(ones), delta) == parity);
    }
  }
}

TEST_CASE("characters against the coefficient-matching oracle") {
  // chi_lambda(Delta) = zeta_Delta * [p_Delta] s_lambda, solved from the two
  // polynomial bases.
  for (int d = 1; d <= 5; ++d)
    for (const auto& lam : partitions_of(d)) {
      SymPoly s = schur_in_powersums(lam);
      for (const auto& delta : partitions_of(d)) {
        Monomial m = Monomial::one();
        for (int part : delta.parts()) m = m.times_var(part - 1);
        Rational oracle = Rational(centralizer_size(delta)) * s.coeff(m);
        REQUIRE(Rational(character(lam, delta)) == oracle);
      }
    }
}

TEST_CASE("chi at the identity class is the dimension") {
  for (int d = 1; d <= 6; ++d) {
    std::vector<int> ones(d, 1);
    Partition id(ones);
    for (const auto& lam : partitions_of(d))
      REQUIRE(Rational(character(lam, id)) == dimension(lam));
  }
}

TEST_CASE("normalized_character examples") {
  REQUIRE(normalized_character(Partition({1}), Partition({1})) == Rational(1));
  REQUIRE(normalized_character(Partition({2}), Partition({2})) == Rational(1));
  REQUIRE(normalized_character(Partition({1, 1}), Partition({2})) == Rational(-1));
}

TEST_CASE("character map relation reproduces s_lambda exactly") {
  // s_lambda = (dim/d!) sum_Delta phi_lambda(Delta) p_Delta
  for (int d = 1; d <= 6; ++d)
    for (const auto& lam : partitions_of(d)) {
      SymPoly rebuilt;
      for (const auto& delta : partitions_of(d)) {
        Rational c = dimension_factor(lam) * normalized_character(lam, delta);
        rebuilt += c * powersum_product(delta);
      }
      REQUIRE(rebuilt == schur_in_powersums(lam));
    }
}

TEST_CASE("powersum_to_schur examples and roundtrip") {
  auto c1 = powersum_to_schur(Partition({1}));
  REQUIRE(c1.size() == 1);
  REQUIRE(c1.at(Partition({1})) == Rational(1));

  auto c2 = powersum_to_schur(Partition({2}));
  REQUIRE(c2.at(Partition({2})) == Rational(1));
  REQUIRE(c2.at(Partition({1, 1})) == Rational(-1));

  auto c11 = powersum_to_schur(Partition({1, 1}));
  REQUIRE(c11.at(Partition({2})) == Rational(1));
  REQUIRE(c11.at(Partition({1, 1})) == Rational(1));

  // expanding p_Delta through the schur basis and back reproduces p_Delta
  for (int d = 1; d <= 6; ++d)
    for (const auto& delta : partitions_of(d)) {
      SymPoly rebuilt;
      for (const auto& [lam, c] : powersum_to_schur(delta))
        rebuilt += c * schur_in_powersums(lam);
      REQUIRE(rebuilt == powersum_product(delta));
    }
}

TEST_CASE("orthogonality relations hold exactly up to d = 6") {
  for (int d = 1; d <= 6; ++d) {
    auto parts = partitions_of(d);
    Rational dfact = factorial(d);

    // zeta_Delta sum_lambda (dim/d!)^2 phi(mu) phi(Delta) = delta_{Delta,mu}
    for (const auto& delta : parts)
      for (const auto& mu : parts) {
        Rational sum;
        for (const auto& lam : parts) {
          Rational df = dimension_factor(lam);
          sum += df * df * normalized_character(lam, mu) *
                 normalized_character(lam, delta);
        }
        sum *= Rational(centralizer_size(delta));
        REQUIRE(sum == Rational(delta == mu ? 1 : 0));
      }

    // (dim/d!)^2 sum_Delta zeta phi_lambda phi_mu = delta_{lambda,mu}
    for (const auto& lam : parts)
      for (const auto& mu : parts) {
        Rational sum;
        for (const auto& delta : parts)
          sum += Rational(centralizer_size(delta)) *
                 normalized_character(lam, delta) *
                 normalized_character(mu, delta);
        Rational df = dimension_factor(lam);
        sum = df * dimension_factor(mu) * sum;
        REQUIRE(sum == Rational(lam == mu ? 1 : 0));
      }
  }
}

TEST_CASE("character table invariants") {
  auto t = build_character_table(4);
  REQUIRE(t.labels.size() == 5);
  // chi at identity column equals dimension
  size_t id_col = t.labels.size() - 1;  // (1,1,1,1) is last in rev-lex order
  REQUIRE(t.labels[id_col] == Partition({1, 1, 1, 1}));
  for (size_t l = 0; l < t.labels.size(); ++l)
    REQUIRE(Rational(t.chi[l][id_col]) == dimension(t.labels[l]));
}
