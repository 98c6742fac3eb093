#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include <doctest.h>

#include "oracles.hpp"
#include "spatial/factorial.hpp"
#include "spatial/random.hpp"
#include "spatial/stirling.hpp"

using namespace spatial;

static SymFn one_point(int n) { return SymFn::constant(1, n, 1); }
static Scalar scalar_of(const SymFn& f) { return f[0]; }

TEST_CASE("kind parsing") {
  CHECK(parse_kind("S") == OperatorKind::S2);
  CHECK(parse_kind("s") == OperatorKind::S1);
  CHECK(parse_kind("c") == OperatorKind::C1);
  CHECK(parse_kind("L") == OperatorKind::Lah);
  CHECK_THROWS(parse_kind("x"));
  CHECK(kind_symbol(OperatorKind::Lah) == "L");
}

TEST_CASE("one-point values from brute-force counts") {
  CHECK(scalar_of(apply_operator(OperatorKind::S2, 4, 2, one_point(4))) == Scalar(7));
  CHECK(scalar_of(apply_operator(OperatorKind::C1, 4, 2, one_point(4))) == Scalar(11));
  auto S = classical_triangle(OperatorKind::S2, 10);
  auto c = classical_triangle(OperatorKind::C1, 10);
  auto s = classical_triangle(OperatorKind::S1, 10);
  auto L = classical_triangle(OperatorKind::Lah, 10);
  for (int n = 0; n <= 10; ++n)
    for (int k = 0; k <= n; ++k) {
      const auto N = static_cast<std::size_t>(n), K = static_cast<std::size_t>(k);
      CHECK(S[N][K] == Scalar(oracle::set_partitions(n, k)));
      CHECK(L[N][K] == Scalar(oracle::lah_count(n, k)));
      if (n <= 8) {
        long cc = oracle::cycle_count(n, k);
        CHECK(c[N][K] == Scalar(cc));
        CHECK(s[N][K] == Scalar((n - k) % 2 ? -cc : cc));
      }
    }
  // closed forms
  for (int n = 1; n <= 10; ++n)
    for (int k = 1; k <= n; ++k) {
      Scalar lah = binomial(n - 1, k - 1) * factorial(n) / factorial(k);
      CHECK(L[n][k] == lah);
      Scalar euler(0);
      for (int l = 0; l <= k; ++l) euler += Scalar((k - l) % 2 ? -1 : 1) * binomial(k, l) * Scalar(l).pow(n);
      CHECK(S[n][k] == euler / factorial(k));
    }
  CHECK(S[5] == std::vector<Scalar>{0, 1, 15, 25, 10, 1});
  CHECK(c[4] == std::vector<Scalar>{0, 6, 11, 6, 1});
}

TEST_CASE("edge cases") {
  Rng rng(1);
  SymFn f = random_symfn(rng, 3, 4, 9);
  for (auto kind : {OperatorKind::S2, OperatorKind::S1, OperatorKind::C1, OperatorKind::Lah}) {
    CHECK(apply_operator(kind, 4, 4, f) == f);
    CHECK(apply_operator(kind, 4, 5, f).is_zero());
    CHECK(apply_operator(kind, 4, 0, f).is_zero());
  }
  CHECK(apply_operator(OperatorKind::S2, 0, 0, SymFn::constant(3, 0, 5)) == SymFn::constant(3, 0, 5));
  CHECK_THROWS(apply_operator(OperatorKind::S2, 3, -1, SymFn(3, 3)));
  CHECK_THROWS(apply_operator(OperatorKind::S2, 4, 2, SymFn(3, 3)));
}

TEST_CASE("recurrence route reproduces the classical recurrence") {
  for (auto kind : {OperatorKind::S2, OperatorKind::S1})
    for (int n = 1; n <= 8; ++n)
      for (int k = 1; k <= n; ++k)
        CHECK(apply_via_recurrence(kind, n, k, one_point(n)) == apply_operator(kind, n, k, one_point(n)));
}

TEST_CASE("all routes agree on random inputs") {
  Rng rng(2);
  for (int m = 1; m <= 3; ++m)
    for (int n = 1; n <= 5; ++n)
      for (int k = 1; k <= n; ++k) {
        SymFn f = random_symfn(rng, m, n, 9, Field::Qi);
        Report r = check_routes(n, k, f);
        CHECK_MESSAGE(r.passed(), r.name);
        SymFn probe = power_fn(random_fn(rng, m, 9), n);
        CHECK(apply_via_euler(n, k, probe) == apply_operator(OperatorKind::S2, n, k, probe));
        CHECK(apply_via_recurrence(OperatorKind::S2, n, k, probe) == apply_operator(OperatorKind::S2, n, k, probe));
      }
}

TEST_CASE("matrix route agrees with direct application") {
  Rng rng(3);
  for (auto kind : {OperatorKind::S2, OperatorKind::S1, OperatorKind::C1, OperatorKind::Lah})
    for (int n = 1; n <= 4; ++n)
      for (int k = 1; k <= n; ++k) {
        SymFn f = random_symfn(rng, 2, n, 9);
        auto M = operator_matrix(kind, n, k, 2);
        CHECK(apply_matrix(*M, f) == apply_operator(kind, n, k, f));
        SymMeasure mu(2, k);
        for (std::size_t i = 0; i < mu.size(); ++i) mu[i] = random_rational(rng, 9);
        CHECK(pair(adjoint_apply(kind, n, k, mu), f) == pair(mu, apply_operator(kind, n, k, f)));
      }
}

TEST_CASE("adjoint expansions") {
  Rng rng(4);
  for (int n = 1; n <= 5; ++n) {
    PointMeasure om = random_measure(rng, 3, 9);
    SymMeasure falling_sum(3, n), power_sum(3, n);
    for (int k = 1; k <= n; ++k) {
      falling_sum += adjoint_apply(OperatorKind::S1, n, k, power_measure(om, k));
      power_sum += adjoint_apply(OperatorKind::S2, n, k, falling(om, k));
    }
    CHECK(falling_sum == falling(om, n));
    CHECK(power_sum == power_measure(om, n));
    SymMeasure mu = power_measure(om, n);
    CHECK(adjoint_apply(OperatorKind::S2, n, n, mu) == mu);
    CHECK(check_expansions(n, om, random_symfn(rng, 3, n, 9)).passed());
  }
}

TEST_CASE("sign law and orthogonality") {
  Rng rng(5);
  for (int m = 1; m <= 3; ++m)
    for (int n = 1; n <= 5; ++n) {
      for (int k = 1; k <= n; ++k) CHECK(check_sign_law(n, k, m).passed());
      for (int i = 1; i <= n + 1; ++i) {
        Report r = check_orthogonality(n, i, random_fn(rng, m, 9), random_measure(rng, m, 9));
        CHECK_MESSAGE(r.passed(), r.name);
      }
    }
}

TEST_CASE("Lah checks") {
  Rng rng(6);
  for (int n = 1; n <= 5; ++n)
    for (int k = 1; k <= n; ++k) {
      Report r = check_lah(n, k, random_measure(rng, 2, 9), random_fn(rng, 2, 9));
      CHECK_MESSAGE(r.passed(), r.name);
    }
}

TEST_CASE("Olson identity on one point against the closed forms") {
  auto S = classical_triangle(OperatorKind::S2, 12);
  auto s = classical_triangle(OperatorKind::S1, 12);
  for (int n = 1; n <= 3; ++n)
    for (int mm = 0; mm <= 3; ++mm)
      for (int i = 1; i <= n + mm + 1; ++i) {
        Scalar lhs(0);
        for (int k = 0; k <= n; ++k) {
          const std::size_t row = static_cast<std::size_t>(k + mm);
          if (i <= k + mm) lhs += S[row][static_cast<std::size_t>(i)] * s[static_cast<std::size_t>(n)][static_cast<std::size_t>(k)];
        }
        long expect;
        if (i < n || i > n + mm) {
          expect = 0;
        } else if (i == n) {
          expect = 1;
          for (int r = 0; r < mm; ++r) expect *= i;
        } else {
          long acc = 0, ifac = 1;
          for (int l = 0; l <= i; ++l) {
            long term = oracle::binom(i, l) * oracle::falling_int(l, n);
            for (int r = 0; r < mm; ++r) term *= l;
            acc += (i - l) % 2 ? -term : term;
          }
          for (int r = 2; r <= i; ++r) ifac *= r;
          expect = acc / ifac;
        }
        CHECK(lhs == Scalar(expect));
        CHECK(check_olson(n, mm, i, SymFn::constant(1, n + mm, 1)).passed());
      }
}

TEST_CASE("Olson identity on random inputs") {
  Rng rng(7);
  for (int n = 1; n <= 3; ++n)
    for (int mm = 0; mm + n <= 4; ++mm)
      for (int i = 1; i <= n + mm + 1; ++i) {
        Report r = check_olson(n, mm, i, random_symfn(rng, 2, n + mm, 9));
        CHECK_MESSAGE(r.passed(), r.name);
      }
}

TEST_CASE("convolution identities") {
  Rng rng(8);
  auto s = classical_triangle(OperatorKind::S1, 8);
  auto S = classical_triangle(OperatorKind::S2, 8);
  for (int n = 0; n <= 6; ++n)
    for (int i = 0; i <= n; ++i)
      for (int j = 0; i + j <= n; ++j) {
        Scalar ls = binomial(i + j, i) * s[n][i + j], rs(0);
        Scalar lS = binomial(i + j, i) * S[n][i + j], rS(0);
        for (int k = 0; k <= n; ++k) {
          if (i <= k && j <= n - k) {
            rs += binomial(n, k) * s[k][i] * s[n - k][j];
            rS += binomial(n, k) * S[k][i] * S[n - k][j];
          }
        }
        CHECK(ls == rs);
        CHECK(lS == rS);
      }
  for (int n = 1; n <= 5; ++n)
    for (int i = 0; i <= n; ++i)
      for (int j = 0; i + j <= n; ++j) {
        Report r = check_convolution_identity(n, i, j, random_fn(rng, 2, 9));
        CHECK_MESSAGE(r.passed(), r.name);
      }
  Report g = check_convolution_identity(4, 1, 2, random_symfn(rng, 2, 4, 9));
  CHECK(g.passed());
}

TEST_CASE("shift identities") {
  auto s = classical_triangle(OperatorKind::S1, 8);
  for (int n = 2; n <= 6; ++n)
    for (int i = 1; i < n; ++i) {
      Scalar lhs(0), rhs(0);
      for (int k = 0; i + k <= n; ++k) {
        Scalar sign(k % 2 ? -1 : 1);
        lhs += sign * binomial(i + k, k) * s[n][i + k];
        rhs += sign * falling_number(Scalar(n), k) * s[n - k][i];
      }
      CHECK(lhs == rhs);
    }
  Rng rng(9);
  for (int n = 2; n <= 5; ++n)
    for (int i = 1; i < n; ++i)
      for (Label x = 0; x < 3; ++x) {
        Report r = check_shift_identity(n, i, x, random_fn(rng, 3, 9));
        CHECK_MESSAGE(r.passed(), r.name);
      }
}

TEST_CASE("generating functions") {
  Rng rng(10);
  for (auto kind : {OperatorKind::S2, OperatorKind::S1, OperatorKind::C1, OperatorKind::Lah})
    for (int k = 1; k <= 3; ++k) {
      Report r = check_genfun_stirling(kind, k, random_fn(rng, 2, 9), 8, random_measure(rng, 2, 9));
      CHECK_MESSAGE(r.passed(), r.name);
      Report one = check_genfun_stirling(kind, k, PointFn(std::vector<Scalar>{1}), 8,
                                         PointMeasure(std::vector<Scalar>{1}));
      CHECK(one.passed());
    }
  // one-point exponential generating function of S(n,2): (e^t - 1)^2 / 2
  auto S = classical_triangle(OperatorKind::S2, 8);
  for (int n = 2; n <= 8; ++n) CHECK(S[n][2] * Scalar(2) == Scalar(2).pow(n) - Scalar(2));
}
