#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include <doctest.h>

#include <algorithm>
#include <random>

#include "oracles.hpp"
#include "spatial/partition.hpp"
#include "spatial/random.hpp"
#include "spatial/symtensor.hpp"

using namespace spatial;

static SymMeasure random_symmeasure(Rng& rng, int m, int rank, long bound, Field f = Field::Q) {
  SymMeasure mu(m, rank);
  for (std::size_t i = 0; i < mu.size(); ++i) mu[i] = random_rational(rng, bound, f);
  return mu;
}

TEST_CASE("pair examples") {
  SymMeasure c = SymMeasure::constant(2, 0, Scalar(3));
  SymFn d = SymFn::constant(2, 0, Scalar(4));
  CHECK(pair(c, d) == Scalar(12));
  SymMeasure mu(2, 1);
  mu[0] = 2;
  mu[1] = 3;
  CHECK(pair(mu, SymFn::constant(2, 1, 1)) == Scalar(5));
  CHECK(pair(SymMeasure::constant(2, 2, 1), SymFn::constant(2, 2, 1)) == Scalar(4));
  CHECK_THROWS(pair(SymMeasure(2, 2), SymFn(2, 3)));
  CHECK_THROWS(pair(SymMeasure(2, 2), SymFn(3, 2)));
}

TEST_CASE("pair equals the ordered-tuple sum") {
  Rng rng(1);
  for (int m = 1; m <= 3; ++m)
    for (int n = 0; n <= 4; ++n) {
      SymMeasure mu = random_symmeasure(rng, m, n, 9, Field::Qi);
      SymFn f = random_symfn(rng, m, n, 9, Field::Qi);
      CHECK(pair(mu, f) == oracle::ordered_pair(mu, f));
    }
}

TEST_CASE("storage is canonical") {
  for (int m = 1; m <= 4; ++m)
    for (int n = 0; n <= 6; ++n) {
      const auto& b = MultisetBasis::get(m, n);
      CHECK(b.size() == static_cast<std::size_t>(oracle::binom(m + n - 1, n)));
      for (std::size_t i = 0; i < b.size(); ++i) {
        CHECK(is_canonical(b.at(i), m));
        CHECK(b.rank(b.at(i)) == i);
        CHECK(b.rank_counts(b.counts(i)) == i);
        if (i > 0) CHECK(b.at(i - 1) < b.at(i));
      }
    }
}

TEST_CASE("power measures and functions") {
  CHECK(power_measure(PointMeasure(std::vector<Scalar>{5, 7}), 0) == SymMeasure::constant(2, 0, 1));
  PointMeasure w(std::vector<Scalar>{2, 3});
  SymMeasure p = power_measure(w, 2);
  CHECK(p.at({0, 0}) == Scalar(4));
  CHECK(p.at({0, 1}) == Scalar(6));
  CHECK(p.at({1, 1}) == Scalar(9));
  CHECK_THROWS(power_measure(w, -1));
  Rng rng(2);
  for (int m = 1; m <= 3; ++m)
    for (int n = 0; n <= 5; ++n) {
      PointMeasure om = random_measure(rng, m, 8, Field::Qi);
      PointFn xi = random_fn(rng, m, 8, Field::Qi);
      CHECK(pair(power_measure(om, n), power_fn(xi, n)) == integrate(om, xi).pow(n));
    }
}

TEST_CASE("function product matches the permutation average") {
  Rng rng(3);
  for (int m = 1; m <= 3; ++m)
    for (int a = 0; a <= 3; ++a)
      for (int b = 0; b + a <= 4; ++b) {
        SymFn f = random_symfn(rng, m, a, 9);
        SymFn g = random_symfn(rng, m, b, 9);
        CHECK(sym_product_fn(f, g) == oracle::sym_product(f, g));
        CHECK(sym_product_fn(f, g) == sym_product_fn(g, f));
      }
  PointFn xi = random_fn(rng, 3, 5);
  CHECK(sym_product_fn(power_fn(xi, 2), power_fn(xi, 3)) == power_fn(xi, 5));
}

TEST_CASE("measure product satisfies its defining pairing") {
  Rng rng(4);
  for (int m = 1; m <= 3; ++m)
    for (int a = 0; a <= 3; ++a)
      for (int b = 0; a + b <= 3; ++b) {
        SymMeasure mu = random_symmeasure(rng, m, a, 7, Field::Qi);
        SymMeasure nu = random_symmeasure(rng, m, b, 7, Field::Qi);
        SymFn h = random_symfn(rng, m, a + b, 7, Field::Qi);
        Scalar brute(0);
        oracle::for_each_tuple(m, a, [&](const std::vector<Label>& s) {
          oracle::for_each_tuple(m, b, [&](const std::vector<Label>& t) {
            std::vector<Label> st = s;
            st.insert(st.end(), t.begin(), t.end());
            brute += oracle::value(mu, s) * oracle::value(nu, t) * oracle::value(h, st);
          });
        });
        CHECK(pair(sym_product_measure(mu, nu), h) == brute);
        CHECK(sym_product_measure(mu, nu) == sym_product_measure(nu, mu));
      }
}

TEST_CASE("diagonal embeddings") {
  Rng rng(5);
  for (int m = 1; m <= 3; ++m)
    for (int n = 1; n <= 5; ++n) {
      SymFn f = random_symfn(rng, m, n, 9);
      CHECK(diag_embed(f, std::vector<int>(static_cast<std::size_t>(n), 1)) == f);
      SymFn d = diag_embed(f, {n});
      for (Label x = 0; x < m; ++x) CHECK(d.at({x}) == f.at(MultiIndex(static_cast<std::size_t>(n), x)));
    }
  PointFn xi = random_fn(rng, 3, 9);
  CHECK(diag_embed(power_fn(xi, 3), {2, 1}) ==
        sym_product_fn(as_symfn(pointwise_pow(xi, 2)), as_symfn(xi)));
  CHECK_THROWS(diag_embed(SymFn(2, 3), {2, 2}));
  CHECK_THROWS(diag_embed(SymFn(2, 3), {3, 0}));
}

TEST_CASE("diagonal embedding matches the direct symmetrization") {
  Rng rng(6);
  const int m = 3;
  for (int n = 2; n <= 5; ++n)
    for (int k = 1; k <= n; ++k)
      for (const auto& comp : compositions(n, k)) {
        SymFn f = random_symfn(rng, m, n, 9);
        SymFn got = diag_embed(f, comp);
        // average over permutations of y of f(y_1^{i_1}, ..., y_k^{i_k})
        for (std::size_t i = 0; i < got.size(); ++i) {
          std::vector<Label> y = got.basis().at(i);
          std::vector<int> perm(static_cast<std::size_t>(k));
          for (int j = 0; j < k; ++j) perm[static_cast<std::size_t>(j)] = j;
          Scalar acc(0);
          long count = 0;
          do {
            std::vector<Label> arg;
            for (int j = 0; j < k; ++j)
              for (int r = 0; r < comp[static_cast<std::size_t>(j)]; ++r)
                arg.push_back(y[static_cast<std::size_t>(perm[static_cast<std::size_t>(j)])]);
            acc += oracle::value(f, arg);
            ++count;
          } while (std::next_permutation(perm.begin(), perm.end()));
          CHECK(got[i] == acc / Scalar(count));
        }
      }
}

TEST_CASE("partition embedding") {
  Rng rng(7);
  SymFn f2 = random_symfn(rng, 3, 2, 9);
  SymFn full = diag_partition(f2, {{1, 2}});
  for (Label x = 0; x < 3; ++x) CHECK(full.at({x}) == f2.at({x, x}));
  std::mt19937 shuffle(1);
  for (int n = 1; n <= 5; ++n) {
    SymFn f = random_symfn(rng, 3, n, 9);
    std::vector<std::vector<int>> singles;
    for (int j = 1; j <= n; ++j) singles.push_back({j});
    CHECK(diag_partition(f, singles) == f);
    for_each_set_partition(n, -1, [&](const std::vector<int>& rgs) {
      auto blocks = rgs_to_blocks(rgs);
      SymFn a = diag_partition(f, blocks);
      std::shuffle(blocks.begin(), blocks.end(), shuffle);
      CHECK(diag_partition(f, blocks) == a);
    });
  }
  CHECK_THROWS(diag_partition(SymFn(2, 3), {{1, 2}}));
  CHECK_THROWS(diag_partition(SymFn(2, 3), {{1, 2}, {2, 3}}));
  CHECK_THROWS(diag_partition(SymFn(2, 3), {{1, 2}, {}, {3}}));
}

TEST_CASE("diagonal measures") {
  PointMeasure w(std::vector<Scalar>{1, 1});
  CHECK(diag_measure(w, 1) == as_symmeasure(w));
  CHECK(pair(diag_measure(w, 3), SymFn::constant(2, 3, 1)) == Scalar(2));
  CHECK_THROWS(diag_measure(w, 0));
  Rng rng(8);
  for (int t = 0; t < 10; ++t) {
    PointMeasure om = random_measure(rng, 3, 9);
    PointFn xi = random_fn(rng, 3, 9);
    CHECK(pair(diag_measure(om, 2), power_fn(xi, 2)) == integrate(om, pointwise_pow(xi, 2)));
    SymMeasure d = diag_measure(om, 3);
    for (std::size_t i = 0; i < d.size(); ++i) {
      const auto& idx = d.basis().at(i);
      if (idx.front() != idx.back()) CHECK(d[i].is_zero());
    }
  }
}

TEST_CASE("multiplication by N(xi)") {
  Rng rng(9);
  SymFn f = random_symfn(rng, 3, 3, 9);
  CHECK(multiply_N(constant_fn(3, 1), f) == f * Scalar(3));
  PointFn phi = random_fn(rng, 3, 9), xi = random_fn(rng, 3, 9);
  CHECK(multiply_N(xi, as_symfn(phi)) == as_symfn(pointwise(phi, xi)));
  CHECK_THROWS(multiply_N(xi, SymFn(3, 0)));
  for (int n = 1; n <= 4; ++n) {
    PointMeasure om = random_measure(rng, 3, 9);
    SymFn lhs = multiply_N(xi, power_fn(xi, n));
    SymFn rhs = sym_product_fn(as_symfn(pointwise_pow(xi, 2)), power_fn(xi, n - 1)) * Scalar(n);
    CHECK(lhs == rhs);
    Scalar brute(0);
    oracle::for_each_tuple(3, n, [&](const std::vector<Label>& t) {
      Scalar mass(1), s(0), prod(1);
      for (Label x : t) {
        mass *= om[x];
        s += xi[x];
        prod *= xi[x];
      }
      brute += mass * s * prod;
    });
    CHECK(pair(power_measure(om, n), lhs) == brute);
  }
}

TEST_CASE("polynomial evaluation") {
  Rng rng(10);
  GradedFn c = GradedFn::constant(2, Scalar(7));
  CHECK(eval_polynomial(c, random_measure(rng, 2, 5)) == Scalar(7));
  PointFn xi = random_fn(rng, 3, 9);
  PointMeasure om = random_measure(rng, 3, 9);
  CHECK(eval_polynomial(GradedFn::monomial(power_fn(xi, 2)), om) == integrate(om, xi).pow(2));
  for (int t = 0; t < 5; ++t) {
    GradedFn p = random_graded(rng, 3, 4, 9);
    Scalar brute(0);
    for (int k = 0; k <= 4; ++k)
      oracle::for_each_tuple(3, k, [&](const std::vector<Label>& tup) {
        Scalar mass(1);
        for (Label x : tup) mass *= om[x];
        brute += mass * oracle::value(p[k], tup);
      });
    CHECK(eval_polynomial(p, om) == brute);
  }
  GradedFn p = random_graded(rng, 3, 2, 9);
  CHECK(eval_on_multiset(p, {}) == p[0][0]);
  CHECK(eval_on_multiset(GradedFn::monomial(power_fn(xi, 2)), {1, 1}) == xi[1] * xi[1]);
  CHECK_THROWS(eval_on_multiset(p, {0, 1, 2}));
}

TEST_CASE("polynomial products") {
  Rng rng(11);
  for (int t = 0; t < 5; ++t) {
    GradedFn p = random_graded(rng, 2, 3, 9), q = random_graded(rng, 2, 2, 9);
    PointMeasure om = random_measure(rng, 2, 9);
    CHECK(eval_polynomial(multiply_polynomials(p, q), om) == eval_polynomial(p, om) * eval_polynomial(q, om));
  }
}
