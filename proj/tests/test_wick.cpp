#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include <doctest.h>

#include <map>
#include <utility>

#include "oracles.hpp"
#include "spatial/poisson.hpp"
#include "spatial/random.hpp"
#include "spatial/wick.hpp"

using namespace spatial;

namespace {

// Operator word; true = creator. Normal ordering by adjacent rewriting
// a^-(x) a^+(y) -> a^+(y) a^-(x) + [x == y] kappa_x.
using Word = std::vector<std::pair<bool, Label>>;

std::map<Word, Scalar> rewrite_normal(const RefMeasure& ref, const Word& start) {
  std::map<Word, Scalar> done, pending{{start, Scalar(1)}};
  while (!pending.empty()) {
    auto [w, c] = *pending.begin();
    pending.erase(pending.begin());
    std::size_t pos = w.size();
    for (std::size_t i = 0; i + 1 < w.size(); ++i)
      if (!w[i].first && w[i + 1].first) {
        pos = i;
        break;
      }
    if (pos == w.size()) {
      done[w] += c;
      continue;
    }
    Word swapped = w;
    std::swap(swapped[pos], swapped[pos + 1]);
    pending[swapped] += c;
    if (w[pos].second == w[pos + 1].second) {
      Word shorter = w;
      shorter.erase(shorter.begin() + static_cast<long>(pos), shorter.begin() + static_cast<long>(pos) + 2);
      pending[shorter] += c * ref.kappa(w[pos].second);
    }
  }
  return done;
}

WickPoly from_words(const RefMeasure& ref, const std::map<Word, Scalar>& words) {
  WickPoly out(ref);
  for (const auto& [w, c] : words) {
    MultiIndex A, B;
    for (const auto& [cre, x] : w) (cre ? A : B).push_back(x);
    std::sort(A.begin(), A.end());
    std::sort(B.begin(), B.end());
    out += WickPoly::monomial(ref, A, B, c);
  }
  return out;
}

Word random_word(Rng& rng, int m, int len) {
  Word w;
  for (int i = 0; i < len; ++i) w.push_back({rng.uniform_int(0, 1) == 1, static_cast<Label>(rng.uniform_int(0, m - 1))});
  return w;
}

WickPoly word_poly(const RefMeasure& ref, const Word& w) {
  std::vector<WickPoly> f;
  for (const auto& [cre, x] : w) f.push_back(cre ? creator(ref, x) : annihilator(ref, x));
  return product_chain(f);
}

}  // namespace

TEST_CASE("reference measure") {
  CHECK_THROWS(RefMeasure(PointMeasure(std::vector<Scalar>{1, 0})));
  RefMeasure ref(PointMeasure(std::vector<Scalar>{2, Scalar::fraction(-1, 3)}));
  CHECK(ref.kappa(0) == Scalar::fraction(1, 2));
  CHECK(ref.kappa(1) == Scalar(-3));
}

TEST_CASE("basic contraction and unit") {
  RefMeasure ref(PointMeasure(std::vector<Scalar>{3, 5}));
  WickPoly p = normal_order_product(annihilator(ref, 1), creator(ref, 1));
  WickPoly expect = WickPoly::one(ref) * Scalar::fraction(1, 5) + WickPoly::monomial(ref, {1}, {1});
  CHECK(p == expect);
  CHECK(normal_order_product(annihilator(ref, 0), creator(ref, 1)) == WickPoly::monomial(ref, {1}, {0}));
  Rng rng(1);
  WickPoly q = WickPoly::monomial(ref, {0, 1}, {1}, Scalar(7));
  CHECK(normal_order_product(WickPoly::one(ref), q) == q);
  CHECK(normal_order_product(q, WickPoly::one(ref)) == q);
  WickPoly z = q;
  z.add(WickMonomial{{1, 1}, {0, 1}}, Scalar(0));
  CHECK(z.terms().size() == 1);
  RefMeasure other(PointMeasure(std::vector<Scalar>{1, 1}));
  CHECK_THROWS(normal_order_product(q, WickPoly::one(other)));
}

TEST_CASE("product agrees with adjacent-swap normal ordering") {
  Rng rng(2);
  for (int m = 1; m <= 2; ++m) {
    RefMeasure ref(random_nonzero_measure(rng, m, 5, Field::Qi));
    for (int t = 0; t < 30; ++t) {
      Word w = random_word(rng, m, 1 + t % 6);
      CHECK(word_poly(ref, w) == from_words(ref, rewrite_normal(ref, w)));
    }
  }
}

TEST_CASE("associativity") {
  Rng rng(3);
  for (int m = 1; m <= 2; ++m) {
    RefMeasure ref(random_nonzero_measure(rng, m, 5));
    for (int t = 0; t < 20; ++t) {
      WickPoly a = word_poly(ref, random_word(rng, m, 3));
      WickPoly b = word_poly(ref, random_word(rng, m, 3)) * random_rational(rng, 5);
      WickPoly c = word_poly(ref, random_word(rng, m, 2)) + WickPoly::one(ref);
      CHECK(normal_order_product(normal_order_product(a, b), c) ==
            normal_order_product(a, normal_order_product(b, c)));
    }
  }
}

TEST_CASE("density operators and commutation relations") {
  Rng rng(4);
  RefMeasure ref(random_nonzero_measure(rng, 3, 7, Field::Qi));
  PointFn ind = indicator(3, 2);
  CHECK(rho(ref, ind) == WickPoly::monomial(ref, {2}, {2}, ref.sigma()[2]));
  PointFn a = random_fn(rng, 3, 7), b = random_fn(rng, 3, 7);
  Scalar s = random_rational(rng, 7);
  CHECK(rho(ref, a + b * s) == rho(ref, a) + rho(ref, b) * s);
  CHECK(commutator(rho(ref, a), rho(ref, b)).is_zero());
  CHECK(commutator(r_operator(ref, a), r_operator(ref, b)).is_zero());
  CHECK(r_operator(ref, a + b) == r_operator(ref, a) + r_operator(ref, b));
  for (int t = 0; t < 5; ++t) {
    Report r = check_ccr(ref, random_fn(rng, 3, 7, Field::Qi), random_fn(rng, 3, 7, Field::Qi));
    CHECK_MESSAGE(r.passed(), r.name);
    CHECK(r.cases >= 7);
  }
}

TEST_CASE("vacuum functional") {
  Rng rng(5);
  RefMeasure ref(random_nonzero_measure(rng, 2, 7));
  PointFn xi = random_fn(rng, 2, 7);
  CHECK(vacuum(WickPoly::one(ref)) == Scalar(1));
  CHECK(vacuum(rho(ref, xi)) == Scalar(0));
  CHECK(vacuum(r_operator(ref, xi)) == integrate(ref.sigma(), xi));
}

TEST_CASE("smeared Wick products") {
  Rng rng(6);
  RefMeasure ref(random_nonzero_measure(rng, 2, 7));
  PointFn x1 = random_fn(rng, 2, 7), x2 = random_fn(rng, 2, 7);
  CHECK(wick_rho_product(ref, {x1}) == rho(ref, x1));
  WickPoly two(ref);
  for (Label x = 0; x < 2; ++x)
    for (Label y = 0; y < 2; ++y) {
      MultiIndex t{x, y};
      std::sort(t.begin(), t.end());
      two += WickPoly::monomial(ref, t, t, x1[x] * x2[y] * ref.sigma()[x] * ref.sigma()[y]);
    }
  CHECK(wick_rho_product(ref, {x1, x2}) == two);
  for (int m = 1; m <= 3; ++m)
    for (int k = 1; k <= 4; ++k) {
      RefMeasure r(random_nonzero_measure(rng, m, 7, Field::Qi));
      std::vector<PointFn> xis;
      for (int i = 0; i < k; ++i) xis.push_back(random_fn(rng, m, 7));
      CHECK(check_wick_routes(r, xis).passed());
    }
}

TEST_CASE("Katriel expansion") {
  Rng rng(7);
  RefMeasure ref(random_nonzero_measure(rng, 2, 7));
  PointFn x1 = random_fn(rng, 2, 7), x2 = random_fn(rng, 2, 7);
  CHECK(katriel_rhs(ref, {x1}) == rho(ref, x1));
  CHECK(katriel_rhs(ref, {x1, x2}) == wick_rho_product(ref, {x1, x2}) + rho(ref, pointwise(x1, x2)));
  // one point, sigma = 1: rho^n = sum_k S(n,k) (a^+)^k (a^-)^k
  RefMeasure unit(PointMeasure(std::vector<Scalar>{1}));
  for (int n = 1; n <= 6; ++n) {
    std::vector<WickPoly> f(static_cast<std::size_t>(n), rho(unit, constant_fn(1, 1)));
    WickPoly expect(unit);
    for (int k = 1; k <= n; ++k)
      expect += WickPoly::monomial(unit, MultiIndex(static_cast<std::size_t>(k), 0),
                                   MultiIndex(static_cast<std::size_t>(k), 0), Scalar(oracle::set_partitions(n, k)));
    CHECK(product_chain(f) == expect);
    CHECK(check_katriel(unit, std::vector<PointFn>(static_cast<std::size_t>(n), constant_fn(1, 1))).passed());
  }
  for (int m = 1; m <= 3; ++m)
    for (int n = 1; n <= 4; ++n) {
      RefMeasure r(random_nonzero_measure(rng, m, 7, Field::Qi));
      std::vector<PointFn> xis;
      for (int i = 0; i < n; ++i) xis.push_back(random_fn(rng, m, 7, Field::Qi));
      Report rep = check_katriel(r, xis);
      CHECK_MESSAGE(rep.passed(), rep.name);
    }
}

TEST_CASE("quantum Poisson process") {
  Rng rng(8);
  RefMeasure ref(random_nonzero_measure(rng, 2, 7, Field::Qi));
  PointFn x1 = random_fn(rng, 2, 7), x2 = random_fn(rng, 2, 7);
  const PointMeasure& s = ref.sigma();
  CHECK(vacuum(r_operator(ref, x1)) == integrate(s, x1));
  Scalar two = vacuum(normal_order_product(r_operator(ref, x1), r_operator(ref, x2)));
  CHECK(two == integrate(s, x1) * integrate(s, x2) + integrate(s, pointwise(x1, x2)));
  for (int m = 1; m <= 3; ++m)
    for (int n = 1; n <= 4; ++n) {
      RefMeasure r(random_nonzero_measure(rng, m, 7, n % 2 ? Field::Qi : Field::Q));
      std::vector<PointFn> xis;
      for (int i = 0; i < n; ++i) xis.push_back(random_fn(rng, m, 7));
      CHECK(check_quantum_poisson(r, xis).passed());
      CHECK(check_lemma_R_normal(r, xis).passed());
    }
}
