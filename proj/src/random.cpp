#include "spatial/random.hpp"

#include <stdexcept>

namespace spatial {

long Rng::uniform_int(long lo, long hi) {
  if (hi < lo) throw std::invalid_argument("empty range");
  auto span = static_cast<std::uint64_t>(hi - lo) + 1;
  return lo + static_cast<long>(eng_() % span);
}

double Rng::uniform01() { return static_cast<double>(eng_() >> 11) * 0x1.0p-53; }

Rng Rng::split() { return Rng(eng_() ^ 0x9e3779b97f4a7c15ULL); }

static mpq_class rational_part(Rng& rng, long bound) {
  long p = rng.uniform_int(-bound, bound);
  long q = rng.uniform_int(1, bound);
  mpq_class v(p, q);
  v.canonicalize();
  return v;
}

Scalar random_rational(Rng& rng, long bound, Field field) {
  if (bound < 1) throw std::invalid_argument("bound must be >= 1");
  mpq_class re = rational_part(rng, bound);
  mpq_class im = field == Field::Qi ? rational_part(rng, bound) : mpq_class(0);
  return Scalar(re, im);
}

Scalar random_rational(std::uint64_t seed, long bound) {
  Rng rng(seed);
  return random_rational(rng, bound);
}

PointMeasure random_measure(Rng& rng, int m, long bound, Field field) {
  PointMeasure w(m);
  for (int x = 0; x < m; ++x) w[x] = random_rational(rng, bound, field);
  return w;
}

PointMeasure random_measure(int m, std::uint64_t seed, long bound) {
  Rng rng(seed);
  return random_measure(rng, m, bound);
}

PointFn random_fn(Rng& rng, int m, long bound, Field field) {
  PointFn w(m);
  for (int x = 0; x < m; ++x) w[x] = random_rational(rng, bound, field);
  return w;
}

SymFn random_symfn(Rng& rng, int m, int rank, long bound, Field field) {
  SymFn f(m, rank);
  for (std::size_t i = 0; i < f.size(); ++i) f[i] = random_rational(rng, bound, field);
  return f;
}

GradedFn random_graded(Rng& rng, int m, int degree, long bound, Field field) {
  GradedFn p(m, degree);
  for (int k = 0; k <= degree; ++k) p[k] = random_symfn(rng, m, k, bound, field);
  return p;
}

PointMeasure random_nonzero_measure(Rng& rng, int m, long bound, Field field) {
  PointMeasure w(m);
  for (int x = 0; x < m; ++x) {
    do {
      w[x] = random_rational(rng, bound, field);
    } while (w[x].is_zero());
  }
  return w;
}

PointMeasure random_probability(Rng& rng, int m, long bound) {
  PointMeasure w(m);
  Scalar total(0);
  do {
    total = Scalar(0);
    for (int x = 0; x < m; ++x) {
      w[x] = Scalar(rng.uniform_int(0, bound));
      total += w[x];
    }
  } while (total.is_zero());
  for (int x = 0; x < m; ++x) w[x] /= total;
  return w;
}

}  // namespace spatial
