#pragma once

#include <cstdint>
#include <random>

#include "spatial/ground.hpp"
#include "spatial/scalar.hpp"
#include "spatial/symtensor.hpp"

namespace spatial {

// Seeded std::mt19937_64 with portable range mapping (plain modulo), so streams
// are identical across standard libraries.
class Rng {
 public:
  explicit Rng(std::uint64_t seed) : eng_(seed) {}

  std::uint64_t next() { return eng_(); }
  // uniform in [lo, hi]
  long uniform_int(long lo, long hi);
  // uniform in [0, 1)
  double uniform01();
  // independent stream derived from this one
  Rng split();

 private:
  std::mt19937_64 eng_;
};

// |numerator|, denominator <= bound; imaginary part too when field is Qi.
Scalar random_rational(Rng& rng, long bound, Field field = Field::Q);
Scalar random_rational(std::uint64_t seed, long bound);
PointMeasure random_measure(Rng& rng, int m, long bound, Field field = Field::Q);
PointMeasure random_measure(int m, std::uint64_t seed, long bound);
PointFn random_fn(Rng& rng, int m, long bound, Field field = Field::Q);
SymFn random_symfn(Rng& rng, int m, int rank, long bound, Field field = Field::Q);
GradedFn random_graded(Rng& rng, int m, int degree, long bound, Field field = Field::Q);
// nonzero weights, for reference measures
PointMeasure random_nonzero_measure(Rng& rng, int m, long bound, Field field = Field::Q);
// nonnegative weights summing to 1
PointMeasure random_probability(Rng& rng, int m, long bound);

}  // namespace spatial
