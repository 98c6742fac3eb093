#pragma once

#include <complex>
#include <cstddef>
#include <string>
#include <string_view>
#include <vector>

#include "spatial/scalar.hpp"
#include "spatial/series.hpp"
#include "spatial/symtensor.hpp"

namespace spatial {

// Outcome of an identity check: every comparison is one case.
struct Report {
  std::string name;
  std::size_t cases = 0;
  std::size_t failures = 0;
  double max_discrepancy = 0.0;
  std::vector<std::string> notes;  // first few failure descriptions

  explicit Report(std::string name_ = {}) : name(std::move(name_)) {}
  bool passed() const { return failures == 0; }

  void expect(bool ok, std::string_view what);
  void expect_equal(const Scalar& lhs, const Scalar& rhs, std::string_view what);
  void expect_equal(const SymFn& lhs, const SymFn& rhs, std::string_view what);
  void expect_equal(const SymMeasure& lhs, const SymMeasure& rhs, std::string_view what);
  void expect_equal(const GradedFn& lhs, const GradedFn& rhs, std::string_view what);
  // coefficients 0..min(order) compared
  void expect_equal(const ScalarSeries& lhs, const ScalarSeries& rhs, std::string_view what);
  void expect_close(std::complex<double> lhs, std::complex<double> rhs, double tol,
                    std::string_view what);
  void merge(const Report& other);
  // counts one failed case
  void fail(std::string_view what, double discrepancy);
};

}  // namespace spatial
