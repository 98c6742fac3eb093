#include "spatial/report.hpp"

#include <algorithm>
#include <cmath>
#include <limits>

namespace spatial {

namespace {
constexpr std::size_t kMaxNotes = 8;
}

void Report::fail(std::string_view what, double discrepancy) {
  ++cases;
  ++failures;
  if (notes.size() < kMaxNotes) notes.emplace_back(what);
  if (std::isnan(discrepancy)) discrepancy = std::numeric_limits<double>::infinity();
  max_discrepancy = std::max(max_discrepancy, discrepancy);
}

void Report::expect(bool ok, std::string_view what) {
  if (!ok) fail(what, std::numeric_limits<double>::infinity());
  else ++cases;
}

void Report::expect_equal(const Scalar& lhs, const Scalar& rhs, std::string_view what) {
  if (lhs == rhs) {
    ++cases;
    return;
  }
  mpq_class d = (lhs - rhs).magnitude_bound();
  fail(std::string(what) + ": " + lhs.to_string() + " != " + rhs.to_string(), d.get_d());
}

template <class T>
static void compare_tensors(Report& r, const T& lhs, const T& rhs, std::string_view what) {
  if (lhs.m() != rhs.m() || lhs.rank() != rhs.rank()) {
    r.expect(false, std::string(what) + ": shape mismatch");
    return;
  }
  mpq_class worst = 0;
  for (std::size_t i = 0; i < lhs.size(); ++i) {
    if (lhs[i] == rhs[i]) continue;
    mpq_class d = (lhs[i] - rhs[i]).magnitude_bound();
    if (d > worst) worst = d;
  }
  if (sgn(worst) == 0) {
    ++r.cases;
    return;
  }
  r.fail(std::string(what) + ": entries differ", worst.get_d());
}

void Report::expect_equal(const SymFn& lhs, const SymFn& rhs, std::string_view what) {
  compare_tensors(*this, lhs, rhs, what);
}

void Report::expect_equal(const SymMeasure& lhs, const SymMeasure& rhs, std::string_view what) {
  compare_tensors(*this, lhs, rhs, what);
}

void Report::expect_equal(const GradedFn& lhs, const GradedFn& rhs, std::string_view what) {
  if (lhs.m != rhs.m) {
    expect(false, std::string(what) + ": ground set mismatch");
    return;
  }
  int d = std::max(lhs.degree(), rhs.degree());
  GradedFn a(lhs), b(rhs);
  a.resize(d);
  b.resize(d);
  for (int k = 0; k <= d; ++k) compare_tensors(*this, a[k], b[k], std::string(what) + " [degree " + std::to_string(k) + "]");
}

void Report::expect_equal(const ScalarSeries& lhs, const ScalarSeries& rhs, std::string_view what) {
  int n = std::min(lhs.order(), rhs.order());
  for (int k = 0; k <= n; ++k)
    expect_equal(lhs[k], rhs[k], std::string(what) + " [z^" + std::to_string(k) + "]");
}

void Report::expect_close(std::complex<double> lhs, std::complex<double> rhs, double tol,
                          std::string_view what) {
  double d = std::abs(lhs - rhs);
  if (d < tol) {
    ++cases;
    max_discrepancy = std::max(max_discrepancy, d);
    return;
  }
  fail(std::string(what) + ": |err| = " + std::to_string(d), d);
}

void Report::merge(const Report& other) {
  cases += other.cases;
  failures += other.failures;
  max_discrepancy = std::max(max_discrepancy, other.max_discrepancy);
  for (const auto& n : other.notes)
    if (notes.size() < kMaxNotes) notes.push_back(other.name.empty() ? n : other.name + ": " + n);
}

}  // namespace spatial
