#include "spatial/suites.hpp"

#include <functional>
#include <map>
#include <stdexcept>

#include "spatial/factorial.hpp"
#include "spatial/ktransform.hpp"
#include "spatial/poisson.hpp"
#include "spatial/polyop.hpp"
#include "spatial/random.hpp"
#include "spatial/stirling.hpp"
#include "spatial/touchard.hpp"
#include "spatial/wick.hpp"

namespace spatial {

namespace {

constexpr long kBound = 9;

using SuiteFn = std::function<void(const SuiteConfig&, Rng&, Report&)>;

// FNV-1a, to derive a per-suite stream from the seed.
std::uint64_t name_hash(const std::string& s) {
  std::uint64_t h = 1469598103934665603ull;
  for (unsigned char c : s) h = (h ^ c) * 1099511628211ull;
  return h;
}

void add(Report& into, const Report& r) { into.merge(r); }

std::vector<PointFn> random_fns(Rng& rng, int m, int count, Field field) {
  std::vector<PointFn> out;
  for (int i = 0; i < count; ++i) out.push_back(random_fn(rng, m, kBound, field));
  return out;
}

// Polynomial whose components vanish on multisets that leave `keep`.
GradedFn restricted(GradedFn p, const std::set<Label>& keep) {
  for (int k = 0; k <= p.degree(); ++k)
    for (std::size_t i = 0; i < p[k].size(); ++i)
      for (Label x : p[k].basis().at(i))
        if (!keep.count(x)) p[k][i] = 0;
  return p;
}

// ---- factorial

void factorial_binomial(const SuiteConfig& c, Rng& rng, Report& r) {
  for (int m = 1; m <= c.m; ++m)
    for (int n = 0; n <= c.nmax; ++n)
      add(r, check_binomial(random_measure(rng, m, kBound, c.field), random_measure(rng, m, kBound, c.field), n));
}

void factorial_lowering(const SuiteConfig& c, Rng& rng, Report& r) {
  for (int m = 1; m <= c.m; ++m)
    for (int n = 1; n <= c.nmax; ++n)
      for (Label x = 0; x < m; ++x) add(r, check_lowering(random_measure(rng, m, kBound, c.field), x, n));
}

void factorial_recurrence(const SuiteConfig& c, Rng& rng, Report& r) {
  for (int m = 1; m <= c.m; ++m)
    for (int n = 1; n <= c.nmax; ++n)
      for (int t = 0; t < c.probes; ++t)
        add(r, check_recurrence(random_measure(rng, m, kBound, c.field), random_fn(rng, m, kBound, c.field), n));
}

void factorial_genfun(const SuiteConfig& c, Rng& rng, Report& r) {
  for (int m = 1; m <= c.m; ++m)
    for (int t = 0; t < c.probes; ++t)
      add(r, check_genfun_factorial(random_measure(rng, m, kBound, c.field), random_fn(rng, m, kBound, c.field), c.order));
}

// ---- stirling

void stirling_routes(const SuiteConfig& c, Rng& rng, Report& r) {
  for (int m = 1; m <= c.m; ++m)
    for (int n = 1; n <= c.nmax; ++n)
      for (int k = 1; k <= n; ++k)
        for (int t = 0; t < c.probes; ++t) {
          add(r, check_routes(n, k, power_fn(random_fn(rng, m, kBound, c.field), n)));
          add(r, check_routes(n, k, random_symfn(rng, m, n, kBound, c.field)));
        }
}

void stirling_expansions(const SuiteConfig& c, Rng& rng, Report& r) {
  for (int m = 1; m <= c.m; ++m)
    for (int n = 1; n <= c.nmax; ++n)
      for (int t = 0; t < c.probes; ++t)
        add(r, check_expansions(n, random_measure(rng, m, kBound, c.field), random_symfn(rng, m, n, kBound, c.field)));
}

void stirling_sign(const SuiteConfig& c, Rng&, Report& r) {
  for (int m = 1; m <= c.m; ++m)
    for (int n = 1; n <= c.nmax; ++n)
      for (int k = 1; k <= n; ++k) add(r, check_sign_law(n, k, m));
}

void stirling_orthogonality(const SuiteConfig& c, Rng& rng, Report& r) {
  for (int m = 1; m <= c.m; ++m)
    for (int n = 1; n <= c.nmax; ++n)
      for (int i = 1; i <= c.nmax + 1; ++i)
        for (int t = 0; t < c.probes; ++t)
          add(r, check_orthogonality(n, i, random_fn(rng, m, kBound, c.field), random_measure(rng, m, kBound, c.field)));
}

void stirling_lah(const SuiteConfig& c, Rng& rng, Report& r) {
  for (int m = 1; m <= c.m; ++m)
    for (int n = 1; n <= c.nmax; ++n)
      for (int k = 1; k <= n; ++k)
        add(r, check_lah(n, k, random_measure(rng, m, kBound, c.field), random_fn(rng, m, kBound, c.field)));
}

void stirling_olson(const SuiteConfig& c, Rng& rng, Report& r) {
  for (int m = 1; m <= c.m; ++m)
    for (int n = 1; n <= c.nmax; ++n)
      for (int extra = 0; n + extra <= c.nmax + 1; ++extra)
        for (int i = 1; i <= n + extra + 1; ++i) {
          add(r, check_olson(n, extra, i, power_fn(random_fn(rng, m, kBound, c.field), n + extra)));
          add(r, check_olson(n, extra, i, random_symfn(rng, m, n + extra, kBound, c.field)));
        }
}

void stirling_convolution(const SuiteConfig& c, Rng& rng, Report& r) {
  for (int m = 1; m <= c.m; ++m)
    for (int n = 0; n <= c.nmax; ++n)
      for (int i = 0; i <= n; ++i)
        for (int j = 0; i + j <= n; ++j) {
          add(r, check_convolution_identity(n, i, j, random_fn(rng, m, kBound, c.field)));
          add(r, check_convolution_identity(n, i, j, random_symfn(rng, m, n, kBound, c.field)));
        }
}

void stirling_shift(const SuiteConfig& c, Rng& rng, Report& r) {
  for (int m = 1; m <= c.m; ++m)
    for (int n = 2; n <= c.nmax; ++n)
      for (int i = 1; i < n; ++i)
        for (Label x = 0; x < m; ++x) add(r, check_shift_identity(n, i, x, random_fn(rng, m, kBound, c.field)));
}

void stirling_genfun(const SuiteConfig& c, Rng& rng, Report& r) {
  for (auto kind : {OperatorKind::S2, OperatorKind::S1, OperatorKind::C1, OperatorKind::Lah})
    for (int m = 1; m <= c.m; ++m)
      for (int k = 1; k <= std::min(c.nmax, c.order); ++k)
        add(r, check_genfun_stirling(kind, k, random_fn(rng, m, kBound, c.field), c.order,
                                     random_measure(rng, m, kBound, c.field)));
}

// ---- polyop

void polyop_derivative(const SuiteConfig& c, Rng& rng, Report& r) {
  for (int m = 1; m <= c.m; ++m)
    for (int t = 0; t < c.probes; ++t) {
      GradedFn p = random_graded(rng, m, c.nmax, kBound, c.field);
      for (Label x = 0; x < m; ++x) add(r, check_derivative_difference(p, x));
    }
}

void polyop_euler(const SuiteConfig& c, Rng& rng, Report& r) {
  for (int m = 1; m <= c.m; ++m)
    for (int t = 0; t < c.probes; ++t)
      add(r, check_euler_roundtrip(random_graded(rng, m, c.nmax, kBound, c.field),
                                   random_graded(rng, m, c.nmax, kBound, c.field),
                                   random_measure(rng, m, kBound, c.field)));
}

void polyop_grunert(const SuiteConfig& c, Rng& rng, Report& r) {
  for (int m = 1; m <= c.m; ++m)
    for (int n = 1; n <= c.nmax; ++n) {
      std::vector<PointFn> xis = random_fns(rng, m, n, c.field);
      add(r, check_grunert(xis, random_graded(rng, m, c.nmax + 1, kBound, c.field)));
      for (int d = 0; d <= c.nmax + 1; ++d)
        add(r, check_grunert(xis, GradedFn::monomial(power_fn(random_fn(rng, m, kBound, c.field), d))));
    }
}

void polyop_wick_lemma(const SuiteConfig& c, Rng& rng, Report& r) {
  for (int m = 1; m <= c.m; ++m)
    for (int k = 1; k <= c.nmax; ++k)
      add(r, check_wick_diff_lemma(random_fn(rng, m, kBound, c.field), random_symfn(rng, m, k, kBound, c.field),
                                   random_graded(rng, m, c.nmax, kBound, c.field)));
}

// ---- ktransform

void ktransform_roundtrip(const SuiteConfig& c, Rng& rng, Report& r) {
  for (int m = 1; m <= c.m; ++m)
    for (int t = 0; t < c.probes; ++t)
      add(r, check_k_roundtrip(random_graded(rng, m, c.nmax, kBound, c.field),
                               random_graded(rng, m, c.nmax, kBound, c.field)));
}

void ktransform_star(const SuiteConfig& c, Rng& rng, Report& r) {
  const int deg = std::max(1, (c.nmax + 1) / 2);
  for (int m = 1; m <= c.m; ++m)
    for (int t = 0; t < c.probes; ++t)
      add(r, check_star_homomorphism(random_graded(rng, m, deg, kBound, c.field),
                                     random_graded(rng, m, deg, kBound, c.field),
                                     random_measure(rng, m, kBound, c.field)));
}

// ---- poisson

void poisson_routes(const SuiteConfig& c, Rng& rng, Report& r) {
  for (int m = 1; m <= c.m; ++m)
    for (int t = 0; t < c.probes; ++t)
      add(r, check_poisson_routes(random_measure(rng, m, kBound, c.field), random_graded(rng, m, c.nmax, kBound, c.field)));
}

void poisson_umbral(const SuiteConfig& c, Rng& rng, Report& r) {
  for (int m = 1; m <= c.m; ++m)
    for (int k = 0; k <= c.nmax; ++k)
      add(r, check_umbral(random_measure(rng, m, kBound, c.field), random_symfn(rng, m, k, kBound, c.field)));
}

void poisson_mecke(const SuiteConfig& c, Rng& rng, Report& r) {
  for (int m = 1; m <= c.m; ++m)
    for (int t = 0; t < c.probes; ++t) {
      MeckeKernel F;
      for (Label x = 0; x < m; ++x) F.push_back(random_graded(rng, m, 3, kBound, c.field));
      add(r, check_mecke_order(random_measure(rng, m, kBound, c.field), F, c.nmax + 1));
    }
}

void poisson_independence(const SuiteConfig& c, Rng& rng, Report& r) {
  for (int m = 2; m <= std::max(2, c.m); ++m)
    for (int split = 1; split < m; ++split)
      for (int t = 0; t < c.probes; ++t) {
        std::set<Label> A, B;
        for (Label x = 0; x < m; ++x) (x < split ? A : B).insert(x);
        const int deg = std::max(1, c.nmax / 2 + 1);
        add(r, check_independence(random_measure(rng, m, kBound, c.field), A, B,
                                  restricted(random_graded(rng, m, deg, kBound, c.field), A),
                                  restricted(random_graded(rng, m, deg, kBound, c.field), B)));
      }
}

void poisson_laplace(const SuiteConfig& c, Rng& rng, Report& r) {
  for (int m = 1; m <= c.m; ++m)
    for (int t = 0; t < c.probes; ++t)
      add(r, laplace_coeffs(random_measure(rng, m, kBound, c.field), random_fn(rng, m, kBound, c.field), c.order));
}

// ---- touchard

void touchard_pairing(const SuiteConfig& c, Rng& rng, Report& r) {
  for (int m = 1; m <= c.m; ++m)
    for (int n = 0; n <= c.nmax; ++n)
      add(r, check_touchard_pairing(random_measure(rng, m, kBound, c.field), random_symfn(rng, m, n, kBound, c.field)));
}

void touchard_recurrence(const SuiteConfig& c, Rng& rng, Report& r) {
  for (int m = 1; m <= c.m; ++m)
    for (int n = 0; n < c.nmax; ++n) {
      add(r, check_touchard_recurrence(random_measure(rng, m, kBound, c.field), n));
      add(r, check_ruc_recurrence(random_measure(rng, m, kBound, c.field), n));
    }
}

void touchard_binomial(const SuiteConfig& c, Rng& rng, Report& r) {
  for (int m = 1; m <= c.m; ++m)
    for (int n = 0; n <= c.nmax; ++n)
      add(r, check_touchard_binomial(random_measure(rng, m, kBound, c.field), random_measure(rng, m, kBound, c.field), n));
}

void touchard_genfun(const SuiteConfig& c, Rng& rng, Report& r) {
  for (int m = 1; m <= c.m; ++m)
    for (int t = 0; t < c.probes; ++t)
      add(r, check_touchard_genfun(random_measure(rng, m, kBound, c.field), random_fn(rng, m, kBound, c.field), c.order));
}

void touchard_rho(const SuiteConfig& c, Rng& rng, Report& r) {
  for (int m = 1; m <= c.m; ++m) {
    std::vector<PointMeasure> points;
    for (int t = 0; t < 10; ++t) points.push_back(random_measure(rng, m, kBound, c.field));
    for (int n = 0; n < c.nmax; ++n) add(r, check_rho_recurrence(random_fn(rng, m, kBound, c.field), n, points));
  }
}

void touchard_dobinski(const SuiteConfig& c, Rng& rng, Report& r) {
  // law nu must be a probability measure; probes bounded by 2 per the tolerance policy
  for (int m = 1; m <= c.m; ++m)
    for (int n = 1; n <= std::min(c.nmax, 6); ++n)
      add(r, dobinski_check(random_probability(rng, m, 4), random_symfn(rng, m, n, 2), c.K, c.tol));
}

// ---- wick

RefMeasure random_ref(Rng& rng, int m, Field field) { return RefMeasure(random_nonzero_measure(rng, m, 5, field)); }

void wick_ccr(const SuiteConfig& c, Rng& rng, Report& r) {
  for (int m = 1; m <= c.m; ++m)
    for (int t = 0; t < c.probes; ++t)
      add(r, check_ccr(random_ref(rng, m, c.field), random_fn(rng, m, kBound, c.field), random_fn(rng, m, kBound, c.field)));
}

void wick_routes(const SuiteConfig& c, Rng& rng, Report& r) {
  for (int m = 1; m <= c.m; ++m)
    for (int k = 1; k <= std::min(c.nmax, 4); ++k)
      add(r, check_wick_routes(random_ref(rng, m, c.field), random_fns(rng, m, k, c.field)));
}

void wick_katriel(const SuiteConfig& c, Rng& rng, Report& r) {
  for (int m = 1; m <= c.m; ++m)
    for (int n = 1; n <= c.nmax; ++n) add(r, check_katriel(random_ref(rng, m, c.field), random_fns(rng, m, n, c.field)));
}

void wick_quantum_poisson(const SuiteConfig& c, Rng& rng, Report& r) {
  for (int m = 1; m <= c.m; ++m)
    for (int n = 1; n <= c.nmax; ++n)
      add(r, check_quantum_poisson(random_ref(rng, m, c.field), random_fns(rng, m, n, c.field)));
}

void wick_lemma(const SuiteConfig& c, Rng& rng, Report& r) {
  for (int m = 1; m <= c.m; ++m)
    for (int n = 1; n <= std::min(c.nmax, 4); ++n)
      add(r, check_lemma_R_normal(random_ref(rng, m, c.field), random_fns(rng, m, n, c.field)));
}

const std::vector<std::pair<std::string, std::vector<std::pair<std::string, SuiteFn>>>>& registry() {
  static const std::vector<std::pair<std::string, std::vector<std::pair<std::string, SuiteFn>>>> table = {
      {"factorial",
       {{"binomial", factorial_binomial},
        {"lowering", factorial_lowering},
        {"recurrence", factorial_recurrence},
        {"genfun", factorial_genfun}}},
      {"stirling",
       {{"routes", stirling_routes},
        {"expansions", stirling_expansions},
        {"sign", stirling_sign},
        {"orthogonality", stirling_orthogonality},
        {"lah", stirling_lah},
        {"olson", stirling_olson},
        {"convolution", stirling_convolution},
        {"shift", stirling_shift},
        {"genfun", stirling_genfun}}},
      {"polyop",
       {{"derivative", polyop_derivative},
        {"euler", polyop_euler},
        {"grunert", polyop_grunert},
        {"wick-lemma", polyop_wick_lemma}}},
      {"ktransform", {{"roundtrip", ktransform_roundtrip}, {"star", ktransform_star}}},
      {"poisson",
       {{"routes", poisson_routes},
        {"umbral", poisson_umbral},
        {"mecke", poisson_mecke},
        {"independence", poisson_independence},
        {"laplace", poisson_laplace}}},
      {"touchard",
       {{"pairing", touchard_pairing},
        {"recurrence", touchard_recurrence},
        {"binomial", touchard_binomial},
        {"genfun", touchard_genfun},
        {"rho", touchard_rho},
        {"dobinski", touchard_dobinski}}},
      {"wick",
       {{"ccr", wick_ccr},
        {"routes", wick_routes},
        {"katriel", wick_katriel},
        {"quantum-poisson", wick_quantum_poisson},
        {"lemma", wick_lemma}}},
  };
  return table;
}

const std::vector<std::pair<std::string, SuiteFn>>& module_suites(const std::string& module) {
  for (const auto& [name, suites] : registry())
    if (name == module) return suites;
  throw std::invalid_argument("unknown module: " + module);
}

}  // namespace

std::vector<std::string> suite_modules() {
  std::vector<std::string> out;
  for (const auto& entry : registry()) out.push_back(entry.first);
  return out;
}

std::vector<std::string> suite_names(const std::string& module) {
  std::vector<std::string> out;
  for (const auto& entry : module_suites(module)) out.push_back(entry.first);
  return out;
}

Report run_suite(const std::string& module, const std::string& suite, const SuiteConfig& cfg) {
  if (cfg.m < 1 || cfg.nmax < 1 || cfg.probes < 1 || cfg.order < 1 || cfg.K < 1 || !(cfg.tol > 0))
    throw std::invalid_argument("suite parameters must be positive");
  for (const auto& [name, fn] : module_suites(module)) {
    if (name != suite) continue;
    const std::string qualified = module + "." + suite;
    Rng rng(cfg.seed ^ name_hash(qualified));
    Report r(qualified);
    fn(cfg, rng, r);
    r.name = qualified;
    return r;
  }
  throw std::invalid_argument("unknown suite " + suite + " for module " + module);
}

std::vector<Report> run_all_suites(const SuiteConfig& cfg) {
  std::vector<Report> out;
  for (const auto& module : suite_modules())
    for (const auto& suite : suite_names(module)) out.push_back(run_suite(module, suite, cfg));
  return out;
}

}  // namespace spatial
