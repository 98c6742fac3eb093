#include "spatial/cli.hpp"

#include <algorithm>
#include <ostream>
#include <sstream>

#include <CLI11.hpp>

#include "spatial/factorial.hpp"
#include "spatial/json_io.hpp"
#include "spatial/ktransform.hpp"
#include "spatial/poisson.hpp"
#include "spatial/polyop.hpp"
#include "spatial/random.hpp"
#include "spatial/stirling.hpp"
#include "spatial/suites.hpp"
#include "spatial/touchard.hpp"
#include "spatial/wick.hpp"

namespace spatial::cli {

namespace {

struct Globals {
  std::string field = "Q";
  bool as_float = false;
  int K = 100;
  double tol = 1e-8;
  int m = 3;
  int nmax = 5;
  std::uint64_t seed = 7;
  int order = 8;
  int probes = 3;

  NumberFormat fmt() const { return as_float ? NumberFormat::Float : NumberFormat::Exact; }
  Field scalar_field() const { return field == "Qi" ? Field::Qi : Field::Q; }
  SuiteConfig suite_config() const {
    SuiteConfig c;
    c.m = m;
    c.nmax = nmax;
    c.seed = seed;
    c.field = scalar_field();
    c.K = K;
    c.tol = tol;
    c.order = order;
    c.probes = probes;
    return c;
  }
};

void print(std::ostream& out, const Json& j) { out << j.dump(2) << "\n"; }

int emit_report(std::ostream& out, const Report& r) {
  print(out, to_json(r));
  return r.passed() ? kOk : kIdentityFailure;
}

void require_same_m(int a, int b, const char* what) {
  if (a != b) throw InputError(std::string("ground set sizes differ: ") + what);
}

// Word entry of `wick normal-order`: {"op": "a+|a-|rho", "point": x} or {"op": .., "fn": PointFn}.
WickPoly word_factor(const RefMeasure& ref, const Json& e) {
  if (!e.is_object() || !e.contains("op") || !e["op"].is_string())
    throw InputError("word entries need an \"op\" string");
  const std::string op = e["op"].get<std::string>();
  if (op != "a+" && op != "a-" && op != "rho") throw InputError("unknown op \"" + op + "\"");
  if (e.contains("point") == e.contains("fn")) throw InputError("word entries need exactly one of \"point\" and \"fn\"");
  if (e.contains("point")) {
    if (!e["point"].is_number_integer()) throw InputError("\"point\" must be an integer label");
    const Label x = e["point"].get<int>();
    if (x < 0 || x >= ref.m()) throw InputError("point label out of range");
    if (op == "a+") return creator(ref, x);
    if (op == "a-") return annihilator(ref, x);
    return WickPoly::monomial(ref, {x}, {x});
  }
  PointFn xi = fn_from_json(e["fn"]);
  require_same_m(xi.m(), ref.m(), "fn vs sigma");
  if (op == "a+") return a_plus(ref, xi);
  if (op == "a-") return a_minus(ref, xi);
  return rho(ref, xi);
}

int word_ground_size(const Json& word) {
  int m = 1;
  for (const auto& e : word) {
    if (!e.is_object()) throw InputError("word entries must be objects");
    if (e.contains("point") && e["point"].is_number_integer()) m = std::max(m, e["point"].get<int>() + 1);
    if (e.contains("fn")) m = std::max(m, fn_from_json(e["fn"]).m());
  }
  return m;
}

void add_verify(CLI::App* parent, const std::string& module, std::string* suite) {
  auto* v = parent->add_subcommand("verify", "run a randomized identity suite");
  v->add_option("--suite", *suite, "suite name")->required()->check(CLI::IsMember(suite_names(module)));
}

}  // namespace

int run(const std::vector<std::string>& args, std::ostream& out, std::ostream& err) {
  CLI::App app{"Exact spatial Stirling operators, factorial measures and Wick ordering on finite ground sets",
               "spatial-stirling"};
  app.fallthrough();
  app.require_subcommand(1);
  Globals g;
  app.add_option("--field", g.field, "scalar field of random inputs")->check(CLI::IsMember({"Q", "Qi"}));
  app.add_flag("--float", g.as_float, "print numbers as floating point");
  app.add_option("--K", g.K, "truncation of numeric series")->check(CLI::PositiveNumber);
  app.add_option("--tol", g.tol, "tolerance of numeric comparisons")->check(CLI::PositiveNumber);
  app.add_option("--m", g.m, "ground set size")->check(CLI::PositiveNumber);
  app.add_option("--nmax", g.nmax, "largest rank in suites")->check(CLI::PositiveNumber);
  app.add_option("--seed", g.seed, "random seed");
  app.add_option("--order", g.order, "truncation order of formal series")->check(CLI::PositiveNumber);
  app.add_option("--probes", g.probes, "random probes per case")->check(CLI::PositiveNumber);

  std::string suite, kind, in1, in2, omega_arg, poly_arg, fn_arg, sigma_arg, route = "stirling", mode;
  int n = -1, k = -1;
  bool as_json = false;

  auto* fac = app.add_subcommand("factorial", "falling or rising factorial measure");
  fac->add_option("--omega", omega_arg, "PointMeasure JSON");
  fac->add_option("--n", n, "rank")->check(CLI::NonNegativeNumber);
  fac->add_option("--kind", mode, "falling, rising or binomial")
      ->check(CLI::IsMember({"falling", "rising", "binomial"}))
      ->default_val("falling");
  auto* fac_verify = fac->add_subcommand("verify", "run a randomized identity suite");
  fac_verify->add_option("--suite", suite, "suite name")->required()->check(CLI::IsMember(suite_names("factorial")));
  fac->require_subcommand(0, 1);

  auto* st = app.add_subcommand("stirling", "Stirling and Lah operators");
  st->require_subcommand(1);
  auto* st_tri = st->add_subcommand("triangle", "one-point number triangle");
  st_tri->add_option("--kind", kind, "s, S, c or L")->required()->check(CLI::IsMember({"s", "S", "c", "L"}));
  st_tri->add_option("--n", n, "last row")->required()->check(CLI::NonNegativeNumber);
  st_tri->add_flag("--json", as_json, "print the triangle as JSON");
  auto* st_apply = st->add_subcommand("apply", "apply an operator to a symmetric function");
  st_apply->add_option("--kind", kind, "s, S, c or L")->required()->check(CLI::IsMember({"s", "S", "c", "L"}));
  st_apply->add_option("--n", n, "rank of the input (checked)");
  st_apply->add_option("--k", k, "rank of the output")->required()->check(CLI::NonNegativeNumber);
  st_apply->add_option("--fn", fn_arg, "SymFn JSON")->required();
  add_verify(st, "stirling", &suite);

  auto* po = app.add_subcommand("polyop", "operators on polynomials");
  po->require_subcommand(1);
  auto* po_expand = po->add_subcommand("euler-expand", "falling-factorial coefficients of a polynomial");
  po_expand->add_option("--poly", poly_arg, "GradedFn JSON")->required();
  add_verify(po, "polyop", &suite);

  auto* kt = app.add_subcommand("ktransform", "K-transform and star product");
  kt->require_subcommand(1);
  auto* kt_fwd = kt->add_subcommand("forward", "K f as a polynomial");
  kt_fwd->add_option("--in", in1, "GradedFn JSON")->required();
  auto* kt_inv = kt->add_subcommand("inverse", "inverse transform of a polynomial");
  kt_inv->add_option("--in", in1, "GradedFn JSON")->required();
  auto* kt_star = kt->add_subcommand("star", "star product of two graded functions");
  kt_star->add_option("--in", in1, "GradedFn JSON")->required();
  kt_star->add_option("--in2", in2, "GradedFn JSON")->required();
  add_verify(kt, "ktransform", &suite);

  auto* ps = app.add_subcommand("poisson", "Poisson functional");
  ps->require_subcommand(1);
  auto* ps_exp = ps->add_subcommand("expect", "expectation of a polynomial");
  ps_exp->add_option("--omega", omega_arg, "PointMeasure JSON")->required();
  ps_exp->add_option("--poly", poly_arg, "GradedFn JSON")->required();
  ps_exp->add_option("--route", route, "stirling, finite or series")
      ->check(CLI::IsMember({"stirling", "finite", "series"}));
  add_verify(ps, "poisson", &suite);

  auto* tc = app.add_subcommand("touchard", "Touchard, Bell and complementary Bell measures");
  tc->require_subcommand(1);
  auto* tc_meas = tc->add_subcommand("measure", "T_n(omega) as a SymMeasure");
  tc_meas->add_option("--omega", omega_arg, "PointMeasure JSON")->required();
  tc_meas->add_option("--n", n, "rank")->required()->check(CLI::NonNegativeNumber);
  tc_meas->add_option("--kind", mode, "touchard, bell or ruc")
      ->check(CLI::IsMember({"touchard", "bell", "ruc"}))
      ->default_val("touchard");
  add_verify(tc, "touchard", &suite);

  auto* wk = app.add_subcommand("wick", "normal ordering under the CCR");
  wk->require_subcommand(1);
  auto* wk_kat = wk->add_subcommand("katriel", "both sides of the Katriel expansion on random inputs");
  wk_kat->add_option("--n", n, "number of density factors")->required()->check(CLI::PositiveNumber);
  auto* wk_no = wk->add_subcommand("normal-order", "normal-ordered form of an operator word");
  wk_no->add_option("--in", in1, "JSON list of {\"op\", \"point\"|\"fn\"}")->required();
  wk_no->add_option("--sigma", sigma_arg, "reference measure (default: all ones)");
  add_verify(wk, "wick", &suite);

  auto* all = app.add_subcommand("verify-all", "run every identity suite");

  std::vector<const char*> argv{"spatial-stirling"};
  for (const auto& a : args) argv.push_back(a.c_str());
  try {
    app.parse(static_cast<int>(argv.size()), argv.data());
  } catch (const CLI::CallForHelp&) {
    out << app.help();
    return kOk;
  } catch (const CLI::CallForAllHelp&) {
    out << app.help("", CLI::AppFormatMode::All);
    return kOk;
  } catch (const CLI::ParseError& e) {
    err << "error: " << e.what() << "\n" << app.help();
    return kBadInput;
  }

  const NumberFormat fmt = g.fmt();
  CLI::App* active = &app;
  try {
    if (fac->parsed()) {
      active = fac;
      if (fac_verify->parsed()) return emit_report(out, run_suite("factorial", suite, g.suite_config()));
      if (omega_arg.empty() || n < 0) throw InputError("factorial needs --omega and --n");
      PointMeasure om = measure_from_json(load_json_arg(omega_arg));
      SymMeasure mu = mode == "rising" ? rising(om, n) : mode == "binomial" ? binom_measure(om, n) : falling(om, n);
      print(out, to_json(mu, fmt));
      return kOk;
    }
    if (st->parsed()) {
      active = st;
      if (st_tri->parsed()) {
        auto tri = classical_triangle(parse_kind(kind), n);
        if (as_json) {
          Json rows = Json::array();
          for (const auto& row : tri) {
            Json r = Json::array();
            for (const auto& v : row) r.push_back(to_json(v, fmt));
            rows.push_back(r);
          }
          print(out, Json{{"kind", kind}, {"rows", rows}});
          return kOk;
        }
        // row 0 is "1"; row r >= 1 lists k = 1..r
        for (std::size_t r = 0; r < tri.size(); ++r) {
          std::ostringstream line;
          for (std::size_t c = r == 0 ? 0 : 1; c < tri[r].size(); ++c) {
            if (line.tellp() > 0) line << ' ';
            line << (g.as_float ? std::to_string(tri[r][c].to_complex().real()) : tri[r][c].to_string());
          }
          out << line.str() << "\n";
        }
        return kOk;
      }
      if (st_apply->parsed()) {
        active = st_apply;
        SymFn f = symfn_from_json(load_json_arg(fn_arg));
        if (n >= 0 && n != f.rank()) throw InputError("--n does not match the rank of --fn");
        print(out, to_json(apply_operator(parse_kind(kind), f.rank(), k, f), fmt));
        return kOk;
      }
      return emit_report(out, run_suite("stirling", suite, g.suite_config()));
    }
    if (po->parsed()) {
      active = po;
      if (po_expand->parsed()) {
        print(out, to_json(euler_expand(graded_from_json(load_json_arg(poly_arg))), fmt));
        return kOk;
      }
      return emit_report(out, run_suite("polyop", suite, g.suite_config()));
    }
    if (kt->parsed()) {
      active = kt;
      if (kt_fwd->parsed()) {
        print(out, to_json(ktransform(graded_from_json(load_json_arg(in1))), fmt));
        return kOk;
      }
      if (kt_inv->parsed()) {
        print(out, to_json(kinverse(graded_from_json(load_json_arg(in1))), fmt));
        return kOk;
      }
      if (kt_star->parsed()) {
        GradedFn a = graded_from_json(load_json_arg(in1)), b = graded_from_json(load_json_arg(in2));
        require_same_m(a.m, b.m, "--in vs --in2");
        print(out, to_json(star(a, b), fmt));
        return kOk;
      }
      return emit_report(out, run_suite("ktransform", suite, g.suite_config()));
    }
    if (ps->parsed()) {
      active = ps;
      if (ps_exp->parsed()) {
        PointMeasure om = measure_from_json(load_json_arg(omega_arg));
        GradedFn p = graded_from_json(load_json_arg(poly_arg));
        require_same_m(om.m(), p.m, "--omega vs --poly");
        Json result{{"route", route}};
        if (route == "series") {
          auto z = poisson_expect_series(om, p, g.K);
          result["K"] = g.K;
          result["value"] = z.imag() == 0.0 ? Json(z.real()) : Json{{"re", z.real()}, {"im", z.imag()}};
        } else {
          Scalar v = route == "finite" ? poisson_expect_finite(om, p) : poisson_expect(om, p);
          result["value"] = to_json(v, fmt);
        }
        print(out, result);
        return kOk;
      }
      return emit_report(out, run_suite("poisson", suite, g.suite_config()));
    }
    if (tc->parsed()) {
      active = tc;
      if (tc_meas->parsed()) {
        PointMeasure om = measure_from_json(load_json_arg(omega_arg));
        SymMeasure mu = mode == "bell" ? bell_measure(om, n) : mode == "ruc" ? ruc_measure(om, n) : touchard_measure(om, n);
        print(out, to_json(mu, fmt));
        return kOk;
      }
      return emit_report(out, run_suite("touchard", suite, g.suite_config()));
    }
    if (wk->parsed()) {
      active = wk;
      if (wk_kat->parsed()) {
        Rng rng(g.seed);
        RefMeasure ref(random_nonzero_measure(rng, g.m, 5, g.scalar_field()));
        std::vector<PointFn> xis;
        std::vector<WickPoly> factors;
        for (int i = 0; i < n; ++i) {
          xis.push_back(random_fn(rng, g.m, 9, g.scalar_field()));
          factors.push_back(rho(ref, xis.back()));
        }
        WickPoly lhs = product_chain(factors), rhs = katriel_rhs(ref, xis);
        Json xs = Json::array();
        for (const auto& xi : xis) xs.push_back(to_json(xi, fmt));
        print(out, Json{{"n", n}, {"m", g.m}, {"xi", xs}, {"lhs", to_json(lhs, fmt)}, {"rhs", to_json(rhs, fmt)},
                        {"equal", lhs == rhs}});
        return lhs == rhs ? kOk : kIdentityFailure;
      }
      if (wk_no->parsed()) {
        active = wk_no;
        Json word = load_json_arg(in1);
        if (!word.is_array()) throw InputError("word must be a JSON list");
        PointMeasure sigma = sigma_arg.empty() ? PointMeasure(std::vector<Scalar>(static_cast<std::size_t>(word_ground_size(word)), Scalar(1)))
                                               : measure_from_json(load_json_arg(sigma_arg));
        RefMeasure ref(sigma);
        std::vector<WickPoly> factors;
        for (const auto& e : word) factors.push_back(word_factor(ref, e));
        print(out, to_json(product_chain(factors), fmt));
        return kOk;
      }
      return emit_report(out, run_suite("wick", suite, g.suite_config()));
    }
    if (all->parsed()) {
      active = all;
      std::vector<Report> reports = run_all_suites(g.suite_config());
      Json suites = Json::array();
      std::size_t cases = 0, failures = 0;
      for (const auto& r : reports) {
        suites.push_back(to_json(r));
        cases += r.cases;
        failures += r.failures;
      }
      print(out, Json{{"config", {{"m", g.m}, {"nmax", g.nmax}, {"seed", g.seed}, {"field", g.field}}},
                      {"suites", suites},
                      {"cases", cases},
                      {"failures", failures},
                      {"passed", failures == 0}});
      return failures == 0 ? kOk : kIdentityFailure;
    }
  } catch (const InputError& e) {
    err << "error: " << e.what() << "\n" << active->help();
    return kBadInput;
  } catch (const Json::exception& e) {
    err << "error: " << e.what() << "\n" << active->help();
    return kBadInput;
  } catch (const std::invalid_argument& e) {
    err << "error: " << e.what() << "\n" << active->help();
    return kBadInput;
  } catch (const std::out_of_range& e) {
    err << "error: " << e.what() << "\n" << active->help();
    return kBadInput;
  } catch (const std::domain_error& e) {
    err << "error: " << e.what() << "\n" << active->help();
    return kBadInput;
  }
  err << app.help();
  return kBadInput;
}

}  // namespace spatial::cli
