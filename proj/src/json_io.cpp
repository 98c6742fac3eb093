#include "spatial/json_io.hpp"

#include <cmath>
#include <fstream>
#include <iostream>
#include <iterator>
#include <sstream>

namespace spatial {

namespace {

std::string rational_string(const mpq_class& q) { return q.get_str(); }

mpq_class rational_from_json(const Json& j) {
  if (j.is_number_integer()) return mpq_class(j.get<long>());
  if (j.is_string()) return Scalar::parse_rational(j.get<std::string>()).re();
  throw InputError("expected a rational as \"p/q\" or an integer, got " + j.dump());
}

int int_field(const Json& j, const char* key) {
  if (!j.is_object() || !j.contains(key) || !j[key].is_number_integer())
    throw InputError(std::string("missing integer field \"") + key + "\"");
  return j[key].get<int>();
}

template <class Tag>
PointVec<Tag> point_from_json(const Json& j) {
  const Json* weights = &j;
  if (j.is_object()) {
    if (!j.contains("weights")) throw InputError("missing field \"weights\"");
    weights = &j["weights"];
  }
  if (!weights->is_array() || weights->empty()) throw InputError("weights must be a non-empty array");
  std::vector<Scalar> w;
  for (const auto& e : *weights) w.push_back(scalar_from_json(e));
  if (j.is_object() && j.contains("m") && int_field(j, "m") != static_cast<int>(w.size()))
    throw InputError("\"m\" does not match the number of weights");
  return PointVec<Tag>(std::move(w));
}

template <class Tag>
SymTensor<Tag> tensor_from_json(const Json& j) {
  const int rank = int_field(j, "rank"), m = int_field(j, "m");
  if (rank < 0 || m < 1) throw InputError("invalid rank or m");
  if (!j.contains("entries") || !j["entries"].is_array()) throw InputError("missing array \"entries\"");
  SymTensor<Tag> t(m, rank);
  std::vector<bool> seen(t.size(), false);
  for (const auto& e : j["entries"]) {
    if (!e.is_object() || !e.contains("idx") || !e.contains("val") || !e["idx"].is_array())
      throw InputError("entry must be {\"idx\": [..], \"val\": ..}");
    MultiIndex idx;
    for (const auto& x : e["idx"]) {
      if (!x.is_number_integer()) throw InputError("labels must be integers");
      idx.push_back(x.get<int>());
    }
    if (static_cast<int>(idx.size()) != rank || !is_canonical(idx, m))
      throw InputError("idx must be a sorted multiset of " + std::to_string(rank) + " labels in [0, m)");
    const std::size_t pos = t.basis().rank(idx);
    if (seen[pos]) throw InputError("duplicate entry " + e["idx"].dump());
    seen[pos] = true;
    t[pos] = scalar_from_json(e["val"]);
  }
  return t;
}

Json labels(const Counts& c) { return Json(from_counts(c)); }

}  // namespace

Json to_json(const Scalar& s, NumberFormat fmt) {
  if (fmt == NumberFormat::Float) {
    auto z = s.to_complex();
    if (s.is_real()) return z.real();
    return Json{{"re", z.real()}, {"im", z.imag()}};
  }
  if (s.is_real()) return rational_string(s.re());
  return Json{{"re", rational_string(s.re())}, {"im", rational_string(s.im())}};
}

Scalar scalar_from_json(const Json& j) {
  try {
    if (j.is_object()) {
      if (!j.contains("re")) throw InputError("complex scalar needs \"re\"");
      mpq_class im = j.contains("im") ? rational_from_json(j["im"]) : mpq_class(0);
      return Scalar(rational_from_json(j["re"]), im);
    }
    return Scalar(rational_from_json(j));
  } catch (const std::invalid_argument& e) {
    throw InputError(e.what());
  }
}

template <class Tag>
Json to_json(const PointVec<Tag>& v, NumberFormat fmt) {
  Json w = Json::array();
  for (const auto& s : v.w) w.push_back(to_json(s, fmt));
  return Json{{"m", v.m()}, {"weights", w}};
}
template Json to_json(const PointVec<MeasureTag>&, NumberFormat);
template Json to_json(const PointVec<FnTag>&, NumberFormat);

PointMeasure measure_from_json(const Json& j) { return point_from_json<MeasureTag>(j); }
PointFn fn_from_json(const Json& j) { return point_from_json<FnTag>(j); }

template <class Tag>
Json to_json(const SymTensor<Tag>& t, NumberFormat fmt) {
  Json entries = Json::array();
  for (std::size_t i = 0; i < t.size(); ++i)
    if (!t[i].is_zero()) entries.push_back(Json{{"idx", t.basis().at(i)}, {"val", to_json(t[i], fmt)}});
  return Json{{"rank", t.rank()}, {"m", t.m()}, {"entries", entries}};
}
template Json to_json(const SymTensor<FnTag>&, NumberFormat);
template Json to_json(const SymTensor<MeasureTag>&, NumberFormat);

SymFn symfn_from_json(const Json& j) { return tensor_from_json<FnTag>(j); }
SymMeasure symmeasure_from_json(const Json& j) { return tensor_from_json<MeasureTag>(j); }

Json to_json(const GradedFn& p, NumberFormat fmt) {
  Json a = Json::array();
  for (const auto& c : p.comps) a.push_back(to_json(c, fmt));
  return a;
}

GradedFn graded_from_json(const Json& j) {
  if (j.is_object()) return GradedFn::monomial(symfn_from_json(j));
  if (!j.is_array() || j.empty()) throw InputError("polynomial must be a non-empty array of components");
  std::vector<SymFn> comps;
  for (const auto& c : j) comps.push_back(symfn_from_json(c));
  const int m = comps.front().m();
  GradedFn p(m, 0);
  int max_rank = 0;
  for (const auto& c : comps) {
    if (c.m() != m) throw InputError("components disagree on m");
    max_rank = std::max(max_rank, c.rank());
  }
  p.resize(max_rank);
  std::vector<bool> seen(static_cast<std::size_t>(max_rank) + 1, false);
  for (const auto& c : comps) {
    if (seen[static_cast<std::size_t>(c.rank())]) throw InputError("duplicate component of rank " + std::to_string(c.rank()));
    seen[static_cast<std::size_t>(c.rank())] = true;
    p[c.rank()] = c;
  }
  return p;
}

Json to_json(const WickPoly& p, NumberFormat fmt) {
  Json terms = Json::array();
  for (const auto& [mono, c] : p.terms())
    terms.push_back(Json{{"A", labels(mono.A)}, {"B", labels(mono.B)}, {"coeff", to_json(c, fmt)}});
  return Json{{"sigma", to_json(p.ref().sigma(), fmt)}, {"terms", terms}};
}

Json to_json(const Report& r) {
  Json disc = std::isfinite(r.max_discrepancy) ? Json(r.max_discrepancy) : Json("inf");
  return Json{{"suite", r.name},       {"cases", r.cases},  {"failures", r.failures},
              {"max_discrepancy", disc}, {"passed", r.passed()}, {"notes", r.notes}};
}

Json load_json_arg(const std::string& arg) {
  std::string text;
  if (!arg.empty() && (arg.front() == '{' || arg.front() == '[')) {
    text = arg;
  } else if (arg == "-") {
    text.assign(std::istreambuf_iterator<char>(std::cin), std::istreambuf_iterator<char>());
  } else {
    std::ifstream in(arg);
    if (!in) throw InputError("cannot open " + arg);
    std::ostringstream ss;
    ss << in.rdbuf();
    text = ss.str();
  }
  try {
    return Json::parse(text);
  } catch (const Json::parse_error& e) {
    throw InputError(std::string("invalid JSON: ") + e.what());
  }
}

}  // namespace spatial
