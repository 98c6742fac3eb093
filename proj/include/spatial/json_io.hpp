#pragma once

#include <stdexcept>
#include <string>

#include <json.hpp>

#include "spatial/ground.hpp"
#include "spatial/report.hpp"
#include "spatial/scalar.hpp"
#include "spatial/symtensor.hpp"
#include "spatial/wick.hpp"

namespace spatial {

using Json = nlohmann::ordered_json;

// Thrown for structurally invalid JSON input.
struct InputError : std::runtime_error {
  using std::runtime_error::runtime_error;
};

// Exact output writes "p/q" strings; float output writes doubles.
enum class NumberFormat { Exact, Float };

Json to_json(const Scalar& s, NumberFormat fmt = NumberFormat::Exact);
// "p/q", integers, or {"re": .., "im": ..}
Scalar scalar_from_json(const Json& j);

template <class Tag>
Json to_json(const PointVec<Tag>& v, NumberFormat fmt = NumberFormat::Exact);
// {"m": m, "weights": [..]} or a bare array of scalars
PointMeasure measure_from_json(const Json& j);
PointFn fn_from_json(const Json& j);

template <class Tag>
Json to_json(const SymTensor<Tag>& t, NumberFormat fmt = NumberFormat::Exact);
// {"rank": n, "m": m, "entries": [{"idx": [sorted labels], "val": ..}]}; missing entries are zero.
SymFn symfn_from_json(const Json& j);
SymMeasure symmeasure_from_json(const Json& j);

Json to_json(const GradedFn& p, NumberFormat fmt = NumberFormat::Exact);
// array of components of rank 0, 1, ... (a single component object is also accepted)
GradedFn graded_from_json(const Json& j);

// {"sigma": .., "terms": [{"A": [..], "B": [..], "coeff": ..}]} in monomial order
Json to_json(const WickPoly& p, NumberFormat fmt = NumberFormat::Exact);

// non-finite discrepancies are written as the string "inf"
Json to_json(const Report& r);

// Inline JSON when the argument starts with '{' or '[', standard input for "-",
// otherwise a file path.
Json load_json_arg(const std::string& arg);

}  // namespace spatial
