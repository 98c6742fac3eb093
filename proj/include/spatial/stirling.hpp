#pragma once

#include <memory>
#include <string>
#include <vector>

#include "spatial/ground.hpp"
#include "spatial/report.hpp"
#include "spatial/symtensor.hpp"

namespace spatial {

// S2: second kind, S1: signed first kind, C1: unsigned first kind, Lah.
enum class OperatorKind { S2, S1, C1, Lah };

// "S", "s", "c", "L"
OperatorKind parse_kind(const std::string& text);
std::string kind_symbol(OperatorKind kind);

// Partition formula: sum over set partitions of {1..n} into k blocks of
// weight(lambda) * D_lambda f. Outside 1 <= k <= n: zero, except k = n = 0 (identity).
SymFn apply_operator(OperatorKind kind, int n, int k, const SymFn& f);
// Operator-level recurrences (S2 and S1 only).
SymFn apply_via_recurrence(OperatorKind kind, int n, int k, const SymFn& f);
// Inclusion-exclusion over position subsets (S2 only).
SymFn apply_via_euler(int n, int k, const SymFn& f);
// (n!/k!) sum over compositions with kind-specific weights.
SymFn apply_via_compositions(OperatorKind kind, int n, int k, const SymFn& f);

// Matrix from the rank-n multiset basis to the rank-k multiset basis:
// entry[a][b] = (apply e_b)[a].
struct OperatorMatrix {
  OperatorKind kind;
  int n, k, m;
  std::vector<std::vector<Scalar>> entry;
};

// Cached per (kind, n, k, m); safe to call concurrently.
std::shared_ptr<const OperatorMatrix> operator_matrix(OperatorKind kind, int n, int k, int m);
SymFn apply_matrix(const OperatorMatrix& a, const SymFn& f);
// Unique rank-n measure with pair(result, f) = pair(mu, apply(kind, n, k, f)).
SymMeasure adjoint_apply(OperatorKind kind, int n, int k, const SymMeasure& mu);

// Rows 0..n_max of the one-point triangle; row n has entries k = 0..n.
std::vector<std::vector<Scalar>> classical_triangle(OperatorKind kind, int n_max);

Report check_routes(int n, int k, const SymFn& f);
Report check_expansions(int n, const PointMeasure& omega, const SymFn& f);
Report check_sign_law(int n, int k, int m);
Report check_orthogonality(int n, int i, const PointFn& xi, const PointMeasure& omega);
Report check_lah(int n, int k, const PointMeasure& omega, const PointFn& xi);
Report check_olson(int n, int m_extra, int i, const SymFn& f);
Report check_convolution_identity(int n, int i, int j, const SymFn& f);
Report check_convolution_identity(int n, int i, int j, const PointFn& xi);
Report check_shift_identity(int n, int i, Label x, const PointFn& xi);
Report check_genfun_stirling(OperatorKind kind, int k, const PointFn& xi, int N,
                             const PointMeasure& omega);

}  // namespace spatial
