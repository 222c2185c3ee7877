#pragma once

// Brute-force Taylor coefficients of hyperexponential specs.
//
// The route is deliberately independent of every recurrence engine: each
// base is normalized to constant term 1, its logarithm is built as a
// truncated series (through the log-derivative theta_k P / P obtained by
// series division), the exponent part is added, and the result is
// exponentiated with the classical recursion
//
//   n_k f[n] = sum_{0 < m <= n} m_k g[m] f[n - m]      (k = first axis with n_k > 0).
//
// The constant c^alpha of each base must be rational; otherwise the call
// fails with "non-rational-leading-value". Likewise exp(c) for a nonzero
// constant term c of the exponent part is rejected.

#include <string>
#include <vector>

#include "purerec/exec.hpp"
#include "purerec/hyperexp.hpp"
#include "purerec/poly.hpp"
#include "purerec/table.hpp"

namespace purerec {

struct SeriesTrunc {
  std::string var;
  std::vector<Rat> coeffs;  // coeffs[n] = [x^n] R, n = 0..order()

  int order() const { return static_cast<int>(coeffs.size()) - 1; }
};

SeriesTrunc series_from_spec(const HyperexpSpec& spec, int order,
                             ExecPolicy policy = ExecPolicy::Parallel);

ValueTable<Rat> mseries_from_spec(const HyperexpSpec& spec, const Point& box,
                                  ExecPolicy policy = ExecPolicy::Parallel);

/// True iff series^q * base = 1 + O(x^(N+1)), N the series order.
bool check_algebraic(const SeriesTrunc& series, const Poly& base, int q);

namespace kernels {

/// Fills f from f[0] = 1 by the exp recursion above; theta_g[k] holds
/// m_k g[m] on the same box as f.
void exp_fill(const std::vector<ValueTable<Rat>>& theta_g, ValueTable<Rat>& f, ExecPolicy policy);

}  // namespace kernels

}  // namespace purerec
