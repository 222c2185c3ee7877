#pragma once

// Pure recurrences and their derivation from first-order ODEs.

#include <span>
#include <string>
#include <vector>

#include "purerec/hyperexp.hpp"
#include "purerec/mpoly.hpp"
#include "purerec/poly.hpp"
#include "purerec/table.hpp"

namespace purerec {

/// Index variable names for dimension d: {"n"} for d = 1, {"n1", ..., "nd"} otherwise.
std::vector<std::string> index_vars(std::size_t d);

/// A pure recurrence along one axis j:
///
///   c_0(n) a(n) + c_1(n) a(n - e_j) + ... + c_L(n) a(n - L e_j) = 0
///
/// with polynomial coefficients in the index variables n_1..n_d.
struct PureRec {
  std::size_t axis = 0;  // 0-based; rendered 1-based
  std::vector<MPoly> coeffs;

  std::size_t dim() const { return coeffs.empty() ? 0 : coeffs.front().nvars(); }
  std::size_t order() const { return coeffs.empty() ? 0 : coeffs.size() - 1; }
  const std::vector<std::string>& vars() const { return coeffs.front().vars(); }

  /// Integer primitive form, sign chosen so that the leading term of c_0 is
  /// positive.
  PureRec normalized() const;
  /// Throws unless c_0 is nonzero and c_L is nonzero (the single degenerate
  /// exception is an order-1 relation whose c_1 vanishes).
  void validate() const;

  /// sum_i c_i(n) a(n - i e_j); every shifted point must lie in the table.
  Rat residual(const ValueTable<Rat>& t, std::span<const long> point) const;
  /// Exact zero residual at every box point whose shifts stay in the box.
  bool annihilates(const ValueTable<Rat>& t) const;

  /// Univariate rational form a(n) = sum_{i>=1} f_i(n) a(n-i), f_i = -c_i/c_0.
  std::vector<RatFn> rational_form() const;
  static PureRec from_rational_form(std::span<const RatFn> f);

  /// "n*a(n) - a(n-1) = 0" style text.
  std::string str() const;

  friend bool operator==(const PureRec& a, const PureRec& b) {
    return a.axis == b.axis && a.coeffs == b.coeffs;
  }
};

struct SafeStart {
  long n0 = 0;
};

/// A'/B' with R'/R = A/B in lowest terms, for a univariate spec.
RatFn logderiv(const HyperexpSpec& spec);

/// Coefficient extraction from B R' - A R = 0: c_i(n) = b_i (n - i) - a_{i-1}.
/// Throws "singular-at-origin" when B(0) = 0.
PureRec ode_to_rec(const Poly& a, const Poly& b);

struct SafeStartOptions {
  long scan_bound = 1000;  // direct scan up to max(scan_bound, 2 * order)
};

/// Largest integer root >= 0 of c_0 (0 when there is none). c_0 must depend
/// on the recurrence axis only; throws "degenerate-leading-coefficient" when
/// c_0 vanishes identically.
SafeStart safe_start(const PureRec& rec, SafeStartOptions opts = {});

/// Largest nonnegative integer root of a univariate polynomial, or -1.
long largest_integer_root(const Poly& p, long scan_bound);

}  // namespace purerec
