#pragma once

// Discovery of pure recurrences from exact values by linear ansatz fitting.
//
// For axis j, order L and total degree D the unknowns are the coefficients
// of c_0..c_L, each a polynomial of total degree <= D in n_1..n_d. Every box
// point n with n_j >= L gives one linear equation
//
//   sum_i c_i(n) a(n - i e_j) = 0.
//
// The last `verify_margin` usable points (row-major order) are held out of
// the fit. A candidate is returned only if it annihilates every usable
// point, so a result is always verified (though not proved).

#include <optional>
#include <span>
#include <vector>

#include "purerec/exec.hpp"
#include "purerec/mpoly.hpp"
#include "purerec/recurrence.hpp"
#include "purerec/table.hpp"

namespace purerec {

struct GuessConfig {
  int max_order = 4;
  int max_degree = 2;
  int verify_margin = 16;
  ExecPolicy policy = ExecPolicy::Parallel;

  void validate() const;
};

/// Exponent vectors of total degree <= degree in d variables, ascending by
/// total degree and then lexicographically.
std::vector<Exponents> ansatz_monomials(std::size_t d, int degree);

/// One (L, D) fit. Returns std::nullopt when no verified recurrence of that
/// shape exists; throws "table-too-small" when the table cannot supply
/// unknowns + verify_margin usable points.
std::optional<PureRec> guess_pure_rec(const ValueTable<Rat>& table, std::size_t axis, int order,
                                      int degree, int verify_margin = 16,
                                      ExecPolicy policy = ExecPolicy::Parallel);

/// Scans (L, D) by increasing L + D, then increasing L, and returns the first
/// verified recurrence. Throws "no-recurrence-found-within-bounds" when the
/// envelope is exhausted.
PureRec guess_search(const ValueTable<Rat>& table, std::size_t axis, const GuessConfig& cfg);

/// guess_search on a univariate sequence a(0), a(1), ...
PureRec guess_diag_rec(std::span<const Rat> values, const GuessConfig& cfg);

}  // namespace purerec
