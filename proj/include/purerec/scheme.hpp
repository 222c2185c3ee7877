#pragma once

// Evaluation schemes: one pure recurrence per axis, per-axis guards, and a box
// of initial values. A lattice point is reached by climbing one axis at a
// time; the seeds for each climb are themselves resolved one dimension lower.
//
// With axis order pi (pi[d-1] climbed last), resolving p at level k means:
// if p lies in the init box, read it; if p_j <= B_j for j = pi[k-1], go down
// a level; otherwise resolve the L_j seeds p with n_j = B_j-L_j+1..B_j and
// slide a window of L_j values up to p_j. B_j = g_j + L_j is the box bound.

#include <functional>
#include <string>
#include <utility>
#include <vector>

#include "purerec/recurrence.hpp"
#include "purerec/table.hpp"

namespace purerec {

enum class Provenance { Derived, Guessed };

std::string to_string(Provenance p);

struct Scheme {
  std::vector<PureRec> recs;  // recs[j].axis == j
  std::vector<long> guards;
  std::vector<Provenance> provenance;
  ValueTable<Rat> init;

  std::size_t dim() const { return recs.size(); }
  /// Top of the seed window on axis j: guards[j] + order_j.
  long bound(std::size_t j) const { return guards[j] + static_cast<long>(recs[j].order()); }
  void validate() const;

  friend bool operator==(const Scheme&, const Scheme&) = default;
};

struct EvalStats {
  std::size_t steps = 0;          // recurrence applications
  std::size_t max_window = 0;     // largest window of a single climb segment
  std::size_t peak_retained = 0;  // values held across all live segments
  std::size_t reroutes = 0;       // axis orders abandoned after a singularity
  std::size_t memo_entries = 0;
  std::vector<std::size_t> order;  // axis order that succeeded
};

/// Supplies exact values on [0, box].
using TableOracle = std::function<ValueTable<Rat>(const Point& box)>;

struct SchemeOptions {
  long guard_pad = 2;
  std::vector<Provenance> provenance;  // defaults to Guessed on every axis
};

/// Guards: if c_0 of axis j depends on n_j alone, the largest integer root
/// (safe start) plus the pad; otherwise the largest n_j of a zero of c_0 in
/// the probe box [0, 2 max L + pad + 8]^d plus the pad. Every recurrence is
/// checked exactly on the init box.
Scheme build_scheme(std::vector<PureRec> recs, const TableOracle& oracle, const SchemeOptions& opts = {});

/// Identity axis order first, then the remaining permutations in
/// lexicographic order; throws Error code "FAIL" when every order meets a
/// vanishing leading coefficient.
Rat eval_point(const Scheme& s, const Point& target, EvalStats* stats = nullptr);

/// One fixed axis order; a vanishing leading coefficient throws code
/// "singular-point".
Rat eval_point_ordered(const Scheme& s, const Point& target, const std::vector<std::size_t>& order,
                       EvalStats* stats = nullptr);

/// Sliding-window evaluation of a univariate recurrence from a(0..m-1).
/// A vanishing leading coefficient is a hard "unexpected-singularity" error.
Rat eval_diag(const PureRec& rec, const std::vector<Rat>& initials, long n, EvalStats* stats = nullptr);

std::string write_scheme(const Scheme& s);
Scheme read_scheme(const std::string& text);

}  // namespace purerec
