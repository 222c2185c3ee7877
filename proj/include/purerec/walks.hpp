#pragma once

// The walk application: from a step set and a scale K, guess the two axis
// recurrences and the diagonal recurrence, build an evaluation scheme, and
// report F(K,2K), F(2K,2K) and the first 30 diagonal terms.

#include <optional>
#include <string>
#include <vector>

#include "purerec/guess.hpp"
#include "purerec/lattice.hpp"
#include "purerec/scheme.hpp"

namespace purerec {

/// 1 - sum over steps of x1^s1 x2^s2.
MPoly gf_from_steps(const StepSet& st);

struct WalkConfig {
  GuessConfig guess;
  long table_start = 60;  // DP box side used for fitting; doubled on table-too-small
  long table_cap = 480;
  long guard_pad = 2;
};

struct WalkReport {
  StepSet steps{{{1, 0}}};
  long K = 1;
  MPoly gf;
  Scheme scheme;               // axis recurrences live in scheme.recs
  long fit_side = 0;           // DP box side the axis recurrences were fitted on
  std::optional<Int> value_k2k;  // empty when every path met a singularity
  std::string fail_reason;
  EvalStats k2k_stats;
  PureRec diag_rec;
  long diag_fit_terms = 0;
  Int value_2k2k;
  std::vector<Int> diag30;     // F(0,0) .. F(29,29)
};

WalkReport walk2d_report(const StepSet& st, long K, const WalkConfig& cfg = {});

/// Theorem-style text; with full_values = false big values are abbreviated
/// to their digit counts.
std::string render_text(const WalkReport& r, bool full_values = true);
/// JSON document embedding the scheme file.
std::string render_json(const WalkReport& r);

}  // namespace purerec
