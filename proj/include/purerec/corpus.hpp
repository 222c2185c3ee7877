#pragma once

// Seeded random test corpora and the end-to-end checks run on them.
//
// Two classes per dimension: P^(-1/3) with P(0) = 1, and exp(P) with
// P(0) = 0. Coefficients are drawn from [-5, 5]; univariate P has degree
// 1..4, bivariate P total degree <= 2, trivariate P total degree 1. Every
// variable occurs in P.

#include <cstdint>
#include <string>
#include <vector>

#include "purerec/guess.hpp"
#include "purerec/hyperexp.hpp"
#include "purerec/scheme.hpp"

namespace purerec {

enum class CorpusClass { Pow, Exp };

std::string to_string(CorpusClass c);

std::vector<HyperexpSpec> random_corpus(std::size_t dim, CorpusClass cls, std::size_t count, std::uint64_t seed);

struct CaseResult {
  std::string label;
  std::string spec;
  bool ok = false;              // every exact comparison held
  std::size_t fails = 0;        // evaluation points that ended in FAIL
  std::size_t points = 0;       // points compared against the oracle
  std::vector<std::string> lines;  // details, one per line
  std::string error;            // set when the case threw
};

/// ode_to_rec on the log-derivative, checked on `terms` oracle coefficients,
/// plus sliding-window evaluation of those coefficients from the safe start.
CaseResult run_uni_case(const HyperexpSpec& spec, long terms = 300);

struct MultiCaseOptions {
  GuessConfig guess{6, 4, 16, ExecPolicy::Parallel};
  long fit_start = 12;   // side of the fitting box, doubled on table-too-small
  long fit_cap = 48;
  long beyond = 40;      // recurrences re-verified on [0, fit + beyond]^d
  long eval_side = 50;   // eval_point compared with the oracle on [0, eval_side]^d
  long guard_pad = 2;
};

CaseResult run_multi_case(const HyperexpSpec& spec, const MultiCaseOptions& opts);

struct SelftestOptions {
  std::uint64_t seed = 20260101;
  bool quick = false;  // smaller boxes for smoke runs
};

/// 5 + 5 univariate, 5 + 5 bivariate and 3 + 3 trivariate cases.
std::vector<CaseResult> run_selftest(const SelftestOptions& opts);

/// One line per case plus a summary line.
std::string render_selftest(const std::vector<CaseResult>& results);

}  // namespace purerec
