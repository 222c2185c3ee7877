#pragma once

// Lattice walks in the quarter plane with positive steps, counted by plain
// dynamic programming: F(0,0) = 1, F(a,b) = sum_s F(a - s1, b - s2).

#include <array>
#include <string>
#include <string_view>
#include <vector>

#include "purerec/exec.hpp"
#include "purerec/table.hpp"

namespace purerec {

using Step = std::array<long, 2>;

class StepSet {
 public:
  /// Throws on an empty set, duplicates, negative coordinates or (0,0).
  explicit StepSet(std::vector<Step> steps);

  /// Parses the bracketed form "[[1,0],[0,1],[1,1]]"; braces are accepted too.
  static StepSet parse(std::string_view text);

  const std::vector<Step>& steps() const { return steps_; }
  long max_dx() const;
  long max_dy() const;
  std::string str() const;

 private:
  std::vector<Step> steps_;
};

ValueTable<Int> walk_dp(const StepSet& st, const Point& box, ExecPolicy policy = ExecPolicy::Parallel);

/// F(a, b) alone, keeping only max_dx + 1 rows of width b + 1.
Int walk_count(const StepSet& st, long a, long b);

/// F(i, i) for i = 0..count-1.
std::vector<Int> walk_diagonal(const StepSet& st, long count);

}  // namespace purerec
