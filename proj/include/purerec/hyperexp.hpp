#pragma once

#include <string>
#include <vector>

#include "purerec/mpoly.hpp"

namespace purerec {

struct HyperexpFactor {
  MPoly base;
  Rat exponent;
};

/// R = prod base_i^exponent_i * exp(exp_part) in the variables `vars`.
struct HyperexpSpec {
  std::vector<std::string> vars;
  std::vector<HyperexpFactor> factors;
  MPoly exp_part;

  std::size_t dim() const { return vars.size(); }
  /// Throws unless d >= 1 and every base has a nonzero constant term.
  void validate() const;
  /// Product of two specs over the same variables.
  friend HyperexpSpec operator*(const HyperexpSpec& a, const HyperexpSpec& b);
  std::string str() const;
};

}  // namespace purerec
