#include "purerec/hyperexp.hpp"

#include "purerec/error.hpp"

namespace purerec {

void HyperexpSpec::validate() const {
  if (vars.empty()) throw usage_error("bad-spec", "a spec needs at least one variable");
  for (const auto& f : factors) {
    if (f.base.nvars() != vars.size() && !f.base.is_constant())
      throw usage_error("variable-mismatch", "factor " + f.base.str() + " over foreign variables");
    if (f.base.constant_term() == 0)
      throw usage_error("bad-spec", "base " + f.base.str() + " vanishes at the origin");
  }
  if (!exp_part.is_zero() && exp_part.nvars() != vars.size() && !exp_part.is_constant())
    throw usage_error("variable-mismatch", "exponential part over foreign variables");
}

HyperexpSpec operator*(const HyperexpSpec& a, const HyperexpSpec& b) {
  if (a.vars != b.vars) throw usage_error("variable-mismatch", "product of specs over different variables");
  HyperexpSpec r = a;
  for (const auto& f : b.factors) {
    bool merged = false;
    for (auto& g : r.factors) {
      if (g.base == f.base) {
        g.exponent += f.exponent;
        merged = true;
        break;
      }
    }
    if (!merged) r.factors.push_back(f);
  }
  std::erase_if(r.factors, [](const HyperexpFactor& f) { return f.exponent == 0; });
  r.exp_part = MPoly(r.vars) + a.exp_part + b.exp_part;
  return r;
}

std::string HyperexpSpec::str() const {
  std::string out;
  for (const auto& f : factors) {
    if (!out.empty()) out += "*";
    out += "(" + f.base.str() + ")";
    if (f.exponent == 1) continue;
    if (is_integer(f.exponent) && f.exponent > 0)
      out += "^" + to_string(f.exponent);
    else
      out += "^(" + to_string(f.exponent) + ")";
  }
  if (!exp_part.is_zero()) {
    if (!out.empty()) out += "*";
    out += "exp(" + exp_part.str() + ")";
  }
  return out.empty() ? "1" : out;
}

}  // namespace purerec
