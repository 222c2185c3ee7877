#pragma once

// Text input: polynomials and hyperexponential specs.
//
//   expr     := ['+'|'-'] term (('+'|'-') term)*
//   term     := factor (('*'|'/') factor)*
//   factor   := primary ['^' exponent]
//   exponent := int | '-' int | '(' ['+'|'-'] int ['/' int] ')'
//   primary  := int | name | 'exp' '(' expr ')' | '(' expr ')'
//
// Whitespace is ignored. Errors are reported as "parse-error" with the
// 0-based character position of the offending token.

#include <string>
#include <string_view>
#include <vector>

#include "purerec/hyperexp.hpp"
#include "purerec/mpoly.hpp"

namespace purerec {

/// Parses a polynomial over `vars`; any other identifier is an error.
MPoly parse_mpoly(std::string_view text, const std::vector<std::string>& vars);

/// Parses a hyperexponential spec. With `vars` empty the variables are the
/// identifiers found in the text, in natural order (x1 < x2 < x10).
HyperexpSpec parse_hyperexp(std::string_view text, std::vector<std::string> vars = {});

/// Natural ordering of variable names.
bool natural_less(const std::string& a, const std::string& b);

}  // namespace purerec
