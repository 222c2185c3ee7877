#include "purerec/expr.hpp"

#include <algorithm>
#include <cctype>
#include <optional>
#include <set>

#include "purerec/error.hpp"

namespace purerec {

bool natural_less(const std::string& a, const std::string& b) {
  auto split = [](const std::string& s) {
    std::size_t k = s.size();
    while (k > 0 && std::isdigit(static_cast<unsigned char>(s[k - 1]))) --k;
    return std::pair{s.substr(0, k), s.substr(k)};
  };
  const auto [pa, sa] = split(a);
  const auto [pb, sb] = split(b);
  if (pa != pb) return pa < pb;
  if (sa.size() != sb.size()) return sa.size() < sb.size();
  return sa < sb;
}

namespace {

[[noreturn]] void fail(std::size_t pos, const std::string& what) {
  throw usage_error("parse-error", what + " at position " + std::to_string(pos));
}

// Either a polynomial or a general hyperexponential product.
struct Value {
  std::optional<MPoly> poly;
  HyperexpSpec hyper;
};

class Parser {
 public:
  Parser(std::string_view text, std::vector<std::string> vars, bool allow_exp)
      : text_(text), vars_(std::move(vars)), allow_exp_(allow_exp) {}

  Value parse() {
    Value v = expr();
    skip_ws();
    if (pos_ != text_.size()) fail(pos_, std::string("unexpected '") + text_[pos_] + "'");
    return v;
  }

 private:
  void skip_ws() {
    while (pos_ < text_.size() && std::isspace(static_cast<unsigned char>(text_[pos_]))) ++pos_;
  }

  char peek() {
    skip_ws();
    return pos_ < text_.size() ? text_[pos_] : '\0';
  }

  bool accept(char c) {
    if (peek() != c) return false;
    ++pos_;
    return true;
  }

  void expect(char c) {
    if (peek() == '\0') fail(pos_, std::string("unexpected end of input, expected '") + c + "'");
    if (!accept(c)) fail(pos_, std::string("expected '") + c + "'");
  }

  Int integer() {
    skip_ws();
    const std::size_t start = pos_;
    while (pos_ < text_.size() && std::isdigit(static_cast<unsigned char>(text_[pos_]))) ++pos_;
    if (start == pos_) {
      if (pos_ == text_.size()) fail(pos_, "unexpected end of input, expected an integer");
      fail(pos_, "expected an integer");
    }
    return Int(std::string(text_.substr(start, pos_ - start)), 10);
  }

  std::string identifier() {
    skip_ws();
    const std::size_t start = pos_;
    while (pos_ < text_.size() &&
           (std::isalnum(static_cast<unsigned char>(text_[pos_])) || text_[pos_] == '_'))
      ++pos_;
    return std::string(text_.substr(start, pos_ - start));
  }

  Value from_poly(MPoly p) {
    Value v;
    v.hyper.vars = vars_;
    v.hyper.exp_part = MPoly(vars_);
    v.poly = std::move(p);
    return v;
  }

  HyperexpSpec as_hyper(const Value& v, std::size_t pos) {
    if (!v.poly) return v.hyper;
    HyperexpSpec h;
    h.vars = vars_;
    h.exp_part = MPoly(vars_);
    if (v.poly->is_zero()) fail(pos, "zero factor in a product");
    if (*v.poly != MPoly::constant(vars_, 1)) h.factors.push_back({*v.poly, Rat(1)});
    return h;
  }

  static HyperexpSpec raise(HyperexpSpec h, const Rat& e) {
    for (auto& f : h.factors) f.exponent *= e;
    h.exp_part *= e;
    std::erase_if(h.factors, [](const HyperexpFactor& f) { return f.exponent == 0; });
    return h;
  }

  Value expr() {
    bool negate = false;
    if (accept('-'))
      negate = true;
    else
      accept('+');
    std::size_t at = pos_;
    Value acc = term();
    if (negate) acc = scale(acc, -1, at);
    for (;;) {
      const char c = peek();
      if (c != '+' && c != '-') break;
      ++pos_;
      at = pos_;
      Value rhs = term();
      if (!acc.poly || !rhs.poly) fail(at, "sums of non-polynomial terms are not supported");
      if (c == '+')
        *acc.poly += *rhs.poly;
      else
        *acc.poly -= *rhs.poly;
    }
    return acc;
  }

  Value scale(const Value& v, const Rat& c, std::size_t pos) {
    if (v.poly) return from_poly(*v.poly * c);
    Value r;
    r.hyper = as_hyper(v, pos) * as_hyper(from_poly(MPoly::constant(vars_, c)), pos);
    return r;
  }

  Value term() {
    Value acc = factor();
    for (;;) {
      const char c = peek();
      if (c != '*' && c != '/') break;
      ++pos_;
      const std::size_t at = pos_;
      Value rhs = factor();
      if (c == '*') {
        if (acc.poly && rhs.poly) {
          *acc.poly *= *rhs.poly;
        } else {
          Value r;
          r.hyper = as_hyper(acc, at) * as_hyper(rhs, at);
          acc = std::move(r);
        }
      } else {
        if (rhs.poly && rhs.poly->is_zero()) fail(at, "division by zero");
        if (acc.poly && rhs.poly && rhs.poly->is_constant()) {
          *acc.poly *= 1 / rhs.poly->constant_term();
        } else {
          Value r;
          r.hyper = as_hyper(acc, at) * raise(as_hyper(rhs, at), -1);
          acc = std::move(r);
        }
      }
    }
    return acc;
  }

  Rat exponent() {
    if (accept('(')) {
      bool negative = false;
      if (accept('-'))
        negative = true;
      else
        accept('+');
      Int num = integer();
      Int den = 1;
      if (accept('/')) {
        const std::size_t at = pos_;
        den = integer();
        if (den == 0) fail(at, "zero denominator in exponent");
      }
      expect(')');
      return rat_canon(negative ? Int(-num) : num, den);
    }
    if (accept('-')) return Rat(-integer());
    return Rat(integer());
  }

  Value factor() {
    Value base = primary();
    if (!accept('^')) return base;
    const std::size_t at = pos_;
    const Rat e = exponent();
    if (base.poly && is_integer(e) && e >= 0) {
      if (!e.get_num().fits_uint_p()) fail(at, "exponent too large");
      return from_poly(base.poly->pow(static_cast<unsigned>(e.get_num().get_ui())));
    }
    Value r;
    r.hyper = raise(as_hyper(base, at), e);
    return r;
  }

  Value primary() {
    const char c = peek();
    const std::size_t at = pos_;
    if (c == '\0') fail(pos_, "unexpected end of input");
    if (std::isdigit(static_cast<unsigned char>(c))) return from_poly(MPoly::constant(vars_, Rat(integer())));
    if (accept('(')) {
      Value v = expr();
      expect(')');
      return v;
    }
    if (std::isalpha(static_cast<unsigned char>(c)) || c == '_') {
      const std::string name = identifier();
      if (name == "exp" && peek() == '(') {
        if (!allow_exp_) fail(at, "exp() is not allowed in a polynomial");
        ++pos_;
        const std::size_t arg_at = pos_;
        Value arg = expr();
        expect(')');
        if (!arg.poly) fail(arg_at, "exp() argument must be a polynomial");
        Value r;
        r.hyper.vars = vars_;
        r.hyper.exp_part = *arg.poly;
        if (r.hyper.exp_part.is_zero()) return from_poly(MPoly::constant(vars_, 1));
        return r;
      }
      const auto it = std::find(vars_.begin(), vars_.end(), name);
      if (it == vars_.end()) fail(at, "unknown variable '" + name + "'");
      return from_poly(MPoly::variable(vars_, static_cast<std::size_t>(it - vars_.begin())));
    }
    fail(at, std::string("unexpected '") + c + "'");
  }

  std::string_view text_;
  std::vector<std::string> vars_;
  bool allow_exp_;
  std::size_t pos_ = 0;
};

std::vector<std::string> scan_identifiers(std::string_view text) {
  std::set<std::string> names;
  std::size_t i = 0;
  while (i < text.size()) {
    const auto c = static_cast<unsigned char>(text[i]);
    if (std::isalpha(c) || c == '_') {
      const std::size_t start = i;
      while (i < text.size() && (std::isalnum(static_cast<unsigned char>(text[i])) || text[i] == '_')) ++i;
      std::string name(text.substr(start, i - start));
      std::size_t j = i;
      while (j < text.size() && std::isspace(static_cast<unsigned char>(text[j]))) ++j;
      if (!(name == "exp" && j < text.size() && text[j] == '(')) names.insert(std::move(name));
    } else if (std::isdigit(c)) {
      while (i < text.size() && std::isalnum(static_cast<unsigned char>(text[i]))) ++i;
    } else {
      ++i;
    }
  }
  std::vector<std::string> out(names.begin(), names.end());
  std::sort(out.begin(), out.end(), natural_less);
  return out;
}

}  // namespace

MPoly parse_mpoly(std::string_view text, const std::vector<std::string>& vars) {
  Parser parser(text, vars, false);
  Value v = parser.parse();
  if (!v.poly) throw usage_error("parse-error", "'" + std::string(text) + "' is not a polynomial");
  return *v.poly;
}

HyperexpSpec parse_hyperexp(std::string_view text, std::vector<std::string> vars) {
  if (vars.empty()) vars = scan_identifiers(text);
  if (vars.empty()) vars = {"x"};
  Parser parser(text, vars, true);
  Value v = parser.parse();
  HyperexpSpec spec;
  if (v.poly) {
    spec.vars = vars;
    spec.exp_part = MPoly(vars);
    if (v.poly->is_zero()) throw usage_error("bad-spec", "the zero function is not a valid spec");
    if (*v.poly != MPoly::constant(vars, 1)) spec.factors.push_back({*v.poly, Rat(1)});
  } else {
    spec = v.hyper;
    // Merge repeated bases through the identity spec.
    HyperexpSpec one;
    one.vars = vars;
    one.exp_part = MPoly(vars);
    spec = one * spec;
  }
  spec.validate();
  return spec;
}

}  // namespace purerec
