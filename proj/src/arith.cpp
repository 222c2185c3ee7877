#include "purerec/arith.hpp"

#include <cctype>

#include "purerec/error.hpp"

namespace purerec {

Rat rat_canon(const Int& num, const Int& den) {
  if (den == 0) throw usage_error("zero-denominator", "rational with zero denominator");
  Rat q(num, den);
  q.canonicalize();
  return q;
}

std::string to_string(const Int& v) { return v.get_str(10); }

std::string to_string(const Rat& q) {
  if (q.get_den() == 1) return q.get_num().get_str(10);
  return q.get_num().get_str(10) + "/" + q.get_den().get_str(10);
}

namespace {

bool all_digits(std::string_view s) {
  if (s.empty()) return false;
  for (char c : s)
    if (!std::isdigit(static_cast<unsigned char>(c))) return false;
  return true;
}

}  // namespace

Rat parse_rat(std::string_view text) {
  std::string_view body = text;
  bool negative = false;
  if (!body.empty() && (body.front() == '-' || body.front() == '+')) {
    negative = body.front() == '-';
    body.remove_prefix(1);
  }
  const auto slash = body.find('/');
  const std::string_view num_text = body.substr(0, slash);
  const std::string_view den_text = slash == std::string_view::npos ? "1" : body.substr(slash + 1);
  if (!all_digits(num_text) || !all_digits(den_text))
    throw usage_error("parse-error", "malformed rational '" + std::string(text) + "'");
  Int num(std::string(num_text), 10);
  Int den(std::string(den_text), 10);
  if (negative) num = -num;
  return rat_canon(num, den);
}

namespace {

// Exact root: returns true and sets out when v = out^k for integer out.
bool exact_root(const Int& v, unsigned long k, Int& out) {
  if (v < 0) {
    if (k % 2 == 0) return false;
    Int pos = -v;
    if (!exact_root(pos, k, out)) return false;
    out = -out;
    return true;
  }
  return mpz_root(out.get_mpz_t(), v.get_mpz_t(), k) != 0;
}

Int int_pow(const Int& base, unsigned long e) {
  Int r;
  mpz_pow_ui(r.get_mpz_t(), base.get_mpz_t(), e);
  return r;
}

}  // namespace

Rat rational_power(const Rat& c, const Rat& e) {
  if (c == 0) throw usage_error("zero-base", "zero raised to a rational power");
  if (!e.get_den().fits_ulong_p() || !e.get_num().fits_slong_p())
    throw usage_error("exponent-too-large", "exponent out of range");
  const unsigned long q = e.get_den().get_ui();
  const long p = e.get_num().get_si();
  Int rn, rd;
  if (!exact_root(c.get_num(), q, rn) || !exact_root(c.get_den(), q, rd))
    throw usage_error("non-rational-leading-value",
                      to_string(c) + "^(" + to_string(e) + ") is not rational");
  const unsigned long ap = static_cast<unsigned long>(p < 0 ? -p : p);
  Rat root = rat_canon(int_pow(rn, ap), int_pow(rd, ap));
  if (p < 0) root = 1 / root;
  return root;
}

Int common_denominator(std::span<const Rat> values) {
  Int l = 1;
  for (const Rat& v : values)
    if (v.get_den() != 1) l = lcm(l, v.get_den());
  return l;
}

std::size_t digit_count(const Int& v) {
  if (v == 0) throw usage_error("zero-value", "digit count of zero");
  Int a = abs(v);
  std::size_t k = mpz_sizeinbase(a.get_mpz_t(), 10);
  // sizeinbase may overshoot by one
  Int p;
  mpz_ui_pow_ui(p.get_mpz_t(), 10, k - 1);
  if (a < p) --k;
  return k;
}

}  // namespace purerec
