#include "purerec/poly.hpp"

#include <algorithm>

#include "purerec/error.hpp"

namespace purerec {

Poly::Poly(std::string var, std::vector<Rat> coeffs) : var_(std::move(var)), coeffs_(std::move(coeffs)) {
  trim();
}

Poly Poly::constant(std::string var, const Rat& c) { return Poly(std::move(var), {c}); }

Poly Poly::monomial(std::string var, const Rat& c, int degree) {
  std::vector<Rat> cs(static_cast<std::size_t>(degree) + 1);
  cs.back() = c;
  return Poly(std::move(var), std::move(cs));
}

void Poly::trim() {
  while (!coeffs_.empty() && coeffs_.back() == 0) coeffs_.pop_back();
}

void Poly::check_var(const Poly& o) {
  // A constant carries no variable information, so it combines with anything.
  if (var_ == o.var_ || o.is_constant()) return;
  if (is_constant()) {
    var_ = o.var_;
    return;
  }
  throw usage_error("variable-mismatch", "polynomials in '" + var_ + "' and '" + o.var_ + "'");
}

Rat Poly::coeff(int k) const {
  if (k < 0 || k > degree()) return 0;
  return coeffs_[static_cast<std::size_t>(k)];
}

Rat Poly::eval_at(const Rat& x) const {
  Rat acc = 0;
  for (auto it = coeffs_.rbegin(); it != coeffs_.rend(); ++it) acc = acc * x + *it;
  return acc;
}

Poly Poly::derivative() const {
  std::vector<Rat> cs;
  for (std::size_t k = 1; k < coeffs_.size(); ++k) cs.push_back(coeffs_[k] * static_cast<long>(k));
  return Poly(var_, std::move(cs));
}

Poly Poly::monic() const {
  if (is_zero()) return *this;
  Poly r = *this;
  const Rat l = lead();
  for (Rat& c : r.coeffs_) c /= l;
  return r;
}

Poly Poly::operator-() const {
  Poly r = *this;
  for (Rat& c : r.coeffs_) c = -c;
  return r;
}

Poly& Poly::operator+=(const Poly& o) {
  check_var(o);
  if (o.coeffs_.size() > coeffs_.size()) coeffs_.resize(o.coeffs_.size());
  for (std::size_t k = 0; k < o.coeffs_.size(); ++k) coeffs_[k] += o.coeffs_[k];
  trim();
  return *this;
}

Poly& Poly::operator-=(const Poly& o) { return *this += -o; }

Poly& Poly::operator*=(const Poly& o) {
  check_var(o);
  if (is_zero() || o.is_zero()) {
    coeffs_.clear();
    return *this;
  }
  std::vector<Rat> r(coeffs_.size() + o.coeffs_.size() - 1);
  for (std::size_t i = 0; i < coeffs_.size(); ++i) {
    if (coeffs_[i] == 0) continue;
    for (std::size_t j = 0; j < o.coeffs_.size(); ++j) r[i + j] += coeffs_[i] * o.coeffs_[j];
  }
  coeffs_ = std::move(r);
  trim();
  return *this;
}

Poly& Poly::operator*=(const Rat& c) {
  for (Rat& x : coeffs_) x *= c;
  trim();
  return *this;
}

namespace {

void append_term(std::string& out, const Rat& c, const std::string& var, int deg) {
  const bool negative = c < 0;
  const Rat a = abs(c);
  if (out.empty())
    out += negative ? "-" : "";
  else
    out += negative ? " - " : " + ";
  std::string mono;
  if (deg == 1)
    mono = var;
  else if (deg > 1)
    mono = var + "^" + std::to_string(deg);
  if (mono.empty())
    out += to_string(a);
  else if (a == 1)
    out += mono;
  else
    out += to_string(a) + "*" + mono;
}

}  // namespace

std::string Poly::str() const {
  if (is_zero()) return "0";
  std::string out;
  for (int k = degree(); k >= 0; --k) {
    const Rat& c = coeffs_[static_cast<std::size_t>(k)];
    if (c != 0) append_term(out, c, var_, k);
  }
  return out;
}

std::pair<Poly, Poly> divmod(const Poly& a, const Poly& b) {
  if (b.is_zero()) throw usage_error("division-by-zero", "polynomial division by zero");
  Poly q(a.var());
  Poly r = a;
  while (!r.is_zero() && r.degree() >= b.degree()) {
    const Poly t = Poly::monomial(a.var(), r.lead() / b.lead(), r.degree() - b.degree());
    q += t;
    r -= t * b;
  }
  return {q, r};
}

Poly gcd(const Poly& a, const Poly& b) {
  Poly x = a, y = b;
  while (!y.is_zero()) {
    Poly r = divmod(x, y).second;
    x = std::move(y);
    y = std::move(r);
  }
  return x.monic();
}

RatFn::RatFn(Poly num, Poly den) : num_(std::move(num)), den_(std::move(den)) {
  if (den_.is_zero()) throw usage_error("zero-denominator", "rational function with zero denominator");
  const Poly g = gcd(num_, den_);
  if (g.degree() > 0) {
    num_ = divmod(num_, g).first;
    den_ = divmod(den_, g).first;
  }
  const Rat l = den_.lead();
  num_ *= 1 / l;
  den_ *= 1 / l;
  if (num_.is_zero()) den_ = Poly::constant(den_.var(), 1);
}

RatFn operator+(const RatFn& a, const RatFn& b) {
  return RatFn(a.num_ * b.den_ + b.num_ * a.den_, a.den_ * b.den_);
}

RatFn operator*(const RatFn& a, const RatFn& b) { return RatFn(a.num_ * b.num_, a.den_ * b.den_); }

bool operator==(const RatFn& a, const RatFn& b) { return a.num_ * b.den_ == b.num_ * a.den_; }

std::string RatFn::str() const {
  if (den_.degree() == 0) return num_.str();
  return "(" + num_.str() + ")/(" + den_.str() + ")";
}

}  // namespace purerec
