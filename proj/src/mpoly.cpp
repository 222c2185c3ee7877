#include "purerec/mpoly.hpp"

#include <numeric>

#include "purerec/error.hpp"

namespace purerec {

bool TermOrder::operator()(const Exponents& a, const Exponents& b) const {
  const int da = std::accumulate(a.begin(), a.end(), 0);
  const int db = std::accumulate(b.begin(), b.end(), 0);
  if (da != db) return da > db;
  return b < a;
}

MPoly MPoly::constant(std::vector<std::string> vars, const Rat& c) {
  MPoly p(std::move(vars));
  p.add_term(Exponents(p.nvars(), 0), c);
  return p;
}

MPoly MPoly::variable(std::vector<std::string> vars, std::size_t k) {
  Exponents e(vars.size(), 0);
  e.at(k) = 1;
  return monomial(std::move(vars), std::move(e), 1);
}

MPoly MPoly::monomial(std::vector<std::string> vars, Exponents exps, const Rat& c) {
  MPoly p(std::move(vars));
  if (exps.size() != p.nvars()) throw usage_error("variable-mismatch", "exponent vector length");
  p.add_term(exps, c);
  return p;
}

bool MPoly::is_constant() const {
  return terms_.empty() || (terms_.size() == 1 && total_degree() == 0);
}

int MPoly::total_degree() const {
  if (terms_.empty()) return -1;
  const Exponents& e = terms_.begin()->first;
  return std::accumulate(e.begin(), e.end(), 0);
}

int MPoly::degree_in(std::size_t k) const {
  int d = terms_.empty() ? -1 : 0;
  for (const auto& [e, c] : terms_) d = std::max(d, e[k]);
  return d;
}

bool MPoly::depends_only_on(std::size_t k) const {
  for (const auto& [e, c] : terms_)
    for (std::size_t i = 0; i < e.size(); ++i)
      if (i != k && e[i] != 0) return false;
  return true;
}

Rat MPoly::coeff(const Exponents& e) const {
  const auto it = terms_.find(e);
  return it == terms_.end() ? Rat(0) : it->second;
}

Rat MPoly::constant_term() const { return coeff(Exponents(nvars(), 0)); }

void MPoly::add_term(const Exponents& e, const Rat& c) {
  if (c == 0) return;
  auto [it, inserted] = terms_.try_emplace(e, c);
  if (inserted) return;
  it->second += c;
  if (it->second == 0) terms_.erase(it);
}

Rat MPoly::eval(std::span<const Rat> point) const {
  if (point.size() != nvars()) throw usage_error("variable-mismatch", "evaluation point dimension");
  Rat acc = 0;
  Rat mono;
  for (const auto& [e, c] : terms_) {
    mono = c;
    for (std::size_t i = 0; i < e.size(); ++i)
      for (int k = 0; k < e[i]; ++k) mono *= point[i];
    acc += mono;
  }
  return acc;
}

Int MPoly::eval_int(std::span<const long> point) const {
  if (point.size() != nvars()) throw usage_error("variable-mismatch", "evaluation point dimension");
  Int acc = 0;
  Int mono;
  for (const auto& [e, c] : terms_) {
    if (c.get_den() != 1) throw usage_error("non-integer-coefficient", "eval_int on " + str());
    mono = c.get_num();
    for (std::size_t i = 0; i < e.size(); ++i)
      for (int k = 0; k < e[i]; ++k) mono *= point[i];
    acc += mono;
  }
  return acc;
}

Poly MPoly::specialize(std::size_t k, std::span<const Rat> point) const {
  std::vector<Rat> cs(static_cast<std::size_t>(std::max(degree_in(k), 0)) + 1);
  Rat mono;
  for (const auto& [e, c] : terms_) {
    mono = c;
    for (std::size_t i = 0; i < e.size(); ++i) {
      if (i == k) continue;
      for (int t = 0; t < e[i]; ++t) mono *= point[i];
    }
    cs[static_cast<std::size_t>(e[k])] += mono;
  }
  return Poly(vars_.at(k), std::move(cs));
}

Poly MPoly::to_univariate(std::size_t k) const {
  if (!depends_only_on(k))
    throw usage_error("not-univariate", str() + " involves variables other than " + vars_.at(k));
  std::vector<Rat> cs(static_cast<std::size_t>(std::max(degree_in(k), 0)) + 1);
  for (const auto& [e, c] : terms_) cs[static_cast<std::size_t>(e[k])] = c;
  return Poly(vars_.at(k), std::move(cs));
}

MPoly MPoly::from_univariate(const Poly& p, std::vector<std::string> vars, std::size_t k) {
  MPoly r(std::move(vars));
  for (int d = 0; d <= p.degree(); ++d) {
    Exponents e(r.nvars(), 0);
    e.at(k) = d;
    r.add_term(e, p.coeff(d));
  }
  return r;
}

MPoly MPoly::derivative(std::size_t k) const {
  MPoly r(vars_);
  for (const auto& [e, c] : terms_) {
    if (e[k] == 0) continue;
    Exponents f = e;
    --f[k];
    r.add_term(f, c * e[k]);
  }
  return r;
}

MPoly MPoly::theta(std::size_t k) const {
  MPoly r(vars_);
  for (const auto& [e, c] : terms_) r.add_term(e, c * e[k]);
  return r;
}

MPoly MPoly::operator-() const {
  MPoly r = *this;
  for (auto& [e, c] : r.terms_) c = -c;
  return r;
}

void MPoly::unify_vars(const MPoly& o) {
  if (vars_ == o.vars_) return;
  // Constants carry no variable information; adopt the other side's variables.
  if (is_constant()) {
    const Rat c = constant_term();
    vars_ = o.vars_;
    terms_.clear();
    add_term(Exponents(nvars(), 0), c);
    return;
  }
  if (o.is_constant()) return;
  throw usage_error("variable-mismatch", "polynomials over different variable lists");
}

MPoly& MPoly::operator+=(const MPoly& o) {
  unify_vars(o);
  if (o.vars_ != vars_) return *this += MPoly::constant(vars_, o.constant_term());
  for (const auto& [e, c] : o.terms_) add_term(e, c);
  return *this;
}

MPoly& MPoly::operator-=(const MPoly& o) { return *this += -o; }

MPoly& MPoly::operator*=(const MPoly& o) {
  unify_vars(o);
  if (o.vars_ != vars_) return *this *= o.constant_term();
  MPoly r(vars_);
  Exponents f(nvars());
  for (const auto& [ea, ca] : terms_) {
    for (const auto& [eb, cb] : o.terms_) {
      for (std::size_t i = 0; i < f.size(); ++i) f[i] = ea[i] + eb[i];
      r.add_term(f, ca * cb);
    }
  }
  terms_ = std::move(r.terms_);
  return *this;
}

MPoly& MPoly::operator*=(const Rat& c) {
  if (c == 0) {
    terms_.clear();
    return *this;
  }
  for (auto& [e, x] : terms_) x *= c;
  return *this;
}

MPoly MPoly::pow(unsigned e) const {
  MPoly r = MPoly::constant(vars_, 1);
  MPoly base = *this;
  while (e > 0) {
    if (e & 1u) r *= base;
    e >>= 1u;
    if (e > 0) base *= base;
  }
  return r;
}

std::string MPoly::str() const {
  if (terms_.empty()) return "0";
  std::string out;
  for (const auto& [e, c] : terms_) {
    const bool negative = c < 0;
    const Rat a = abs(c);
    if (out.empty())
      out += negative ? "-" : "";
    else
      out += negative ? " - " : " + ";
    std::string mono;
    for (std::size_t i = 0; i < e.size(); ++i) {
      if (e[i] == 0) continue;
      if (!mono.empty()) mono += "*";
      mono += vars_[i];
      if (e[i] > 1) mono += "^" + std::to_string(e[i]);
    }
    if (mono.empty())
      out += to_string(a);
    else if (a == 1)
      out += mono;
    else
      out += to_string(a) + "*" + mono;
  }
  return out;
}

}  // namespace purerec
