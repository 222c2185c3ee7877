#pragma once

// Sparse multivariate polynomials over Q.

#include <map>
#include <span>
#include <string>
#include <vector>

#include "purerec/arith.hpp"
#include "purerec/poly.hpp"

namespace purerec {

using Exponents = std::vector<int>;

/// Canonical term order: higher total degree first, ties broken by
/// lexicographically larger exponent vector first.
struct TermOrder {
  bool operator()(const Exponents& a, const Exponents& b) const;
};

class MPoly {
 public:
  using Terms = std::map<Exponents, Rat, TermOrder>;

  MPoly() = default;
  explicit MPoly(std::vector<std::string> vars) : vars_(std::move(vars)) {}

  static MPoly constant(std::vector<std::string> vars, const Rat& c);
  static MPoly variable(std::vector<std::string> vars, std::size_t k);
  static MPoly monomial(std::vector<std::string> vars, Exponents exps, const Rat& c);

  const std::vector<std::string>& vars() const { return vars_; }
  std::size_t nvars() const { return vars_.size(); }
  const Terms& terms() const { return terms_; }

  bool is_zero() const { return terms_.empty(); }
  bool is_constant() const;
  /// -1 for zero.
  int total_degree() const;
  int degree_in(std::size_t k) const;
  bool depends_only_on(std::size_t k) const;

  Rat coeff(const Exponents& e) const;
  Rat constant_term() const;
  /// Adds c * x^e, dropping the term if it cancels.
  void add_term(const Exponents& e, const Rat& c);

  Rat eval(std::span<const Rat> point) const;
  /// Integer-point evaluation of an integer-coefficient polynomial.
  Int eval_int(std::span<const long> point) const;

  /// Univariate polynomial in vars[k] obtained by substituting point[i]
  /// for every other variable (point[k] is ignored).
  Poly specialize(std::size_t k, std::span<const Rat> point) const;
  /// Converts a polynomial in vars[k] alone; throws if other variables occur.
  Poly to_univariate(std::size_t k) const;
  static MPoly from_univariate(const Poly& p, std::vector<std::string> vars, std::size_t k);

  MPoly derivative(std::size_t k) const;
  /// Euler operator x_k d/dx_k.
  MPoly theta(std::size_t k) const;

  MPoly operator-() const;
  MPoly& operator+=(const MPoly& o);
  MPoly& operator-=(const MPoly& o);
  MPoly& operator*=(const MPoly& o);
  MPoly& operator*=(const Rat& c);

  friend MPoly operator+(MPoly a, const MPoly& b) { return a += b; }
  friend MPoly operator-(MPoly a, const MPoly& b) { return a -= b; }
  friend MPoly operator*(MPoly a, const MPoly& b) { return a *= b; }
  friend MPoly operator*(MPoly a, const Rat& c) { return a *= c; }
  friend MPoly operator*(const Rat& c, MPoly a) { return a *= c; }
  friend bool operator==(const MPoly& a, const MPoly& b) { return a.terms_ == b.terms_; }

  MPoly pow(unsigned e) const;

  /// Canonical text in term order, e.g. "3*n1^2*n2 - n1 + 1/2".
  std::string str() const;

 private:
  void unify_vars(const MPoly& o);

  std::vector<std::string> vars_;
  Terms terms_;
};

}  // namespace purerec
