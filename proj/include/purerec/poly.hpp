#pragma once

// Dense univariate polynomials over Q and reduced rational functions.

#include <string>
#include <utility>
#include <vector>

#include "purerec/arith.hpp"

namespace purerec {

class Poly {
 public:
  Poly() = default;
  explicit Poly(std::string var) : var_(std::move(var)) {}
  /// coeffs[k] is the coefficient of var^k; trailing zeros are trimmed.
  Poly(std::string var, std::vector<Rat> coeffs);

  static Poly constant(std::string var, const Rat& c);
  static Poly monomial(std::string var, const Rat& c, int degree);

  const std::string& var() const { return var_; }
  const std::vector<Rat>& coeffs() const { return coeffs_; }

  /// -1 for the zero polynomial.
  int degree() const { return static_cast<int>(coeffs_.size()) - 1; }
  bool is_zero() const { return coeffs_.empty(); }
  bool is_constant() const { return coeffs_.size() <= 1; }
  Rat coeff(int k) const;
  Rat lead() const { return is_zero() ? Rat(0) : coeffs_.back(); }

  Rat eval_at(const Rat& x) const;
  Poly derivative() const;
  /// Same polynomial with leading coefficient 1 (zero stays zero).
  Poly monic() const;

  Poly operator-() const;
  Poly& operator+=(const Poly& o);
  Poly& operator-=(const Poly& o);
  Poly& operator*=(const Poly& o);
  Poly& operator*=(const Rat& c);

  friend Poly operator+(Poly a, const Poly& b) { return a += b; }
  friend Poly operator-(Poly a, const Poly& b) { return a -= b; }
  friend Poly operator*(Poly a, const Poly& b) { return a *= b; }
  friend Poly operator*(Poly a, const Rat& c) { return a *= c; }
  friend Poly operator*(const Rat& c, Poly a) { return a *= c; }
  friend bool operator==(const Poly& a, const Poly& b) { return a.coeffs_ == b.coeffs_; }

  /// Canonical text: decreasing degree, explicit `*` and `^`, e.g.
  /// "3/2*x^2 - x + 1/3". The zero polynomial renders as "0".
  std::string str() const;

 private:
  void trim();
  void check_var(const Poly& o);

  std::string var_ = "x";
  std::vector<Rat> coeffs_;
};

/// Euclidean division; throws "division-by-zero" when b is zero.
std::pair<Poly, Poly> divmod(const Poly& a, const Poly& b);

/// Monic gcd (zero only when both inputs are zero).
Poly gcd(const Poly& a, const Poly& b);

/// num/den in lowest terms with a monic denominator.
class RatFn {
 public:
  RatFn(Poly num, Poly den);
  explicit RatFn(Poly num) : RatFn(num, Poly::constant(num.var(), 1)) {}

  const Poly& num() const { return num_; }
  const Poly& den() const { return den_; }

  friend RatFn operator+(const RatFn& a, const RatFn& b);
  friend RatFn operator*(const RatFn& a, const RatFn& b);
  /// Equality as rational functions (cross multiplication).
  friend bool operator==(const RatFn& a, const RatFn& b);

  std::string str() const;

 private:
  Poly num_;
  Poly den_;
};

}  // namespace purerec
