#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include <doctest.h>

#include <random>

#include "purerec/arith.hpp"
#include "purerec/error.hpp"
#include "purerec/expr.hpp"
#include "purerec/linalg.hpp"
#include "purerec/modular.hpp"
#include "purerec/mpoly.hpp"
#include "purerec/poly.hpp"

using namespace purerec;

namespace {

Rat random_rat(std::mt19937_64& rng, int span = 9) {
  const long num = static_cast<long>(rng() % (2 * span + 1)) - span;
  const long den = static_cast<long>(rng() % span) + 1;
  return rat_canon(num, den);
}

Poly x_poly(std::vector<Rat> cs) { return Poly("x", std::move(cs)); }

}  // namespace

TEST_CASE("rat_canon normalizes sign and common factors") {
  CHECK(rat_canon(4, -6) == Rat(-2, 3));
  CHECK(to_string(rat_canon(4, -6)) == "-2/3");
  const Rat z = rat_canon(0, 7);
  CHECK(z.get_num() == 0);
  CHECK(z.get_den() == 1);
  CHECK(to_string(rat_canon(21, 7)) == "3");
  CHECK_THROWS_WITH_AS(rat_canon(1, 0), "zero-denominator: rational with zero denominator", Error);
}

TEST_CASE("parse_rat and rational_power") {
  CHECK(parse_rat("-3/6") == Rat(-1, 2));
  CHECK(parse_rat("17") == 17);
  CHECK_THROWS_AS(parse_rat("1/"), Error);
  CHECK_THROWS_AS(parse_rat("1/0"), Error);
  CHECK(rational_power(Rat(8, 27), Rat(-1, 3)) == Rat(3, 2));
  CHECK(rational_power(Rat(-8), Rat(1, 3)) == -2);
  try {
    (void)rational_power(Rat(2), Rat(1, 3));
    FAIL("expected an error");
  } catch (const Error& e) {
    CHECK(e.code() == "non-rational-leading-value");
  }
}

TEST_CASE("digit_count") {
  CHECK(digit_count(Int(999)) == 3);
  CHECK(digit_count(Int(1000)) == 4);
  CHECK(digit_count(Int(-1000)) == 4);
  Int big;
  mpz_ui_pow_ui(big.get_mpz_t(), 10, 500);
  CHECK(digit_count(big) == 501);
  CHECK(digit_count(Int(big - 1)) == 500);
  CHECK_THROWS_AS(digit_count(Int(0)), Error);
}

TEST_CASE("univariate polynomial arithmetic") {
  const Poly a = x_poly({1, 1});
  const Poly b = x_poly({1, -1});
  CHECK(a * b == x_poly({1, 0, -1}));
  CHECK((a * b).str() == "-x^2 + 1");
  CHECK(x_poly({1, 0, 1}).eval_at(Rat(3, 2)) == Rat(13, 4));
  const Poly x = x_poly({0, 1});
  const Poly zero = x + (-x);
  CHECK(zero.is_zero());
  CHECK(zero.degree() == -1);
  CHECK(zero.str() == "0");
  CHECK(x_poly({Rat(1, 3), -1, Rat(3, 2)}).str() == "3/2*x^2 - x + 1/3");
  CHECK_THROWS_AS(Poly("x", {0, 1}) + Poly("y", {0, 1}), Error);
}

TEST_CASE("polynomial gcd and rational functions") {
  const Poly p = x_poly({-1, 0, 1});  // x^2 - 1
  const Poly q = x_poly({1, 1});      // x + 1
  CHECK(gcd(p, q) == q);
  const RatFn r(p, q * x_poly({2}));
  CHECK(r.num() == x_poly({Rat(-1, 2), Rat(1, 2)}));
  CHECK(r.den() == x_poly({1}));
  const RatFn s(x_poly({2}), x_poly({2, -2}));  // 2/(2-2x) = -1/(x-1)
  CHECK(s.den().lead() == 1);
  CHECK(s == RatFn(x_poly({1}), x_poly({1, -1})));
}

TEST_CASE("property: polynomial degree law") {
  std::mt19937_64 rng(7);
  for (int trial = 0; trial < 200; ++trial) {
    std::vector<Rat> a(rng() % 6 + 1), b(rng() % 6 + 1);
    for (Rat& c : a) c = random_rat(rng);
    for (Rat& c : b) c = random_rat(rng);
    a.back() = a.back() == 0 ? Rat(1) : a.back();
    b.back() = b.back() == 0 ? Rat(-2) : b.back();
    const Poly f = x_poly(a), g = x_poly(b);
    CHECK((f * g).degree() == f.degree() + g.degree());
  }
}

TEST_CASE("property: rational ring laws") {
  std::mt19937_64 rng(11);
  for (int trial = 0; trial < 500; ++trial) {
    const Rat a = random_rat(rng, 50), b = random_rat(rng, 50), c = random_rat(rng, 50);
    CHECK((a + b) + c == a + (b + c));
    CHECK((a * b) * c == a * (b * c));
    CHECK(a + b == b + a);
    CHECK(a * b == b * a);
    CHECK(a * (b + c) == a * b + a * c);
  }
}

TEST_CASE("multivariate polynomials") {
  const std::vector<std::string> v = {"n1", "n2"};
  const MPoly p = parse_mpoly("3*n1^2*n2 - n1 + 1/2", v);
  CHECK(p.str() == "3*n1^2*n2 - n1 + 1/2");
  CHECK(p.total_degree() == 3);
  const std::vector<Rat> pt = {2, 5};
  CHECK(p.eval(pt) == Rat(117, 2));
  const Poly s = p.specialize(0, pt);
  CHECK(s.var() == "n1");
  CHECK(s == Poly("n1", {Rat(1, 2), -1, 15}));
  CHECK(parse_mpoly("(n1 + n2)^2 - n1^2 - n2^2", v).str() == "2*n1*n2");
  CHECK((p - p).is_zero());
  CHECK(p.theta(0).str() == "6*n1^2*n2 - n1");
  CHECK_THROWS_AS(MPoly::variable({"x"}, 0) + MPoly::variable({"y"}, 0), Error);
}

TEST_CASE("canonical text round-trips through the parser") {
  std::mt19937_64 rng(3);
  const std::vector<std::string> v = {"x", "y", "z"};
  for (int trial = 0; trial < 100; ++trial) {
    MPoly p(v);
    for (int t = 0; t < 5; ++t) p.add_term({static_cast<int>(rng() % 3), static_cast<int>(rng() % 3), static_cast<int>(rng() % 2)}, random_rat(rng));
    const MPoly q = parse_mpoly(p.str(), v);
    CHECK(q == p);
    CHECK(q.str() == p.str());
  }
}

TEST_CASE("parse errors name the position") {
  try {
    (void)parse_hyperexp("(1-x^(-");
    FAIL("expected a parse error");
  } catch (const Error& e) {
    CHECK(e.code() == "parse-error");
    CHECK(std::string(e.what()).find("position 7") != std::string::npos);
  }
  CHECK_THROWS_AS(parse_mpoly("x + q", {"x"}), Error);
  CHECK_THROWS_AS(parse_mpoly("exp(x)", {"x"}), Error);
}

TEST_CASE("hyperexponential spec parsing") {
  const HyperexpSpec a = parse_hyperexp("(1-x)^(-1/3)");
  REQUIRE(a.factors.size() == 1);
  CHECK(a.factors[0].exponent == Rat(-1, 3));
  CHECK(a.factors[0].base.str() == "-x + 1");
  const HyperexpSpec b = parse_hyperexp("exp(x^2)");
  CHECK(b.factors.empty());
  CHECK(b.exp_part.str() == "x^2");
  const HyperexpSpec c = parse_hyperexp("1/(1 - x1 - x2 - x1*x2)");
  CHECK(c.vars == std::vector<std::string>{"x1", "x2"});
  CHECK(c.factors[0].exponent == -1);
  const HyperexpSpec d = parse_hyperexp("(1-x)^(-1)*exp(x)*(1-x)^(1/2)");
  REQUIRE(d.factors.size() == 1);
  CHECK(d.factors[0].exponent == Rat(-1, 2));
  CHECK(parse_hyperexp(d.str()).str() == d.str());
  CHECK_THROWS_AS(parse_hyperexp("x^(1/2)"), Error);  // base vanishes at the origin
  CHECK_THROWS_AS(parse_hyperexp("exp(x) + 1"), Error);
}

TEST_CASE("nullspace examples") {
  const RatMatrix rank1 = {{1, 1}, {2, 2}};
  const auto b1 = nullspace_exact(rank1);
  REQUIRE(b1.size() == 1);
  CHECK(b1[0] == RatVector{-1, 1});

  const RatMatrix id = {{1, 0}, {0, 1}};
  CHECK(nullspace_exact(id).empty());

  const RatMatrix row = {{2, 4, 6}};
  const auto b3 = nullspace_exact(row);
  REQUIRE(b3.size() == 2);
  for (const auto& v : b3) CHECK(2 * v[0] + 4 * v[1] + 6 * v[2] == 0);

  CHECK(nullspace_exact(RatMatrix{}).empty());
  CHECK(nullspace_exact(RatMatrix{}, 3).size() == 3);
}

TEST_CASE("property: modular and rational nullspace routes agree") {
  std::mt19937_64 rng(2024);
  for (int trial = 0; trial < 40; ++trial) {
    const std::size_t rows = rng() % 20 + 1, cols = rng() % 30 + 1;
    // low rank by construction: product of random factors
    const std::size_t inner = rng() % std::min<std::size_t>(rows, cols) + 1;
    RatMatrix left(rows, RatVector(inner)), right(inner, RatVector(cols));
    for (auto& r : left)
      for (auto& x : r) x = random_rat(rng);
    for (auto& r : right)
      for (auto& x : r) x = random_rat(rng);
    RatMatrix m(rows, RatVector(cols));
    for (std::size_t i = 0; i < rows; ++i)
      for (std::size_t j = 0; j < cols; ++j)
        for (std::size_t k = 0; k < inner; ++k) m[i][j] += left[i][k] * right[k][j];
    const auto fast = nullspace_exact(m, cols);
    const auto ref = nullspace_gauss(m, cols);
    CHECK(fast == ref);
    for (const auto& v : fast) CHECK(annihilates(m, v));
    CHECK(nullspace_exact(m, cols, ExecPolicy::Serial) == fast);
  }
}

TEST_CASE("modular kernels: serial and parallel elimination agree") {
  using namespace modular;
  std::mt19937_64 rng(5);
  const u64 p = prime(0);
  Matrix m(300, 40);
  for (std::size_t i = 0; i < m.rows; ++i)
    for (std::size_t j = 0; j < m.cols; ++j) m.row(i)[j] = (j % 7 == 3) ? m.row(i)[j - 1] : rng() % p;
  const Rref a = rref(m, p, ExecPolicy::Serial);
  const Rref b = rref(m, p, ExecPolicy::Parallel);
  CHECK(a.pivots == b.pivots);
  CHECK(a.reduced.data == b.reduced.data);
  CHECK(rank(m, p) == a.rank());
  CHECK(a.rank() < 40);
  CHECK(prime(1) < prime(0));
  Rat r;
  CHECK(rational_reconstruct(Int(reduce(Rat(-7, 11), p)), Int(static_cast<unsigned long>(p)), r));
  CHECK(r == Rat(-7, 11));
}
