#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include <doctest.h>

#include <random>

#include "purerec/corpus.hpp"
#include "purerec/error.hpp"
#include "purerec/expr.hpp"
#include "purerec/recurrence.hpp"
#include "purerec/series.hpp"

using namespace purerec;

namespace {

Poly px(std::vector<Rat> c) { return Poly("x", std::move(c)); }

PureRec rec_of(const std::string& spec) {
  const RatFn ld = logderiv(parse_hyperexp(spec));
  return ode_to_rec(ld.num(), ld.den());
}

PureRec uni(std::vector<std::string> coeffs) {
  PureRec r;
  for (const auto& c : coeffs) r.coeffs.push_back(parse_mpoly(c, {"n"}));
  return r;
}

ValueTable<Rat> as_table(const std::vector<Rat>& v) {
  ValueTable<Rat> t(Point{static_cast<long>(v.size()) - 1});
  t.values() = v;
  return t;
}

}  // namespace

TEST_CASE("logderiv examples") {
  CHECK(logderiv(parse_hyperexp("exp(x^3)")) == RatFn(px({0, 0, 3})));
  CHECK(logderiv(parse_hyperexp("(1-x)^(-1/3)")) == RatFn(px({Rat(1, 3)}), px({1, -1})));
  CHECK(logderiv(parse_hyperexp("(1-x)^(-1)*exp(x)")) == RatFn(px({2, -1}), px({1, -1})));
}

TEST_CASE("ode_to_rec examples") {
  CHECK(ode_to_rec(px({1}), px({1})).str() == "n*a(n) - a(n-1) = 0");
  CHECK(ode_to_rec(px({Rat(1, 3)}), px({1, -1})).str() == "3*n*a(n) + (-3*n + 2)*a(n-1) = 0");
  const PureRec degenerate = ode_to_rec(Poly("x"), px({1}));
  CHECK(degenerate.order() == 1);
  CHECK(degenerate.str() == "n*a(n) = 0");
  try {
    (void)ode_to_rec(px({1}), px({0, 1}));
    FAIL("expected an error");
  } catch (const Error& e) {
    CHECK(e.code() == "singular-at-origin");
  }
  CHECK(rec_of("exp(x^2)").str() == "n*a(n) - 2*a(n-2) = 0");
}

TEST_CASE("(1-x)^(-1/3) recurrence against the binomial series") {
  const PureRec r = rec_of("(1-x)^(-1/3)");
  CHECK(r.annihilates(as_table(series_from_spec(parse_hyperexp("(1-x)^(-1/3)"), 50).coeffs)));
}

TEST_CASE("safe_start examples") {
  CHECK(safe_start(uni({"n", "-1"})).n0 == 0);
  CHECK(safe_start(uni({"n - 5", "1"})).n0 == 5);
  CHECK(safe_start(uni({"n^2 + 1", "1"})).n0 == 0);
  CHECK(safe_start(uni({"(n - 3)*(n - 17)*(2*n + 1)", "1"})).n0 == 17);
  CHECK(safe_start(uni({"3000000*n - 3000000*7", "1"})).n0 == 7);
  try {
    PureRec z = uni({"0", "1"});
    (void)safe_start(z);
    FAIL("expected an error");
  } catch (const Error& e) {
    CHECK(e.code() == "degenerate-leading-coefficient");
  }
}

TEST_CASE("largest_integer_root: all three search routes") {
  // small Cauchy bound: direct scan
  CHECK(largest_integer_root(Poly("n", {-12, 7, -1}), 1000) == 4);  // -(n-3)(n-4)
  // huge coefficients, small trailing term: divisors
  CHECK(largest_integer_root(Poly("n", {Rat(-6), Rat(Int("100000000000000")) , Rat(1)}), 1000) == -1);
  CHECK(largest_integer_root(Poly("n", {Rat(-2000000000L), Rat(1)}) * Poly("n", {-9, 1}), 1000) == 2000000000L);
  // beyond the divisor limit only the scan bound is searched
  CHECK(largest_integer_root(Poly("n", {Rat(-2000000000000L), Rat(1)}) * Poly("n", {-9, 1}), 1000) == 9);
  // huge trailing term: bounded scan
  const Poly big = Poly("n", {Rat(Int("-1000000000000000000000")), 0, 1}) * Poly("n", {-11, 1});
  CHECK(largest_integer_root(big, 100) == 11);
  CHECK(largest_integer_root(Poly("n", {0, 1}), 10) == 0);
  CHECK(largest_integer_root(Poly("n", {1, 1}), 10) == -1);
}

TEST_CASE("rendering and rational form") {
  const PureRec r = uni({"n", "-(2*n - 1)", "n - 1"});
  CHECK(r.str() == "n*a(n) + (-2*n + 1)*a(n-1) + (n - 1)*a(n-2) = 0");
  const auto f = r.rational_form();
  REQUIRE(f.size() == 2);
  CHECK(f[0] == RatFn(Poly("n", {-1, 2}), Poly("n", {0, 1})));
  CHECK(PureRec::from_rational_form(f) == r.normalized());
  PureRec scaled = r;
  for (MPoly& c : scaled.coeffs) c *= Rat(-6, 5);
  CHECK(scaled.normalized() == r);
}

TEST_CASE("property: ode_to_rec soundness and order bound on random specs") {
  std::mt19937_64 rng(123);
  const std::vector<std::string> v = {"x"};
  auto small = [&](long span) { return static_cast<long>(rng() % (2 * span + 1)) - span; };
  for (int trial = 0; trial < 40; ++trial) {
    HyperexpSpec s{v, {}, MPoly(v)};
    const int factors = static_cast<int>(rng() % 3);
    for (int f = 0; f < factors; ++f) {
      MPoly base = MPoly::constant(v, 1);
      base.add_term({1}, small(3));
      base.add_term({2}, small(2));
      const Rat alpha = rat_canon(small(3), static_cast<long>(rng() % 3) + 1);
      s = s * HyperexpSpec{v, {{base, alpha}}, MPoly(v)};
    }
    s.exp_part.add_term({1}, small(2));
    s.exp_part.add_term({3}, small(1));
    const RatFn ld = logderiv(s);
    if (ld.num().is_zero()) continue;
    const PureRec r = ode_to_rec(ld.num(), ld.den());
    INFO(s.str());
    CHECK(static_cast<int>(r.order()) <= std::max(ld.den().degree(), ld.num().degree() + 1));
    for (const MPoly& c : r.coeffs) CHECK(c.total_degree() <= 1);
    CHECK(r.annihilates(as_table(series_from_spec(s, 120).coeffs)));
  }
}

TEST_CASE("property: log-derivatives add over products") {
  std::mt19937_64 rng(8);
  const std::vector<std::string> v = {"x"};
  auto small = [&](long span) { return static_cast<long>(rng() % (2 * span + 1)) - span; };
  auto random_spec = [&] {
    MPoly base = MPoly::constant(v, 1);
    base.add_term({1}, small(4));
    base.add_term({3}, small(4));
    MPoly e(v);
    e.add_term({2}, small(4));
    return HyperexpSpec{v, {{base, rat_canon(small(4), static_cast<long>(rng() % 4) + 1)}}, e};
  };
  for (int trial = 0; trial < 40; ++trial) {
    const HyperexpSpec s = random_spec(), t = random_spec();
    CHECK(logderiv(s * t) == logderiv(s) + logderiv(t));
  }
}

TEST_CASE("univariate corpus: 300 coefficients per case") {
  for (CorpusClass cls : {CorpusClass::Pow, CorpusClass::Exp})
    for (const HyperexpSpec& s : random_corpus(1, cls, 5, 7)) {
      const CaseResult r = run_uni_case(s, 300);
      INFO(r.spec);
      CHECK(r.error.empty());
      CHECK(r.ok);
    }
}
