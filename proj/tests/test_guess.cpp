#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include <doctest.h>

#include <functional>
#include <random>

#include "purerec/corpus.hpp"
#include "purerec/error.hpp"
#include "purerec/expr.hpp"
#include "purerec/guess.hpp"
#include "purerec/lattice.hpp"
#include "purerec/series.hpp"

using namespace purerec;

namespace {

const StepSet king = StepSet::parse("[[1,0],[0,1],[1,1]]");

ValueTable<Rat> king_table(long side) { return to_rat(walk_dp(king, {side, side})); }

ValueTable<Rat> spec_table(const std::string& spec, Point box) { return mseries_from_spec(parse_hyperexp(spec), box); }

std::string code_of(const std::function<void()>& fn) {
  try {
    fn();
  } catch (const Error& e) {
    return e.code();
  }
  return "";
}

std::vector<Rat> to_rats(const std::vector<Int>& v) { return {v.begin(), v.end()}; }

}  // namespace

TEST_CASE("ansatz monomials") {
  const auto m = ansatz_monomials(2, 2);
  CHECK(m == std::vector<Exponents>{{0, 0}, {0, 1}, {1, 0}, {0, 2}, {1, 1}, {2, 0}});
  CHECK(ansatz_monomials(1, 3).size() == 4);
  CHECK(ansatz_monomials(3, 2).size() == 10);
  CHECK(ansatz_monomials(2, 0) == std::vector<Exponents>{{0, 0}});
}

TEST_CASE("binomial table: Pascal-type recurrences on both axes") {
  const auto t = spec_table("1/(1-x1-x2)", {20, 20});
  const auto r1 = guess_pure_rec(t, 0, 1, 1);
  REQUIRE(r1);
  CHECK(r1->str() == "n1*a(n1,n2) + (-n1 - n2)*a(n1-1,n2) = 0");
  const PureRec r2 = guess_search(t, 1, {});
  CHECK(r2.str() == "n2*a(n1,n2) + (-n1 - n2)*a(n1,n2-1) = 0");
}

TEST_CASE("exp(x1+x2): factorial recursion along axis 2") {
  const auto t = spec_table("exp(x1+x2)", {12, 12});
  const auto r = guess_pure_rec(t, 1, 1, 1);
  REQUIRE(r);
  CHECK(r->str() == "n2*a(n1,n2) - a(n1,n2-1) = 0");
}

TEST_CASE("King walks: no order-1 degree-1 recurrence") {
  CHECK_FALSE(guess_pure_rec(king_table(20), 0, 1, 1).has_value());
  CHECK_FALSE(guess_pure_rec(king_table(20), 1, 1, 1).has_value());
}

TEST_CASE("Delannoy table: order-2 recurrence") {
  const PureRec r = guess_search(king_table(30), 0, {4, 2, 16, ExecPolicy::Parallel});
  CHECK(r.order() == 2);
  CHECK(r.str() == "n1*a(n1,n2) + (-2*n2 - 1)*a(n1-1,n2) + (-n1 + 1)*a(n1-2,n2) = 0");
  CHECK(r.annihilates(king_table(70)));
}

TEST_CASE("negative cases") {
  std::mt19937_64 rng(4);
  ValueTable<Rat> noise(Point{20, 20});
  for (Rat& v : noise.values()) v = static_cast<long>(rng() % 1000);
  CHECK(code_of([&] { (void)guess_search(noise, 0, {1, 0, 16, ExecPolicy::Parallel}); }) ==
        "no-recurrence-found-within-bounds");
  CHECK(code_of([&] { (void)guess_pure_rec(king_table(3), 0, 2, 2); }) == "table-too-small");
  CHECK(code_of([&] { (void)guess_search(king_table(5), 0, {4, 2, 16, ExecPolicy::Parallel}); }) == "table-too-small");
  CHECK(code_of([&] { (void)guess_search(noise, 0, {0, 0, 16, ExecPolicy::Parallel}); }) == "bad-config");
  CHECK(code_of([&] { (void)guess_search(noise, 0, {1, 0, 7, ExecPolicy::Parallel}); }) == "bad-config");
  CHECK(code_of([&] { (void)guess_search(noise, 2, {}); }) == "bad-axis");
}

TEST_CASE("diagonal sequences") {
  const auto diag = to_rats(walk_diagonal(king, 30));
  const PureRec d = guess_diag_rec(diag, {4, 2, 16, ExecPolicy::Parallel});
  CHECK(d.str() == "n*a(n) + (-6*n + 3)*a(n-1) + (n - 1)*a(n-2) = 0");

  const std::vector<Rat> ones(40, 1);
  CHECK(guess_diag_rec(ones, {}).str() == "a(n) - a(n-1) = 0");

  std::vector<Rat> inv_fact{1};
  for (long n = 1; n < 40; ++n) inv_fact.push_back(inv_fact.back() / n);
  CHECK(guess_diag_rec(inv_fact, {}).str() == "n*a(n) - a(n-1) = 0");
  CHECK(code_of([&] { (void)guess_diag_rec(std::vector<Rat>(10, 1), {}); }) == "table-too-small");
}

TEST_CASE("property: determinism and policy independence") {
  const auto t = spec_table("(1 - x1 + 2*x2 - x1*x2)^(-1/3)", {16, 16});
  const GuessConfig par{4, 3, 16, ExecPolicy::Parallel}, ser{4, 3, 16, ExecPolicy::Serial};
  const PureRec a = guess_search(t, 0, par);
  CHECK(guess_search(t, 0, par) == a);
  CHECK(guess_search(t, 0, ser) == a);
}

TEST_CASE("property: scaling invariance") {
  std::mt19937_64 rng(31);
  const auto t = king_table(24);
  const PureRec base = guess_search(t, 1, {});
  for (int trial = 0; trial < 8; ++trial) {
    Rat k(static_cast<long>(rng() % 40) - 20, static_cast<long>(rng() % 9) + 1);
    if (k == 0) k = Rat(-7, 3);
    k.canonicalize();
    ValueTable<Rat> s = t;
    for (Rat& v : s.values()) v *= k;
    CHECK(guess_search(s, 1, {}) == base);
  }
}

TEST_CASE("property: returned recurrences hold on every usable point") {
  std::mt19937_64 rng(77);
  const std::vector<std::string> v = {"x1", "x2"};
  for (int trial = 0; trial < 6; ++trial) {
    MPoly p(v);
    for (const Exponents& e : {Exponents{1, 0}, Exponents{0, 1}, Exponents{1, 1}})
      p.add_term(e, static_cast<long>(rng() % 7) - 3);
    if (p.degree_in(0) <= 0 || p.degree_in(1) <= 0) continue;
    const HyperexpSpec s = trial % 2 ? HyperexpSpec{v, {{p + MPoly::constant(v, 1), Rat(-1, 3)}}, MPoly(v)}
                                     : HyperexpSpec{v, {}, p};
    const auto t = mseries_from_spec(s, {14, 14});
    for (std::size_t axis = 0; axis < 2; ++axis) {
      const PureRec r = guess_search(t, axis, {5, 3, 16, ExecPolicy::Parallel});
      INFO(s.str());
      CHECK(r.annihilates(t));
      CHECK_FALSE(r.coeffs.front().is_zero());
      CHECK_FALSE(r.coeffs.back().is_zero());
    }
  }
}

TEST_CASE("property: consistent with coefficient extraction") {
  for (CorpusClass cls : {CorpusClass::Pow, CorpusClass::Exp})
    for (const HyperexpSpec& s : random_corpus(1, cls, 5, 11)) {
      const auto coeffs = series_from_spec(s, 120).coeffs;
      ValueTable<Rat> t(Point{120});
      t.values() = coeffs;
      const RatFn ld = logderiv(s);
      const PureRec derived = ode_to_rec(ld.num(), ld.den());
      const PureRec guessed = guess_diag_rec(coeffs, {6, 3, 16, ExecPolicy::Parallel});
      INFO(s.str());
      CHECK(derived.annihilates(t));
      CHECK(guessed.annihilates(t));
      // the search is ordered by L + D and the derived shape (L, 1) lies in the envelope
      auto weight = [](const PureRec& r) {
        int deg = 0;
        for (const MPoly& c : r.coeffs) deg = std::max(deg, c.total_degree());
        return static_cast<int>(r.order()) + deg;
      };
      CHECK(weight(guessed) <= weight(derived));
    }
}
