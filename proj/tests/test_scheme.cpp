#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include <doctest.h>

#include <functional>

#include "purerec/error.hpp"
#include "purerec/expr.hpp"
#include "purerec/guess.hpp"
#include "purerec/lattice.hpp"
#include "purerec/scheme.hpp"
#include "purerec/series.hpp"

using namespace purerec;

namespace {

const StepSet king = StepSet::parse("[[1,0],[0,1],[1,1]]");

TableOracle walk_oracle(const StepSet& st) {
  return [st](const Point& box) { return to_rat(walk_dp(st, box)); };
}

TableOracle spec_oracle(const std::string& text) {
  const HyperexpSpec s = parse_hyperexp(text);
  return [s](const Point& box) { return mseries_from_spec(s, box); };
}

PureRec rec(std::size_t axis, const std::vector<std::string>& vars, const std::vector<std::string>& coeffs) {
  PureRec r;
  r.axis = axis;
  for (const auto& c : coeffs) r.coeffs.push_back(parse_mpoly(c, vars));
  return r;
}

const std::vector<std::string> v2 = {"n1", "n2"};

Scheme king_scheme() {
  return build_scheme({rec(0, v2, {"n1", "-2*n2 - 1", "1 - n1"}), rec(1, v2, {"n2", "-2*n1 - 1", "1 - n2"})},
                      walk_oracle(king));
}

std::string code_of(const std::function<void()>& fn) {
  try {
    fn();
  } catch (const Error& e) {
    return e.code();
  }
  return "";
}

}  // namespace

TEST_CASE("King scheme: construction and small targets") {
  const Scheme s = king_scheme();
  CHECK(s.guards == std::vector<long>{2, 2});
  CHECK(s.init.box() == Point{4, 4});
  const auto dp = walk_dp(king, {40, 40});
  CHECK(s.init == to_rat(dp).restrict({4, 4}));
  CHECK(eval_point(s, {1, 1}) == 3);
  CHECK(eval_point(s, {20, 40}) == Rat(dp.at(Point{20, 40})));
  for (long a = 0; a <= 40; a += 3)
    for (long b = 0; b <= 40; b += 7) CHECK(eval_point(s, {a, b}) == Rat(dp.at(Point{a, b})));
}

TEST_CASE("guessed recurrences feed the scheme") {
  const auto t = to_rat(walk_dp(king, {30, 30}));
  const Scheme s = build_scheme({guess_search(t, 0, {}), guess_search(t, 1, {})}, walk_oracle(king));
  CHECK(s == king_scheme());
}

TEST_CASE("univariate scheme for exp(x)") {
  const std::vector<std::string> v = {"n"};
  const Scheme s = build_scheme({rec(0, v, {"n", "-1"})}, spec_oracle("exp(x)"), {0, {Provenance::Derived}});
  CHECK(s.guards == std::vector<long>{0});
  CHECK(s.init.at(Point{0}) == 1);
  CHECK(eval_point(s, {10}) == Rat(1, 3628800));
}

TEST_CASE("corrupted recurrence is rejected") {
  CHECK(code_of([] {
          (void)build_scheme({rec(0, v2, {"n1", "-2*n2 - 1", "1 - n1"}), rec(1, v2, {"n2", "-2*n1 - 1", "2 - n2"})},
                             walk_oracle(king));
        }) == "recurrence-inconsistent-with-oracle");
  CHECK(code_of([] { (void)build_scheme({rec(0, v2, {"n1", "-1"})}, walk_oracle(king)); }) == "bad-scheme");
}

TEST_CASE("diagonal evaluation") {
  const std::vector<std::string> v = {"n"};
  const PureRec d = rec(0, v, {"n", "-6*n + 3", "n - 1"});
  CHECK(eval_diag(d, {1, 3}, 5) == 1683);
  const auto diag = walk_diagonal(king, 31);
  CHECK(eval_diag(d, {1, 3}, 30) == Rat(diag[30]));
  CHECK(eval_diag(rec(0, v, {"1", "-1"}), {1}, 1000000) == 1);
  EvalStats st;
  (void)eval_diag(d, {1, 3}, 1000, &st);
  CHECK(st.max_window == 3);
  CHECK(st.steps == 999);
  CHECK(code_of([&] { (void)eval_diag(rec(0, v, {"n - 5", "-1"}), {1}, 10); }) == "unexpected-singularity");
  CHECK(code_of([&] { (void)eval_diag(d, {1}, 10); }) == "too-few-initials");
}

TEST_CASE("property: window and retained values do not grow with the target") {
  const Scheme s = king_scheme();
  EvalStats small, large;
  (void)eval_point(s, {100, 200}, &small);
  (void)eval_point(s, {3000, 6000}, &large);
  CHECK(small.max_window == 3);
  CHECK(large.max_window == 3);
  CHECK(large.peak_retained == small.peak_retained);
  CHECK(large.peak_retained <= 6);
}

TEST_CASE("property: linear number of steps") {
  const Scheme s = king_scheme();
  std::vector<std::size_t> steps;
  for (long T : {250, 500, 1000, 2000}) {
    EvalStats st;
    (void)eval_point(s, {T, 2 * T}, &st);
    steps.push_back(st.steps);
  }
  for (std::size_t i = 1; i < steps.size(); ++i) CHECK(steps[i] <= 2.5 * steps[i - 1] + 16);
}

TEST_CASE("property: axis orders agree") {
  const Scheme s = king_scheme();
  for (const Point& p : {Point{37, 11}, Point{5, 90}, Point{64, 64}})
    CHECK(eval_point_ordered(s, p, {0, 1}) == eval_point_ordered(s, p, {1, 0}));

  const HyperexpSpec spec = parse_hyperexp("(1 + 2*x1 - x2 + 3*x3)^(-1/3)");
  const auto t = mseries_from_spec(spec, {6, 6, 6});
  std::vector<PureRec> recs;
  for (std::size_t j = 0; j < 3; ++j) recs.push_back(guess_search(t, j, {}));
  const Scheme s3 = build_scheme(recs, [&](const Point& box) { return mseries_from_spec(spec, box); });
  const auto oracle = mseries_from_spec(spec, {14, 14, 14});
  std::vector<std::size_t> order = {0, 1, 2};
  do {
    EvalStats st;
    CHECK(eval_point_ordered(s3, {14, 9, 13}, order, &st) == oracle.at(Point{14, 9, 13}));
    CHECK(st.max_window == 2);
    CHECK(st.memo_entries > 0);
  } while (std::next_permutation(order.begin(), order.end()));
  for (std::size_t i = 0; i < oracle.size(); i += 5) CHECK(eval_point(s3, oracle.point(i)) == oracle.values()[i]);
}

TEST_CASE("singular points: rerouting and deterministic FAIL") {
  // binomial recurrences multiplied by factors vanishing along n1 = n2 + 3 and n2 = n1 + 3
  const Scheme s = build_scheme({rec(0, v2, {"(n1 - n2 - 3)*n1", "-(n1 - n2 - 3)*(n1 + n2)"}),
                                 rec(1, v2, {"(n2 - n1 - 3)*n2", "-(n2 - n1 - 3)*(n1 + n2)"})},
                                spec_oracle("1/(1-x1-x2)"));
  const auto oracle = mseries_from_spec(parse_hyperexp("1/(1-x1-x2)"), {40, 40});
  std::size_t fails = 0, rerouted = 0;
  for (std::size_t i = 0; i < oracle.size(); ++i) {
    const Point p = oracle.point(i);
    EvalStats st;
    try {
      const Rat v = eval_point(s, p, &st);
      CHECK(v == oracle.values()[i]);
      if (st.reroutes > 0) ++rerouted;
    } catch (const Error& e) {
      CHECK(e.code() == "FAIL");
      CHECK(e.kind() == ErrorKind::Singular);
      CHECK(code_of([&] { (void)eval_point(s, p); }) == "FAIL");
      ++fails;
    }
  }
  CHECK(fails > 0);
  CHECK(rerouted > 0);
  CHECK(code_of([&] { (void)eval_point_ordered(s, {20, 17}, {0, 1}); }) == "singular-point");
}

TEST_CASE("scheme files round-trip byte for byte") {
  const Scheme k = king_scheme();
  const std::string text = write_scheme(k);
  CHECK(text.rfind("scheme\ndimension 2\naxis 1 guessed\norder 2\nguard 2\nc0 n1\n", 0) == 0);
  const Scheme back = read_scheme(text);
  CHECK(back == k);
  CHECK(write_scheme(back) == text);

  const std::vector<std::string> v = {"n"};
  const Scheme u = build_scheme({rec(0, v, {"3*n", "-3*n + 2"})}, spec_oracle("(1-x)^(-1/3)"), {2, {Provenance::Derived}});
  const std::string ut = write_scheme(u);
  CHECK(write_scheme(read_scheme(ut)) == ut);
  CHECK(ut.find("axis 1 derived") != std::string::npos);
  CHECK(ut.find("1/3") != std::string::npos);

  CHECK(code_of([&] { (void)read_scheme(text.substr(0, text.size() - 4)); }) == "bad-scheme-file");
  std::string bad = text;
  bad.replace(bad.find("guessed"), 7, "invented");
  CHECK(code_of([&] { (void)read_scheme(bad); }) == "bad-scheme-file");
}
