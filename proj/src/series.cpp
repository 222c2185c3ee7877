#include "purerec/series.hpp"

#include <algorithm>

#include "purerec/error.hpp"

namespace purerec {

namespace {

struct Term {
  Point exps;
  Rat coeff;
};

bool dominated(const Point& m, const Point& n) {
  for (std::size_t j = 0; j < m.size(); ++j)
    if (m[j] > n[j]) return false;
  return true;
}

// Non-constant terms of p that fit inside the box.
std::vector<Term> box_terms(const MPoly& p, const Point& box) {
  std::vector<Term> out;
  for (const auto& [e, c] : p.terms()) {
    Point m(e.begin(), e.end());
    if (std::all_of(m.begin(), m.end(), [](long x) { return x == 0; })) continue;
    if (!dominated(m, box)) continue;
    out.push_back({std::move(m), c});
  }
  return out;
}

std::size_t first_nonzero(const Point& n) {
  for (std::size_t k = 0; k < n.size(); ++k)
    if (n[k] != 0) return k;
  return n.size();
}

// Truncated log of a polynomial with constant term 1: for every axis k the
// log-derivative D_k = theta_k P / P comes from series division, and
// log P [n] = D_k[n] / n_k for the first axis k with n_k > 0.
ValueTable<Rat> truncated_log(const MPoly& unit_base, const Point& box) {
  const std::vector<Term> terms = box_terms(unit_base, box);
  const std::size_t d = box.size();
  ValueTable<Rat> log_table(box);
  for (std::size_t k = 0; k < d; ++k) {
    ValueTable<Rat> dk(box);
    for (std::size_t i = 1; i < dk.size(); ++i) {
      const Point n = dk.point(i);
      Rat acc = 0;
      for (const Term& t : terms) {
        if (!dominated(t.exps, n)) continue;
        if (t.exps == n) acc += t.coeff * n[k];
        acc -= t.coeff * dk.values()[i - dk.index(t.exps)];
      }
      dk.values()[i] = std::move(acc);
    }
    for (std::size_t i = 1; i < dk.size(); ++i) {
      const Point n = log_table.point(i);
      if (first_nonzero(n) == k) log_table.values()[i] = dk.values()[i] / n[k];
    }
  }
  return log_table;
}

}  // namespace

namespace kernels {

void exp_fill(const std::vector<ValueTable<Rat>>& theta_g, ValueTable<Rat>& f, ExecPolicy policy) {
  const std::size_t d = f.dim();
  struct Entry {
    std::size_t index;
    Point m;
    const Rat* value;
  };
  std::vector<std::vector<Entry>> nonzero(d);
  for (std::size_t k = 0; k < d; ++k)
    for (std::size_t i = 1; i < theta_g[k].size(); ++i)
      if (theta_g[k].values()[i] != 0) nonzero[k].push_back({i, theta_g[k].point(i), &theta_g[k].values()[i]});

  std::fill(f.values().begin(), f.values().end(), Rat(0));
  f.values()[0] = 1;
  auto compute = [&](std::size_t i) {
    const Point n = f.point(i);
    const std::size_t k = first_nonzero(n);
    Rat acc = 0, prod;
    for (const Entry& e : nonzero[k]) {
      if (!dominated(e.m, n)) continue;
      const Rat& fv = f.values()[i - e.index];
      if (fv == 0) continue;
      mpq_mul(prod.get_mpq_t(), e.value->get_mpq_t(), fv.get_mpq_t());
      acc += prod;
    }
    acc /= n[k];
    f.values()[i] = std::move(acc);
  };

  if (policy == ExecPolicy::Serial) {
    for (std::size_t i = 1; i < f.size(); ++i) compute(i);
    return;
  }
  // Points of equal total degree depend only on lower degrees.
  long max_level = 0;
  for (long b : f.box()) max_level += b;
  std::vector<std::vector<std::size_t>> levels(static_cast<std::size_t>(max_level) + 1);
  for (std::size_t i = 1; i < f.size(); ++i) {
    const Point n = f.point(i);
    long s = 0;
    for (long x : n) s += x;
    levels[static_cast<std::size_t>(s)].push_back(i);
  }
  for (const auto& level : levels) {
    const auto count = static_cast<long>(level.size());
#pragma omp parallel for schedule(dynamic, 4)
    for (long t = 0; t < count; ++t) compute(level[static_cast<std::size_t>(t)]);
  }
}

}  // namespace kernels

ValueTable<Rat> mseries_from_spec(const HyperexpSpec& spec, const Point& box, ExecPolicy policy) {
  spec.validate();
  const std::size_t d = spec.dim();
  if (box.size() != d) throw usage_error("bad-box", "box dimension differs from the spec's");
  for (long b : box)
    if (b < 0) throw usage_error("bad-box", "negative box bound");

  Rat lead = 1;
  ValueTable<Rat> g(box);
  for (const auto& f : spec.factors) {
    const Rat c = f.base.constant_term();
    lead *= rational_power(c, f.exponent);
    if (f.base.is_constant()) continue;
    const ValueTable<Rat> lg = truncated_log(f.base * (1 / c), box);
    for (std::size_t i = 0; i < g.size(); ++i)
      if (lg.values()[i] != 0) g.values()[i] += f.exponent * lg.values()[i];
  }
  if (!spec.exp_part.is_zero()) {
    if (spec.exp_part.constant_term() != 0)
      throw usage_error("non-rational-leading-value", "exp of a nonzero constant is irrational");
    for (const Term& t : box_terms(spec.exp_part, box)) g.at(t.exps) += t.coeff;
  }

  std::vector<ValueTable<Rat>> theta_g(d, ValueTable<Rat>(box));
  for (std::size_t i = 1; i < g.size(); ++i) {
    if (g.values()[i] == 0) continue;
    const Point m = g.point(i);
    for (std::size_t k = 0; k < d; ++k)
      if (m[k] != 0) theta_g[k].values()[i] = g.values()[i] * m[k];
  }

  ValueTable<Rat> f(box);
  kernels::exp_fill(theta_g, f, policy);
  if (lead != 1)
    for (Rat& v : f.values()) v *= lead;
  return f;
}

SeriesTrunc series_from_spec(const HyperexpSpec& spec, int order, ExecPolicy policy) {
  if (spec.dim() != 1) throw usage_error("bad-spec", "series_from_spec needs a univariate spec");
  if (order < 0) throw usage_error("bad-order", "negative truncation order");
  ValueTable<Rat> t = mseries_from_spec(spec, Point{order}, policy);
  return SeriesTrunc{spec.vars[0], std::move(t.values())};
}

bool check_algebraic(const SeriesTrunc& series, const Poly& base, int q) {
  if (q < 1) throw usage_error("bad-exponent", "q must be positive");
  const int n = series.order();
  if (n < 0) return true;
  auto truncate = [n](std::vector<Rat> v) {
    if (v.size() > static_cast<std::size_t>(n) + 1) v.resize(static_cast<std::size_t>(n) + 1);
    return v;
  };
  const Poly s(series.var, series.coeffs);
  Poly acc = Poly::constant(series.var, 1);
  for (int i = 0; i < q; ++i) acc = Poly(series.var, truncate((acc * s).coeffs()));
  const Poly prod(series.var, truncate((acc * base).coeffs()));
  return prod == Poly::constant(series.var, 1);
}

}  // namespace purerec
