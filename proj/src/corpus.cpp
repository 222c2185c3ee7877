#include "purerec/corpus.hpp"

#include <random>

#include "purerec/error.hpp"
#include "purerec/recurrence.hpp"
#include "purerec/series.hpp"

namespace purerec {

std::string to_string(CorpusClass c) { return c == CorpusClass::Pow ? "pow" : "exp"; }

namespace {

long draw(std::mt19937_64& rng) { return static_cast<long>(rng() % 11) - 5; }

std::vector<std::string> corpus_vars(std::size_t dim) {
  if (dim == 1) return {"x"};
  std::vector<std::string> v;
  for (std::size_t k = 1; k <= dim; ++k) v.push_back("x" + std::to_string(k));
  return v;
}

MPoly random_poly(std::mt19937_64& rng, std::size_t dim) {
  const auto vars = corpus_vars(dim);
  for (;;) {
    MPoly p(vars);
    if (dim == 1) {
      const int deg = static_cast<int>(rng() % 4) + 1;
      for (int k = 1; k < deg; ++k) p.add_term({k}, draw(rng));
      long top = 0;
      while (top == 0) top = draw(rng);
      p.add_term({deg}, top);
      return p;
    }
    if (dim == 2) {
      for (const Exponents& e : {Exponents{1, 0}, Exponents{0, 1}, Exponents{2, 0}, Exponents{1, 1}, Exponents{0, 2}})
        p.add_term(e, draw(rng));
    } else {
      for (std::size_t k = 0; k < dim; ++k) {
        Exponents e(dim, 0);
        e[k] = 1;
        p.add_term(e, draw(rng));
      }
    }
    bool all = true;
    for (std::size_t k = 0; k < dim; ++k) all = all && p.degree_in(k) > 0;
    if (all) return p;
  }
}

std::string join_points(const std::vector<Point>& pts) {
  std::string out;
  for (const Point& p : pts) {
    out += out.empty() ? "(" : ", (";
    for (std::size_t k = 0; k < p.size(); ++k) out += (k ? "," : "") + std::to_string(p[k]);
    out += ")";
  }
  return out;
}

}  // namespace

std::vector<HyperexpSpec> random_corpus(std::size_t dim, CorpusClass cls, std::size_t count, std::uint64_t seed) {
  if (dim < 1 || dim > 3) throw usage_error("bad-dimension", "corpus dimension must be 1, 2 or 3");
  // one stream per (dim, class) so that the classes do not shift each other
  std::mt19937_64 rng(seed * 6 + (dim - 1) * 2 + (cls == CorpusClass::Exp ? 1 : 0));
  std::vector<HyperexpSpec> out;
  for (std::size_t i = 0; i < count; ++i) {
    const MPoly p = random_poly(rng, dim);
    HyperexpSpec s;
    s.vars = p.vars();
    if (cls == CorpusClass::Pow) {
      s.factors.push_back({p + MPoly::constant(p.vars(), 1), Rat(-1, 3)});
      s.exp_part = MPoly(p.vars());
    } else {
      s.exp_part = p;
    }
    out.push_back(std::move(s));
  }
  return out;
}

CaseResult run_uni_case(const HyperexpSpec& spec, long terms) {
  CaseResult r;
  r.spec = spec.str();
  try {
    if (terms < 2) throw usage_error("bad-config", "need at least 2 terms");
    const SeriesTrunc series = series_from_spec(spec, static_cast<int>(terms - 1));
    const RatFn ld = logderiv(spec);
    const PureRec rec = ode_to_rec(ld.num(), ld.den());
    const long n0 = safe_start(rec).n0;
    ValueTable<Rat> t(Point{terms - 1});
    t.values() = series.coeffs;
    const bool annihilates = rec.annihilates(t);
    r.lines.push_back("R'/R = " + ld.str());
    r.lines.push_back("recurrence: " + rec.str() + " (safe start " + std::to_string(n0) + ")");

    const std::size_t m = std::max<std::size_t>(rec.order(), static_cast<std::size_t>(n0) + 1);
    const std::vector<Rat> initials(series.coeffs.begin(), series.coeffs.begin() + static_cast<long>(m));
    bool window_ok = true;
    for (long n : {terms / 2, terms - 1})
      window_ok = window_ok && eval_diag(rec, initials, n) == series.coeffs[static_cast<std::size_t>(n)];
    r.points = static_cast<std::size_t>(terms);
    r.ok = annihilates && window_ok;
    r.lines.push_back(std::to_string(terms) + " coefficients: residuals " + (annihilates ? "all zero" : "NONZERO") +
                      ", window evaluation " + (window_ok ? "agrees" : "DISAGREES"));
  } catch (const Error& e) {
    r.error = e.what();
  }
  return r;
}

CaseResult run_multi_case(const HyperexpSpec& spec, const MultiCaseOptions& opts) {
  CaseResult r;
  r.spec = spec.str();
  try {
    const std::size_t d = spec.dim();
    auto cube = [d](long side) { return Point(d, side); };
    const TableOracle oracle = [&](const Point& box) { return mseries_from_spec(spec, box, opts.guess.policy); };

    std::vector<PureRec> recs;
    long side = opts.fit_start;
    for (;; side *= 2) {
      try {
        const ValueTable<Rat> t = oracle(cube(side));
        recs.clear();
        for (std::size_t j = 0; j < d; ++j) recs.push_back(guess_search(t, j, opts.guess));
        break;
      } catch (const Error& e) {
        if (e.code() != "table-too-small" || side * 2 > opts.fit_cap) throw;
      }
    }
    for (const PureRec& rec : recs) {
      int deg = 0;
      for (const MPoly& c : rec.coeffs) deg = std::max(deg, c.total_degree());
      r.lines.push_back("axis " + std::to_string(rec.axis + 1) + " (order " + std::to_string(rec.order()) + ", degree " +
                        std::to_string(deg) + "): " + rec.str());
    }

    const long big_side = std::max(side + opts.beyond, opts.eval_side);
    const ValueTable<Rat> big = oracle(cube(big_side));
    bool beyond_ok = true;
    for (const PureRec& rec : recs) beyond_ok = beyond_ok && rec.annihilates(big);
    r.lines.push_back("fitted on [0," + std::to_string(side) + "]^" + std::to_string(d) + ", re-verified on [0," +
                      std::to_string(big_side) + "]^" + std::to_string(d) + ": " + (beyond_ok ? "ok" : "RESIDUAL"));

    SchemeOptions so;
    so.guard_pad = opts.guard_pad;
    const Scheme s = build_scheme(recs, oracle, so);
    std::string guards;
    for (long g : s.guards) guards += (guards.empty() ? "" : ",") + std::to_string(g);
    r.lines.push_back("scheme guards (" + guards + ")");

    std::size_t mismatches = 0;
    std::vector<Point> failed;
    const ValueTable<Rat> ev = big.restrict(cube(opts.eval_side));
    for (std::size_t i = 0; i < ev.size(); ++i) {
      const Point p = ev.point(i);
      try {
        if (eval_point(s, p) != ev.values()[i]) ++mismatches;
        ++r.points;
      } catch (const Error& e) {
        if (e.code() != "FAIL") throw;
        ++r.fails;
        if (failed.size() < 4) failed.push_back(p);
      }
    }
    std::string line = "eval on [0," + std::to_string(opts.eval_side) + "]^" + std::to_string(d) + ": " +
                       std::to_string(r.points) + " points " + (mismatches ? "DISAGREE" : "agree") + ", " +
                       std::to_string(r.fails) + " FAIL";
    if (!failed.empty()) line += " (first: " + join_points(failed) + ")";
    r.lines.push_back(line);
    r.ok = beyond_ok && mismatches == 0;
  } catch (const Error& e) {
    r.error = e.what();
  }
  return r;
}

std::vector<CaseResult> run_selftest(const SelftestOptions& opts) {
  std::vector<CaseResult> out;
  for (std::size_t dim = 1; dim <= 3; ++dim) {
    const std::size_t count = dim == 3 ? 3 : 5;
    for (CorpusClass cls : {CorpusClass::Pow, CorpusClass::Exp}) {
      const auto corpus = random_corpus(dim, cls, count, opts.seed);
      for (std::size_t i = 0; i < corpus.size(); ++i) {
        CaseResult r;
        if (dim == 1) {
          r = run_uni_case(corpus[i], opts.quick ? 60 : 300);
        } else {
          MultiCaseOptions mo;
          if (dim == 3) {
            mo.fit_start = 6;
            mo.beyond = 6;
            mo.eval_side = 12;
          }
          if (opts.quick) {
            mo.beyond = 4;
            mo.eval_side = dim == 2 ? 20 : 8;
          }
          r = run_multi_case(corpus[i], mo);
        }
        r.label = std::string(dim == 1 ? "uni" : dim == 2 ? "bi" : "tri") + "-" + to_string(cls) + "-" + std::to_string(i + 1);
        out.push_back(std::move(r));
      }
    }
  }
  return out;
}

std::string render_selftest(const std::vector<CaseResult>& results) {
  std::string out;
  std::size_t ok = 0, with_fail = 0, errors = 0;
  for (const CaseResult& r : results) {
    std::string verdict;
    if (!r.error.empty()) {
      verdict = "ERROR";
      ++errors;
    } else if (!r.ok) {
      verdict = "MISMATCH";
    } else {
      ++ok;
      verdict = r.fails ? "ok, " + std::to_string(r.fails) + " FAIL" : "ok";
      if (r.fails) ++with_fail;
    }
    out += r.label + "  " + r.spec + "  [" + verdict + "]\n";
    for (const std::string& l : r.lines) out += "    " + l + "\n";
    if (!r.error.empty()) out += "    " + r.error + "\n";
  }
  out += "summary: " + std::to_string(results.size()) + " cases, " + std::to_string(ok) + " verified, " +
         std::to_string(with_fail) + " with FAIL points, " + std::to_string(errors) + " errors\n";
  return out;
}

}  // namespace purerec
