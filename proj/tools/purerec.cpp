// purerec: derive, discover and evaluate pure recurrences.
//
// Exit codes: 0 ok, 2 parse/usage error, 3 FAIL (every path divides by
// zero), 4 inconsistency, 5 no recurrence within the search envelope.

#include <CLI11.hpp>
#include <json.hpp>

#include <fstream>
#include <iostream>
#include <sstream>

#include "purerec/corpus.hpp"
#include "purerec/error.hpp"
#include "purerec/expr.hpp"
#include "purerec/guess.hpp"
#include "purerec/lattice.hpp"
#include "purerec/recurrence.hpp"
#include "purerec/scheme.hpp"
#include "purerec/series.hpp"
#include "purerec/walks.hpp"

using namespace purerec;
using nlohmann::ordered_json;

namespace {

enum Exit { Ok = 0, Usage = 2, Fail = 3, Inconsistent = 4, NotFound = 5 };

struct Globals {
  int order_max = 4;
  int degree_max = 2;
  int verify_margin = 16;
  long guard_pad = 2;
  std::uint64_t seed = SelftestOptions{}.seed;
  std::string out;
  std::string format = "text";

  GuessConfig guess() const {
    GuessConfig g{order_max, degree_max, verify_margin, ExecPolicy::Parallel};
    g.validate();
    return g;
  }
  bool structured() const { return format == "structured"; }
};

void emit(const Globals& g, const std::string& text) {
  if (g.out.empty()) {
    std::cout << text;
    return;
  }
  std::ofstream f(g.out, std::ios::binary);
  if (!f) throw usage_error("bad-output", "cannot write " + g.out);
  f << text;
}

std::string slurp(const std::string& path) {
  std::ifstream f(path, std::ios::binary);
  if (!f) throw usage_error("missing-file", "cannot read " + path);
  std::ostringstream s;
  s << f.rdbuf();
  return s.str();
}

Point parse_point(const std::string& text) {
  Point p;
  std::string cur;
  for (char c : text + ",") {
    if (c == ',' || c == ' ') {
      if (cur.empty()) continue;
      try {
        std::size_t used = 0;
        p.push_back(std::stol(cur, &used));
        if (used != cur.size()) throw std::invalid_argument(cur);
      } catch (const std::logic_error&) {
        throw usage_error("parse-error", "bad coordinate '" + cur + "'");
      }
      cur.clear();
    } else {
      cur += c;
    }
  }
  if (p.empty()) throw usage_error("parse-error", "empty point");
  return p;
}

std::string join(const std::vector<Rat>& v) {
  std::string out;
  for (std::size_t i = 0; i < v.size(); ++i) out += (i ? ", " : "") + to_string(v[i]);
  return out;
}

int derive_uni(const Globals& g, const std::string& spec_text, long terms) {
  if (terms < 1) throw usage_error("bad-config", "--terms must be >= 1");
  const HyperexpSpec spec = parse_hyperexp(spec_text);
  if (spec.dim() != 1) throw usage_error("bad-spec", "derive-uni needs a univariate expression");
  const RatFn ld = logderiv(spec);
  const PureRec rec = ode_to_rec(ld.num(), ld.den());
  const long n0 = safe_start(rec).n0;
  const long check = std::max<long>(terms, static_cast<long>(rec.order()) + 1);
  const SeriesTrunc s = series_from_spec(spec, static_cast<int>(check - 1));
  ValueTable<Rat> t(Point{check - 1});
  t.values() = s.coeffs;
  const bool ok = rec.annihilates(t);
  const std::vector<Rat> first(s.coeffs.begin(), s.coeffs.begin() + terms);
  if (g.structured()) {
    ordered_json j;
    j["spec"] = spec.str();
    j["logderiv"] = ld.str();
    j["recurrence"] = rec.str();
    j["order"] = rec.order();
    j["safe_start"] = n0;
    ordered_json cs = ordered_json::array();
    for (const Rat& c : first) cs.push_back(to_string(c));
    j["coefficients"] = cs;
    j["residuals_zero"] = ok;
    j["checked_terms"] = check;
    emit(g, j.dump(2) + "\n");
  } else {
    emit(g, "spec:        " + spec.str() + "\nR'/R:        " + ld.str() + "\nrecurrence:  " + rec.str() +
                "\nsafe start:  " + std::to_string(n0) + "\ncoefficients: " + join(first) + "\nresiduals:   " +
                (ok ? "all zero" : "NONZERO") + " on " + std::to_string(check) + " terms\n");
  }
  return ok ? Exit::Ok : Exit::Inconsistent;
}

ValueTable<Rat> load_table(const std::string& path) {
  std::vector<std::string> lines;
  std::istringstream in(slurp(path));
  for (std::string l; std::getline(in, l);) lines.push_back(l);
  std::size_t pos = 0;
  return read_table(lines, pos);
}

struct Source {
  std::string spec;
  std::string steps;
  std::string table;
  long side = 20;
};

ValueTable<Rat> source_table(const Source& src, std::size_t& dim) {
  const int given = !src.spec.empty() + !src.steps.empty() + !src.table.empty();
  if (given != 1) throw usage_error("bad-input", "give exactly one of --spec, --steps, --table");
  if (!src.table.empty()) {
    ValueTable<Rat> t = load_table(src.table);
    dim = t.dim();
    return t;
  }
  if (src.side < 1) throw usage_error("bad-config", "--side must be >= 1");
  if (!src.steps.empty()) {
    dim = 2;
    return to_rat(walk_dp(StepSet::parse(src.steps), {src.side, src.side}));
  }
  const HyperexpSpec spec = parse_hyperexp(src.spec);
  dim = spec.dim();
  return mseries_from_spec(spec, Point(dim, src.side));
}

int discover(const Globals& g, const Source& src, int axis) {
  std::size_t dim = 0;
  const ValueTable<Rat> t = source_table(src, dim);
  std::vector<std::size_t> axes;
  if (axis == 0) {
    for (std::size_t j = 0; j < dim; ++j) axes.push_back(j);
  } else {
    if (axis < 0 || static_cast<std::size_t>(axis) > dim) throw usage_error("bad-axis", "axis out of range");
    axes.push_back(static_cast<std::size_t>(axis - 1));
  }
  std::vector<PureRec> recs;
  for (std::size_t j : axes) recs.push_back(guess_search(t, j, g.guess()));
  if (g.structured()) {
    ordered_json arr = ordered_json::array();
    for (const PureRec& r : recs) {
      ordered_json coeffs = ordered_json::array();
      for (const MPoly& c : r.coeffs) coeffs.push_back(c.str());
      arr.push_back({{"axis", r.axis + 1}, {"order", r.order()}, {"status", "verified, not proved"},
                     {"coefficients", coeffs}, {"recurrence", r.str()}});
    }
    emit(g, ordered_json{{"recurrences", arr}}.dump(2) + "\n");
  } else {
    std::string out;
    for (const PureRec& r : recs)
      out += "axis " + std::to_string(r.axis + 1) + " (verified, not proved): " + r.str() + "\n";
    emit(g, out);
  }
  return Exit::Ok;
}

int build(const Globals& g, const Source& src) {
  SchemeOptions so;
  so.guard_pad = g.guard_pad;
  Scheme s;
  if (!src.steps.empty() && src.spec.empty() && src.table.empty()) {
    const StepSet st = StepSet::parse(src.steps);
    const ValueTable<Rat> t = to_rat(walk_dp(st, {src.side, src.side}));
    s = build_scheme({guess_search(t, 0, g.guess()), guess_search(t, 1, g.guess())},
                     [&](const Point& box) { return to_rat(walk_dp(st, box)); }, so);
  } else if (!src.spec.empty() && src.steps.empty() && src.table.empty()) {
    const HyperexpSpec spec = parse_hyperexp(src.spec);
    const TableOracle oracle = [&](const Point& box) { return mseries_from_spec(spec, box); };
    std::vector<PureRec> recs;
    if (spec.dim() == 1) {
      const RatFn ld = logderiv(spec);
      recs.push_back(ode_to_rec(ld.num(), ld.den()));
      so.provenance = {Provenance::Derived};
    } else {
      const ValueTable<Rat> t = oracle(Point(spec.dim(), src.side));
      for (std::size_t j = 0; j < spec.dim(); ++j) recs.push_back(guess_search(t, j, g.guess()));
    }
    s = build_scheme(recs, oracle, so);
  } else {
    throw usage_error("bad-input", "build-scheme takes exactly one of --spec or --steps");
  }
  emit(g, write_scheme(s));
  return Exit::Ok;
}

int eval(const Globals& g, const std::string& scheme_path, const std::vector<std::string>& targets,
         const std::string& order_text) {
  const Scheme s = read_scheme(slurp(scheme_path));
  std::vector<std::size_t> order;
  if (!order_text.empty())
    for (long k : parse_point(order_text)) {
      if (k < 1) throw usage_error("bad-order", "axes are numbered from 1");
      order.push_back(static_cast<std::size_t>(k - 1));
    }
  std::string out;
  ordered_json arr = ordered_json::array();
  int code = Exit::Ok;
  for (const std::string& text : targets) {
    const Point p = parse_point(text);
    EvalStats st;
    try {
      const Rat v = order.empty() ? eval_point(s, p, &st) : eval_point_ordered(s, p, order, &st);
      out += "a(" + text + ") = " + to_string(v) + "\n";
      arr.push_back({{"target", p}, {"status", "ok"}, {"value", to_string(v)}, {"steps", st.steps},
                     {"max_window", st.max_window}, {"reroutes", st.reroutes}});
    } catch (const Error& e) {
      if (e.kind() != ErrorKind::Singular) throw;
      out += "a(" + text + ") = FAIL (" + e.what() + ")\n";
      arr.push_back({{"target", p}, {"status", "FAIL"}, {"reason", e.what()}});
      code = Exit::Fail;
    }
  }
  emit(g, g.structured() ? ordered_json{{"results", arr}}.dump(2) + "\n" : out);
  return code;
}

int walk2d(const Globals& g, const std::string& steps, long K, bool digits_only) {
  WalkConfig cfg;
  cfg.guess = g.guess();
  cfg.guard_pad = g.guard_pad;
  const WalkReport r = walk2d_report(StepSet::parse(steps), K, cfg);
  if (g.structured()) {
    emit(g, render_json(r));
  } else {
    std::cout << render_text(r, !digits_only);
    if (!g.out.empty()) emit(g, render_json(r));
  }
  return r.value_k2k ? Exit::Ok : Exit::Fail;
}

int selftest(const Globals& g, bool quick) {
  const auto results = run_selftest({g.seed, quick});
  emit(g, render_selftest(results));
  for (const CaseResult& r : results)
    if (!r.ok) return Exit::Inconsistent;
  return Exit::Ok;
}

int exit_code(const Error& e) {
  switch (e.kind()) {
    case ErrorKind::Usage: return Exit::Usage;
    case ErrorKind::Singular: return Exit::Fail;
    case ErrorKind::NotFound: return Exit::NotFound;
    default: return Exit::Inconsistent;
  }
}

}  // namespace

int main(int argc, char** argv) {
  CLI::App app{"Pure recurrences for hyperexponential sequences and lattice walks"};
  app.require_subcommand(1);
  app.fallthrough();
  Globals g;
  app.add_option("--order-max", g.order_max, "largest recurrence order tried")->envname("PUREREC_ORDER_MAX");
  app.add_option("--degree-max", g.degree_max, "largest total coefficient degree tried")->envname("PUREREC_DEGREE_MAX");
  app.add_option("--verify-margin", g.verify_margin, "held-out points a guess must satisfy")->envname("PUREREC_VERIFY_MARGIN");
  app.add_option("--guard-pad", g.guard_pad, "extra offset past leading-coefficient zeros")->envname("PUREREC_GUARD_PAD");
  app.add_option("--seed", g.seed, "corpus seed")->envname("PUREREC_SEED");
  app.add_option("--out", g.out, "write the (structured) result to this file")->envname("PUREREC_OUT");
  app.add_option("--format", g.format, "text or structured")
      ->check(CLI::IsMember({"text", "structured"}))
      ->envname("PUREREC_FORMAT");

  std::string spec_text;
  long terms = 10;
  auto* derive = app.add_subcommand("derive-uni", "recurrence of a univariate hyperexponential by coefficient extraction");
  derive->add_option("spec", spec_text, "expression such as \"(1-x)^(-1/3)\"")->required();
  derive->add_option("-N,--terms", terms, "coefficients to print");

  Source src;
  int axis = 0;
  auto* disc = app.add_subcommand("discover", "guess pure recurrences from exact values");
  disc->add_option("--spec", src.spec, "multivariate expression");
  disc->add_option("--steps", src.steps, "walk step set, e.g. [[1,0],[0,1],[1,1]]");
  disc->add_option("--table", src.table, "file with a table block");
  disc->add_option("--side", src.side, "box side for --spec/--steps");
  disc->add_option("--axis", axis, "1-based axis (default: all)");

  auto* bs = app.add_subcommand("build-scheme", "guess or derive recurrences and write a scheme file");
  bs->add_option("--spec", src.spec, "expression");
  bs->add_option("--steps", src.steps, "walk step set");
  bs->add_option("--side", src.side, "fitting box side");

  std::string scheme_path, order_text;
  std::vector<std::string> targets;
  auto* ev = app.add_subcommand("eval", "evaluate lattice points with a scheme file");
  ev->add_option("--scheme", scheme_path, "scheme file")->required()->check(CLI::ExistingFile);
  ev->add_option("--at", targets, "target point(s), e.g. 20,40")->required();
  ev->add_option("--axis-order", order_text, "fixed climb order, e.g. 1,2 (last axis climbed last)");

  std::string steps;
  long K = 1;
  bool digits_only = false;
  auto* walk = app.add_subcommand("walk2d", "axis and diagonal recurrences, F(K,2K), F(2K,2K), first 30 diagonal terms");
  walk->add_option("steps", steps, "step set, e.g. [[1,0],[0,1],[1,1]]")->required();
  walk->add_option("-K", K, "scale")->required();
  walk->add_flag("--digits-only", digits_only, "print digit counts instead of the full values");

  bool quick = false;
  auto* self = app.add_subcommand("selftest", "random corpora in one, two and three variables");
  self->add_flag("--quick", quick, "smaller boxes");

  try {
    app.parse(argc, argv);
  } catch (const CLI::ParseError& e) {
    const int rc = app.exit(e);
    return rc == 0 ? 0 : Exit::Usage;
  }

  try {
    if (*derive) return derive_uni(g, spec_text, terms);
    if (*disc) return discover(g, src, axis);
    if (*bs) return build(g, src);
    if (*ev) return eval(g, scheme_path, targets, order_text);
    if (*walk) return walk2d(g, steps, K, digits_only);
    if (*self) return selftest(g, quick);
  } catch (const Error& e) {
    std::cerr << "error: " << e.what() << "\n";
    return exit_code(e);
  } catch (const std::exception& e) {
    std::cerr << "error: " << e.what() << "\n";
    return Exit::Inconsistent;
  }
  return Exit::Usage;
}
