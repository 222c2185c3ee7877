#include "purerec/scheme.hpp"

#include <algorithm>
#include <deque>
#include <map>
#include <numeric>
#include <sstream>

#include "purerec/error.hpp"
#include "purerec/expr.hpp"

namespace purerec {

std::string to_string(Provenance p) { return p == Provenance::Derived ? "derived" : "guessed"; }

void Scheme::validate() const {
  const std::size_t d = dim();
  if (d == 0) throw usage_error("bad-scheme", "no recurrences");
  if (guards.size() != d || provenance.size() != d) throw usage_error("bad-scheme", "per-axis fields disagree in length");
  for (std::size_t j = 0; j < d; ++j) {
    recs[j].validate();
    if (recs[j].axis != j) throw usage_error("bad-scheme", "recurrence " + std::to_string(j + 1) + " is not along its axis");
    if (recs[j].dim() != d) throw usage_error("bad-scheme", "recurrence dimension mismatch");
    if (guards[j] < 0) throw usage_error("bad-scheme", "negative guard");
  }
  if (init.dim() != d) throw usage_error("bad-scheme", "init box dimension mismatch");
  for (std::size_t j = 0; j < d; ++j)
    if (init.box()[j] < bound(j)) throw usage_error("bad-scheme", "init box too small for the seed window");
}

namespace {

long probe_guard(const MPoly& c0, std::size_t axis, long side) {
  const std::size_t d = c0.nvars();
  long best = -1;
  Point p(d, 0);
  for (;;) {
    if (p[axis] > best && c0.eval_int(p) == 0) best = p[axis];
    std::size_t k = d;
    while (k-- > 0) {
      if (++p[k] <= side) break;
      p[k] = 0;
    }
    if (k == static_cast<std::size_t>(-1)) break;
  }
  return best;
}

}  // namespace

Scheme build_scheme(std::vector<PureRec> recs, const TableOracle& oracle, const SchemeOptions& opts) {
  if (opts.guard_pad < 0) throw usage_error("bad-config", "guard pad must be >= 0");
  const std::size_t d = recs.size();
  if (d == 0) throw usage_error("bad-scheme", "no recurrences");
  Scheme s;
  s.provenance = opts.provenance.empty() ? std::vector<Provenance>(d, Provenance::Guessed) : opts.provenance;
  std::size_t max_order = 0;
  for (PureRec& r : recs) {
    r = r.normalized();
    max_order = std::max(max_order, r.order());
  }
  std::sort(recs.begin(), recs.end(), [](const PureRec& a, const PureRec& b) { return a.axis < b.axis; });
  s.recs = std::move(recs);
  for (std::size_t j = 0; j < d; ++j) {
    const PureRec& r = s.recs[j];
    if (r.axis != j || r.dim() != d) throw usage_error("bad-scheme", "expected exactly one recurrence per axis");
    r.validate();
    const MPoly& c0 = r.coeffs.front();
    long zero;
    if (c0.is_constant() || c0.depends_only_on(j)) {
      zero = safe_start(r).n0;
    } else {
      const long side = 2 * static_cast<long>(max_order) + opts.guard_pad + 8;
      zero = std::max(0L, probe_guard(c0, j, side));
    }
    s.guards.push_back(zero + opts.guard_pad);
  }
  Point box(d);
  for (std::size_t j = 0; j < d; ++j) box[j] = s.bound(j);
  s.init = oracle(box);
  if (s.init.box() != box) throw Error(ErrorKind::Internal, "oracle-box", "oracle returned the wrong box");
  s.validate();
  for (std::size_t j = 0; j < d; ++j)
    if (!s.recs[j].annihilates(s.init))
      throw Error(ErrorKind::Inconsistent, "recurrence-inconsistent-with-oracle",
                  "axis " + std::to_string(j + 1) + " recurrence has a nonzero residual on the init box");
  return s;
}

namespace {

using IntPoly = std::vector<Int>;

Int horner(const IntPoly& c, long n) {
  Int acc = 0;
  for (auto it = c.rbegin(); it != c.rend(); ++it) {
    acc *= n;
    acc += *it;
  }
  return acc;
}

IntPoly to_int_poly(const Poly& p) {
  IntPoly out;
  for (const Rat& c : p.coeffs()) {
    if (c.get_den() != 1) throw Error(ErrorKind::Internal, "non-integer-coefficient", "recurrence is not normalized");
    out.push_back(c.get_num());
  }
  return out;
}

// a(n) from window[0..L-1] = a(n-L)..a(n-1); false when c_0(n) = 0.
bool apply(const std::vector<IntPoly>& c, const std::deque<Rat>& window, long n, Rat& out) {
  const std::size_t order = c.size() - 1;
  const Int c0 = horner(c[0], n);
  if (c0 == 0) return false;
  const bool integral = std::all_of(window.begin(), window.end(), [](const Rat& v) { return v.get_den() == 1; });
  if (integral) {
    Int acc = 0;
    for (std::size_t i = 1; i <= order; ++i) {
      const Rat& v = window[order - i];
      if (v == 0 || c[i].empty()) continue;
      const Int ci = horner(c[i], n);
      mpz_addmul(acc.get_mpz_t(), ci.get_mpz_t(), v.get_num_mpz_t());
    }
    acc = -acc;
    if (mpz_divisible_p(acc.get_mpz_t(), c0.get_mpz_t())) {
      Int q;
      mpz_divexact(q.get_mpz_t(), acc.get_mpz_t(), c0.get_mpz_t());
      out = Rat(q);
    } else {
      out = Rat(acc, c0);
      out.canonicalize();
    }
    return true;
  }
  Rat acc = 0;
  for (std::size_t i = 1; i <= order; ++i) {
    const Rat& v = window[order - i];
    if (v == 0 || c[i].empty()) continue;
    acc += Rat(horner(c[i], n)) * v;
  }
  out = -acc / Rat(c0);
  return true;
}

class Climber {
 public:
  Climber(const Scheme& s, const std::vector<std::size_t>& order, EvalStats& stats)
      : s_(s), order_(order), stats_(stats) {}

  Rat resolve(const Point& p, std::size_t level) {
    if (s_.init.contains(p)) return s_.init[p];
    if (level == 0) throw Error(ErrorKind::Internal, "climb-underflow", "point outside the init box at level 0");
    const std::size_t j = order_[level - 1];
    const long top = s_.bound(j);
    if (p[j] <= top) return resolve(p, level - 1);
    if (auto it = memo_.find(p); it != memo_.end()) return it->second;

    const PureRec& rec = s_.recs[j];
    const std::size_t order = rec.order();
    std::vector<Rat> at(p.begin(), p.end());
    std::vector<IntPoly> c;
    for (const MPoly& ci : rec.coeffs) c.push_back(to_int_poly(ci.specialize(j, at)));

    std::deque<Rat> window;
    Point q = p;
    for (std::size_t i = order; i >= 1; --i) {
      q[j] = top - static_cast<long>(i) + 1;
      window.push_back(resolve(q, level - 1));
      ++retained_;
      stats_.peak_retained = std::max(stats_.peak_retained, retained_);
    }
    stats_.max_window = std::max(stats_.max_window, order + 1);
    stats_.peak_retained = std::max(stats_.peak_retained, retained_ + 1);
    Rat next;
    for (long n = top + 1; n <= p[j]; ++n) {
      if (!apply(c, window, n, next)) {
        Point bad = p;
        bad[j] = n;
        std::string where;
        for (long x : bad) where += (where.empty() ? "" : ",") + std::to_string(x);
        throw Error(ErrorKind::Singular, "singular-point",
                    "leading coefficient of axis " + std::to_string(j + 1) + " vanishes at (" + where + ")");
      }
      window.pop_front();
      window.push_back(std::move(next));
      ++stats_.steps;
    }
    retained_ -= order;
    Rat v = window.back();
    memo_.emplace(p, v);
    stats_.memo_entries = memo_.size();
    return v;
  }

 private:
  const Scheme& s_;
  const std::vector<std::size_t>& order_;
  EvalStats& stats_;
  std::map<Point, Rat> memo_;
  std::size_t retained_ = 0;
};

void check_target(const Scheme& s, const Point& target) {
  if (target.size() != s.dim()) throw usage_error("bad-target", "target dimension does not match the scheme");
  for (long x : target)
    if (x < 0) throw usage_error("bad-target", "target coordinates must be >= 0");
}

}  // namespace

Rat eval_point_ordered(const Scheme& s, const Point& target, const std::vector<std::size_t>& order,
                       EvalStats* stats) {
  check_target(s, target);
  std::vector<std::size_t> sorted = order;
  std::sort(sorted.begin(), sorted.end());
  for (std::size_t k = 0; k < sorted.size(); ++k)
    if (sorted.size() != s.dim() || sorted[k] != k) throw usage_error("bad-order", "axis order must be a permutation");
  EvalStats local;
  local.order = order;
  Climber climber(s, order, local);
  Rat v = climber.resolve(target, s.dim());
  if (stats) {
    local.reroutes = stats->reroutes;
    *stats = local;
  }
  return v;
}

Rat eval_point(const Scheme& s, const Point& target, EvalStats* stats) {
  check_target(s, target);
  std::vector<std::size_t> order(s.dim());
  std::iota(order.begin(), order.end(), 0);
  EvalStats local;
  std::string first;
  do {
    try {
      Rat v = eval_point_ordered(s, target, order, &local);
      if (stats) *stats = local;
      return v;
    } catch (const Error& e) {
      if (e.code() != "singular-point") throw;
      if (first.empty()) first = e.what();
      ++local.reroutes;
    }
  } while (std::next_permutation(order.begin(), order.end()));
  if (stats) *stats = local;
  std::string where;
  for (long x : target) where += (where.empty() ? "" : ",") + std::to_string(x);
  throw Error(ErrorKind::Singular, "FAIL", "every axis order divides by zero on the way to (" + where + "); first: " + first);
}

Rat eval_diag(const PureRec& rec_in, const std::vector<Rat>& initials, long n, EvalStats* stats) {
  if (rec_in.dim() != 1) throw usage_error("not-univariate", "eval_diag needs a univariate recurrence");
  const PureRec rec = rec_in.normalized();
  rec.validate();
  const std::size_t order = rec.order();
  if (initials.size() < order) throw usage_error("too-few-initials", "need at least `order` initial values");
  if (n < 0) throw usage_error("bad-target", "index must be >= 0");
  if (n < static_cast<long>(initials.size())) return initials[static_cast<std::size_t>(n)];

  std::vector<IntPoly> c;
  for (const MPoly& ci : rec.coeffs) c.push_back(to_int_poly(ci.to_univariate(0)));
  std::deque<Rat> window(initials.end() - static_cast<long>(order), initials.end());
  EvalStats local;
  local.max_window = order + 1;
  local.peak_retained = order + 1;
  Rat next;
  for (long k = static_cast<long>(initials.size()); k <= n; ++k) {
    if (!apply(c, window, k, next))
      throw Error(ErrorKind::Inconsistent, "unexpected-singularity",
                  "leading coefficient vanishes at n = " + std::to_string(k) + " beyond the initial values");
    window.pop_front();
    window.push_back(std::move(next));
    ++local.steps;
  }
  if (stats) *stats = local;
  return window.back();
}

std::string write_scheme(const Scheme& s) {
  std::string out = "scheme\ndimension " + std::to_string(s.dim()) + "\n";
  for (std::size_t j = 0; j < s.dim(); ++j) {
    const PureRec& r = s.recs[j];
    out += "axis " + std::to_string(j + 1) + " " + to_string(s.provenance[j]) + "\n";
    out += "order " + std::to_string(r.order()) + "\n";
    out += "guard " + std::to_string(s.guards[j]) + "\n";
    for (std::size_t i = 0; i < r.coeffs.size(); ++i) out += "c" + std::to_string(i) + " " + r.coeffs[i].str() + "\n";
  }
  out += write_table(s.init);
  out += "end\n";
  return out;
}

namespace {

[[noreturn]] void bad_scheme(std::size_t line, const std::string& why) {
  throw usage_error("bad-scheme-file", "line " + std::to_string(line + 1) + ": " + why);
}

std::string expect_field(const std::vector<std::string>& lines, std::size_t& pos, const std::string& key) {
  if (pos >= lines.size()) bad_scheme(pos, "expected '" + key + "'");
  const std::string& l = lines[pos];
  if (l.rfind(key + " ", 0) != 0) bad_scheme(pos, "expected '" + key + "'");
  ++pos;
  return l.substr(key.size() + 1);
}

long to_long(const std::string& text, std::size_t line) {
  try {
    std::size_t used = 0;
    const long v = std::stol(text, &used);
    if (used != text.size()) bad_scheme(line, "bad integer '" + text + "'");
    return v;
  } catch (const std::logic_error&) {
    bad_scheme(line, "bad integer '" + text + "'");
  }
}

}  // namespace

Scheme read_scheme(const std::string& text) {
  std::vector<std::string> lines;
  std::istringstream in(text);
  for (std::string l; std::getline(in, l);) {
    if (!l.empty() && l.back() == '\r') l.pop_back();
    lines.push_back(l);
  }
  std::size_t pos = 0;
  if (lines.empty() || lines[0] != "scheme") bad_scheme(0, "expected 'scheme'");
  ++pos;
  const long d = to_long(expect_field(lines, pos, "dimension"), pos - 1);
  if (d < 1) bad_scheme(pos - 1, "dimension must be >= 1");
  const auto vars = index_vars(static_cast<std::size_t>(d));
  Scheme s;
  for (long j = 0; j < d; ++j) {
    const std::string head = expect_field(lines, pos, "axis");
    const auto space = head.find(' ');
    if (space == std::string::npos || to_long(head.substr(0, space), pos - 1) != j + 1)
      bad_scheme(pos - 1, "axes must appear in order");
    const std::string tag = head.substr(space + 1);
    if (tag == "derived")
      s.provenance.push_back(Provenance::Derived);
    else if (tag == "guessed")
      s.provenance.push_back(Provenance::Guessed);
    else
      bad_scheme(pos - 1, "unknown provenance '" + tag + "'");
    const long order = to_long(expect_field(lines, pos, "order"), pos - 1);
    if (order < 1) bad_scheme(pos - 1, "order must be >= 1");
    s.guards.push_back(to_long(expect_field(lines, pos, "guard"), pos - 1));
    PureRec r;
    r.axis = static_cast<std::size_t>(j);
    for (long i = 0; i <= order; ++i) r.coeffs.push_back(parse_mpoly(expect_field(lines, pos, "c" + std::to_string(i)), vars));
    s.recs.push_back(std::move(r));
  }
  s.init = read_table(lines, pos);
  if (pos >= lines.size() || lines[pos] != "end") bad_scheme(pos, "expected 'end'");
  s.validate();
  return s;
}

}  // namespace purerec
