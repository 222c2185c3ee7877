#include "purerec/recurrence.hpp"

#include <algorithm>

#include "purerec/error.hpp"

namespace purerec {

std::vector<std::string> index_vars(std::size_t d) {
  if (d == 1) return {"n"};
  std::vector<std::string> v;
  for (std::size_t k = 1; k <= d; ++k) v.push_back("n" + std::to_string(k));
  return v;
}

PureRec PureRec::normalized() const {
  std::vector<Rat> all;
  for (const MPoly& c : coeffs)
    for (const auto& [e, x] : c.terms()) all.push_back(x);
  if (all.empty()) return *this;
  const Int den = common_denominator(all);
  Int g = 0;
  for (const Rat& x : all) g = gcd(g, Int(x.get_num() * (den / x.get_den())));
  Rat scale(den, g);
  scale.canonicalize();
  const MPoly& c0 = coeffs.front();
  if (!c0.is_zero() && c0.terms().begin()->second < 0) scale = -scale;
  PureRec r = *this;
  for (MPoly& c : r.coeffs) c *= scale;
  return r;
}

void PureRec::validate() const {
  if (coeffs.size() < 2) throw usage_error("bad-recurrence", "a recurrence needs order >= 1");
  const auto& vs = coeffs.front().vars();
  for (const MPoly& c : coeffs)
    if (c.vars() != vs) throw usage_error("bad-recurrence", "coefficients over different variables");
  if (axis >= vs.size()) throw usage_error("bad-recurrence", "axis out of range");
  if (coeffs.front().is_zero()) throw usage_error("degenerate-leading-coefficient", "c0 vanishes identically");
  if (coeffs.back().is_zero() && coeffs.size() != 2)
    throw usage_error("bad-recurrence", "trailing coefficient vanishes identically");
}

Rat PureRec::residual(const ValueTable<Rat>& t, std::span<const long> point) const {
  std::vector<Rat> at(point.begin(), point.end());
  Point q(point.begin(), point.end());
  Rat acc = 0;
  for (std::size_t i = 0; i < coeffs.size(); ++i) {
    q[axis] = point[axis] - static_cast<long>(i);
    const Rat& v = t.at(q);
    if (v == 0 || coeffs[i].is_zero()) continue;
    acc += coeffs[i].eval(at) * v;
  }
  return acc;
}

bool PureRec::annihilates(const ValueTable<Rat>& t) const {
  for (std::size_t i = 0; i < t.size(); ++i) {
    const Point p = t.point(i);
    if (p[axis] < static_cast<long>(order())) continue;
    if (residual(t, p) != 0) return false;
  }
  return true;
}

std::vector<RatFn> PureRec::rational_form() const {
  if (dim() != 1) throw usage_error("not-univariate", "rational form needs a univariate recurrence");
  const Poly c0 = coeffs.front().to_univariate(0);
  std::vector<RatFn> out;
  for (std::size_t i = 1; i < coeffs.size(); ++i) out.emplace_back(-coeffs[i].to_univariate(0), c0);
  return out;
}

PureRec PureRec::from_rational_form(std::span<const RatFn> f) {
  if (f.empty()) throw usage_error("bad-recurrence", "empty rational form");
  Poly common = Poly::constant("n", 1);
  for (const RatFn& r : f) common = divmod(common * r.den(), gcd(common, r.den())).first;
  const std::vector<std::string> vars = {"n"};
  PureRec rec;
  rec.coeffs.push_back(MPoly::from_univariate(common, vars, 0));
  for (const RatFn& r : f) {
    const Poly c = -(r.num() * divmod(common, r.den()).first);
    rec.coeffs.push_back(MPoly::from_univariate(c, vars, 0));
  }
  return rec.normalized();
}

namespace {

std::string point_text(const std::vector<std::string>& vars, std::size_t axis, std::size_t shift) {
  std::string out = "a(";
  for (std::size_t k = 0; k < vars.size(); ++k) {
    if (k > 0) out += ",";
    out += vars[k];
    if (k == axis && shift > 0) out += "-" + std::to_string(shift);
  }
  return out + ")";
}

}  // namespace

std::string PureRec::str() const {
  std::string out;
  for (std::size_t i = 0; i < coeffs.size(); ++i) {
    const MPoly& c = coeffs[i];
    if (c.is_zero()) continue;
    const std::string a = point_text(vars(), axis, i);
    std::string body;
    bool negative = false;
    if (c.terms().size() == 1) {
      const auto& [e, x] = *c.terms().begin();
      negative = x < 0;
      const MPoly mag = negative ? -c : c;
      body = mag.is_constant() && mag.constant_term() == 1 ? a : mag.str() + "*" + a;
    } else {
      body = "(" + c.str() + ")*" + a;
    }
    if (out.empty())
      out = (negative ? "-" : "") + body;
    else
      out += (negative ? " - " : " + ") + body;
  }
  return (out.empty() ? "0" : out) + " = 0";
}

RatFn logderiv(const HyperexpSpec& spec) {
  spec.validate();
  if (spec.dim() != 1) throw usage_error("bad-spec", "logderiv needs a univariate spec");
  const std::string& x = spec.vars[0];
  RatFn acc{Poly(x)};
  for (const auto& f : spec.factors) {
    const Poly p = f.base.to_univariate(0);
    acc = acc + RatFn(p.derivative() * f.exponent, p);
  }
  if (!spec.exp_part.is_zero()) acc = acc + RatFn(spec.exp_part.to_univariate(0).derivative());
  return acc;
}

PureRec ode_to_rec(const Poly& a, const Poly& b) {
  if (b.is_zero() || b.coeff(0) == 0)
    throw usage_error("singular-at-origin", "B(0) = 0: the origin is not an ordinary point");
  const int order = std::max({b.degree(), a.degree() + 1, 1});
  const std::vector<std::string> vars = {"n"};
  const MPoly n = MPoly::variable(vars, 0);
  PureRec rec;
  rec.axis = 0;
  for (int i = 0; i <= order; ++i) {
    // coefficient of r_{n-i}: b_i (n - i) - a_{i-1}
    MPoly c = b.coeff(i) * (n - MPoly::constant(vars, i)) - MPoly::constant(vars, a.coeff(i - 1));
    rec.coeffs.push_back(MPoly(vars) + c);
  }
  return rec.normalized();
}

long largest_integer_root(const Poly& p, long scan_bound) {
  if (p.is_zero()) throw usage_error("degenerate-leading-coefficient", "zero polynomial has every root");
  // integer primitive coefficients
  const Int den = common_denominator(p.coeffs());
  std::vector<Int> q;
  for (const Rat& c : p.coeffs()) q.push_back(c.get_num() * (den / c.get_den()));
  std::size_t low = 0;
  while (q[low] == 0) ++low;
  const bool zero_root = low > 0;
  q.erase(q.begin(), q.begin() + static_cast<long>(low));
  auto is_root = [&](long r) {
    Int acc = 0;
    for (auto it = q.rbegin(); it != q.rend(); ++it) acc = acc * r + *it;
    return acc == 0;
  };
  const long fallback = zero_root ? 0 : -1;
  if (q.size() == 1) return fallback;

  // Cauchy bound: every root satisfies |r| <= 1 + max |q_i / q_lead|.
  Int cauchy = 0;
  for (std::size_t i = 0; i + 1 < q.size(); ++i) cauchy = std::max(cauchy, Int(abs(q[i])));
  cauchy = cauchy / abs(q.back()) + 2;
  if (cauchy <= 1000000) {
    for (long r = cauchy.get_si(); r >= 1; --r)
      if (is_root(r)) return r;
    return fallback;
  }
  // Rational root theorem: integer roots divide the trailing coefficient.
  const Int trailing = abs(q.front());
  if (trailing <= Int("1000000000000")) {
    const long t = trailing.get_si();
    long best = fallback;
    for (long d = 1; d * d <= t; ++d) {
      if (t % d != 0) continue;
      for (long r : {d, t / d})
        if (r > best && is_root(r)) best = r;
    }
    return best;
  }
  const long bound = std::max(scan_bound, 2 * static_cast<long>(q.size()));
  for (long r = bound; r >= 1; --r)
    if (is_root(r)) return r;
  return fallback;
}

SafeStart safe_start(const PureRec& rec, SafeStartOptions opts) {
  if (rec.coeffs.empty() || rec.coeffs.front().is_zero())
    throw usage_error("degenerate-leading-coefficient", "c0 vanishes identically");
  const Poly c0 = rec.coeffs.front().to_univariate(rec.axis);
  const long bound = std::max(opts.scan_bound, 2 * static_cast<long>(rec.order()));
  return SafeStart{std::max(0L, largest_integer_root(c0, bound))};
}

}  // namespace purerec
