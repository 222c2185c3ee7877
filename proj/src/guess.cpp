#include "purerec/guess.hpp"

#include <algorithm>
#include <numeric>

#include "purerec/error.hpp"
#include "purerec/linalg.hpp"
#include "purerec/modular.hpp"

namespace purerec {

void GuessConfig::validate() const {
  if (max_order < 1) throw usage_error("bad-config", "max order must be >= 1");
  if (max_degree < 0) throw usage_error("bad-config", "max degree must be >= 0");
  if (verify_margin < 8) throw usage_error("bad-config", "verify margin must be >= 8");
}

std::vector<Exponents> ansatz_monomials(std::size_t d, int degree) {
  std::vector<Exponents> out;
  Exponents e(d, 0);
  // odometer over [0, degree]^d keeping total degree <= degree
  for (;;) {
    if (std::accumulate(e.begin(), e.end(), 0) <= degree) out.push_back(e);
    std::size_t k = d;
    while (k > 0) {
      --k;
      if (e[k] < degree) {
        ++e[k];
        break;
      }
      e[k] = 0;
      if (k == 0) {
        k = d + 1;
        break;
      }
    }
    if (k == d + 1 || d == 0) break;
  }
  std::stable_sort(out.begin(), out.end(), [](const Exponents& a, const Exponents& b) {
    const int da = std::accumulate(a.begin(), a.end(), 0);
    const int db = std::accumulate(b.begin(), b.end(), 0);
    if (da != db) return da < db;
    return a < b;
  });
  return out;
}

namespace {

struct Ansatz {
  std::size_t axis;
  int order;
  std::vector<Exponents> monos;
  std::vector<Point> points;  // usable points, row-major

  std::size_t unknowns() const { return static_cast<std::size_t>(order + 1) * monos.size(); }
};

Ansatz make_ansatz(const ValueTable<Rat>& t, std::size_t axis, int order, int degree) {
  Ansatz a{axis, order, ansatz_monomials(t.dim(), degree), {}};
  for (std::size_t i = 0; i < t.size(); ++i) {
    Point p = t.point(i);
    if (p[axis] >= order) a.points.push_back(std::move(p));
  }
  return a;
}

Int monomial_value(const Exponents& e, const Point& p) {
  Int v = 1;
  for (std::size_t k = 0; k < e.size(); ++k)
    for (int t = 0; t < e[k]; ++t) v *= p[k];
  return v;
}

// Rank test mod p on every usable equation; nullity zero mod p proves that no
// recurrence of this shape exists over Q.
bool has_modular_solution(const ValueTable<Rat>& t, const Ansatz& a, ExecPolicy policy) {
  using namespace modular;
  for (std::size_t attempt = 0; attempt < 8; ++attempt) {
    const u64 p = prime(attempt);
    try {
      std::vector<u64> residues(t.size());
      for (std::size_t i = 0; i < t.size(); ++i) residues[i] = reduce(t.values()[i], p);
      Matrix m(a.points.size(), a.unknowns());
      Point q;
      for (std::size_t r = 0; r < a.points.size(); ++r) {
        const Point& n = a.points[r];
        q = n;
        std::vector<u64> mono(a.monos.size());
        for (std::size_t k = 0; k < a.monos.size(); ++k) mono[k] = reduce(monomial_value(a.monos[k], n), p);
        for (int i = 0; i <= a.order; ++i) {
          q[a.axis] = n[a.axis] - i;
          const u64 v = residues[t.index(q)];
          for (std::size_t k = 0; k < a.monos.size(); ++k)
            m.row(r)[static_cast<std::size_t>(i) * a.monos.size() + k] = mul(mono[k], v, p);
        }
      }
      return rank(std::move(m), p, policy) < a.unknowns();
    } catch (const Error& e) {
      if (e.code() != "unlucky-prime") throw;
    }
  }
  return true;  // could not screen; let the exact route decide
}

PureRec to_rec(const Ansatz& a, const RatVector& v, std::size_t d) {
  const auto vars = index_vars(d);
  PureRec rec;
  rec.axis = a.axis;
  for (int i = 0; i <= a.order; ++i) {
    MPoly c(vars);
    for (std::size_t k = 0; k < a.monos.size(); ++k)
      c.add_term(a.monos[k], v[static_cast<std::size_t>(i) * a.monos.size() + k]);
    rec.coeffs.push_back(std::move(c));
  }
  return rec.normalized();
}

RatVector flatten(const Ansatz& a, const PureRec& rec) {
  RatVector v;
  for (const MPoly& c : rec.coeffs)
    for (const Exponents& e : a.monos) v.push_back(c.coeff(e));
  return v;
}

}  // namespace

std::optional<PureRec> guess_pure_rec(const ValueTable<Rat>& table, std::size_t axis, int order,
                                      int degree, int verify_margin, ExecPolicy policy) {
  if (axis >= table.dim()) throw usage_error("bad-axis", "axis out of range");
  if (order < 1 || degree < 0) throw usage_error("bad-config", "order must be >= 1 and degree >= 0");
  const Ansatz a = make_ansatz(table, axis, order, degree);
  const std::size_t margin = static_cast<std::size_t>(std::max(verify_margin, 0));
  if (a.points.size() < a.unknowns() + margin)
    throw Error(ErrorKind::NotFound, "table-too-small",
                std::to_string(a.points.size()) + " usable points for " + std::to_string(a.unknowns()) +
                    " unknowns plus a margin of " + std::to_string(margin));

  if (!has_modular_solution(table, a, policy)) return std::nullopt;

  const std::size_t fit_rows = a.points.size() - margin;
  RatMatrix m(fit_rows, RatVector(a.unknowns()));
  Point q;
  for (std::size_t r = 0; r < fit_rows; ++r) {
    const Point& n = a.points[r];
    q = n;
    for (int i = 0; i <= order; ++i) {
      q[axis] = n[axis] - i;
      const Rat& v = table[q];
      if (v == 0) continue;
      for (std::size_t k = 0; k < a.monos.size(); ++k)
        m[r][static_cast<std::size_t>(i) * a.monos.size() + k] = v * monomial_value(a.monos[k], n);
    }
  }
  const auto basis = nullspace_exact(m, a.unknowns(), policy);
  if (basis.empty()) return std::nullopt;

  struct Candidate {
    std::size_t support;
    RatVector key;
    PureRec rec;
  };
  std::vector<Candidate> candidates;
  for (const RatVector& v : basis) {
    PureRec rec = to_rec(a, v, table.dim());
    if (rec.coeffs.front().is_zero() || rec.coeffs.back().is_zero()) continue;
    RatVector key = flatten(a, rec);
    const auto support = static_cast<std::size_t>(std::count_if(key.begin(), key.end(), [](const Rat& x) { return x != 0; }));
    candidates.push_back({support, std::move(key), std::move(rec)});
  }
  std::sort(candidates.begin(), candidates.end(), [](const Candidate& x, const Candidate& y) {
    if (x.support != y.support) return x.support < y.support;
    return x.key < y.key;
  });
  for (const Candidate& c : candidates) {
    const bool verified = std::all_of(a.points.begin(), a.points.end(),
                                      [&](const Point& n) { return c.rec.residual(table, n) == 0; });
    if (verified) return c.rec;
  }
  return std::nullopt;
}

PureRec guess_search(const ValueTable<Rat>& table, std::size_t axis, const GuessConfig& cfg) {
  cfg.validate();
  for (int s = 1; s <= cfg.max_order + cfg.max_degree; ++s) {
    for (int order = 1; order <= std::min(s, cfg.max_order); ++order) {
      const int degree = s - order;
      if (degree > cfg.max_degree) continue;
      if (auto rec = guess_pure_rec(table, axis, order, degree, cfg.verify_margin, cfg.policy)) return *rec;
    }
  }
  throw Error(ErrorKind::NotFound, "no-recurrence-found-within-bounds",
              "no recurrence along axis " + std::to_string(axis + 1) + " with order <= " +
                  std::to_string(cfg.max_order) + " and degree <= " + std::to_string(cfg.max_degree));
}

PureRec guess_diag_rec(std::span<const Rat> values, const GuessConfig& cfg) {
  if (values.empty()) throw Error(ErrorKind::NotFound, "table-too-small", "empty sequence");
  ValueTable<Rat> t(Point{static_cast<long>(values.size()) - 1});
  std::copy(values.begin(), values.end(), t.values().begin());
  return guess_search(t, 0, cfg);
}

}  // namespace purerec
