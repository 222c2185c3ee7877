#include "purerec/walks.hpp"

#include <json.hpp>

#include "purerec/error.hpp"

namespace purerec {

MPoly gf_from_steps(const StepSet& st) {
  const std::vector<std::string> vars = {"x1", "x2"};
  MPoly g = MPoly::constant(vars, 1);
  for (const Step& s : st.steps()) g.add_term({static_cast<int>(s[0]), static_cast<int>(s[1])}, -1);
  return g;
}

namespace {

template <class Fn>
auto with_growth(long start, long cap, Fn&& fn) {
  for (long side = start;; side *= 2) {
    try {
      return fn(side);
    } catch (const Error& e) {
      if (e.code() != "table-too-small" || side * 2 > cap) throw;
    }
  }
}

}  // namespace

WalkReport walk2d_report(const StepSet& st, long K, const WalkConfig& cfg) {
  if (K < 1) throw usage_error("bad-K", "K must be >= 1");
  cfg.guess.validate();
  WalkReport r;
  r.steps = st;
  r.K = K;
  r.gf = gf_from_steps(st);

  struct Fit {
    long side;
    std::vector<PureRec> recs;
  };
  const Fit fit = with_growth(cfg.table_start, cfg.table_cap, [&](long side) {
    const ValueTable<Rat> t = to_rat(walk_dp(st, {side, side}, cfg.guess.policy));
    return Fit{side, {guess_search(t, 0, cfg.guess), guess_search(t, 1, cfg.guess)}};
  });
  r.fit_side = fit.side;

  const TableOracle oracle = [&](const Point& box) { return to_rat(walk_dp(st, box, cfg.guess.policy)); };
  r.scheme = build_scheme(fit.recs, oracle, {cfg.guard_pad, {}});

  try {
    r.value_k2k = eval_point(r.scheme, {K, 2 * K}, &r.k2k_stats).get_num();
  } catch (const Error& e) {
    if (e.kind() != ErrorKind::Singular) throw;
    r.fail_reason = e.what();
  }

  GuessConfig diag_cfg = cfg.guess;
  diag_cfg.verify_margin *= 2;
  std::vector<Int> diag;
  r.diag_rec = with_growth(cfg.table_start, cfg.table_cap, [&](long count) {
    diag = walk_diagonal(st, count);
    r.diag_fit_terms = count;
    const std::vector<Rat> values(diag.begin(), diag.end());
    return guess_diag_rec(values, diag_cfg);
  });
  const long n0 = safe_start(r.diag_rec).n0;
  const std::size_t need = static_cast<std::size_t>(std::max<long>(n0 + 1, 0)) + r.diag_rec.order();
  if (diag.size() < std::max<std::size_t>(need, 30)) diag = walk_diagonal(st, static_cast<long>(std::max<std::size_t>(need, 30)));
  const std::vector<Rat> initials(diag.begin(), diag.begin() + static_cast<long>(need));
  r.value_2k2k = eval_diag(r.diag_rec, initials, 2 * K).get_num();
  r.diag30.assign(diag.begin(), diag.begin() + 30);
  return r;
}

namespace {

std::string show(const Int& v, bool full) {
  if (v == 0) return "0";
  const std::string digits = std::to_string(digit_count(v));
  if (full) return to_string(v) + "\n  (" + digits + " digits)";
  return "a " + digits + "-digit number";
}

std::string rec_in(const PureRec& rec, const std::string& name) {
  std::string s = rec.str();
  for (std::size_t at = s.find("a("); at != std::string::npos; at = s.find("a(", at + name.size()))
    s.replace(at, 1, name);
  return s;
}

}  // namespace

std::string render_text(const WalkReport& r, bool full_values) {
  std::string out;
  out += "Theorem. Let F(a,b) be the number of walks in the quarter plane from (0,0) to (a,b)\n";
  out += "using the steps " + r.steps.str() + ". Then\n\n";
  out += "  sum_{a,b >= 0} F(a,b) x1^a x2^b = 1/(" + r.gf.str() + ")\n\n";
  out += "and F satisfies the pure recurrences (verified on a " + std::to_string(r.fit_side + 1) + "x" +
         std::to_string(r.fit_side + 1) + " table, not proved)\n\n";
  for (std::size_t j = 0; j < r.scheme.dim(); ++j)
    out += "  " + rec_in(r.scheme.recs[j], "F") + "\n";
  out += "\nwith respect to a and b respectively (n1 = a, n2 = b). Together with the values\n";
  out += "F(a,b) for 0 <= a <= " + std::to_string(r.scheme.init.box()[0]) + ", 0 <= b <= " +
         std::to_string(r.scheme.init.box()[1]) + " they determine F everywhere.\n\n";
  out += "F(" + std::to_string(r.K) + "," + std::to_string(2 * r.K) + ") = ";
  if (r.value_k2k)
    out += show(*r.value_k2k, full_values) + "\n\n";
  else
    out += "FAIL\n  (" + r.fail_reason + ")\n\n";
  out += "The diagonal sequence d(n) = F(n,n) satisfies (verified on " + std::to_string(r.diag_fit_terms) +
         " terms, not proved)\n\n  " + rec_in(r.diag_rec, "d") + "\n\n";
  out += "F(" + std::to_string(2 * r.K) + "," + std::to_string(2 * r.K) + ") = " + show(r.value_2k2k, full_values) + "\n\n";
  out += "For the sake of Neil Sloane, here are the first 30 terms, F(0,0) .. F(29,29):\n\n  ";
  for (std::size_t i = 0; i < r.diag30.size(); ++i) out += (i ? ", " : "") + to_string(r.diag30[i]);
  out += "\n";
  return out;
}

std::string render_json(const WalkReport& r) {
  using nlohmann::ordered_json;
  ordered_json j;
  ordered_json steps = ordered_json::array();
  for (const Step& s : r.steps.steps()) steps.push_back({s[0], s[1]});
  j["steps"] = steps;
  j["K"] = r.K;
  j["gf_denominator"] = r.gf.str();
  ordered_json axes = ordered_json::array();
  for (std::size_t a = 0; a < r.scheme.dim(); ++a)
    axes.push_back({{"axis", a + 1},
                    {"provenance", to_string(r.scheme.provenance[a])},
                    {"status", "verified, not proved"},
                    {"order", r.scheme.recs[a].order()},
                    {"recurrence", r.scheme.recs[a].str()}});
  j["axis_recurrences"] = axes;
  j["fit_side"] = r.fit_side;
  auto value = [](const Int& v) {
    return ordered_json{{"status", "ok"}, {"value", to_string(v)}, {"digits", v == 0 ? 1 : digit_count(v)}};
  };
  if (r.value_k2k)
    j["value_K_2K"] = value(*r.value_k2k);
  else
    j["value_K_2K"] = {{"status", "FAIL"}, {"reason", r.fail_reason}};
  j["diagonal_recurrence"] = {{"status", "verified, not proved"},
                              {"order", r.diag_rec.order()},
                              {"fit_terms", r.diag_fit_terms},
                              {"recurrence", r.diag_rec.str()}};
  j["value_2K_2K"] = value(r.value_2k2k);
  ordered_json d30 = ordered_json::array();
  for (const Int& v : r.diag30) d30.push_back(to_string(v));
  j["diag30"] = {{"first_index", 0}, {"values", d30}};
  j["scheme"] = write_scheme(r.scheme);
  return j.dump(2) + "\n";
}

}  // namespace purerec
