#include "purerec/lattice.hpp"

#include <algorithm>
#include <cctype>
#include <set>

#include "purerec/error.hpp"

namespace purerec {

StepSet::StepSet(std::vector<Step> steps) : steps_(std::move(steps)) {
  if (steps_.empty()) throw usage_error("empty-step-set", "empty step set");
  std::set<Step> seen;
  for (const Step& s : steps_) {
    if (s[0] < 0 || s[1] < 0) throw usage_error("bad-step", "steps must have nonnegative coordinates");
    if (s[0] == 0 && s[1] == 0) throw usage_error("bad-step", "the zero step is not allowed");
    if (!seen.insert(s).second) throw usage_error("bad-step", "duplicate step");
  }
}

StepSet StepSet::parse(std::string_view text) {
  std::vector<long> numbers;
  std::size_t depth = 0, max_depth = 0;
  for (std::size_t i = 0; i < text.size();) {
    const char c = text[i];
    if (c == '[' || c == '{') {
      max_depth = std::max(max_depth, ++depth);
      ++i;
    } else if (c == ']' || c == '}') {
      if (depth == 0) throw usage_error("parse-error", "unbalanced bracket at position " + std::to_string(i));
      --depth;
      ++i;
    } else if (c == ',' || std::isspace(static_cast<unsigned char>(c))) {
      ++i;
    } else if (c == '-' || std::isdigit(static_cast<unsigned char>(c))) {
      std::size_t j = i + 1;
      while (j < text.size() && std::isdigit(static_cast<unsigned char>(text[j]))) ++j;
      if (c == '-' && j == i + 1) throw usage_error("parse-error", "stray '-' at position " + std::to_string(i));
      numbers.push_back(std::stol(std::string(text.substr(i, j - i))));
      i = j;
    } else {
      throw usage_error("parse-error", std::string("unexpected '") + c + "' at position " + std::to_string(i));
    }
  }
  if (depth != 0) throw usage_error("parse-error", "unbalanced brackets");
  if (numbers.empty()) throw usage_error("empty-step-set", "empty step set");
  if (numbers.size() % 2 != 0 || max_depth != 2)
    throw usage_error("parse-error", "steps must be written as [[a,b],[c,d],...]");
  std::vector<Step> steps;
  for (std::size_t i = 0; i < numbers.size(); i += 2) steps.push_back({numbers[i], numbers[i + 1]});
  return StepSet(std::move(steps));
}

long StepSet::max_dx() const {
  long m = 0;
  for (const Step& s : steps_) m = std::max(m, s[0]);
  return m;
}

long StepSet::max_dy() const {
  long m = 0;
  for (const Step& s : steps_) m = std::max(m, s[1]);
  return m;
}

std::string StepSet::str() const {
  std::string out = "[";
  for (std::size_t i = 0; i < steps_.size(); ++i) {
    if (i > 0) out += ",";
    out += "[" + std::to_string(steps_[i][0]) + "," + std::to_string(steps_[i][1]) + "]";
  }
  return out + "]";
}

namespace {

void fill_point(const StepSet& st, ValueTable<Int>& t, long a, long b) {
  Int acc = 0;
  for (const Step& s : st.steps()) {
    const long pa = a - s[0], pb = b - s[1];
    if (pa < 0 || pb < 0) continue;
    const Point q{pa, pb};
    acc += t[q];
  }
  const Point p{a, b};
  t[p] = std::move(acc);
}

}  // namespace

ValueTable<Int> walk_dp(const StepSet& st, const Point& box, ExecPolicy policy) {
  if (box.size() != 2) throw usage_error("bad-box", "walk tables are two-dimensional");
  ValueTable<Int> t(box);
  t.values()[0] = 1;
  const long na = box[0], nb = box[1];
  if (policy == ExecPolicy::Serial) {
    for (long a = 0; a <= na; ++a)
      for (long b = 0; b <= nb; ++b)
        if (a != 0 || b != 0) fill_point(st, t, a, b);
    return t;
  }
  // Every step raises a + b, so each anti-diagonal depends only on earlier ones.
  for (long s = 1; s <= na + nb; ++s) {
    const long lo = std::max(0L, s - nb), hi = std::min(na, s);
#pragma omp parallel for schedule(static)
    for (long a = lo; a <= hi; ++a) fill_point(st, t, a, s - a);
  }
  return t;
}

Int walk_count(const StepSet& st, long a, long b) {
  if (a < 0 || b < 0) return 0;
  const long window = st.max_dx() + 1;
  std::vector<std::vector<Int>> rows(static_cast<std::size_t>(window), std::vector<Int>(static_cast<std::size_t>(b) + 1));
  auto row = [&](long x) -> std::vector<Int>& { return rows[static_cast<std::size_t>(x % window)]; };
  for (long x = 0; x <= a; ++x) {
    std::vector<Int>& cur = row(x);
    for (long y = 0; y <= b; ++y) {
      Int& v = cur[static_cast<std::size_t>(y)];
      if (x == 0 && y == 0) {
        v = 1;
        continue;
      }
      v = 0;
      for (const Step& s : st.steps()) {
        const long px = x - s[0], py = y - s[1];
        if (px < 0 || py < 0) continue;
        v += row(px)[static_cast<std::size_t>(py)];
      }
    }
  }
  return row(a)[static_cast<std::size_t>(b)];
}

std::vector<Int> walk_diagonal(const StepSet& st, long count) {
  if (count <= 0) return {};
  const ValueTable<Int> t = walk_dp(st, Point{count - 1, count - 1});
  std::vector<Int> out;
  for (long i = 0; i < count; ++i) out.push_back(t[Point{i, i}]);
  return out;
}

}  // namespace purerec
