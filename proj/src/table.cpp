#include "purerec/table.hpp"

#include <sstream>

namespace purerec {

ValueTable<Rat> to_rat(const ValueTable<Int>& t) {
  ValueTable<Rat> r(t.box());
  for (std::size_t i = 0; i < t.size(); ++i) r.values()[i] = t.values()[i];
  return r;
}

namespace {

template <class T>
std::string grid(const ValueTable<T>& t) {
  std::string out;
  if (t.size() == 0) return out;
  const long width = t.box().back() + 1;
  for (std::size_t i = 0; i < t.size(); ++i) {
    const long col = static_cast<long>(i % static_cast<std::size_t>(width));
    if (col > 0) out += ' ';
    out += to_string(t.values()[i]);
    if (col == width - 1) {
      out += '\n';
      // blank line between the 2-D slices of a 3-D table
      if (t.dim() == 3 && (i + 1) % t.stride(0) == 0 && i + 1 < t.size()) out += '\n';
    }
  }
  return out;
}

[[noreturn]] void bad_table(const std::string& what) { throw usage_error("parse-error", "table: " + what); }

std::vector<std::string> words(const std::string& line) {
  std::istringstream in(line);
  std::vector<std::string> out;
  std::string w;
  while (in >> w) out.push_back(w);
  return out;
}

}  // namespace

std::string to_grid(const ValueTable<Rat>& t) { return grid(t); }
std::string to_grid(const ValueTable<Int>& t) { return grid(t); }

std::string write_table(const ValueTable<Rat>& t) {
  std::string out = "table " + std::to_string(t.dim()) + "\nbox";
  for (long b : t.box()) out += " " + std::to_string(b);
  out += "\n";
  const long width = t.box().back() + 1;
  for (std::size_t i = 0; i < t.size(); i += static_cast<std::size_t>(width)) {
    const Point p = t.point(i);
    out += "row";
    for (std::size_t k = 0; k + 1 < p.size(); ++k) out += " " + std::to_string(p[k]);
    out += ":";
    for (long j = 0; j < width; ++j) out += " " + to_string(t.values()[i + static_cast<std::size_t>(j)]);
    out += "\n";
  }
  return out;
}

ValueTable<Rat> read_table(const std::vector<std::string>& lines, std::size_t& pos) {
  if (pos >= lines.size()) bad_table("missing header");
  auto head = words(lines[pos++]);
  if (head.size() != 2 || head[0] != "table") bad_table("expected 'table <d>'");
  const std::size_t d = std::stoul(head[1]);
  if (d == 0 || pos >= lines.size()) bad_table("bad dimension");
  auto box_words = words(lines[pos++]);
  if (box_words.size() != d + 1 || box_words[0] != "box") bad_table("expected 'box' with " + std::to_string(d) + " bounds");
  Point box;
  for (std::size_t k = 1; k <= d; ++k) box.push_back(std::stol(box_words[k]));
  ValueTable<Rat> t(box);
  const long width = box.back() + 1;
  for (std::size_t i = 0; i < t.size(); i += static_cast<std::size_t>(width)) {
    if (pos >= lines.size()) bad_table("missing rows");
    const std::string& line = lines[pos++];
    const auto colon = line.find(':');
    if (colon == std::string::npos) bad_table("row without ':'");
    auto idx = words(line.substr(0, colon));
    auto vals = words(line.substr(colon + 1));
    const Point expect = t.point(i);
    if (idx.size() != d || idx[0] != "row") bad_table("bad row header");
    for (std::size_t k = 0; k + 1 < d; ++k)
      if (std::stol(idx[k + 1]) != expect[k]) bad_table("rows out of order");
    if (vals.size() != static_cast<std::size_t>(width)) bad_table("row has wrong length");
    for (long j = 0; j < width; ++j) t.values()[i + static_cast<std::size_t>(j)] = parse_rat(vals[static_cast<std::size_t>(j)]);
  }
  return t;
}

}  // namespace purerec
