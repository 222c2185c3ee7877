#pragma once

#include <span>
#include <string>
#include <string_view>
#include <vector>

#include "purerec/arith.hpp"
#include "purerec/error.hpp"

namespace purerec {

using Point = std::vector<long>;

/// Exact values on the lattice box [0, box_1] x ... x [0, box_d], stored
/// densely in row-major order (the last axis varies fastest).
template <class T>
class ValueTable {
 public:
  ValueTable() = default;
  explicit ValueTable(Point box) : box_(std::move(box)), strides_(box_.size()) {
    std::size_t n = 1;
    for (std::size_t k = box_.size(); k-- > 0;) {
      if (box_[k] < 0) throw usage_error("bad-box", "negative box bound");
      strides_[k] = n;
      n *= static_cast<std::size_t>(box_[k] + 1);
    }
    values_.resize(box_.empty() ? 0 : n);
  }

  std::size_t dim() const { return box_.size(); }
  const Point& box() const { return box_; }
  std::size_t size() const { return values_.size(); }
  std::size_t stride(std::size_t k) const { return strides_[k]; }

  bool contains(std::span<const long> p) const {
    if (p.size() != box_.size()) return false;
    for (std::size_t k = 0; k < p.size(); ++k)
      if (p[k] < 0 || p[k] > box_[k]) return false;
    return true;
  }

  std::size_t index(std::span<const long> p) const {
    std::size_t i = 0;
    for (std::size_t k = 0; k < p.size(); ++k) i += static_cast<std::size_t>(p[k]) * strides_[k];
    return i;
  }

  Point point(std::size_t index) const {
    Point p(box_.size());
    for (std::size_t k = 0; k < box_.size(); ++k) {
      p[k] = static_cast<long>(index / strides_[k]);
      index %= strides_[k];
    }
    return p;
  }

  const T& at(std::span<const long> p) const {
    if (!contains(p)) throw usage_error("outside-table", "point outside the table box");
    return values_[index(p)];
  }
  T& at(std::span<const long> p) {
    if (!contains(p)) throw usage_error("outside-table", "point outside the table box");
    return values_[index(p)];
  }
  const T& operator[](std::span<const long> p) const { return values_[index(p)]; }
  T& operator[](std::span<const long> p) { return values_[index(p)]; }

  const std::vector<T>& values() const { return values_; }
  std::vector<T>& values() { return values_; }

  /// Copy of the sub-box [0, sub] (sub must fit inside this box).
  ValueTable restrict(const Point& sub) const {
    ValueTable out(sub);
    for (std::size_t i = 0; i < out.size(); ++i) out.values_[i] = at(out.point(i));
    return out;
  }

  friend bool operator==(const ValueTable& a, const ValueTable& b) {
    return a.box_ == b.box_ && a.values_ == b.values_;
  }

 private:
  Point box_;
  std::vector<std::size_t> strides_;
  std::vector<T> values_;
};

ValueTable<Rat> to_rat(const ValueTable<Int>& t);

/// Plain grid: one line per row (last axis along the line), values separated
/// by single spaces; for d = 3 the slices are separated by blank lines.
std::string to_grid(const ValueTable<Rat>& t);
std::string to_grid(const ValueTable<Int>& t);

/// Structured block used inside scheme files:
///   table <d>
///   box <b1> ... <bd>
///   row <i1> ... <i_{d-1}>: v v v ...
std::string write_table(const ValueTable<Rat>& t);
/// Parses the block written by write_table starting at `lines[pos]`; advances pos.
ValueTable<Rat> read_table(const std::vector<std::string>& lines, std::size_t& pos);

}  // namespace purerec
