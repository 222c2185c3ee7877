#include "purerec/linalg.hpp"

#include <algorithm>

#include "purerec/error.hpp"
#include "purerec/modular.hpp"

namespace purerec {

namespace {

constexpr std::size_t kMaxPrimes = 160;

using IntMatrix = std::vector<std::vector<Int>>;

IntMatrix clear_row_denominators(const RatMatrix& m, std::size_t cols) {
  IntMatrix z(m.size(), std::vector<Int>(cols));
  for (std::size_t i = 0; i < m.size(); ++i) {
    if (m[i].size() != cols) throw usage_error("ragged-matrix", "row length differs from column count");
    const Int l = common_denominator(m[i]);
    for (std::size_t j = 0; j < cols; ++j) z[i][j] = m[i][j].get_num() * (l / m[i][j].get_den());
  }
  return z;
}

bool annihilates_int(const IntMatrix& z, std::span<const Rat> v) {
  const Int l = common_denominator(v);
  std::vector<Int> w(v.size());
  for (std::size_t j = 0; j < v.size(); ++j) w[j] = v[j].get_num() * (l / v[j].get_den());
  Int acc;
  for (const auto& row : z) {
    acc = 0;
    for (std::size_t j = 0; j < w.size(); ++j)
      if (w[j] != 0 && row[j] != 0) mpz_addmul(acc.get_mpz_t(), row[j].get_mpz_t(), w[j].get_mpz_t());
    if (acc != 0) return false;
  }
  return true;
}

std::vector<RatVector> identity_basis(std::size_t cols) {
  std::vector<RatVector> basis(cols, RatVector(cols));
  for (std::size_t i = 0; i < cols; ++i) basis[i][i] = 1;
  return basis;
}

}  // namespace

bool annihilates(const RatMatrix& m, std::span<const Rat> v) {
  Rat acc;
  for (const auto& row : m) {
    if (row.size() != v.size()) return false;
    acc = 0;
    for (std::size_t j = 0; j < v.size(); ++j)
      if (v[j] != 0) acc += row[j] * v[j];
    if (acc != 0) return false;
  }
  return true;
}

std::vector<RatVector> nullspace_exact(const RatMatrix& m) {
  return nullspace_exact(m, m.empty() ? 0 : m.front().size());
}

std::vector<RatVector> nullspace_exact(const RatMatrix& m, std::size_t cols, ExecPolicy policy) {
  using namespace modular;
  if (cols == 0) return {};
  if (m.empty()) return identity_basis(cols);
  const IntMatrix z = clear_row_denominators(m, cols);

  std::size_t best_rank = 0;
  std::vector<std::size_t> best_pivots;
  bool have_pattern = false;
  // residues of the pivot-column entries of every basis vector
  std::vector<std::vector<Int>> lifted;
  std::vector<std::size_t> free_cols;
  Int modulus = 1;
  std::vector<RatVector> previous;

  for (std::size_t t = 0; t < kMaxPrimes; ++t) {
    const u64 p = prime(t);
    Matrix mm(z.size(), cols);
    for (std::size_t i = 0; i < z.size(); ++i)
      for (std::size_t j = 0; j < cols; ++j) mm.row(i)[j] = reduce(z[i][j], p);
    const Rref r = rref(std::move(mm), p, policy);
    if (r.rank() == cols) return {};  // nullity over Q <= nullity mod p = 0

    const bool better = !have_pattern || r.rank() > best_rank ||
                        (r.rank() == best_rank && r.pivots < best_pivots);
    if (!better && r.pivots != best_pivots) continue;  // unlucky prime
    const auto basis = nullspace_basis(r, p);
    if (better) {
      have_pattern = true;
      best_rank = r.rank();
      best_pivots = r.pivots;
      free_cols.clear();
      std::vector<bool> is_pivot(cols, false);
      for (std::size_t c : r.pivots) is_pivot[c] = true;
      for (std::size_t c = 0; c < cols; ++c)
        if (!is_pivot[c]) free_cols.push_back(c);
      lifted.assign(basis.size(), std::vector<Int>(r.pivots.size()));
      for (std::size_t b = 0; b < basis.size(); ++b)
        for (std::size_t i = 0; i < r.pivots.size(); ++i)
          lifted[b][i] = Int(static_cast<unsigned long>(basis[b][r.pivots[i]]));
      modulus = Int(static_cast<unsigned long>(p));
      previous.clear();
    } else {
      const u64 m_mod_p = reduce(modulus, p);
      const u64 m_inv = inverse(m_mod_p, p);
      for (std::size_t b = 0; b < basis.size(); ++b) {
        for (std::size_t i = 0; i < r.pivots.size(); ++i) {
          Int& x = lifted[b][i];
          const u64 delta = mul(sub(basis[b][r.pivots[i]], reduce(x, p), p), m_inv, p);
          x += modulus * static_cast<unsigned long>(delta);
        }
      }
      modulus *= static_cast<unsigned long>(p);
    }

    std::vector<RatVector> candidate;
    bool ok = true;
    for (std::size_t b = 0; b < lifted.size() && ok; ++b) {
      RatVector v(cols);
      v[free_cols[b]] = 1;
      for (std::size_t i = 0; i < best_pivots.size() && ok; ++i)
        ok = rational_reconstruct(lifted[b][i], modulus, v[best_pivots[i]]);
      candidate.push_back(std::move(v));
    }
    if (!ok) continue;
    // Verify only once the reconstruction has stabilised across two primes.
    if (candidate == previous) {
      const bool certified = std::all_of(candidate.begin(), candidate.end(),
                                         [&](const RatVector& v) { return annihilates_int(z, v); });
      if (certified) return candidate;
    }
    previous = std::move(candidate);
  }
  return nullspace_gauss(m, cols);
}

std::vector<RatVector> nullspace_gauss(const RatMatrix& m, std::size_t cols) {
  if (cols == 0) return {};
  RatMatrix a = m;
  for (const auto& row : a)
    if (row.size() != cols) throw usage_error("ragged-matrix", "row length differs from column count");
  std::vector<std::size_t> pivots;
  std::size_t r = 0;
  for (std::size_t c = 0; c < cols && r < a.size(); ++c) {
    std::size_t piv = a.size();
    std::size_t piv_size = 0;
    for (std::size_t i = r; i < a.size(); ++i) {
      if (a[i][c] == 0) continue;
      const std::size_t s = bit_size(a[i][c]);
      if (piv == a.size() || s < piv_size) {
        piv = i;
        piv_size = s;
      }
    }
    if (piv == a.size()) continue;
    std::swap(a[r], a[piv]);
    const Rat inv = 1 / a[r][c];
    for (std::size_t k = c; k < cols; ++k) a[r][k] *= inv;
    for (std::size_t i = 0; i < a.size(); ++i) {
      if (i == r || a[i][c] == 0) continue;
      const Rat f = a[i][c];
      for (std::size_t k = c; k < cols; ++k)
        if (a[r][k] != 0) a[i][k] -= f * a[r][k];
    }
    pivots.push_back(c);
    ++r;
  }
  std::vector<bool> is_pivot(cols, false);
  for (std::size_t c : pivots) is_pivot[c] = true;
  std::vector<RatVector> basis;
  for (std::size_t f = 0; f < cols; ++f) {
    if (is_pivot[f]) continue;
    RatVector v(cols);
    v[f] = 1;
    for (std::size_t i = 0; i < pivots.size(); ++i) v[pivots[i]] = -a[i][f];
    basis.push_back(std::move(v));
  }
  return basis;
}

}  // namespace purerec
