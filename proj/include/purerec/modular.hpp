#pragma once

// Arithmetic modulo 62-bit primes and Gauss-Jordan elimination over F_p.
// Used to screen and solve large exact systems by multi-modular lifting.

#include <cstdint>
#include <vector>

#include "purerec/arith.hpp"
#include "purerec/exec.hpp"

namespace purerec::modular {

using u64 = std::uint64_t;

/// The i-th prime below 2^62 (descending), generated on demand.
u64 prime(std::size_t i);

inline u64 mul(u64 a, u64 b, u64 p) {
  return static_cast<u64>((static_cast<unsigned __int128>(a) * b) % p);
}
inline u64 add(u64 a, u64 b, u64 p) {
  const u64 s = a + b;
  return s >= p ? s - p : s;
}
inline u64 sub(u64 a, u64 b, u64 p) { return a >= b ? a - b : a + p - b; }
u64 inverse(u64 a, u64 p);

/// Residue of an integer; throws "unlucky-prime" for a rational whose
/// denominator vanishes mod p.
u64 reduce(const Int& v, u64 p);
u64 reduce(const Rat& v, u64 p);

/// Dense row-major matrix over F_p.
struct Matrix {
  std::size_t rows = 0;
  std::size_t cols = 0;
  std::vector<u64> data;

  Matrix() = default;
  Matrix(std::size_t r, std::size_t c) : rows(r), cols(c), data(r * c, 0) {}
  u64* row(std::size_t i) { return data.data() + i * cols; }
  const u64* row(std::size_t i) const { return data.data() + i * cols; }
};

/// Reduced row echelon form: the first `pivots.size()` rows of `reduced`
/// hold the nonzero rows, pivots[r] is the pivot column of row r.
struct Rref {
  Matrix reduced;
  std::vector<std::size_t> pivots;
  std::size_t rank() const { return pivots.size(); }
};

Rref rref(Matrix m, u64 p, ExecPolicy policy = ExecPolicy::Parallel);

/// Rank only (forward elimination, stops early at full column rank).
std::size_t rank(Matrix m, u64 p, ExecPolicy policy = ExecPolicy::Parallel);

/// Nullspace basis from an RREF: one vector per free column f, with a 1 at f.
std::vector<std::vector<u64>> nullspace_basis(const Rref& r, u64 p);

/// Rational reconstruction of u mod m with |num|, den <= sqrt(m/2).
/// Returns false when no such fraction exists.
bool rational_reconstruct(const Int& u, const Int& m, Rat& out);

}  // namespace purerec::modular
