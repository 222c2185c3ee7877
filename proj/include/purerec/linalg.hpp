#pragma once

#include <span>
#include <vector>

#include "purerec/arith.hpp"
#include "purerec/exec.hpp"

namespace purerec {

using RatVector = std::vector<Rat>;
using RatMatrix = std::vector<RatVector>;

/// Right nullspace of `m` (rows of length `cols`) over Q.
///
/// The basis is the reduced-echelon one: one vector per non-pivot column f,
/// with entry 1 at f and 0 at every other non-pivot column. It is computed
/// by Gauss-Jordan elimination modulo a sequence of 62-bit primes, lifted by
/// Chinese remaindering and rational reconstruction, and then certified:
/// every returned vector is checked to satisfy m*v = 0 exactly, and since the
/// rank over Q is never smaller than the rank mod p, the dimension is exact
/// too. If certification does not succeed within the prime budget the
/// rational Gauss-Jordan route below is used instead.
std::vector<RatVector> nullspace_exact(const RatMatrix& m, std::size_t cols,
                                       ExecPolicy policy = ExecPolicy::Parallel);
std::vector<RatVector> nullspace_exact(const RatMatrix& m);

/// Reference route: Gauss-Jordan over Q, pivot row chosen by smallest bit size.
std::vector<RatVector> nullspace_gauss(const RatMatrix& m, std::size_t cols);

/// Exact check of m*v = 0.
bool annihilates(const RatMatrix& m, std::span<const Rat> v);

}  // namespace purerec
