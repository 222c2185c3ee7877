#include "purerec/modular.hpp"

#include <algorithm>
#include <mutex>

#include "purerec/error.hpp"

#ifdef _OPENMP
#include <omp.h>
#endif

namespace purerec {

int parallel_threads() {
#ifdef _OPENMP
  return omp_get_max_threads();
#else
  return 1;
#endif
}

namespace modular {

u64 prime(std::size_t i) {
  static std::mutex mu;
  static std::vector<u64> primes;
  std::lock_guard<std::mutex> lock(mu);
  if (primes.empty()) primes.reserve(256);
  u64 candidate = primes.empty() ? (u64{1} << 62) - 1 : primes.back() - 2;
  while (primes.size() <= i) {
    Int c(static_cast<unsigned long>(candidate));
    if (mpz_probab_prime_p(c.get_mpz_t(), 30) != 0) primes.push_back(candidate);
    candidate -= 2;
  }
  return primes[i];
}

u64 inverse(u64 a, u64 p) {
  // extended Euclid on signed 128-bit values
  __int128 t = 0, new_t = 1;
  __int128 r = p, new_r = a % p;
  while (new_r != 0) {
    const __int128 q = r / new_r;
    const __int128 tt = t - q * new_t;
    t = new_t;
    new_t = tt;
    const __int128 rr = r - q * new_r;
    r = new_r;
    new_r = rr;
  }
  if (r != 1) throw Error(ErrorKind::Internal, "not-invertible", "residue has no inverse");
  if (t < 0) t += p;
  return static_cast<u64>(t);
}

u64 reduce(const Int& v, u64 p) {
  static_assert(sizeof(unsigned long) == sizeof(u64));
  return mpz_fdiv_ui(v.get_mpz_t(), p);
}

u64 reduce(const Rat& v, u64 p) {
  const u64 den = mpz_fdiv_ui(v.get_den_mpz_t(), p);
  if (den == 0) throw Error(ErrorKind::Internal, "unlucky-prime", "denominator divisible by p");
  const u64 num = mpz_fdiv_ui(v.get_num_mpz_t(), p);
  return den == 1 ? num : mul(num, inverse(den, p), p);
}

namespace {

void swap_rows(Matrix& m, std::size_t a, std::size_t b) {
  if (a == b) return;
  std::swap_ranges(m.row(a), m.row(a) + m.cols, m.row(b));
}

// row(i) -= f * row(r) on columns [from, cols)
inline void axpy(Matrix& m, std::size_t i, std::size_t r, std::size_t from, u64 p) {
  u64* dst = m.row(i);
  const u64 f = dst[from];
  if (f == 0) return;
  const u64* src = m.row(r);
  for (std::size_t k = from; k < m.cols; ++k)
    if (src[k] != 0) dst[k] = sub(dst[k], mul(f, src[k], p), p);
}

void eliminate(Matrix& m, std::size_t r, std::size_t c, std::size_t begin, u64 p, ExecPolicy policy) {
  const auto rows = static_cast<long>(m.rows);
  if (policy == ExecPolicy::Parallel) {
#pragma omp parallel for schedule(static)
    for (long i = static_cast<long>(begin); i < rows; ++i)
      if (static_cast<std::size_t>(i) != r) axpy(m, static_cast<std::size_t>(i), r, c, p);
  } else {
    for (long i = static_cast<long>(begin); i < rows; ++i)
      if (static_cast<std::size_t>(i) != r) axpy(m, static_cast<std::size_t>(i), r, c, p);
  }
}

bool select_pivot(Matrix& m, std::size_t r, std::size_t c, u64 p) {
  std::size_t piv = r;
  while (piv < m.rows && m.row(piv)[c] == 0) ++piv;
  if (piv == m.rows) return false;
  swap_rows(m, r, piv);
  const u64 inv = inverse(m.row(r)[c], p);
  u64* row = m.row(r);
  for (std::size_t k = c; k < m.cols; ++k) row[k] = mul(row[k], inv, p);
  return true;
}

}  // namespace

Rref rref(Matrix m, u64 p, ExecPolicy policy) {
  Rref out;
  std::size_t r = 0;
  for (std::size_t c = 0; c < m.cols && r < m.rows; ++c) {
    if (!select_pivot(m, r, c, p)) continue;
    eliminate(m, r, c, 0, p, policy);
    out.pivots.push_back(c);
    ++r;
  }
  out.reduced = std::move(m);
  return out;
}

std::size_t rank(Matrix m, u64 p, ExecPolicy policy) {
  std::size_t r = 0;
  for (std::size_t c = 0; c < m.cols && r < m.rows; ++c) {
    if (!select_pivot(m, r, c, p)) continue;
    eliminate(m, r, c, r + 1, p, policy);
    ++r;
  }
  return r;
}

std::vector<std::vector<u64>> nullspace_basis(const Rref& r, u64 p) {
  const std::size_t n = r.reduced.cols;
  std::vector<bool> is_pivot(n, false);
  for (std::size_t c : r.pivots) is_pivot[c] = true;
  std::vector<std::vector<u64>> basis;
  for (std::size_t f = 0; f < n; ++f) {
    if (is_pivot[f]) continue;
    std::vector<u64> v(n, 0);
    v[f] = 1;
    for (std::size_t i = 0; i < r.pivots.size(); ++i) {
      const u64 x = r.reduced.row(i)[f];
      v[r.pivots[i]] = x == 0 ? 0 : p - x;
    }
    basis.push_back(std::move(v));
  }
  return basis;
}

bool rational_reconstruct(const Int& u, const Int& m, Rat& out) {
  Int bound;
  mpz_fdiv_q_2exp(bound.get_mpz_t(), m.get_mpz_t(), 1);
  mpz_sqrt(bound.get_mpz_t(), bound.get_mpz_t());
  Int r0 = m, r1 = u % m;
  if (r1 < 0) r1 += m;
  Int t0 = 0, t1 = 1, q, tmp;
  while (r1 > bound) {
    mpz_fdiv_q(q.get_mpz_t(), r0.get_mpz_t(), r1.get_mpz_t());
    tmp = r0 - q * r1;
    r0 = r1;
    r1 = tmp;
    tmp = t0 - q * t1;
    t0 = t1;
    t1 = tmp;
  }
  if (abs(t1) > bound || t1 == 0) return false;
  if (gcd(r1, t1) != 1) return false;
  out = rat_canon(r1, t1);
  return true;
}

}  // namespace modular
}  // namespace purerec
