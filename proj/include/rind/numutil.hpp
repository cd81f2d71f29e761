#ifndef RIND_NUMUTIL_HPP
#define RIND_NUMUTIL_HPP

#include <cstdint>
#include <random>
#include <stdexcept>
#include <vector>

namespace rind {

using u64 = std::uint64_t;
using i64 = std::int64_t;

namespace detail {

inline u64 mulmod(u64 a, u64 b, u64 m) {
  return static_cast<u64>((static_cast<unsigned __int128>(a) * b) % m);
}

inline u64 powmod(u64 a, u64 e, u64 m) {
  u64 r = 1 % m;
  a %= m;
  while (e) {
    if (e & 1) r = mulmod(r, a, m);
    a = mulmod(a, a, m);
    e >>= 1;
  }
  return r;
}

// inverse of a mod m, gcd(a, m) = 1 required
inline u64 invmod(u64 a, u64 m) {
  i64 t = 0, nt = 1;
  i64 r = static_cast<i64>(m), nr = static_cast<i64>(a % m);
  while (nr != 0) {
    i64 q = r / nr;
    i64 tmp = t - q * nt; t = nt; nt = tmp;
    tmp = r - q * nr; r = nr; nr = tmp;
  }
  if (r != 1) throw std::domain_error("invmod: argument not a unit");
  if (t < 0) t += static_cast<i64>(m);
  return static_cast<u64>(t);
}

// p-adic valuation of n; val(0) is reported as a large sentinel
inline int valp(u64 n, u64 p) {
  if (n == 0) return 1 << 20;
  int v = 0;
  while (n % p == 0) { n /= p; ++v; }
  return v;
}

inline int valp_factorial(u64 n, u64 p) {
  int v = 0;
  for (u64 q = p; q <= n; q *= p) {
    v += static_cast<int>(n / q);
    if (q > n / p) break;
  }
  return v;
}

inline u64 ipow(u64 b, unsigned e) {
  u64 r = 1;
  while (e--) r *= b;
  return r;
}

inline bool is_prime(u64 n) {
  if (n < 2) return false;
  for (u64 d = 2; d * d <= n; ++d)
    if (n % d == 0) return false;
  return true;
}

// row-reduction rank over F_p; rows entries already reduced mod p
inline int fp_rank(std::vector<std::vector<u64>> rows, u64 p) {
  const std::size_t nr = rows.size();
  if (nr == 0) return 0;
  const std::size_t nc = rows[0].size();
  int rank = 0;
  std::size_t lead = 0;
  for (std::size_t col = 0; col < nc && lead < nr; ++col) {
    std::size_t piv = lead;
    while (piv < nr && rows[piv][col] % p == 0) ++piv;
    if (piv == nr) continue;
    std::swap(rows[piv], rows[lead]);
    const u64 inv = invmod(rows[lead][col] % p, p);
    for (std::size_t r = 0; r < nr; ++r) {
      if (r == lead) continue;
      const u64 f = mulmod(rows[r][col] % p, inv, p);
      if (f == 0) continue;
      for (std::size_t c = col; c < nc; ++c) {
        const u64 sub = mulmod(f, rows[lead][c] % p, p);
        rows[r][c] = (rows[r][c] % p + p - sub) % p;
      }
    }
    ++lead;
    ++rank;
  }
  return rank;
}

} // namespace detail

// binomial with u64 range checks; exact for everything in scope (d <= 28)
inline u64 binomial(int n, int k) {
  if (k < 0 || n < 0 || k > n) return 0;
  if (k > n - k) k = n - k;
  u64 r = 1;
  for (int i = 1; i <= k; ++i) {
    // multiply first, divide after: product of i consecutive integers is divisible by i!
    r = r * static_cast<u64>(n - k + i) / static_cast<u64>(i);
  }
  return r;
}

// deterministic stream splitting: same (seed, tags...) gives the same engine everywhere
inline u64 mix_seed(u64 seed, u64 tag_a, u64 tag_b = 0) {
  u64 z = seed ^ (tag_a * 0x9e3779b97f4a7c15ull) ^ (tag_b * 0xbf58476d1ce4e5b9ull);
  z ^= z >> 30; z *= 0xbf58476d1ce4e5b9ull;
  z ^= z >> 27; z *= 0x94d049bb133111ebull;
  z ^= z >> 31;
  return z;
}

// uniform in [0, bound) by rejection; std::uniform_int_distribution is not
// reproducible across standard libraries, this is
inline u64 uniform_below(std::mt19937_64& eng, u64 bound) {
  if (bound == 0) throw std::invalid_argument("uniform_below: empty range");
  const u64 limit = ~u64{0} - (~u64{0} % bound);
  u64 v;
  do { v = eng(); } while (v >= limit);
  return v % bound;
}

} // namespace rind

#endif
