#pragma once

#include <cstdint>

namespace flagorbit {

/// Arithmetic mod a prime p < 2^31: every product of two reduced residues
/// fits in a signed 64-bit without overflow.

constexpr std::int64_t mod_reduce(std::int64_t a, std::int64_t p) {
  a %= p;
  return a < 0 ? a + p : a;
}

constexpr std::int64_t mulmod(std::int64_t a, std::int64_t b, std::int64_t p) {
  return mod_reduce(a, p) * mod_reduce(b, p) % p;
}

constexpr std::int64_t powmod(std::int64_t base, std::int64_t exp, std::int64_t p) {
  std::int64_t acc = 1 % p;
  base = mod_reduce(base, p);
  for (; exp > 0; exp >>= 1) {
    if (exp & 1) acc = acc * base % p;
    base = base * base % p;
  }
  return acc;
}

/// Inverse of a nonzero residue mod prime p (Fermat).
constexpr std::int64_t invmod(std::int64_t a, std::int64_t p) {
  return powmod(a, p - 2, p);
}

/// Deterministic Miller-Rabin, exact for every 63-bit input.
constexpr bool is_prime(std::int64_t n) {
  if (n < 2) return false;
  for (std::int64_t q : {2, 3, 5, 7, 11, 13, 17, 19, 23, 29, 31, 37}) {
    if (n == q) return true;
    if (n % q == 0) return false;
  }
  std::int64_t d = n - 1;
  int s = 0;
  while ((d & 1) == 0) {
    d >>= 1;
    ++s;
  }
  // Exact for n < 3.3 * 10^24 with these twelve bases; mulmod via unsigned
  // 128-bit keeps intermediate products exact for any 63-bit n.
  const auto mul = [n](std::int64_t a, std::int64_t b) {
    return static_cast<std::int64_t>(static_cast<unsigned __int128>(a) * b % n);
  };
  for (std::int64_t a : {2, 3, 5, 7, 11, 13, 17, 19, 23, 29, 31, 37}) {
    std::int64_t x = 1;
    for (std::int64_t e = d, base = a % n; e > 0; e >>= 1) {
      if (e & 1) x = mul(x, base);
      base = mul(base, base);
    }
    if (x == 1 || x == n - 1) continue;
    bool witness = true;
    for (int i = 1; i < s && witness; ++i) {
      x = mul(x, x);
      if (x == n - 1) witness = false;
    }
    if (witness) return false;
  }
  return true;
}

/// splitmix64: tiny,  statistically solid, and trivially seedable; one copy
/// per sampling context keeps every draw independent of call order.
struct SplitMix64 {
  std::uint64_t state;

  constexpr explicit SplitMix64(std::uint64_t seed) : state(seed) {}

  constexpr std::uint64_t next() {
    std::uint64_t z = (state += 0x9e3779b97f4a7c15ull);
    z = (z ^ (z >> 30)) * 0xbf58476d1ce4e5b9ull;
    z = (z ^ (z >> 27)) * 0x94d049bb133111ebull;
    return z ^ (z >> 31);
  }

  /// Uniform residue in [0, p).  The modulo bias is < 2^-32 for p < 2^31;
  /// irrelevant for rank sampling and keeps the draw count deterministic.
  constexpr std::int64_t below(std::int64_t p) {
    return static_cast<std::int64_t>(next() % static_cast<std::uint64_t>(p));
  }
};

/// Forks a child stream so that (seed, key) pairs never collide across
/// nesting levels.
constexpr std::uint64_t fork_seed(std::uint64_t seed, std::uint64_t key) {
  SplitMix64 g(seed ^ (key * 0xd1342543de82ef95ull + 0x2545f4914f6cdd1dull));
  return g.next();
}

}  // namespace flagorbit
