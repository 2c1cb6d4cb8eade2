#pragma once

#include <cstdint>
#include <stdexcept>
#include <vector>

namespace ginv {

// Arithmetic in F_p for p < 2^32.

inline std::uint64_t mulmod(std::uint64_t a, std::uint64_t b, std::uint64_t p) { return a * b % p; }

inline std::uint64_t powmod(std::uint64_t base, std::uint64_t e, std::uint64_t p) {
  std::uint64_t acc = 1 % p;
  base %= p;
  while (e) {
    if (e & 1) acc = acc * base % p;
    base = base * base % p;
    e >>= 1;
  }
  return acc;
}

inline std::uint64_t invmod(std::uint64_t a, std::uint64_t p) {
  if (a % p == 0) throw std::domain_error("invmod: zero has no inverse");
  return powmod(a, p - 2, p);
}

inline std::vector<std::uint64_t> prime_factors(std::uint64_t n) {
  std::vector<std::uint64_t> out;
  for (std::uint64_t d = 2; d * d <= n; ++d) {
    if (n % d) continue;
    out.push_back(d);
    while (n % d == 0) n /= d;
  }
  if (n > 1) out.push_back(n);
  return out;
}

/// Least primitive root modulo the prime p.
inline std::uint64_t primitive_root(std::uint64_t p) {
  if (p == 2) return 1;
  auto factors = prime_factors(p - 1);
  for (std::uint64_t g = 2; g < p; ++g) {
    bool ok = true;
    for (auto q : factors) ok = ok && powmod(g, (p - 1) / q, p) != 1;
    if (ok) return g;
  }
  throw std::logic_error("primitive_root: none found");
}

}  // namespace ginv
