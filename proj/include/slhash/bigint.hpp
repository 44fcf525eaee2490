#ifndef SLHASH_BIGINT_HPP
#define SLHASH_BIGINT_HPP

#include <boost/multiprecision/cpp_int.hpp>
#include <boost/multiprecision/miller_rabin.hpp>
#include <cstdint>

namespace slhash {

/// Arbitrary-precision signed integer. Integer matrices grow like (nc)^k
/// with word length, so fixed-width entries are not an option anywhere in
/// the freeness/girth analysis.
using BigInt = boost::multiprecision::cpp_int;

namespace detail {

inline std::uint64_t mulmod_u64(std::uint64_t a, std::uint64_t b,
                                std::uint64_t m) {
  return static_cast<std::uint64_t>(
      static_cast<unsigned __int128>(a) * b % m);
}

inline std::uint64_t powmod_u64(std::uint64_t base, std::uint64_t exp,
                                std::uint64_t m) {
  std::uint64_t r = 1 % m;
  base %= m;
  while (exp) {
    if (exp & 1) r = mulmod_u64(r, base, m);
    base = mulmod_u64(base, base, m);
    exp >>= 1;
  }
  return r;
}

}  // namespace detail

/// Deterministic Miller-Rabin for 64-bit inputs; the base set below is a
/// proven witness set for everything under 3.3 * 10^24.
inline bool is_prime_u64(std::uint64_t x) {
  if (x < 2) return false;
  for (std::uint64_t q : {2ull, 3ull, 5ull, 7ull, 11ull, 13ull, 17ull, 19ull,
                          23ull, 29ull, 31ull, 37ull}) {
    if (x == q) return true;
    if (x % q == 0) return false;
  }
  std::uint64_t d = x - 1;
  int s = 0;
  while ((d & 1) == 0) {
    d >>= 1;
    ++s;
  }
  for (std::uint64_t a : {2ull, 3ull, 5ull, 7ull, 11ull, 13ull, 17ull, 19ull,
                          23ull, 29ull, 31ull, 37ull}) {
    std::uint64_t v = detail::powmod_u64(a, d, x);
    if (v == 1 || v == x - 1) continue;
    bool composite = true;
    for (int i = 1; i < s; ++i) {
      v = detail::mulmod_u64(v, v, x);
      if (v == x - 1) {
        composite = false;
        break;
      }
    }
    if (composite) return false;
  }
  return true;
}

inline bool is_prime(const BigInt& x) {
  if (x <= std::uint64_t(-1)) {
    return x >= 0 && is_prime_u64(static_cast<std::uint64_t>(x));
  }
  return boost::multiprecision::miller_rabin_test(x, 32);
}

/// Number of bytes in the big-endian representation of a non-negative
/// integer; zero encodes in one byte.
inline std::size_t byte_length(const BigInt& x) {
  if (x == 0) return 1;
  std::size_t bits = boost::multiprecision::msb(x) + 1;
  return (bits + 7) / 8;
}

}  // namespace slhash

#endif  // SLHASH_BIGINT_HPP
