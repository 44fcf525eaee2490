#ifndef SLHASH_FP_HPP
#define SLHASH_FP_HPP

#include <cstdint>
#include <string>
#include <type_traits>

#include "slhash/bigint.hpp"
#include "slhash/errors.hpp"

namespace slhash {

/// Prime field with a single-word modulus, p < 2^63. The modulus is
/// validated once here; elements are plain canonical residues in [0, p).
/// Products are reduced through a 128-bit intermediate, which keeps the
/// hot path branch-free for every modulus this class accepts.
class Fp64 {
 public:
  using value_type = std::uint64_t;
  static constexpr bool is_field = true;

  static constexpr std::uint64_t max_modulus = (1ull << 63) - 1;

  explicit Fp64(std::uint64_t p) : p_(p) {
    if (p > max_modulus) {
      throw Error(ErrorKind::NotPrime,
                  "modulus too large for single-word field; use FpBig");
    }
    if (!is_prime_u64(p)) {
      throw Error(ErrorKind::NotPrime,
                  "modulus " + std::to_string(p) + " is not prime");
    }
  }

  std::uint64_t p() const { return p_; }
  BigInt p_big() const { return BigInt(p_); }

  value_type zero() const { return 0; }
  value_type one() const { return 1 % p_; }

  value_type add(value_type a, value_type b) const {
    value_type s = a + b;  // no overflow: both < 2^63
    return s >= p_ ? s - p_ : s;
  }
  value_type sub(value_type a, value_type b) const {
    return a >= b ? a - b : a + p_ - b;
  }
  value_type neg(value_type a) const { return a == 0 ? 0 : p_ - a; }
  value_type mul(value_type a, value_type b) const {
    return detail::mulmod_u64(a, b, p_);
  }

  value_type inv(value_type a) const {
    if (a == 0) {
      throw Error(ErrorKind::ZeroInverse, "inverse of 0 mod p");
    }
    // extended Euclid on (a, p); p prime guarantees gcd 1
    std::int64_t t = 0, newt = 1;
    std::uint64_t r = p_, newr = a;
    while (newr != 0) {
      std::uint64_t q = r / newr;
      std::int64_t tmpt = t - static_cast<std::int64_t>(q) * newt;
      t = newt;
      newt = tmpt;
      std::uint64_t tmpr = r - q * newr;
      r = newr;
      newr = tmpr;
    }
    return t < 0 ? static_cast<value_type>(t + static_cast<std::int64_t>(p_))
                 : static_cast<value_type>(t);
  }

  value_type pow(value_type base, std::uint64_t e) const {
    return detail::powmod_u64(base, e, p_);
  }

  bool eq(value_type a, value_type b) const { return a == b; }
  bool is_zero(value_type a) const { return a == 0; }

  value_type from_int(std::int64_t v) const {
    std::int64_t m = v % static_cast<std::int64_t>(p_);
    if (m < 0) m += static_cast<std::int64_t>(p_);
    return static_cast<value_type>(m);
  }
  value_type from_big(const BigInt& v) const {
    BigInt m = v % p_;
    if (m < 0) m += p_;
    return static_cast<value_type>(m);
  }
  BigInt to_big(value_type a) const { return BigInt(a); }

  bool operator==(const Fp64& o) const { return p_ == o.p_; }

 private:
  std::uint64_t p_;
};

/// Prime field over an arbitrary-precision modulus. Fallback for p >= 2^63;
/// everything desk-scale runs on Fp64.
class FpBig {
 public:
  using value_type = BigInt;
  static constexpr bool is_field = true;

  explicit FpBig(BigInt p) : p_(std::move(p)) {
    if (!is_prime(p_)) {
      throw Error(ErrorKind::NotPrime, "modulus is not prime");
    }
  }

  const BigInt& p() const { return p_; }
  BigInt p_big() const { return p_; }

  value_type zero() const { return 0; }
  value_type one() const { return 1; }

  value_type add(const value_type& a, const value_type& b) const {
    BigInt s = a + b;
    if (s >= p_) s -= p_;
    return s;
  }
  value_type sub(const value_type& a, const value_type& b) const {
    BigInt s = a - b;
    if (s < 0) s += p_;
    return s;
  }
  value_type neg(const value_type& a) const { return a == 0 ? BigInt(0) : p_ - a; }
  value_type mul(const value_type& a, const value_type& b) const {
    return a * b % p_;
  }
  value_type inv(const value_type& a) const {
    if (a == 0) {
      throw Error(ErrorKind::ZeroInverse, "inverse of 0 mod p");
    }
    return boost::multiprecision::powm(a, p_ - 2, p_);
  }
  value_type pow(const value_type& base, const BigInt& e) const {
    return boost::multiprecision::powm(base, e, p_);
  }

  bool eq(const value_type& a, const value_type& b) const { return a == b; }
  bool is_zero(const value_type& a) const { return a == 0; }

  value_type from_int(std::int64_t v) const { return from_big(BigInt(v)); }
  value_type from_big(const BigInt& v) const {
    BigInt m = v % p_;
    if (m < 0) m += p_;
    return m;
  }
  BigInt to_big(const value_type& a) const { return a; }

  bool operator==(const FpBig& o) const { return p_ == o.p_; }

 private:
  BigInt p_;
};

/// The ring of integers with arbitrary-precision entries.
struct ZRing {
  using value_type = BigInt;
  static constexpr bool is_field = false;

  value_type zero() const { return 0; }
  value_type one() const { return 1; }
  value_type add(const value_type& a, const value_type& b) const { return a + b; }
  value_type sub(const value_type& a, const value_type& b) const { return a - b; }
  value_type neg(const value_type& a) const { return -a; }
  value_type mul(const value_type& a, const value_type& b) const { return a * b; }
  bool eq(const value_type& a, const value_type& b) const { return a == b; }
  bool is_zero(const value_type& a) const { return a == 0; }
  value_type from_int(std::int64_t v) const { return BigInt(v); }
  value_type from_big(const BigInt& v) const { return v; }
  BigInt to_big(const value_type& a) const { return a; }
  bool operator==(const ZRing&) const { return true; }
};

}  // namespace slhash

#endif  // SLHASH_FP_HPP
