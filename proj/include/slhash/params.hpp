#ifndef SLHASH_PARAMS_HPP
#define SLHASH_PARAMS_HPP

#include <array>
#include <cstdint>
#include <optional>
#include <string>
#include <vector>

#include "slhash/bigint.hpp"
#include "slhash/errors.hpp"
#include "slhash/group.hpp"
#include "slhash/matrix.hpp"

namespace slhash {

/// Validated parameter set (n, p, a, b, ell) plus the witnesses that prove
/// the congruence constraints hold: q for n >= 4, and the exponent k with
/// ell = 4^k (n = 3) or ell = q^{k+1} + 1 (n >= 4).
struct ParamSet {
  int n = 3;
  BigInt p = 0;
  std::uint64_t a = 4;
  std::uint64_t b = 2;
  std::uint64_t ell = 4;
  std::optional<std::uint64_t> q;  // present iff n >= 4
  std::uint64_t k = 0;

  bool p_fits_u64() const { return p < (BigInt(1) << 63); }
  std::uint64_t p_u64() const { return static_cast<std::uint64_t>(p); }
};

namespace detail {

// largest k with base^k = value exactly, or nullopt
inline std::optional<std::uint64_t> exact_log(std::uint64_t base,
                                              std::uint64_t value) {
  if (value < base) return std::nullopt;
  std::uint64_t k = 0, acc = 1;
  while (acc < value) {
    if (acc > value / base) return std::nullopt;
    acc *= base;
    ++k;
  }
  return acc == value ? std::optional<std::uint64_t>(k) : std::nullopt;
}

}  // namespace detail

/// Checks the constraints of the defining congruences and records witnesses.
/// For n >= 4 the witness prime q ranges over prime divisors of
/// gcd(n-1, a-1, b-1), smallest first; the first q admitting a valid ell
/// wins.
inline ParamSet validate_params(int n, const BigInt& p, std::uint64_t a,
                                std::uint64_t b, std::uint64_t ell) {
  if (n < 3) {
    throw Error(ErrorKind::CongruenceViolated,
                "n must be >= 3 (got " + std::to_string(n) + ")");
  }
  if (!is_prime(p)) {
    throw Error(ErrorKind::NotPrime, "p is not prime");
  }
  if (p < n) {
    throw Error(ErrorKind::PTooSmall,
                "p >= n required so the generators have order p");
  }
  if (a < 2 || b < 2) {
    throw Error(ErrorKind::CongruenceViolated, "a and b must be >= 2");
  }
  if (ell < 2) {
    throw Error(ErrorKind::EllFormViolated, "ell must be >= 2");
  }

  ParamSet ps;
  ps.n = n;
  ps.p = p;
  ps.a = a;
  ps.b = b;
  ps.ell = ell;

  if (n == 3) {
    if (a % 3 != 1) {
      throw Error(ErrorKind::CongruenceViolated,
                  "a == 1 (mod 3) violated: a = " + std::to_string(a));
    }
    if (b % 3 != 2) {
      throw Error(ErrorKind::CongruenceViolated,
                  "b == -1 (mod 3) violated: b = " + std::to_string(b));
    }
    auto k = detail::exact_log(4, ell);
    if (!k) {
      throw Error(ErrorKind::EllFormViolated,
                  "ell = 4^k (k >= 1) violated: ell = " + std::to_string(ell));
    }
    ps.k = *k;
    return ps;
  }

  // n >= 4: find prime q | gcd(n-1, a-1, b-1) admitting ell = q^{k+1}+1
  std::uint64_t g = std::uint64_t(n) - 1;
  auto gcd_u64 = [](std::uint64_t x, std::uint64_t y) {
    while (y) { std::uint64_t t = x % y; x = y; y = t; }
    return x;
  };
  g = gcd_u64(g, a - 1);
  g = gcd_u64(g, b - 1);
  if (ell < 3 * std::uint64_t(n - 1)) {
    throw Error(ErrorKind::EllTooSmall,
                "ell >= 3(n-1) violated: ell = " + std::to_string(ell) +
                    ", need >= " + std::to_string(3 * (n - 1)));
  }
  std::vector<std::uint64_t> qs;
  for (std::uint64_t q = 2; q <= g; ++q) {
    if (g % q == 0 && is_prime_u64(q)) qs.push_back(q);
  }
  if (qs.empty()) {
    throw Error(ErrorKind::CongruenceViolated,
                "no prime q with n == a == b == 1 (mod q)");
  }
  for (std::uint64_t q : qs) {
    auto e = detail::exact_log(q, ell - 1);  // ell - 1 = q^{k+1}
    if (e && *e >= 1) {
      ps.q = q;
      ps.k = *e - 1;
      return ps;
    }
  }
  throw Error(ErrorKind::EllFormViolated,
              "ell = q^{k+1}+1 violated for every admissible q: ell = " +
                  std::to_string(ell));
}

/// The four step matrices A, B, A^-1, B^-1 over Z and over F_p, plus the
/// entry bound c = max |entry| across the four integer matrices.
template <class F>
struct GeneratorSet {
  ParamSet params;
  // order matches Step: A, B, Ainv, Binv
  std::vector<Matrix<F>> fp;
  std::vector<MatrixZ> z;
  BigInt c = 0;

  const Matrix<F>& a() const { return fp[0]; }
  const Matrix<F>& b() const { return fp[1]; }
  const Matrix<F>& a_inv() const { return fp[2]; }
  const Matrix<F>& b_inv() const { return fp[3]; }
};

/// Seed matrices of the construction: unit upper/lower bidiagonal with a
/// (resp. b) on the off-diagonal.
inline MatrixZ seed_upper(int n, std::uint64_t a) {
  MatrixZ m = MatrixZ::identity(ZRing{}, n);
  for (int i = 0; i + 1 < n; ++i) m.at(i, i + 1) = a;
  return m;
}

inline MatrixZ seed_lower(int n, std::uint64_t b) {
  MatrixZ m = MatrixZ::identity(ZRing{}, n);
  for (int i = 0; i + 1 < n; ++i) m.at(i + 1, i) = b;
  return m;
}

template <class F>
GeneratorSet<F> build_generators(const ParamSet& ps, const F& field) {
  if (field.p_big() != ps.p) {
    throw Error(ErrorKind::DimensionMismatch, "field modulus != params.p");
  }
  MatrixZ az = mat_pow(seed_upper(ps.n, ps.a), ps.ell);
  MatrixZ bz = mat_pow(seed_lower(ps.n, ps.b), ps.ell);
  MatrixZ az_inv = mat_inv_z(az);
  MatrixZ bz_inv = mat_inv_z(bz);

  GeneratorSet<F> gs;
  gs.params = ps;
  gs.z = {az, bz, az_inv, bz_inv};
  for (const auto& m : gs.z) {
    BigInt e = max_abs_entry(m);
    if (e > gs.c) gs.c = e;
    gs.fp.push_back(reduce_mod(m, field));
  }
  if (gs.fp[0].is_identity() || gs.fp[1].is_identity()) {
    throw Error(ErrorKind::DegenerateGenerators,
                "A or B reduces to the identity mod p");
  }
  return gs;
}

inline GeneratorSet<Fp64> build_generators_fp64(const ParamSet& ps) {
  if (!ps.p_fits_u64()) {
    throw Error(ErrorKind::GroupTooLarge, "p too large for single-word field");
  }
  return build_generators(ps, Fp64(ps.p_u64()));
}

/// BFS closure check of Theorem-style generation at desk scale. Budget
/// exhaustion is a result, not an error.
inline GenerationResult check_generation(const GeneratorSet<Fp64>& gens,
                                         std::size_t max_elements) {
  GenerationResult res{GenerationStatus::BudgetExceeded, 0,
                       group_order(gens.params.n, gens.params.p), 0};
  Enumeration en = enumerate_closure(gens.fp, max_elements);
  if (!en.complete) {
    res.closure_size = en.size();
    return res;
  }
  res.closure_size = en.size();
  res.diameter = en.diameter;
  res.status = (res.closure_size == res.group_size)
                   ? GenerationStatus::Generates
                   : GenerationStatus::ProperSubgroup;
  return res;
}

}  // namespace slhash

#endif  // SLHASH_PARAMS_HPP
