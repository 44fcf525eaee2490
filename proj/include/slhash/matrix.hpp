#ifndef SLHASH_MATRIX_HPP
#define SLHASH_MATRIX_HPP

#include <cstdint>
#include <string>
#include <utility>
#include <vector>

#include "slhash/bigint.hpp"
#include "slhash/errors.hpp"
#include "slhash/fp.hpp"

namespace slhash {

/// Square matrix over a ring context R (Fp64, FpBig or ZRing). Values are
/// immutable in spirit: operations return fresh matrices and never mutate
/// their inputs, so sharing across threads needs no synchronization.
template <class R>
class Matrix {
 public:
  using ring_type = R;
  using value_type = typename R::value_type;

  Matrix(R ring, int n)
      : ring_(std::move(ring)), n_(n),
        e_(static_cast<std::size_t>(n) * n, ring_.zero()) {
    if (n < 1) throw Error(ErrorKind::DimensionMismatch, "dimension must be >= 1");
  }

  static Matrix identity(R ring, int n) {
    Matrix m(ring, n);
    for (int i = 0; i < n; ++i) m.at(i, i) = m.ring_.one();
    return m;
  }

  int n() const { return n_; }
  const R& ring() const { return ring_; }

  value_type& at(int i, int j) { return e_[static_cast<std::size_t>(i) * n_ + j]; }
  const value_type& at(int i, int j) const {
    return e_[static_cast<std::size_t>(i) * n_ + j];
  }

  const std::vector<value_type>& entries() const { return e_; }

  bool is_identity() const {
    for (int i = 0; i < n_; ++i)
      for (int j = 0; j < n_; ++j)
        if (!ring_.eq(at(i, j), i == j ? ring_.one() : ring_.zero()))
          return false;
    return true;
  }

  bool operator==(const Matrix& o) const {
    if (n_ != o.n_ || !(ring_ == o.ring_)) return false;
    for (std::size_t i = 0; i < e_.size(); ++i)
      if (!ring_.eq(e_[i], o.e_[i])) return false;
    return true;
  }
  bool operator!=(const Matrix& o) const { return !(*this == o); }

  Matrix transpose() const {
    Matrix t(ring_, n_);
    for (int i = 0; i < n_; ++i)
      for (int j = 0; j < n_; ++j) t.at(j, i) = at(i, j);
    return t;
  }

  bool is_symmetric() const {
    for (int i = 0; i < n_; ++i)
      for (int j = i + 1; j < n_; ++j)
        if (!ring_.eq(at(i, j), at(j, i))) return false;
    return true;
  }

 private:
  R ring_;
  int n_;
  std::vector<value_type> e_;
};

template <class R>
Matrix<R> mat_mul(const Matrix<R>& x, const Matrix<R>& y) {
  if (x.n() != y.n()) {
    throw Error(ErrorKind::DimensionMismatch,
                "matrix product of dimensions " + std::to_string(x.n()) +
                    " and " + std::to_string(y.n()));
  }
  const R& r = x.ring();
  const int n = x.n();
  Matrix<R> z(r, n);
  for (int i = 0; i < n; ++i) {
    for (int k = 0; k < n; ++k) {
      const auto& a = x.at(i, k);
      if (r.is_zero(a)) continue;
      for (int j = 0; j < n; ++j) {
        z.at(i, j) = r.add(z.at(i, j), r.mul(a, y.at(k, j)));
      }
    }
  }
  return z;
}

template <class R>
Matrix<R> mat_add(const Matrix<R>& x, const Matrix<R>& y) {
  if (x.n() != y.n()) {
    throw Error(ErrorKind::DimensionMismatch, "matrix sum dimension mismatch");
  }
  const R& r = x.ring();
  Matrix<R> z(r, x.n());
  for (int i = 0; i < x.n(); ++i)
    for (int j = 0; j < x.n(); ++j) z.at(i, j) = r.add(x.at(i, j), y.at(i, j));
  return z;
}

/// M^e by binary exponentiation; M^0 is the identity. The exponent may be
/// any non-negative integer, including values >= p.
template <class R, class Int>
Matrix<R> mat_pow(const Matrix<R>& m, Int e) {
  if (e < 0) throw Error(ErrorKind::DimensionMismatch, "negative exponent");
  Matrix<R> result = Matrix<R>::identity(m.ring(), m.n());
  Matrix<R> base = m;
  while (e > 0) {
    if ((e & 1) != 0) result = mat_mul(result, base);
    e >>= 1;
    if (e > 0) base = mat_mul(base, base);
  }
  return result;
}

namespace detail {

// Fraction-free Bareiss elimination; exact over any integral domain.
inline BigInt bareiss_det(std::vector<BigInt> a, int n) {
  BigInt sign = 1;
  BigInt prev = 1;
  auto at = [&](int i, int j) -> BigInt& { return a[std::size_t(i) * n + j]; };
  for (int k = 0; k < n - 1; ++k) {
    if (at(k, k) == 0) {
      int piv = -1;
      for (int i = k + 1; i < n; ++i)
        if (at(i, k) != 0) { piv = i; break; }
      if (piv < 0) return 0;
      for (int j = 0; j < n; ++j) std::swap(at(k, j), at(piv, j));
      sign = -sign;
    }
    for (int i = k + 1; i < n; ++i) {
      for (int j = k + 1; j < n; ++j) {
        at(i, j) = (at(i, j) * at(k, k) - at(i, k) * at(k, j)) / prev;
      }
      at(i, k) = 0;
    }
    prev = at(k, k);
  }
  return sign * at(n - 1, n - 1);
}

}  // namespace detail

/// Exact determinant: standard elimination over a field, fraction-free
/// Bareiss over the integers.
template <class R>
typename R::value_type mat_det(const Matrix<R>& m) {
  const R& r = m.ring();
  const int n = m.n();
  if constexpr (R::is_field) {
    std::vector<typename R::value_type> a = m.entries();
    auto at = [&](int i, int j) -> typename R::value_type& {
      return a[std::size_t(i) * n + j];
    };
    auto det = r.one();
    bool negate = false;
    for (int col = 0; col < n; ++col) {
      int piv = -1;
      for (int i = col; i < n; ++i)
        if (!r.is_zero(at(i, col))) { piv = i; break; }
      if (piv < 0) return r.zero();
      if (piv != col) {
        for (int j = 0; j < n; ++j) std::swap(at(col, j), at(piv, j));
        negate = !negate;
      }
      det = r.mul(det, at(col, col));
      auto pinv = r.inv(at(col, col));
      for (int i = col + 1; i < n; ++i) {
        if (r.is_zero(at(i, col))) continue;
        auto f = r.mul(at(i, col), pinv);
        for (int j = col; j < n; ++j) {
          at(i, j) = r.sub(at(i, j), r.mul(f, at(col, j)));
        }
      }
    }
    return negate ? r.neg(det) : det;
  } else {
    std::vector<BigInt> a;
    a.reserve(m.entries().size());
    for (const auto& v : m.entries()) a.push_back(r.to_big(v));
    return r.from_big(detail::bareiss_det(std::move(a), n));
  }
}

/// Inverse over a field by Gauss-Jordan elimination.
template <class R>
  requires(R::is_field)
Matrix<R> mat_inv(const Matrix<R>& m) {
  const R& r = m.ring();
  const int n = m.n();
  std::vector<typename R::value_type> a = m.entries();
  Matrix<R> inv = Matrix<R>::identity(r, n);
  auto at = [&](int i, int j) -> typename R::value_type& {
    return a[std::size_t(i) * n + j];
  };
  for (int col = 0; col < n; ++col) {
    int piv = -1;
    for (int i = col; i < n; ++i)
      if (!r.is_zero(at(i, col))) { piv = i; break; }
    if (piv < 0) throw Error(ErrorKind::Singular, "matrix is singular");
    if (piv != col) {
      for (int j = 0; j < n; ++j) {
        std::swap(at(col, j), at(piv, j));
        std::swap(inv.at(col, j), inv.at(piv, j));
      }
    }
    auto pinv = r.inv(at(col, col));
    for (int j = 0; j < n; ++j) {
      at(col, j) = r.mul(at(col, j), pinv);
      inv.at(col, j) = r.mul(inv.at(col, j), pinv);
    }
    for (int i = 0; i < n; ++i) {
      if (i == col || r.is_zero(at(i, col))) continue;
      auto f = at(i, col);
      for (int j = 0; j < n; ++j) {
        at(i, j) = r.sub(at(i, j), r.mul(f, at(col, j)));
        inv.at(i, j) = r.sub(inv.at(i, j), r.mul(f, inv.at(col, j)));
      }
    }
  }
  return inv;
}

/// Exact inverse of a unimodular integer matrix via the adjugate.
/// Requires det = +-1 so that the inverse stays integral.
inline Matrix<ZRing> mat_inv_z(const Matrix<ZRing>& m) {
  const int n = m.n();
  BigInt d = mat_det(m);
  if (d != 1 && d != -1) {
    throw Error(ErrorKind::Singular,
                "integer matrix with det != +-1 has no integer inverse");
  }
  Matrix<ZRing> inv(m.ring(), n);
  if (n == 1) {
    inv.at(0, 0) = d;
    return inv;
  }
  std::vector<BigInt> minor((n - 1) * std::size_t(n - 1));
  for (int i = 0; i < n; ++i) {
    for (int j = 0; j < n; ++j) {
      int mi = 0;
      for (int r0 = 0; r0 < n; ++r0) {
        if (r0 == i) continue;
        int mj = 0;
        for (int c0 = 0; c0 < n; ++c0) {
          if (c0 == j) continue;
          minor[std::size_t(mi) * (n - 1) + mj] = m.at(r0, c0);
          ++mj;
        }
        ++mi;
      }
      BigInt cof = detail::bareiss_det(minor, n - 1);
      if ((i + j) % 2 != 0) cof = -cof;
      inv.at(j, i) = cof * d;  // adjugate transposed, scaled by 1/det = det
    }
  }
  return inv;
}

/// Largest |entry|; the constant c that drives the girth lower bound.
inline BigInt max_abs_entry(const Matrix<ZRing>& m) {
  BigInt best = 0;
  for (const auto& v : m.entries()) {
    BigInt a = v < 0 ? BigInt(-v) : v;
    if (a > best) best = a;
  }
  return best;
}

/// Entrywise reduction mod p; the canonical projection SL_n(Z) -> SL_n(F_p).
template <class F>
Matrix<F> reduce_mod(const Matrix<ZRing>& m, const F& field) {
  Matrix<F> out(field, m.n());
  for (int i = 0; i < m.n(); ++i)
    for (int j = 0; j < m.n(); ++j) out.at(i, j) = field.from_big(m.at(i, j));
  return out;
}

using MatrixFp = Matrix<Fp64>;
using MatrixFpBig = Matrix<FpBig>;
using MatrixZ = Matrix<ZRing>;

}  // namespace slhash

#endif  // SLHASH_MATRIX_HPP
