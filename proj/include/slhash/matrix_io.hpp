#ifndef SLHASH_MATRIX_IO_HPP
#define SLHASH_MATRIX_IO_HPP

#include <istream>
#include <ostream>
#include <sstream>
#include <string>
#include <vector>

#include "slhash/bigint.hpp"
#include "slhash/errors.hpp"
#include "slhash/matrix.hpp"

namespace slhash {

/// Ring-agnostic parse of the matrix text format: first line "n p" with
/// p = 0 meaning "over Z", then n rows of n decimal entries. Negative
/// entries are rejected unless p = 0.
struct ParsedMatrix {
  int n = 0;
  BigInt p = 0;  // 0 = integers
  std::vector<BigInt> entries;

  Matrix<ZRing> to_z() const {
    if (p != 0) throw Error(ErrorKind::ParseError, "matrix is over F_p, not Z");
    Matrix<ZRing> m(ZRing{}, n);
    for (int i = 0; i < n; ++i)
      for (int j = 0; j < n; ++j) m.at(i, j) = entries[std::size_t(i) * n + j];
    return m;
  }

  template <class F>
  Matrix<F> to_fp(const F& field) const {
    if (p == 0) throw Error(ErrorKind::ParseError, "matrix is over Z, not F_p");
    if (p != field.p_big())
      throw Error(ErrorKind::ParseError, "matrix modulus does not match field");
    Matrix<F> m(field, n);
    for (int i = 0; i < n; ++i)
      for (int j = 0; j < n; ++j)
        m.at(i, j) = field.from_big(entries[std::size_t(i) * n + j]);
    return m;
  }
};

inline ParsedMatrix read_matrix_text(std::istream& in) {
  ParsedMatrix pm;
  std::string header;
  while (std::getline(in, header)) {
    if (header.find_first_not_of(" \t\r") != std::string::npos) break;
  }
  std::istringstream hs(header);
  if (!(hs >> pm.n >> pm.p) || pm.n < 1 || pm.p < 0) {
    throw Error(ErrorKind::ParseError, "bad matrix header: expected 'n p'");
  }
  pm.entries.resize(std::size_t(pm.n) * pm.n);
  for (auto& v : pm.entries) {
    if (!(in >> v)) {
      throw Error(ErrorKind::ParseError, "matrix body ended early");
    }
    if (pm.p != 0) {
      if (v < 0)
        throw Error(ErrorKind::ParseError,
                    "negative entry is only permitted when p = 0");
      if (v >= pm.p)
        throw Error(ErrorKind::ParseError, "entry not reduced mod p");
    }
  }
  return pm;
}

inline ParsedMatrix parse_matrix_text(const std::string& text) {
  std::istringstream in(text);
  return read_matrix_text(in);
}

template <class R>
void write_matrix_text(std::ostream& out, const Matrix<R>& m) {
  if constexpr (R::is_field) {
    out << m.n() << ' ' << m.ring().p_big() << '\n';
  } else {
    out << m.n() << ' ' << 0 << '\n';
  }
  for (int i = 0; i < m.n(); ++i) {
    for (int j = 0; j < m.n(); ++j) {
      if (j) out << ' ';
      out << m.ring().to_big(m.at(i, j));
    }
    out << '\n';
  }
}

template <class R>
std::string matrix_to_text(const Matrix<R>& m) {
  std::ostringstream os;
  write_matrix_text(os, m);
  return os.str();
}

}  // namespace slhash

#endif  // SLHASH_MATRIX_IO_HPP
