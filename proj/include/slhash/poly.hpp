#ifndef SLHASH_POLY_HPP
#define SLHASH_POLY_HPP

#include <cstdint>
#include <map>
#include <ostream>
#include <string>
#include <vector>

#include "slhash/errors.hpp"
#include "slhash/fp.hpp"

namespace slhash {

/// Sparse multivariate polynomial over F_p. Monomials are exponent
/// vectors over a fixed variable count; per-variable degrees stay below n
/// here, so the maps remain small.
class MultiPoly {
 public:
  using Monomial = std::vector<std::uint8_t>;

  MultiPoly(Fp64 field, int vars) : field_(field), vars_(vars) {}

  static MultiPoly constant(const Fp64& field, int vars, std::uint64_t c) {
    MultiPoly p(field, vars);
    if (c % field.p() != 0) p.terms_[Monomial(vars, 0)] = c % field.p();
    return p;
  }

  static MultiPoly variable(const Fp64& field, int vars, int index) {
    MultiPoly p(field, vars);
    Monomial m(vars, 0);
    m[index] = 1;
    p.terms_[m] = 1 % field.p();
    return p;
  }

  int vars() const { return vars_; }
  const Fp64& field() const { return field_; }
  const std::map<Monomial, std::uint64_t>& terms() const { return terms_; }
  bool is_zero() const { return terms_.empty(); }

  MultiPoly operator+(const MultiPoly& o) const {
    MultiPoly r = *this;
    for (const auto& [m, c] : o.terms_) r.add_term(m, c);
    return r;
  }

  MultiPoly operator-(const MultiPoly& o) const {
    MultiPoly r = *this;
    for (const auto& [m, c] : o.terms_) r.add_term(m, field_.neg(c));
    return r;
  }

  MultiPoly operator*(const MultiPoly& o) const {
    MultiPoly r(field_, vars_);
    for (const auto& [ma, ca] : terms_) {
      for (const auto& [mb, cb] : o.terms_) {
        Monomial m(vars_);
        for (int i = 0; i < vars_; ++i)
          m[i] = static_cast<std::uint8_t>(ma[i] + mb[i]);
        r.add_term(m, field_.mul(ca, cb));
      }
    }
    return r;
  }

  MultiPoly scaled(std::uint64_t c) const {
    MultiPoly r(field_, vars_);
    c %= field_.p();
    for (const auto& [m, v] : terms_) r.add_term(m, field_.mul(v, c));
    return r;
  }

  std::uint64_t eval(const std::vector<std::uint64_t>& point) const {
    if (static_cast<int>(point.size()) != vars_) {
      throw Error(ErrorKind::DimensionMismatch, "evaluation point arity");
    }
    std::uint64_t acc = 0;
    for (const auto& [m, c] : terms_) {
      std::uint64_t term = c;
      for (int i = 0; i < vars_; ++i) {
        if (m[i]) term = field_.mul(term, field_.pow(point[i] % field_.p(), m[i]));
      }
      acc = field_.add(acc, term);
    }
    return acc;
  }

  void add_term(const Monomial& m, std::uint64_t c) {
    c %= field_.p();
    auto it = terms_.find(m);
    if (it == terms_.end()) {
      if (c) terms_[m] = c;
      return;
    }
    it->second = field_.add(it->second, c);
    if (it->second == 0) terms_.erase(it);
  }

 private:
  Fp64 field_;
  int vars_;
  std::map<Monomial, std::uint64_t> terms_;
};

}  // namespace slhash

#endif  // SLHASH_POLY_HPP
