#ifndef SLHASH_GROUP_HPP
#define SLHASH_GROUP_HPP

#include <array>
#include <cstdint>
#include <deque>
#include <limits>
#include <optional>
#include <vector>

#include "slhash/bigint.hpp"
#include "slhash/errors.hpp"
#include "slhash/matrix.hpp"

namespace slhash {

/// |SL_n(F_p)| = p^{n(n-1)/2} * prod_{k=2..n} (p^k - 1).
inline BigInt group_order(int n, const BigInt& p) {
  BigInt order = boost::multiprecision::pow(p, unsigned(n * (n - 1) / 2));
  for (int k = 2; k <= n; ++k) {
    order *= boost::multiprecision::pow(p, unsigned(k)) - 1;
  }
  return order;
}

/// Packs an n x n matrix over F_p into a base-p u64 key. Only usable when
/// p^(n^2) fits; callers that need bigger groups get GroupTooLarge.
class ElementCodec {
 public:
  ElementCodec(int n, std::uint64_t p) : n_(n), p_(p) {
    // keys must leave two spare bits so (key, last-step) states pack into
    // a u64 as well
    std::uint64_t cap = std::numeric_limits<std::uint64_t>::max() >> 2;
    std::uint64_t acc = 1;
    for (int i = 0; i < n * n; ++i) {
      if (acc > cap / p) {
        throw Error(ErrorKind::GroupTooLarge,
                    "matrix key does not fit in 64 bits for this (n, p)");
      }
      acc *= p;
    }
  }

  std::uint64_t encode(const MatrixFp& m) const {
    std::uint64_t k = 0;
    for (const auto& v : m.entries()) k = k * p_ + v;
    return k;
  }

  MatrixFp decode(std::uint64_t key, const Fp64& field) const {
    MatrixFp m(field, n_);
    for (int i = n_ - 1; i >= 0; --i) {
      for (int j = n_ - 1; j >= 0; --j) {
        m.at(i, j) = key % p_;
        key /= p_;
      }
    }
    return m;
  }

  int n() const { return n_; }
  std::uint64_t p() const { return p_; }

 private:
  int n_;
  std::uint64_t p_;
};

/// Open-addressing u64 -> u32 map sized for multi-million element closures,
/// where unordered_map's per-node overhead would dominate memory.
class FlatMap64 {
 public:
  static constexpr std::uint64_t kEmpty = ~0ull;

  explicit FlatMap64(std::size_t expected = 64) { rehash(capacity_for(expected)); }

  std::uint32_t* find(std::uint64_t key) {
    std::size_t i = probe(key);
    return keys_[i] == kEmpty ? nullptr : &vals_[i];
  }
  const std::uint32_t* find(std::uint64_t key) const {
    std::size_t i = probe(key);
    return keys_[i] == kEmpty ? nullptr : &vals_[i];
  }

  // inserts if absent; returns (value slot, inserted?)
  std::pair<std::uint32_t*, bool> insert(std::uint64_t key, std::uint32_t val) {
    if ((size_ + 1) * 10 >= keys_.size() * 7) rehash(keys_.size() * 2);
    std::size_t i = probe(key);
    if (keys_[i] != kEmpty) return {&vals_[i], false};
    keys_[i] = key;
    vals_[i] = val;
    ++size_;
    return {&vals_[i], true};
  }

  std::size_t size() const { return size_; }

 private:
  static std::size_t capacity_for(std::size_t expected) {
    std::size_t c = 64;
    while (c * 7 < expected * 10) c *= 2;
    return c;
  }

  std::size_t probe(std::uint64_t key) const {
    std::size_t mask = keys_.size() - 1;
    std::size_t i = (key * 0x9e3779b97f4a7c15ull) & mask;
    while (keys_[i] != kEmpty && keys_[i] != key) i = (i + 1) & mask;
    return i;
  }

  void rehash(std::size_t newcap) {
    std::vector<std::uint64_t> ok = std::move(keys_);
    std::vector<std::uint32_t> ov = std::move(vals_);
    keys_.assign(newcap, kEmpty);
    vals_.assign(newcap, 0);
    size_ = 0;
    for (std::size_t i = 0; i < ok.size(); ++i) {
      if (ok[i] != kEmpty) insert(ok[i], ov[i]);
    }
  }

  std::vector<std::uint64_t> keys_;
  std::vector<std::uint32_t> vals_;
  std::size_t size_ = 0;
};

/// BFS closure of a generating set, indexed breadth-first from the identity.
/// `diameter` is the eccentricity of the identity, which by vertex
/// transitivity equals the graph diameter when the closure is complete.
struct Enumeration {
  ElementCodec codec;
  Fp64 field;
  std::vector<std::uint64_t> keys;  // index -> element key
  FlatMap64 index;                  // element key -> index
  bool complete = false;            // false = budget hit
  int diameter = 0;

  std::size_t size() const { return keys.size(); }

  std::uint32_t index_of(std::uint64_t key) const {
    const std::uint32_t* v = index.find(key);
    if (!v) throw Error(ErrorKind::GroupTooLarge, "element outside enumerated closure");
    return *v;
  }

  MatrixFp element(std::uint32_t i) const { return codec.decode(keys[i], field); }
};

/// Enumerates <gens> by breadth-first closure, stopping cleanly once
/// `max_elements` states have been discovered.
inline Enumeration enumerate_closure(const std::vector<MatrixFp>& gens,
                                     std::size_t max_elements) {
  if (gens.empty()) throw Error(ErrorKind::DimensionMismatch, "no generators");
  const Fp64& field = gens.front().ring();
  const int n = gens.front().n();
  Enumeration en{ElementCodec(n, field.p()), field, {}, FlatMap64(1024), false, 0};

  MatrixFp ident = MatrixFp::identity(field, n);
  std::uint64_t ik = en.codec.encode(ident);
  en.keys.push_back(ik);
  en.index.insert(ik, 0);

  std::vector<int> depth{0};
  std::size_t head = 0;
  while (head < en.keys.size()) {
    std::uint32_t cur = static_cast<std::uint32_t>(head);
    MatrixFp m = en.codec.decode(en.keys[head], field);
    ++head;
    for (const auto& g : gens) {
      MatrixFp y = mat_mul(m, g);
      std::uint64_t yk = en.codec.encode(y);
      if (en.index.find(yk)) continue;
      if (en.keys.size() >= max_elements) {
        return en;  // budget exhausted, closure incomplete
      }
      en.index.insert(yk, static_cast<std::uint32_t>(en.keys.size()));
      en.keys.push_back(yk);
      depth.push_back(depth[cur] + 1);
      en.diameter = depth.back();
    }
  }
  en.complete = true;
  return en;
}

enum class GenerationStatus { Generates, ProperSubgroup, BudgetExceeded };

struct GenerationResult {
  GenerationStatus status;
  BigInt closure_size;   // meaningful unless BudgetExceeded
  BigInt group_size;     // |SL_n(F_p)|
  int diameter = 0;      // identity eccentricity when complete
};

}  // namespace slhash

#endif  // SLHASH_GROUP_HPP
