#ifndef SLHASH_HASHER_HPP
#define SLHASH_HASHER_HPP

#include <cstdint>
#include <optional>
#include <span>
#include <string>
#include <vector>

#include "slhash/bigint.hpp"
#include "slhash/errors.hpp"
#include "slhash/matrix.hpp"
#include "slhash/params.hpp"
#include "slhash/table.hpp"

namespace slhash {

using Trits = std::vector<std::uint8_t>;  // values in {1,2,3}

/// Walk in progress: the accumulated product, the last step taken (empty
/// before the first trit) and the number of trits consumed. The next step
/// is never the inverse of `last`.
template <class F>
struct WalkState {
  Matrix<F> acc;
  std::optional<Step> last;
  std::size_t length = 0;

  static WalkState fresh(const GeneratorSet<F>& gens) {
    return {Matrix<F>::identity(gens.fp[0].ring(), gens.params.n),
            std::nullopt, 0};
  }

  /// Restart in the middle of a larger walk, as if `context` had just been
  /// applied. Used by segment workers.
  static WalkState with_context(const GeneratorSet<F>& gens, Step context) {
    return {Matrix<F>::identity(gens.fp[0].ring(), gens.params.n), context, 0};
  }
};

/// Digest: a group element plus the (n, p) fingerprint that scopes it.
template <class F>
struct Digest {
  Matrix<F> matrix;
  int n;
  BigInt p;

  bool operator==(const Digest& o) const {
    return n == o.n && p == o.p && matrix == o.matrix;
  }
};

using DigestFp = Digest<Fp64>;

/// Applies one trit: pick the step from the row selected by the last step
/// (or from first_row on a fresh walk), multiply on the right.
template <class F>
void step(WalkState<F>& st, int trit, const AttributionTable& table,
          const GeneratorSet<F>& gens) {
  if (trit < 1 || trit > 3) {
    throw Error(ErrorKind::InvalidTrit,
                "trit out of range [1,3]: " + std::to_string(trit));
  }
  Step next = st.last ? table.next_step(*st.last, trit)
                      : table.row(table.first_row())[trit - 1];
  st.acc = mat_mul(st.acc, gens.fp[step_index(next)]);
  st.last = next;
  ++st.length;
}

/// The step sequence an input encodes, without any matrix work. This is
/// the reduced word in the free group that the walk spells out.
inline std::vector<Step> trits_to_steps(std::span<const std::uint8_t> trits,
                                        const AttributionTable& table) {
  std::vector<Step> out;
  out.reserve(trits.size());
  Step last = table.initial_context();
  for (std::uint8_t t : trits) {
    last = table.next_step(last, t);
    out.push_back(last);
  }
  return out;
}

template <class F>
Digest<F> hash_trits(std::span<const std::uint8_t> trits,
                     const AttributionTable& table,
                     const GeneratorSet<F>& gens) {
  WalkState<F> st = WalkState<F>::fresh(gens);
  for (std::uint8_t t : trits) step(st, t, table, gens);
  return Digest<F>{std::move(st.acc), gens.params.n, gens.params.p};
}

/// Hash of a segment that resumes an interrupted walk: `context` is the
/// step matrix immediately preceding the segment.
template <class F>
Digest<F> hash_trits_from_context(std::span<const std::uint8_t> trits,
                                  Step context, const AttributionTable& table,
                                  const GeneratorSet<F>& gens) {
  WalkState<F> st = WalkState<F>::with_context(gens, context);
  for (std::uint8_t t : trits) step(st, t, table, gens);
  return Digest<F>{std::move(st.acc), gens.params.n, gens.params.p};
}

/// Byte -> 6 trits: big-endian base-3 digits of the byte value, each
/// shifted into {1,2,3}. Injective and length-preserving (6k trits for
/// k bytes), so mixing thresholds are exact functions of byte count.
inline Trits encode_bytes(std::span<const std::uint8_t> data) {
  Trits out;
  out.reserve(data.size() * 6);
  for (std::uint8_t byte : data) {
    std::uint8_t digits[6];
    unsigned v = byte;
    for (int i = 5; i >= 0; --i) {
      digits[i] = static_cast<std::uint8_t>(v % 3);
      v /= 3;
    }
    for (int i = 0; i < 6; ++i) out.push_back(digits[i] + 1);
  }
  return out;
}

template <class F>
Digest<F> hash_bytes(std::span<const std::uint8_t> data,
                     const AttributionTable& table,
                     const GeneratorSet<F>& gens) {
  Trits trits = encode_bytes(data);
  return hash_trits<F>(trits, table, gens);
}

/// Parses a trit literal like "13213"; accepts only characters 1, 2, 3.
inline Trits parse_trit_literal(const std::string& text) {
  Trits out;
  out.reserve(text.size());
  for (char c : text) {
    if (c == '\n' || c == '\r' || c == ' ' || c == '\t') continue;
    if (c < '1' || c > '3') {
      throw Error(ErrorKind::InvalidTrit,
                  std::string("invalid trit character '") + c + "'");
    }
    out.push_back(static_cast<std::uint8_t>(c - '0'));
  }
  return out;
}

namespace detail {

inline void append_be(std::vector<std::uint8_t>& out, const BigInt& v,
                      std::size_t width) {
  std::vector<std::uint8_t> bytes;
  BigInt x = v;
  while (x > 0) {
    bytes.push_back(static_cast<std::uint8_t>(x & 0xff));
    x >>= 8;
  }
  while (bytes.size() < width) bytes.push_back(0);
  for (auto it = bytes.rbegin(); it != bytes.rend(); ++it) out.push_back(*it);
}

}  // namespace detail

/// Digest wire format: length-prefixed big-endian n and p, then the n^2
/// entries row-major, each padded to the byte length of p.
template <class F>
std::vector<std::uint8_t> serialize_digest(const Digest<F>& d) {
  std::vector<std::uint8_t> out;
  BigInt nb(d.n);
  std::size_t nw = byte_length(nb);
  out.push_back(static_cast<std::uint8_t>(nw));
  detail::append_be(out, nb, nw);
  std::size_t pw = byte_length(d.p);
  out.push_back(static_cast<std::uint8_t>(pw));
  detail::append_be(out, d.p, pw);
  const auto& ring = d.matrix.ring();
  for (int i = 0; i < d.n; ++i) {
    for (int j = 0; j < d.n; ++j) {
      detail::append_be(out, ring.to_big(d.matrix.at(i, j)), pw);
    }
  }
  return out;
}

inline std::string to_hex(std::span<const std::uint8_t> bytes) {
  static const char* digits = "0123456789abcdef";
  std::string out;
  out.reserve(bytes.size() * 2);
  for (std::uint8_t b : bytes) {
    out.push_back(digits[b >> 4]);
    out.push_back(digits[b & 0xf]);
  }
  return out;
}

template <class F>
std::string digest_hex(const Digest<F>& d) {
  return to_hex(serialize_digest(d));
}

namespace detail {

inline BigInt read_be(std::span<const std::uint8_t> bytes, std::size_t& pos,
                      std::size_t width) {
  if (pos + width > bytes.size()) {
    throw Error(ErrorKind::ParseError, "digest truncated");
  }
  BigInt v = 0;
  for (std::size_t i = 0; i < width; ++i) {
    v <<= 8;
    v += bytes[pos + i];
  }
  pos += width;
  return v;
}

}  // namespace detail

/// Inverse of serialize_digest; round-trips bit-exactly.
template <class F>
Digest<F> parse_digest(std::span<const std::uint8_t> bytes, const F& field) {
  std::size_t pos = 0;
  std::size_t nw = detail::read_be(bytes, pos, 1).template convert_to<std::size_t>();
  BigInt nb = detail::read_be(bytes, pos, nw);
  std::size_t pw = detail::read_be(bytes, pos, 1).template convert_to<std::size_t>();
  BigInt p = detail::read_be(bytes, pos, pw);
  if (p != field.p_big()) {
    throw Error(ErrorKind::ParseError, "digest modulus does not match field");
  }
  int n = nb.convert_to<int>();
  Digest<F> d{Matrix<F>(field, n), n, p};
  for (int i = 0; i < n; ++i) {
    for (int j = 0; j < n; ++j) {
      BigInt v = detail::read_be(bytes, pos, pw);
      if (v >= p) throw Error(ErrorKind::ParseError, "digest entry >= p");
      d.matrix.at(i, j) = field.from_big(v);
    }
  }
  if (pos != bytes.size()) {
    throw Error(ErrorKind::ParseError, "trailing bytes after digest");
  }
  return d;
}

}  // namespace slhash

#endif  // SLHASH_HASHER_HPP
