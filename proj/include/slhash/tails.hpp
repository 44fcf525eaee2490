#ifndef SLHASH_TAILS_HPP
#define SLHASH_TAILS_HPP

#include <algorithm>
#include <array>
#include <cstdint>
#include <future>
#include <optional>
#include <set>
#include <string>
#include <thread>
#include <vector>

#include "slhash/errors.hpp"
#include "slhash/hasher.hpp"
#include "slhash/table.hpp"

namespace slhash {

/// Good(S): every walk consuming this suffix ends with step S, whatever
/// came before. Bad carries a concrete pair of predecessor contexts that
/// land on different final steps.
struct TailClass {
  bool good = false;
  Step final_step = Step::A;  // valid iff good
  // witness for bad tails: two predecessor contexts and their finals
  Step witness_context[2] = {Step::A, Step::A};
  Step witness_final[2] = {Step::A, Step::A};
};

/// Propagates the set of possible last-step matrices through the tail.
/// Starting from all four contexts is exact: every step matrix occurs as
/// the last step of some prefix, and only the last step matters.
inline TailClass classify_tail(const AttributionTable& table,
                               std::span<const std::uint8_t> tail) {
  if (tail.empty()) {
    throw Error(ErrorKind::EmptyTail, "tail must be nonempty");
  }
  // current[i] = origin context for one surviving branch ending in step i
  std::array<std::optional<Step>, 4> origin;
  for (int i = 0; i < 4; ++i) origin[i] = static_cast<Step>(i);
  for (std::uint8_t t : tail) {
    std::array<std::optional<Step>, 4> next;
    for (int i = 0; i < 4; ++i) {
      if (!origin[i]) continue;
      Step s = table.next_step(static_cast<Step>(i), t);
      if (!next[step_index(s)]) next[step_index(s)] = origin[i];
    }
    origin = next;
  }
  TailClass tc;
  std::vector<int> finals;
  for (int i = 0; i < 4; ++i)
    if (origin[i]) finals.push_back(i);
  if (finals.size() == 1) {
    tc.good = true;
    tc.final_step = static_cast<Step>(finals[0]);
  } else {
    tc.good = false;
    tc.witness_final[0] = static_cast<Step>(finals[0]);
    tc.witness_final[1] = static_cast<Step>(finals[1]);
    tc.witness_context[0] = *origin[finals[0]];
    tc.witness_context[1] = *origin[finals[1]];
  }
  return tc;
}

/// All good tails of the given length, as trit strings.
inline std::vector<Trits> enumerate_good_tails(const AttributionTable& table,
                                               int length = 2) {
  std::vector<Trits> out;
  Trits tail(length, 1);
  while (true) {
    if (classify_tail(table, tail).good) out.push_back(tail);
    int i = length - 1;
    while (i >= 0 && tail[i] == 3) tail[i--] = 1;
    if (i < 0) break;
    ++tail[i];
  }
  return out;
}

/// Every attribution table admissible under the construction: per row a
/// bijection onto the three non-excluded steps (6^4 = 1296 choices), with
/// s fixed to the canonical labelling; the caller layers the 4 first_row
/// choices on top. Walk behavior depends only on (rows, first_row).
class AdmissibleTables {
 public:
  static constexpr int kRowChoices = 6;   // 3! orders per row
  static constexpr int kTableCount = 6 * 6 * 6 * 6;

  /// table_id in [0, 1296), first_row in [0, 4)
  static AttributionTable make(int table_id, int first_row) {
    static constexpr int perms[6][3] = {{0, 1, 2}, {0, 2, 1}, {1, 0, 2},
                                        {1, 2, 0}, {2, 0, 1}, {2, 1, 0}};
    std::array<Step, 4> s = {Step::A, Step::B, Step::AInv, Step::BInv};
    std::array<std::array<Step, 3>, 4> rows{};
    int id = table_id;
    for (int lam = 0; lam < 4; ++lam) {
      Step excluded = s[lam];
      std::array<Step, 3> allowed{};
      int k = 0;
      for (int v = 0; v < 4; ++v) {
        if (static_cast<Step>(v) != excluded) allowed[k++] = static_cast<Step>(v);
      }
      const int* pm = perms[id % kRowChoices];
      id /= kRowChoices;
      rows[lam] = {allowed[pm[0]], allowed[pm[1]], allowed[pm[2]]};
    }
    return AttributionTable(s, rows, first_row);
  }
};

/// One parallel-hash unit: a trit substring and the walk context it must
/// be hashed under (the forced final step of the previous segment, or the
/// fresh-walk context for the first segment).
struct Segment {
  Trits trits;
  Step context;    // last step preceding this segment
  int start_row;   // 0-based lambda - 1, = row_after(context)
};

struct Segmentation {
  std::vector<Segment> segments;
};

/// Greedy left-to-right split: cut immediately after a good tail of
/// length two, provided the running segment has at least `min_segment`
/// trits and the cut is not at the very end. Any admissible cut set gives
/// the same digest; the choice only shapes load balance.
inline Segmentation segment(std::span<const std::uint8_t> input,
                            const AttributionTable& table,
                            std::size_t min_segment = 64) {
  if (min_segment < 2) min_segment = 2;
  Segmentation out;
  if (input.empty()) return out;

  // classify the nine length-two tails once
  std::array<std::array<TailClass, 3>, 3> cls;
  for (std::uint8_t x = 1; x <= 3; ++x)
    for (std::uint8_t y = 1; y <= 3; ++y) {
      std::uint8_t pair[2] = {x, y};
      cls[x - 1][y - 1] = classify_tail(table, pair);
    }

  Step context = table.initial_context();
  std::size_t seg_start = 0;
  for (std::size_t j = 1; j < input.size(); ++j) {
    std::size_t seg_len = j - seg_start + 1;
    if (seg_len < min_segment) continue;
    if (j + 1 >= input.size()) break;  // cutting at the end is pointless
    const TailClass& tc = cls[input[j - 1] - 1][input[j] - 1];
    if (!tc.good) continue;
    out.segments.push_back(
        Segment{Trits(input.begin() + seg_start, input.begin() + j + 1),
                context, table.row_after(context)});
    context = tc.final_step;
    seg_start = j + 1;
  }
  out.segments.push_back(
      Segment{Trits(input.begin() + seg_start, input.end()), context,
              table.row_after(context)});
  return out;
}

/// Hashes segments independently and multiplies the partial digests in
/// order. Bit-identical to the serial walk for every input.
template <class F>
Digest<F> parallel_hash(std::span<const std::uint8_t> input,
                        const AttributionTable& table,
                        const GeneratorSet<F>& gens, unsigned workers,
                        std::size_t min_segment = 64) {
  Segmentation segs = segment(input, table, min_segment);
  if (segs.segments.empty()) {
    return Digest<F>{Matrix<F>::identity(gens.fp[0].ring(), gens.params.n),
                     gens.params.n, gens.params.p};
  }
  if (workers < 1) workers = 1;

  std::vector<Matrix<F>> partial(
      segs.segments.size(),
      Matrix<F>::identity(gens.fp[0].ring(), gens.params.n));
  if (workers == 1 || segs.segments.size() == 1) {
    for (std::size_t i = 0; i < segs.segments.size(); ++i) {
      const Segment& sg = segs.segments[i];
      partial[i] =
          hash_trits_from_context<F>(sg.trits, sg.context, table, gens).matrix;
    }
  } else {
    std::vector<std::future<void>> pool;
    std::size_t count = segs.segments.size();
    unsigned nw = std::min<std::size_t>(workers, count);
    for (unsigned w = 0; w < nw; ++w) {
      pool.push_back(std::async(std::launch::async, [&, w] {
        for (std::size_t i = w; i < count; i += nw) {
          const Segment& sg = segs.segments[i];
          partial[i] =
              hash_trits_from_context<F>(sg.trits, sg.context, table, gens)
                  .matrix;
        }
      }));
    }
    for (auto& f : pool) f.get();
  }

  // ordered reduction: matrix multiplication does not commute
  Matrix<F> acc = partial[0];
  for (std::size_t i = 1; i < partial.size(); ++i)
    acc = mat_mul(acc, partial[i]);
  return Digest<F>{std::move(acc), gens.params.n, gens.params.p};
}

}  // namespace slhash

#endif  // SLHASH_TAILS_HPP
