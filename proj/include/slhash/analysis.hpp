#ifndef SLHASH_ANALYSIS_HPP
#define SLHASH_ANALYSIS_HPP

#include <array>
#include <cmath>
#include <cstdint>
#include <optional>
#include <random>
#include <string>
#include <vector>

#include "slhash/bigint.hpp"
#include "slhash/errors.hpp"
#include "slhash/group.hpp"
#include "slhash/hasher.hpp"
#include "slhash/params.hpp"
#include "slhash/table.hpp"

namespace slhash {

/// Girth lower bound floor(log(p-1) / log(nc)) evaluated with pure integer
/// arithmetic: the largest g with (nc)^g <= p - 1. Floating-point logs
/// misround near exact powers.
inline std::uint64_t girth_lower_bound(int n, const BigInt& c, const BigInt& p) {
  BigInt nc = BigInt(n) * c;
  if (p < 2 || nc < 2) {
    throw Error(ErrorKind::DimensionMismatch, "need p >= 2 and n*c >= 2");
  }
  BigInt limit = p - 1;
  BigInt acc = 1;
  std::uint64_t g = 0;
  while (acc * nc <= limit) {
    acc *= nc;
    ++g;
  }
  return g;
}

struct GirthReport {
  std::uint64_t theoretical_lower = 0;
  std::optional<std::uint32_t> measured;  // empty = NotFoundWithin(radius)
  std::uint32_t radius_searched = 0;
  std::vector<Step> shortest_relator;  // set when measured
};

/// Measured girth: breadth-first search over non-backtracking words from
/// the identity, reported at the first return to the identity. The witness
/// word is reduced by construction, so its length is exactly the girth.
inline GirthReport measure_girth(const GeneratorSet<Fp64>& gens,
                                 std::uint32_t radius_budget,
                                 std::size_t state_budget = 50'000'000) {
  GirthReport report;
  report.theoretical_lower =
      girth_lower_bound(gens.params.n, gens.c, gens.params.p);

  const Fp64& field = gens.fp[0].ring();
  ElementCodec codec(gens.params.n, field.p());
  const std::uint64_t ik =
      codec.encode(MatrixFp::identity(field, gens.params.n));

  struct Node {
    std::uint64_t elem;
    std::uint8_t last;
    std::uint32_t parent;
    std::uint8_t via;
    std::uint32_t depth;
  };
  std::vector<Node> nodes;
  FlatMap64 seen(1 << 12);  // (elem << 2 | last) -> node id

  auto state_key = [](std::uint64_t elem, int last) {
    return (elem << 2) | std::uint64_t(last);
  };

  for (int s = 0; s < 4; ++s) {
    std::uint64_t ek = codec.encode(gens.fp[s]);
    if (ek == ik) {
      // a generator equal to the identity would give girth 1; rejected
      // upstream as DegenerateGenerators, but guard anyway
      report.measured = 1;
      report.shortest_relator = {static_cast<Step>(s)};
      report.radius_searched = 1;
      return report;
    }
    std::uint64_t sk = state_key(ek, s);
    if (!seen.find(sk)) {
      seen.insert(sk, static_cast<std::uint32_t>(nodes.size()));
      nodes.push_back(Node{ek, std::uint8_t(s), 0xffffffffu, std::uint8_t(s), 1});
    }
  }

  std::size_t head = 0;
  while (head < nodes.size()) {
    Node cur = nodes[head];
    if (cur.depth >= radius_budget) break;
    MatrixFp m = codec.decode(cur.elem, field);
    for (int s = 0; s < 4; ++s) {
      if (static_cast<Step>(s) == inverse(static_cast<Step>(cur.last)))
        continue;
      MatrixFp y = mat_mul(m, gens.fp[s]);
      std::uint64_t yk = codec.encode(y);
      if (yk == ik) {
        report.measured = cur.depth + 1;
        report.radius_searched = cur.depth + 1;
        std::vector<Step> word{static_cast<Step>(s)};
        std::uint32_t at = static_cast<std::uint32_t>(head);
        while (at != 0xffffffffu) {
          word.push_back(static_cast<Step>(nodes[at].via));
          at = nodes[at].parent;
        }
        std::reverse(word.begin(), word.end());
        report.shortest_relator = std::move(word);
        return report;
      }
      std::uint64_t sk = state_key(yk, s);
      if (!seen.find(sk)) {
        if (nodes.size() >= state_budget) {
          report.radius_searched = cur.depth;
          return report;  // NotFoundWithin
        }
        seen.insert(sk, static_cast<std::uint32_t>(nodes.size()));
        nodes.push_back(Node{yk, std::uint8_t(s),
                             static_cast<std::uint32_t>(head), std::uint8_t(s),
                             cur.depth + 1});
      }
    }
    ++head;
  }
  report.radius_searched =
      nodes.empty() ? 0 : nodes.back().depth;
  return report;
}

/// Exact probability vector over the enumerated group, indexed like the
/// enumeration. Probabilities may be zero off the walk's support.
struct Distribution {
  std::vector<double> probs;

  std::size_t size() const { return probs.size(); }

  double sum() const {
    double s = 0;
    for (double v : probs) s += v;
    return s;
  }
};

inline Distribution uniform_distribution(std::size_t n) {
  Distribution d;
  d.probs.assign(n, 1.0 / static_cast<double>(n));
  return d;
}

inline Distribution point_mass(std::size_t n, std::size_t at) {
  Distribution d;
  d.probs.assign(n, 0.0);
  d.probs[at] = 1.0;
  return d;
}

/// Precomputed right-multiplication action of the four step matrices on
/// the enumerated group. 16 bytes per element.
struct TransitionTable {
  std::vector<std::uint32_t> next;  // [element * 4 + step]

  std::uint32_t apply(std::uint32_t elem, int step) const {
    return next[std::size_t(elem) * 4 + step];
  }
};

inline TransitionTable build_transitions(const Enumeration& en,
                                         const GeneratorSet<Fp64>& gens) {
  if (!en.complete) {
    throw Error(ErrorKind::GroupTooLarge,
                "walk analysis needs the full closure");
  }
  TransitionTable t;
  t.next.resize(en.size() * 4);
  for (std::size_t e = 0; e < en.size(); ++e) {
    MatrixFp m = en.element(static_cast<std::uint32_t>(e));
    for (int s = 0; s < 4; ++s) {
      std::uint64_t yk = en.codec.encode(mat_mul(m, gens.fp[s]));
      t.next[e * 4 + s] = en.index_of(yk);
    }
  }
  return t;
}

/// Exact distribution of the hash of a uniform input of k trits: dynamic
/// program over (element, last step) pairs. The first trit draws uniformly
/// from the first_row images; each later trit picks one of the three
/// admissible continuations with probability 1/3.
inline Distribution walk_distribution(const Enumeration& en,
                                      const TransitionTable& trans,
                                      const AttributionTable& table,
                                      std::uint32_t k) {
  const std::size_t n = en.size();
  Distribution out;
  if (k == 0) {
    out.probs.assign(n, 0.0);
    out.probs[0] = 1.0;  // identity is index 0 by construction
    return out;
  }
  std::vector<double> cur(n * 4, 0.0), nxt;
  for (int t = 0; t < 3; ++t) {
    Step s = table.row(table.first_row())[t];
    std::uint32_t e = trans.apply(0, step_index(s));
    cur[std::size_t(e) * 4 + step_index(s)] += 1.0 / 3.0;
  }
  for (std::uint32_t stepno = 1; stepno < k; ++stepno) {
    nxt.assign(n * 4, 0.0);
    for (std::size_t e = 0; e < n; ++e) {
      for (int last = 0; last < 4; ++last) {
        double pr = cur[e * 4 + last];
        if (pr == 0.0) continue;
        double third = pr / 3.0;
        const auto& row = table.row(table.row_after(static_cast<Step>(last)));
        for (int t = 0; t < 3; ++t) {
          int s = step_index(row[t]);
          nxt[std::size_t(trans.apply(static_cast<std::uint32_t>(e), s)) * 4 +
              s] += third;
        }
      }
    }
    cur.swap(nxt);
  }
  out.probs.assign(n, 0.0);
  for (std::size_t e = 0; e < n; ++e) {
    double s = 0;
    for (int last = 0; last < 4; ++last) s += cur[e * 4 + last];
    out.probs[e] = s;
  }
  return out;
}

/// Max over the whole group (support and off-support alike) of
/// |prob - 1/N|.
inline double linf_distance(const Distribution& d) {
  const double u = 1.0 / static_cast<double>(d.size());
  double best = 0;
  for (double v : d.probs) best = std::max(best, std::abs(v - u));
  return best;
}

/// Max pointwise gap between two distributions on the same universe.
inline double linf_pair(const Distribution& x, const Distribution& y) {
  if (x.size() != y.size()) {
    throw Error(ErrorKind::DimensionMismatch, "distribution size mismatch");
  }
  double best = 0;
  for (std::size_t i = 0; i < x.size(); ++i)
    best = std::max(best, std::abs(x.probs[i] - y.probs[i]));
  return best;
}

/// Closed-form success of the likelihood-comparison adversary:
/// P_A = (1/2) * sum_h max(P(X=h), P(Y=h)).
inline double attack_success_exact(const Distribution& dx,
                                   const Distribution& dy) {
  if (dx.size() != dy.size()) {
    throw Error(ErrorKind::DimensionMismatch, "distribution size mismatch");
  }
  double s = 0;
  for (std::size_t i = 0; i < dx.size(); ++i)
    s += std::max(dx.probs[i], dy.probs[i]);
  return 0.5 * s;
}

struct ChallengeOutcome {
  double exact_success = 0;
  double empirical_success = 0;
  double ci_low = 0;
  double ci_high = 0;
  double epsilon = 0;  // linf gap between the two distributions
  double bound = 0;    // 1/2 + epsilon * N / 4
  std::uint64_t trials = 0;
};

namespace detail {

// inverse-CDF sampler with an explicit uniform source, so transcripts are
// reproducible across standard-library implementations
class Sampler {
 public:
  explicit Sampler(const Distribution& d) {
    cdf_.reserve(d.size());
    double acc = 0;
    for (double v : d.probs) {
      acc += v;
      cdf_.push_back(acc);
    }
    if (!cdf_.empty()) cdf_.back() = 1.0;
  }

  std::size_t draw(double u) const {
    auto it = std::lower_bound(cdf_.begin(), cdf_.end(), u);
    if (it == cdf_.end()) --it;
    return static_cast<std::size_t>(it - cdf_.begin());
  }

 private:
  std::vector<double> cdf_;
};

inline double canonical(std::mt19937_64& rng) {
  return static_cast<double>(rng() >> 11) * 0x1.0p-53;
}

}  // namespace detail

/// Simulates the distinguishing game: the challenger flips a fair coin,
/// sends a sample of X or Y accordingly; the adversary partitions the
/// universe by comparing P(Y=h) with P(X=h) and answers by likelihood,
/// flipping a coin on ties. Fixed seed => bit-identical transcript.
inline ChallengeOutcome play_challenge(const Distribution& dx,
                                       const Distribution& dy,
                                       std::uint64_t trials,
                                       std::uint64_t seed) {
  if (trials < 1) {
    throw Error(ErrorKind::DimensionMismatch, "trials must be >= 1");
  }
  ChallengeOutcome out;
  out.trials = trials;
  out.exact_success = attack_success_exact(dx, dy);
  out.epsilon = linf_pair(dx, dy);
  out.bound = 0.5 + out.epsilon * static_cast<double>(dx.size()) / 4.0;

  // partition: -1 if P(Y) < P(X), 0 if equal, +1 if greater
  std::vector<std::int8_t> side(dx.size());
  for (std::size_t i = 0; i < dx.size(); ++i) {
    side[i] = dy.probs[i] < dx.probs[i]   ? std::int8_t(-1)
              : dy.probs[i] > dx.probs[i] ? std::int8_t(1)
                                          : std::int8_t(0);
  }

  detail::Sampler sx(dx), sy(dy);
  std::mt19937_64 rng(seed);
  std::uint64_t wins = 0;
  for (std::uint64_t t = 0; t < trials; ++t) {
    bool coin_y = (rng() & 1) != 0;
    std::size_t z = coin_y ? sy.draw(detail::canonical(rng))
                           : sx.draw(detail::canonical(rng));
    bool guess_y;
    if (side[z] > 0) {
      guess_y = true;
    } else if (side[z] < 0) {
      guess_y = false;
    } else {
      guess_y = (rng() & 1) != 0;
    }
    if (guess_y == coin_y) ++wins;
  }
  out.empirical_success = static_cast<double>(wins) / static_cast<double>(trials);
  double se = std::sqrt(out.empirical_success * (1.0 - out.empirical_success) /
                        static_cast<double>(trials));
  out.ci_low = out.empirical_success - 1.96 * se;
  out.ci_high = out.empirical_success + 1.96 * se;
  return out;
}

}  // namespace slhash

#endif  // SLHASH_ANALYSIS_HPP
