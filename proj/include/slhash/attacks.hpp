#ifndef SLHASH_ATTACKS_HPP
#define SLHASH_ATTACKS_HPP

#include <algorithm>
#include <cmath>
#include <cstdint>
#include <optional>
#include <ostream>
#include <string>
#include <utility>
#include <vector>

#include "slhash/analysis.hpp"
#include "slhash/errors.hpp"
#include "slhash/group.hpp"
#include "slhash/hasher.hpp"
#include "slhash/matrix.hpp"
#include "slhash/params.hpp"
#include "slhash/poly.hpp"
#include "slhash/table.hpp"

namespace slhash {

/// Alternating word A^{k_1} B^{l_1} ... A^{k_m} B^{l_m}. Exponents live in
/// [0, p): the generators have order p, so a stored exponent never encodes
/// a full cycle.
struct FactorizationWord {
  std::vector<std::pair<std::uint64_t, std::uint64_t>> pairs;

  std::uint64_t weight() const {
    std::uint64_t w = 0;
    for (const auto& [k, l] : pairs) w += k + l;
    return w;
  }
};

template <class F>
Matrix<F> evaluate_factorization(const FactorizationWord& w,
                                 const GeneratorSet<F>& gens) {
  Matrix<F> acc =
      Matrix<F>::identity(gens.fp[0].ring(), gens.params.n);
  for (const auto& [k, l] : w.pairs) {
    if (k) acc = mat_mul(acc, mat_pow(gens.a(), k));
    if (l) acc = mat_mul(acc, mat_pow(gens.b(), l));
  }
  return acc;
}

template <class F>
bool verify_factorization(const FactorizationWord& w, const Matrix<F>& target,
                          const GeneratorSet<F>& gens) {
  return evaluate_factorization(w, gens) == target;
}

/// Weight window for solutions that do not degenerate to order-p cycles:
/// C1 log p <= weight <= C2 log p.
struct NontrivialityWindow {
  double c1 = 0;
  double c2 = 0;
};

/// C1 comes from the girth bound (1 / log nc); C2 is a free knob.
inline NontrivialityWindow default_window(int n, const BigInt& c) {
  double nc = static_cast<double>(n) * c.convert_to<double>();
  NontrivialityWindow w;
  w.c1 = 1.0 / std::log(nc);
  w.c2 = 10.0 * w.c1;
  return w;
}

inline bool is_nontrivial(const FactorizationWord& w, const BigInt& p,
                          const NontrivialityWindow& win) {
  double logp = std::log(p.convert_to<double>());
  double weight = static_cast<double>(w.weight());
  return weight >= win.c1 * logp && weight <= win.c2 * logp;
}

/// Free reduction: cancel adjacent inverse pairs.
inline std::vector<Step> free_reduce(std::vector<Step> word) {
  std::vector<Step> out;
  out.reserve(word.size());
  for (Step s : word) {
    if (!out.empty() && out.back() == inverse(s)) {
      out.pop_back();
    } else {
      out.push_back(s);
    }
  }
  return out;
}

inline std::vector<Step> invert_word(const std::vector<Step>& word) {
  std::vector<Step> out;
  out.reserve(word.size());
  for (auto it = word.rbegin(); it != word.rend(); ++it)
    out.push_back(inverse(*it));
  return out;
}

/// Maximal runs of one letter, with signed exponents; reduced words
/// alternate between A-runs and B-runs.
struct ExponentBlock {
  bool is_a;  // false = B
  std::int64_t exp;
};

inline std::vector<ExponentBlock> exponent_blocks(
    const std::vector<Step>& reduced) {
  std::vector<ExponentBlock> out;
  for (Step s : reduced) {
    bool is_a = (s == Step::A || s == Step::AInv);
    std::int64_t e = (s == Step::A || s == Step::B) ? 1 : -1;
    if (!out.empty() && out.back().is_a == is_a) {
      out.back().exp += e;
    } else {
      out.push_back(ExponentBlock{is_a, e});
    }
  }
  return out;
}

/// A colliding pair certifies a factorization of the identity: the word
/// steps(x) * steps(y)^-1 freely reduces to a nonempty relator, whose runs
/// regroup into alternating exponent blocks mod p. A run that is a
/// multiple of p maps to exponent 0 (an order-p cycle: the trivial kind of
/// solution); such relators verify but carry less weight than the run
/// lengths suggest.
template <class F>
FactorizationWord collision_to_relator(std::span<const std::uint8_t> x,
                                       std::span<const std::uint8_t> y,
                                       const AttributionTable& table,
                                       const GeneratorSet<F>& gens) {
  if (x.size() == y.size() && std::equal(x.begin(), x.end(), y.begin())) {
    throw Error(ErrorKind::NotACollision, "inputs are identical");
  }
  Digest<F> dx = hash_trits<F>(x, table, gens);
  Digest<F> dy = hash_trits<F>(y, table, gens);
  if (!(dx == dy)) {
    throw Error(ErrorKind::NotACollision, "digests differ");
  }
  std::vector<Step> word = trits_to_steps(x, table);
  std::vector<Step> yinv = invert_word(trits_to_steps(y, table));
  word.insert(word.end(), yinv.begin(), yinv.end());
  word = free_reduce(std::move(word));

  BigInt p = gens.params.p;
  FactorizationWord fw;
  auto blocks = exponent_blocks(word);
  std::size_t i = 0;
  while (i < blocks.size()) {
    std::uint64_t ka = 0, lb = 0;
    if (blocks[i].is_a) {
      BigInt e = BigInt(blocks[i].exp) % p;
      if (e < 0) e += p;
      ka = e.convert_to<std::uint64_t>();
      ++i;
    }
    if (i < blocks.size() && !blocks[i].is_a) {
      BigInt e = BigInt(blocks[i].exp) % p;
      if (e < 0) e += p;
      lb = e.convert_to<std::uint64_t>();
      ++i;
    }
    fw.pairs.emplace_back(ka, lb);
  }
  return fw;
}

struct CollisionPair {
  Trits x;
  Trits y;
};

/// Birthday search by exhausting trit strings in length order. With
/// `require_nondegenerate`, pairs whose relator contains a run divisible
/// by p are skipped, so the certificate's weight reflects a genuine
/// factorization rather than an order-p cycle.
inline std::optional<CollisionPair> find_collision(
    const GeneratorSet<Fp64>& gens, const AttributionTable& table,
    std::size_t state_budget, bool require_nondegenerate,
    std::size_t max_length = 24) {
  const Fp64& field = gens.fp[0].ring();
  ElementCodec codec(gens.params.n, field.p());
  FlatMap64 first_seen(1 << 12);
  std::vector<Trits> owners;  // index -> earliest input with that digest

  BigInt p = gens.params.p;
  auto degenerate = [&](const Trits& a, const Trits& b) {
    std::vector<Step> w = trits_to_steps(a, table);
    std::vector<Step> binv = invert_word(trits_to_steps(b, table));
    w.insert(w.end(), binv.begin(), binv.end());
    for (const auto& blk : exponent_blocks(free_reduce(std::move(w)))) {
      if (BigInt(blk.exp) % p == 0) return true;
    }
    return false;
  };

  std::size_t states = 0;
  for (std::size_t len = 1; len <= max_length; ++len) {
    Trits cur(len, 1);
    while (true) {
      if (++states > state_budget) return std::nullopt;
      std::uint64_t key =
          codec.encode(hash_trits<Fp64>(cur, table, gens).matrix);
      const std::uint32_t* hit = first_seen.find(key);
      if (hit) {
        const Trits& prev = owners[*hit];
        if (!require_nondegenerate || !degenerate(prev, cur)) {
          return CollisionPair{prev, cur};
        }
      } else {
        first_seen.insert(key, static_cast<std::uint32_t>(owners.size()));
        owners.push_back(cur);
      }
      int i = static_cast<int>(len) - 1;
      while (i >= 0 && cur[i] == 3) cur[i--] = 1;
      if (i < 0) break;
      ++cur[i];
    }
  }
  return std::nullopt;
}

// ---------------------------------------------------------------------------
// E_m polynomial systems
// ---------------------------------------------------------------------------

/// Symbolic power of a unipotent matrix: with N = M - I nilpotent,
/// M^v = sum_j binom(v, j) N^j, an entrywise polynomial in v of degree
/// < n. Valid as a function on F_p because p >= n makes every j! a unit.
inline std::vector<std::vector<MultiPoly>> symbolic_unipotent_power(
    const MatrixFp& m, int vars, int var_index) {
  const Fp64& field = m.ring();
  const int n = m.n();
  MatrixFp nil(field, n);
  for (int i = 0; i < n; ++i)
    for (int j = 0; j < n; ++j)
      nil.at(i, j) = field.sub(m.at(i, j), i == j ? field.one() : 0);

  std::vector<std::vector<MultiPoly>> out(
      n, std::vector<MultiPoly>(n, MultiPoly(field, vars)));

  MatrixFp npow = MatrixFp::identity(field, n);
  MultiPoly binom = MultiPoly::constant(field, vars, 1);  // binom(v, 0)
  std::uint64_t factorial = 1;
  for (int j = 0; j < n; ++j) {
    if (j > 0) {
      // binom(v, j) = v (v-1) ... (v-j+1) / j!
      MultiPoly lin = MultiPoly::variable(field, vars, var_index) -
                      MultiPoly::constant(field, vars, j - 1);
      binom = binom * lin;
      factorial = field.mul(factorial, j % field.p());
      npow = mat_mul(npow, nil);
    }
    MultiPoly coeff =
        j == 0 ? binom : binom.scaled(field.inv(factorial % field.p()));
    for (int r = 0; r < n; ++r) {
      for (int c = 0; c < n; ++c) {
        if (npow.at(r, c) == 0) continue;
        out[r][c] = out[r][c] + coeff.scaled(npow.at(r, c));
      }
    }
  }
  return out;
}

/// The equations E_m: entries of A^{k_1} B^{l_1} ... A^{k_m} B^{l_m} - M,
/// one polynomial in 2m variables per matrix entry. Variables are ordered
/// k_1, l_1, ..., k_m, l_m.
struct EmSystem {
  int n;
  std::uint64_t p;
  int m;
  std::vector<MultiPoly> equations;  // row-major n^2 entries

  /// LHS product evaluated at a concrete exponent tuple, entrywise.
  MatrixFp eval_lhs(const std::vector<std::uint64_t>& point,
                    const Fp64& field, const MatrixFp& target) const {
    MatrixFp out(field, n);
    for (int i = 0; i < n; ++i)
      for (int j = 0; j < n; ++j) {
        std::uint64_t v = equations[std::size_t(i) * n + j].eval(point);
        out.at(i, j) = field.add(v, target.at(i, j));
      }
    return out;
  }
};

inline EmSystem emit_em_system(int m, const MatrixFp& target,
                               const GeneratorSet<Fp64>& gens) {
  if (m < 1) throw Error(ErrorKind::DimensionMismatch, "m must be >= 1");
  const Fp64& field = gens.fp[0].ring();
  const int n = gens.params.n;
  const int vars = 2 * m;

  // product of symbolic powers, alternating A and B
  std::vector<std::vector<MultiPoly>> acc;
  for (int blk = 0; blk < 2 * m; ++blk) {
    const MatrixFp& base = (blk % 2 == 0) ? gens.a() : gens.b();
    auto factor = symbolic_unipotent_power(base, vars, blk);
    if (blk == 0) {
      acc = std::move(factor);
      continue;
    }
    std::vector<std::vector<MultiPoly>> next(
        n, std::vector<MultiPoly>(n, MultiPoly(field, vars)));
    for (int i = 0; i < n; ++i)
      for (int k = 0; k < n; ++k) {
        if (acc[i][k].is_zero()) continue;
        for (int j = 0; j < n; ++j)
          next[i][j] = next[i][j] + acc[i][k] * factor[k][j];
      }
    acc = std::move(next);
  }

  EmSystem sys{n, field.p(), m, {}};
  sys.equations.reserve(std::size_t(n) * n);
  for (int i = 0; i < n; ++i)
    for (int j = 0; j < n; ++j)
      sys.equations.push_back(
          acc[i][j] - MultiPoly::constant(field, vars, target.at(i, j)));
  return sys;
}

/// Text emission, one equation per line: "i j" then coefficient and
/// exponent vector for each monomial, groups separated by ';'.
inline void write_em_system(std::ostream& out, const EmSystem& sys) {
  out << "# E_m system: n=" << sys.n << " p=" << sys.p << " m=" << sys.m
      << " vars=k1,l1,...,k" << sys.m << ",l" << sys.m << '\n';
  for (int i = 0; i < sys.n; ++i) {
    for (int j = 0; j < sys.n; ++j) {
      out << i + 1 << ' ' << j + 1;
      const auto& poly = sys.equations[std::size_t(i) * sys.n + j];
      for (const auto& [mono, coeff] : poly.terms()) {
        out << " ; " << coeff;
        for (auto e : mono) out << ' ' << int(e);
      }
      out << '\n';
    }
  }
}

// ---------------------------------------------------------------------------
// Palindromic attack experiment
// ---------------------------------------------------------------------------

struct SymmetrizerResult {
  MatrixFp c;
  MatrixFp a_hat;
  MatrixFp b_hat;
  std::uint64_t candidates_tried = 0;
  std::uint64_t matches_found = 0;
};

enum class SymmetrizerMode { Exhaustive, Bilinear };

/// Conjugating C symmetrizes both generators iff S = C^T C satisfies
/// S A = A^T S and S B = B^T S; the scan tests that, so no per-candidate
/// inversion is needed.
inline bool symmetrizes(const MatrixFp& c, const MatrixFp& a,
                        const MatrixFp& at, const MatrixFp& b,
                        const MatrixFp& bt) {
  MatrixFp s = mat_mul(c.transpose(), c);
  return mat_mul(s, a) == mat_mul(at, s) && mat_mul(s, b) == mat_mul(bt, s);
}

namespace detail {

// lexicographic iteration over all n x n matrices with entries in [0, p)
inline bool next_matrix(MatrixFp& m) {
  const std::uint64_t p = m.ring().p();
  const int n = m.n();
  for (int i = n * n - 1; i >= 0; --i) {
    auto& v = m.at(i / n, i % n);
    if (v + 1 < p) {
      ++v;
      return true;
    }
    v = 0;
  }
  return false;
}

}  // namespace detail

/// Exhaustive scan over GL_n(F_p) in lexicographic order; the first match
/// is therefore the lexicographically smallest symmetrizer.
inline std::optional<SymmetrizerResult> find_symmetrizer_exhaustive(
    const GeneratorSet<Fp64>& gens, std::uint64_t budget) {
  const Fp64& field = gens.fp[0].ring();
  const int n = gens.params.n;
  BigInt total = boost::multiprecision::pow(BigInt(field.p()), unsigned(n * n));
  if (total > budget) {
    throw Error(ErrorKind::BudgetExceeded,
                "exhaustive symmetrizer scan needs p^(n^2) = " +
                    total.str() + " candidates, budget is " +
                    std::to_string(budget));
  }
  MatrixFp at = gens.a().transpose();
  MatrixFp bt = gens.b().transpose();
  MatrixFp c(field, n);
  SymmetrizerResult res{c, c, c, 0, 0};
  std::optional<MatrixFp> first;
  do {
    ++res.candidates_tried;
    if (field.is_zero(mat_det(c))) continue;
    if (symmetrizes(c, gens.a(), at, gens.b(), bt)) {
      ++res.matches_found;
      if (!first) first = c;
    }
  } while (detail::next_matrix(c));
  if (!first) return std::nullopt;
  MatrixFp cinv = mat_inv(*first);
  res.c = *first;
  res.a_hat = mat_mul(mat_mul(*first, gens.a()), cinv);
  res.b_hat = mat_mul(mat_mul(*first, gens.b()), cinv);
  return res;
}

struct SymmetrizerDensity {
  std::uint64_t count_sl = 0;      // symmetrizers with det 1
  BigInt total_sl = 0;             // |SL_n(F_p)|
  std::uint64_t count_gl = 0;      // symmetrizers in GL
  BigInt total_gl = 0;             // |GL_n(F_p)|

  double fraction_sl() const {
    return static_cast<double>(count_sl) / total_sl.convert_to<double>();
  }
  /// The criterion is scalar-invariant, so the GL fraction equals the
  /// fraction among projective classes.
  double fraction_gl() const {
    return static_cast<double>(count_gl) / total_gl.convert_to<double>();
  }
};

/// Measures how rare symmetrizers are, under both readings of "elements":
/// det-1 matrices and all invertible matrices (equivalently, GL mod
/// scalars).
inline SymmetrizerDensity symmetrizer_density(const GeneratorSet<Fp64>& gens,
                                              std::uint64_t budget) {
  const Fp64& field = gens.fp[0].ring();
  const int n = gens.params.n;
  BigInt total = boost::multiprecision::pow(BigInt(field.p()), unsigned(n * n));
  if (total > budget) {
    throw Error(ErrorKind::BudgetExceeded,
                "density scan needs p^(n^2) candidates over budget");
  }
  SymmetrizerDensity d;
  d.total_sl = group_order(n, field.p());
  d.total_gl = d.total_sl * (field.p() - 1);
  MatrixFp at = gens.a().transpose();
  MatrixFp bt = gens.b().transpose();
  MatrixFp c(field, n);
  do {
    std::uint64_t det = mat_det(c);
    if (det == 0) continue;
    if (symmetrizes(c, gens.a(), at, gens.b(), bt)) {
      ++d.count_gl;
      if (det == 1) ++d.count_sl;
    }
  } while (detail::next_matrix(c));
  return d;
}

/// Heuristic route: solve the bilinear conditions S A = A^T S, S B = B^T S
/// for symmetric invertible S, then hunt for C with C^T C = S by random
/// congruence. Labeled heuristic; the exhaustive scan is ground truth.
inline std::optional<SymmetrizerResult> find_symmetrizer_bilinear(
    const GeneratorSet<Fp64>& gens, std::uint64_t budget,
    std::uint64_t seed = 0) {
  const Fp64& field = gens.fp[0].ring();
  const int n = gens.params.n;
  const std::uint64_t p = field.p();

  // unknowns: the n(n+1)/2 entries of symmetric S
  const int unknowns = n * (n + 1) / 2;
  auto s_index = [&](int i, int j) {
    if (i > j) std::swap(i, j);
    return i * n - i * (i - 1) / 2 + (j - i);
  };

  // rows: entries of S M - M^T S for M in {A, B}
  std::vector<std::vector<std::uint64_t>> rows;
  for (const MatrixFp* mp : {&gens.a(), &gens.b()}) {
    const MatrixFp& m = *mp;
    for (int i = 0; i < n; ++i) {
      for (int j = 0; j < n; ++j) {
        std::vector<std::uint64_t> row(unknowns, 0);
        for (int k = 0; k < n; ++k) {
          // (S M)_{ij} contributes S_{ik} M_{kj}
          int u = s_index(i, k);
          row[u] = field.add(row[u], m.at(k, j));
          // (M^T S)_{ij} = sum_k M_{ki} S_{kj}
          int v = s_index(k, j);
          row[v] = field.sub(row[v], m.at(k, i));
        }
        rows.push_back(std::move(row));
      }
    }
  }

  // nullspace by Gaussian elimination
  int rank = 0;
  std::vector<int> pivot_col;
  for (int col = 0; col < unknowns && rank < static_cast<int>(rows.size());
       ++col) {
    int piv = -1;
    for (int r = rank; r < static_cast<int>(rows.size()); ++r)
      if (rows[r][col]) { piv = r; break; }
    if (piv < 0) continue;
    std::swap(rows[rank], rows[piv]);
    std::uint64_t inv = field.inv(rows[rank][col]);
    for (auto& v : rows[rank]) v = field.mul(v, inv);
    for (int r = 0; r < static_cast<int>(rows.size()); ++r) {
      if (r == rank || !rows[r][col]) continue;
      std::uint64_t f = rows[r][col];
      for (int cc = 0; cc < unknowns; ++cc)
        rows[r][cc] = field.sub(rows[r][cc], field.mul(f, rows[rank][cc]));
    }
    pivot_col.push_back(col);
    ++rank;
  }
  std::vector<bool> is_pivot(unknowns, false);
  for (int c : pivot_col) is_pivot[c] = true;
  std::vector<int> free_cols;
  for (int c = 0; c < unknowns; ++c)
    if (!is_pivot[c]) free_cols.push_back(c);
  if (free_cols.empty()) return std::nullopt;

  std::mt19937_64 rng(seed);
  MatrixFp at = gens.a().transpose();
  MatrixFp bt = gens.b().transpose();

  for (std::uint64_t trial = 0; trial < budget; ++trial) {
    // random vector in the nullspace
    std::vector<std::uint64_t> sol(unknowns, 0);
    for (int c : free_cols) sol[c] = rng() % p;
    for (int r = rank - 1; r >= 0; --r) {
      std::uint64_t v = 0;
      for (int c = pivot_col[r] + 1; c < unknowns; ++c)
        v = field.add(v, field.mul(rows[r][c], sol[c]));
      sol[pivot_col[r]] = field.neg(v);
    }
    MatrixFp s(field, n);
    for (int i = 0; i < n; ++i)
      for (int j = 0; j < n; ++j) s.at(i, j) = sol[s_index(i, j)];
    if (field.is_zero(mat_det(s))) continue;

    // attempt S = C^T C: find P with P S P^T = D diagonal (symmetric
    // congruence), then C = sqrt(D) (P^T)^-1 needs each d_i to be a square
    MatrixFp pmat = MatrixFp::identity(field, n);
    auto congruent = [&] { return mat_mul(mat_mul(pmat, s), pmat.transpose()); };
    bool ok = true;
    for (int i = 0; i < n && ok; ++i) {
      MatrixFp d = congruent();
      if (field.is_zero(d.at(i, i))) {
        // mix in a later row to create a pivot; a nonzero multiplier
        // always exists for odd p because the quadratic 2c*d_ri + c^2*d_rr
        // has at most one nonzero root
        int src = -1;
        for (int r = i + 1; r < n; ++r)
          if (!field.is_zero(d.at(r, i))) { src = r; break; }
        if (src < 0) { ok = false; break; }
        bool fixed = false;
        for (std::uint64_t mult = 1; mult < p && !fixed; ++mult) {
          std::uint64_t dii = field.add(
              field.mul(field.add(mult, mult), d.at(i, src)),
              field.mul(field.mul(mult, mult), d.at(src, src)));
          if (!field.is_zero(dii)) {
            for (int c = 0; c < n; ++c)
              pmat.at(i, c) =
                  field.add(pmat.at(i, c), field.mul(mult, pmat.at(src, c)));
            fixed = true;
          }
        }
        if (!fixed) { ok = false; break; }
        d = congruent();
      }
      std::uint64_t inv = field.inv(d.at(i, i));
      for (int r = i + 1; r < n; ++r) {
        if (field.is_zero(d.at(r, i))) continue;
        std::uint64_t f = field.mul(d.at(r, i), inv);
        for (int c = 0; c < n; ++c)
          pmat.at(r, c) = field.sub(pmat.at(r, c), field.mul(f, pmat.at(i, c)));
      }
    }
    if (!ok) continue;
    MatrixFp dmat = congruent();
    MatrixFp root(field, n);
    bool sq = true;
    for (int i = 0; i < n && sq; ++i) {
      std::uint64_t v = dmat.at(i, i);
      std::uint64_t r = 0;
      bool found = false;
      for (; r < p; ++r)
        if (field.mul(r, r) == v) { found = true; break; }
      if (!found || r == 0) { sq = false; break; }
      root.at(i, i) = r;
    }
    if (!sq) continue;
    // with P S P^T = D = root^T root: C = root (P^T)^-1 gives C^T C = S
    MatrixFp cc = mat_mul(root, mat_inv(pmat.transpose()));
    if (field.is_zero(mat_det(cc))) continue;
    if (!symmetrizes(cc, gens.a(), at, gens.b(), bt)) continue;
    MatrixFp cinv = mat_inv(cc);
    SymmetrizerResult res{cc,
                          mat_mul(mat_mul(cc, gens.a()), cinv),
                          mat_mul(mat_mul(cc, gens.b()), cinv),
                          trial + 1,
                          1};
    return res;
  }
  return std::nullopt;
}

/// The palindromic-attack map rho(M) = A M A + B M B (in the conjugated,
/// symmetric generators).
inline MatrixFp rho(const MatrixFp& m, const MatrixFp& a_hat,
                    const MatrixFp& b_hat) {
  if (m.n() != a_hat.n() || m.n() != b_hat.n()) {
    throw Error(ErrorKind::DimensionMismatch, "rho dimension mismatch");
  }
  return mat_add(mat_mul(mat_mul(a_hat, m), a_hat),
                 mat_mul(mat_mul(b_hat, m), b_hat));
}

struct PowerWitness {
  std::uint64_t i = 0;
  std::optional<std::uint64_t> witness;  // entry of rho(M) that is no i-th
                                         // power of an entry of M
};

/// For each exponent i in [1, p-1]: an entry of rho(M) outside
/// { e^i : e entry of M }, or failure for that i.
inline std::vector<PowerWitness> power_entry_witness(const MatrixFp& m,
                                                     const MatrixFp& rho_m,
                                                     const Fp64& field) {
  std::vector<PowerWitness> out;
  for (std::uint64_t i = 1; i < field.p(); ++i) {
    std::vector<bool> is_power(field.p(), false);
    for (const auto& e : m.entries()) is_power[field.pow(e, i)] = true;
    PowerWitness w{i, std::nullopt};
    for (const auto& r : rho_m.entries()) {
      if (!is_power[r]) {
        w.witness = r;
        break;
      }
    }
    out.push_back(w);
  }
  return out;
}

}  // namespace slhash

#endif  // SLHASH_ATTACKS_HPP
