#ifndef SLHASH_TABLE_HPP
#define SLHASH_TABLE_HPP

#include <array>
#include <cstdint>
#include <istream>
#include <ostream>
#include <sstream>
#include <string>

#include "slhash/errors.hpp"

namespace slhash {

/// The four step matrices, as abstract labels. Values are stable indices
/// into GeneratorSet::fp.
enum class Step : std::uint8_t { A = 0, B = 1, AInv = 2, BInv = 3 };

inline Step inverse(Step s) {
  switch (s) {
    case Step::A: return Step::AInv;
    case Step::AInv: return Step::A;
    case Step::B: return Step::BInv;
    case Step::BInv: return Step::B;
  }
  return Step::A;  // unreachable
}

inline int step_index(Step s) { return static_cast<int>(s); }

inline const char* step_name(Step s) {
  switch (s) {
    case Step::A: return "A";
    case Step::B: return "B";
    case Step::AInv: return "A^-1";
    case Step::BInv: return "B^-1";
  }
  return "?";
}

/// The maps s and s_lambda driving the non-backtracking encoding:
/// s : [4] -> steps is a bijection, and each row s_lambda : [3] -> steps
/// omits exactly s(lambda). first_row is the row used for the first trit;
/// parallel hashing restarts segments from other rows.
class AttributionTable {
 public:
  AttributionTable(std::array<Step, 4> s,
                   std::array<std::array<Step, 3>, 4> rows, int first_row)
      : s_(s), rows_(rows), first_row_(first_row) {
    validate();
    for (int lam = 0; lam < 4; ++lam) {
      row_for_last_[step_index(inverse(s_[lam]))] = lam;
    }
  }

  /// Row index (0-based lambda - 1) of the map s_lambda.
  const std::array<Step, 3>& row(int lam) const { return rows_[lam]; }
  Step s(int lam) const { return s_[lam]; }
  int first_row() const { return first_row_; }

  /// Row used after `last`: lambda = s^-1(last^-1).
  int row_after(Step last) const { return row_for_last_[step_index(last)]; }

  /// Fresh walks behave exactly as if this step had just been taken.
  Step initial_context() const { return inverse(s_[first_row_]); }

  /// Next step matrix for a trit in {1,2,3} given the last step taken.
  Step next_step(Step last, int trit) const {
    if (trit < 1 || trit > 3) {
      throw Error(ErrorKind::InvalidTrit,
                  "trit out of range [1,3]: " + std::to_string(trit));
    }
    return rows_[row_after(last)][trit - 1];
  }

  bool operator==(const AttributionTable& o) const {
    return s_ == o.s_ && rows_ == o.rows_ && first_row_ == o.first_row_;
  }

 private:
  void validate() {
    if (first_row_ < 0 || first_row_ > 3) {
      throw Error(ErrorKind::InvalidTable, "first_row out of range");
    }
    std::array<bool, 4> seen{};
    for (Step v : s_) {
      if (seen[step_index(v)])
        throw Error(ErrorKind::InvalidTable, "s is not a bijection");
      seen[step_index(v)] = true;
    }
    for (int lam = 0; lam < 4; ++lam) {
      std::array<bool, 4> used{};
      for (Step v : rows_[lam]) {
        if (v == s_[lam])
          throw Error(ErrorKind::InvalidTable,
                      "row " + std::to_string(lam + 1) +
                          " must omit s(lambda)");
        if (used[step_index(v)])
          throw Error(ErrorKind::InvalidTable,
                      "row " + std::to_string(lam + 1) + " repeats a step");
        used[step_index(v)] = true;
      }
    }
  }

  std::array<Step, 4> s_;
  std::array<std::array<Step, 3>, 4> rows_;
  int first_row_;
  std::array<int, 4> row_for_last_{};
};

/// The concrete attribution of the worked example: s = (A, B, A^-1, B^-1),
/// rows s_1..s_4 as below, first trit through s_1.
inline AttributionTable default_table() {
  using enum Step;
  return AttributionTable(
      {A, B, AInv, BInv},
      {{
          {B, AInv, BInv},   // s_1 (used after A^-1)
          {A, AInv, BInv},   // s_2 (used after B^-1)
          {A, BInv, B},      // s_3 (used after A)
          {A, AInv, B},      // s_4 (used after B)
      }},
      0);
}

namespace detail {

inline Step parse_step_token(const std::string& tok) {
  if (tok == "A") return Step::A;
  if (tok == "B") return Step::B;
  if (tok == "A^-1" || tok == "A-1" || tok == "Ainv" || tok == "a")
    return Step::AInv;
  if (tok == "B^-1" || tok == "B-1" || tok == "Binv" || tok == "b")
    return Step::BInv;
  throw Error(ErrorKind::ParseError, "unknown step token '" + tok + "'");
}

}  // namespace detail

/// Parses a table from a 4x3 text grid: four lines "label: t1 t2 t3" where
/// label is the row's own step s(lambda) in the order s_1..s_4, e.g.
///   A: B A^-1 B^-1
/// An optional trailing line "first_row = r" overrides the default 1.
inline AttributionTable parse_table_grid(std::istream& in) {
  std::array<Step, 4> s{};
  std::array<std::array<Step, 3>, 4> rows{};
  int first_row = 0;
  int lam = 0;
  std::string line;
  while (std::getline(in, line)) {
    if (line.find_first_not_of(" \t\r") == std::string::npos) continue;
    auto colon = line.find(':');
    if (colon == std::string::npos) {
      auto eq = line.find('=');
      if (line.find("first_row") != std::string::npos &&
          eq != std::string::npos) {
        first_row = std::stoi(line.substr(eq + 1)) - 1;
        continue;
      }
      throw Error(ErrorKind::ParseError, "bad table line: " + line);
    }
    if (lam >= 4) throw Error(ErrorKind::ParseError, "too many table rows");
    s[lam] = detail::parse_step_token(line.substr(0, colon));
    std::istringstream ls(line.substr(colon + 1));
    std::string tok;
    for (int t = 0; t < 3; ++t) {
      if (!(ls >> tok))
        throw Error(ErrorKind::ParseError, "table row needs 3 steps");
      rows[lam][t] = detail::parse_step_token(tok);
    }
    ++lam;
  }
  if (lam != 4) throw Error(ErrorKind::ParseError, "table needs 4 rows");
  return AttributionTable(s, rows, first_row);
}

inline void print_table_grid(std::ostream& out, const AttributionTable& t) {
  for (int lam = 0; lam < 4; ++lam) {
    out << step_name(t.s(lam)) << ':';
    for (int i = 0; i < 3; ++i) out << ' ' << step_name(t.row(lam)[i]);
    out << '\n';
  }
  out << "first_row = " << t.first_row() + 1 << '\n';
}

}  // namespace slhash

#endif  // SLHASH_TABLE_HPP
