#pragma once

#include <compare>
#include <cstdint>
#include <string>
#include <vector>

namespace uspecht {

/// Row-standard two-row tableau of shape (n-m, m), determined by its second
/// row b_1 < ... < b_m (entries 1..n); the first row is the complement.
struct Tableau {
  int n = 0;
  int m = 0;
  std::vector<int> row2;

  Tableau() = default;
  Tableau(int n_, std::vector<int> row2_);

  std::vector<int> row1() const;
  /// standard <=> b_i > a_i for all i (columns increase downward)
  bool standard() const;
  /// 1 if v is in the first row, 2 if in the second
  int row_of(int v) const;

  /// Packs row2 into one integer whose natural order is the lexicographic
  /// order on second rows (8 bits per entry, b_1 most significant).
  uint64_t lex_code() const;

  std::string to_string() const;

  friend bool operator==(const Tableau& a, const Tableau& b) {
    return a.n == b.n && a.row2 == b.row2;
  }
  friend std::strong_ordering operator<=>(const Tableau& a, const Tableau& b) {
    if (auto c = a.n <=> b.n; c != 0) return c;
    if (auto c = a.m <=> b.m; c != 0) return c;
    return a.lex_code() <=> b.lex_code();
  }
};

/// All row-standard (n-m, m)-tableaux in lexicographic order of second rows.
std::vector<Tableau> enumerate_row_standard(int n, int m);

/// Componentwise order on second rows (b_i <= b'_i for all i).
bool dominance_leq(const Tableau& a, const Tableau& b);

/// Two-row tableau over a punctured alphabet (the labels that survive a
/// pattern removal). Standardness is read off the order-isomorphic
/// renumbering to 1..|alphabet|.
struct ShiftedTableau {
  std::vector<int> alphabet;  // increasing
  std::vector<int> row2;      // increasing subset of alphabet

  Tableau renumbered() const;
  bool standard() const { return renumbered().standard(); }
  std::vector<int> row1() const;

  friend bool operator==(const ShiftedTableau&, const ShiftedTableau&) = default;
};

/// Position set {(b_i, a_i)} with b_1 < ... < b_s, distinct a_i not among the
/// b's, and a_i < b_i.
struct Pattern {
  std::vector<std::pair<int, int>> pos;  // (row label b, column a), b ascending

  Pattern() = default;
  explicit Pattern(std::vector<std::pair<int, int>> pos_);

  int size() const { return static_cast<int>(pos.size()); }
  std::vector<int> rows() const;  // p_I
  std::vector<int> cols() const;  // p_J
  /// fits t <=> all rows lie in the second row of t and all columns outside
  bool fits(const Tableau& t) const;

  std::string to_string() const;

  friend bool operator==(const Pattern&, const Pattern&) = default;
  friend std::strong_ordering operator<=>(const Pattern& a, const Pattern& b) {
    return a.pos <=> b.pos;
  }
};

/// t minus the pattern's rows and columns, as a shifted tableau.
/// Throws std::invalid_argument when p does not fit t.
ShiftedTableau remove_and_shift(const Tableau& t, const Pattern& p);

/// T^lambda_p: the row-standard, non-standard shifted (n-m-s, m-s)-tableaux
/// over the alphabet {1..n} minus the pattern's rows and columns.
std::vector<ShiftedTableau> enumerate_T_lambda_p(int n, int m, const Pattern& p);

/// All k-subsets of 1..n in lexicographic order.
std::vector<std::vector<int>> subsets_lex(int n, int k);

}  // namespace uspecht
