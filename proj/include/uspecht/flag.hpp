#pragma once

#include <cstdint>
#include <stdexcept>
#include <string>
#include <utility>
#include <vector>

#include "uspecht/gf.hpp"
#include "uspecht/tableau.hpp"

namespace uspecht {

using Root = std::pair<int, int>;  // (i, j), i > j, 1-based

/// Free-entry positions J_t of a batch: (b, j) with b in the second row,
/// j < b not in the second row; fixed order (b ascending, then j ascending).
std::vector<Root> jt_positions(int n, const std::vector<int>& row2);

/// Canonical representative of an m-dimensional subspace of GF(q)^n
/// ("last 1" row-reduced form). Stored as a dense m x n matrix plus the
/// row labels b_1 < ... < b_m; entries outside the free positions are the
/// last 1's and forced zeros.
struct NormalMatrix {
  int n = 0;
  int m = 0;
  std::vector<int> row2;     // row labels
  std::vector<uint8_t> a;    // m x n row-major, row i holds label row2[i]

  NormalMatrix() = default;
  NormalMatrix(int n_, std::vector<int> row2_);

  Tableau tab() const { return Tableau(n, row2); }
  /// entry l_{b j} by row label b and 1-based column j
  uint8_t at(int b, int j) const;
  void set(int b, int j, uint8_t v);
  int row_index(int b) const;  // 0-based position of label b

  /// checks the last-1 shape conditions
  bool well_formed() const;
  /// at most one nonzero free entry in each row and each column
  bool is_pattern_matrix() const;

  std::string to_string() const;

  friend bool operator==(const NormalMatrix&, const NormalMatrix&) = default;
};

/// All matrices of one batch, addressable by a radix-q key over the free
/// entries (J_t order as above; first position is the most significant
/// digit, so ascending keys match lexicographic order on free entries).
class Batch {
 public:
  Batch(Tableau t, const Gf& gf);

  const Tableau& tab() const { return t_; }
  const std::vector<Root>& jt() const { return jt_; }
  int jt_size() const { return static_cast<int>(jt_.size()); }
  uint64_t size() const { return size_; }
  const Gf& gf() const { return gf_; }

  uint64_t key_of(const NormalMatrix& L) const;
  NormalMatrix matrix(uint64_t key) const;
  std::vector<uint8_t> digits(uint64_t key) const;  // aligned with jt()

 private:
  Tableau t_;
  const Gf& gf_;
  std::vector<Root> jt_;
  uint64_t size_;
};

/// Invertible n x n matrix over GF(q) acting on row spaces from the right.
struct GroupElement {
  int n = 0;
  std::vector<uint8_t> a;  // n x n row-major

  static GroupElement identity(int n);
  /// x_{ij}(alpha) = E_n + alpha * epsilon_{ij}
  static GroupElement root_element(int n, int i, int j, uint8_t alpha);
  uint8_t at(int i, int j) const { return a[(i - 1) * n + (j - 1)]; }
  GroupElement mul(const GroupElement& o, const Gf& gf) const;
};

/// The unique last-1 representative with the same row space.
/// rows: full-rank m x n matrix (row-major). Throws on rank deficiency.
NormalMatrix normal_form(int n, int m, const std::vector<uint8_t>& rows, const Gf& gf);

/// L o g = normal_form(L * g)
NormalMatrix circle_action(const NormalMatrix& L, const GroupElement& g, const Gf& gf);

/// Pointwise sum of free entries (same batch); last 1's untouched.
NormalMatrix diamond_add(const NormalMatrix& M, const NormalMatrix& N, const Gf& gf);
NormalMatrix diamond_neg(const NormalMatrix& M, const Gf& gf);

struct EnumerationBudget {
  uint64_t max_matrices = 5'000'000;
};

/// All of Xi_{m,n} grouped by batch (tableaux in lexicographic order), each
/// batch in ascending key order. Throws BudgetExceeded past the budget.
struct BudgetExceeded : std::runtime_error {
  explicit BudgetExceeded(const std::string& w) : std::runtime_error(w) {}
};
std::vector<NormalMatrix> enumerate_xi(int m, int n, const Gf& gf,
                                       const EnumerationBudget& budget = {});
/// |Xi_{m,n}| without materializing (still guarded by the budget).
uint64_t xi_size(int m, int n, const Gf& gf, const EnumerationBudget& budget = {});

}  // namespace uspecht
