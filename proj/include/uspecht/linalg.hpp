#pragma once

#include <gmpxx.h>

#include <cstdint>
#include <vector>

#include "uspecht/cyclotomic.hpp"

namespace uspecht {

/// Sparse matrix over Q, row-major; rows hold (column, value) pairs sorted
/// by column with no explicit zeros.
struct SparseRow {
  std::vector<std::pair<int, mpq_class>> e;
};

struct SparseMatQ {
  int ncols = 0;
  std::vector<SparseRow> rows;

  void add_row(SparseRow r) { rows.push_back(std::move(r)); }
};

/// Exact rank by sparse fraction elimination (Markowitz-style pivoting with
/// deterministic tie-breaks).
int sparse_rank(SparseMatQ a);

/// Exact kernel basis (right null space), one sparse vector per free column,
/// in ascending free-column order; entries are reduced rationals.
std::vector<SparseRow> sparse_kernel(SparseMatQ a);

/// Dense linear solver over Q(zeta_p) for systems A x = b with unique
/// solutions; the factorization is reusable across right-hand sides.
/// Pivot choice: smallest denominator, then lowest row index.
class CycSolver {
 public:
  /// a: column-major list of columns, each of length nrows.
  CycSolver(std::vector<std::vector<Cyc>> columns, int p);

  int rank() const { return rank_; }
  int rows() const { return nrows_; }
  int cols() const { return ncols_; }

  /// Solves A x = b. Returns false when inconsistent. Requires rank == cols
  /// for the solution to be unique; throws otherwise.
  bool solve(std::vector<Cyc> b, std::vector<Cyc>& x) const;

 private:
  int p_;
  int nrows_, ncols_, rank_;
  // row-echelon form of A plus the recorded row operations
  std::vector<std::vector<Cyc>> u_;          // nrows x ncols
  struct Op {
    int kind;  // 0 = swap(r1, r2), 1 = axpy: row r1 += f * row r2
    int r1, r2;
    Cyc f;
  };
  std::vector<Op> ops_;
  std::vector<int> pivot_row_, pivot_col_;
};

}  // namespace uspecht
