#include "uspecht/linalg.hpp"

#include <algorithm>
#include <map>
#include <stdexcept>

namespace uspecht {

namespace {

// one elimination step: rows -= (rows[col]/piv[col]) * piv, sparse
SparseRow axpy_eliminate(const SparseRow& row, const SparseRow& piv, int col,
                         const mpq_class& rv, const mpq_class& pv) {
  mpq_class f = rv / pv;
  SparseRow out;
  out.e.reserve(row.e.size() + piv.e.size());
  size_t i = 0, j = 0;
  while (i < row.e.size() || j < piv.e.size()) {
    if (j == piv.e.size() || (i < row.e.size() && row.e[i].first < piv.e[j].first)) {
      if (row.e[i].first != col) out.e.push_back(row.e[i]);
      ++i;
    } else if (i == row.e.size() || piv.e[j].first < row.e[i].first) {
      if (piv.e[j].first != col) out.e.emplace_back(piv.e[j].first, -f * piv.e[j].second);
      ++j;
    } else {
      if (row.e[i].first != col) {
        mpq_class v = row.e[i].second - f * piv.e[j].second;
        if (v != 0) out.e.emplace_back(row.e[i].first, std::move(v));
      }
      ++i;
      ++j;
    }
  }
  return out;
}

struct Elimination {
  std::vector<SparseRow> pivots;  // echelon rows, one per pivot column
  std::vector<int> pivot_cols;    // ascending
};

// forward elimination with fewest-nonzeros pivot choice per column
Elimination eliminate(SparseMatQ a) {
  Elimination out;
  std::vector<SparseRow> active = std::move(a.rows);
  for (int col = 0; col < a.ncols; ++col) {
    int best = -1;
    for (size_t r = 0; r < active.size(); ++r) {
      if (active[r].e.empty() || active[r].e.front().first != col) continue;
      if (best < 0 || active[r].e.size() < active[best].e.size()) best = static_cast<int>(r);
    }
    if (best < 0) continue;
    SparseRow piv = std::move(active[best]);
    active.erase(active.begin() + best);
    mpq_class pv = piv.e.front().second;
    for (auto& row : active) {
      if (row.e.empty() || row.e.front().first != col) continue;
      row = axpy_eliminate(row, piv, col, row.e.front().second, pv);
    }
    out.pivot_cols.push_back(col);
    out.pivots.push_back(std::move(piv));
  }
  return out;
}

}  // namespace

int sparse_rank(SparseMatQ a) { return static_cast<int>(eliminate(std::move(a)).pivot_cols.size()); }

std::vector<SparseRow> sparse_kernel(SparseMatQ a) {
  int ncols = a.ncols;
  Elimination el = eliminate(std::move(a));
  // back-substitute echelon rows to reduced form
  for (int i = static_cast<int>(el.pivots.size()) - 1; i >= 0; --i) {
    for (int r = 0; r < i; ++r) {
      // eliminate el.pivot_cols[i] from row r if present
      int col = el.pivot_cols[i];
      auto& row = el.pivots[r].e;
      auto it = std::lower_bound(row.begin(), row.end(), col,
                                 [](auto& p, int c) { return p.first < c; });
      if (it == row.end() || it->first != col) continue;
      el.pivots[r] =
          axpy_eliminate(el.pivots[r], el.pivots[i], col, it->second, el.pivots[i].e.front().second);
    }
  }
  std::vector<bool> is_pivot(ncols, false);
  for (int c : el.pivot_cols) is_pivot[c] = true;
  std::vector<int> pivot_of_col(ncols, -1);
  for (size_t i = 0; i < el.pivot_cols.size(); ++i) pivot_of_col[el.pivot_cols[i]] = static_cast<int>(i);

  std::vector<SparseRow> kernel;
  for (int free = 0; free < ncols; ++free) {
    if (is_pivot[free]) continue;
    SparseRow v;
    // x_free = 1; x_{pivot col} = -row[free]/row[pivot]
    for (size_t i = 0; i < el.pivots.size(); ++i) {
      auto& row = el.pivots[i].e;
      auto it = std::lower_bound(row.begin(), row.end(), free,
                                 [](auto& p, int c) { return p.first < c; });
      if (it == row.end() || it->first != free) continue;
      mpq_class val = -it->second / row.front().second;
      if (val != 0) v.e.emplace_back(el.pivot_cols[i], std::move(val));
    }
    v.e.emplace_back(free, 1);
    std::sort(v.e.begin(), v.e.end(),
              [](auto& x, auto& y) { return x.first < y.first; });
    kernel.push_back(std::move(v));
  }
  return kernel;
}

CycSolver::CycSolver(std::vector<std::vector<Cyc>> columns, int p) : p_(p) {
  ncols_ = static_cast<int>(columns.size());
  nrows_ = ncols_ ? static_cast<int>(columns[0].size()) : 0;
  u_.assign(nrows_, std::vector<Cyc>(ncols_, Cyc::zero(p)));
  for (int c = 0; c < ncols_; ++c) {
    if (static_cast<int>(columns[c].size()) != nrows_)
      throw std::invalid_argument("CycSolver: ragged columns");
    for (int r = 0; r < nrows_; ++r) u_[r][c] = columns[c][r];
  }
  rank_ = 0;
  for (int col = 0; col < ncols_ && rank_ < nrows_; ++col) {
    int piv = -1;
    for (int r = rank_; r < nrows_; ++r) {
      if (u_[r][col].is_zero()) continue;
      if (piv < 0 || u_[r][col].den() < u_[piv][col].den()) piv = r;
    }
    if (piv < 0) continue;
    if (piv != rank_) {
      std::swap(u_[piv], u_[rank_]);
      ops_.push_back({0, piv, rank_, Cyc::zero(p)});
    }
    for (int r = rank_ + 1; r < nrows_; ++r) {
      if (u_[r][col].is_zero()) continue;
      Cyc f = -(u_[r][col] / u_[rank_][col]);
      for (int c = col; c < ncols_; ++c) {
        if (u_[rank_][c].is_zero()) continue;
        u_[r][c] += f * u_[rank_][c];
      }
      ops_.push_back({1, r, rank_, f});
    }
    pivot_row_.push_back(rank_);
    pivot_col_.push_back(col);
    ++rank_;
  }
}

bool CycSolver::solve(std::vector<Cyc> b, std::vector<Cyc>& x) const {
  if (static_cast<int>(b.size()) != nrows_)
    throw std::invalid_argument("CycSolver: rhs size mismatch");
  if (rank_ != ncols_)
    throw std::logic_error("CycSolver: columns are dependent, solution not unique");
  for (auto& op : ops_) {
    if (op.kind == 0) {
      std::swap(b[op.r1], b[op.r2]);
    } else {
      if (!b[op.r2].is_zero()) b[op.r1] += op.f * b[op.r2];
    }
  }
  // consistency: rows past the rank must have zero rhs
  for (int r = rank_; r < nrows_; ++r)
    if (!b[r].is_zero()) return false;
  x.assign(ncols_, Cyc::zero(p_));
  for (int i = rank_ - 1; i >= 0; --i) {
    int pr = pivot_row_[i], pc = pivot_col_[i];
    Cyc acc = b[pr];
    for (int c = pc + 1; c < ncols_; ++c) {
      if (u_[pr][c].is_zero() || x[c].is_zero()) continue;
      acc -= u_[pr][c] * x[c];
    }
    x[pc] = acc / u_[pr][pc];
  }
  return true;
}

}  // namespace uspecht
