#include "uspecht/flag.hpp"

#include <algorithm>
#include <stdexcept>

namespace uspecht {

std::vector<Root> jt_positions(int /*n*/, const std::vector<int>& row2) {
  std::vector<Root> out;
  for (int b : row2) {
    for (int j = 1; j < b; ++j) {
      if (!std::binary_search(row2.begin(), row2.end(), j)) out.emplace_back(b, j);
    }
  }
  return out;  // already (b asc, j asc)
}

NormalMatrix::NormalMatrix(int n_, std::vector<int> row2_)
    : n(n_), row2(std::move(row2_)) {
  m = static_cast<int>(row2.size());
  a.assign(static_cast<size_t>(m) * n, 0);
  for (int i = 0; i < m; ++i) a[static_cast<size_t>(i) * n + (row2[i] - 1)] = 1;
}

int NormalMatrix::row_index(int b) const {
  auto it = std::lower_bound(row2.begin(), row2.end(), b);
  if (it == row2.end() || *it != b) throw std::invalid_argument("no such row label");
  return static_cast<int>(it - row2.begin());
}

uint8_t NormalMatrix::at(int b, int j) const {
  return a[static_cast<size_t>(row_index(b)) * n + (j - 1)];
}

void NormalMatrix::set(int b, int j, uint8_t v) {
  a[static_cast<size_t>(row_index(b)) * n + (j - 1)] = v;
}

bool NormalMatrix::well_formed() const {
  for (int i = 0; i < m; ++i) {
    int b = row2[i];
    if (at(b, b) != 1) return false;
    for (int j = b + 1; j <= n; ++j)
      if (at(b, j) != 0) return false;
    for (int k = i + 1; k < m; ++k)
      if (at(row2[k], b) != 0) return false;
  }
  return true;
}

bool NormalMatrix::is_pattern_matrix() const {
  auto jt = jt_positions(n, row2);
  std::vector<int> rcount(n + 1, 0), ccount(n + 1, 0);
  for (auto& [b, j] : jt) {
    if (at(b, j) == 0) continue;
    if (++rcount[b] > 1 || ++ccount[j] > 1) return false;
  }
  return true;
}

std::string NormalMatrix::to_string() const {
  std::string s;
  for (int i = 0; i < m; ++i) {
    s += "[";
    for (int j = 1; j <= n; ++j) {
      if (j > 1) s += " ";
      s += std::to_string(int(a[static_cast<size_t>(i) * n + j - 1]));
    }
    s += "]b" + std::to_string(row2[i]);
    if (i + 1 < m) s += " ";
  }
  return s;
}

Batch::Batch(Tableau t, const Gf& gf) : t_(std::move(t)), gf_(gf) {
  jt_ = jt_positions(t_.n, t_.row2);
  size_ = 1;
  for (size_t i = 0; i < jt_.size(); ++i) {
    if (size_ > (uint64_t(1) << 58) / gf_.q())
      throw BudgetExceeded("batch of " + t_.to_string() + " is too large to index");
    size_ *= gf_.q();
  }
}

uint64_t Batch::key_of(const NormalMatrix& L) const {
  uint64_t key = 0;
  for (auto& [b, j] : jt_) key = key * gf_.q() + L.at(b, j);
  return key;
}

std::vector<uint8_t> Batch::digits(uint64_t key) const {
  std::vector<uint8_t> d(jt_.size());
  for (int i = static_cast<int>(jt_.size()) - 1; i >= 0; --i) {
    d[i] = static_cast<uint8_t>(key % gf_.q());
    key /= gf_.q();
  }
  return d;
}

NormalMatrix Batch::matrix(uint64_t key) const {
  NormalMatrix L(t_.n, t_.row2);
  auto d = digits(key);
  for (size_t i = 0; i < jt_.size(); ++i) L.set(jt_[i].first, jt_[i].second, d[i]);
  return L;
}

GroupElement GroupElement::identity(int n) {
  GroupElement g;
  g.n = n;
  g.a.assign(static_cast<size_t>(n) * n, 0);
  for (int i = 0; i < n; ++i) g.a[static_cast<size_t>(i) * n + i] = 1;
  return g;
}

GroupElement GroupElement::root_element(int n, int i, int j, uint8_t alpha) {
  if (i == j || i < 1 || j < 1 || i > n || j > n)
    throw std::invalid_argument("root_element: bad position");
  GroupElement g = identity(n);
  g.a[static_cast<size_t>(i - 1) * n + (j - 1)] = alpha;
  return g;
}

GroupElement GroupElement::mul(const GroupElement& o, const Gf& gf) const {
  GroupElement r;
  r.n = n;
  r.a.assign(static_cast<size_t>(n) * n, 0);
  for (int i = 0; i < n; ++i)
    for (int k = 0; k < n; ++k) {
      uint8_t v = a[static_cast<size_t>(i) * n + k];
      if (!v) continue;
      for (int j = 0; j < n; ++j) {
        uint8_t w = o.a[static_cast<size_t>(k) * n + j];
        if (!w) continue;
        auto& c = r.a[static_cast<size_t>(i) * n + j];
        c = gf.add(c, gf.mul(v, w));
      }
    }
  return r;
}

NormalMatrix normal_form(int n, int m, const std::vector<uint8_t>& rows, const Gf& gf) {
  if (static_cast<int>(rows.size()) != m * n)
    throw std::invalid_argument("normal_form: bad dimensions");
  // Work on the column-reversed matrix: the last-1 shape is the ordinary
  // reduced row echelon form there.
  std::vector<std::vector<uint8_t>> w(m, std::vector<uint8_t>(n));
  for (int i = 0; i < m; ++i)
    for (int j = 0; j < n; ++j) w[i][j] = rows[static_cast<size_t>(i) * n + (n - 1 - j)];

  int rank = 0;
  std::vector<int> pivot_col;
  for (int col = 0; col < n && rank < m; ++col) {
    int piv = -1;
    for (int r = rank; r < m; ++r)
      if (w[r][col] != 0) {
        piv = r;
        break;
      }
    if (piv < 0) continue;
    std::swap(w[piv], w[rank]);
    uint8_t inv = gf.inv(w[rank][col]);
    for (int j = col; j < n; ++j) w[rank][j] = gf.mul(w[rank][j], inv);
    for (int r = 0; r < m; ++r) {
      if (r == rank || w[r][col] == 0) continue;
      uint8_t f = w[r][col];
      for (int j = col; j < n; ++j) w[r][j] = gf.sub(w[r][j], gf.mul(f, w[rank][j]));
    }
    pivot_col.push_back(col);
    ++rank;
  }
  if (rank < m) throw std::invalid_argument("normal_form: rank deficient input");

  // Undo the reversal: row with pivot at reversed column c has its last 1 in
  // original column n - c; labels must increase, so reverse the row order.
  std::vector<int> labels(m);
  for (int r = 0; r < m; ++r) labels[r] = n - pivot_col[r];
  NormalMatrix L(n, std::vector<int>(labels.rbegin(), labels.rend()));
  for (int r = 0; r < m; ++r) {
    int b = labels[r];
    for (int j = 0; j < n; ++j) L.set(b, n - j, w[r][j]);
  }
  return L;
}

NormalMatrix circle_action(const NormalMatrix& L, const GroupElement& g, const Gf& gf) {
  if (L.n != g.n) throw std::invalid_argument("circle_action: dimension mismatch");
  std::vector<uint8_t> prod(static_cast<size_t>(L.m) * L.n, 0);
  for (int i = 0; i < L.m; ++i)
    for (int k = 0; k < L.n; ++k) {
      uint8_t v = L.a[static_cast<size_t>(i) * L.n + k];
      if (!v) continue;
      for (int j = 0; j < L.n; ++j) {
        uint8_t w = g.a[static_cast<size_t>(k) * g.n + j];
        if (!w) continue;
        auto& c = prod[static_cast<size_t>(i) * L.n + j];
        c = gf.add(c, gf.mul(v, w));
      }
    }
  return normal_form(L.n, L.m, prod, gf);
}

NormalMatrix diamond_add(const NormalMatrix& M, const NormalMatrix& N, const Gf& gf) {
  if (M.row2 != N.row2 || M.n != N.n)
    throw std::invalid_argument("diamond_add: batch mismatch");
  NormalMatrix R(M.n, M.row2);
  for (auto& [b, j] : jt_positions(M.n, M.row2)) R.set(b, j, gf.add(M.at(b, j), N.at(b, j)));
  return R;
}

NormalMatrix diamond_neg(const NormalMatrix& M, const Gf& gf) {
  NormalMatrix R(M.n, M.row2);
  for (auto& [b, j] : jt_positions(M.n, M.row2)) R.set(b, j, gf.neg(M.at(b, j)));
  return R;
}

uint64_t xi_size(int m, int n, const Gf& gf, const EnumerationBudget& budget) {
  if (m < 0 || m > n - m) throw std::invalid_argument("xi: need 0 <= m <= n/2");
  uint64_t total = 0;
  for (auto& t : enumerate_row_standard(n, m)) {
    Batch b(t, gf);
    total += b.size();
    if (total > budget.max_matrices)
      throw BudgetExceeded("enumeration budget exceeded at " + std::to_string(total));
  }
  return total;
}

std::vector<NormalMatrix> enumerate_xi(int m, int n, const Gf& gf,
                                       const EnumerationBudget& budget) {
  uint64_t total = xi_size(m, n, gf, budget);
  std::vector<NormalMatrix> out;
  out.reserve(total);
  for (auto& t : enumerate_row_standard(n, m)) {
    Batch b(t, gf);
    for (uint64_t key = 0; key < b.size(); ++key) out.push_back(b.matrix(key));
  }
  return out;
}

}  // namespace uspecht
