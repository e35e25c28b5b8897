#include "uspecht/tableau.hpp"

#include <algorithm>
#include <stdexcept>

namespace uspecht {

Tableau::Tableau(int n_, std::vector<int> row2_) : n(n_), row2(std::move(row2_)) {
  m = static_cast<int>(row2.size());
  if (n < 0 || m > n - m) throw std::invalid_argument("tableau: need 0 <= m <= n/2");
  if (m > 8 || n > 64)
    throw std::invalid_argument("tableau: shapes beyond m = 8 or n = 64 are unsupported");
  for (int i = 0; i < m; ++i) {
    if (row2[i] < 1 || row2[i] > n || (i && row2[i] <= row2[i - 1]))
      throw std::invalid_argument("tableau: second row must be increasing in 1..n");
  }
}

std::vector<int> Tableau::row1() const {
  std::vector<int> r;
  r.reserve(n - m);
  size_t j = 0;
  for (int v = 1; v <= n; ++v) {
    if (j < row2.size() && row2[j] == v) {
      ++j;
    } else {
      r.push_back(v);
    }
  }
  return r;
}

bool Tableau::standard() const {
  auto a = row1();
  for (int i = 0; i < m; ++i)
    if (row2[i] <= a[i]) return false;
  return true;
}

int Tableau::row_of(int v) const {
  return std::binary_search(row2.begin(), row2.end(), v) ? 2 : 1;
}

uint64_t Tableau::lex_code() const {
  uint64_t c = 0;
  for (int i = 0; i < m; ++i) c |= static_cast<uint64_t>(row2[i]) << (8 * (7 - i));
  return c;
}

std::string Tableau::to_string() const {
  std::string s = "(";
  for (int i = 0; i < m; ++i) {
    if (i) s += ",";
    s += std::to_string(row2[i]);
  }
  return s + ")";
}

std::vector<std::vector<int>> subsets_lex(int n, int k) {
  std::vector<std::vector<int>> out;
  if (k < 0 || k > n) return out;
  std::vector<int> cur(k);
  for (int i = 0; i < k; ++i) cur[i] = i + 1;
  while (true) {
    out.push_back(cur);
    int i = k - 1;
    while (i >= 0 && cur[i] == n - k + i + 1) --i;
    if (i < 0) break;
    ++cur[i];
    for (int j = i + 1; j < k; ++j) cur[j] = cur[j - 1] + 1;
  }
  if (k == 0) out.assign(1, {});
  return out;
}

std::vector<Tableau> enumerate_row_standard(int n, int m) {
  if (m < 0 || m > n - m) throw std::invalid_argument("enumerate_row_standard: need 0 <= m <= n/2");
  std::vector<Tableau> out;
  for (auto& s : subsets_lex(n, m)) out.emplace_back(n, s);
  return out;
}

bool dominance_leq(const Tableau& a, const Tableau& b) {
  if (a.n != b.n || a.m != b.m) throw std::invalid_argument("dominance: shape mismatch");
  for (int i = 0; i < a.m; ++i)
    if (a.row2[i] > b.row2[i]) return false;
  return true;
}

Tableau ShiftedTableau::renumbered() const {
  std::vector<int> r2;
  r2.reserve(row2.size());
  for (int v : row2) {
    auto it = std::lower_bound(alphabet.begin(), alphabet.end(), v);
    if (it == alphabet.end() || *it != v)
      throw std::invalid_argument("shifted tableau: entry not in alphabet");
    r2.push_back(static_cast<int>(it - alphabet.begin()) + 1);
  }
  return Tableau(static_cast<int>(alphabet.size()), std::move(r2));
}

std::vector<int> ShiftedTableau::row1() const {
  std::vector<int> r;
  for (int v : alphabet)
    if (!std::binary_search(row2.begin(), row2.end(), v)) r.push_back(v);
  return r;
}

Pattern::Pattern(std::vector<std::pair<int, int>> pos_) : pos(std::move(pos_)) {
  std::sort(pos.begin(), pos.end());
  std::vector<int> cols;
  for (size_t i = 0; i < pos.size(); ++i) {
    auto [b, a] = pos[i];
    if (a >= b) throw std::invalid_argument("pattern: need column < row at each position");
    if (i && pos[i].first == pos[i - 1].first)
      throw std::invalid_argument("pattern: duplicate row");
    cols.push_back(a);
  }
  std::sort(cols.begin(), cols.end());
  if (std::adjacent_find(cols.begin(), cols.end()) != cols.end())
    throw std::invalid_argument("pattern: duplicate column");
  for (int c : cols) {
    for (auto& [b, a] : pos)
      if (b == c) throw std::invalid_argument("pattern: column index equals a row index");
  }
}

std::vector<int> Pattern::rows() const {
  std::vector<int> r;
  for (auto& [b, a] : pos) r.push_back(b);
  return r;
}

std::vector<int> Pattern::cols() const {
  std::vector<int> c;
  for (auto& [b, a] : pos) c.push_back(a);
  std::sort(c.begin(), c.end());
  return c;
}

bool Pattern::fits(const Tableau& t) const {
  for (auto& [b, a] : pos) {
    if (!std::binary_search(t.row2.begin(), t.row2.end(), b)) return false;
    if (std::binary_search(t.row2.begin(), t.row2.end(), a)) return false;
    if (b > t.n || a < 1) return false;
  }
  return true;
}

std::string Pattern::to_string() const {
  std::string s = "{";
  for (size_t i = 0; i < pos.size(); ++i) {
    if (i) s += ";";
    s += "(" + std::to_string(pos[i].first) + "," + std::to_string(pos[i].second) + ")";
  }
  return s + "}";
}

ShiftedTableau remove_and_shift(const Tableau& t, const Pattern& p) {
  if (!p.fits(t)) throw std::invalid_argument("remove_and_shift: pattern does not fit tableau");
  std::vector<int> removed = p.rows();
  for (int c : p.cols()) removed.push_back(c);
  std::sort(removed.begin(), removed.end());
  ShiftedTableau s;
  for (int v = 1; v <= t.n; ++v)
    if (!std::binary_search(removed.begin(), removed.end(), v)) s.alphabet.push_back(v);
  for (int b : t.row2)
    if (!std::binary_search(removed.begin(), removed.end(), b)) s.row2.push_back(b);
  return s;
}

std::vector<ShiftedTableau> enumerate_T_lambda_p(int n, int m, const Pattern& p) {
  int s = p.size();
  if (s > m) throw std::invalid_argument("enumerate_T_lambda_p: |p| > m");
  std::vector<int> removed = p.rows();
  for (int c : p.cols()) removed.push_back(c);
  std::sort(removed.begin(), removed.end());
  std::vector<int> alphabet;
  for (int v = 1; v <= n; ++v)
    if (!std::binary_search(removed.begin(), removed.end(), v)) alphabet.push_back(v);
  std::vector<ShiftedTableau> out;
  int a = static_cast<int>(alphabet.size());
  for (auto& idx : subsets_lex(a, m - s)) {
    ShiftedTableau st;
    st.alphabet = alphabet;
    for (int i : idx) st.row2.push_back(alphabet[i - 1]);
    if (!st.standard()) out.push_back(std::move(st));
  }
  return out;
}

}  // namespace uspecht
