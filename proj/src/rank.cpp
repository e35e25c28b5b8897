#include "uspecht/rank.hpp"

#include <algorithm>
#include <set>
#include <stdexcept>

#include "uspecht/specht.hpp"

namespace uspecht {

std::vector<std::pair<int, int>> LatticePath::points() const {
  std::vector<std::pair<int, int>> pts;
  int i = 1, j = 1;
  pts.emplace_back(i, j);
  for (int mv : moves) {
    if (mv == 0)
      ++j;
    else
      ++i;
    pts.emplace_back(i, j);
  }
  return pts;
}

std::vector<std::pair<int, int>> LatticePath::se_corners() const {
  std::vector<std::pair<int, int>> out;
  auto pts = points();
  for (size_t k = 1; k + 1 < pts.size(); ++k) {
    bool arrived_south = pts[k].first == pts[k - 1].first + 1;
    bool leaves_east = pts[k + 1].second == pts[k].second + 1;
    if (arrived_south && leaves_east) out.push_back(pts[k]);
  }
  return out;
}

long LatticePath::boxes_below() const {
  long total = 0;
  int col = 0;
  for (int mv : moves) {
    if (mv == 0)
      ++col;
    else
      total += col;
  }
  return total;
}

LatticePath path_of(const Tableau& t) {
  LatticePath pi;
  pi.a = t.m;
  pi.b = t.n - t.m;
  pi.moves.reserve(t.n);
  for (int v = 1; v <= t.n; ++v) pi.moves.push_back(t.row_of(v) == 2 ? 1 : 0);
  return pi;
}

Tableau tableau_of_path(int n, const LatticePath& pi) {
  if (static_cast<int>(pi.moves.size()) != n)
    throw std::invalid_argument("tableau_of_path: move count != n");
  std::vector<int> row2;
  for (int v = 1; v <= n; ++v)
    if (pi.moves[v - 1] == 1) row2.push_back(v);
  return Tableau(n, row2);
}

namespace {

int submatrix_rank(const NormalMatrix& L, const std::vector<int>& box_rows,
                   const std::vector<int>& box_cols, const std::vector<int>& row2,
                   const std::vector<int>& comp, const Gf& gf) {
  int r = static_cast<int>(box_rows.size());
  int c = static_cast<int>(box_cols.size());
  std::vector<std::vector<uint8_t>> w(r, std::vector<uint8_t>(c, 0));
  for (int i = 0; i < r; ++i)
    for (int j = 0; j < c; ++j) {
      int b = row2[box_rows[i] - 1];
      int col = comp[box_cols[j] - 1];
      if (col < b) w[i][j] = L.at(b, col);
    }
  int rank = 0;
  for (int col = 0; col < c && rank < r; ++col) {
    int piv = -1;
    for (int i = rank; i < r; ++i)
      if (w[i][col]) {
        piv = i;
        break;
      }
    if (piv < 0) continue;
    std::swap(w[piv], w[rank]);
    uint8_t inv = gf.inv(w[rank][col]);
    for (int j = col; j < c; ++j) w[rank][j] = gf.mul(w[rank][j], inv);
    for (int i = 0; i < r; ++i) {
      if (i == rank || !w[i][col]) continue;
      uint8_t f = w[i][col];
      for (int j = col; j < c; ++j) w[i][j] = gf.sub(w[i][j], gf.mul(f, w[rank][j]));
    }
    ++rank;
  }
  return rank;
}

}  // namespace

bool is_good_filling(const NormalMatrix& L, const Gf& gf) {
  Tableau t = L.tab();
  LatticePath pi = path_of(t);
  std::vector<int> comp = t.row1();
  for (auto& [i, j] : pi.se_corners()) {
    int bound = j - i;
    if (bound < 0) return false;
    std::vector<int> rows, cols;
    for (int r = i; r <= pi.a; ++r) rows.push_back(r);
    for (int c = 1; c < j; ++c) cols.push_back(c);
    if (rows.empty() || cols.empty()) continue;  // rank 0 <= bound
    if (submatrix_rank(L, rows, cols, t.row2, comp, gf) > bound) return false;
  }
  return true;
}

long rank_polynomial_count(const Tableau& t, const Gf& gf) {
  Batch b(t, gf);
  long count = 0;
  for (uint64_t key = 0; key < b.size(); ++key)
    if (is_good_filling(b.matrix(key), gf)) ++count;
  return count;
}

bool eligibility_equivalence_check(const Tableau& t, const Gf& gf) {
  Batch b(t, gf);
  for (uint64_t key = 0; key < b.size(); ++key) {
    NormalMatrix L = b.matrix(key);
    if (is_good_filling(L, gf) != leading_term_eligible(L, gf)) return false;
  }
  return true;
}

int IntPoly::degree() const {
  for (int i = static_cast<int>(coeffs.size()) - 1; i >= 0; --i)
    if (coeffs[i] != 0) return i;
  return 0;
}

mpq_class IntPoly::eval(const mpq_class& x) const {
  mpq_class acc = 0;
  for (int i = static_cast<int>(coeffs.size()) - 1; i >= 0; --i)
    acc = acc * x + mpq_class(coeffs[i]);
  return acc;
}

std::vector<mpz_class> IntPoly::coeffs_at_one() const {
  // b_k = sum_{i >= k} a_i * C(i, k)
  int d = static_cast<int>(coeffs.size());
  std::vector<mpz_class> out(d, 0);
  for (int k = 0; k < d; ++k) {
    mpz_class binom = 1;  // C(k, k)
    for (int i = k; i < d; ++i) {
      out[k] += coeffs[i] * binom;
      binom = binom * (i + 1) / (i + 1 - k);  // C(i+1, k)
    }
  }
  while (out.size() > 1 && out.back() == 0) out.pop_back();
  return out;
}

std::optional<IntPoly> interpolate_integer_polynomial(
    const std::vector<std::pair<long, long>>& pts) {
  size_t k = pts.size();
  if (k == 0) return std::nullopt;
  for (size_t i = 0; i < k; ++i)
    for (size_t j = i + 1; j < k; ++j)
      if (pts[i].first == pts[j].first)
        throw std::invalid_argument("interpolation points must be pairwise distinct");
  // Newton's divided differences, exact over Q
  std::vector<mpq_class> xs(k), coef(k);
  for (size_t i = 0; i < k; ++i) {
    xs[i] = pts[i].first;
    coef[i] = pts[i].second;
  }
  for (size_t level = 1; level < k; ++level)
    for (size_t i = k - 1; i >= level; --i)
      coef[i] = (coef[i] - coef[i - 1]) / (xs[i] - xs[i - level]);
  // expand Newton form to the monomial basis
  std::vector<mpq_class> poly(1, coef[k - 1]);
  for (int i = static_cast<int>(k) - 2; i >= 0; --i) {
    poly.insert(poly.begin(), 0);
    for (size_t j = 0; j + 1 < poly.size(); ++j) poly[j] -= xs[i] * poly[j + 1];
    poly[0] += coef[i];
  }
  IntPoly out;
  for (auto& c : poly) {
    c.canonicalize();
    if (c.get_den() != 1) return std::nullopt;
    out.coeffs.push_back(c.get_num());
  }
  while (out.coeffs.size() > 1 && out.coeffs.back() == 0) out.coeffs.pop_back();
  return out;
}

std::vector<Pattern> patterns_fitting(const Tableau& t) {
  std::vector<int> cols;
  for (int v : t.row1())
    if (true) cols.push_back(v);
  std::vector<Pattern> out;
  std::vector<std::pair<int, int>> cur;
  std::vector<bool> used_col(t.n + 1, false);
  // rows considered in increasing label order; pattern rows are a subset
  auto rec = [&](auto&& self, size_t ri) -> void {
    if (ri == t.row2.size()) {
      out.push_back(Pattern(cur));
      return;
    }
    self(self, ri + 1);  // skip this row
    int b = t.row2[ri];
    for (int c : cols) {
      if (c >= b || used_col[c]) continue;
      used_col[c] = true;
      cur.emplace_back(b, c);
      self(self, ri + 1);
      cur.pop_back();
      used_col[c] = false;
    }
  };
  rec(rec, 0);
  std::sort(out.begin(), out.end());
  return out;
}

std::map<int, long> census_counts(int n, int m, const Gf& gf) {
  std::map<int, long> counts;
  long qm1 = gf.q() - 1;
  for (auto& t : enumerate_row_standard(n, m)) {
    for (auto& p : patterns_fitting(t)) {
      if (!remove_and_shift(t, p).standard()) continue;
      long fillings = 1;
      for (int i = 0; i < p.size(); ++i) fillings *= qm1;
      counts[orbit_dimension_exponent(p)] += fillings;
    }
  }
  return counts;
}

std::vector<CensusPolynomial> census_polynomials(int n, int m,
                                                 const std::vector<int>& q_fit,
                                                 int q_validate) {
  std::set<int> distinct(q_fit.begin(), q_fit.end());
  distinct.insert(q_validate);
  if (distinct.size() != q_fit.size() + 1)
    throw std::invalid_argument("census: fit and held-out q values must be pairwise distinct");
  std::map<int, std::vector<std::pair<long, long>>> points;
  std::map<int, long> actual;
  int max_c = m * (n - m);
  for (int q : q_fit) {
    Gf gf(q);
    auto counts = census_counts(n, m, gf);
    for (int c = 0; c <= max_c; ++c)
      points[c].emplace_back(q, counts.count(c) ? counts[c] : 0);
  }
  {
    Gf gfv(q_validate);
    auto counts = census_counts(n, m, gfv);
    for (int c = 0; c <= max_c; ++c) actual[c] = counts.count(c) ? counts[c] : 0;
  }
  std::vector<CensusPolynomial> out;
  for (int c = 0; c <= max_c; ++c) {
    CensusPolynomial cp;
    cp.c = c;
    cp.points = points[c];
    cp.validate_q = q_validate;
    cp.actual = actual[c];
    cp.poly = interpolate_integer_polynomial(cp.points);
    if (cp.poly) {
      mpq_class pred = cp.poly->eval(q_validate);
      cp.predicted = pred.get_num().fits_slong_p() && pred.get_den() == 1
                         ? pred.get_num().get_si()
                         : -1;
      cp.ok = cp.predicted == cp.actual;
    }
    out.push_back(std::move(cp));
  }
  return out;
}

}  // namespace uspecht
