#pragma once

#include <map>
#include <optional>

#include "uspecht/orbit.hpp"

namespace uspecht {

/// Monotone staircase from the northwest to the southeast corner of an
/// m x (n-m) box array; reading the labels 1..n in order, a label in the
/// second row is a south move, otherwise an east move. The boxes strictly
/// south of the path are exactly the J_t positions: box (r, c) is the free
/// position (b_r, c-th element of the first row).
struct LatticePath {
  int a = 0;  // rows = m
  int b = 0;  // columns = n - m
  std::vector<int> moves;  // 0 = east, 1 = south

  /// corner points visited, in 1..a+1 x 1..b+1 (row, column)
  std::vector<std::pair<int, int>> points() const;
  /// south-then-east turning corners (the reduced rank-check list)
  std::vector<std::pair<int, int>> se_corners() const;
  long boxes_below() const;
};

LatticePath path_of(const Tableau& t);
Tableau tableau_of_path(int n, const LatticePath& pi);

/// Is the member a good filling of the path of its batch: at every reduced
/// corner (i, j) the submatrix of box rows i..a and box columns < j has
/// rank at most j - i.
bool is_good_filling(const NormalMatrix& L, const Gf& gf);

/// Number of good fillings of path_of(t) over GF(q), by enumeration.
long rank_polynomial_count(const Tableau& t, const Gf& gf);

/// Good fillings coincide with the leading-term-eligible members, as sets.
bool eligibility_equivalence_check(const Tableau& t, const Gf& gf);

struct IntPoly {
  std::vector<mpz_class> coeffs;  // ascending powers of t

  int degree() const;
  mpq_class eval(const mpq_class& x) const;
  /// coefficients in ascending powers of (t - 1)
  std::vector<mpz_class> coeffs_at_one() const;
};

/// Unique polynomial through (x, y) points if it has integer coefficients,
/// nullopt otherwise. Degree = points - 1, trailing zeros trimmed.
std::optional<IntPoly> interpolate_integer_polynomial(
    const std::vector<std::pair<long, long>>& pts);

/// Number of eligible orbits (irreducible constituents of the restricted
/// Specht module) by dimension exponent, at one q.
std::map<int, long> census_counts(int n, int m, const Gf& gf);

/// All patterns fitting the batch of t (subsets of J_t with at most one
/// position per row and per column), the empty pattern included.
std::vector<Pattern> patterns_fitting(const Tableau& t);

struct CensusPolynomial {
  int c = 0;
  std::vector<std::pair<long, long>> points;
  std::optional<IntPoly> poly;
  long validate_q = 0;
  long predicted = 0;
  long actual = 0;
  bool ok = false;
};

/// Fits one polynomial per dimension exponent from counts at q_fit and
/// validates the prediction at q_validate.
std::vector<CensusPolynomial> census_polynomials(int n, int m,
                                                 const std::vector<int>& q_fit,
                                                 int q_validate);

}  // namespace uspecht
