#include <doctest.h>

#include <random>

#include "uspecht/rank.hpp"
#include "uspecht/specht.hpp"

using namespace uspecht;

TEST_CASE("paths of tableaux") {
  // t^lambda encloses the full box array
  Tableau tl(6, {4, 5, 6});
  CHECK(path_of(tl).boxes_below() == 9);
  // second row (1..m): nothing below
  CHECK(path_of(Tableau(6, {1, 2, 3})).boxes_below() == 0);
  for (int n = 2; n <= 6; ++n) {
    for (int m = 0; 2 * m <= n; ++m) {
      for (auto& t : enumerate_row_standard(n, m)) {
        LatticePath pi = path_of(t);
        CHECK(tableau_of_path(n, pi) == t);
        CHECK(pi.boxes_below() == static_cast<long>(jt_positions(n, t.row2).size()));
        bool above = true;
        for (auto& [i, j] : pi.points())
          if (i > j) above = false;
        CHECK(above == t.standard());
      }
    }
  }
}

TEST_CASE("rank counts: zero for non-standard, explicit value at (2,4)") {
  for (int q : {2, 3, 4}) {
    Gf gf(q);
    for (auto& t : enumerate_row_standard(4, 2))
      if (!t.standard()) CHECK(rank_polynomial_count(t, gf) == 0);
    // batch (2,4): the single reduced corner pins l_{41} = 0
    CHECK(rank_polynomial_count(Tableau(4, {2, 4}), gf) ==
          static_cast<long>(q) * q);
    CHECK(rank_polynomial_count(Tableau(4, {3, 4}), gf) ==
          static_cast<long>(q) * q * q * q);
  }
}

TEST_CASE("rank counts sum to the kernel dimension") {
  for (int q : {2, 3, 4, 5}) {
    Gf gf(q);
    long total = 0;
    for (auto& t : enumerate_row_standard(4, 2))
      if (t.standard()) total += rank_polynomial_count(t, gf);
    CHECK(total == gaussian_binomial(4, 2, q) - gaussian_binomial(4, 1, q));
  }
  for (int q : {2, 3}) {
    Gf gf(q);
    long total = 0;
    for (auto& t : enumerate_row_standard(5, 2))
      if (t.standard()) total += rank_polynomial_count(t, gf);
    CHECK(total == gaussian_binomial(5, 2, q) - gaussian_binomial(5, 1, q));
  }
}

TEST_CASE("good fillings are exactly the eligible members") {
  for (int q : {2, 3}) {
    Gf gf(q);
    for (auto& t : enumerate_row_standard(4, 2)) CHECK(eligibility_equivalence_check(t, gf));
    for (auto& t : enumerate_row_standard(5, 2)) CHECK(eligibility_equivalence_check(t, gf));
  }
}

TEST_CASE("goodness is invariant under truncated operations") {
  std::mt19937_64 rng(31);
  for (int q : {2, 3}) {
    Gf gf(q);
    auto ts = enumerate_row_standard(5, 2);
    for (int trial = 0; trial < 60; ++trial) {
      auto& t = ts[rng() % ts.size()];
      Batch b(t, gf);
      NormalMatrix L = b.matrix(rng() % b.size());
      RootTriple ups = upsilon(t);
      auto gens = ups.u2;
      gens.insert(gens.end(), ups.u3.begin(), ups.u3.end());
      if (gens.empty()) continue;
      auto& r = gens[rng() % gens.size()];
      NormalMatrix K =
          monomial_action(L, r, static_cast<uint8_t>(1 + rng() % (q - 1)), gf).label;
      CHECK(is_good_filling(L, gf) == is_good_filling(K, gf));
    }
  }
}

TEST_CASE("integer interpolation") {
  auto p = interpolate_integer_polynomial({{2, 4}, {3, 9}, {4, 16}});
  REQUIRE(p.has_value());
  CHECK(p->coeffs == std::vector<mpz_class>{0, 0, 1});
  CHECK(p->eval(7) == 49);
  CHECK(p->coeffs_at_one() == std::vector<mpz_class>{1, 2, 1});  // (t-1)^2 + 2(t-1) + 1

  // non-integer data is rejected
  CHECK_FALSE(interpolate_integer_polynomial({{2, 1}, {4, 2}}).has_value());
}

TEST_CASE("rank polynomials interpolate with value 1 at t = 1") {
  // fit on {2,3,4,5,7}, degree bound m(n-m) = 4 for (4,2)
  std::vector<int> qs = {2, 3, 4, 5, 7};
  for (auto& t : enumerate_row_standard(4, 2)) {
    std::vector<std::pair<long, long>> pts;
    for (int q : qs) pts.emplace_back(q, rank_polynomial_count(t, Gf(q)));
    auto poly = interpolate_integer_polynomial(pts);
    REQUIRE(poly.has_value());
    CHECK(poly->eval(8) == rank_polynomial_count(t, Gf(8)));  // held-out field
    CHECK(poly->eval(1) == (t.standard() ? 1 : 0));
  }
}

TEST_CASE("census counts and polynomials") {
  // lambda = (n, 0): only the trivial constituent
  {
    Gf gf(3);
    auto counts = census_counts(5, 0, gf);
    REQUIRE(counts.size() == 1);
    CHECK(counts.at(0) == 1);
  }
  // dimension bookkeeping at several q
  for (int q : {2, 3, 4, 5}) {
    Gf gf(q);
    for (auto [n, m] : {std::pair{4, 2}, std::pair{5, 2}, std::pair{6, 3}}) {
      long total = 0;
      for (auto& [c, count] : census_counts(n, m, gf)) {
        long dim = 1;
        for (int i = 0; i < c; ++i) dim *= q;
        total += count * dim;
      }
      CHECK(total == gaussian_binomial(n, m, q) - gaussian_binomial(n, m - 1, q));
    }
  }
  // interpolation with a held-out prime power
  for (auto [n, m] : {std::pair{4, 2}, std::pair{5, 2}, std::pair{6, 2}}) {
    for (auto& r : census_polynomials(n, m, {2, 3, 4}, 5)) {
      CHECK(r.ok);
      REQUIRE(r.poly.has_value());
    }
  }
  // m = 3 needs four fit points (degree bound m)
  for (auto& r : census_polynomials(6, 3, {2, 3, 4, 5}, 7)) CHECK(r.ok);
}

TEST_CASE("census counts agree with the BFS orbit census") {
  for (int q : {2, 3}) {
    Gf gf(q);
    std::map<int, long> bfs;
    for (auto& t : enumerate_row_standard(5, 2)) {
      for (auto& o : batch_orbit_census(t, gf))
        if (remove_and_shift(t, o.pf.p).standard()) bfs[o.dim_exponent] += 1;
    }
    CHECK(bfs == census_counts(5, 2, gf));
  }
}
