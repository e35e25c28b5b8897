#include <doctest.h>

#include "uspecht/tableau.hpp"

using namespace uspecht;

namespace {

long binom(int n, int k) {
  if (k < 0 || k > n) return 0;
  long r = 1;
  for (int i = 1; i <= k; ++i) r = r * (n - k + i) / i;
  return r;
}

}  // namespace

TEST_CASE("row-standard enumeration is lexicographic and complete") {
  auto ts = enumerate_row_standard(4, 2);
  REQUIRE(ts.size() == 6);
  std::vector<std::vector<int>> expect = {{1, 2}, {1, 3}, {1, 4}, {2, 3}, {2, 4}, {3, 4}};
  for (size_t i = 0; i < ts.size(); ++i) CHECK(ts[i].row2 == expect[i]);
  for (size_t i = 0; i + 1 < ts.size(); ++i) CHECK(ts[i] < ts[i + 1]);

  CHECK(enumerate_row_standard(5, 0).size() == 1);
  for (int n = 1; n <= 8; ++n)
    for (int m = 0; 2 * m <= n; ++m)
      CHECK(static_cast<long>(enumerate_row_standard(n, m).size()) == binom(n, m));
  CHECK_THROWS(enumerate_row_standard(4, 3));
}

TEST_CASE("standardness criterion") {
  CHECK_FALSE(Tableau(4, {2, 3}).standard());  // second column is 4 over 3
  CHECK(Tableau(4, {3, 4}).standard());
  CHECK(Tableau(4, {2, 4}).standard());
  for (int n = 2; n <= 7; ++n)
    for (int m = 1; 2 * m <= n; ++m)
      for (auto& t : enumerate_row_standard(n, m))
        if (t.row2[0] == 1) CHECK_FALSE(t.standard());
}

TEST_CASE("dominance order") {
  Tableau a(4, {2, 3}), b(4, {2, 4}), c(4, {1, 4});
  CHECK(dominance_leq(a, a));
  CHECK(dominance_leq(a, b));
  CHECK_FALSE(dominance_leq(b, a));
  CHECK_FALSE(dominance_leq(c, a));  // incomparable pair
  CHECK_FALSE(dominance_leq(a, c));
  // dominance implies lexicographic order
  for (int n = 2; n <= 7; ++n) {
    for (int m = 1; 2 * m <= n; ++m) {
      auto ts = enumerate_row_standard(n, m);
      for (auto& t1 : ts)
        for (auto& t2 : ts)
          if (dominance_leq(t1, t2)) CHECK(t1 <= t2);
    }
  }
}

TEST_CASE("pattern validation") {
  CHECK_THROWS(Pattern({{3, 3}}));          // column not below row
  CHECK_THROWS(Pattern({{3, 1}, {3, 2}}));  // duplicate row
  CHECK_THROWS(Pattern({{3, 1}, {4, 1}}));  // duplicate column
  CHECK_THROWS(Pattern({{4, 3}, {3, 1}}));  // 3 is both a row and a column
  Pattern p({{5, 2}, {8, 6}});
  CHECK(p.rows() == std::vector<int>{5, 8});
  CHECK(p.cols() == std::vector<int>{2, 6});
  CHECK(p.fits(Tableau(8, {3, 5, 7, 8})));
  CHECK_FALSE(p.fits(Tableau(8, {2, 5, 7, 8})));  // column 2 sits in the second row
}

TEST_CASE("remove_and_shift on the 8-column example") {
  Tableau t(8, {3, 5, 7, 8});
  Pattern p({{5, 2}, {8, 6}});
  ShiftedTableau st = remove_and_shift(t, p);
  CHECK(st.alphabet == std::vector<int>{1, 3, 4, 7});
  CHECK(st.row2 == std::vector<int>{3, 7});
  CHECK(st.row1() == std::vector<int>{1, 4});
  CHECK(st.renumbered().row2 == std::vector<int>{2, 4});
  CHECK(st.standard());

  CHECK(remove_and_shift(t, Pattern{}).row2 == t.row2);  // empty pattern: t itself
  CHECK_THROWS(remove_and_shift(Tableau(8, {2, 5, 7, 8}), p));
}

TEST_CASE("removal keeps row-standard non-standard tableaux non-standard") {
  for (int n = 2; n <= 7; ++n) {
    for (int m = 1; 2 * m <= n; ++m) {
      for (auto& t : enumerate_row_standard(n, m)) {
        if (t.standard()) continue;
        for (int b : t.row2) {
          for (int a = 1; a < b; ++a) {
            if (t.row_of(a) == 2) continue;
            CHECK_FALSE(remove_and_shift(t, Pattern({{b, a}})).standard());
          }
        }
      }
    }
  }
}

TEST_CASE("T^lambda_p for the six-column example") {
  // n=6, m=3, pattern {(6,4)}: alphabet {1,2,3,5}, four row-standard
  // non-standard shifted tableaux
  auto ts = enumerate_T_lambda_p(6, 3, Pattern({{6, 4}}));
  REQUIRE(ts.size() == 4);
  std::vector<std::vector<int>> rows2;
  for (auto& st : ts) {
    CHECK(st.alphabet == std::vector<int>{1, 2, 3, 5});
    CHECK_FALSE(st.standard());
    rows2.push_back(st.row2);
  }
  std::vector<std::vector<int>> expect = {{1, 2}, {1, 3}, {1, 5}, {2, 3}};
  CHECK(rows2 == expect);
}

TEST_CASE("T^lambda_p counting identity") {
  for (int n = 2; n <= 8; ++n) {
    for (int m = 1; 2 * m <= n; ++m) {
      for (int s = 0; s <= m; ++s) {
        std::vector<std::pair<int, int>> pos;
        for (int i = 0; i < s; ++i) pos.push_back({n - i, s - i});
        Pattern p(pos);
        auto ts = enumerate_T_lambda_p(n, m, p);
        if (s == m) {
          CHECK(ts.empty());
        } else {
          CHECK(static_cast<long>(ts.size()) == binom(n - 2 * s, m - s - 1));
        }
      }
    }
  }
}

TEST_CASE("strict order survives removal") {
  for (int n = 2; n <= 6; ++n) {
    for (int m = 1; 2 * m <= n; ++m) {
      auto ts = enumerate_row_standard(n, m);
      for (auto& t1 : ts) {
        for (int b : t1.row2) {
          for (int a = 1; a < b; ++a) {
            if (t1.row_of(a) == 2) continue;
            Pattern p({{b, a}});
            for (auto& t2 : ts) {
              if (!p.fits(t2) || !(t2 < t1)) continue;
              CHECK(remove_and_shift(t2, p).row2 < remove_and_shift(t1, p).row2);
            }
          }
        }
      }
    }
  }
}
