#include <doctest.h>

#include <set>

#include "uspecht/rank.hpp"
#include "uspecht/specht.hpp"

using namespace uspecht;

TEST_CASE("removal images of one matrix") {
  for (int q : {2, 3}) {
    Gf gf(q);
    // rows labeled 1 and 4, free entries at (4,2) and (4,3)
    NormalMatrix M(4, {1, 4});
    M.set(4, 2, 1);
    M.set(4, 3, static_cast<uint8_t>(q - 1));
    // d = 1: q images (a, m, n, 1) in the batch (4); d = 2: the row (1,0,0,0)
    auto d1 = phi_m_d_images(M, 1, gf);
    CHECK(d1.size() == static_cast<size_t>(q));
    std::set<MatKey> seen(d1.begin(), d1.end());
    CHECK(seen.size() == d1.size());
    for (int a = 0; a < q; ++a) {
      NormalMatrix N(4, {4});
      N.set(4, 1, static_cast<uint8_t>(a));
      N.set(4, 2, 1);
      N.set(4, 3, static_cast<uint8_t>(q - 1));
      CHECK(seen.count(key_of(N, gf)) == 1);
    }
    auto d2 = phi_m_d_images(M, 2, gf);
    REQUIRE(d2.size() == 1);  // d = m: delete the last row
    CHECK(d2[0] == key_of(NormalMatrix(4, {1}), gf));

    // column count with multiplicity: sum_d q^{m-d}
    CHECK(phi_m_images(M, gf).size() == static_cast<size_t>(q + 1));
  }
}

TEST_CASE("m = 1 removal is the augmentation") {
  Gf gf(3);
  for (auto& t : enumerate_row_standard(4, 1)) {
    Batch b(t, gf);
    for (uint64_t key = 0; key < b.size(); ++key) {
      auto imgs = phi_m_images(b.matrix(key), gf);
      REQUIRE(imgs.size() == 1);
      CHECK(imgs[0] == key_of(NormalMatrix(4, {}), gf));
    }
  }
}

TEST_CASE("subspace maps: identity and augmentation ends") {
  Gf gf(2);
  auto xs = enumerate_xi(2, 4, gf);
  for (auto& X : xs) {
    auto top = phi_1i_images(X, 2, gf);
    REQUIRE(top.size() == 1);
    CHECK(top[0] == key_of(X, gf));  // i = m is the identity
    auto bottom = phi_1i_images(X, 0, gf);
    REQUIRE(bottom.size() == 1);
    CHECK(bottom[0] == key_of(NormalMatrix(4, {}), gf));
  }
}

TEST_CASE("composition law with the q-integer factor") {
  for (int q : {2, 3}) {
    Gf gf(q);
    long bracket = 1 + q;  // [m - i] with m = 2, i = 0
    for (auto& t : enumerate_row_standard(4, 2)) {
      Batch b(t, gf);
      for (uint64_t key = 0; key < b.size(); ++key) {
        ModuleVector x(4, 2, BasisTag::Matrix);
        x.add_term(MatKey{t.lex_code(), key}, Cyc::one(gf.p()));
        ModuleVector lhs = apply_phi_1i(apply_phi_m(x, gf), 0, gf);
        ModuleVector rhs = apply_phi_1i(x, 0, gf);
        rhs.scale(Cyc::integer(gf.p(), bracket));
        CHECK(lhs == rhs);
      }
    }
  }
}

TEST_CASE("kernel dimensions match the two-binomial formula") {
  for (int q : {2, 3}) {
    Gf gf(q);
    auto kb21 = kernel_basis(2, 1, gf);
    CHECK(kb21.dim == q);  // [2 1] - [2 0] = q
    for (auto& v : kb21.vectors) CHECK(apply_phi_m(v, gf).is_zero());
  }
  Gf gf2(2);
  auto kb = kernel_basis(4, 2, gf2);
  CHECK(kb.dim == 20);
  for (auto& v : kb.vectors) CHECK(apply_phi_m(v, gf2).is_zero());
  CHECK(phi_m_rank(4, 2, gf2) == gaussian_binomial(4, 1, 2));  // surjective
}

TEST_CASE("kernel intersection agreement") {
  Gf gf(2);
  CHECK(kernel_intersection_check(4, 2, gf));
  CHECK(kernel_intersection_check(4, 1, gf));  // m = 1: the same map twice
}

TEST_CASE("removal map on matrices") {
  Gf gf(2);
  // the 4x8 example: rows 3,5,7,8 with values at (5,2) and (8,6)
  NormalMatrix L(8, {3, 5, 7, 8});
  L.set(5, 2, 1);
  L.set(8, 6, 1);
  Pattern p({{5, 2}, {8, 6}});
  auto R = remove_pattern(L, p);
  REQUIRE(R.has_value());
  CHECK(R->n == 4);
  CHECK(R->row2 == std::vector<int>{2, 4});
  // displayed image: rows (0 1 0 0) and (0 0 0 1)
  for (auto& [b, j] : jt_positions(4, R->row2)) CHECK(R->at(b, j) == 0);
  CHECK(R->well_formed());
  CHECK(R->is_pattern_matrix());

  CHECK(remove_pattern(L, Pattern{}) == L);
  CHECK_FALSE(remove_pattern(NormalMatrix(8, {2, 5, 7, 8}), p).has_value());

  // a pattern matrix maps to the empty-pattern matrix of the smaller shape
  for (auto& t : enumerate_row_standard(5, 2)) {
    Batch b(t, gf);
    for (auto& o : batch_orbit_census(t, gf)) {
      auto img = remove_pattern(b.matrix(o.pattern_key), o.pf.p);
      REQUIRE(img.has_value());
      CHECK(filled_pattern_of(*img).p.size() == 0);
    }
  }
}

TEST_CASE("full patterns: kernel membership and standardness") {
  for (int q : {2, 3}) {
    Gf gf(q);
    for (auto& t : enumerate_row_standard(4, 2)) {
      for (auto& o : batch_orbit_census(t, gf)) {
        if (o.pf.p.size() != 2) continue;  // |p| = m
        CHECK(t.standard());
        Batch b(t, gf);
        for (uint64_t key : o.members) {
          CHECK(phi_m_of_idempotent(b.matrix(key), gf).is_zero());
          CHECK(leading_term_eligible(b.matrix(key), gf));
        }
      }
    }
  }
}

TEST_CASE("pattern-row components vanish") {
  Gf gf(2);
  for (auto& t : enumerate_row_standard(4, 2)) {
    Batch b(t, gf);
    for (auto& o : batch_orbit_census(t, gf)) {
      auto pI = o.pf.p.rows();
      for (uint64_t key : o.members) {
        NormalMatrix K = b.matrix(key);
        for (int d = 1; d <= 2; ++d) {
          if (std::find(pI.begin(), pI.end(), t.row2[d - 1]) == pI.end()) continue;
          ModuleVector part(4, 1, BasisTag::Matrix);
          for (uint64_t mm = 0; mm < b.size(); ++mm) {
            NormalMatrix M = b.matrix(mm);
            Cyc c = chi(K, diamond_neg(M, gf), gf);
            for (auto& ik : phi_m_d_images(M, d, gf)) part.add_term(ik, c);
          }
          CHECK(part.is_zero());
        }
      }
    }
  }
}

TEST_CASE("eligibility of leading labels") {
  Gf gf(2);
  // empty pattern: eligible iff the tableau is standard
  for (auto& t : enumerate_row_standard(5, 2)) {
    NormalMatrix Z(5, t.row2);
    CHECK(leading_term_eligible(Z, gf) == t.standard());
  }
  // a fitting pattern on a non-standard tableau is never eligible
  for (auto& t : enumerate_row_standard(5, 2)) {
    if (t.standard()) continue;
    for (auto& o : batch_orbit_census(t, gf)) {
      Batch b(t, gf);
      for (uint64_t key : o.members)
        CHECK_FALSE(leading_term_eligible(b.matrix(key), gf));
    }
  }
}

TEST_CASE("standard vectors: structure, kernel membership, certificates") {
  for (int q : {2, 3}) {
    Gf gf(q);
    auto basis = standard_basis(4, 2, gf);
    long expect = gaussian_binomial(4, 2, q) - gaussian_binomial(4, 1, q);
    CHECK(static_cast<long>(basis.size()) == expect);

    std::set<MatKey> leads;
    for (auto& sv : basis) {
      CHECK(leads.insert(sv.top_label).second);  // leading terms pairwise distinct
      CHECK(sv.v.coeff(sv.top_label, gf.p()).is_one());
      auto [last, top] = last_and_top(sv.v);
      CHECK(last == sv.last);
      CHECK(top.terms.size() == 1);
      CHECK(in_kernel_of_phi_m(sv.v, gf));
      CHECK(integrality_diagnostic(sv, gf));
      // all corrections live strictly below the leading batch
      for (auto& [k, c] : sv.v.terms)
        CHECK(k.tab_code <= sv.top_label.tab_code);
      // full-pattern vectors have no corrections
      if (sv.pf.p.size() == 2) CHECK(sv.v.terms.size() == 1);
    }

    // per-batch counts match the good-filling counts
    for (auto& t : enumerate_row_standard(4, 2)) {
      long in_batch = 0;
      for (auto& sv : basis)
        if (sv.last == t) ++in_batch;
      CHECK(in_batch == rank_polynomial_count(t, gf));
    }
  }
}

TEST_CASE("diagnostics reject bad inputs") {
  Gf gf(2);
  // a denominator with a factor away from p fails the integrality test
  SpechtVector sv;
  sv.v = ModuleVector(4, 2, BasisTag::Idempotent);
  Tableau t(4, {2, 4});
  sv.last = t;
  sv.top_label = MatKey{t.lex_code(), 0};
  Cyc third = Cyc::one(2);
  third.scale(mpq_class(1, 3));
  sv.v.add_term(sv.top_label, third);
  CHECK_FALSE(integrality_diagnostic(sv, gf));
  Cyc eighth = Cyc::one(2);
  eighth.scale(mpq_class(1, 8));
  sv.v = ModuleVector(4, 2, BasisTag::Idempotent);
  sv.v.add_term(sv.top_label, eighth);
  CHECK(integrality_diagnostic(sv, gf));  // 1/8 is a power of p = 2

  // a bare basis vector is never in the kernel
  ModuleVector x(4, 2, BasisTag::Matrix);
  x.add_term(MatKey{t.lex_code(), 0}, Cyc::one(2));
  CHECK_FALSE(in_kernel_of_phi_m(x, gf));
}

TEST_CASE("degenerate shape m = 0 has the one-element basis") {
  Gf gf(3);
  auto basis = standard_basis(4, 0, gf);
  REQUIRE(basis.size() == 1);
  CHECK(basis[0].v.terms.size() == 1);
  CHECK(basis[0].pf.p.size() == 0);
  CHECK(integrality_diagnostic(basis[0], gf));
}

TEST_CASE("construct_standard_vector rejects ineligible labels") {
  Gf gf(2);
  NormalMatrix Z(4, {1, 2});  // non-standard batch, empty pattern
  CHECK_THROWS_AS(construct_standard_vector(Z, gf), std::invalid_argument);
}

TEST_CASE("empty-pattern vector matches the explicit correction form") {
  Gf gf(2);
  // leading batch (2,4) at n=4: v = e_Z(2,4) - sum over non-standard batches
  NormalMatrix Z(4, {2, 4});
  SpechtVector sv = construct_standard_vector(Z, gf);
  for (auto& [k, c] : sv.v.terms) {
    NormalMatrix K = matrix_of_key(4, k, gf);
    CHECK(filled_pattern_of(canonical_pattern_matrix(K, gf)).p.size() == 0);
    if (!(k == sv.top_label)) CHECK_FALSE(K.tab().standard());
  }
}

TEST_CASE("standard-basis vectors are linearly independent") {
  for (int q : {2, 3}) {
    Gf gf(q);
    auto basis = standard_basis(4, 2, gf);
    std::map<MatKey, int> rows;
    std::vector<std::vector<std::pair<int, Cyc>>> cols;
    for (auto& sv : basis) {
      ModuleVector v = from_idempotent_basis(sv.v, gf);
      std::vector<std::pair<int, Cyc>> col;
      for (auto& [k, c] : v.terms) {
        auto [it, fresh] = rows.emplace(k, static_cast<int>(rows.size()));
        col.emplace_back(it->second, c);
      }
      cols.push_back(std::move(col));
    }
    std::vector<std::vector<Cyc>> dense(cols.size(),
                                        std::vector<Cyc>(rows.size(), Cyc::zero(gf.p())));
    for (size_t c = 0; c < cols.size(); ++c)
      for (auto& [r, val] : cols[c]) dense[c][r] = val;
    CycSolver solver(std::move(dense), gf.p());
    CHECK(solver.rank() == static_cast<int>(basis.size()));
  }
}

TEST_CASE("lyle property for standard-basis vectors and random kernel sums") {
  Gf gf(2);
  auto kb = kernel_basis(4, 2, gf);
  std::mt19937_64 rng(5);
  for (int trial = 0; trial < 20; ++trial) {
    ModuleVector v(4, 2, BasisTag::Matrix);
    for (int k = 0; k < 4; ++k) {
      ModuleVector w = kb.vectors[rng() % kb.vectors.size()];
      w.scale(Cyc::integer(2, static_cast<long>(rng() % 7) - 3));
      v += w;
    }
    if (v.is_zero()) continue;
    CHECK(last_and_top(v).first.standard());
  }
}
