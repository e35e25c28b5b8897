#include <doctest.h>

#include <random>

#include "uspecht/character.hpp"

using namespace uspecht;

TEST_CASE("chi values and the homomorphism law") {
  Gf gf(2);
  // n=2, m=1, second row (2): single free position (2,1)
  Batch b(Tableau(2, {2}), gf);
  NormalMatrix L = b.matrix(1);  // l_{21} = 1
  CHECK(chi(L, b.matrix(0), gf).is_one());
  CHECK(chi(L, L, gf) == Cyc::integer(2, -1));  // theta(1) = -1 at p = 2

  for (int q : {2, 3}) {
    Gf g2(q);
    Batch bb(Tableau(4, {2, 4}), g2);
    NormalMatrix K = bb.matrix(bb.size() - 1);
    for (uint64_t x = 0; x < bb.size(); ++x)
      for (uint64_t y = 0; y < bb.size(); ++y) {
        NormalMatrix M = bb.matrix(x), N = bb.matrix(y);
        CHECK(chi(K, diamond_add(M, N, g2), g2) == chi(K, M, g2) * chi(K, N, g2));
      }
  }
  CHECK_THROWS(chi(NormalMatrix(4, {1, 2}), NormalMatrix(4, {1, 3}), Gf(2)));
}

TEST_CASE("idempotent expansion basics") {
  Gf gf(3);
  // |J_t| = 0: e_L = [L]
  Batch b0(Tableau(4, {1, 2}), gf);
  NormalMatrix L0 = b0.matrix(0);
  ModuleVector e0 = idempotent_vector(L0, gf);
  CHECK(e0.terms.size() == 1);
  CHECK(e0.coeff(key_of(L0, gf), 3).is_one());

  // sum over L of e_L = [Z]
  Batch b(Tableau(4, {2, 4}), gf);
  ModuleVector sum(4, 2, BasisTag::Matrix);
  for (uint64_t k = 0; k < b.size(); ++k) sum += idempotent_vector(b.matrix(k), gf);
  ModuleVector z(4, 2, BasisTag::Matrix);
  z.add_term(MatKey{b.tab().lex_code(), 0}, Cyc::one(3));
  CHECK(sum == z);

  // denominators divide q^{|J_t|}
  mpz_class qj;
  mpz_ui_pow_ui(qj.get_mpz_t(), 3, b.jt().size());
  for (auto& [k, c] : idempotent_vector(b.matrix(5), gf).terms) CHECK(qj % c.den() == 0);
}

TEST_CASE("idempotents are orthogonal idempotents under diamond convolution") {
  for (int q : {2, 3}) {
    Gf gf(q);
    for (auto& t : {Tableau(4, {2, 3}), Tableau(4, {2, 4}), Tableau(5, {2, 4})}) {
      Batch b(t, gf);
      if (b.size() > 81) continue;
      std::mt19937_64 rng(11);
      for (int trial = 0; trial < 4; ++trial) {
        uint64_t lk = rng() % b.size(), kk = rng() % b.size();
        ModuleVector eL = idempotent_vector(b.matrix(lk), gf);
        ModuleVector eK = idempotent_vector(b.matrix(kk), gf);
        ModuleVector prod = diamond_convolve(eL, eK, b);
        if (lk == kk)
          CHECK(prod == eL);
        else
          CHECK(prod.is_zero());
      }
    }
  }
}

TEST_CASE("character orthogonality relation") {
  for (int q : {2, 3}) {
    Gf gf(q);
    Batch b(Tableau(4, {2, 4}), gf);  // |J_t| = 3
    mpz_class qj;
    mpz_ui_pow_ui(qj.get_mpz_t(), q, b.jt().size());
    for (uint64_t lk = 0; lk < b.size(); ++lk) {
      for (uint64_t kk = 0; kk < b.size(); ++kk) {
        Cyc sum = Cyc::zero(gf.p());
        for (uint64_t mm = 0; mm < b.size(); ++mm) {
          NormalMatrix M = b.matrix(mm);
          sum += chi(b.matrix(lk), diamond_neg(M, gf), gf) * chi(b.matrix(kk), M, gf);
        }
        Cyc expect = lk == kk ? Cyc::rational(gf.p(), mpq_class(qj)) : Cyc::zero(gf.p());
        CHECK(sum == expect);
      }
    }
  }
}

TEST_CASE("base change round trips and special vectors") {
  std::mt19937_64 rng(99);
  for (int q : {2, 3, 4, 5}) {
    Gf gf(q);
    auto ts = enumerate_row_standard(4, 2);
    for (int trial = 0; trial < 8; ++trial) {
      ModuleVector v(4, 2, BasisTag::Matrix);
      for (int k = 0; k < 5; ++k) {
        auto& t = ts[rng() % ts.size()];
        Batch b(t, gf);
        Cyc c = Cyc::integer(gf.p(), static_cast<long>(rng() % 9) - 4);
        c *= Cyc::zeta_pow(gf.p(), static_cast<long>(rng() % gf.p()));
        v.add_term(MatKey{t.lex_code(), rng() % b.size()}, c);
      }
      CHECK(from_idempotent_basis(to_idempotent_basis(v, gf), gf) == v);
    }
    // e_L -> unit vector; [Z] -> all-ones
    Batch b(Tableau(4, {3, 4}), gf);
    NormalMatrix L = b.matrix(b.size() / 2);
    ModuleVector unit = to_idempotent_basis(idempotent_vector(L, gf), gf);
    CHECK(unit.terms.size() == 1);
    CHECK(unit.coeff(key_of(L, gf), gf.p()).is_one());
    ModuleVector z(4, 2, BasisTag::Matrix);
    z.add_term(MatKey{b.tab().lex_code(), 0}, Cyc::one(gf.p()));
    ModuleVector zi = to_idempotent_basis(z, gf);
    CHECK(zi.terms.size() == b.size());
    for (auto& [k, c] : zi.terms) CHECK(c.is_one());
  }
}
