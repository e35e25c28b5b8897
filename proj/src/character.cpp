#include "uspecht/character.hpp"

#include <stdexcept>

namespace uspecht {

Cyc theta(const Gf& gf, uint8_t a) { return Cyc::zeta_pow(gf.p(), gf.trace(a)); }

int chi_exponent(const NormalMatrix& L, const NormalMatrix& M, const Gf& gf) {
  if (L.row2 != M.row2 || L.n != M.n)
    throw std::invalid_argument("chi: batch mismatch");
  int e = 0;
  for (auto& [b, j] : jt_positions(L.n, L.row2))
    e += gf.trace(gf.mul(L.at(b, j), M.at(b, j)));
  return e % gf.p();
}

Cyc chi(const NormalMatrix& L, const NormalMatrix& M, const Gf& gf) {
  return Cyc::zeta_pow(gf.p(), chi_exponent(L, M, gf));
}

ModuleVector idempotent_vector(const NormalMatrix& L, const Gf& gf) {
  Batch b(L.tab(), gf);
  ModuleVector v(L.n, L.m, BasisTag::Matrix);
  mpz_class den;
  mpz_ui_pow_ui(den.get_mpz_t(), gf.q(), b.jt().size());
  uint64_t code = L.tab().lex_code();
  for (uint64_t key = 0; key < b.size(); ++key) {
    NormalMatrix M = b.matrix(key);
    int e = chi_exponent(L, diamond_neg(M, gf), gf);
    Cyc c = Cyc::zeta_pow(gf.p(), e);
    c.scale(mpq_class(1) / mpq_class(den));
    v.terms.emplace(MatKey{code, key}, std::move(c));
  }
  return v;
}

std::vector<Cyc> batch_component(const ModuleVector& v, const Batch& b) {
  std::vector<Cyc> out(b.size(), Cyc::zero(b.gf().p()));
  uint64_t code = b.tab().lex_code();
  auto it = v.terms.lower_bound(MatKey{code, 0});
  for (; it != v.terms.end() && it->first.tab_code == code; ++it)
    out[it->first.entry_key] = it->second;
  return out;
}

namespace {

// Collects the distinct batch codes appearing in v.
std::vector<uint64_t> support_codes(const ModuleVector& v) {
  std::vector<uint64_t> codes;
  for (auto& [k, c] : v.terms)
    if (codes.empty() || codes.back() != k.tab_code) codes.push_back(k.tab_code);
  return codes;
}

}  // namespace

ModuleVector to_idempotent_basis(const ModuleVector& v, const Gf& gf) {
  if (v.basis != BasisTag::Matrix)
    throw std::invalid_argument("to_idempotent_basis: already idempotent");
  ModuleVector out(v.n, v.m, BasisTag::Idempotent);
  for (uint64_t code : support_codes(v)) {
    Batch b(Tableau(v.n, row2_of_code(code)), gf);
    auto dense = batch_component(v, b);
    // [M] = sum_K chi_K(M) e_K
    for (uint64_t kk = 0; kk < b.size(); ++kk) {
      NormalMatrix K = b.matrix(kk);
      Cyc acc = Cyc::zero(gf.p());
      for (uint64_t mm = 0; mm < b.size(); ++mm) {
        if (dense[mm].is_zero()) continue;
        Cyc t = dense[mm];
        t *= Cyc::zeta_pow(gf.p(), chi_exponent(K, b.matrix(mm), gf));
        acc += t;
      }
      out.add_term(MatKey{code, kk}, acc);
    }
  }
  return out;
}

ModuleVector from_idempotent_basis(const ModuleVector& v, const Gf& gf) {
  if (v.basis != BasisTag::Idempotent)
    throw std::invalid_argument("from_idempotent_basis: already matrix basis");
  ModuleVector out(v.n, v.m, BasisTag::Matrix);
  for (uint64_t code : support_codes(v)) {
    Batch b(Tableau(v.n, row2_of_code(code)), gf);
    auto dense = batch_component(v, b);
    mpz_class den;
    mpz_ui_pow_ui(den.get_mpz_t(), gf.q(), b.jt().size());
    mpq_class norm = mpq_class(1) / mpq_class(den);
    for (uint64_t mm = 0; mm < b.size(); ++mm) {
      NormalMatrix Mneg = diamond_neg(b.matrix(mm), gf);
      Cyc acc = Cyc::zero(gf.p());
      for (uint64_t kk = 0; kk < b.size(); ++kk) {
        if (dense[kk].is_zero()) continue;
        Cyc t = dense[kk];
        t *= Cyc::zeta_pow(gf.p(), chi_exponent(b.matrix(kk), Mneg, gf));
        acc += t;
      }
      acc.scale(norm);
      out.add_term(MatKey{code, mm}, acc);
    }
  }
  return out;
}

ModuleVector diamond_convolve(const ModuleVector& x, const ModuleVector& y,
                              const Batch& b) {
  ModuleVector out(x.n, x.m, BasisTag::Matrix);
  const Gf& gf = b.gf();
  uint64_t code = b.tab().lex_code();
  for (auto& [kx, cx] : x.terms) {
    if (kx.tab_code != code) throw std::invalid_argument("convolve: off-batch term");
    NormalMatrix M = b.matrix(kx.entry_key);
    for (auto& [ky, cy] : y.terms) {
      if (ky.tab_code != code) throw std::invalid_argument("convolve: off-batch term");
      NormalMatrix N = b.matrix(ky.entry_key);
      out.add_term(MatKey{code, b.key_of(diamond_add(M, N, gf))}, cx * cy);
    }
  }
  return out;
}

}  // namespace uspecht
