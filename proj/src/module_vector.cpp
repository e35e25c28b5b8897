#include "uspecht/module_vector.hpp"

#include <stdexcept>

namespace uspecht {

MatKey key_of(const NormalMatrix& L, const Gf& gf) {
  Batch b(L.tab(), gf);
  return MatKey{L.tab().lex_code(), b.key_of(L)};
}

std::vector<int> row2_of_code(uint64_t tab_code) {
  std::vector<int> row2;
  for (int i = 0; i < 8; ++i) {
    int v = static_cast<int>((tab_code >> (8 * (7 - i))) & 0xff);
    if (v == 0) break;
    row2.push_back(v);
  }
  return row2;
}

NormalMatrix matrix_of_key(int n, const MatKey& k, const Gf& gf) {
  Batch b(Tableau(n, row2_of_code(k.tab_code)), gf);
  return b.matrix(k.entry_key);
}

void ModuleVector::add_term(const MatKey& k, const Cyc& c) {
  if (c.is_zero()) return;
  auto it = terms.find(k);
  if (it == terms.end()) {
    terms.emplace(k, c);
  } else {
    it->second += c;
    if (it->second.is_zero()) terms.erase(it);
  }
}

Cyc ModuleVector::coeff(const MatKey& k, int p) const {
  auto it = terms.find(k);
  return it == terms.end() ? Cyc::zero(p) : it->second;
}

ModuleVector& ModuleVector::operator+=(const ModuleVector& o) {
  if (basis != o.basis || n != o.n || m != o.m)
    throw std::invalid_argument("ModuleVector: basis/shape mismatch");
  for (auto& [k, c] : o.terms) add_term(k, c);
  return *this;
}

ModuleVector& ModuleVector::operator-=(const ModuleVector& o) {
  if (basis != o.basis || n != o.n || m != o.m)
    throw std::invalid_argument("ModuleVector: basis/shape mismatch");
  for (auto& [k, c] : o.terms) add_term(k, -c);
  return *this;
}

ModuleVector& ModuleVector::scale(const Cyc& c) {
  if (c.is_zero()) {
    terms.clear();
    return *this;
  }
  for (auto& [k, v] : terms) v *= c;
  return *this;
}

std::pair<Tableau, ModuleVector> last_and_top(const ModuleVector& v) {
  if (v.is_zero()) throw std::invalid_argument("last_and_top: zero vector");
  uint64_t last_code = v.terms.rbegin()->first.tab_code;
  ModuleVector top(v.n, v.m, v.basis);
  for (auto it = v.terms.rbegin(); it != v.terms.rend() && it->first.tab_code == last_code; ++it)
    top.terms.emplace(it->first, it->second);
  return {Tableau(v.n, row2_of_code(last_code)), top};
}

}  // namespace uspecht
