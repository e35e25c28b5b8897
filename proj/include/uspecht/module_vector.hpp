#pragma once

#include <compare>
#include <cstdint>
#include <map>
#include <string>

#include "uspecht/cyclotomic.hpp"
#include "uspecht/flag.hpp"

namespace uspecht {

/// Identifies a basis matrix of M^{(n-m,m)} inside a fixed (n, m, q) context:
/// the batch (by its lex code) plus the radix-q free-entry key. The ordering
/// (batch first) is the one last(v) is read from.
struct MatKey {
  uint64_t tab_code = 0;
  uint64_t entry_key = 0;

  friend bool operator==(const MatKey&, const MatKey&) = default;
  friend std::strong_ordering operator<=>(const MatKey&, const MatKey&) = default;
};

MatKey key_of(const NormalMatrix& L, const Gf& gf);
std::vector<int> row2_of_code(uint64_t tab_code);
NormalMatrix matrix_of_key(int n, const MatKey& k, const Gf& gf);

enum class BasisTag { Matrix, Idempotent };

/// Finitely supported vector over the basis Xi_{m,n}, in either the [M]
/// basis or the per-batch idempotent basis. Zero coefficients are never
/// stored.
struct ModuleVector {
  int n = 0;
  int m = 0;
  BasisTag basis = BasisTag::Matrix;
  std::map<MatKey, Cyc> terms;

  ModuleVector() = default;
  ModuleVector(int n_, int m_, BasisTag b) : n(n_), m(m_), basis(b) {}

  bool is_zero() const { return terms.empty(); }
  void add_term(const MatKey& k, const Cyc& c);
  Cyc coeff(const MatKey& k, int p) const;

  ModuleVector& operator+=(const ModuleVector& o);
  ModuleVector& operator-=(const ModuleVector& o);
  ModuleVector& scale(const Cyc& c);
  friend bool operator==(const ModuleVector&, const ModuleVector&) = default;
};

/// (last(v), top(v)): the lexicographically last batch carrying a nonzero
/// component, and that component. Throws on v = 0. Works in either basis
/// (base change is per batch, so batch supports agree).
std::pair<Tableau, ModuleVector> last_and_top(const ModuleVector& v);

}  // namespace uspecht
