#pragma once

#include "uspecht/module_vector.hpp"

namespace uspecht {

/// The fixed nontrivial additive character: theta(a) = zeta_p^{Tr(a)}.
Cyc theta(const Gf& gf, uint8_t a);

/// Exponent e with chi_L(M) = zeta_p^e, i.e. e = sum over J_t of Tr(l * m)
/// mod p. Requires tab(L) == tab(M).
int chi_exponent(const NormalMatrix& L, const NormalMatrix& M, const Gf& gf);

Cyc chi(const NormalMatrix& L, const NormalMatrix& M, const Gf& gf);

/// e_L = q^{-|J_t|} sum_M chi_L(-M) [M], expanded over the batch of L.
ModuleVector idempotent_vector(const NormalMatrix& L, const Gf& gf);

/// Per-batch dense view of one batch component of v (coefficients by key).
std::vector<Cyc> batch_component(const ModuleVector& v, const Batch& b);

/// Exact base change between the [M] basis and the idempotent basis, batch
/// by batch, by direct character sums. Inverse of each other.
ModuleVector to_idempotent_basis(const ModuleVector& v, const Gf& gf);
ModuleVector from_idempotent_basis(const ModuleVector& v, const Gf& gf);

/// Group-algebra product on one batch: [M] * [N] = [M diamond N], extended
/// bilinearly. Both vectors must be supported on the given batch.
ModuleVector diamond_convolve(const ModuleVector& x, const ModuleVector& y,
                              const Batch& b);

}  // namespace uspecht
