#pragma once

#include <map>
#include <memory>
#include <optional>

#include "uspecht/linalg.hpp"
#include "uspecht/orbit.hpp"

namespace uspecht {

/// Images of [M] under the one-box-removal map, as mu-basis keys (mu =
/// (n-m+1, m-1), all coefficients 1). The d-component moves row b_d to the
/// first row after adding all multiples of it to the lower rows.
std::vector<MatKey> phi_m_d_images(const NormalMatrix& M, int d, const Gf& gf);
std::vector<MatKey> phi_m_images(const NormalMatrix& M, const Gf& gf);

ModuleVector phi_m_d(const NormalMatrix& M, int d, const Gf& gf);

/// Applies the removal map to a matrix-basis vector of shape (n-m, m).
ModuleVector apply_phi_m(const ModuleVector& v, const Gf& gf);

/// phi_{1,i}: sends a subspace to the sum of its i-dimensional subspaces.
std::vector<MatKey> phi_1i_images(const NormalMatrix& X, int i, const Gf& gf);
ModuleVector apply_phi_1i(const ModuleVector& v, int i, const Gf& gf);

/// Phi_m(e_L) in the [M] basis of M^mu (exact cyclotomic coefficients).
ModuleVector phi_m_of_idempotent(const NormalMatrix& L, const Gf& gf);

/// Phi_m(e_L) expanded in the idempotent bases of the mu-batches.
ModuleVector phi_m_of_idempotent_idem_basis(const NormalMatrix& L, const Gf& gf);

struct KernelBasisResult {
  int dim = 0;
  std::vector<MatKey> lambda_keys;     // column order of the coordinates
  std::vector<ModuleVector> vectors;   // matrix basis, rational coefficients
};

/// Exact basis of ker Phi_m over Q in the [M] basis;
/// dim = [n m]_q - [n m-1]_q.
KernelBasisResult kernel_basis(int n, int m, const Gf& gf,
                               const EnumerationBudget& budget = {});

/// Exact rank of Phi_m (for dimension bookkeeping without a full kernel).
int phi_m_rank(int n, int m, const Gf& gf, const EnumerationBudget& budget = {});

/// The matrix of the removal map in the [M] bases as sparse triplet text,
/// one "row col value" line per entry; rows index the smaller shape, both
/// sides in enumeration order, 0-based.
std::string phi_m_triplets(int n, int m, const Gf& gf,
                           const EnumerationBudget& budget = {});

/// intersect_{i<m} ker phi_{1,i} == ker Phi_m, checked exactly.
bool kernel_intersection_check(int n, int m, const Gf& gf);

/// R_p: delete the pattern's rows and columns; nullopt when p does not fit
/// tab(L) (the zero-marker).
std::optional<NormalMatrix> remove_pattern(const NormalMatrix& L, const Pattern& p);

/// True iff tab(L) minus the pattern of L's orbit is shifted standard.
bool leading_term_eligible(const NormalMatrix& L, const Gf& gf);

struct SpechtVector {
  ModuleVector v;        // idempotent basis, leading coefficient 1
  Tableau last;          // last(v)
  MatKey top_label;      // the leading idempotent e_L
  FilledPattern pf;      // filled pattern of the leading orbit
};

/// Shared solver for one filled-pattern component: candidate images Phi(e_R)
/// for R over the non-standard shifted tableaux, factored once, then solved
/// per eligible leading label.
class ComponentSolver {
 public:
  ComponentSolver(int n, int m, FilledPattern pf, const Gf& gf);

  const std::vector<MatKey>& candidates() const { return cand_keys_; }
  int rank() const { return solver_ ? solver_->rank() : 0; }
  /// dim of the target filled-pattern component of M^mu
  long component_dim_mu() const { return component_dim_mu_; }

  SpechtVector construct(const NormalMatrix& L) const;

 private:
  int n_, m_;
  FilledPattern pf_;
  const Gf& gf_;
  std::vector<MatKey> cand_keys_;
  std::map<MatKey, int> row_index_;
  std::unique_ptr<CycSolver> solver_;
  long component_dim_mu_ = 0;
};

SpechtVector construct_standard_vector(const NormalMatrix& L, const Gf& gf);

std::vector<SpechtVector> standard_basis(int n, int m, const Gf& gf);

/// True iff every coefficient of v (leading coefficient normalized to 1)
/// has denominator a power of p, i.e. v lives in Z[zeta_p] with q inverted.
bool integrality_diagnostic(const SpechtVector& v, const Gf& gf);

/// Exact kernel membership: expands v to the [M] basis and pushes it
/// through the removal map.
bool in_kernel_of_phi_m(const ModuleVector& v_idem, const Gf& gf);

}  // namespace uspecht
