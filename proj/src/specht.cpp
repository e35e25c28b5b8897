#include "uspecht/specht.hpp"

#include <algorithm>
#include <stdexcept>

namespace uspecht {

std::vector<MatKey> phi_m_d_images(const NormalMatrix& M, int d, const Gf& gf) {
  if (d < 1 || d > M.m) throw std::invalid_argument("phi_m_d: d out of range");
  int bd = M.row2[d - 1];
  std::vector<int> new_row2;
  for (int b : M.row2)
    if (b != bd) new_row2.push_back(b);
  Batch target(Tableau(M.n, new_row2), gf);

  int tail = M.m - d;  // rows below b_d
  uint64_t combos = 1;
  for (int i = 0; i < tail; ++i) combos *= gf.q();

  std::vector<MatKey> out;
  out.reserve(combos);
  uint64_t code = Tableau(M.n, new_row2).lex_code();
  for (uint64_t c = 0; c < combos; ++c) {
    NormalMatrix N(M.n, new_row2);
    uint64_t x = c;
    for (int i = 0; i < d - 1; ++i) {
      int b = M.row2[i];
      for (int j = 1; j < b; ++j) N.set(b, j, M.at(b, j));
    }
    for (int i = d; i < M.m; ++i) {
      int b = M.row2[i];
      uint8_t alpha = static_cast<uint8_t>(x % gf.q());
      x /= gf.q();
      for (int j = 1; j < bd; ++j)
        N.set(b, j, gf.add(M.at(b, j), gf.mul(alpha, M.at(bd, j))));
      N.set(b, bd, alpha);
      for (int j = bd + 1; j < b; ++j) N.set(b, j, M.at(b, j));
    }
    out.push_back(MatKey{code, target.key_of(N)});
  }
  return out;
}

std::vector<MatKey> phi_m_images(const NormalMatrix& M, const Gf& gf) {
  std::vector<MatKey> out;
  for (int d = 1; d <= M.m; ++d) {
    auto part = phi_m_d_images(M, d, gf);
    out.insert(out.end(), part.begin(), part.end());
  }
  return out;
}

ModuleVector phi_m_d(const NormalMatrix& M, int d, const Gf& gf) {
  ModuleVector v(M.n, M.m - 1, BasisTag::Matrix);
  for (auto& k : phi_m_d_images(M, d, gf)) v.add_term(k, Cyc::one(gf.p()));
  return v;
}

ModuleVector apply_phi_m(const ModuleVector& v, const Gf& gf) {
  if (v.basis != BasisTag::Matrix) throw std::invalid_argument("apply_phi_m: matrix basis only");
  ModuleVector out(v.n, v.m - 1, BasisTag::Matrix);
  for (auto& [k, c] : v.terms) {
    NormalMatrix M = matrix_of_key(v.n, k, gf);
    for (auto& img : phi_m_images(M, gf)) out.add_term(img, c);
  }
  return out;
}

namespace {

// every element of Xi_{i,k} for 0 <= i <= k, free of the two-row shape
// constraint (used to run over all i-dimensional subspaces of GF(q)^k)
std::vector<NormalMatrix> all_subspace_reps(int i, int k, const Gf& gf) {
  std::vector<NormalMatrix> out;
  for (auto& rows : subsets_lex(k, i)) {
    auto jt = jt_positions(k, rows);
    uint64_t combos = 1;
    for (size_t t = 0; t < jt.size(); ++t) {
      if (combos > (uint64_t(1) << 58) / gf.q())
        throw BudgetExceeded("subspace family too large to index");
      combos *= gf.q();
    }
    for (uint64_t c = 0; c < combos; ++c) {
      NormalMatrix L(k, rows);
      uint64_t x = c;
      for (auto& [b, j] : jt) {
        L.set(b, j, static_cast<uint8_t>(x % gf.q()));
        x /= gf.q();
      }
      out.push_back(std::move(L));
    }
  }
  return out;
}

}  // namespace

std::vector<MatKey> phi_1i_images(const NormalMatrix& X, int i, const Gf& gf) {
  if (i < 0 || i > X.m) throw std::invalid_argument("phi_1i: i out of range");
  std::vector<MatKey> out;
  for (auto& G : all_subspace_reps(i, X.m, gf)) {
    std::vector<uint8_t> prod(static_cast<size_t>(i) * X.n, 0);
    for (int r = 0; r < i; ++r)
      for (int k = 0; k < X.m; ++k) {
        uint8_t g = G.a[static_cast<size_t>(r) * X.m + k];
        if (!g) continue;
        for (int c = 0; c < X.n; ++c) {
          uint8_t xv = X.a[static_cast<size_t>(k) * X.n + c];
          if (!xv) continue;
          auto& acc = prod[static_cast<size_t>(r) * X.n + c];
          acc = gf.add(acc, gf.mul(g, xv));
        }
      }
    out.push_back(key_of(normal_form(X.n, i, prod, gf), gf));
  }
  return out;
}

ModuleVector apply_phi_1i(const ModuleVector& v, int i, const Gf& gf) {
  if (v.basis != BasisTag::Matrix)
    throw std::invalid_argument("apply_phi_1i: matrix basis only");
  ModuleVector out(v.n, i, BasisTag::Matrix);
  for (auto& [k, c] : v.terms) {
    NormalMatrix X = matrix_of_key(v.n, k, gf);
    for (auto& img : phi_1i_images(X, i, gf)) out.add_term(img, c);
  }
  return out;
}

ModuleVector phi_m_of_idempotent(const NormalMatrix& L, const Gf& gf) {
  Batch b(L.tab(), gf);
  mpz_class den;
  mpz_ui_pow_ui(den.get_mpz_t(), gf.q(), b.jt().size());
  mpq_class norm = mpq_class(1) / mpq_class(den);
  ModuleVector out(L.n, L.m - 1, BasisTag::Matrix);
  for (uint64_t key = 0; key < b.size(); ++key) {
    NormalMatrix M = b.matrix(key);
    Cyc c = Cyc::zeta_pow(gf.p(), chi_exponent(L, diamond_neg(M, gf), gf));
    c.scale(norm);
    for (auto& img : phi_m_images(M, gf)) out.add_term(img, c);
  }
  return out;
}

ModuleVector phi_m_of_idempotent_idem_basis(const NormalMatrix& L, const Gf& gf) {
  return to_idempotent_basis(phi_m_of_idempotent(L, gf), gf);
}

namespace {

struct BasisIndex {
  std::vector<MatKey> keys;
  std::map<MatKey, int> index;
};

BasisIndex index_basis(int n, int m, const Gf& gf, const EnumerationBudget& budget) {
  xi_size(m, n, gf, budget);  // budget gate
  BasisIndex bi;
  for (auto& t : enumerate_row_standard(n, m)) {
    Batch b(t, gf);
    uint64_t code = t.lex_code();
    for (uint64_t key = 0; key < b.size(); ++key) {
      bi.index.emplace(MatKey{code, key}, static_cast<int>(bi.keys.size()));
      bi.keys.push_back(MatKey{code, key});
    }
  }
  return bi;
}

SparseMatQ phi_m_sparse(int n, const Gf& gf, const BasisIndex& lambda,
                        const BasisIndex& mu) {
  std::vector<std::vector<std::pair<int, int>>> rows(mu.keys.size());
  for (size_t col = 0; col < lambda.keys.size(); ++col) {
    NormalMatrix M = matrix_of_key(n, lambda.keys[col], gf);
    for (auto& img : phi_m_images(M, gf))
      rows[mu.index.at(img)].emplace_back(static_cast<int>(col), 1);
  }
  SparseMatQ a;
  a.ncols = static_cast<int>(lambda.keys.size());
  for (auto& r : rows) {
    std::sort(r.begin(), r.end());
    SparseRow sr;
    for (size_t i = 0; i < r.size();) {
      size_t j = i;
      int acc = 0;
      while (j < r.size() && r[j].first == r[i].first) acc += r[j++].second;
      if (acc != 0) sr.e.emplace_back(r[i].first, acc);
      i = j;
    }
    if (!sr.e.empty()) a.add_row(std::move(sr));
  }
  return a;
}

}  // namespace

int phi_m_rank(int n, int m, const Gf& gf, const EnumerationBudget& budget) {
  BasisIndex lambda = index_basis(n, m, gf, budget);
  BasisIndex mu = index_basis(n, m - 1, gf, budget);
  return sparse_rank(phi_m_sparse(n, gf, lambda, mu));
}

std::string phi_m_triplets(int n, int m, const Gf& gf, const EnumerationBudget& budget) {
  BasisIndex lambda = index_basis(n, m, gf, budget);
  BasisIndex mu = index_basis(n, m - 1, gf, budget);
  std::map<std::pair<int, int>, long> entries;
  for (size_t col = 0; col < lambda.keys.size(); ++col) {
    NormalMatrix M = matrix_of_key(n, lambda.keys[col], gf);
    for (auto& img : phi_m_images(M, gf))
      entries[{mu.index.at(img), static_cast<int>(col)}] += 1;
  }
  std::string out;
  for (auto& [rc, v] : entries)
    out += std::to_string(rc.first) + " " + std::to_string(rc.second) + " " +
           std::to_string(v) + "\n";
  return out;
}

KernelBasisResult kernel_basis(int n, int m, const Gf& gf, const EnumerationBudget& budget) {
  BasisIndex lambda = index_basis(n, m, gf, budget);
  BasisIndex mu = index_basis(n, m - 1, gf, budget);
  auto kern = sparse_kernel(phi_m_sparse(n, gf, lambda, mu));
  KernelBasisResult out;
  out.dim = static_cast<int>(kern.size());
  out.lambda_keys = lambda.keys;
  for (auto& kv : kern) {
    ModuleVector v(n, m, BasisTag::Matrix);
    for (auto& [col, val] : kv.e) v.add_term(lambda.keys[col], Cyc::rational(gf.p(), val));
    out.vectors.push_back(std::move(v));
  }
  return out;
}

bool kernel_intersection_check(int n, int m, const Gf& gf) {
  BasisIndex lambda = index_basis(n, m, gf, {});
  // stack phi_{1,0} .. phi_{1,m-1}; its kernel is contained in ker Phi_m
  // (phi_{1,m-1} = Phi_m), so equality <=> equal ranks
  std::map<std::pair<int, MatKey>, SparseRow> rows;
  for (size_t col = 0; col < lambda.keys.size(); ++col) {
    NormalMatrix X = matrix_of_key(n, lambda.keys[col], gf);
    for (int i = 0; i < m; ++i)
      for (auto& img : phi_1i_images(X, i, gf)) {
        auto& r = rows[{i, img}];
        if (!r.e.empty() && r.e.back().first == static_cast<int>(col))
          r.e.back().second += 1;
        else
          r.e.emplace_back(static_cast<int>(col), 1);
      }
  }
  SparseMatQ stacked;
  stacked.ncols = static_cast<int>(lambda.keys.size());
  for (auto& [k, r] : rows) stacked.add_row(r);
  int rank_stacked = sparse_rank(std::move(stacked));
  int rank_phi = phi_m_rank(n, m, gf);
  if (rank_stacked != rank_phi) return false;
  // belt: every kernel vector of Phi_m is killed by each phi_{1,i}
  auto kb = kernel_basis(n, m, gf);
  for (auto& v : kb.vectors)
    for (int i = 0; i < m; ++i)
      if (!apply_phi_1i(v, i, gf).is_zero()) return false;
  return true;
}

std::optional<NormalMatrix> remove_pattern(const NormalMatrix& L, const Pattern& p) {
  if (!p.fits(L.tab())) return std::nullopt;
  auto pI = p.rows();
  auto pJ = p.cols();
  std::vector<int> removed = pI;
  removed.insert(removed.end(), pJ.begin(), pJ.end());
  std::sort(removed.begin(), removed.end());
  std::vector<int> surviving_cols;
  for (int c = 1; c <= L.n; ++c)
    if (!std::binary_search(removed.begin(), removed.end(), c)) surviving_cols.push_back(c);
  auto new_col = [&](int c) {
    return static_cast<int>(std::lower_bound(surviving_cols.begin(), surviving_cols.end(), c) -
                            surviving_cols.begin()) +
           1;
  };
  std::vector<int> new_row2;
  for (int b : L.row2)
    if (!std::binary_search(removed.begin(), removed.end(), b)) new_row2.push_back(new_col(b));
  NormalMatrix R(static_cast<int>(surviving_cols.size()), new_row2);
  for (int b : L.row2) {
    if (std::binary_search(removed.begin(), removed.end(), b)) continue;
    for (size_t j = 0; j < surviving_cols.size(); ++j)
      R.a[static_cast<size_t>(R.row_index(new_col(b))) * R.n + j] = L.at(b, surviving_cols[j]);
  }
  return R;
}

bool leading_term_eligible(const NormalMatrix& L, const Gf& gf) {
  Pattern p = filled_pattern_of(canonical_pattern_matrix(L, gf)).p;
  return remove_and_shift(L.tab(), p).standard();
}

namespace {

NormalMatrix pattern_matrix_in_batch(const Tableau& t, const FilledPattern& pf) {
  NormalMatrix L(t.n, t.row2);
  for (size_t i = 0; i < pf.values.size(); ++i)
    L.set(pf.p.pos[i].first, pf.p.pos[i].second, pf.values[i]);
  return L;
}

}  // namespace

ComponentSolver::ComponentSolver(int n, int m, FilledPattern pf, const Gf& gf)
    : n_(n), m_(m), pf_(std::move(pf)), gf_(gf) {
  if (m_ == 0) return;  // the trivial module: no removal map, no corrections
  // candidate labels: members of the pf-orbit of every fitting batch whose
  // shifted tableau is row-standard but non-standard
  std::vector<ModuleVector> images;
  for (auto& t : enumerate_row_standard(n_, m_)) {
    if (!pf_.p.fits(t)) continue;
    if (remove_and_shift(t, pf_.p).standard()) continue;
    OrbitModule o = orbit_of(pattern_matrix_in_batch(t, pf_), gf_);
    Batch b(t, gf_);
    for (uint64_t key : o.members) {
      cand_keys_.push_back(MatKey{t.lex_code(), key});
      images.push_back(phi_m_of_idempotent(b.matrix(key), gf_));
    }
  }
  // dim of the pf-component of M^mu: orbits are q^{k-s}-dimensional, one per
  // fitting mu-batch
  long fitting_mu = 0;
  for (auto& t : enumerate_row_standard(n_, m_ - 1))
    if (pf_.p.fits(t)) ++fitting_mu;
  long orbit_dim = 1;
  for (int i = 0; i < orbit_dimension_exponent(pf_.p); ++i) orbit_dim *= gf_.q();
  component_dim_mu_ = fitting_mu * orbit_dim;

  if (cand_keys_.empty()) return;  // full patterns: nothing to solve

  for (auto& img : images)
    for (auto& [k, c] : img.terms)
      if (!row_index_.count(k)) {
        int idx = static_cast<int>(row_index_.size());
        row_index_.emplace(k, idx);
      }
  std::vector<std::vector<Cyc>> columns;
  for (auto& img : images) {
    std::vector<Cyc> col(row_index_.size(), Cyc::zero(gf_.p()));
    for (auto& [k, c] : img.terms) col[row_index_.at(k)] = c;
    columns.push_back(std::move(col));
  }
  solver_ = std::make_unique<CycSolver>(std::move(columns), gf_.p());
}

SpechtVector ComponentSolver::construct(const NormalMatrix& L) const {
  if (!leading_term_eligible(L, gf_))
    throw std::invalid_argument("construct_standard_vector: label is not eligible");
  uint64_t code = L.tab().lex_code();
  SpechtVector sv;
  sv.last = L.tab();
  sv.top_label = key_of(L, gf_);
  sv.pf = pf_;
  sv.v = ModuleVector(n_, m_, BasisTag::Idempotent);
  sv.v.add_term(sv.top_label, Cyc::one(gf_.p()));
  if (cand_keys_.empty()) return sv;  // Phi_m(e_L) = 0 for full patterns

  ModuleVector rhs_v = phi_m_of_idempotent(L, gf_);
  std::vector<Cyc> rhs(row_index_.size(), Cyc::zero(gf_.p()));
  for (auto& [k, c] : rhs_v.terms) {
    auto it = row_index_.find(k);
    if (it == row_index_.end())
      throw std::logic_error("component solve: rhs leaves the candidate span");
    rhs[it->second] = c;
  }
  std::vector<Cyc> a;
  if (!solver_->solve(std::move(rhs), a))
    throw std::logic_error("component solve: inconsistent system");
  for (size_t i = 0; i < cand_keys_.size(); ++i) {
    if (a[i].is_zero()) continue;
    if (cand_keys_[i].tab_code >= code)
      throw std::logic_error("component solve: correction term at or above the leading batch");
    sv.v.add_term(cand_keys_[i], -a[i]);
  }
  return sv;
}

SpechtVector construct_standard_vector(const NormalMatrix& L, const Gf& gf) {
  FilledPattern pf = filled_pattern_of(canonical_pattern_matrix(L, gf));
  ComponentSolver solver(L.n, L.m, pf, gf);
  return solver.construct(L);
}

std::vector<SpechtVector> standard_basis(int n, int m, const Gf& gf) {
  std::vector<SpechtVector> out;
  std::map<FilledPattern, std::unique_ptr<ComponentSolver>> solvers;
  for (auto& t : enumerate_row_standard(n, m)) {
    Batch b(t, gf);
    for (auto& o : batch_orbit_census(t, gf)) {
      if (!remove_and_shift(t, o.pf.p).standard()) continue;
      auto it = solvers.find(o.pf);
      if (it == solvers.end())
        it = solvers.emplace(o.pf, std::make_unique<ComponentSolver>(n, m, o.pf, gf)).first;
      for (uint64_t key : o.members) out.push_back(it->second->construct(b.matrix(key)));
    }
  }
  return out;
}

bool integrality_diagnostic(const SpechtVector& sv, const Gf& gf) {
  for (auto& [k, c] : sv.v.terms) {
    mpz_class d = c.den();
    while (d % gf.p() == 0) d /= gf.p();
    if (d != 1) return false;
  }
  return true;
}

bool in_kernel_of_phi_m(const ModuleVector& v_idem, const Gf& gf) {
  ModuleVector v = v_idem.basis == BasisTag::Idempotent
                       ? from_idempotent_basis(v_idem, gf)
                       : v_idem;
  return apply_phi_m(v, gf).is_zero();
}

}  // namespace uspecht
