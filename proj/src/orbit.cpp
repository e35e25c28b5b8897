#include "uspecht/orbit.hpp"

#include <algorithm>
#include <deque>
#include <stdexcept>

namespace uspecht {

std::vector<Root> RootTriple::all() const {
  std::vector<Root> r = u1;
  r.insert(r.end(), u2.begin(), u2.end());
  r.insert(r.end(), u3.begin(), u3.end());
  return r;
}

RootTriple upsilon(const Tableau& t) {
  RootTriple r;
  for (int i = 2; i <= t.n; ++i) {
    for (int j = 1; j < i; ++j) {
      bool ri = t.row_of(i) == 2, rj = t.row_of(j) == 2;
      if (ri && !rj) r.u1.emplace_back(i, j);
      if (!ri && !rj) r.u2.emplace_back(i, j);
      if (ri && rj) r.u3.emplace_back(i, j);
    }
  }
  return r;
}

NormalMatrix truncated_column_op(const NormalMatrix& L, int i, int j, uint8_t alpha,
                                 const Gf& gf) {
  NormalMatrix K = L;
  for (int b : L.row2) {
    if (b <= i) continue;
    K.set(b, i, gf.sub(L.at(b, i), gf.mul(alpha, L.at(b, j))));
  }
  return K;
}

NormalMatrix truncated_row_op(const NormalMatrix& L, int i, int j, uint8_t alpha,
                              const Gf& gf) {
  NormalMatrix K = L;
  for (int v = 1; v < j; ++v) {
    if (std::binary_search(L.row2.begin(), L.row2.end(), v)) continue;
    K.set(j, v, gf.add(L.at(j, v), gf.mul(alpha, L.at(i, v))));
  }
  return K;
}

MonomialImage monomial_action(const NormalMatrix& L, Root r, uint8_t alpha, const Gf& gf) {
  auto [i, j] = r;
  if (i <= j) throw std::invalid_argument("monomial_action: not a positive root");
  bool ri = std::binary_search(L.row2.begin(), L.row2.end(), i);
  bool rj = std::binary_search(L.row2.begin(), L.row2.end(), j);
  if (ri && !rj)
    return {L, Cyc::zeta_pow(gf.p(), gf.trace(gf.mul(L.at(i, j), alpha)))};
  if (!ri && !rj) return {truncated_column_op(L, i, j, alpha, gf), Cyc::one(gf.p())};
  if (ri && rj) return {truncated_row_op(L, i, j, alpha, gf), Cyc::one(gf.p())};
  throw std::invalid_argument("monomial_action: root outside Upsilon of this batch");
}

FilledPattern filled_pattern_of(const NormalMatrix& L) {
  if (!L.is_pattern_matrix())
    throw std::invalid_argument("filled_pattern_of: not a pattern matrix");
  std::vector<std::pair<int, int>> pos;
  std::vector<uint8_t> vals;
  for (auto& [b, j] : jt_positions(L.n, L.row2)) {
    uint8_t v = L.at(b, j);
    if (v) {
      pos.emplace_back(b, j);
      vals.push_back(v);
    }
  }
  return {Pattern(std::move(pos)), std::move(vals)};
}

std::string FilledPattern::to_string() const {
  std::string s = "{";
  for (size_t i = 0; i < values.size(); ++i) {
    if (i) s += ";";
    s += "(" + std::to_string(p.pos[i].first) + "," + std::to_string(p.pos[i].second) +
         ")=" + std::to_string(int(values[i]));
  }
  return s + "}";
}

std::vector<Root> outer_rim(const Pattern& p) {
  std::vector<Root> out;
  for (auto& [b, j] : p.pos) {
    bool rim = true;
    for (auto& [c, k] : p.pos)
      if (k < j && c >= b) rim = false;
    if (rim) out.emplace_back(b, j);
  }
  return out;
}

bool OrbitModule::contains(uint64_t key) const {
  return std::binary_search(members.begin(), members.end(), key);
}

NormalMatrix canonical_pattern_matrix(const NormalMatrix& K, const Gf& gf) {
  NormalMatrix L = K;
  const std::vector<int> labels = K.row2;  // L is reassigned below
  for (int j = 1; j <= L.n; ++j) {
    if (std::binary_search(labels.begin(), labels.end(), j)) continue;
    int b = 0;
    for (int bi : labels)
      if (bi > j && L.at(bi, j) != 0) b = std::max(b, bi);
    if (!b) continue;
    uint8_t piv = L.at(b, j);
    for (int u : labels) {  // hook leg
      if (u <= j || u >= b) continue;
      uint8_t val = L.at(u, j);
      if (!val) continue;
      L = truncated_row_op(L, b, u, gf.neg(gf.div(val, piv)), gf);
    }
    for (int v = j + 1; v < b; ++v) {  // hook arm
      if (std::binary_search(labels.begin(), labels.end(), v)) continue;
      uint8_t val = L.at(b, v);
      if (!val) continue;
      L = truncated_column_op(L, v, j, gf.div(val, piv), gf);
    }
  }
  if (!L.is_pattern_matrix())
    throw std::logic_error("canonical_pattern_matrix: sweep did not terminate at a pattern matrix");
  return L;
}

int orbit_dimension_exponent(const Pattern& p) {
  int s = p.size();
  int k = 0;
  for (int i = 0; i < s; ++i) {
    auto [bi, vi] = p.pos[i];
    int zi = 0;
    for (int j = 0; j < s; ++j) {
      auto [bj, vj] = p.pos[j];
      if (bj > bi && bi > vj && vj > vi) ++zi;
    }
    k += (bi - vi) - zi;
  }
  return k - s;
}

OrbitModule orbit_of(const NormalMatrix& L0, const Gf& gf) {
  Batch batch(L0.tab(), gf);
  RootTriple ups = upsilon(batch.tab());
  std::vector<Root> gens = ups.u2;
  gens.insert(gens.end(), ups.u3.begin(), ups.u3.end());

  std::vector<uint64_t> members;
  std::deque<uint64_t> frontier;
  std::vector<bool> seen;
  uint64_t start = batch.key_of(L0);
  // visited set: bitset over the batch when small, otherwise sorted probing
  seen.assign(batch.size(), false);
  seen[start] = true;
  frontier.push_back(start);
  members.push_back(start);
  std::optional<uint64_t> pattern_key;
  int pattern_count = 0;
  while (!frontier.empty()) {
    uint64_t key = frontier.front();
    frontier.pop_front();
    NormalMatrix L = batch.matrix(key);
    if (L.is_pattern_matrix()) {
      pattern_key = key;
      ++pattern_count;
    }
    for (auto& [i, j] : gens) {
      bool col = !std::binary_search(L.row2.begin(), L.row2.end(), i);
      for (int a = 1; a < gf.q(); ++a) {
        NormalMatrix K = col ? truncated_column_op(L, i, j, static_cast<uint8_t>(a), gf)
                             : truncated_row_op(L, i, j, static_cast<uint8_t>(a), gf);
        uint64_t kk = batch.key_of(K);
        if (!seen[kk]) {
          seen[kk] = true;
          frontier.push_back(kk);
          members.push_back(kk);
        }
      }
    }
  }
  std::sort(members.begin(), members.end());
  if (pattern_count != 1)
    throw std::logic_error("orbit_of: expected exactly one pattern matrix, found " +
                           std::to_string(pattern_count));
  OrbitModule o;
  o.t = batch.tab();
  o.members = std::move(members);
  o.pattern_key = *pattern_key;
  o.pf = filled_pattern_of(batch.matrix(*pattern_key));
  o.dim_exponent = orbit_dimension_exponent(o.pf.p);
  return o;
}

StabilizerGenerators stabilizer_generators(const NormalMatrix& L) {
  if (!L.is_pattern_matrix())
    throw std::invalid_argument("stabilizer_generators: input is not a pattern matrix");
  FilledPattern pf = filled_pattern_of(L);
  auto pI = pf.p.rows();
  auto pJ = pf.p.cols();
  RootTriple ups = upsilon(L.tab());
  StabilizerGenerators out;
  out.upsilon1 = ups.u1;
  for (auto& [i, j] : ups.u2) {
    bool stab = !std::binary_search(pJ.begin(), pJ.end(), j);
    for (auto& [b, a] : pf.p.pos)
      if (a == j && b < i) stab = true;
    if (stab) out.stab_col.emplace_back(i, j);
  }
  for (auto& [i, j] : ups.u3) {
    bool stab = std::find(pI.begin(), pI.end(), i) == pI.end();
    for (auto& [b, a] : pf.p.pos)
      if (b == i && a > j) stab = true;
    if (stab) out.stab_row.emplace_back(i, j);
  }
  // coupled pairs: pattern positions (s,i), (t,j) with s > t > i > j give the
  // column operation x_{ij} paired against the row operation x_{st}
  for (auto& [t, j] : pf.p.pos)
    for (auto& [s, i] : pf.p.pos)
      if (s > t && t > i && i > j) out.pairs.push_back({{i, j}, {s, t}});
  return out;
}

int StabilizerGenerators::log_order() const {
  return static_cast<int>(upsilon1.size() + stab_col.size() + stab_row.size() + pairs.size());
}

std::vector<OrbitModule> batch_orbit_census(const Tableau& t, const Gf& gf) {
  Batch batch(t, gf);
  std::vector<bool> done(batch.size(), false);
  std::vector<OrbitModule> out;
  for (uint64_t key = 0; key < batch.size(); ++key) {
    if (done[key]) continue;
    OrbitModule o = orbit_of(batch.matrix(key), gf);
    for (uint64_t k : o.members) done[k] = true;
    out.push_back(std::move(o));
  }
  return out;
}

ModuleVector circle_on_idempotent(const NormalMatrix& K, Root r, uint8_t alpha,
                                  const Gf& gf) {
  auto [i, j] = r;
  bool ri = std::binary_search(K.row2.begin(), K.row2.end(), i);
  bool rj = std::binary_search(K.row2.begin(), K.row2.end(), j);
  ModuleVector out(K.n, K.m, BasisTag::Idempotent);
  if (!(!ri && rj)) {  // inside Upsilon: single monomial term
    MonomialImage im = monomial_action(K, r, alpha, gf);
    out.add_term(key_of(im.label, gf), im.scalar);
    return out;
  }

  // Mixed root: direct expansion. e_K o g = q^{-|J|} sum_M chi_K(-M)[M o g];
  // substituting M' = M o g the [M']-coefficient is a pure root of unity
  // over q^{|J|}. Candidate support in the idempotent basis is confined to
  // labels agreeing with K outside row j and column i; completeness of that
  // candidate set is verified by exact reconstruction below.
  Batch batch(K.tab(), gf);
  GroupElement g = GroupElement::root_element(K.n, i, j, alpha);
  int p = gf.p();
  uint64_t bsz = batch.size();

  std::vector<int> wexp(bsz, 0);  // exponent of the [M']-coefficient
  for (uint64_t mm = 0; mm < bsz; ++mm) {
    NormalMatrix M = batch.matrix(mm);
    uint64_t image = batch.key_of(circle_action(M, g, gf));
    wexp[image] = chi_exponent(K, diamond_neg(M, gf), gf);
  }

  // candidate labels: vary the free entries in row j and column i
  std::vector<size_t> var_positions;
  for (size_t idx = 0; idx < batch.jt().size(); ++idx) {
    auto& [b, c] = batch.jt()[idx];
    if (b == j || c == i) var_positions.push_back(idx);
  }
  std::vector<uint8_t> base = batch.digits(batch.key_of(K));
  std::vector<uint64_t> candidates;
  uint64_t combos = 1;
  for (size_t t = 0; t < var_positions.size(); ++t) combos *= gf.q();
  for (uint64_t c = 0; c < combos; ++c) {
    std::vector<uint8_t> d = base;
    uint64_t x = c;
    for (size_t t = 0; t < var_positions.size(); ++t) {
      d[var_positions[t]] = static_cast<uint8_t>(x % gf.q());
      x /= gf.q();
    }
    uint64_t key = 0;
    for (uint8_t dig : d) key = key * gf.q() + dig;
    candidates.push_back(key);
  }
  std::sort(candidates.begin(), candidates.end());

  mpz_class den;
  mpz_ui_pow_ui(den.get_mpz_t(), gf.q(), batch.jt().size());

  // coefficient of e_{K'}: sum_{M'} w[M'] chi_{K'}(M') with w carrying the
  // q^{-|J|} from the definition of e_K
  std::vector<Cyc> coeffs;
  std::vector<std::vector<int>> cand_chi(candidates.size());
  for (size_t ci = 0; ci < candidates.size(); ++ci) {
    NormalMatrix Kc = batch.matrix(candidates[ci]);
    std::vector<long> counts(p, 0);
    std::vector<int> chi_row(bsz);
    for (uint64_t mm = 0; mm < bsz; ++mm) {
      int ce = chi_exponent(Kc, batch.matrix(mm), gf);
      chi_row[mm] = ce;
      counts[(wexp[mm] + ce) % p] += 1;
    }
    cand_chi[ci] = std::move(chi_row);
    coeffs.push_back(Cyc::from_exponent_counts(p, counts, den));
  }

  // exact reconstruction: sum_{K'} c_{K'} e_{K'} must reproduce every
  // [M']-coefficient; this certifies no support outside the candidates
  for (uint64_t mm = 0; mm < bsz; ++mm) {
    Cyc rec = Cyc::zero(p);
    for (size_t ci = 0; ci < candidates.size(); ++ci) {
      if (coeffs[ci].is_zero()) continue;
      Cyc t = coeffs[ci];
      t *= Cyc::zeta_pow(p, -cand_chi[ci][mm]);  // chi_{K'}(-M)
      rec += t;
    }
    if (!(rec == Cyc::zeta_pow(p, wexp[mm])))
      throw std::logic_error("circle_on_idempotent: candidate support was incomplete");
  }

  uint64_t code = K.tab().lex_code();
  for (size_t ci = 0; ci < candidates.size(); ++ci)
    out.add_term(MatKey{code, candidates[ci]}, coeffs[ci]);
  return out;
}

bool check_U_invariance(const OrbitModule& o, const Gf& gf) {
  Batch batch(o.t, gf);
  for (uint64_t key : o.members) {
    NormalMatrix K = batch.matrix(key);
    for (int i = 2; i <= o.t.n; ++i) {
      for (int j = 1; j < i; ++j) {
        for (int a = 1; a < gf.q(); ++a) {
          ModuleVector im = circle_on_idempotent(K, {i, j}, static_cast<uint8_t>(a), gf);
          for (auto& [k, c] : im.terms) {
            if (k.tab_code != o.t.lex_code()) return false;
            if (!o.contains(k.entry_key)) return false;
          }
        }
      }
    }
  }
  return true;
}

namespace {

// scalar of e_K o a where a = prod_{(b,v) in Omega} sum_alpha x_{bv}(alpha):
// q^{|Omega|} if K vanishes on Omega, else 0.
bool vanishes_on(const NormalMatrix& K, const std::vector<Root>& omega) {
  for (auto& [b, v] : omega)
    if (K.at(b, v) != 0) return false;
  return true;
}

}  // namespace

bool check_cyclic_generation(const OrbitModule& o, const Gf& gf, uint64_t seed,
                             int random_trials) {
  Batch batch(o.t, gf);
  // Omega: hook legs and arms (corners excluded) of the pattern positions
  std::vector<Root> omega;
  for (auto& [b, j] : o.pf.p.pos) {
    for (auto& [u, v] : batch.jt()) {
      if (v == j && u < b && u != b) omega.emplace_back(u, v);
      if (u == b && v > j) omega.emplace_back(u, v);
    }
  }
  std::sort(omega.begin(), omega.end());
  omega.erase(std::unique(omega.begin(), omega.end()), omega.end());

  NormalMatrix L = batch.matrix(o.pattern_key);
  if (!vanishes_on(L, omega)) return false;  // e_L o a must be q^{|Omega|} e_L
  for (uint64_t key : o.members) {
    if (key == o.pattern_key) continue;
    if (vanishes_on(batch.matrix(key), omega)) return false;  // must be annihilated
  }

  // random orbit vectors with unit e_L coefficient map to q^{|Omega|} e_L
  std::mt19937_64 rng(seed);
  for (int trial = 0; trial < random_trials; ++trial) {
    ModuleVector x(o.t.n, o.t.m, BasisTag::Idempotent);
    uint64_t code = o.t.lex_code();
    x.add_term(MatKey{code, o.pattern_key}, Cyc::one(gf.p()));
    for (uint64_t key : o.members) {
      if (key == o.pattern_key) continue;
      long c = static_cast<long>(rng() % 7) - 3;
      long e = static_cast<long>(rng() % gf.p());
      Cyc coeff = Cyc::integer(gf.p(), c);
      coeff *= Cyc::zeta_pow(gf.p(), e);
      x.add_term(MatKey{code, key}, coeff);
    }
    // apply a member-by-member
    ModuleVector y(o.t.n, o.t.m, BasisTag::Idempotent);
    for (auto& [k, c] : x.terms) {
      if (vanishes_on(batch.matrix(k.entry_key), omega)) {
        Cyc scaled = c;
        mpz_class qw;
        mpz_ui_pow_ui(qw.get_mpz_t(), gf.q(), omega.size());
        scaled.scale(mpq_class(qw));
        y.add_term(k, scaled);
      }
    }
    ModuleVector expected(o.t.n, o.t.m, BasisTag::Idempotent);
    mpz_class qw;
    mpz_ui_pow_ui(qw.get_mpz_t(), gf.q(), omega.size());
    Cyc lead = Cyc::rational(gf.p(), mpq_class(qw));
    expected.add_term(MatKey{code, o.pattern_key}, lead);
    if (!(y == expected)) return false;
  }
  return true;
}

}  // namespace uspecht
