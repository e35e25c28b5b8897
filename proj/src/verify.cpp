#include "uspecht/verify.hpp"

#include <algorithm>
#include <chrono>
#include <random>
#include <set>

#include "uspecht/rank.hpp"
#include "uspecht/specht.hpp"

namespace uspecht {

namespace {

using Fail = std::optional<std::string>;

std::vector<std::pair<int, int>> shapes_up_to(int n_max) {
  std::vector<std::pair<int, int>> out;
  for (int n = 1; n <= n_max; ++n)
    for (int m = 0; 2 * m <= n; ++m) out.emplace_back(n, m);
  return out;
}

std::string shape_str(int n, int m, int q) {
  return "(n=" + std::to_string(n) + ",m=" + std::to_string(m) + ",q=" + std::to_string(q) + ")";
}

Fail check_theta_homomorphism(const VerifyConfig& cfg) {
  std::vector<int> qs = cfg.qs;
  for (int q : {4, 5, 8, 9})
    if (q <= 16) qs.push_back(q);
  for (int q : qs) {
    Gf gf(q);
    bool nontrivial = false;
    for (int a = 0; a < q; ++a) {
      if (gf.trace(a) != 0) nontrivial = true;
      for (int b = 0; b < q; ++b) {
        Cyc lhs = Cyc::zeta_pow(gf.p(), gf.trace(gf.add(a, b)));
        Cyc rhs = Cyc::zeta_pow(gf.p(), gf.trace(a)) * Cyc::zeta_pow(gf.p(), gf.trace(b));
        if (!(lhs == rhs))
          return "theta not multiplicative at q=" + std::to_string(q) + " a=" +
                 std::to_string(a) + " b=" + std::to_string(b);
      }
    }
    if (!nontrivial) return "theta trivial at q=" + std::to_string(q);
  }
  return {};
}

Fail check_theta_orthogonality(const VerifyConfig& cfg) {
  for (int q : cfg.qs) {
    Gf gf(q);
    for (int c = 1; c < q; ++c) {
      Cyc sum = Cyc::zero(gf.p());
      for (int a = 0; a < q; ++a)
        sum += Cyc::zeta_pow(gf.p(), gf.trace(gf.mul(c, a)));
      if (!sum.is_zero()) return "sum_a theta(c a) != 0 at q=" + std::to_string(q);
    }
  }
  return {};
}

Fail check_gaussian_identities(const VerifyConfig& cfg) {
  for (int q : cfg.qs) {
    for (int n = 0; n <= 8; ++n) {
      if (gaussian_binomial(n, 0, q) != 1) return "[n 0] != 1";
      for (int m = 0; m <= n; ++m)
        if (gaussian_binomial(n, m, q) != gaussian_binomial(n, n - m, q))
          return "[n m] != [n n-m] at n=" + std::to_string(n) + " m=" + std::to_string(m);
    }
    if (gaussian_binomial(2, 1, q) != q + 1) return "[2 1] != q+1";
  }
  return {};
}

Fail check_cyc_arith(const VerifyConfig& cfg) {
  std::mt19937_64 rng(cfg.seed ^ 0xc1c1c1c1ULL);
  for (int p : {2, 3, 5, 7}) {
    if (!(Cyc::zeta_pow(p, p) == Cyc::one(p))) return "zeta^p != 1";
    Cyc s = Cyc::zero(p);
    for (int i = 0; i < p; ++i) s += Cyc::zeta_pow(p, i);
    if (!s.is_zero()) return "sum of p-th roots of unity != 0";
    for (int t = 0; t < 25; ++t) {
      auto rand_cyc = [&]() {
        Cyc c = Cyc::zero(p);
        for (int i = 0; i < p - 1; ++i) {
          Cyc term = Cyc::zeta_pow(p, i);
          term.scale(mpq_class(static_cast<long>(rng() % 11) - 5,
                               1 + static_cast<long>(rng() % 4)));
          c += term;
        }
        return c;
      };
      Cyc a = rand_cyc(), b = rand_cyc();
      if (b.is_zero()) continue;
      if (!((a * b) / b == a)) return "(a*b)/b != a at p=" + std::to_string(p);
    }
  }
  // p=3 identity: (1+z)(1+z^2) = 1
  Cyc z = Cyc::zeta_pow(3, 1);
  Cyc lhs = (Cyc::one(3) + z) * (Cyc::one(3) + z * z);
  if (!lhs.is_one()) return "(1+z)(1+z^2) != 1 at p=3";
  return {};
}

Fail check_dominance_refines_lex(const VerifyConfig& cfg) {
  for (auto [n, m] : shapes_up_to(cfg.n_max)) {
    auto ts = enumerate_row_standard(n, m);
    for (size_t i = 0; i < ts.size(); ++i)
      for (size_t j = 0; j < ts.size(); ++j)
        if (dominance_leq(ts[i], ts[j]) && i > j)
          return "dominance contradicts lex order at n=" + std::to_string(n);
  }
  return {};
}

Fail check_removal_standardness(const VerifyConfig& cfg) {
  for (auto [n, m] : shapes_up_to(cfg.n_max)) {
    for (auto& t : enumerate_row_standard(n, m)) {
      for (auto& p : patterns_fitting(t)) {
        ShiftedTableau st = remove_and_shift(t, p);
        if (st.standard() != st.renumbered().standard())
          return "shifted standardness disagrees with renumbering";
        if (!t.standard() && st.standard() && p.size() > 0)
          return "non-standard tableau became standard after removal: t=" + t.to_string() +
                 " p=" + p.to_string();
      }
    }
  }
  return {};
}

Fail check_counting_identity(const VerifyConfig&) {
  for (int n = 1; n <= 10; ++n) {
    for (int m = 1; 2 * m <= n; ++m) {
      long non_std = 0;
      for (auto& t : enumerate_row_standard(n, m))
        if (!t.standard()) ++non_std;
      long rstd_mu = static_cast<long>(subsets_lex(n, m - 1).size());
      if (non_std != rstd_mu)
        return "|RStd - Std| != |RStd(mu)| at n=" + std::to_string(n) + " m=" + std::to_string(m);
    }
  }
  return {};
}

Fail check_order_preservation_removal(const VerifyConfig& cfg) {
  int n_cap = std::min(cfg.n_max, 6);
  for (int n = 2; n <= n_cap; ++n) {
    for (int m = 1; 2 * m <= n; ++m) {
      auto ts = enumerate_row_standard(n, m);
      for (auto& t1 : ts) {
        for (auto& p : patterns_fitting(t1)) {
          for (auto& t2 : ts) {
            if (!(t2 < t1) || !p.fits(t2)) continue;
            auto s1 = remove_and_shift(t1, p), s2 = remove_and_shift(t2, p);
            if (!(s2.row2 < s1.row2))
              return "removal broke the strict order: " + t2.to_string() + " < " +
                     t1.to_string() + " p=" + p.to_string();
          }
        }
      }
    }
  }
  return {};
}

Fail check_batch_sizes(const VerifyConfig& cfg) {
  for (int q : cfg.qs) {
    Gf gf(q);
    for (auto [n, m] : shapes_up_to(cfg.n_max)) {
      uint64_t total = 0;
      for (auto& t : enumerate_row_standard(n, m)) total += Batch(t, gf).size();
      if (total != static_cast<uint64_t>(gaussian_binomial(n, m, q)))
        return "sum of batch sizes != gaussian binomial at " + shape_str(n, m, q);
    }
  }
  return {};
}

Fail check_batch_transitivity(const VerifyConfig& cfg) {
  for (int q : cfg.qs) {
    Gf gf(q);
    for (auto [n, m] : shapes_up_to(cfg.n_max)) {
      for (auto& t : enumerate_row_standard(n, m)) {
        Batch b(t, gf);
        if (b.size() > cfg.orbit_batch_cap) continue;
        std::vector<bool> seen(b.size(), false);
        std::vector<uint64_t> frontier{b.key_of(NormalMatrix(n, t.row2))};
        seen[frontier[0]] = true;
        uint64_t reached = 1;
        while (!frontier.empty()) {
          uint64_t key = frontier.back();
          frontier.pop_back();
          NormalMatrix L = b.matrix(key);
          for (int i = 2; i <= n; ++i)
            for (int j = 1; j < i; ++j)
              for (int a = 1; a < q; ++a) {
                NormalMatrix K = circle_action(
                    L, GroupElement::root_element(n, i, j, static_cast<uint8_t>(a)), gf);
                if (K.row2 != t.row2) return "circle action left the batch at " + shape_str(n, m, q);
                uint64_t kk = b.key_of(K);
                if (!seen[kk]) {
                  seen[kk] = true;
                  ++reached;
                  frontier.push_back(kk);
                }
              }
        }
        if (reached != b.size())
          return "batch not transitive under U at " + shape_str(n, m, q) + " t=" + t.to_string();
      }
    }
  }
  return {};
}

Fail check_normal_form(const VerifyConfig& cfg) {
  std::mt19937_64 rng(cfg.seed ^ 0x5eedULL);
  for (int q : cfg.qs) {
    Gf gf(q);
    for (auto [n, m] : shapes_up_to(std::min(cfg.n_max, 5))) {
      if (m == 0) continue;
      auto ts = enumerate_row_standard(n, m);
      for (int trial = 0; trial < 20; ++trial) {
        auto& t = ts[rng() % ts.size()];
        Batch b(t, gf);
        NormalMatrix L = b.matrix(rng() % b.size());
        NormalMatrix again = normal_form(n, m, L.a, gf);
        if (!(again == L)) return "normal_form not idempotent at " + shape_str(n, m, q);
        // random invertible row mix g: gL has the same row space
        std::vector<uint8_t> g;
        while (true) {
          g.assign(static_cast<size_t>(m) * m, 0);
          for (auto& x : g) x = static_cast<uint8_t>(rng() % q);
          try {
            normal_form(m, m, g, gf);
            break;
          } catch (const std::invalid_argument&) {
          }
        }
        std::vector<uint8_t> prod(static_cast<size_t>(m) * n, 0);
        for (int i = 0; i < m; ++i)
          for (int k = 0; k < m; ++k) {
            if (!g[static_cast<size_t>(i) * m + k]) continue;
            for (int j = 0; j < n; ++j)
              prod[static_cast<size_t>(i) * n + j] =
                  gf.add(prod[static_cast<size_t>(i) * n + j],
                         gf.mul(g[static_cast<size_t>(i) * m + k],
                                L.a[static_cast<size_t>(k) * n + j]));
          }
        if (!(normal_form(n, m, prod, gf) == L))
          return "normal_form(gL) != L at " + shape_str(n, m, q);
      }
    }
  }
  return {};
}

Fail check_circle_action_laws(const VerifyConfig& cfg) {
  std::mt19937_64 rng(cfg.seed ^ 0xc14cULL);
  for (int q : cfg.qs) {
    Gf gf(q);
    for (auto [n, m] : shapes_up_to(std::min(cfg.n_max, 5))) {
      auto ts = enumerate_row_standard(n, m);
      auto random_u = [&]() {
        GroupElement u = GroupElement::identity(n);
        for (int i = 2; i <= n; ++i)
          for (int j = 1; j < i; ++j)
            u = u.mul(GroupElement::root_element(n, i, j, static_cast<uint8_t>(rng() % q)), gf);
        return u;
      };
      for (int trial = 0; trial < 10; ++trial) {
        auto& t = ts[rng() % ts.size()];
        Batch b(t, gf);
        NormalMatrix L = b.matrix(rng() % b.size());
        if (!(circle_action(L, GroupElement::identity(n), gf) == L))
          return "L o E != L";
        GroupElement g = random_u(), h = random_u();
        NormalMatrix lhs = circle_action(circle_action(L, g, gf), h, gf);
        NormalMatrix rhs = circle_action(L, g.mul(h, gf), gf);
        if (!(lhs == rhs)) return "(L o g) o h != L o (g h) at " + shape_str(n, m, q);
        if (lhs.row2 != t.row2) return "circle action changed the batch for u in U";
      }
      // stabilizer of the zero-free-entry matrix: all x_{ij}(a) with
      // row(i) <= row(j) fix it
      for (auto& t : ts) {
        NormalMatrix Z(n, t.row2);
        for (int i = 2; i <= n; ++i)
          for (int j = 1; j < i; ++j) {
            if (t.row_of(i) > t.row_of(j)) continue;
            for (int a = 1; a < q; ++a)
              if (!(circle_action(Z, GroupElement::root_element(n, i, j, static_cast<uint8_t>(a)),
                                  gf) == Z))
                return "stabilizer condition failed at " + shape_str(n, m, q);
          }
      }
    }
  }
  return {};
}

Fail check_character_orthogonality(const VerifyConfig& cfg) {
  for (int q : cfg.qs) {
    Gf gf(q);
    for (auto [n, m] : shapes_up_to(cfg.n_max)) {
      for (auto& t : enumerate_row_standard(n, m)) {
        Batch b(t, gf);
        if (b.jt_size() > 4) continue;
        mpz_class qj;
        mpz_ui_pow_ui(qj.get_mpz_t(), q, b.jt().size());
        for (uint64_t lk = 0; lk < b.size(); ++lk) {
          NormalMatrix L = b.matrix(lk);
          for (uint64_t kk = 0; kk < b.size(); ++kk) {
            NormalMatrix K = b.matrix(kk);
            std::vector<long> counts(gf.p(), 0);
            for (uint64_t mm = 0; mm < b.size(); ++mm) {
              NormalMatrix M = b.matrix(mm);
              int e = chi_exponent(L, diamond_neg(M, gf), gf) + chi_exponent(K, M, gf);
              counts[e % gf.p()] += 1;
            }
            Cyc sum = Cyc::from_exponent_counts(gf.p(), counts, 1);
            Cyc expect = lk == kk ? Cyc::rational(gf.p(), mpq_class(qj)) : Cyc::zero(gf.p());
            if (!(sum == expect))
              return "character orthogonality failed at " + shape_str(n, m, q);
          }
        }
      }
    }
  }
  return {};
}

Fail check_base_change(const VerifyConfig& cfg) {
  std::mt19937_64 rng(cfg.seed ^ 0xbacbacULL);
  for (int q : cfg.qs) {
    Gf gf(q);
    for (auto [n, m] : shapes_up_to(std::min(cfg.n_max, 5))) {
      auto ts = enumerate_row_standard(n, m);
      for (int trial = 0; trial < 5; ++trial) {
        ModuleVector v(n, m, BasisTag::Matrix);
        for (int terms = 0; terms < 6; ++terms) {
          auto& t = ts[rng() % ts.size()];
          Batch b(t, gf);
          Cyc c = Cyc::integer(gf.p(), static_cast<long>(rng() % 9) - 4);
          c *= Cyc::zeta_pow(gf.p(), static_cast<long>(rng() % gf.p()));
          v.add_term(MatKey{t.lex_code(), rng() % b.size()}, c);
        }
        if (!(from_idempotent_basis(to_idempotent_basis(v, gf), gf) == v))
          return "base change round trip failed at " + shape_str(n, m, q);
      }
      for (auto& t : ts) {
        Batch b(t, gf);
        if (b.size() > 256) continue;
        // e_L -> unit vector at L; [Z] -> all-ones over e_K
        NormalMatrix L = b.matrix(rng() % b.size());
        ModuleVector unit = to_idempotent_basis(idempotent_vector(L, gf), gf);
        ModuleVector expect(n, m, BasisTag::Idempotent);
        expect.add_term(key_of(L, gf), Cyc::one(gf.p()));
        if (!(unit == expect)) return "e_L does not map to a unit vector";
        ModuleVector z(n, m, BasisTag::Matrix);
        z.add_term(MatKey{t.lex_code(), 0}, Cyc::one(gf.p()));
        ModuleVector zi = to_idempotent_basis(z, gf);
        for (uint64_t kk = 0; kk < b.size(); ++kk)
          if (!(zi.coeff(MatKey{t.lex_code(), kk}, gf.p()) == Cyc::one(gf.p())))
            return "[Z] expansion is not all-ones";
      }
    }
  }
  return {};
}

Fail check_idempotent_denominators(const VerifyConfig& cfg) {
  for (int q : cfg.qs) {
    Gf gf(q);
    for (auto [n, m] : shapes_up_to(std::min(cfg.n_max, 5))) {
      for (auto& t : enumerate_row_standard(n, m)) {
        Batch b(t, gf);
        if (b.size() > 256) continue;
        mpz_class qj;
        mpz_ui_pow_ui(qj.get_mpz_t(), q, b.jt().size());
        ModuleVector e = idempotent_vector(b.matrix(b.size() - 1), gf);
        for (auto& [k, c] : e.terms)
          if (qj % c.den() != 0) return "idempotent denominator does not divide q^{|J_t|}";
      }
    }
  }
  return {};
}

Fail check_monomial_oracle(const VerifyConfig& cfg) {
  bool fault = cfg.inject_fault == "theta-sign";
  std::mt19937_64 rng(cfg.seed ^ 0x04ac1eULL);
  for (int q : cfg.qs) {
    Gf gf(q);
    int p = gf.p();
    for (auto [n, m] : shapes_up_to(cfg.n_max)) {
      for (auto& t : enumerate_row_standard(n, m)) {
        Batch b(t, gf);
        bool exhaustive = b.jt_size() <= 4;
        if (!exhaustive && b.size() > cfg.orbit_batch_cap) continue;
        RootTriple ups = upsilon(t);
        for (auto& r : ups.all()) {
          // exhaustive on small batches, sampled labels beyond
          if (!exhaustive && rng() % 4 != 0) continue;
          for (int a = 1; a < q; ++a) {
            GroupElement ginv =
                GroupElement::root_element(n, r.first, r.second, gf.neg(static_cast<uint8_t>(a)));
            // permutation M -> M o g^{-1} shared across labels
            std::vector<uint64_t> perm(b.size());
            for (uint64_t mm = 0; mm < b.size(); ++mm)
              perm[mm] = b.key_of(circle_action(b.matrix(mm), ginv, gf));
            std::vector<uint64_t> labels;
            if (exhaustive) {
              labels.resize(b.size());
              for (uint64_t lk = 0; lk < b.size(); ++lk) labels[lk] = lk;
            } else {
              for (int s = 0; s < 8; ++s) labels.push_back(rng() % b.size());
            }
            for (uint64_t lk : labels) {
              NormalMatrix L = b.matrix(lk);
              MonomialImage im = monomial_action(L, r, static_cast<uint8_t>(a), gf);
              int ce;  // scalar exponent: im.scalar = zeta^ce
              {
                Cyc s = im.scalar;
                ce = -1;
                for (int e = 0; e < p; ++e)
                  if (s == Cyc::zeta_pow(p, e)) ce = e;
                if (ce < 0) return "monomial scalar is not a root of unity";
              }
              if (fault) {
                // injected fault: the closed-form scalar flips theta's sign
                ce = (p - ce) % p;
              }
              NormalMatrix K = im.label;
              for (uint64_t mm = 0; mm < b.size(); ++mm) {
                // e_L o g and c e_K agree iff chi_L(-M o g^{-1}) = c chi_K(-M)
                int lhs = (p - chi_exponent(L, b.matrix(perm[mm]), gf)) % p;
                int rhs = (ce + p - chi_exponent(K, b.matrix(mm), gf)) % p;
                if (lhs != rhs)
                  return "monomial action disagrees with the direct expansion at " +
                         shape_str(n, m, q) + " t=" + t.to_string() + " root=(" +
                         std::to_string(r.first) + "," + std::to_string(r.second) +
                         ") alpha=" + std::to_string(a);
              }
            }
          }
        }
      }
    }
  }
  return {};
}

Fail check_orbit_structure(const VerifyConfig& cfg) {
  for (int q : cfg.qs) {
    Gf gf(q);
    for (auto [n, m] : shapes_up_to(cfg.n_max)) {
      for (auto& t : enumerate_row_standard(n, m)) {
        Batch b(t, gf);
        if (b.size() > cfg.orbit_batch_cap) continue;
        uint64_t covered = 0;
        std::map<Pattern, int> per_pattern;
        std::map<Pattern, uint64_t> size_by_pattern;
        for (auto& o : batch_orbit_census(t, gf)) {
          uint64_t expect = 1;
          for (int i = 0; i < o.dim_exponent; ++i) expect *= q;
          if (o.members.size() != expect)
            return "orbit size != q^{k-s} at " + shape_str(n, m, q) + " t=" + t.to_string() +
                   " pattern=" + o.pf.p.to_string();
          covered += o.members.size();
          per_pattern[o.pf.p] += 1;
          auto it = size_by_pattern.find(o.pf.p);
          if (it == size_by_pattern.end())
            size_by_pattern.emplace(o.pf.p, o.members.size());
          else if (it->second != o.members.size())
            return "orbits with equal pattern have different sizes";
          // canonical sweep is constant on the orbit and lands on the member
          NormalMatrix pat = b.matrix(o.pattern_key);
          for (uint64_t key : o.members) {
            NormalMatrix c = canonical_pattern_matrix(b.matrix(key), gf);
            if (!(c == pat)) return "canonical pattern matrix not constant on the orbit";
          }
          // outer rim entries agree across the orbit
          for (auto& [rb, rj] : outer_rim(o.pf.p))
            for (uint64_t key : o.members)
              if (b.matrix(key).at(rb, rj) != pat.at(rb, rj))
                return "outer rim entries differ inside an orbit";
        }
        if (covered != b.size()) return "orbits do not partition the batch";
        long qm1s = 1;
        for (auto& [p, count] : per_pattern) {
          qm1s = 1;
          for (int i = 0; i < p.size(); ++i) qm1s *= (q - 1);
          if (count != qm1s)
            return "pattern multiplicity != (q-1)^s at " + shape_str(n, m, q);
        }
      }
    }
  }
  return {};
}

Fail check_stabilizer_index(const VerifyConfig& cfg) {
  for (int q : cfg.qs) {
    Gf gf(q);
    for (auto [n, m] : shapes_up_to(std::min(cfg.n_max, 5))) {
      for (auto& t : enumerate_row_standard(n, m)) {
        Batch b(t, gf);
        if (b.size() > cfg.orbit_batch_cap) continue;
        RootTriple ups = upsilon(t);
        for (auto& o : batch_orbit_census(t, gf)) {
          StabilizerGenerators st = stabilizer_generators(b.matrix(o.pattern_key));
          long log_index = static_cast<long>(ups.all().size()) - st.log_order();
          uint64_t expect = 1;
          for (long i = 0; i < log_index; ++i) expect *= q;
          if (expect != o.members.size())
            return "stabilizer index != orbit size at " + shape_str(n, m, q) +
                   " pattern=" + o.pf.p.to_string();
        }
      }
    }
  }
  return {};
}

Fail check_exponent_batch_independence(const VerifyConfig& cfg) {
  // the same pattern must give the same orbit size in every batch of every
  // two-row shape on n letters
  for (int q : cfg.qs) {
    Gf gf(q);
    for (int n = 1; n <= cfg.n_max; ++n) {
      std::map<Pattern, uint64_t> sizes;
      for (int m = 0; 2 * m <= n; ++m) {
        for (auto& t : enumerate_row_standard(n, m)) {
          Batch b(t, gf);
          if (b.size() > cfg.orbit_batch_cap) continue;
          for (auto& o : batch_orbit_census(t, gf)) {
            auto it = sizes.find(o.pf.p);
            if (it == sizes.end())
              sizes.emplace(o.pf.p, o.members.size());
            else if (it->second != o.members.size())
              return "pattern dimension depends on the shape at " + shape_str(n, m, q);
          }
        }
      }
    }
  }
  return {};
}

Fail check_u_invariance(const VerifyConfig& cfg) {
  for (int q : cfg.qs) {
    Gf gf(q);
    for (auto [n, m] : shapes_up_to(std::min(cfg.n_max, 4))) {
      for (auto& t : enumerate_row_standard(n, m)) {
        for (auto& o : batch_orbit_census(t, gf))
          if (!check_U_invariance(o, gf))
            return "orbit module not U-invariant at " + shape_str(n, m, q) +
                   " pattern=" + o.pf.to_string();
      }
    }
  }
  return {};
}

Fail check_cyclic(const VerifyConfig& cfg) {
  for (int q : cfg.qs) {
    Gf gf(q);
    for (auto [n, m] : shapes_up_to(std::min(cfg.n_max, 4))) {
      for (auto& t : enumerate_row_standard(n, m)) {
        for (auto& o : batch_orbit_census(t, gf))
          if (!check_cyclic_generation(o, gf, cfg.seed))
            return "cyclic generation failed at " + shape_str(n, m, q) +
                   " pattern=" + o.pf.to_string();
      }
    }
  }
  return {};
}

Fail check_kernel_dimensions(const VerifyConfig& cfg) {
  for (int q : cfg.qs) {
    Gf gf(q);
    for (auto [n, m] : shapes_up_to(std::min(cfg.n_max, 5))) {
      if (m == 0) continue;
      long expect = gaussian_binomial(n, m, q) - gaussian_binomial(n, m - 1, q);
      int rank = phi_m_rank(n, m, gf);
      long dim = gaussian_binomial(n, m, q) - rank;
      if (dim != expect)
        return "kernel dimension mismatch at " + shape_str(n, m, q) + ": got " +
               std::to_string(dim) + " expected " + std::to_string(expect);
      if (rank != gaussian_binomial(n, m - 1, q))
        return "removal map is not surjective at " + shape_str(n, m, q);
    }
  }
  return {};
}

Fail check_composition_law(const VerifyConfig& cfg) {
  for (int q : cfg.qs) {
    Gf gf(q);
    for (auto [n, m] : {std::pair{4, 2}, std::pair{5, 2}}) {
      if (n > cfg.n_max) continue;
      for (int i = 0; i + 2 <= m; ++i) {
        long bracket = 0;
        for (int e = 0; e < m - i; ++e) bracket = bracket * q + 1;
        for (auto& t : enumerate_row_standard(n, m)) {
          Batch b(t, gf);
          for (uint64_t key = 0; key < b.size(); ++key) {
            ModuleVector x(n, m, BasisTag::Matrix);
            x.add_term(MatKey{t.lex_code(), key}, Cyc::one(gf.p()));
            ModuleVector lhs = apply_phi_1i(apply_phi_m(x, gf), i, gf);
            ModuleVector rhs = apply_phi_1i(x, i, gf);
            rhs.scale(Cyc::integer(gf.p(), bracket));
            if (!(lhs == rhs))
              return "phi_{1,i} o Phi_m != [m-i] phi_{1,i} at " + shape_str(n, m, q);
          }
        }
      }
    }
  }
  return {};
}

Fail check_lyle_property(const VerifyConfig& cfg) {
  std::mt19937_64 rng(cfg.seed ^ 0x171eULL);
  for (int q : cfg.qs) {
    Gf gf(q);
    for (auto [n, m] : {std::pair{4, 2}, std::pair{4, 1}, std::pair{5, 2}}) {
      if (n > cfg.n_max || (n == 5 && q > 2)) continue;
      auto kb = kernel_basis(n, m, gf);
      for (auto& v : kb.vectors) {
        auto [last, top] = last_and_top(v);
        if (!last.standard())
          return "kernel vector with non-standard last batch at " + shape_str(n, m, q);
      }
      for (int trial = 0; trial < 10 && !kb.vectors.empty(); ++trial) {
        ModuleVector v(n, m, BasisTag::Matrix);
        for (int pick = 0; pick < 4; ++pick) {
          auto& w = kb.vectors[rng() % kb.vectors.size()];
          ModuleVector scaled = w;
          scaled.scale(Cyc::integer(gf.p(), static_cast<long>(rng() % 9) - 4));
          v += scaled;
        }
        if (v.is_zero()) continue;
        auto [last, top] = last_and_top(v);
        if (!last.standard())
          return "random kernel combination with non-standard last batch at " + shape_str(n, m, q);
      }
    }
  }
  return {};
}

Fail check_pattern_preservation(const VerifyConfig& cfg) {
  for (int q : cfg.qs) {
    Gf gf(q);
    for (auto [n, m] : shapes_up_to(cfg.n_max)) {
      if (m == 0) continue;
      for (auto& t : enumerate_row_standard(n, m)) {
        Batch b(t, gf);
        if (b.size() > cfg.orbit_batch_cap) continue;
        // the image-side batches drive the base-change cost; gate on them too
        bool image_too_big = false;
        for (int d = 1; d <= m; ++d) {
          std::vector<int> reduced;
          for (int i = 0; i < m; ++i)
            if (i != d - 1) reduced.push_back(t.row2[i]);
          uint64_t sz = 1;
          for (size_t i = 0; i < jt_positions(n, reduced).size(); ++i) sz *= q;
          if (sz > cfg.orbit_batch_cap) image_too_big = true;
        }
        if (image_too_big) continue;
        for (auto& o : batch_orbit_census(t, gf)) {
          for (uint64_t key : o.members) {
            ModuleVector img = phi_m_of_idempotent_idem_basis(b.matrix(key), gf);
            for (auto& [k, c] : img.terms) {
              NormalMatrix K = matrix_of_key(n, k, gf);
              FilledPattern pfk = filled_pattern_of(canonical_pattern_matrix(K, gf));
              if (!(pfk == o.pf))
                return "removal map broke the filled pattern at " + shape_str(n, m, q) +
                       " t=" + t.to_string() + " pattern=" + o.pf.to_string();
            }
            // the d-components at pattern rows vanish
            auto pI = o.pf.p.rows();
            for (int d = 1; d <= m; ++d) {
              if (std::find(pI.begin(), pI.end(), t.row2[d - 1]) == pI.end()) continue;
              // sum over the batch of chi_L(-M) Phi_m^d([M]) must cancel
              ModuleVector part(n, m - 1, BasisTag::Matrix);
              NormalMatrix L = b.matrix(key);
              for (uint64_t mm = 0; mm < b.size(); ++mm) {
                NormalMatrix M = b.matrix(mm);
                Cyc c = Cyc::zeta_pow(gf.p(), chi_exponent(L, diamond_neg(M, gf), gf));
                for (auto& ik : phi_m_d_images(M, d, gf)) part.add_term(ik, c);
              }
              if (!part.is_zero())
                return "pattern-row component did not vanish at " + shape_str(n, m, q);
            }
          }
        }
      }
    }
  }
  return {};
}

Fail check_component_surjectivity(const VerifyConfig& cfg) {
  for (int q : cfg.qs) {
    Gf gf(q);
    for (auto [n, m] : shapes_up_to(cfg.n_max)) {
      if (m == 0) continue;
      std::set<FilledPattern> seen;
      for (auto& t : enumerate_row_standard(n, m)) {
        Batch b(t, gf);
        if (b.size() > cfg.orbit_batch_cap) continue;
        for (auto& o : batch_orbit_census(t, gf)) {
          if (o.pf.p.size() >= m) continue;  // full patterns have no target
          if (!seen.insert(o.pf).second) continue;
          ComponentSolver solver(n, m, o.pf, gf);
          if (solver.rank() != static_cast<int>(solver.candidates().size()))
            return "candidate images are dependent at " + shape_str(n, m, q) +
                   " pattern=" + o.pf.to_string();
          if (solver.rank() != solver.component_dim_mu())
            return "candidate images do not span the target component at " +
                   shape_str(n, m, q) + " pattern=" + o.pf.to_string();
        }
      }
    }
  }
  return {};
}

Fail check_removal_compatibility(const VerifyConfig& cfg) {
  // dependencies found by the component solver descend along the removal map
  for (int q : cfg.qs) {
    Gf gf(q);
    for (auto [n, m] : shapes_up_to(std::min(cfg.n_max, 5))) {
      if (m < 2) continue;
      int spots = 0;
      for (auto& t : enumerate_row_standard(n, m)) {
        if (spots >= 2) break;
        Batch b(t, gf);
        for (auto& o : batch_orbit_census(t, gf)) {
          int s = o.pf.p.size();
          if (s < 1 || s >= m) continue;
          if (!remove_and_shift(t, o.pf.p).standard()) continue;
          NormalMatrix L = b.matrix(o.pattern_key);
          SpechtVector sv = construct_standard_vector(L, gf);
          // gamma: +1 on e_L, -a_R on the corrections; delta_r from the
          // explicit power-of-q rescaling
          auto pI = o.pf.p.rows();
          auto pJ = o.pf.p.cols();
          ModuleVector descended(n - 2 * s, m - s - 1, BasisTag::Matrix);
          for (auto& [k, c] : sv.v.terms) {
            NormalMatrix R = matrix_of_key(n, k, gf);
            long cr = 0;
            bool vanish = true;
            for (auto& [rb, rj] : jt_positions(n, R.row2)) {
              bool row_out = std::find(pI.begin(), pI.end(), rb) == pI.end();
              bool col_in = std::binary_search(pJ.begin(), pJ.end(), rj);
              if (row_out && col_in) {
                if (R.at(rb, rj) != 0)
                  vanish = false;
                else
                  ++cr;
              }
            }
            if (!vanish) continue;
            auto tilde = remove_pattern(R, o.pf.p);
            if (!tilde) return "removal of a fitting label failed";
            long jr = static_cast<long>(jt_positions(n, R.row2).size());
            long jtr = static_cast<long>(jt_positions(tilde->n, tilde->row2).size());
            mpz_class scale;
            long e = jtr - jr + cr;
            Cyc delta = c;
            if (e >= 0) {
              mpz_ui_pow_ui(scale.get_mpz_t(), q, static_cast<unsigned long>(e));
              delta.scale(mpq_class(scale));
            } else {
              mpz_ui_pow_ui(scale.get_mpz_t(), q, static_cast<unsigned long>(-e));
              delta.scale(mpq_class(1) / mpq_class(scale));
            }
            ModuleVector img = phi_m_of_idempotent(*tilde, gf);
            img.scale(delta);
            descended += img;
          }
          if (!descended.is_zero())
            return "descended dependency is nonzero at " + shape_str(n, m, q) +
                   " pattern=" + o.pf.to_string();
          ++spots;
          break;
        }
      }
    }
  }
  return {};
}

Fail check_rank_polynomials(const VerifyConfig& cfg) {
  for (int q : cfg.qs) {
    Gf gf(q);
    for (auto [n, m] : shapes_up_to(cfg.n_max)) {
      for (auto& t : enumerate_row_standard(n, m)) {
        Batch b(t, gf);
        if (b.size() > cfg.orbit_batch_cap) continue;
        if (!eligibility_equivalence_check(t, gf))
          return "good fillings != eligible members at " + shape_str(n, m, q) +
                 " t=" + t.to_string();
        if (!t.standard() && rank_polynomial_count(t, gf) != 0)
          return "non-standard tableau has good fillings at " + shape_str(n, m, q);
        // partition bound
        uint64_t elig = 0;
        bool all = true;
        for (auto& o : batch_orbit_census(t, gf)) {
          if (remove_and_shift(t, o.pf.p).standard())
            elig += o.members.size();
          else
            all = false;
        }
        if (elig > b.size() || (all && elig != b.size()))
          return "eligible orbit sizes break the partition bound";
      }
    }
  }
  return {};
}

Fail check_good_filling_invariance(const VerifyConfig& cfg) {
  std::mt19937_64 rng(cfg.seed ^ 0x900dULL);
  for (int q : cfg.qs) {
    Gf gf(q);
    for (auto [n, m] : shapes_up_to(std::min(cfg.n_max, 5))) {
      if (m == 0) continue;
      auto ts = enumerate_row_standard(n, m);
      for (int trial = 0; trial < 40; ++trial) {
        auto& t = ts[rng() % ts.size()];
        Batch b(t, gf);
        NormalMatrix L = b.matrix(rng() % b.size());
        RootTriple ups = upsilon(t);
        auto gens = ups.u2;
        gens.insert(gens.end(), ups.u3.begin(), ups.u3.end());
        if (gens.empty()) continue;
        auto& r = gens[rng() % gens.size()];
        uint8_t alpha = static_cast<uint8_t>(1 + rng() % (q - 1));
        NormalMatrix K = monomial_action(L, r, alpha, gf).label;
        if (is_good_filling(L, gf) != is_good_filling(K, gf))
          return "truncated operation changed goodness at " + shape_str(n, m, q);
      }
    }
  }
  return {};
}

Fail check_path_roundtrip(const VerifyConfig& cfg) {
  for (auto [n, m] : shapes_up_to(cfg.n_max)) {
    for (auto& t : enumerate_row_standard(n, m)) {
      LatticePath pi = path_of(t);
      if (!(tableau_of_path(n, pi) == t)) return "path does not invert to its tableau";
      if (pi.boxes_below() != static_cast<long>(jt_positions(n, t.row2).size()))
        return "boxes below the path != |J_t|";
      bool all_above = true;
      for (auto& [i, j] : pi.points())
        if (i > j) all_above = false;
      if (all_above != t.standard())
        return "corner criterion disagrees with standardness at t=" + t.to_string();
    }
  }
  return {};
}

Fail check_census_polynomials(const VerifyConfig& cfg) {
  for (auto [n, m] : shapes_up_to(cfg.n_max)) {
    if (m > 2) continue;  // three fit points determine degree <= m = 2
    auto results = census_polynomials(n, m, {2, 3, 4}, 5);
    for (auto& r : results)
      if (!r.ok)
        return "census interpolation failed at n=" + std::to_string(n) +
               " m=" + std::to_string(m) + " c=" + std::to_string(r.c);
    // dimension bookkeeping at each fitted q
    for (int q : {2, 3, 4, 5}) {
      Gf gf(q);
      long total = 0;
      for (auto& [c, count] : census_counts(n, m, gf)) {
        long dim = 1;
        for (int i = 0; i < c; ++i) dim *= q;
        total += count * dim;
      }
      long expect = m == 0 ? 1 : gaussian_binomial(n, m, q) - gaussian_binomial(n, m - 1, q);
      if (total != expect)
        return "sum of constituent dimensions != dim S at n=" + std::to_string(n) +
               " m=" + std::to_string(m) + " q=" + std::to_string(q);
    }
  }
  return {};
}

struct CheckSpec {
  const char* name;
  const char* description;
  Fail (*fn)(const VerifyConfig&);
};

const CheckSpec kChecks[] = {
    {"theta_homomorphism", "theta is a nontrivial character of (GF(q),+)", check_theta_homomorphism},
    {"theta_orthogonality", "sum over GF(q) of theta(c a) vanishes for c != 0", check_theta_orthogonality},
    {"gaussian_identities", "Gaussian binomial symmetry and base cases", check_gaussian_identities},
    {"cyc_arithmetic", "cyclotomic scalars: exact ring laws and division round trip", check_cyc_arith},
    {"dominance_refines_lex", "componentwise order implies lexicographic order", check_dominance_refines_lex},
    {"removal_standardness", "pattern removal respects (non-)standardness", check_removal_standardness},
    {"counting_identity", "#(row-standard non-standard) = #row-standard of the smaller shape", check_counting_identity},
    {"order_preservation_removal", "strict tableau order survives pattern removal", check_order_preservation_removal},
    {"batch_sizes", "batch sizes sum to the Gaussian binomial", check_batch_sizes},
    {"batch_transitivity", "the unitriangular group is transitive on each batch", check_batch_transitivity},
    {"normal_form", "normal form is idempotent and constant on row spaces", check_normal_form},
    {"circle_action_laws", "right action laws and the zero-matrix stabilizer", check_circle_action_laws},
    {"character_orthogonality", "batch characters are orthogonal", check_character_orthogonality},
    {"base_change", "matrix <-> idempotent base change round trips exactly", check_base_change},
    {"idempotent_denominators", "idempotent coefficients have denominator dividing q^{|J_t|}", check_idempotent_denominators},
    {"monomial_action_oracle", "closed-form monomial action matches the direct expansion", check_monomial_oracle},
    {"orbit_structure", "orbit sizes, unique pattern member, multiplicities, outer rim", check_orbit_structure},
    {"stabilizer_index", "stabilizer index equals the orbit size", check_stabilizer_index},
    {"exponent_batch_independence", "orbit dimension depends only on the pattern", check_exponent_batch_independence},
    {"u_invariance", "orbit modules are invariant under all of U", check_u_invariance},
    {"cyclic_generation", "averaging element regenerates the pattern idempotent", check_cyclic},
    {"kernel_dimensions", "kernel dimension and surjectivity of the removal map", check_kernel_dimensions},
    {"composition_law", "subspace maps compose with the expected q-integer factor", check_composition_law},
    {"lyle_property", "nonzero kernel vectors end in a standard batch", check_lyle_property},
    {"pattern_preservation", "the removal map preserves filled patterns", check_pattern_preservation},
    {"component_surjectivity", "candidate images span the target component exactly", check_component_surjectivity},
    {"removal_compatibility", "solved dependencies descend along pattern removal", check_removal_compatibility},
    {"rank_polynomials", "good fillings coincide with eligible members", check_rank_polynomials},
    {"good_filling_invariance", "truncated operations preserve goodness", check_good_filling_invariance},
    {"path_roundtrip", "tableau <-> path bijection and box counts", check_path_roundtrip},
    {"census_polynomials", "constituent counts interpolate and predict a held-out q", check_census_polynomials},
};

}  // namespace

std::vector<CheckResult> run_verify_suite(const VerifyConfig& cfg) {
  std::vector<CheckResult> out;
  for (auto& entry : kChecks) {
    CheckResult r;
    r.name = entry.name;
    r.description = entry.description;
    auto start = std::chrono::steady_clock::now();
    try {
      Fail f = entry.fn(cfg);
      r.passed = !f.has_value();
      if (f) r.detail = *f;
    } catch (const std::exception& e) {
      r.passed = false;
      r.detail = std::string("exception: ") + e.what();
    }
    r.seconds = std::chrono::duration<double>(std::chrono::steady_clock::now() - start).count();
    out.push_back(std::move(r));
  }
  return out;
}

}  // namespace uspecht
