#pragma once

#include <optional>
#include <random>

#include "uspecht/character.hpp"
#include "uspecht/module_vector.hpp"

namespace uspecht {

/// The three closed root sets attached to a batch. Their union Upsilon
/// generates the subgroup of U that acts monomially on the idempotent basis:
///   u1: row in the second row, column outside (= the J_t positions),
///   u2: row and column both outside (truncated column operations),
///   u3: row and column both inside (truncated row operations).
struct RootTriple {
  std::vector<Root> u1, u2, u3;
  std::vector<Root> all() const;
};

RootTriple upsilon(const Tableau& t);

/// Truncated column operation of x_{ij}(alpha), (i,j) in u2: subtract alpha
/// times column j from column i on the free positions.
NormalMatrix truncated_column_op(const NormalMatrix& L, int i, int j, uint8_t alpha,
                                 const Gf& gf);
/// Truncated row operation of x_{ij}(alpha), (i,j) in u3: add alpha times
/// row i to row j on the free positions.
NormalMatrix truncated_row_op(const NormalMatrix& L, int i, int j, uint8_t alpha,
                              const Gf& gf);

/// Closed-form action of x_{ij}(alpha) on an idempotent label:
/// e_L o x = scalar * e_K. Requires (i,j) in Upsilon of the batch of L.
struct MonomialImage {
  NormalMatrix label;
  Cyc scalar;
};
MonomialImage monomial_action(const NormalMatrix& L, Root r, uint8_t alpha, const Gf& gf);

struct FilledPattern {
  Pattern p;
  std::vector<uint8_t> values;  // aligned with p.pos, all nonzero

  std::string to_string() const;
  friend bool operator==(const FilledPattern&, const FilledPattern&) = default;
  friend std::strong_ordering operator<=>(const FilledPattern& a, const FilledPattern& b) {
    if (auto c = a.p <=> b.p; c != 0) return c;
    return a.values <=> b.values;
  }
};

/// Pattern and values of a pattern matrix (positions with nonzero free entry).
FilledPattern filled_pattern_of(const NormalMatrix& L);

/// Positions of the pattern on its outer rim: (b,j) such that every pattern
/// position strictly to the left sits strictly above.
std::vector<Root> outer_rim(const Pattern& p);

struct OrbitModule {
  Tableau t;
  std::vector<uint64_t> members;  // batch keys, ascending
  uint64_t pattern_key = 0;       // the unique pattern matrix in the orbit
  FilledPattern pf;
  int dim_exponent = 0;           // orbit size = q^{dim_exponent}

  bool contains(uint64_t key) const;
};

/// BFS closure of {L0} under the truncated row/column operations.
OrbitModule orbit_of(const NormalMatrix& L0, const Gf& gf);

/// The unique pattern matrix in the orbit of e_K, found by the constructive
/// sweep: leftmost column with a nonzero free entry, lowest such entry,
/// clear its hook, continue rightward.
NormalMatrix canonical_pattern_matrix(const NormalMatrix& K, const Gf& gf);

/// k - s where k counts the positions on hooks cornered in the pattern.
int orbit_dimension_exponent(const Pattern& p);

struct StabilizerGenerators {
  std::vector<Root> upsilon1;                  // scalar (projective) part
  std::vector<Root> stab_col;                  // stabilizing column roots
  std::vector<Root> stab_row;                  // stabilizing row roots
  std::vector<std::pair<Root, Root>> pairs;    // coupled column/row pairs
  /// log_q of the projective stabilizer order
  int log_order() const;
};
StabilizerGenerators stabilizer_generators(const NormalMatrix& L);

/// One record per orbit of the batch, in ascending order of smallest member.
std::vector<OrbitModule> batch_orbit_census(const Tableau& t, const Gf& gf);

/// e_K o x_{ij}(alpha) expanded exactly in the idempotent basis of the batch,
/// for any positive root (i,j) (monomial shortcut inside Upsilon, direct
/// expansion with verified support otherwise).
ModuleVector circle_on_idempotent(const NormalMatrix& K, Root r, uint8_t alpha,
                                  const Gf& gf);

/// True iff every U-generator maps every member idempotent into the span of
/// the orbit.
bool check_U_invariance(const OrbitModule& o, const Gf& gf);

/// Averaging check: the element a = prod over the pattern's hook arms+legs
/// of sum_alpha x(alpha) sends any orbit vector with unit e_L coefficient to
/// q^{|Omega|} e_L.
bool check_cyclic_generation(const OrbitModule& o, const Gf& gf, uint64_t seed,
                             int random_trials = 5);

}  // namespace uspecht
