#pragma once

#include <cstdint>
#include <string>
#include <vector>

namespace uspecht {

/// Arithmetic for GF(q), q = p^k <= 16, by full lookup tables.
///
/// Elements are indices 0..q-1. Index x encodes the polynomial
/// sum_i d_i t^i where (d_0, d_1, ...) are the base-p digits of x, taken in
/// GF(p)[t] modulo a fixed irreducible polynomial (Conway polynomial for the
/// supported extension fields). All operations are exact table lookups; a Gf
/// value is immutable after construction and safe to share across threads.
class Gf {
 public:
  explicit Gf(int q);

  int q() const { return q_; }
  int p() const { return p_; }
  int k() const { return k_; }

  uint8_t add(uint8_t a, uint8_t b) const { return add_[a * q_ + b]; }
  uint8_t sub(uint8_t a, uint8_t b) const { return add_[a * q_ + neg_[b]]; }
  uint8_t neg(uint8_t a) const { return neg_[a]; }
  uint8_t mul(uint8_t a, uint8_t b) const { return mul_[a * q_ + b]; }
  uint8_t inv(uint8_t a) const;  // a != 0
  uint8_t div(uint8_t a, uint8_t b) const { return mul(a, inv(b)); }
  uint8_t pow(uint8_t a, long e) const;

  /// Absolute trace GF(q) -> GF(p), value in 0..p-1.
  int trace(uint8_t a) const { return tr_[a]; }

  /// Coefficients c_0..c_k (constant term first, c_k = 1) of the reduction
  /// polynomial; for k = 1 this is (p - represented as) {0, 1} placeholder.
  const std::vector<int>& modulus() const { return mod_; }

  static bool is_prime_power(int q);

  std::string describe() const;

 private:
  int q_, p_, k_;
  std::vector<uint8_t> add_, mul_, neg_, inv_;
  std::vector<int> tr_;
  std::vector<int> mod_;
};

/// Gaussian binomial [n choose m]_q (exact; 0 when n < m).
long long gaussian_binomial(int n, int m, long long q);

}  // namespace uspecht
