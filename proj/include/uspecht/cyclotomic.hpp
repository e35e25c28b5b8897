#pragma once

#include <gmpxx.h>

#include <cstdint>
#include <string>
#include <vector>

namespace uspecht {

/// Exact scalar in Q(zeta_p), p prime.
///
/// Stored as num[0..p-2] over Z in the basis 1, z, ..., z^{p-2} plus a single
/// positive integer denominator, reduced so that gcd(num entries, den) = 1.
/// For p = 2 this degenerates to an ordinary rational (z = -1).
class Cyc {
 public:
  Cyc() : p_(0), den_(1) {}  // invalid sentinel; assign before use
  static Cyc zero(int p);
  static Cyc one(int p);
  static Cyc integer(int p, long v);
  static Cyc rational(int p, const mpq_class& v);
  /// zeta_p^e (e taken mod p).
  static Cyc zeta_pow(int p, long e);

  int p() const { return p_; }
  bool valid() const { return p_ >= 2; }
  bool is_zero() const;
  bool is_one() const;
  bool is_rational() const;       // lies in Q
  mpq_class rational_value() const;  // requires is_rational()

  const std::vector<mpz_class>& num() const { return num_; }
  const mpz_class& den() const { return den_; }

  Cyc operator-() const;
  Cyc& operator+=(const Cyc& o);
  Cyc& operator-=(const Cyc& o);
  Cyc& operator*=(const Cyc& o);
  Cyc& operator/=(const Cyc& o);  // o != 0, else domain_error
  friend Cyc operator+(Cyc a, const Cyc& b) { return a += b; }
  friend Cyc operator-(Cyc a, const Cyc& b) { return a -= b; }
  friend Cyc operator*(Cyc a, const Cyc& b) { return a *= b; }
  friend Cyc operator/(Cyc a, const Cyc& b) { return a /= b; }
  bool operator==(const Cyc& o) const;

  Cyc inverse() const;

  /// Scale by an exact rational.
  Cyc& scale(const mpq_class& r);

  std::string to_string() const;

  /// Builds sum_e count[e] * zeta^e from per-exponent integer counts
  /// (count.size() == p), divided by den.
  static Cyc from_exponent_counts(int p, const std::vector<long>& count,
                                  const mpz_class& den);

 private:
  Cyc(int p, std::vector<mpz_class> num, mpz_class den);
  void reduce();

  int p_;
  std::vector<mpz_class> num_;
  mpz_class den_;
};

}  // namespace uspecht
