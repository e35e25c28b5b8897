#include "uspecht/gf.hpp"

#include <gmpxx.h>

#include <array>
#include <stdexcept>

namespace uspecht {

namespace {

// Conway polynomials for the extension fields we support, constant term
// first, leading coefficient 1.
std::vector<int> reduction_poly(int p, int k) {
  if (p == 2 && k == 2) return {1, 1, 1};           // t^2 + t + 1
  if (p == 2 && k == 3) return {1, 1, 0, 1};        // t^3 + t + 1
  if (p == 2 && k == 4) return {1, 1, 0, 0, 1};     // t^4 + t + 1
  if (p == 3 && k == 2) return {2, 2, 1};           // t^2 + 2t + 2
  throw std::invalid_argument("unsupported extension field");
}

int digits_to_index(const std::vector<int>& d, int p) {
  int x = 0;
  for (int i = static_cast<int>(d.size()) - 1; i >= 0; --i) x = x * p + d[i];
  return x;
}

std::vector<int> index_to_digits(int x, int p, int k) {
  std::vector<int> d(k, 0);
  for (int i = 0; i < k; ++i) {
    d[i] = x % p;
    x /= p;
  }
  return d;
}

// Polynomial product mod the reduction polynomial, coefficients mod p.
std::vector<int> polymul_mod(const std::vector<int>& a, const std::vector<int>& b,
                             const std::vector<int>& mod, int p, int k) {
  std::vector<int> c(2 * k - 1, 0);
  for (int i = 0; i < k; ++i)
    for (int j = 0; j < k; ++j) c[i + j] = (c[i + j] + a[i] * b[j]) % p;
  for (int d = 2 * k - 2; d >= k; --d) {
    int lead = c[d];
    if (lead == 0) continue;
    c[d] = 0;
    for (int i = 0; i < k; ++i) {
      c[d - k + i] = ((c[d - k + i] - lead * mod[i]) % p + p * p) % p;
    }
  }
  c.resize(k);
  return c;
}

int smallest_prime_factor(int q) {
  for (int d = 2; d * d <= q; ++d)
    if (q % d == 0) return d;
  return q;
}

}  // namespace

bool Gf::is_prime_power(int q) {
  if (q < 2) return false;
  int p = smallest_prime_factor(q);
  int x = q;
  while (x % p == 0) x /= p;
  return x == 1;
}

Gf::Gf(int q) : q_(q) {
  if (!is_prime_power(q) || q > 16)
    throw std::invalid_argument("q must be a prime power <= 16");
  p_ = smallest_prime_factor(q);
  k_ = 0;
  for (int x = q; x > 1; x /= p_) ++k_;

  mod_ = (k_ == 1) ? std::vector<int>{0, 1} : reduction_poly(p_, k_);

  add_.assign(q * q, 0);
  mul_.assign(q * q, 0);
  neg_.assign(q, 0);
  tr_.assign(q, 0);

  for (int a = 0; a < q; ++a) {
    auto da = index_to_digits(a, p_, k_);
    for (int b = 0; b < q; ++b) {
      auto db = index_to_digits(b, p_, k_);
      std::vector<int> ds(k_);
      for (int i = 0; i < k_; ++i) ds[i] = (da[i] + db[i]) % p_;
      add_[a * q + b] = static_cast<uint8_t>(digits_to_index(ds, p_));
      auto dm = polymul_mod(da, db, mod_, p_, k_);
      mul_[a * q + b] = static_cast<uint8_t>(digits_to_index(dm, p_));
    }
    std::vector<int> dn(k_);
    for (int i = 0; i < k_; ++i) dn[i] = (p_ - da[i]) % p_;
    neg_[a] = static_cast<uint8_t>(digits_to_index(dn, p_));
  }

  inv_.assign(q, 0);
  for (int a = 1; a < q; ++a)
    for (int b = 1; b < q; ++b)
      if (mul_[a * q + b] == 1) inv_[a] = static_cast<uint8_t>(b);

  // Tr(x) = x + x^p + ... + x^{p^{k-1}}, an element of the prime field.
  for (int a = 0; a < q; ++a) {
    uint8_t acc = 0;
    uint8_t x = static_cast<uint8_t>(a);
    for (int i = 0; i < k_; ++i) {
      acc = add(acc, x);
      uint8_t xp = x;
      for (int j = 1; j < p_; ++j) xp = mul(xp, x);
      x = xp;
    }
    if (acc >= p_) throw std::logic_error("trace not in prime field");
    tr_[a] = acc;
  }
}

uint8_t Gf::inv(uint8_t a) const {
  if (a == 0) throw std::domain_error("inverse of zero in GF(q)");
  return inv_[a];
}

uint8_t Gf::pow(uint8_t a, long e) const {
  if (e < 0) return pow(inv(a), -e);
  uint8_t r = 1, b = a;
  while (e) {
    if (e & 1) r = mul(r, b);
    b = mul(b, b);
    e >>= 1;
  }
  return r;
}

std::string Gf::describe() const {
  std::string s = "GF(" + std::to_string(q_) + ")";
  if (k_ > 1) {
    s += " = GF(" + std::to_string(p_) + ")[t]/(";
    for (int i = k_; i >= 0; --i) {
      if (mod_[i] == 0) continue;
      if (i < k_) s += "+";
      if (i == 0 || mod_[i] != 1) s += std::to_string(mod_[i]);
      if (i >= 1) s += "t";
      if (i >= 2) s += "^" + std::to_string(i);
    }
    s += ")";
  }
  return s;
}

long long gaussian_binomial(int n, int m, long long q) {
  if (n < 0) throw std::invalid_argument("gaussian_binomial: negative n");
  if (m < 0 || n < m) return 0;
  // [n m]_q = prod ([n-m+i]_q / [i]_q); compute exactly via the q-Pascal
  // recurrence to stay in integers throughout.
  std::vector<mpz_class> row(m + 1, 0);
  row[0] = 1;
  mpz_class Q(static_cast<long>(q));
  for (int i = 1; i <= n; ++i) {
    for (int j = std::min(i, m); j >= 1; --j) {
      mpz_class qp;
      mpz_pow_ui(qp.get_mpz_t(), Q.get_mpz_t(), static_cast<unsigned long>(j));
      row[j] = row[j] * qp + row[j - 1];
    }
  }
  if (!row[m].fits_slong_p()) throw std::overflow_error("gaussian_binomial overflow");
  return row[m].get_si();
}

}  // namespace uspecht
