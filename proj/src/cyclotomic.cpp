#include "uspecht/cyclotomic.hpp"

#include <stdexcept>

namespace uspecht {

namespace {

void check_same_field(const Cyc& a, const Cyc& b) {
  if (a.p() != b.p()) throw std::invalid_argument("Cyc: mixed cyclotomic fields");
}

}  // namespace

Cyc::Cyc(int p, std::vector<mpz_class> num, mpz_class den)
    : p_(p), num_(std::move(num)), den_(std::move(den)) {
  reduce();
}

Cyc Cyc::zero(int p) { return Cyc(p, std::vector<mpz_class>(p - 1, 0), 1); }

Cyc Cyc::one(int p) {
  std::vector<mpz_class> n(p - 1, 0);
  n[0] = 1;
  return Cyc(p, std::move(n), 1);
}

Cyc Cyc::integer(int p, long v) {
  std::vector<mpz_class> n(p - 1, 0);
  n[0] = v;
  return Cyc(p, std::move(n), 1);
}

Cyc Cyc::rational(int p, const mpq_class& v) {
  std::vector<mpz_class> n(p - 1, 0);
  n[0] = v.get_num();
  return Cyc(p, std::move(n), v.get_den());
}

Cyc Cyc::zeta_pow(int p, long e) {
  e %= p;
  if (e < 0) e += p;
  std::vector<mpz_class> n(p - 1, 0);
  if (e < p - 1) {
    n[e] = 1;
  } else {
    for (auto& c : n) c = -1;  // z^{p-1} = -(1 + z + ... + z^{p-2})
  }
  return Cyc(p, std::move(n), 1);
}

Cyc Cyc::from_exponent_counts(int p, const std::vector<long>& count,
                              const mpz_class& den) {
  if (static_cast<int>(count.size()) != p)
    throw std::invalid_argument("from_exponent_counts: need p entries");
  std::vector<mpz_class> n(p - 1, 0);
  for (int e = 0; e < p - 1; ++e) n[e] = count[e];
  for (int e = 0; e < p - 1; ++e) n[e] -= count[p - 1];
  return Cyc(p, std::move(n), den);
}

void Cyc::reduce() {
  if (p_ < 2) return;
  if (den_ < 0) {
    den_ = -den_;
    for (auto& c : num_) c = -c;
  }
  mpz_class g = den_;
  for (const auto& c : num_) {
    mpz_gcd(g.get_mpz_t(), g.get_mpz_t(), c.get_mpz_t());
    if (g == 1) return;
  }
  if (g > 1) {
    den_ /= g;
    for (auto& c : num_) c /= g;
  }
}

bool Cyc::is_zero() const {
  for (const auto& c : num_)
    if (c != 0) return false;
  return true;
}

bool Cyc::is_one() const {
  if (den_ != 1 || num_[0] != 1) return false;
  for (size_t i = 1; i < num_.size(); ++i)
    if (num_[i] != 0) return false;
  return true;
}

bool Cyc::is_rational() const {
  for (size_t i = 1; i < num_.size(); ++i)
    if (num_[i] != 0) return false;
  return true;
}

mpq_class Cyc::rational_value() const {
  if (!is_rational()) throw std::domain_error("Cyc: not rational");
  mpq_class r(num_[0], den_);
  r.canonicalize();
  return r;
}

Cyc Cyc::operator-() const {
  Cyc r = *this;
  for (auto& c : r.num_) c = -c;
  return r;
}

Cyc& Cyc::operator+=(const Cyc& o) {
  check_same_field(*this, o);
  mpz_class g;
  mpz_gcd(g.get_mpz_t(), den_.get_mpz_t(), o.den_.get_mpz_t());
  mpz_class la = o.den_ / g;  // scale for our numerators
  mpz_class lb = den_ / g;    // scale for theirs
  for (int i = 0; i < p_ - 1; ++i) num_[i] = num_[i] * la + o.num_[i] * lb;
  den_ *= la;
  reduce();
  return *this;
}

Cyc& Cyc::operator-=(const Cyc& o) { return *this += -o; }

Cyc& Cyc::operator*=(const Cyc& o) {
  check_same_field(*this, o);
  int d = p_ - 1;
  // convolution, exponents folded by z^p = 1 then z^{p-1} = -(1+...+z^{p-2})
  std::vector<mpz_class> c(p_, 0);
  for (int i = 0; i < d; ++i) {
    if (num_[i] == 0) continue;
    for (int j = 0; j < d; ++j) {
      if (o.num_[j] == 0) continue;
      c[(i + j) % p_] += num_[i] * o.num_[j];
    }
  }
  for (int i = 0; i < d; ++i) num_[i] = c[i] - c[d];
  den_ *= o.den_;
  reduce();
  return *this;
}

Cyc Cyc::inverse() const {
  if (is_zero()) throw std::domain_error("Cyc: division by zero");
  int d = p_ - 1;
  if (d == 1) {
    mpq_class v(num_[0], den_);
    v = 1 / v;
    return rational(p_, v);
  }
  // Solve (mult-by-this) * x = 1 in the power basis with rational Gauss
  // elimination; the matrix column j is this * z^j.
  std::vector<std::vector<mpq_class>> A(d, std::vector<mpq_class>(d + 1, 0));
  for (int j = 0; j < d; ++j) {
    Cyc col = *this * zeta_pow(p_, j);
    for (int i = 0; i < d; ++i) A[i][j] = mpq_class(col.num_[i], col.den_);
  }
  A[0][d] = 1;
  for (int col = 0, row = 0; col < d && row < d; ++col) {
    int piv = -1;
    for (int r = row; r < d; ++r)
      if (A[r][col] != 0) {
        piv = r;
        break;
      }
    if (piv < 0) throw std::logic_error("Cyc: singular multiplication matrix");
    std::swap(A[piv], A[row]);
    for (int r = 0; r < d; ++r) {
      if (r == row || A[r][col] == 0) continue;
      mpq_class f = A[r][col] / A[row][col];
      for (int cc = col; cc <= d; ++cc) A[r][cc] -= f * A[row][cc];
    }
    ++row;
  }
  // back out x (A is now diagonal on the pivots, in order)
  std::vector<mpq_class> x(d);
  for (int i = 0; i < d; ++i) x[i] = A[i][d] / A[i][i];
  mpz_class lcm = 1;
  for (int i = 0; i < d; ++i) {
    x[i].canonicalize();
    mpz_lcm(lcm.get_mpz_t(), lcm.get_mpz_t(), x[i].get_den().get_mpz_t());
  }
  std::vector<mpz_class> n(d);
  for (int i = 0; i < d; ++i) n[i] = x[i].get_num() * (lcm / x[i].get_den());
  return Cyc(p_, std::move(n), lcm);
}

Cyc& Cyc::operator/=(const Cyc& o) {
  check_same_field(*this, o);
  return *this *= o.inverse();
}

bool Cyc::operator==(const Cyc& o) const {
  if (p_ != o.p_) return false;
  return den_ == o.den_ && num_ == o.num_;
}

Cyc& Cyc::scale(const mpq_class& r) {
  for (auto& c : num_) c *= r.get_num();
  den_ *= r.get_den();
  reduce();
  return *this;
}

std::string Cyc::to_string() const {
  std::string s = "(";
  for (int i = 0; i < p_ - 1; ++i) {
    if (i) s += "+";
    s += num_[i].get_str();
    if (i >= 1) s += "z";
    if (i >= 2) s += "^" + std::to_string(i);
  }
  s += ")";
  if (den_ != 1) s += "/" + den_.get_str();
  return s;
}

}  // namespace uspecht
