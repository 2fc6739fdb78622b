#include "weilcheck/cyclotomic.hpp"

#include <algorithm>
#include <cmath>
#include <functional>
#include <map>
#include <mutex>
#include <numeric>
#include <sstream>
#include <stdexcept>

namespace weilcheck {

namespace {

// Exact division of integer polynomials, divisor monic. Quotient discarded.
// Returns the remainder (degree < divisor degree).
std::vector<mpz_class> poly_rem_monic(std::vector<mpz_class> a,
                                      const std::vector<mpz_class>& d) {
  const std::size_t dd = d.size() - 1;  // divisor degree
  if (a.size() <= dd) return a;
  for (std::size_t i = a.size(); i-- > dd;) {
    if (a[i] == 0) continue;
    const mpz_class c = a[i];
    for (std::size_t j = 0; j < dd; ++j)
      a[i - dd + j] -= c * d[j];
    a[i] = 0;
  }
  a.resize(dd);
  return a;
}

std::vector<mpz_class> poly_div_exact(const std::vector<mpz_class>& a,
                                      const std::vector<mpz_class>& d) {
  // a = q*d with d monic; returns q.
  std::vector<mpz_class> rem = a;
  const std::size_t dd = d.size() - 1;
  std::vector<mpz_class> q(a.size() - dd, 0);
  for (std::size_t i = rem.size(); i-- > dd;) {
    if (rem[i] == 0) continue;
    const mpz_class c = rem[i];
    q[i - dd] = c;
    for (std::size_t j = 0; j + 1 < d.size(); ++j)
      rem[i - dd + j] -= c * d[j];
    rem[i] = 0;
  }
  for (std::size_t j = 0; j < dd; ++j)
    if (rem[j] != 0) throw std::logic_error("poly_div_exact: nonzero remainder");
  return q;
}

}  // namespace

const std::vector<mpz_class>& cyclotomic_polynomial(int n) {
  static std::map<int, std::vector<mpz_class>> cache;
  static std::mutex mtx;
  std::lock_guard<std::mutex> lock(mtx);
  auto it = cache.find(n);
  if (it != cache.end()) return it->second;

  // Phi_n = (X^n - 1) / prod_{d | n, d < n} Phi_d, computed without the lock
  // recursion by walking divisors in increasing order.
  std::function<const std::vector<mpz_class>&(int)> get =
      [&](int m) -> const std::vector<mpz_class>& {
    auto hit = cache.find(m);
    if (hit != cache.end()) return hit->second;
    std::vector<mpz_class> poly(m + 1, 0);
    poly[0] = -1;
    poly[m] = 1;
    for (int d = 1; d < m; ++d) {
      if (m % d != 0) continue;
      poly = poly_div_exact(poly, get(d));
    }
    return cache.emplace(m, std::move(poly)).first->second;
  };
  return get(n);
}

bool reduces_to_zero_mod_phi(std::vector<mpz_class> coeffs) {
  const int n = static_cast<int>(coeffs.size());
  const auto& phi = cyclotomic_polynomial(n);
  auto rem = poly_rem_monic(std::move(coeffs), phi);
  return std::all_of(rem.begin(), rem.end(),
                     [](const mpz_class& c) { return c == 0; });
}

CycScalar::CycScalar() : order_(1), kpow2_(0), kbase_(0), num_(1, 0), den_(1) {}

CycScalar CycScalar::zero(int order) {
  if (order < 1) throw std::invalid_argument("CycScalar: order must be >= 1");
  CycScalar x;
  x.order_ = order;
  x.num_.assign(order, 0);
  return x;
}

CycScalar CycScalar::one() { return from_int(1); }

CycScalar CycScalar::root_of_unity(int order, long exponent) {
  CycScalar x = zero(order);
  long e = exponent % order;
  if (e < 0) e += order;
  x.num_[static_cast<std::size_t>(e)] = 1;
  return x;
}

CycScalar CycScalar::from_int(long value) {
  CycScalar x = zero(1);
  x.num_[0] = value;
  return x;
}

CycScalar CycScalar::from_mpq(const mpq_class& value, int order) {
  CycScalar x = zero(order);
  x.num_[0] = value.get_num();
  x.den_ = value.get_den();
  x.canonicalize();
  return x;
}

CycScalar CycScalar::from_coeffs(int order, std::vector<mpz_class> coeffs,
                                 mpz_class den) {
  if (order < 1 || coeffs.size() != static_cast<std::size_t>(order))
    throw std::invalid_argument("CycScalar: coefficient vector length must equal the order");
  if (den <= 0) throw std::invalid_argument("CycScalar: denominator must be positive");
  CycScalar x = zero(order);
  x.num_ = std::move(coeffs);
  x.den_ = std::move(den);
  x.canonicalize();
  return x;
}

CycScalar CycScalar::with_kpow(const CycScalar& x, int kpow2, int kbase) {
  if (kpow2 != 0 && kbase < 1)
    throw std::invalid_argument("CycScalar: kbase must be positive when kpow is set");
  CycScalar y = x;
  y.kpow2_ += kpow2;
  if (y.kbase_ == 0) y.kbase_ = kbase;
  else if (kpow2 != 0 && y.kbase_ != kbase)
    throw std::invalid_argument("CycScalar: mismatched kbase");
  y.canonicalize();
  return y;
}

void CycScalar::canonicalize() {
  bool allzero = true;
  for (const auto& c : num_)
    if (c != 0) { allzero = false; break; }
  if (allzero) {
    den_ = 1;
    kpow2_ = 0;
    return;
  }
  if (kpow2_ != 0 && kpow2_ % 2 == 0) {
    // fold the integer power of kbase into the rational part
    const int e = kpow2_ / 2;
    mpz_class f;
    mpz_ui_pow_ui(f.get_mpz_t(), static_cast<unsigned long>(kbase_),
                  static_cast<unsigned long>(e > 0 ? e : -e));
    if (e > 0)
      for (auto& c : num_) c *= f;
    else
      den_ *= f;
    kpow2_ = 0;
  }
  mpz_class g = den_;
  for (const auto& c : num_) {
    if (c == 0) continue;
    mpz_gcd(g.get_mpz_t(), g.get_mpz_t(), c.get_mpz_t());
    if (g == 1) break;
  }
  if (g > 1) {
    for (auto& c : num_) c /= g;
    den_ /= g;
  }
}

bool CycScalar::raw_zero() const {
  return std::all_of(num_.begin(), num_.end(),
                     [](const mpz_class& c) { return c == 0; });
}

bool CycScalar::is_zero() const {
  if (raw_zero()) return true;
  return reduces_to_zero_mod_phi(num_);
}

bool CycScalar::is_one() const { return *this == one(); }

CycScalar CycScalar::promoted(int new_order) const {
  if (new_order == order_) return *this;
  if (new_order % order_ != 0)
    throw std::invalid_argument("CycScalar: promotion target must be a multiple of the order");
  CycScalar y = zero(new_order);
  const int stride = new_order / order_;
  for (int j = 0; j < order_; ++j)
    y.num_[static_cast<std::size_t>(j) * stride] = num_[j];
  y.den_ = den_;
  y.kpow2_ = kpow2_;
  y.kbase_ = kbase_;
  return y;
}

void CycScalar::align(CycScalar& a, CycScalar& b, bool* odd_kpow_gap) {
  if (a.kpow2_ != 0 || b.kpow2_ != 0) {
    const int kb = a.kbase_ != 0 ? a.kbase_ : b.kbase_;
    if (a.kbase_ != 0 && b.kbase_ != 0 && a.kbase_ != b.kbase_)
      throw std::invalid_argument("CycScalar: mismatched kbase");
    const int gap = a.kpow2_ - b.kpow2_;
    if (gap % 2 != 0) {
      *odd_kpow_gap = true;
    } else if (gap != 0) {
      // shift the larger exponent down into its coefficients
      CycScalar& hi = gap > 0 ? a : b;
      mpz_class f;
      mpz_ui_pow_ui(f.get_mpz_t(), static_cast<unsigned long>(kb),
                    static_cast<unsigned long>(std::abs(gap) / 2));
      for (auto& c : hi.num_) c *= f;
      hi.kpow2_ = std::min(a.kpow2_, b.kpow2_);
    }
  }
  const int m = std::lcm(a.order_, b.order_);
  if (a.order_ != m) a = a.promoted(m);
  if (b.order_ != m) b = b.promoted(m);
}

CycScalar CycScalar::operator-() const {
  CycScalar y = *this;
  for (auto& c : y.num_) c = -c;
  return y;
}

CycScalar CycScalar::operator+(const CycScalar& rhs) const {
  if (raw_zero()) return rhs;
  if (rhs.raw_zero()) return *this;
  CycScalar a = *this, b = rhs;
  bool odd_gap = false;
  align(a, b, &odd_gap);
  if (odd_gap) {
    if (a.is_zero()) return b;
    if (b.is_zero()) return a;
    throw std::domain_error("CycScalar: sum mixes integral and half-integral k-powers");
  }
  CycScalar r = zero(a.order_);
  r.kpow2_ = a.kpow2_;
  r.kbase_ = a.kbase_ != 0 ? a.kbase_ : b.kbase_;
  r.den_ = a.den_ * b.den_;
  for (int j = 0; j < a.order_; ++j)
    r.num_[j] = a.num_[j] * b.den_ + b.num_[j] * a.den_;
  r.canonicalize();
  return r;
}

CycScalar CycScalar::operator-(const CycScalar& rhs) const { return *this + (-rhs); }

CycScalar CycScalar::operator*(const CycScalar& rhs) const {
  CycScalar a = *this, b = rhs;
  const int m = std::lcm(a.order_, b.order_);
  if (a.order_ != m) a = a.promoted(m);
  if (b.order_ != m) b = b.promoted(m);
  CycScalar r = zero(m);
  if (a.kbase_ != 0 && b.kbase_ != 0 && a.kbase_ != b.kbase_ &&
      (a.kpow2_ != 0 || b.kpow2_ != 0))
    throw std::invalid_argument("CycScalar: mismatched kbase");
  r.kbase_ = a.kbase_ != 0 ? a.kbase_ : b.kbase_;
  r.kpow2_ = a.kpow2_ + b.kpow2_;
  r.den_ = a.den_ * b.den_;
  for (int i = 0; i < m; ++i) {
    if (a.num_[i] == 0) continue;
    for (int j = 0; j < m; ++j) {
      if (b.num_[j] == 0) continue;
      int t = i + j;
      if (t >= m) t -= m;
      r.num_[t] += a.num_[i] * b.num_[j];
    }
  }
  r.canonicalize();
  return r;
}

CycScalar CycScalar::operator/(const CycScalar& rhs) const {
  return *this * rhs.inverse();
}

bool CycScalar::operator==(const CycScalar& rhs) const {
  CycScalar a = *this, b = rhs;
  bool odd_gap = false;
  align(a, b, &odd_gap);
  if (odd_gap) return a.is_zero() && b.is_zero();
  std::vector<mpz_class> diff(a.order_);
  for (int j = 0; j < a.order_; ++j)
    diff[j] = a.num_[j] * b.den_ - b.num_[j] * a.den_;
  return reduces_to_zero_mod_phi(std::move(diff));
}

CycScalar CycScalar::conj() const {
  CycScalar y = zero(order_);
  y.kpow2_ = kpow2_;  // k is a positive real
  y.kbase_ = kbase_;
  y.den_ = den_;
  for (int j = 0; j < order_; ++j)
    y.num_[(order_ - j) % order_] = num_[j];
  return y;
}

CycScalar CycScalar::pow(long e) const {
  if (e < 0) return inverse().pow(-e);
  CycScalar acc = one();
  CycScalar base = *this;
  while (e > 0) {
    if (e & 1) acc = acc * base;
    base = base * base;
    e >>= 1;
  }
  return acc;
}

CycScalar CycScalar::inverse() const {
  if (is_zero()) throw std::domain_error("CycScalar: division by zero");
  // Work in Q[X]/Phi_N with rational coefficients. Phi_N is irreducible over
  // Q, so gcd(f, Phi_N) is a nonzero constant and the Bezout coefficient of f
  // is the inverse.
  const auto& phi_z = cyclotomic_polynomial(order_);
  std::vector<mpq_class> phi(phi_z.size());
  for (std::size_t i = 0; i < phi_z.size(); ++i) phi[i] = phi_z[i];

  std::vector<mpq_class> f(num_.size());
  for (std::size_t i = 0; i < num_.size(); ++i)
    f[i] = mpq_class(num_[i], den_);

  auto deg = [](const std::vector<mpq_class>& p) -> long {
    for (std::size_t i = p.size(); i-- > 0;)
      if (p[i] != 0) return static_cast<long>(i);
    return -1;
  };
  auto trim = [&](std::vector<mpq_class>& p) {
    long d = deg(p);
    p.resize(static_cast<std::size_t>(d + 1 > 0 ? d + 1 : 0));
  };

  // r0 = phi, r1 = f mod phi; track s only for f.
  std::vector<mpq_class> r0 = phi, r1 = f;
  {  // reduce f mod phi
    long dphi = deg(phi);
    for (long i = deg(r1); i >= dphi; --i) {
      mpq_class c = r1[static_cast<std::size_t>(i)] / phi[static_cast<std::size_t>(dphi)];
      if (c == 0) continue;
      for (long j = 0; j <= dphi; ++j)
        r1[static_cast<std::size_t>(i - dphi + j)] -= c * phi[static_cast<std::size_t>(j)];
    }
    trim(r1);
  }
  std::vector<mpq_class> s0{mpq_class(0)}, s1{mpq_class(1)};
  while (deg(r1) > 0) {
    // divide r0 by r1
    std::vector<mpq_class> q(static_cast<std::size_t>(deg(r0) - deg(r1) + 1), 0);
    std::vector<mpq_class> rem = r0;
    const long d1 = deg(r1);
    const mpq_class lead = r1[static_cast<std::size_t>(d1)];
    for (long i = deg(rem); i >= d1; --i) {
      mpq_class c = rem[static_cast<std::size_t>(i)] / lead;
      if (c == 0) continue;
      q[static_cast<std::size_t>(i - d1)] = c;
      for (long j = 0; j <= d1; ++j)
        rem[static_cast<std::size_t>(i - d1 + j)] -= c * r1[static_cast<std::size_t>(j)];
    }
    trim(rem);
    // s_next = s0 - q*s1
    std::vector<mpq_class> snext(std::max(s0.size(), q.size() + s1.size()), 0);
    for (std::size_t i = 0; i < s0.size(); ++i) snext[i] = s0[i];
    for (std::size_t i = 0; i < q.size(); ++i) {
      if (q[i] == 0) continue;
      for (std::size_t j = 0; j < s1.size(); ++j)
        snext[i + j] -= q[i] * s1[j];
    }
    trim(snext);
    r0 = std::move(r1);
    r1 = std::move(rem);
    s0 = std::move(s1);
    s1 = std::move(snext);
  }
  if (deg(r1) != 0)
    throw std::logic_error("CycScalar: inverse of a zero divisor");
  const mpq_class c = r1[0];  // s1*f == c (mod phi)
  CycScalar inv = zero(order_);
  mpz_class den_acc = 1;
  std::vector<mpq_class> coeffs(s1.size());
  for (std::size_t i = 0; i < s1.size(); ++i) {
    coeffs[i] = s1[i] / c;
    den_acc = lcm(den_acc, coeffs[i].get_den());
  }
  inv.den_ = den_acc;
  for (std::size_t i = 0; i < coeffs.size(); ++i)
    inv.num_[i] = coeffs[i].get_num() * (den_acc / coeffs[i].get_den());
  inv.kpow2_ = -kpow2_;
  inv.kbase_ = kbase_;
  inv.canonicalize();
  return inv;
}

std::vector<mpz_class> CycScalar::reduced_mod_phi() const {
  const auto& phi = cyclotomic_polynomial(order_);
  std::vector<mpz_class> rem = num_;
  const std::size_t dd = phi.size() - 1;
  if (rem.size() > dd) {
    for (std::size_t i = rem.size(); i-- > dd;) {
      if (rem[i] == 0) continue;
      const mpz_class c = rem[i];
      for (std::size_t j = 0; j < dd; ++j)
        rem[i - dd + j] -= c * phi[j];
      rem[i] = 0;
    }
    rem.resize(dd);
  }
  return rem;
}

bool CycScalar::is_rational() const {
  if (kpow2_ != 0) return false;
  auto rem = reduced_mod_phi();
  for (std::size_t i = 1; i < rem.size(); ++i)
    if (rem[i] != 0) return false;
  return true;
}

mpq_class CycScalar::rational_value() const {
  if (!is_rational())
    throw std::domain_error("CycScalar: value is not rational");
  auto rem = reduced_mod_phi();
  mpq_class v(rem[0], den_);
  v.canonicalize();
  return v;
}

std::complex<double> CycScalar::to_complex() const {
  std::complex<double> acc(0.0, 0.0);
  const double twopi = 6.283185307179586476925;
  for (int j = 0; j < order_; ++j) {
    if (num_[j] == 0) continue;
    const double a = twopi * j / order_;
    acc += num_[j].get_d() * std::complex<double>(std::cos(a), std::sin(a));
  }
  acc /= den_.get_d();
  if (kpow2_ != 0) {
    if (kbase_ == 0)
      throw std::logic_error("CycScalar: kpow set without kbase");
    acc *= std::pow(static_cast<double>(kbase_), kpow2_ / 2.0);
  }
  return acc;
}

std::string CycScalar::str() const {
  // display the canonical representative mod Phi_N
  std::vector<mpz_class> rem = reduced_mod_phi();
  mpz_class den = den_;
  mpz_class g = den;
  for (const auto& c : rem) {
    if (c == 0) continue;
    mpz_gcd(g.get_mpz_t(), g.get_mpz_t(), c.get_mpz_t());
    if (g == 1) break;
  }
  if (g > 1) {
    for (auto& c : rem) c /= g;
    den /= g;
  }
  std::ostringstream os;
  bool first = true;
  for (std::size_t j = 0; j < rem.size(); ++j) {
    if (rem[j] == 0) continue;
    mpz_class c = rem[j];
    if (!first) {
      os << (c < 0 ? " - " : " + ");
      if (c < 0) c = -c;
    }
    first = false;
    if (j == 0) {
      os << c.get_str();
    } else {
      if (c != 1 && c != -1) os << c.get_str() << "*";
      else if (c == -1) os << "-";
      os << "z" << order_;
      if (j != 1) os << "^" << j;
    }
  }
  if (first) os << "0";
  std::string body = os.str();
  std::ostringstream out;
  const bool needs_paren = body.find(' ') != std::string::npos;
  if (den != 1 || kpow2_ != 0) {
    if (needs_paren) out << "(" << body << ")";
    else out << body;
    if (den != 1) out << "/" << den.get_str();
    if (kpow2_ != 0)
      out << " * " << kbase_ << "^(" << kpow2_ << "/2)";
    return out.str();
  }
  return body;
}

}  // namespace weilcheck
