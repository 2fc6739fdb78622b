#pragma once

#include <gmpxx.h>

#include <complex>
#include <cstdint>
#include <string>
#include <vector>

namespace weilcheck {

/// Exact element of the cyclotomic field Q(zeta_N), zeta_N = exp(2*pi*i/N).
///
/// Values are kept in group-ring form: an integer coefficient vector of
/// length N over a common positive denominator, i.e. a polynomial in zeta_N
/// modulo X^N - 1. Multiplication by a root of unity is then a cyclic index
/// shift; reduction modulo the cyclotomic polynomial Phi_N is paid only when
/// a value is compared against another one (or against zero).
///
/// An optional formal factor k^(kpow2/2) rides along, where k ("kbase") is a
/// distinguished positive integer. Integer powers of k are folded into the
/// rational part eagerly, so after canonicalization kpow2 is 0 or odd.
class CycScalar {
 public:
  CycScalar();  // zero, order 1

  static CycScalar zero(int order);
  static CycScalar one();
  static CycScalar root_of_unity(int order, long exponent);
  static CycScalar from_int(long value);
  static CycScalar from_mpq(const mpq_class& value, int order = 1);
  /// Builds coeffs[0] + coeffs[1]*zeta_N + ... over the given denominator.
  static CycScalar from_coeffs(int order, std::vector<mpz_class> coeffs,
                               mpz_class den = 1);
  /// x * kbase^(kpow2/2). kbase must be positive.
  static CycScalar with_kpow(const CycScalar& x, int kpow2, int kbase);

  int order() const { return order_; }
  int kpow2() const { return kpow2_; }
  int kbase() const { return kbase_; }
  const std::vector<mpz_class>& raw_coeffs() const { return num_; }
  const mpz_class& raw_den() const { return den_; }

  bool raw_zero() const;  // all stored coefficients zero (sufficient, not necessary)
  bool is_zero() const;   // exact: remainder mod Phi_N vanishes
  bool is_one() const;
  bool is_rational() const;        // value lies in Q
  mpq_class rational_value() const;  // requires is_rational()

  CycScalar operator-() const;
  CycScalar operator+(const CycScalar& rhs) const;
  CycScalar operator-(const CycScalar& rhs) const;
  CycScalar operator*(const CycScalar& rhs) const;
  CycScalar operator/(const CycScalar& rhs) const;
  bool operator==(const CycScalar& rhs) const;
  bool operator!=(const CycScalar& rhs) const { return !(*this == rhs); }

  CycScalar conj() const;        // complex conjugation zeta -> zeta^-1
  CycScalar pow(long e) const;   // negative e via inverse
  CycScalar inverse() const;     // exact, via extended Euclid mod Phi_N

  /// Rewrites the value in Q(zeta_M); M must be a multiple of order().
  CycScalar promoted(int new_order) const;

  /// Numeric embedding; needs kbase when kpow2 != 0.
  std::complex<double> to_complex() const;

  std::string str() const;

 private:
  int order_;   // N >= 1
  int kpow2_;   // twice the formal k-exponent
  int kbase_;   // 0 when unused
  std::vector<mpz_class> num_;  // length order_
  mpz_class den_;               // > 0

  void canonicalize();
  std::vector<mpz_class> reduced_mod_phi() const;
  static void align(CycScalar& a, CycScalar& b, bool* odd_kpow_gap);
  friend class ProjUnitary;
};

/// Monic cyclotomic polynomial Phi_n, coefficients low-to-high. Cached.
const std::vector<mpz_class>& cyclotomic_polynomial(int n);

/// Remainder of an integer coefficient vector (length >= 1, meaning a
/// polynomial mod X^N - 1 with N = coeffs.size()) modulo Phi_N.
/// Returns true iff the remainder is identically zero.
bool reduces_to_zero_mod_phi(std::vector<mpz_class> coeffs);

}  // namespace weilcheck
