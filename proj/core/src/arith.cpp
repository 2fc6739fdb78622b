#include "weilcheck/arith.hpp"

#include <cmath>
#include <cstdlib>
#include <numeric>
#include <stdexcept>
#include <vector>

namespace weilcheck {

int jacobi(long p, long q) {
  if (q <= 0 || q % 2 == 0)
    throw std::invalid_argument("jacobi: Q must be odd and positive");
  p %= q;
  if (p < 0) p += q;
  int sign = 1;
  while (p != 0) {
    while (p % 2 == 0) {
      p /= 2;
      const long r = q % 8;
      if (r == 3 || r == 5) sign = -sign;
    }
    std::swap(p, q);
    if (p % 4 == 3 && q % 4 == 3) sign = -sign;
    p %= q;
  }
  return q == 1 ? sign : 0;
}

CycScalar epsilon(long a) {
  if (a % 2 == 0) throw std::invalid_argument("epsilon: argument must be odd");
  long r = a % 4;
  if (r < 0) r += 4;
  return r == 1 ? CycScalar::one() : CycScalar::root_of_unity(4, 1);
}

CycScalar gauss_sum_bruteforce(long u, long v) {
  if (v < 1) throw std::invalid_argument("gauss_sum: v must be positive");
  std::vector<mpz_class> coeffs(static_cast<std::size_t>(v), 0);
  for (long x = 0; x < v; ++x) {
    long e = (u % v) * ((x * x) % v) % v;
    if (e < 0) e += v;
    coeffs[static_cast<std::size_t>(e)] += 1;
  }
  return CycScalar::from_coeffs(static_cast<int>(v), std::move(coeffs));
}

CycScalar sqrt_exact(long v) {
  if (v < 1) throw std::invalid_argument("sqrt_exact: v must be positive");
  if (v == 1) return CycScalar::one();
  // G(1,4v) = (1+i) * 2*sqrt(v), so sqrt(v) = G(1,4v) * (1-i) / 4.
  CycScalar g = gauss_sum_bruteforce(1, 4 * v);
  const int n = static_cast<int>(4 * v);
  CycScalar one_minus_i =
      CycScalar::one() - CycScalar::root_of_unity(n, v);  // zeta_4v^v = i
  CycScalar r = g * one_minus_i * CycScalar::from_mpq(mpq_class(1, 4));
  const auto approx = r.to_complex();
  if (std::abs(approx.imag()) > 1e-9 ||
      std::abs(approx.real() - std::sqrt(static_cast<double>(v))) > 1e-9)
    throw std::logic_error("sqrt_exact: float validation failed");
  return r;
}

CycScalar gauss_sum_closed(long u, long v) {
  if (v < 1) throw std::invalid_argument("gauss_sum: v must be positive");
  u %= v;
  if (u < 0) u += v;
  if (u == 0) {
    // G(0,v) = v: gcd reduction all the way down to G(0,1) = 1.
    return CycScalar::from_int(v);
  }
  const long d = std::gcd(u, v);
  if (d > 1) return CycScalar::from_int(d) * gauss_sum_closed(u / d, v / d);
  if (v == 1) return CycScalar::one();
  if (v % 4 == 2) return CycScalar::zero(1);
  if (v % 2 == 1) {
    CycScalar jac = CycScalar::from_int(jacobi(u, v));
    return epsilon(v) * jac * sqrt_exact(v);
  }
  // v = 0 (mod 4); u is odd since gcd(u,v) = 1
  CycScalar jac = CycScalar::from_int(jacobi(v, u));
  CycScalar zeta8 = CycScalar::root_of_unity(8, 1);  // (1+i)/sqrt(2)
  return epsilon(u).conj() * jac * zeta8 * sqrt_exact(2 * v);
}

long root_order(const CycScalar& x) {
  if (x.kpow2() != 0 || x.is_zero())
    throw std::invalid_argument("root_order: input is not a root of unity");
  const int n = x.order();
  // Fast path: a single stored coefficient equal to +-den is +-zeta_n^j.
  {
    int support = -1;
    bool single = true;
    for (int j = 0; j < n && single; ++j) {
      if (x.raw_coeffs()[j] == 0) continue;
      if (support >= 0) single = false;
      support = j;
    }
    if (single && support >= 0) {
      const mpz_class& c = x.raw_coeffs()[support];
      if (c == x.raw_den() || c == -x.raw_den()) {
        // exponent support/n, plus 1/2 when negated
        long num = 2L * support + (c < 0 ? n : 0);
        long den = 2L * n;
        const long g = std::gcd(num, den);
        return num == 0 ? 1 : den / g;
      }
    }
  }
  // General case: the roots of unity in Q(zeta_n) have order dividing
  // lcm(2,n); try divisors in increasing order.
  const long cap = std::lcm(2L, static_cast<long>(n));
  std::vector<long> divisors;
  for (long m = 1; m <= cap; ++m)
    if (cap % m == 0) divisors.push_back(m);
  for (long m : divisors)
    if (x.pow(m).is_one()) return m;
  throw std::invalid_argument("root_order: input is not a root of unity");
}

long center_order(long p) {
  if (p < 2) throw std::invalid_argument("center_order: p must be >= 2");
  const long n = 2 * p;
  long e = (-12 - p * (p + 1)) % n;
  if (e < 0) e += n;
  return root_order(CycScalar::root_of_unity(static_cast<int>(n), e));
}

}  // namespace weilcheck
