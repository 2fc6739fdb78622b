#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include <doctest.h>

#include <numeric>
#include <random>

#include "weilcheck/arith.hpp"
#include "weilcheck/cyclotomic.hpp"

using namespace weilcheck;

TEST_CASE("jacobi symbol basic values") {
  CHECK(jacobi(5, 1) == 1);
  CHECK(jacobi(2, 3) == -1);  // squares mod 3 are {0,1}
  CHECK(jacobi(3, 5) * jacobi(5, 3) == 1);
  const int reciprocity_sign = (((3 - 1) / 2) * ((5 - 1) / 2)) % 2 == 0 ? 1 : -1;
  CHECK(jacobi(3, 5) * jacobi(5, 3) == reciprocity_sign);
  CHECK(jacobi(0, 9) == 0);
  CHECK(jacobi(-1, 5) == 1);
  CHECK(jacobi(-1, 3) == -1);
  CHECK_THROWS_AS(jacobi(1, 4), std::invalid_argument);
  CHECK_THROWS_AS(jacobi(1, -3), std::invalid_argument);
}

TEST_CASE("jacobi multiplicativity against Legendre brute force") {
  auto legendre = [](long p, long q) {
    p %= q;
    if (p < 0) p += q;
    if (p == 0) return 0;
    for (long x = 1; x < q; ++x)
      if ((x * x) % q == p) return 1;
    return -1;
  };
  for (long q : {3L, 5L, 7L, 11L, 13L})
    for (long p = -6; p <= 6; ++p) CHECK(jacobi(p, q) == legendre(p, q));
  // multiplicative in the lower argument: (p/15) = (p/3)(p/5)
  for (long p = 0; p < 15; ++p)
    CHECK(jacobi(p, 15) == jacobi(p, 3) * jacobi(p, 5));
}

TEST_CASE("epsilon") {
  CHECK(epsilon(1) == CycScalar::one());
  CHECK(epsilon(3) == CycScalar::root_of_unity(4, 1));
  CHECK(epsilon(7) == CycScalar::root_of_unity(4, 1));
  CHECK(epsilon(-3) == CycScalar::one());  // -3 = 1 mod 4
  CHECK_THROWS_AS(epsilon(2), std::invalid_argument);
}

TEST_CASE("gauss sum brute force small values") {
  CHECK(gauss_sum_bruteforce(1, 1) == CycScalar::one());
  CHECK(gauss_sum_bruteforce(1, 2).is_zero());  // 1 + zeta_2
  // 1 + zeta_4 + 1 + zeta_4 = 2 + 2i
  const CycScalar i4 = CycScalar::root_of_unity(4, 1);
  CHECK(gauss_sum_bruteforce(1, 4) ==
        CycScalar::from_int(2) + CycScalar::from_int(2) * i4);
  // G(1,3) = 1 + 2 zeta_3
  CHECK(gauss_sum_bruteforce(1, 3) ==
        CycScalar::one() + CycScalar::from_int(2) * CycScalar::root_of_unity(3, 1));
}

TEST_CASE("sqrt_exact agrees with floats and squares back") {
  for (long v : {1L, 2L, 3L, 4L, 5L, 8L, 12L, 25L}) {
    const CycScalar r = sqrt_exact(v);
    CHECK(r * r == CycScalar::from_int(v));
    CHECK(std::abs(r.to_complex().real() - std::sqrt(double(v))) < 1e-9);
    CHECK(std::abs(r.to_complex().imag()) < 1e-9);
  }
}

TEST_CASE("gauss closed formula matches brute force on spec anchors") {
  // odd v case: G(1,3) = i sqrt(3)
  CHECK(gauss_sum_closed(1, 3) == gauss_sum_bruteforce(1, 3));
  CHECK(gauss_sum_closed(1, 3) ==
        CycScalar::root_of_unity(4, 1) * sqrt_exact(3));
  // v = 2 mod 4 vanishes
  CHECK(gauss_sum_closed(1, 6).is_zero());
  CHECK(gauss_sum_bruteforce(1, 6).is_zero());
  // v = 0 mod 4: G(1,8) = 2 sqrt(2) (1 + i)
  const CycScalar expected = CycScalar::from_int(2) * sqrt_exact(2) *
                             (CycScalar::one() + CycScalar::root_of_unity(4, 1));
  CHECK(gauss_sum_closed(1, 8) == expected);
  CHECK(gauss_sum_bruteforce(1, 8) == expected);
}

TEST_CASE("gauss closed equals brute force for v <= 40") {
  for (long v = 1; v <= 40; ++v)
    for (long u = 0; u < v; ++u)
      CHECK(gauss_sum_closed(u, v) == gauss_sum_bruteforce(u, v));
}

TEST_CASE("gcd reduction rule") {
  // G(2,6) = 2 G(1,3)
  CHECK(gauss_sum_closed(2, 6) == CycScalar::from_int(2) * gauss_sum_bruteforce(1, 3));
  // G(0,v) = v
  CHECK(gauss_sum_closed(0, 7) == CycScalar::from_int(7));
  CHECK(gauss_sum_bruteforce(0, 7) == CycScalar::from_int(7));
}

TEST_CASE("root_order") {
  CHECK(root_order(CycScalar::root_of_unity(4, 1)) == 4);
  CHECK(root_order(CycScalar::one()) == 1);
  CHECK(root_order(CycScalar::root_of_unity(6, 2)) == 3);
  CHECK(root_order(-CycScalar::one()) == 2);
  // -zeta_3 has order 6
  CHECK(root_order(-CycScalar::root_of_unity(3, 1)) == 6);
  CHECK_THROWS_AS(root_order(CycScalar::from_int(2)), std::invalid_argument);
  CHECK_THROWS_AS(root_order(CycScalar::from_int(0)), std::invalid_argument);
  // power/divisor property for a sample of roots
  for (int n : {4, 6, 8, 12})
    for (int j = 0; j < n; ++j) {
      const CycScalar x = CycScalar::root_of_unity(n, j);
      const long m = root_order(x);
      CHECK(x.pow(m).is_one());
      for (long d = 1; d < m; ++d)
        if (m % d == 0) CHECK(!x.pow(d).is_one());
    }
}

TEST_CASE("center_order spec anchors") {
  CHECK(center_order(5) == 5);
  CHECK(center_order(2) == 2);
  CHECK(center_order(48) == 8);  // 12 * 2^2 detects order 2^3
  CHECK_THROWS_AS(center_order(1), std::invalid_argument);
}

TEST_CASE("center_order exhaustive: q^s for primes q >= 5, q^s <= 200") {
  auto is_prime = [](long q) {
    for (long d = 2; d * d <= q; ++d)
      if (q % d == 0) return false;
    return q >= 2;
  };
  for (long q = 5; q <= 200; ++q) {
    if (!is_prime(q)) continue;
    for (long ps = q; ps <= 200; ps *= q) CHECK(center_order(ps) == ps);
  }
}

TEST_CASE("CycScalar equality is an equivalence respecting ring ops") {
  std::mt19937_64 rng(7);
  auto random_scalar = [&](int n) {
    CycScalar acc = CycScalar::zero(n);
    for (int t = 0; t < 3; ++t) {
      const long c = static_cast<long>(rng() % 7) - 3;
      acc = acc + CycScalar::from_int(c) *
                      CycScalar::root_of_unity(n, static_cast<long>(rng() % n));
    }
    return acc;
  };
  for (int n : {6, 8, 12, 48}) {
    for (int trial = 0; trial < 20; ++trial) {
      const CycScalar a = random_scalar(n), b = random_scalar(n), c = random_scalar(n);
      CHECK(a == a);
      CHECK((a + b) == (b + a));
      CHECK((a * b) == (b * a));
      CHECK((a * (b + c)) == (a * b + a * c));
      CHECK((a - a).is_zero());
      if (a == b) CHECK(b == a);
      // representation invariance: adding zero written as 1 + z^{n/2} pairs
      if (n % 2 == 0) {
        const CycScalar zero_disguised =
            CycScalar::root_of_unity(n, n / 2) + CycScalar::one();
        CHECK((a + zero_disguised) == a);
      }
    }
  }
}

TEST_CASE("CycScalar mixed-order promotion and division") {
  const CycScalar z3 = CycScalar::root_of_unity(3, 1);
  const CycScalar z6 = CycScalar::root_of_unity(6, 1);
  CHECK(z6 * z6 == z3);
  CHECK(-z3.pow(2) == z6);  // zeta_6 = -zeta_3^2
  const CycScalar q = z3 / z6;
  CHECK(q * z6 == z3);
  CHECK(root_order(q) == 6);
  // inverse of a non-root element
  const CycScalar x = CycScalar::from_int(2) + z3;
  CHECK((x * x.inverse()).is_one());
  CHECK_THROWS_AS(CycScalar::zero(3).inverse(), std::domain_error);
}

TEST_CASE("CycScalar formal k powers fold on even exponents") {
  const CycScalar x = CycScalar::with_kpow(CycScalar::one(), -2, 4);  // 4^{-1}
  CHECK(x == CycScalar::from_mpq(mpq_class(1, 4)));
  const CycScalar h = CycScalar::with_kpow(CycScalar::one(), 1, 4);   // 4^{1/2}
  CHECK(h.kpow2() == 1);
  CHECK(h * h == CycScalar::from_int(4));
  CHECK(std::abs(h.to_complex().real() - 2.0) < 1e-12);
  // mixed half-powers compare equal only when both vanish
  CHECK(h != CycScalar::from_int(2));
  CHECK(CycScalar::with_kpow(CycScalar::zero(4), 1, 4) == CycScalar::zero(4));
}
