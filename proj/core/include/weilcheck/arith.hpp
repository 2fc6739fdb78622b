#pragma once

#include "weilcheck/cyclotomic.hpp"

namespace weilcheck {

/// Jacobi symbol (P/Q) for odd positive Q; (P/1) = 1. Multiplicative in Q,
/// Legendre symbol at primes, 0 when gcd(P,Q) > 1.
int jacobi(long p, long q);

/// 1 when a = 1 (mod 4), i when a = 3 (mod 4). a must be odd.
CycScalar epsilon(long a);

/// G(u,v) = sum over x mod v of exp(2*pi*i*u*x^2/v), exactly, in Q(zeta_v).
CycScalar gauss_sum_bruteforce(long u, long v);

/// Same value via the closed three-case formula after gcd reduction.
/// Square roots enter exactly: sqrt(v) through the quadratic Gauss sum
/// identity in Q(zeta_4v), (1+i)/sqrt(2) as zeta_8.
CycScalar gauss_sum_closed(long u, long v);

/// The positive real square root of v >= 1 as an exact element of
/// Q(zeta_4v), validated against a floating-point check at construction.
CycScalar sqrt_exact(long v);

/// Smallest m >= 1 with x^m = 1. Rejects inputs that are not roots of unity.
long root_order(const CycScalar& x);

/// Multiplicative order of zeta_2p^(-12 - p(p+1)), the image of the center
/// generator under the level-p quantum representation. Equals
/// 2p / gcd(2p, 12 + p(p+1)).
long center_order(long p);

}  // namespace weilcheck
