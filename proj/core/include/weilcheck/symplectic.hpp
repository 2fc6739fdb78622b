#pragma once

#include <optional>
#include <vector>

#include "weilcheck/modmatrix.hpp"

namespace weilcheck {

/// Standard symplectic form J_g = (0, 1_g; -1_g, 0) on the basis
/// (a_1..a_g, b_1..b_g), so <a_i, b_i> = 1.
IntMat symplectic_form(int g);
ModMatrix symplectic_form(int g, long modulus);

/// M^T J_g M = J_g over Z/nZ. Throws on shape mismatch.
bool is_symplectic(const ModMatrix& m, int g);
/// Same check over Z.
bool is_symplectic(const IntMat& m, int g);

/// Theta-group membership for an integer symplectic matrix: the diagonals
/// of A^T C and B^T D are even.
bool is_theta_group(const IntMat& m);

/// Symplectic transvection x -> x + <x,v> v with <x,y> = x^T J_g y.
ModMatrix transvection(const std::vector<long>& v, int g, long modulus);

/// The 2g+1 transvections along a_1..a_g, b_1-b_2, ..., b_{g-1}-b_g,
/// b_{g-1}, b_g (just a_1, b_1 when g = 1). They generate Sp(2g, Z/nZ)
/// for the moduli exercised here.
std::vector<ModMatrix> humphries_generators(int g, long modulus);

/// Order of the generated group via breadth-first closure, or nullopt when
/// it exceeds the cap.
std::optional<std::size_t> group_order_bfs(const std::vector<ModMatrix>& gens,
                                           std::size_t cap = 1000000);

/// Lie condition M^T J + J M = 0 (mod p). Throws on odd size.
bool is_sp_lie(const ModMatrix& m, long p);

/// Entrywise reduction Sp(2g, Z/p^{k+1}Z) -> Sp(2g, Z/p^kZ). The modulus of
/// m must be p^{k+1} for some k >= 1.
ModMatrix reduce_mod(const ModMatrix& m, long p);

/// Inverse of a symplectic matrix: J^{-1} M^T J.
ModMatrix symplectic_inverse(const ModMatrix& m, int g);

}  // namespace weilcheck
