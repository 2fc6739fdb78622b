#pragma once

#include <string>
#include <vector>

#include "weilcheck/modmatrix.hpp"

namespace weilcheck {

/// Ordered basis of the Lie algebra sp_2g(p): the u-block (i <= j), the
/// l-block (i <= j), then the full matrix block m_{ij} (r_{ij} for i != j,
/// n_{ii} on the diagonal), each lexicographic in (i, j). Cardinality
/// g(2g+1).
class SpBasis {
 public:
  SpBasis(int g, long p);

  int genus() const { return g_; }
  long prime() const { return p_; }
  int dim() const { return static_cast<int>(elements_.size()); }

  const ModMatrix& element(int idx) const { return elements_[idx]; }
  const std::string& label(int idx) const { return labels_[idx]; }
  int index_u(int i, int j) const;   // 1-based labels, i <= j
  int index_l(int i, int j) const;
  int index_m(int i, int j) const;   // r_{ij} for i != j, n_{ii} for i = j

  /// Coordinates of a Lie algebra element in this basis; validates the Lie
  /// condition.
  std::vector<long> coords(const ModMatrix& lie) const;
  ModMatrix from_coords(const std::vector<long>& c) const;

 private:
  int g_;
  long p_;
  std::vector<ModMatrix> elements_;
  std::vector<std::string> labels_;
};

/// sigma A sigma^{-1} mod p. sigma must be symplectic mod p.
ModMatrix conj_action(const ModMatrix& sigma, const ModMatrix& lie);

/// The induced matrix of sigma on sp_2g(p) in the given basis:
/// column t holds coords(sigma . b_t).
std::vector<std::vector<long>> action_matrix(const ModMatrix& sigma,
                                             const SpBasis& basis);

/// Index map for the wedge basis {b_i ^ b_j : i < j}.
int wedge_index(int i, int j, int n);
int wedge_dim(int n);

/// The induced matrix on the exterior square, columns indexed by pairs.
std::vector<std::vector<long>> wedge_action_matrix(const ModMatrix& sigma,
                                                   const SpBasis& basis);

/// dim of the coinvariant space M / span{sigma_i v - v} over F_p, where M is
/// sp_2g(p) (degree 1) or its exterior square (degree 2), and sigma_i ranges
/// over the given generators (Humphries transvections by default).
int coinvariant_dim(int g, long p, int degree);
int coinvariant_dim(int g, long p, int degree,
                    const std::vector<ModMatrix>& generators);

/// True iff the wedge vector n_11 ^ n_22 lies outside the relation subspace
/// (p = 2).
bool class_n11n22_nonzero(int g);

/// Dimension of conjugation-invariant bilinear forms on M_n(F_p) and of its
/// alternating subspace.
struct BilinearDims {
  int total = 0;
  int alternating = 0;
};
BilinearDims invariant_bilinear_dim(int n, long p);

/// Verifies that the GL(g) block subgroup diag(x, (x^T)^{-1}) preserves the
/// three-block splitting of sp_2g(p) and acts by conjugation on the matrix
/// block, x A x^T on the u-block, and (x^T)^{-1} A x^{-1} on the l-block.
bool gl_block_decomposition_check(int g, long p);

/// Auxiliary symplectic elements used in the coinvariant reductions.
ModMatrix tau_u(int i, int j, int g, long p);   // (1, e_ii + e_jj; 0, 1)
ModMatrix tau_l(int i, int j, int g, long p);   // (1, 0; e_ii + e_jj, 1)
ModMatrix tau_l_single(int i, int g, long p);   // (1, 0; e_ii, 1)
ModMatrix a_map(int i, int j, int g, long p);   // (1 - e_ji, 0; 0, 1 + e_ij)
ModMatrix exchange_map(int i, int j, int g, long p);  // a_i -> -b_i, b_i -> a_i (same for j)

}  // namespace weilcheck
