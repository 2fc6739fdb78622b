#pragma once

#include <array>
#include <optional>
#include <variant>
#include <vector>

#include "weilcheck/cyclotomic.hpp"
#include "weilcheck/modmatrix.hpp"

namespace weilcheck {

/// Abstract generator letters of Sp(2g, Z):
///   Upper(B) = (1 B; 0 1) with B symmetric,
///   GL(A)    = (A 0; 0 (A^T)^{-1}) with A in GL(g, Z),
///   S        = (0 -1; 1 0).
struct GenUpper {
  IntMat b;
};
struct GenGL {
  IntMat a;
};
struct GenS {};
using GenLetter = std::variant<GenUpper, GenGL, GenS>;
using GenWord = std::vector<GenLetter>;

IntMat letter_symplectic(const GenLetter& letter, int g);
IntMat word_symplectic(const GenWord& word, int g);

/// Dense matrix over Q(zeta_2k) indexed by (Z/kZ)^g in lexicographic order
/// (first coordinate most significant), with a common denominator and a
/// shared formal k-power: the lift of a projective Weil image.
class ProjUnitary {
 public:
  static ProjUnitary identity(int g, int k);
  static ProjUnitary from_entries(int g, int k,
                                  const std::vector<CycScalar>& entries);

  int genus() const { return genus_; }
  int level() const { return level_; }
  std::size_t dim() const { return dim_; }
  int kpow2() const { return kpow2_; }

  CycScalar entry(std::size_t i, std::size_t j) const;

  ProjUnitary operator*(const ProjUnitary& rhs) const;
  ProjUnitary conj_transpose() const;
  ProjUnitary scaled(const CycScalar& s) const;
  ProjUnitary pow(long e) const;

  bool operator==(const ProjUnitary& rhs) const;
  bool operator!=(const ProjUnitary& rhs) const { return !(*this == rhs); }
  bool is_identity() const;

  /// The scalar c with *this == c * rhs, when it exists.
  std::optional<CycScalar> scalar_multiple_of(const ProjUnitary& rhs) const;

  CycScalar trace() const;

  /// Exact unitarity: U^* U equals the identity after k-power folding.
  bool is_unitary() const;

  /// Index of m in the (Z/kZ)^g ordering.
  static std::size_t index_of(const std::vector<long>& m, int g, int k);
  static std::vector<long> tuple_of(std::size_t idx, int g, int k);

 private:
  ProjUnitary(int g, int k);
  int genus_, level_;
  int order_;   // 2k
  int kpow2_;
  std::size_t dim_;
  mpz_class den_;
  std::vector<mpz_class> coeff_;  // dim*dim*order_, row-major
  std::size_t base(std::size_t i, std::size_t j) const {
    return (i * dim_ + j) * static_cast<std::size_t>(order_);
  }
  void canonicalize();
  bool entry_zero(std::size_t i, std::size_t j) const;
};

/// Image of one generator letter under rho_{g,k}:
///   Upper(B) -> diag(q^{<m,Bm>}), q = zeta_2k,
///   GL(A)    -> permutation (delta_{A^T m, n}),
///   S        -> k^{-g/2} (q^{-2<m,n>}).
ProjUnitary rho_generator(const GenLetter& letter, int g, int k);

/// Ordered product of generator images. For odd k every letter must map
/// into the theta group.
ProjUnitary rho_word(const GenWord& word, int g, int k);

struct CocycleResult {
  CycScalar eta;
  bool exact;  // false when the odd-g floating-point fallback was used
};

/// The scalar eta with rho(w1) rho(w2) = eta * rho(w12); requires the
/// symplectic images of w1.w2 and w12 to coincide modulo the level where
/// rho factors (2k for even k, k for odd k).
CocycleResult cocycle_defect(const GenWord& w1, const GenWord& w2,
                             const GenWord& w12, int g, int k);

/// Trace of the permutation m -> -m on (Z/kZ)^g (2^g for even k, 1 for odd).
long s_squared_trace(int g, int k);

/// The six 4x4 integer symplectic matrices of the genus-2 chain curves, in
/// the homology basis (b, f, a, e); T_d = T_e.
struct HomologyTwists {
  IntMat ta, tb, tc, td, te, tf;
};
HomologyTwists homology_twist_matrices();

/// Which pairs among {a,b,c,e,f} braid (one homology intersection) and
/// which commute, derived from the homology matrices.
struct BraidPairs {
  std::vector<std::pair<char, char>> braid;
  std::vector<std::pair<char, char>> commute;
};
BraidPairs homology_braid_pairs();

/// The five normalized k^2 x k^2 lifts R_a, R_b, R_c, R_d = R_e, R_f over
/// Q(zeta_2k); k must be even.
struct ChainLift {
  ProjUnitary ra, rb, rc, rd, re, rf;
};
ChainLift chain_lift_matrices(int k);

/// All braid-1 relations for intersecting pairs and commutation for
/// disjoint pairs, as exact matrix identities.
bool check_braid_lifts(int k);

/// The scalar mu with (R_a R_b R_c)^4 = mu * R_e R_d, exact; equals
/// k^{-2} (G(1,2k)/2)^4 and -1 for even k.
CycScalar chain_defect(int k);

/// Genus-1 multiplier system on the theta group, by the two case formulas.
CycScalar multiplier_zeta_g1(const IntMat& gamma);

/// Multiplier value as a Gauss sum, det^{-1/2}(D) sum_l exp(pi i <l, B D^{-1} l>),
/// for invertible D with det D > 0 and g <= 2.
CycScalar multiplier_zeta_gauss(const IntMat& gamma);

}  // namespace weilcheck
