#pragma once

#include <cstdint>
#include <optional>
#include <vector>

#include "weilcheck/modmatrix.hpp"

namespace weilcheck {

/// Symmetric nondegenerate bilinear form over Z/4Z, given by its Gram matrix.
class BilForm {
 public:
  explicit BilForm(const ModMatrix& gram);
  static BilForm diagonal(const std::vector<long>& entries);
  /// The rank-2 form of Gram matrix (2 1; 1 2).
  static BilForm omega();
  /// The split plane (0 1; 1 0).
  static BilForm hyperbolic();

  int rank() const { return gram_.rows(); }
  const ModMatrix& gram() const { return gram_; }
  long det_mod4() const;

 private:
  ModMatrix gram_;  // symmetric, unit determinant, modulus 4
};

/// A pair of equal-rank forms (L; q0, q1).
struct FormTriple {
  BilForm q0;
  BilForm q1;
  FormTriple(BilForm a, BilForm b);
};

/// Element of the Witt ring W(Z/4Z) = Z/8Z, generated by the class of <-1>.
struct WittClass {
  int value = 0;  // mod 8
  WittClass() = default;
  explicit WittClass(int v) : value(((v % 8) + 8) % 8) {}
  WittClass operator+(WittClass rhs) const { return WittClass(value + rhs.value); }
  WittClass operator-(WittClass rhs) const { return WittClass(value - rhs.value); }
  bool operator==(WittClass rhs) const { return value == rhs.value; }
};

/// Orthogonal-sum decomposition counts per the structure result: copies of
/// <1>, <-1>, omega, and split planes.
struct DecomposeCounts {
  int plus = 0;    // <1>
  int minus = 0;   // <-1> = <3>
  int omega = 0;
  int split = 0;   // split planes (0 1; 1 t) or (s 1; 1 0)
};

BilForm direct_sum(const BilForm& f1, const BilForm& f2);

/// True iff a totally isotropic free direct summand of rank n/2 exists.
/// Odd rank is never split. Backtracking over unimodular vectors with mod-2
/// independence pruning; ranks above the cap are rejected.
bool is_split(const BilForm& f, int rank_cap = 6);

DecomposeCounts decompose(const BilForm& f);

/// (minus - plus + 4*omega) mod 8; split planes contribute zero.
WittClass witt_class(const BilForm& f);

/// det(Gram) modulo squares of units: 1 or 3.
long discriminant(const BilForm& f);

/// witt_class(q1) - witt_class(q0).
WittClass v_class(const FormTriple& t);

/// Searches for P with P^T G_f P = G_h. Exhaustive over GL(n, Z/4Z) for
/// n <= 3; seeded random base changes otherwise (trials attempts).
std::optional<ModMatrix> find_isometry(const BilForm& f, const BilForm& h,
                                       std::uint64_t seed = 0,
                                       std::size_t trials = 100000);

/// Reassembles the standard form described by decomposition counts.
BilForm assemble(const DecomposeCounts& c);

}  // namespace weilcheck
