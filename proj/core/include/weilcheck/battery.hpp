#pragma once

#include <cstdint>
#include <string>
#include <vector>

#include "weilcheck/report.hpp"
#include "weilcheck/weil.hpp"

namespace weilcheck::battery {

// One report per verification group; check names are listed in the README
// ledger. Each runs exact computations at pinned tolerances.
Report chain_defect_battery();                   // mu = -1, k in {2,4,6,8}
Report braid_lifts_battery();                    // normalized lifts, k in {2,4,6}
Report gauss_sweep_battery();                    // closed = brute, v <= 100
Report coinvariant_battery();                    // coinvariant dimensions
Report detected_class_battery();                 // n_11 ^ n_22 survives, g in {3,4,5}
Report witt_battery();                           // W(Z/4Z) = Z/8Z generators
Report invariant_bilinear_battery();             // invariant form dimensions
Report center_order_battery();                   // quantum center orders
Report cocycle_battery(std::uint64_t seed);      // eta^8 = 1 on random triples
Report s2_trace_battery();                       // tr S^2 parity formula
Report group_order_battery();                    // BFS orders 6, 24, 720
Report jacobi_reciprocity_battery();             // reciprocity sweep (odd <= 99)

/// Deterministic pseudo-random word triple (w1, w2, w12) with equal
/// symplectic images of w1.w2 and w12, built by exact rewriting moves.
struct WordTriple {
  GenWord w1, w2, w12;
};
WordTriple random_word_triple(int g, std::uint64_t* state);

/// Suite names: all, arith, weil, witt, coinv.
std::vector<Report> suite(const std::string& name, std::uint64_t seed);

}  // namespace weilcheck::battery
