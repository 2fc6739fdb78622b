#include "weilcheck/battery.hpp"

#include <chrono>
#include <numeric>
#include <sstream>
#include <stdexcept>

#include "weilcheck/arith.hpp"
#include "weilcheck/coinvariants.hpp"
#include "weilcheck/symplectic.hpp"
#include "weilcheck/witt.hpp"

namespace weilcheck::battery {

namespace {

class Timer {
 public:
  Timer() : start_(std::chrono::steady_clock::now()) {}
  long long ms() const {
    return std::chrono::duration_cast<std::chrono::milliseconds>(
               std::chrono::steady_clock::now() - start_)
        .count();
  }

 private:
  std::chrono::steady_clock::time_point start_;
};

}  // namespace

Report chain_defect_battery() {
  Timer timer;
  Report r;
  r.command = "chain-defect";
  r.set_input("k", std::string("2,4,6,8"));
  const CycScalar minus_one = CycScalar::from_int(-1);
  for (int k = 2; k <= 8; k += 2) {
    const CycScalar mu = chain_defect(k);
    r.add_check("mu_is_minus_one_k" + std::to_string(k), mu == minus_one,
                "mu = " + mu.str());
    // closed identity mu = k^{-2} (G(1,2k)/2)^4
    const CycScalar omega =
        gauss_sum_bruteforce(1, 2 * k) * CycScalar::from_mpq(mpq_class(1, 2));
    const CycScalar expected =
        omega.pow(4) * CycScalar::from_mpq(mpq_class(1, static_cast<long>(k) * k));
    r.add_check("mu_matches_gauss_identity_k" + std::to_string(k),
                mu == expected, "k^{-2} (G(1,2k)/2)^4");
  }
  r.runtime_ms = timer.ms();
  return r;
}

Report braid_lifts_battery() {
  Timer timer;
  Report r;
  r.command = "braid-check";
  r.set_input("k", std::string("2,4,6"));
  const BraidPairs pairs = homology_braid_pairs();
  {
    std::ostringstream os;
    for (const auto& [x, y] : pairs.braid) os << x << y << " ";
    r.set_result("braid_pairs", os.str());
  }
  for (int k = 2; k <= 6; k += 2)
    r.add_check("braid_lifts_normalized_k" + std::to_string(k),
                check_braid_lifts(k));
  r.runtime_ms = timer.ms();
  return r;
}

Report gauss_sweep_battery() {
  Timer timer;
  Report r;
  r.command = "gauss";
  r.set_input("v_max", static_cast<long long>(100));
  bool all = true;
  long pairs = 0;
  std::string first_fail;
  for (long v = 1; v <= 100 && all; ++v)
    for (long u = 0; u < v; ++u) {
      ++pairs;
      if (gauss_sum_closed(u, v) != gauss_sum_bruteforce(u, v)) {
        all = false;
        first_fail = "u=" + std::to_string(u) + ",v=" + std::to_string(v);
        break;
      }
    }
  r.set_result("pairs", static_cast<long long>(pairs));
  r.add_check("closed_equals_bruteforce", all,
              all ? std::to_string(pairs) + " pairs" : first_fail);
  r.runtime_ms = timer.ms();
  return r;
}

Report coinvariant_battery() {
  Timer timer;
  Report r;
  r.command = "coinv";
  struct Case {
    int g;
    long p;
    int degree;
    int expected;
  };
  const std::vector<Case> cases = {
      {4, 2, 2, 1}, {4, 3, 2, 0}, {4, 5, 2, 0},
      {4, 2, 1, 0}, {3, 2, 2, 1}, {5, 2, 2, 1}};
  for (const auto& c : cases) {
    const int dim = coinvariant_dim(c.g, c.p, c.degree);
    r.add_check("coinvariant_dim_g" + std::to_string(c.g) + "_p" +
                    std::to_string(c.p) + "_deg" + std::to_string(c.degree),
                dim == c.expected,
                "dim = " + std::to_string(dim) + ", expected " +
                    std::to_string(c.expected));
  }
  r.runtime_ms = timer.ms();
  return r;
}

Report detected_class_battery() {
  Timer timer;
  Report r;
  r.command = "class-n11n22";
  for (int g : {3, 4, 5})
    r.add_check("n11_wedge_n22_nonzero_g" + std::to_string(g),
                class_n11n22_nonzero(g));
  r.runtime_ms = timer.ms();
  return r;
}

Report witt_battery() {
  Timer timer;
  Report r;
  r.command = "witt";
  // order of <-1> is exactly 8
  for (int m = 1; m <= 8; ++m) {
    const BilForm f = BilForm::diagonal(std::vector<long>(m, 3));
    const int cls = witt_class(f).value;
    const bool want_zero = m == 8;
    r.add_check("class_minus_one_pow_" + std::to_string(m),
                want_zero ? cls == 0 : cls == m,
                "class = " + std::to_string(cls));
  }
  const BilForm omega = BilForm::omega();
  r.add_check("omega_not_split", !is_split(omega));
  r.add_check("omega_plus_omega_split", is_split(direct_sum(omega, omega)));
  r.add_check("omega_class_is_4", witt_class(omega).value == 4);
  r.add_check("omega_discriminant_is_3", discriminant(omega) == 3);
  {
    // Gram of diag(3,3,3,3) in the basis e1+e2, e1+e3, e1-e2-e3, e4 equals
    // -omega (+) <1> (+) <-1>
    IntMat p(4, 4);
    const long cols[4][4] = {
        {1, 1, 0, 0}, {1, 0, 1, 0}, {1, -1, -1, 0}, {0, 0, 0, 1}};
    for (int j = 0; j < 4; ++j)
      for (int i = 0; i < 4; ++i) p.set(i, j, cols[j][i]);
    const ModMatrix pm = p.reduced(4);
    const ModMatrix gram = BilForm::diagonal({3, 3, 3, 3}).gram();
    const ModMatrix changed = pm.transpose() * gram * pm;
    ModMatrix minus_omega(2, 2, 4);
    minus_omega.set(0, 0, 2); minus_omega.set(0, 1, 3);
    minus_omega.set(1, 0, 3); minus_omega.set(1, 1, 2);
    const BilForm expected = direct_sum(
        direct_sum(BilForm(minus_omega), BilForm::diagonal({1})),
        BilForm::diagonal({3}));
    r.add_check("rank4_isometry_identity", changed == expected.gram(),
                "summands in basis order: -omega, <1>, <-1>");
  }
  r.runtime_ms = timer.ms();
  return r;
}

Report invariant_bilinear_battery() {
  Timer timer;
  Report r;
  r.command = "invariant-bilinear";
  struct Case {
    int n;
    long p;
    int total, alternating;
  };
  const std::vector<Case> cases = {{2, 3, 2, 0}, {3, 3, 2, 0}, {2, 5, 2, 0},
                                   {2, 2, 2, 1}, {3, 2, 2, 1}, {4, 2, 2, 1}};
  for (const auto& c : cases) {
    const BilinearDims dims = invariant_bilinear_dim(c.n, c.p);
    r.add_check(
        "invariant_bilinear_n" + std::to_string(c.n) + "_p" + std::to_string(c.p),
        dims.total == c.total && dims.alternating == c.alternating,
        "(" + std::to_string(dims.total) + "," + std::to_string(dims.alternating) +
            "), expected (" + std::to_string(c.total) + "," +
            std::to_string(c.alternating) + ")");
  }
  r.runtime_ms = timer.ms();
  return r;
}

Report center_order_battery() {
  Timer timer;
  Report r;
  r.command = "center-order";
  auto gcd_formula = [](long p) {
    const long n = 2 * p;
    long e = (12 + p * (p + 1)) % n;
    long g = std::gcd(n, e);
    return n / g;
  };
  for (long p : {2L, 5L, 7L, 25L, 49L}) {
    const long got = center_order(p);
    const long expected = p == 2 ? 2 : p;
    r.add_check("center_order_p" + std::to_string(p),
                got == expected && got == gcd_formula(p),
                "order = " + std::to_string(got));
  }
  for (int s = 1; s <= 4; ++s) {
    const long p = 12L * (1L << s);
    const long got = center_order(p);
    const long expected = 2L << s;  // 2^{s+1}
    r.add_check("center_order_12x2e" + std::to_string(s),
                got == expected && got == gcd_formula(p),
                "p = " + std::to_string(p) + ", order = " + std::to_string(got));
  }
  long pow3 = 1;
  for (int s = 1; s <= 3; ++s) {
    pow3 *= 3;
    const long p = 12L * pow3;
    const long got = center_order(p);
    r.add_check("center_order_12x3e" + std::to_string(s),
                got == pow3 && got == gcd_formula(p),
                "p = " + std::to_string(p) + ", order = " + std::to_string(got));
  }
  r.runtime_ms = timer.ms();
  return r;
}

namespace {

IntMat random_symmetric(int g, std::uint64_t* state, long span = 2) {
  auto next = [&]() {
    *state = *state * 6364136223846793005ULL + 1442695040888963407ULL;
    return static_cast<long>((*state >> 33) % (2 * span + 1)) - span;
  };
  IntMat b(g, g);
  for (int i = 0; i < g; ++i)
    for (int j = i; j < g; ++j) {
      const long v = next();
      b.set(i, j, v);
      b.set(j, i, v);
    }
  return b;
}

IntMat random_unimodular(int g, std::uint64_t* state) {
  auto next = [&](unsigned long m) {
    *state = *state * 6364136223846793005ULL + 1442695040888963407ULL;
    return static_cast<unsigned long>(*state >> 33) % m;
  };
  IntMat a = IntMat::identity(g);
  const int ops = 2 + static_cast<int>(next(3));
  for (int t = 0; t < ops; ++t) {
    const int i = static_cast<int>(next(static_cast<unsigned long>(g)));
    int j = static_cast<int>(next(static_cast<unsigned long>(g)));
    if (g > 1)
      while (j == i) j = static_cast<int>(next(static_cast<unsigned long>(g)));
    IntMat e = IntMat::identity(g);
    if (g > 1) e.set(i, j, next(2) ? 1 : -1);
    else e.set(0, 0, 1);
    a = a * e;
  }
  if (next(2)) {
    IntMat d = IntMat::identity(g);
    d.set(0, 0, -1);  // det -1 elements are allowed in GL(g, Z)
    a = a * d;
  }
  return a;
}

GenWord random_word(int g, std::uint64_t* state, int min_len, int max_len) {
  auto next = [&](unsigned long m) {
    *state = *state * 6364136223846793005ULL + 1442695040888963407ULL;
    return static_cast<unsigned long>(*state >> 33) % m;
  };
  const int len = min_len + static_cast<int>(next(
                                static_cast<unsigned long>(max_len - min_len + 1)));
  GenWord w;
  for (int t = 0; t < len; ++t) {
    switch (next(3)) {
      case 0: w.push_back(GenUpper{random_symmetric(g, state)}); break;
      case 1: w.push_back(GenGL{random_unimodular(g, state)}); break;
      default: w.push_back(GenS{}); break;
    }
  }
  return w;
}

// exact rewriting moves on adjacent letters, preserving the integer
// symplectic image
void rewrite_once(GenWord& w, int g, std::uint64_t* state) {
  auto next = [&](unsigned long m) {
    *state = *state * 6364136223846793005ULL + 1442695040888963407ULL;
    return static_cast<unsigned long>(*state >> 33) % m;
  };
  if (next(4) == 0) {
    // append S^4 = 1 at a random position
    const std::size_t pos = next(w.size() + 1);
    w.insert(w.begin() + static_cast<long>(pos), 4, GenS{});
    return;
  }
  if (w.size() < 2) return;
  const std::size_t at = next(w.size() - 1);
  GenLetter& x = w[at];
  GenLetter& y = w[at + 1];
  if (auto* ux = std::get_if<GenUpper>(&x)) {
    if (auto* uy = std::get_if<GenUpper>(&y)) {
      // Upper(B1) Upper(B2) = Upper(B1 + B2)
      GenUpper merged{ux->b + uy->b};
      w[at] = merged;
      w.erase(w.begin() + static_cast<long>(at) + 1);
      return;
    }
    if (auto* gy = std::get_if<GenGL>(&y)) {
      // Upper(B) GL(A) = GL(A) Upper(A^{-1} B A^{-T})
      const IntMat ainv = gy->a.unimodular_inverse();
      GenUpper moved{ainv * ux->b * ainv.transpose()};
      GenGL gl = *gy;
      w[at] = gl;
      w[at + 1] = moved;
      return;
    }
    return;
  }
  if (auto* gx = std::get_if<GenGL>(&x)) {
    if (auto* gy = std::get_if<GenGL>(&y)) {
      GenGL merged{gx->a * gy->a};
      w[at] = merged;
      w.erase(w.begin() + static_cast<long>(at) + 1);
      return;
    }
    if (auto* uy = std::get_if<GenUpper>(&y)) {
      // GL(A) Upper(B) = Upper(A B A^T) GL(A)
      GenUpper moved{gx->a * uy->b * gx->a.transpose()};
      GenGL gl = *gx;
      w[at] = moved;
      w[at + 1] = gl;
      return;
    }
    // GL(A) S = S GL((A^T)^{-1})
    GenGL moved{gx->a.transpose().unimodular_inverse()};
    w[at] = GenS{};
    w[at + 1] = moved;
    return;
  }
  // x = S
  if (std::holds_alternative<GenS>(y)) {
    // S S = GL(-1)
    IntMat minus = IntMat::identity(g);
    for (int i = 0; i < g; ++i) minus.set(i, i, -1);
    w[at] = GenGL{minus};
    w.erase(w.begin() + static_cast<long>(at) + 1);
    return;
  }
  if (auto* gy = std::get_if<GenGL>(&y)) {
    // S GL(A) = GL((A^T)^{-1}) S
    GenGL moved{gy->a.transpose().unimodular_inverse()};
    w[at] = moved;
    w[at + 1] = GenS{};
    return;
  }
}

}  // namespace

WordTriple random_word_triple(int g, std::uint64_t* state) {
  WordTriple t;
  t.w1 = random_word(g, state, 1, 3);
  t.w2 = random_word(g, state, 1, 3);
  t.w12 = t.w1;
  t.w12.insert(t.w12.end(), t.w2.begin(), t.w2.end());
  auto next = [&](unsigned long m) {
    *state = *state * 6364136223846793005ULL + 1442695040888963407ULL;
    return static_cast<unsigned long>(*state >> 33) % m;
  };
  const int moves = 2 + static_cast<int>(next(5));
  for (int i = 0; i < moves; ++i) rewrite_once(t.w12, g, state);
  return t;
}

Report cocycle_battery(std::uint64_t seed) {
  Timer timer;
  Report r;
  r.command = "cocycle";
  r.seed = seed;
  r.set_input("trials", static_cast<long long>(50));
  for (int k : {2, 4}) {
    std::uint64_t state = seed ^ (0x9e3779b97f4a7c15ULL * static_cast<std::uint64_t>(k));
    bool all_exact = true, all_r8 = true;
    for (int trial = 0; trial < 50; ++trial) {
      const WordTriple t = random_word_triple(2, &state);
      const CocycleResult res = cocycle_defect(t.w1, t.w2, t.w12, 2, k);
      all_exact = all_exact && res.exact;
      all_r8 = all_r8 && res.eta.pow(8).is_one();
    }
    r.add_check("eta_eighth_power_trivial_g2_k" + std::to_string(k), all_r8,
                "50 seeded word triples");
    r.add_check("eta_extraction_exact_g2_k" + std::to_string(k), all_exact);
  }
  r.runtime_ms = timer.ms();
  return r;
}

Report s2_trace_battery() {
  Timer timer;
  Report r;
  r.command = "s2-trace";
  bool all = true;
  std::string fail;
  for (int g = 1; g <= 4 && all; ++g)
    for (int k = 2; k <= 9; ++k) {
      const long got = s_squared_trace(g, k);
      const long expected = k % 2 == 0 ? (1L << g) : 1;
      if (got != expected) {
        all = false;
        fail = "g=" + std::to_string(g) + ",k=" + std::to_string(k);
        break;
      }
    }
  r.add_check("s2_trace_parity_formula", all,
              all ? "g <= 4, k <= 9" : fail);
  r.runtime_ms = timer.ms();
  return r;
}

Report group_order_battery() {
  Timer timer;
  Report r;
  r.command = "group-order";
  struct Case {
    int g;
    long n;
    std::size_t expected;
  };
  for (const Case& c : {Case{1, 2, 6}, Case{1, 3, 24}, Case{2, 2, 720}}) {
    const auto order = group_order_bfs(humphries_generators(c.g, c.n));
    r.add_check("humphries_order_g" + std::to_string(c.g) + "_n" +
                    std::to_string(c.n),
                order.has_value() && *order == c.expected,
                order ? "order = " + std::to_string(*order) : "cap exceeded");
  }
  r.runtime_ms = timer.ms();
  return r;
}

Report jacobi_reciprocity_battery() {
  Timer timer;
  Report r;
  r.command = "jacobi";
  bool all = true;
  std::string fail;
  for (long p = 1; p <= 99 && all; p += 2)
    for (long q = 1; q <= 99; q += 2) {
      if (std::gcd(p, q) != 1) continue;
      const int lhs = jacobi(p, q) * jacobi(q, p);
      const int rhs = ((p - 1) / 2 * ((q - 1) / 2)) % 2 == 0 ? 1 : -1;
      if (lhs != rhs) {
        all = false;
        fail = "p=" + std::to_string(p) + ",q=" + std::to_string(q);
        break;
      }
    }
  r.add_check("reciprocity_odd_coprime_le_99", all, all ? "" : fail);
  r.runtime_ms = timer.ms();
  return r;
}

std::vector<Report> suite(const std::string& name, std::uint64_t seed) {
  std::vector<Report> out;
  const bool all = name == "all";
  if (all || name == "arith") {
    out.push_back(gauss_sweep_battery());
    out.push_back(center_order_battery());
    out.push_back(jacobi_reciprocity_battery());
  }
  if (all || name == "weil") {
    out.push_back(chain_defect_battery());
    out.push_back(braid_lifts_battery());
    out.push_back(cocycle_battery(seed));
    out.push_back(s2_trace_battery());
  }
  if (all || name == "witt") {
    out.push_back(witt_battery());
  }
  if (all || name == "coinv") {
    out.push_back(coinvariant_battery());
    out.push_back(detected_class_battery());
    out.push_back(invariant_bilinear_battery());
    out.push_back(group_order_battery());
  }
  if (out.empty())
    throw std::invalid_argument("suite: unknown name '" + name + "'");
  return out;
}

}  // namespace weilcheck::battery
