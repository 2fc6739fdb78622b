// Command-line front end: every verification in the library is exposed as a
// subcommand emitting a machine-readable report (text, json or csv).
//
// Exit codes: 0 all checks pass, 1 some check failed, 2 usage error.

#include <chrono>
#include <cstdlib>
#include <fstream>
#include <iostream>
#include <numeric>
#include <sstream>
#include <string>

#include <CLI11.hpp>

#include "weilcheck/arith.hpp"
#include "weilcheck/battery.hpp"
#include "weilcheck/coinvariants.hpp"
#include "weilcheck/report.hpp"
#include "weilcheck/symplectic.hpp"
#include "weilcheck/weil.hpp"
#include "weilcheck/witt.hpp"

namespace {

using namespace weilcheck;

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

std::string load_arg(const std::string& s) {
  if (s.empty() || s[0] != '@') return s;
  std::ifstream in(s.substr(1));
  if (!in) throw CLI::ValidationError("cannot open file '" + s.substr(1) + "'");
  std::stringstream buf;
  buf << in.rdbuf();
  return buf.str();
}

int split_rank_cap() {
  if (const char* env = std::getenv("WEILCHECK_RANK_CAP"))
    return std::atoi(env);
  return 6;
}

void emit(const Report& r, const std::string& format, bool first) {
  if (format == "json") {
    std::cout << to_json(r) << "\n";
  } else if (format == "csv") {
    std::cout << to_csv(r, first);
  } else {
    std::cout << to_text(r);
  }
}

int finish(const std::vector<Report>& reports, const std::string& format) {
  bool first = true;
  bool ok = true;
  for (const auto& r : reports) {
    emit(r, format, first);
    first = false;
    ok = ok && r.all_pass();
  }
  return ok ? 0 : 1;
}

}  // namespace

int main(int argc, char** argv) {
  CLI::App app{
      "weilcheck: exact verification of Weil representation lifts, the Witt "
      "ring of Z/4Z, and symplectic homology coinvariants"};
  app.require_subcommand(1);
  app.fallthrough();

  std::string format = "text";
  app.add_option("--format", format, "output format")
      ->check(CLI::IsMember({"text", "json", "csv"}));
  std::uint64_t seed = 0;
  app.add_option("--seed", seed, "seed for randomized property checks");

  // ---- gauss ----
  auto* gauss_cmd = app.add_subcommand("gauss", "Gauss sum G(u,v), closed vs brute force");
  long gauss_u = 0, gauss_v = 1;
  gauss_cmd->add_option("--u", gauss_u)->required();
  gauss_cmd->add_option("--v", gauss_v)->required();

  // ---- jacobi ----
  auto* jacobi_cmd = app.add_subcommand("jacobi", "Jacobi symbol (P/Q)");
  long jac_p = 0, jac_q = 1;
  jacobi_cmd->add_option("--p", jac_p)->required();
  jacobi_cmd->add_option("--q", jac_q)->required();

  // ---- center-order ----
  auto* center_cmd =
      app.add_subcommand("center-order", "order of the quantum image of the center");
  long center_p = 2;
  center_cmd->add_option("--p", center_p)->required();

  // ---- sp-check ----
  auto* sp_cmd = app.add_subcommand("sp-check", "symplectic membership over Z/nZ");
  std::string sp_matrix;
  long sp_n = 2;
  int sp_g = 1;
  sp_cmd->add_option("--matrix", sp_matrix)->required();
  sp_cmd->add_option("--n", sp_n)->required();
  sp_cmd->add_option("--g", sp_g)->required();

  // ---- theta-check ----
  auto* theta_cmd = app.add_subcommand("theta-check", "theta group membership over Z");
  std::string theta_matrix;
  theta_cmd->add_option("--matrix", theta_matrix)->required();

  // ---- group-order ----
  auto* order_cmd =
      app.add_subcommand("group-order", "BFS order of the Humphries transvection group");
  int order_g = 1;
  long order_n = 2;
  std::size_t order_cap = 1000000;
  order_cmd->add_option("--g", order_g)->required();
  order_cmd->add_option("--n", order_n)->required();
  order_cmd->add_option("--cap", order_cap);

  // ---- chain-defect ----
  auto* chain_cmd = app.add_subcommand("chain-defect", "lift defect of the chain relation");
  int chain_k = 2;
  chain_cmd->add_option("--k", chain_k)->required();

  // ---- braid-check ----
  auto* braid_cmd = app.add_subcommand("braid-check", "braid relations of the chain lifts");
  int braid_k = 2;
  braid_cmd->add_option("--k", braid_k)->required();

  // ---- s2-trace ----
  auto* s2_cmd = app.add_subcommand("s2-trace", "trace of the involution m -> -m");
  int s2_g = 1, s2_k = 2;
  s2_cmd->add_option("--g", s2_g)->required();
  s2_cmd->add_option("--k", s2_k)->required();

  // ---- cocycle ----
  auto* cocycle_cmd =
      app.add_subcommand("cocycle", "eta^8 = 1 on seeded random word triples");
  int coc_g = 2, coc_k = 2, coc_trials = 50;
  cocycle_cmd->add_option("--g", coc_g);
  cocycle_cmd->add_option("--k", coc_k)->required();
  cocycle_cmd->add_option("--trials", coc_trials);

  // ---- multiplier ----
  auto* mult_cmd = app.add_subcommand("multiplier", "theta multiplier system value");
  std::string mult_matrix, mult_method = "both";
  mult_cmd->add_option("--matrix", mult_matrix)->required();
  mult_cmd->add_option("--method", mult_method)
      ->check(CLI::IsMember({"case", "gauss", "both"}));

  // ---- coinv ----
  auto* coinv_cmd = app.add_subcommand("coinv", "coinvariant dimension of sp_2g(p) modules");
  int cv_g = 2, cv_deg = 2;
  long cv_p = 2;
  coinv_cmd->add_option("--g", cv_g)->required();
  coinv_cmd->add_option("--p", cv_p)->required();
  coinv_cmd->add_option("--deg", cv_deg)->required();

  // ---- class-n11n22 ----
  auto* cls_cmd = app.add_subcommand("class-n11n22",
                                     "nontriviality of n_11 ^ n_22 in the coinvariants");
  int cls_g = 3;
  cls_cmd->add_option("--g", cls_g)->required();

  // ---- invariant-bilinear ----
  auto* bil_cmd = app.add_subcommand("invariant-bilinear",
                                     "conjugation-invariant bilinear forms on M_n(F_p)");
  int bil_n = 2;
  long bil_p = 2;
  bil_cmd->add_option("--n", bil_n)->required();
  bil_cmd->add_option("--p", bil_p)->required();

  // ---- witt ----
  auto* witt_cmd = app.add_subcommand("witt", "Witt ring of Z/4Z");
  witt_cmd->require_subcommand(1);
  auto* witt_classify = witt_cmd->add_subcommand("classify", "class, splitness, discriminant");
  std::string wc_gram;
  witt_classify->add_option("--gram", wc_gram)->required();
  auto* witt_split = witt_cmd->add_subcommand("split", "split form detection");
  std::string ws_gram;
  witt_split->add_option("--gram", ws_gram)->required();
  auto* witt_sum = witt_cmd->add_subcommand("sum", "orthogonal sum");
  std::string wsum_a, wsum_b;
  witt_sum->add_option("--gram", wsum_a)->required();
  witt_sum->add_option("--with", wsum_b)->required();
  auto* witt_vclass = witt_cmd->add_subcommand("vclass", "class of a triple (L; q0, q1)");
  std::string wv_q0, wv_q1;
  witt_vclass->add_option("--q0", wv_q0)->required();
  witt_vclass->add_option("--q1", wv_q1)->required();

  // ---- suite ----
  auto* suite_cmd = app.add_subcommand("suite", "acceptance batteries, one report per check group");
  std::string suite_name = "all";
  suite_cmd->add_option("name", suite_name)
      ->check(CLI::IsMember({"all", "arith", "weil", "witt", "coinv"}));

  CLI11_PARSE(app, argc, argv);

  try {
    std::vector<Report> reports;

    if (*gauss_cmd) {
      Timer t;
      Report r;
      r.command = "gauss";
      r.seed = seed;
      r.set_input("u", static_cast<long long>(gauss_u));
      r.set_input("v", static_cast<long long>(gauss_v));
      const CycScalar closed = gauss_sum_closed(gauss_u, gauss_v);
      const CycScalar brute = gauss_sum_bruteforce(gauss_u, gauss_v);
      r.set_result("value", brute.str());
      r.add_check("closed_equals_bruteforce", closed == brute,
                  "closed form: " + closed.str());
      r.runtime_ms = t.ms();
      reports.push_back(std::move(r));
    } else if (*jacobi_cmd) {
      Timer t;
      Report r;
      r.command = "jacobi";
      r.seed = seed;
      r.set_input("p", static_cast<long long>(jac_p));
      r.set_input("q", static_cast<long long>(jac_q));
      r.set_result("value", static_cast<long long>(jacobi(jac_p, jac_q)));
      r.runtime_ms = t.ms();
      reports.push_back(std::move(r));
    } else if (*center_cmd) {
      Timer t;
      Report r;
      r.command = "center-order";
      r.seed = seed;
      r.set_input("p", static_cast<long long>(center_p));
      const long got = center_order(center_p);
      r.set_result("order", static_cast<long long>(got));
      const long n = 2 * center_p;
      long e = (12 + center_p * (center_p + 1)) % n;
      r.add_check("matches_gcd_formula", got == n / std::gcd(n, e));
      r.runtime_ms = t.ms();
      reports.push_back(std::move(r));
    } else if (*sp_cmd) {
      Timer t;
      Report r;
      r.command = "sp-check";
      r.seed = seed;
      r.set_input("matrix", sp_matrix);
      r.set_input("n", static_cast<long long>(sp_n));
      r.set_input("g", static_cast<long long>(sp_g));
      const IntMat m = parse_matrix(load_arg(sp_matrix));
      const bool ok = is_symplectic(m.reduced(sp_n), sp_g);
      r.set_result("symplectic", ok);
      r.add_check("is_symplectic", ok);
      r.runtime_ms = t.ms();
      reports.push_back(std::move(r));
    } else if (*theta_cmd) {
      Timer t;
      Report r;
      r.command = "theta-check";
      r.seed = seed;
      r.set_input("matrix", theta_matrix);
      const IntMat m = parse_matrix(load_arg(theta_matrix));
      const bool ok = is_theta_group(m);
      r.set_result("theta_group", ok);
      r.add_check("is_theta_group", ok);
      r.runtime_ms = t.ms();
      reports.push_back(std::move(r));
    } else if (*order_cmd) {
      Timer t;
      Report r;
      r.command = "group-order";
      r.seed = seed;
      r.set_input("g", static_cast<long long>(order_g));
      r.set_input("n", static_cast<long long>(order_n));
      r.set_input("cap", static_cast<long long>(order_cap));
      const auto order =
          group_order_bfs(humphries_generators(order_g, order_n), order_cap);
      if (order)
        r.set_result("order", static_cast<long long>(*order));
      else
        r.set_result("order", std::string("overflow"));
      r.add_check("within_cap", order.has_value());
      r.runtime_ms = t.ms();
      reports.push_back(std::move(r));
    } else if (*chain_cmd) {
      Timer t;
      Report r;
      r.command = "chain-defect";
      r.seed = seed;
      r.set_input("k", static_cast<long long>(chain_k));
      const CycScalar mu = chain_defect(chain_k);
      r.set_result("mu", mu.str());
      r.add_check("mu_is_minus_one", mu == CycScalar::from_int(-1));
      const CycScalar omega = gauss_sum_bruteforce(1, 2 * chain_k) *
                              CycScalar::from_mpq(mpq_class(1, 2));
      r.add_check("mu_matches_gauss_identity",
                  mu == omega.pow(4) * CycScalar::from_mpq(mpq_class(
                            1, static_cast<long>(chain_k) * chain_k)));
      r.add_check("braid_lifts_normalized", check_braid_lifts(chain_k));
      r.runtime_ms = t.ms();
      reports.push_back(std::move(r));
    } else if (*braid_cmd) {
      Timer t;
      Report r;
      r.command = "braid-check";
      r.seed = seed;
      r.set_input("k", static_cast<long long>(braid_k));
      const BraidPairs pairs = homology_braid_pairs();
      std::ostringstream os;
      for (const auto& [x, y] : pairs.braid) os << x << y << " ";
      r.set_result("braid_pairs", os.str());
      r.add_check("braid_lifts_normalized", check_braid_lifts(braid_k));
      r.runtime_ms = t.ms();
      reports.push_back(std::move(r));
    } else if (*s2_cmd) {
      Timer t;
      Report r;
      r.command = "s2-trace";
      r.seed = seed;
      r.set_input("g", static_cast<long long>(s2_g));
      r.set_input("k", static_cast<long long>(s2_k));
      const long got = s_squared_trace(s2_g, s2_k);
      r.set_result("trace", static_cast<long long>(got));
      const long expected = s2_k % 2 == 0 ? (1L << s2_g) : 1;
      r.add_check("matches_parity_formula", got == expected,
                  "expected " + std::to_string(expected));
      r.runtime_ms = t.ms();
      reports.push_back(std::move(r));
    } else if (*cocycle_cmd) {
      Timer t;
      Report r;
      r.command = "cocycle";
      r.seed = seed;
      r.set_input("g", static_cast<long long>(coc_g));
      r.set_input("k", static_cast<long long>(coc_k));
      r.set_input("trials", static_cast<long long>(coc_trials));
      std::uint64_t state =
          seed ^ (0x9e3779b97f4a7c15ULL * static_cast<std::uint64_t>(coc_k));
      bool all_r8 = true, all_exact = true;
      std::string sample;
      for (int i = 0; i < coc_trials; ++i) {
        const auto triple = battery::random_word_triple(coc_g, &state);
        const CocycleResult res = cocycle_defect(triple.w1, triple.w2, triple.w12,
                                                 coc_g, coc_k);
        if (i == 0) sample = res.eta.str();
        all_r8 = all_r8 && res.eta.pow(8).is_one();
        all_exact = all_exact && res.exact;
      }
      r.set_result("first_eta", sample);
      r.set_result("exact_arithmetic", all_exact);
      r.add_check("eta_eighth_power_trivial", all_r8);
      r.runtime_ms = t.ms();
      reports.push_back(std::move(r));
    } else if (*mult_cmd) {
      Timer t;
      Report r;
      r.command = "multiplier";
      r.seed = seed;
      r.set_input("matrix", mult_matrix);
      r.set_input("method", mult_method);
      const IntMat m = parse_matrix(load_arg(mult_matrix));
      const bool want_case = mult_method != "gauss" && m.rows() == 2;
      const bool want_gauss = mult_method != "case";
      CycScalar zeta = CycScalar::one();
      if (want_case) {
        zeta = multiplier_zeta_g1(m);
        r.set_result("zeta_case", zeta.str());
      }
      if (want_gauss) {
        const CycScalar zg = multiplier_zeta_gauss(m);
        r.set_result("zeta_gauss", zg.str());
        if (want_case)
          r.add_check("methods_agree", zeta == zg);
        zeta = zg;
      }
      r.add_check("value_in_R8", zeta.pow(8).is_one());
      r.runtime_ms = t.ms();
      reports.push_back(std::move(r));
    } else if (*coinv_cmd) {
      Timer t;
      Report r;
      r.command = "coinv";
      r.seed = seed;
      r.set_input("g", static_cast<long long>(cv_g));
      r.set_input("p", static_cast<long long>(cv_p));
      r.set_input("deg", static_cast<long long>(cv_deg));
      r.set_result("dim", static_cast<long long>(coinvariant_dim(cv_g, cv_p, cv_deg)));
      r.runtime_ms = t.ms();
      reports.push_back(std::move(r));
    } else if (*cls_cmd) {
      Timer t;
      Report r;
      r.command = "class-n11n22";
      r.seed = seed;
      r.set_input("g", static_cast<long long>(cls_g));
      const bool nz = class_n11n22_nonzero(cls_g);
      r.set_result("nonzero", nz);
      r.add_check("n11_wedge_n22_nonzero", nz);
      r.runtime_ms = t.ms();
      reports.push_back(std::move(r));
    } else if (*bil_cmd) {
      Timer t;
      Report r;
      r.command = "invariant-bilinear";
      r.seed = seed;
      r.set_input("n", static_cast<long long>(bil_n));
      r.set_input("p", static_cast<long long>(bil_p));
      const BilinearDims dims = invariant_bilinear_dim(bil_n, bil_p);
      r.set_result("total", static_cast<long long>(dims.total));
      r.set_result("alternating", static_cast<long long>(dims.alternating));
      r.runtime_ms = t.ms();
      reports.push_back(std::move(r));
    } else if (*witt_cmd) {
      Timer t;
      Report r;
      r.seed = seed;
      if (*witt_classify) {
        r.command = "witt classify";
        r.set_input("gram", wc_gram);
        const BilForm f(parse_matrix(load_arg(wc_gram)).reduced(4));
        r.set_result("class", static_cast<long long>(witt_class(f).value));
        const int cap = split_rank_cap();
        if (f.rank() <= cap && f.rank() % 2 == 0)
          r.set_result("split", is_split(f, cap));
        else if (f.rank() % 2 != 0)
          r.set_result("split", false);
        else
          r.set_result("split", std::string("skipped: rank exceeds cap"));
        r.set_result("discriminant", static_cast<long long>(discriminant(f)));
      } else if (*witt_split) {
        r.command = "witt split";
        r.set_input("gram", ws_gram);
        const BilForm f(parse_matrix(load_arg(ws_gram)).reduced(4));
        r.set_result("split", is_split(f, split_rank_cap()));
      } else if (*witt_sum) {
        r.command = "witt sum";
        r.set_input("gram", wsum_a);
        r.set_input("with", wsum_b);
        const BilForm a(parse_matrix(load_arg(wsum_a)).reduced(4));
        const BilForm b(parse_matrix(load_arg(wsum_b)).reduced(4));
        const BilForm s = direct_sum(a, b);
        r.set_result("gram", format_matrix(s.gram()));
        r.set_result("class", static_cast<long long>(witt_class(s).value));
        r.add_check("class_additive",
                    witt_class(s) == witt_class(a) + witt_class(b));
      } else {
        r.command = "witt vclass";
        r.set_input("q0", wv_q0);
        r.set_input("q1", wv_q1);
        const FormTriple triple(BilForm(parse_matrix(load_arg(wv_q0)).reduced(4)),
                                BilForm(parse_matrix(load_arg(wv_q1)).reduced(4)));
        r.set_result("vclass", static_cast<long long>(v_class(triple).value));
      }
      r.runtime_ms = t.ms();
      reports.push_back(std::move(r));
    } else if (*suite_cmd) {
      reports = battery::suite(suite_name, seed);
      for (auto& r : reports) r.seed = seed;
    }

    return finish(reports, format);
  } catch (const std::invalid_argument& e) {
    std::cerr << "usage error: " << e.what() << "\n";
    return 2;
  } catch (const std::exception& e) {
    std::cerr << "error: " << e.what() << "\n";
    return 1;
  }
}
