#include "weilcheck/weil.hpp"

#include <cmath>
#include <complex>
#include <numeric>
#include <stdexcept>

#include "weilcheck/arith.hpp"
#include "weilcheck/symplectic.hpp"

namespace weilcheck {

namespace {

std::size_t pow_sz(int k, int g) {
  std::size_t r = 1;
  for (int i = 0; i < g; ++i) r *= static_cast<std::size_t>(k);
  return r;
}

long mod2k(long e, int k) {
  const long n = 2L * k;
  e %= n;
  if (e < 0) e += n;
  return e;
}

}  // namespace

IntMat letter_symplectic(const GenLetter& letter, int g) {
  if (std::holds_alternative<GenS>(letter)) {
    IntMat m(2 * g, 2 * g);
    for (int i = 0; i < g; ++i) {
      m.set(i, g + i, -1);
      m.set(g + i, i, 1);
    }
    return m;
  }
  IntMat m = IntMat::identity(2 * g);
  if (const auto* up = std::get_if<GenUpper>(&letter)) {
    const IntMat& b = up->b;
    if (b.rows() != g || b.cols() != g || b != b.transpose())
      throw std::invalid_argument("letter_symplectic: B must be symmetric g x g");
    for (int i = 0; i < g; ++i)
      for (int j = 0; j < g; ++j) m.set(i, g + j, b.at(i, j));
    return m;
  }
  const auto& gl = std::get<GenGL>(letter);
  const IntMat& a = gl.a;
  if (a.rows() != g || a.cols() != g)
    throw std::invalid_argument("letter_symplectic: A must be g x g");
  const IntMat ainv = a.unimodular_inverse();  // throws unless det = +-1
  for (int i = 0; i < g; ++i)
    for (int j = 0; j < g; ++j) {
      m.set(i, j, a.at(i, j));
      m.set(g + i, g + j, ainv.at(j, i));  // (A^T)^{-1} = (A^{-1})^T
    }
  return m;
}

IntMat word_symplectic(const GenWord& word, int g) {
  IntMat acc = IntMat::identity(2 * g);
  for (const auto& letter : word) acc = acc * letter_symplectic(letter, g);
  return acc;
}

ProjUnitary::ProjUnitary(int g, int k)
    : genus_(g), level_(k), order_(2 * k), kpow2_(0), dim_(pow_sz(k, g)),
      den_(1), coeff_(dim_ * dim_ * static_cast<std::size_t>(order_), 0) {
  if (g < 1 || k < 2)
    throw std::invalid_argument("ProjUnitary: need g >= 1 and k >= 2");
}

ProjUnitary ProjUnitary::identity(int g, int k) {
  ProjUnitary u(g, k);
  for (std::size_t i = 0; i < u.dim_; ++i) u.coeff_[u.base(i, i)] = 1;
  return u;
}

std::size_t ProjUnitary::index_of(const std::vector<long>& m, int g, int k) {
  std::size_t idx = 0;
  for (int i = 0; i < g; ++i) {
    long v = m[static_cast<std::size_t>(i)] % k;
    if (v < 0) v += k;
    idx = idx * static_cast<std::size_t>(k) + static_cast<std::size_t>(v);
  }
  return idx;
}

std::vector<long> ProjUnitary::tuple_of(std::size_t idx, int g, int k) {
  std::vector<long> m(static_cast<std::size_t>(g));
  for (int i = g - 1; i >= 0; --i) {
    m[static_cast<std::size_t>(i)] = static_cast<long>(idx % static_cast<std::size_t>(k));
    idx /= static_cast<std::size_t>(k);
  }
  return m;
}

ProjUnitary ProjUnitary::from_entries(int g, int k,
                                      const std::vector<CycScalar>& entries) {
  ProjUnitary u(g, k);
  if (entries.size() != u.dim_ * u.dim_)
    throw std::invalid_argument("ProjUnitary: wrong entry count");
  // shared formal k-power; entries must agree on it (zeros are neutral)
  int kpow2 = 0;
  bool kpow_set = false;
  for (const auto& e : entries) {
    if (e.raw_zero()) continue;
    if (!kpow_set) {
      kpow2 = e.kpow2();
      kpow_set = true;
    } else if (e.kpow2() != kpow2) {
      throw std::invalid_argument("ProjUnitary: mixed k-powers in entries");
    }
    if (e.kpow2() != 0 && e.kbase() != k)
      throw std::invalid_argument("ProjUnitary: entry kbase differs from level");
  }
  u.kpow2_ = kpow2;
  mpz_class den = 1;
  for (const auto& e : entries)
    if (!e.raw_zero()) den = lcm(den, e.raw_den());
  u.den_ = den;
  for (std::size_t i = 0; i < u.dim_; ++i)
    for (std::size_t j = 0; j < u.dim_; ++j) {
      const CycScalar& e = entries[i * u.dim_ + j];
      if (e.raw_zero()) continue;
      CycScalar p = e;
      if (p.order() != u.order_) {
        if (u.order_ % p.order() != 0)
          throw std::invalid_argument("ProjUnitary: entry order does not divide 2k");
        p = p.promoted(u.order_);
      }
      const mpz_class scale = den / p.raw_den();
      for (int t = 0; t < u.order_; ++t)
        u.coeff_[u.base(i, j) + static_cast<std::size_t>(t)] =
            p.raw_coeffs()[static_cast<std::size_t>(t)] * scale;
    }
  u.canonicalize();
  return u;
}

void ProjUnitary::canonicalize() {
  if (kpow2_ != 0 && kpow2_ % 2 == 0) {
    const int e = kpow2_ / 2;
    mpz_class f;
    mpz_ui_pow_ui(f.get_mpz_t(), static_cast<unsigned long>(level_),
                  static_cast<unsigned long>(e > 0 ? e : -e));
    if (e > 0)
      for (auto& c : coeff_) c *= f;
    else
      den_ *= f;
    kpow2_ = 0;
  }
  mpz_class g = den_;
  for (const auto& c : coeff_) {
    if (c == 0) continue;
    mpz_gcd(g.get_mpz_t(), g.get_mpz_t(), c.get_mpz_t());
    if (g == 1) return;
  }
  if (g > 1) {
    for (auto& c : coeff_) c /= g;
    den_ /= g;
  }
}

CycScalar ProjUnitary::entry(std::size_t i, std::size_t j) const {
  std::vector<mpz_class> coeffs(coeff_.begin() + static_cast<long>(base(i, j)),
                                coeff_.begin() + static_cast<long>(base(i, j)) + order_);
  CycScalar v = CycScalar::from_coeffs(order_, std::move(coeffs), den_);
  if (kpow2_ != 0) v = CycScalar::with_kpow(v, kpow2_, level_);
  return v;
}

bool ProjUnitary::entry_zero(std::size_t i, std::size_t j) const {
  const std::size_t b = base(i, j);
  for (int t = 0; t < order_; ++t)
    if (coeff_[b + static_cast<std::size_t>(t)] != 0) return false;
  return true;
}

ProjUnitary ProjUnitary::operator*(const ProjUnitary& rhs) const {
  if (genus_ != rhs.genus_ || level_ != rhs.level_)
    throw std::invalid_argument("ProjUnitary: mixed shapes");
  ProjUnitary r(genus_, level_);
  r.kpow2_ = kpow2_ + rhs.kpow2_;
  r.den_ = den_ * rhs.den_;
  const int n = order_;
  // support lists keep diagonal/permutation factors cheap
  std::vector<std::vector<int>> sup_a(dim_ * dim_), sup_b(dim_ * dim_);
  for (std::size_t e = 0; e < dim_ * dim_; ++e) {
    for (int t = 0; t < n; ++t) {
      if (coeff_[e * static_cast<std::size_t>(n) + static_cast<std::size_t>(t)] != 0)
        sup_a[e].push_back(t);
      if (rhs.coeff_[e * static_cast<std::size_t>(n) + static_cast<std::size_t>(t)] != 0)
        sup_b[e].push_back(t);
    }
  }
  for (std::size_t i = 0; i < dim_; ++i)
    for (std::size_t j = 0; j < dim_; ++j) {
      const std::size_t out = r.base(i, j);
      for (std::size_t t = 0; t < dim_; ++t) {
        const auto& sa = sup_a[i * dim_ + t];
        if (sa.empty()) continue;
        const auto& sb = sup_b[t * dim_ + j];
        if (sb.empty()) continue;
        const std::size_t ba = base(i, t);
        const std::size_t bb = rhs.base(t, j);
        for (int s : sa) {
          const mpz_class& av = coeff_[ba + static_cast<std::size_t>(s)];
          for (int u : sb) {
            int idx = s + u;
            if (idx >= n) idx -= n;
            mpz_addmul(r.coeff_[out + static_cast<std::size_t>(idx)].get_mpz_t(),
                       av.get_mpz_t(),
                       rhs.coeff_[bb + static_cast<std::size_t>(u)].get_mpz_t());
          }
        }
      }
    }
  r.canonicalize();
  return r;
}

ProjUnitary ProjUnitary::conj_transpose() const {
  ProjUnitary r(genus_, level_);
  r.kpow2_ = kpow2_;
  r.den_ = den_;
  const int n = order_;
  for (std::size_t i = 0; i < dim_; ++i)
    for (std::size_t j = 0; j < dim_; ++j) {
      const std::size_t src = base(i, j), dst = r.base(j, i);
      for (int t = 0; t < n; ++t)
        r.coeff_[dst + static_cast<std::size_t>((n - t) % n)] =
            coeff_[src + static_cast<std::size_t>(t)];
    }
  return r;
}

ProjUnitary ProjUnitary::scaled(const CycScalar& s) const {
  CycScalar sc = s;
  if (sc.order() != order_) {
    const int m = std::lcm(sc.order(), order_);
    if (m != order_)
      throw std::invalid_argument("ProjUnitary: scalar order must divide 2k");
    sc = sc.promoted(order_);
  }
  if (sc.kpow2() != 0 && sc.kbase() != level_)
    throw std::invalid_argument("ProjUnitary: scalar kbase mismatch");
  ProjUnitary r(genus_, level_);
  r.kpow2_ = kpow2_ + sc.kpow2();
  r.den_ = den_ * sc.raw_den();
  const int n = order_;
  for (std::size_t e = 0; e < dim_ * dim_; ++e) {
    const std::size_t b = e * static_cast<std::size_t>(n);
    for (int t = 0; t < n; ++t) {
      const mpz_class& av = coeff_[b + static_cast<std::size_t>(t)];
      if (av == 0) continue;
      for (int u = 0; u < n; ++u) {
        const mpz_class& bv = sc.raw_coeffs()[static_cast<std::size_t>(u)];
        if (bv == 0) continue;
        int idx = t + u;
        if (idx >= n) idx -= n;
        mpz_addmul(r.coeff_[b + static_cast<std::size_t>(idx)].get_mpz_t(),
                   av.get_mpz_t(), bv.get_mpz_t());
      }
    }
  }
  r.canonicalize();
  return r;
}

ProjUnitary ProjUnitary::pow(long e) const {
  if (e < 0) throw std::invalid_argument("ProjUnitary: negative power");
  ProjUnitary acc = identity(genus_, level_);
  ProjUnitary b = *this;
  while (e > 0) {
    if (e & 1) acc = acc * b;
    b = b * b;
    e >>= 1;
  }
  return acc;
}

bool ProjUnitary::operator==(const ProjUnitary& rhs) const {
  if (genus_ != rhs.genus_ || level_ != rhs.level_) return false;
  const int gap = kpow2_ - rhs.kpow2_;
  if (gap % 2 != 0) {
    // incommensurable formal factors: equal only when both vanish
    for (std::size_t e = 0; e < dim_ * dim_; ++e) {
      const std::size_t i = e / dim_, j = e % dim_;
      if (!entry_zero(i, j) || !rhs.entry_zero(i, j)) {
        if (!entry(i, j).is_zero() || !rhs.entry(i, j).is_zero()) return false;
      }
    }
    return true;
  }
  mpz_class fl = 1, fr = 1;  // fold the k-power gap into cross factors
  if (gap != 0) {
    mpz_class f;
    mpz_ui_pow_ui(f.get_mpz_t(), static_cast<unsigned long>(level_),
                  static_cast<unsigned long>(std::abs(gap) / 2));
    if (gap > 0) fl = f;  // lhs has the larger exponent
    else fr = f;
  }
  const int n = order_;
  std::vector<mpz_class> diff(static_cast<std::size_t>(n));
  for (std::size_t e = 0; e < dim_ * dim_; ++e) {
    const std::size_t b = e * static_cast<std::size_t>(n);
    bool raw_equal = true;
    for (int t = 0; t < n; ++t) {
      diff[static_cast<std::size_t>(t)] =
          coeff_[b + static_cast<std::size_t>(t)] * fl * rhs.den_ -
          rhs.coeff_[b + static_cast<std::size_t>(t)] * fr * den_;
      if (diff[static_cast<std::size_t>(t)] != 0) raw_equal = false;
    }
    if (!raw_equal && !reduces_to_zero_mod_phi(diff)) return false;
  }
  return true;
}

bool ProjUnitary::is_identity() const { return *this == identity(genus_, level_); }

std::optional<CycScalar> ProjUnitary::scalar_multiple_of(
    const ProjUnitary& rhs) const {
  if (genus_ != rhs.genus_ || level_ != rhs.level_) return std::nullopt;
  // find a nonzero entry of rhs
  for (std::size_t i = 0; i < dim_; ++i)
    for (std::size_t j = 0; j < dim_; ++j) {
      if (rhs.entry_zero(i, j)) continue;
      const CycScalar q = rhs.entry(i, j);
      if (q.is_zero()) continue;
      const CycScalar c = entry(i, j) / q;
      if (*this == rhs.scaled(c)) return c;
      return std::nullopt;
    }
  return std::nullopt;
}

CycScalar ProjUnitary::trace() const {
  std::vector<mpz_class> acc(static_cast<std::size_t>(order_), 0);
  for (std::size_t i = 0; i < dim_; ++i) {
    const std::size_t b = base(i, i);
    for (int t = 0; t < order_; ++t)
      acc[static_cast<std::size_t>(t)] += coeff_[b + static_cast<std::size_t>(t)];
  }
  CycScalar v = CycScalar::from_coeffs(order_, std::move(acc), den_);
  if (kpow2_ != 0) v = CycScalar::with_kpow(v, kpow2_, level_);
  return v;
}

bool ProjUnitary::is_unitary() const {
  return (conj_transpose() * *this).is_identity();
}

ProjUnitary rho_generator(const GenLetter& letter, int g, int k) {
  const std::size_t dim = pow_sz(k, g);
  std::vector<CycScalar> entries(dim * dim, CycScalar::zero(2 * k));
  if (const auto* up = std::get_if<GenUpper>(&letter)) {
    const IntMat& b = up->b;
    if (b.rows() != g || b.cols() != g || b != b.transpose())
      throw std::invalid_argument("rho_generator: B must be symmetric g x g");
    for (std::size_t idx = 0; idx < dim; ++idx) {
      const auto m = ProjUnitary::tuple_of(idx, g, k);
      long e = 0;
      for (int i = 0; i < g; ++i)
        for (int j = 0; j < g; ++j)
          e = mod2k(e + m[static_cast<std::size_t>(i)] *
                            static_cast<long>(b.at(i, j)) *
                            m[static_cast<std::size_t>(j)], k);
      entries[idx * dim + idx] = CycScalar::root_of_unity(2 * k, e);
    }
  } else if (const auto* gl = std::get_if<GenGL>(&letter)) {
    const IntMat& a = gl->a;
    const long long d = a.rows() == g && a.cols() == g ? a.det() : 0;
    if (d != 1 && d != -1)
      throw std::invalid_argument("rho_generator: A must be in GL(g, Z)");
    const IntMat at = a.transpose();
    for (std::size_t idx = 0; idx < dim; ++idx) {
      const auto m = ProjUnitary::tuple_of(idx, g, k);
      std::vector<long> n(static_cast<std::size_t>(g), 0);
      for (int i = 0; i < g; ++i) {
        long acc = 0;
        for (int j = 0; j < g; ++j)
          acc += static_cast<long>(at.at(i, j)) * m[static_cast<std::size_t>(j)];
        n[static_cast<std::size_t>(i)] = acc;
      }
      entries[idx * dim + ProjUnitary::index_of(n, g, k)] = CycScalar::one();
    }
  } else {
    for (std::size_t im = 0; im < dim; ++im) {
      const auto m = ProjUnitary::tuple_of(im, g, k);
      for (std::size_t in = 0; in < dim; ++in) {
        const auto n = ProjUnitary::tuple_of(in, g, k);
        long dot = 0;
        for (int i = 0; i < g; ++i)
          dot += m[static_cast<std::size_t>(i)] * n[static_cast<std::size_t>(i)];
        entries[im * dim + in] = CycScalar::with_kpow(
            CycScalar::root_of_unity(2 * k, mod2k(-2 * dot, k)), -g, k);
      }
    }
  }
  return ProjUnitary::from_entries(g, k, entries);
}

ProjUnitary rho_word(const GenWord& word, int g, int k) {
  if (k % 2 != 0)
    for (const auto& letter : word)
      if (!is_theta_group(letter_symplectic(letter, g)))
        throw std::invalid_argument(
            "rho_word: for odd k every letter must lie in the theta group");
  ProjUnitary acc = ProjUnitary::identity(g, k);
  for (const auto& letter : word) acc = acc * rho_generator(letter, g, k);
  return acc;
}

long s_squared_trace(int g, int k) {
  if (k < 2) throw std::invalid_argument("s_squared_trace: k must be >= 2");
  const std::size_t dim = pow_sz(k, g);
  long count = 0;
  for (std::size_t idx = 0; idx < dim; ++idx) {
    const auto m = ProjUnitary::tuple_of(idx, g, k);
    bool fixed = true;
    for (int i = 0; i < g && fixed; ++i) {
      const long v = m[static_cast<std::size_t>(i)];
      fixed = ((-v) % k + k) % k == v;
    }
    if (fixed) ++count;
  }
  return count;
}

HomologyTwists homology_twist_matrices() {
  auto make = [](std::initializer_list<long long> vals) {
    IntMat m(4, 4);
    int i = 0;
    for (long long v : vals) {
      m.set(i / 4, i % 4, v);
      ++i;
    }
    return m;
  };
  HomologyTwists t{
      make({1, 0, 0, 0, 0, 1, 0, 0, -1, 0, 1, 0, 0, 0, 0, 1}),   // T_a
      make({1, 0, 1, 0, 0, 1, 0, 0, 0, 0, 1, 0, 0, 0, 0, 1}),    // T_b
      make({1, 0, 0, 0, 0, 1, 0, 0, -1, 1, 1, 0, 1, -1, 0, 1}),  // T_c
      make({1, 0, 0, 0, 0, 1, 0, 0, 0, 0, 1, 0, 0, -1, 0, 1}),   // T_d
      make({1, 0, 0, 0, 0, 1, 0, 0, 0, 0, 1, 0, 0, -1, 0, 1}),   // T_e
      make({1, 0, 0, 0, 0, 1, 0, 1, 0, 0, 1, 0, 0, 0, 0, 1})};   // T_f
  return t;
}

BraidPairs homology_braid_pairs() {
  const HomologyTwists t = homology_twist_matrices();
  const std::vector<std::pair<char, IntMat>> curves = {
      {'a', t.ta}, {'b', t.tb}, {'c', t.tc}, {'e', t.te}, {'f', t.tf}};
  BraidPairs pairs;
  for (std::size_t i = 0; i < curves.size(); ++i)
    for (std::size_t j = i + 1; j < curves.size(); ++j) {
      const IntMat& x = curves[i].second;
      const IntMat& y = curves[j].second;
      if (x * y == y * x) {
        pairs.commute.emplace_back(curves[i].first, curves[j].first);
      } else if (x * y * x == y * x * y) {
        pairs.braid.emplace_back(curves[i].first, curves[j].first);
      } else {
        throw std::logic_error("homology_braid_pairs: unexpected pair relation");
      }
    }
  return pairs;
}

ChainLift chain_lift_matrices(int k) {
  if (k < 2 || k % 2 != 0)
    throw std::invalid_argument("chain_lift_matrices: k must be even, >= 2");
  const int g = 2;
  const std::size_t dim = pow_sz(k, g);
  auto diag_quadratic = [&](long l00, long l01, long l10, long l11) {
    std::vector<CycScalar> entries(dim * dim, CycScalar::zero(2 * k));
    for (std::size_t idx = 0; idx < dim; ++idx) {
      const auto x = ProjUnitary::tuple_of(idx, g, k);
      // <L x, x> with L = (l00 l01; l10 l11)
      const long x1 = x[0], x2 = x[1];
      const long e = mod2k((l00 * x1 + l01 * x2) * x1 + (l10 * x1 + l11 * x2) * x2, k);
      entries[idx * dim + idx] = CycScalar::root_of_unity(2 * k, e);
    }
    return ProjUnitary::from_entries(g, k, entries);
  };
  ChainLift lift{diag_quadratic(1, 0, 0, 0),   // R_a: <L_a x, x> = x1^2
                 ProjUnitary::identity(g, k),  // R_b set below
                 diag_quadratic(1, 1, 1, 1),   // R_c: (x1+x2)^2
                 diag_quadratic(0, 0, 0, 1),   // R_d = R_e: x2^2
                 diag_quadratic(0, 0, 0, 1),
                 ProjUnitary::identity(g, k)};
  const ProjUnitary s = rho_generator(GenS{}, g, k);
  const ProjUnitary s3 = s * s * s;
  lift.rb = s3 * lift.ra * s;
  lift.rf = s3 * lift.re * s;
  return lift;
}

bool check_braid_lifts(int k) {
  const ChainLift lift = chain_lift_matrices(k);
  auto of = [&](char c) -> const ProjUnitary& {
    switch (c) {
      case 'a': return lift.ra;
      case 'b': return lift.rb;
      case 'c': return lift.rc;
      case 'e': return lift.re;
      default: return lift.rf;
    }
  };
  const BraidPairs pairs = homology_braid_pairs();
  for (const auto& [x, y] : pairs.braid) {
    const ProjUnitary& rx = of(x);
    const ProjUnitary& ry = of(y);
    if (rx * ry * rx != ry * rx * ry) return false;
  }
  for (const auto& [x, y] : pairs.commute) {
    const ProjUnitary& rx = of(x);
    const ProjUnitary& ry = of(y);
    if (rx * ry != ry * rx) return false;
  }
  return true;
}

CycScalar chain_defect(int k) {
  const ChainLift lift = chain_lift_matrices(k);
  const ProjUnitary x = lift.ra * lift.rb * lift.rc;
  const ProjUnitary x2 = x * x;
  const ProjUnitary z = x2 * x2;
  const ProjUnitary rhs = lift.re * lift.rd;
  const auto mu = z.scalar_multiple_of(rhs);
  if (!mu)
    throw std::logic_error("chain_defect: (R_a R_b R_c)^4 is not proportional to R_e R_d");
  return *mu;
}

CycScalar multiplier_zeta_g1(const IntMat& gamma) {
  if (gamma.rows() != 2 || gamma.cols() != 2)
    throw std::invalid_argument("multiplier_zeta_g1: matrix must be 2 x 2");
  if (!is_theta_group(gamma))
    throw std::invalid_argument("multiplier_zeta_g1: matrix is not in the theta group");
  long a = static_cast<long>(gamma.at(0, 0)), b = static_cast<long>(gamma.at(0, 1));
  long c = static_cast<long>(gamma.at(1, 0)), d = static_cast<long>(gamma.at(1, 1));
  if (c < 0 || (c == 0 && d < 0)) {
    a = -a; b = -b; c = -c; d = -d;
  }
  if (c % 2 == 0 && d % 2 != 0) {
    long e = (d - 1) / 2 % 4;
    if (e < 0) e += 4;
    return CycScalar::root_of_unity(4, e) *
           CycScalar::from_int(jacobi(c, std::abs(d)));
  }
  if (c % 2 != 0 && d % 2 == 0) {
    long e = (-c) % 8;
    if (e < 0) e += 8;
    return CycScalar::root_of_unity(8, e) * CycScalar::from_int(jacobi(d, c));
  }
  throw std::logic_error("multiplier_zeta_g1: parity pattern impossible in the theta group");
}

CycScalar multiplier_zeta_gauss(const IntMat& gamma) {
  if (gamma.rows() != gamma.cols() || gamma.rows() % 2 != 0)
    throw std::invalid_argument("multiplier_zeta_gauss: matrix must be 2g x 2g");
  const int g = gamma.rows() / 2;
  if (g > 2)
    throw std::invalid_argument("multiplier_zeta_gauss: only g <= 2 supported");
  if (!is_theta_group(gamma))
    throw std::invalid_argument("multiplier_zeta_gauss: matrix is not in the theta group");
  IntMat b(g, g), d(g, g);
  for (int i = 0; i < g; ++i)
    for (int j = 0; j < g; ++j) {
      b.set(i, j, gamma.at(i, g + j));
      d.set(i, j, gamma.at(g + i, g + j));
    }
  const long long det = d.det();
  if (det == 0)
    throw std::invalid_argument("multiplier_zeta_gauss: D must be invertible");
  if (det < 0)
    throw std::invalid_argument(
        "multiplier_zeta_gauss: det D < 0 square-root branch is unspecified");
  // adj(D) with D * adj(D) = det * 1
  IntMat adj(g, g);
  if (g == 1) {
    adj.set(0, 0, 1);
  } else {
    adj.set(0, 0, d.at(1, 1));
    adj.set(0, 1, -d.at(0, 1));
    adj.set(1, 0, -d.at(1, 0));
    adj.set(1, 1, d.at(0, 0));
  }
  const IntMat badj = b * adj;
  const long m = static_cast<long>(det);
  const long two_det = 2 * m;
  std::vector<mpz_class> acc(static_cast<std::size_t>(two_det), 0);
  // sum over the box [0, det)^g; every residue class of Z^g / D Z^g is hit
  // det^{g-1} times since det * Z^g is contained in D Z^g
  std::vector<long> l(static_cast<std::size_t>(g), 0);
  while (true) {
    long long t = 0;
    for (int i = 0; i < g; ++i)
      for (int j = 0; j < g; ++j) {
        long long term = l[static_cast<std::size_t>(i)] % two_det;
        term = term * (badj.at(i, j) % two_det) % two_det;
        term = term * (l[static_cast<std::size_t>(j)] % two_det) % two_det;
        t = (t + term) % two_det;
      }
    if (t < 0) t += two_det;
    acc[static_cast<std::size_t>(t)] += 1;
    int pos = g - 1;
    while (pos >= 0 && ++l[static_cast<std::size_t>(pos)] == m) {
      l[static_cast<std::size_t>(pos)] = 0;
      --pos;
    }
    if (pos < 0) break;
  }
  mpz_class multiplicity = 1;  // det^{g-1}
  for (int i = 1; i < g; ++i) multiplicity *= m;
  CycScalar sum = CycScalar::from_coeffs(static_cast<int>(two_det),
                                         std::move(acc), multiplicity);
  const CycScalar root = sqrt_exact(m);
  CycScalar zeta = sum * root / CycScalar::from_int(m);  // det^{-1/2} = sqrt/det
  if (!zeta.pow(8).is_one())
    throw std::logic_error("multiplier_zeta_gauss: value is not an 8th root of unity");
  return zeta;
}

CocycleResult cocycle_defect(const GenWord& w1, const GenWord& w2,
                             const GenWord& w12, int g, int k) {
  // the projective representation factors through Sp(2g, Z/2kZ) for even k
  // and through the image of the theta group mod k for odd k
  const long level_mod = k % 2 == 0 ? 2L * k : k;
  GenWord concat = w1;
  concat.insert(concat.end(), w2.begin(), w2.end());
  const ModMatrix lhs = word_symplectic(concat, g).reduced(level_mod);
  const ModMatrix rhs = word_symplectic(w12, g).reduced(level_mod);
  if (lhs != rhs)
    throw std::invalid_argument(
        "cocycle_defect: the symplectic images of w1.w2 and w12 differ");
  const ProjUnitary p = rho_word(w1, g, k) * rho_word(w2, g, k);
  const ProjUnitary q = rho_word(w12, g, k);
  if ((p.kpow2() - q.kpow2()) % 2 == 0) {
    const auto eta = p.scalar_multiple_of(q);
    if (!eta)
      throw std::logic_error("cocycle_defect: matrices are not proportional");
    return {*eta, true};
  }
  // odd-g fallback: half-integral k-powers persist; extract numerically and
  // snap to the nearest 8th root of unity at 1e-9
  const std::size_t dim = p.dim();
  std::complex<double> best_q(0, 0);
  std::size_t bi = 0, bj = 0;
  for (std::size_t i = 0; i < dim; ++i)
    for (std::size_t j = 0; j < dim; ++j) {
      const auto v = q.entry(i, j).to_complex();
      if (std::abs(v) > std::abs(best_q)) {
        best_q = v;
        bi = i;
        bj = j;
      }
    }
  if (std::abs(best_q) < 1e-12)
    throw std::logic_error("cocycle_defect: rho(w12) vanishes numerically");
  const std::complex<double> eta_num = p.entry(bi, bj).to_complex() / best_q;
  double scale = 0;
  for (std::size_t i = 0; i < dim; ++i)
    for (std::size_t j = 0; j < dim; ++j) {
      const auto diff =
          p.entry(i, j).to_complex() - eta_num * q.entry(i, j).to_complex();
      scale = std::max(scale, std::abs(diff));
    }
  if (scale > 1e-9)
    throw std::logic_error("cocycle_defect: matrices are not proportional (numeric)");
  // snap
  int best_t = 0;
  double best_err = 1e100;
  for (int t = 0; t < 8; ++t) {
    const double ang = 2 * 3.14159265358979323846 * t / 8;
    const std::complex<double> root(std::cos(ang), std::sin(ang));
    const double err = std::abs(eta_num - root);
    if (err < best_err) {
      best_err = err;
      best_t = t;
    }
  }
  if (best_err > 1e-9)
    throw std::logic_error("cocycle_defect: defect is not an 8th root of unity");
  return {CycScalar::root_of_unity(8, best_t), false};
}

}  // namespace weilcheck
