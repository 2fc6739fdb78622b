#include "weilcheck/coinvariants.hpp"

#include <stdexcept>

#include "weilcheck/gf_linalg.hpp"
#include "weilcheck/symplectic.hpp"

namespace weilcheck {

namespace {

ModMatrix block_matrix(int g, long p, const ModMatrix& a, const ModMatrix& b,
                       const ModMatrix& c, const ModMatrix& d) {
  ModMatrix m(2 * g, 2 * g, p);
  for (int i = 0; i < g; ++i)
    for (int j = 0; j < g; ++j) {
      m.set(i, j, a.at(i, j));
      m.set(i, g + j, b.at(i, j));
      m.set(g + i, j, c.at(i, j));
      m.set(g + i, g + j, d.at(i, j));
    }
  return m;
}

ModMatrix elementary(int g, long p, int i, int j, long v = 1) {
  ModMatrix e(g, g, p);
  e.set(i, j, v);
  return e;
}

}  // namespace

SpBasis::SpBasis(int g, long p) : g_(g), p_(p) {
  if (g < 1) throw std::invalid_argument("SpBasis: g must be >= 1");
  const ModMatrix zero(g, g, p);
  auto sym = [&](int i, int j) {
    ModMatrix s(g, g, p);
    s.set(i, j, 1);
    s.set(j, i, 1);  // overwrites for i == j: single e_ii
    return s;
  };
  for (int i = 0; i < g; ++i)
    for (int j = i; j < g; ++j) {
      elements_.push_back(block_matrix(g, p, zero, sym(i, j), zero, zero));
      labels_.push_back("u_" + std::to_string(i + 1) + std::to_string(j + 1));
    }
  for (int i = 0; i < g; ++i)
    for (int j = i; j < g; ++j) {
      elements_.push_back(block_matrix(g, p, zero, zero, sym(i, j), zero));
      labels_.push_back("l_" + std::to_string(i + 1) + std::to_string(j + 1));
    }
  for (int i = 0; i < g; ++i)
    for (int j = 0; j < g; ++j) {
      // r_{ij} = (e_ij, 0; 0, -e_ji); n_{ii} for i = j
      ModMatrix a = elementary(g, p, i, j);
      ModMatrix d = elementary(g, p, j, i, -1);
      elements_.push_back(block_matrix(g, p, a, zero, zero, d));
      labels_.push_back((i == j ? "n_" : "r_") + std::to_string(i + 1) +
                        std::to_string(j + 1));
    }
}

int SpBasis::index_u(int i, int j) const {
  if (i > j) std::swap(i, j);
  --i; --j;
  // offset of (i,j), i <= j, lexicographic
  return i * g_ - i * (i - 1) / 2 + (j - i);
}

int SpBasis::index_l(int i, int j) const {
  return g_ * (g_ + 1) / 2 + index_u(i, j);
}

int SpBasis::index_m(int i, int j) const {
  return g_ * (g_ + 1) + (i - 1) * g_ + (j - 1);
}

std::vector<long> SpBasis::coords(const ModMatrix& lie) const {
  if (lie.rows() != 2 * g_ || lie.cols() != 2 * g_ || lie.modulus() != p_)
    throw std::invalid_argument("SpBasis: shape or modulus mismatch");
  if (!is_sp_lie(lie, p_))
    throw std::invalid_argument("SpBasis: matrix is not in sp_2g(p)");
  std::vector<long> c(static_cast<std::size_t>(dim()), 0);
  for (int i = 1; i <= g_; ++i)
    for (int j = i; j <= g_; ++j) {
      c[static_cast<std::size_t>(index_u(i, j))] = lie.at(i - 1, g_ + j - 1);
      c[static_cast<std::size_t>(index_l(i, j))] = lie.at(g_ + i - 1, j - 1);
    }
  for (int i = 1; i <= g_; ++i)
    for (int j = 1; j <= g_; ++j)
      c[static_cast<std::size_t>(index_m(i, j))] = lie.at(i - 1, j - 1);
  return c;
}

ModMatrix SpBasis::from_coords(const std::vector<long>& c) const {
  if (static_cast<int>(c.size()) != dim())
    throw std::invalid_argument("SpBasis: wrong coordinate length");
  ModMatrix acc(2 * g_, 2 * g_, p_);
  for (int t = 0; t < dim(); ++t)
    if (c[static_cast<std::size_t>(t)] % p_ != 0)
      acc = acc + elements_[static_cast<std::size_t>(t)].scaled(
                      c[static_cast<std::size_t>(t)]);
  return acc;
}

ModMatrix conj_action(const ModMatrix& sigma, const ModMatrix& lie) {
  const int g = sigma.rows() / 2;
  if (!is_symplectic(sigma, g))
    throw std::invalid_argument("conj_action: sigma is not symplectic");
  return sigma * lie * symplectic_inverse(sigma, g);
}

std::vector<std::vector<long>> action_matrix(const ModMatrix& sigma,
                                             const SpBasis& basis) {
  const int n = basis.dim();
  const ModMatrix sigma_inv = symplectic_inverse(sigma, basis.genus());
  std::vector<std::vector<long>> cols(static_cast<std::size_t>(n));
  for (int t = 0; t < n; ++t)
    cols[static_cast<std::size_t>(t)] =
        basis.coords(sigma * basis.element(t) * sigma_inv);
  return cols;  // cols[t] = coords of sigma . b_t
}

int wedge_dim(int n) { return n * (n - 1) / 2; }

int wedge_index(int i, int j, int n) {
  if (i > j) std::swap(i, j);
  return i * n - i * (i + 1) / 2 + (j - i - 1);
}

std::vector<std::vector<long>> wedge_action_matrix(const ModMatrix& sigma,
                                                   const SpBasis& basis) {
  const int n = basis.dim();
  const long p = basis.prime();
  const auto act = action_matrix(sigma, basis);
  const int wd = wedge_dim(n);
  std::vector<std::vector<long>> cols(static_cast<std::size_t>(wd));
  for (int i = 0; i < n; ++i)
    for (int j = i + 1; j < n; ++j) {
      const auto& ci = act[static_cast<std::size_t>(i)];
      const auto& cj = act[static_cast<std::size_t>(j)];
      std::vector<long> w(static_cast<std::size_t>(wd), 0);
      for (int s = 0; s < n; ++s) {
        if (ci[static_cast<std::size_t>(s)] == 0 &&
            cj[static_cast<std::size_t>(s)] == 0)
          continue;
        for (int t = s + 1; t < n; ++t) {
          const long v = (ci[static_cast<std::size_t>(s)] * cj[static_cast<std::size_t>(t)] -
                          ci[static_cast<std::size_t>(t)] * cj[static_cast<std::size_t>(s)]) % p;
          if (v != 0)
            w[static_cast<std::size_t>(wedge_index(s, t, n))] = ((v % p) + p) % p;
        }
      }
      cols[static_cast<std::size_t>(wedge_index(i, j, n))] = std::move(w);
    }
  return cols;
}

namespace {

// Feeds sigma.v - v rows for every basis vector v of the module (degree 1:
// sp itself; degree 2: its exterior square) into the eliminator. Only
// generator differences are needed: the relation subspace is generated by
// them since (gh)m - m = g(hm) - hm + (hm - m).
template <typename Insert>
void relation_rows(int degree, const std::vector<ModMatrix>& gens,
                   const SpBasis& basis, const Insert& insert) {
  const int n = basis.dim();
  for (const auto& sigma : gens) {
    const auto cols = degree == 1 ? action_matrix(sigma, basis)
                                  : wedge_action_matrix(sigma, basis);
    const int m = static_cast<int>(cols.size());
    for (int t = 0; t < m; ++t) {
      std::vector<long> row = cols[static_cast<std::size_t>(t)];
      row[static_cast<std::size_t>(t)] -= 1;
      insert(std::move(row));
    }
  }
  (void)n;
}

}  // namespace

int coinvariant_dim(int g, long p, int degree,
                    const std::vector<ModMatrix>& gens) {
  if (degree != 1 && degree != 2)
    throw std::invalid_argument("coinvariant_dim: degree must be 1 or 2");
  for (long q = 2; q * q <= p; ++q)
    if (p % q == 0)
      throw std::invalid_argument("coinvariant_dim: p must be prime");
  const SpBasis basis(g, p);
  const int dim = degree == 1 ? basis.dim() : wedge_dim(basis.dim());
  if (p == 2) {
    BitEchelon ech(dim);
    relation_rows(degree, gens, basis, [&](std::vector<long> row) {
      std::vector<int> bits(row.size());
      for (std::size_t i = 0; i < row.size(); ++i)
        bits[i] = static_cast<int>(((row[i] % 2) + 2) % 2);
      ech.insert_bits(bits);
    });
    return dim - ech.rank();
  }
  FpEchelon ech(dim, p);
  relation_rows(degree, gens, basis,
                [&](std::vector<long> row) { ech.insert(std::move(row)); });
  return dim - ech.rank();
}

int coinvariant_dim(int g, long p, int degree) {
  return coinvariant_dim(g, p, degree, humphries_generators(g, p));
}

bool class_n11n22_nonzero(int g) {
  if (g < 2)
    throw std::invalid_argument("class_n11n22_nonzero: g must be >= 2");
  const long p = 2;
  const SpBasis basis(g, p);
  const int n = basis.dim();
  BitEchelon ech(wedge_dim(n));
  relation_rows(2, humphries_generators(g, p), basis,
                [&](std::vector<long> row) {
                  std::vector<int> bits(row.size());
                  for (std::size_t i = 0; i < row.size(); ++i)
                    bits[i] = static_cast<int>(((row[i] % 2) + 2) % 2);
                  ech.insert_bits(bits);
                });
  std::vector<int> v(static_cast<std::size_t>(wedge_dim(n)), 0);
  v[static_cast<std::size_t>(wedge_index(basis.index_m(1, 1),
                                         basis.index_m(2, 2), n))] = 1;
  return !ech.in_span(BitEchelon::pack(v));
}

BilinearDims invariant_bilinear_dim(int n, long p) {
  if (n < 2) throw std::invalid_argument("invariant_bilinear_dim: n must be >= 2");
  // Unknowns: B(e_ab, e_cd), indexed by (a*n+b)*n*n + (c*n+d).
  const int nn = n * n;
  const int unknowns = nn * nn;
  auto md = [&](long v) { return ((v % p) + p) % p; };

  // generating set of GL(n, F_p): transvections 1 + e_ij and one diagonal
  // unit scaling by a generator of F_p^*
  std::vector<std::pair<ModMatrix, ModMatrix>> gens;  // (h, h^{-1})
  for (int i = 0; i < n; ++i)
    for (int j = 0; j < n; ++j) {
      if (i == j) continue;
      ModMatrix h = ModMatrix::identity(n, p);
      h.set(i, j, 1);
      ModMatrix hinv = ModMatrix::identity(n, p);
      hinv.set(i, j, -1);
      gens.emplace_back(h, hinv);
    }
  if (p > 2) {
    long gen = 0;
    for (long a = 2; a < p; ++a) {
      long x = a % p;
      int ord = 1;
      while (x != 1) { x = (x * a) % p; ++ord; }
      if (ord == p - 1) { gen = a; break; }
    }
    ModMatrix h = ModMatrix::identity(n, p);
    h.set(0, 0, gen);
    gens.emplace_back(h, h.inverse());
  }

  auto feed_invariance_rows = [&](FpEchelon& ech) {
    for (const auto& [h, hinv] : gens) {
      // conjugates of all basis matrices under this generator
      std::vector<ModMatrix> conj;
      conj.reserve(static_cast<std::size_t>(nn));
      for (int a = 0; a < n; ++a)
        for (int b = 0; b < n; ++b) {
          ModMatrix e(n, n, p);
          e.set(a, b, 1);
          conj.push_back(h * e * hinv);
        }
      for (int ab = 0; ab < nn; ++ab)
        for (int cd = 0; cd < nn; ++cd) {
          std::vector<long> row(static_cast<std::size_t>(unknowns), 0);
          const ModMatrix& x = conj[static_cast<std::size_t>(ab)];
          const ModMatrix& y = conj[static_cast<std::size_t>(cd)];
          for (int u = 0; u < n; ++u)
            for (int v = 0; v < n; ++v) {
              const long xc = x.at(u, v);
              if (xc == 0) continue;
              for (int s = 0; s < n; ++s)
                for (int t = 0; t < n; ++t) {
                  const long yc = y.at(s, t);
                  if (yc == 0) continue;
                  const int uv = u * n + v, st = s * n + t;
                  row[static_cast<std::size_t>(uv * nn + st)] =
                      md(row[static_cast<std::size_t>(uv * nn + st)] + xc * yc);
                }
            }
          row[static_cast<std::size_t>(ab * nn + cd)] =
              md(row[static_cast<std::size_t>(ab * nn + cd)] - 1);
          ech.insert(std::move(row));
        }
    }
  };

  FpEchelon invariance(unknowns, p);
  feed_invariance_rows(invariance);
  BilinearDims dims;
  dims.total = unknowns - invariance.rank();

  // alternating constraints: B(e, e) = 0 on basis vectors and
  // B(x, y) + B(y, x) = 0 on basis pairs
  FpEchelon combined(unknowns, p);
  feed_invariance_rows(combined);
  for (int ab = 0; ab < nn; ++ab) {
    std::vector<long> row(static_cast<std::size_t>(unknowns), 0);
    row[static_cast<std::size_t>(ab * nn + ab)] = 1;
    combined.insert(std::move(row));
  }
  for (int ab = 0; ab < nn; ++ab)
    for (int cd = ab + 1; cd < nn; ++cd) {
      std::vector<long> row(static_cast<std::size_t>(unknowns), 0);
      row[static_cast<std::size_t>(ab * nn + cd)] = 1;
      row[static_cast<std::size_t>(cd * nn + ab)] =
          md(row[static_cast<std::size_t>(cd * nn + ab)] + 1);
      combined.insert(std::move(row));
    }
  dims.alternating = unknowns - combined.rank();
  return dims;
}

ModMatrix tau_u(int i, int j, int g, long p) {
  ModMatrix b(g, g, p);
  b.set(i - 1, i - 1, 1);
  b.set(j - 1, j - 1, 1);
  return block_matrix(g, p, ModMatrix::identity(g, p), b, ModMatrix(g, g, p),
                      ModMatrix::identity(g, p));
}

ModMatrix tau_l(int i, int j, int g, long p) {
  ModMatrix c(g, g, p);
  c.set(i - 1, i - 1, 1);
  c.set(j - 1, j - 1, 1);
  return block_matrix(g, p, ModMatrix::identity(g, p), ModMatrix(g, g, p), c,
                      ModMatrix::identity(g, p));
}

ModMatrix tau_l_single(int i, int g, long p) {
  ModMatrix c(g, g, p);
  c.set(i - 1, i - 1, 1);
  return block_matrix(g, p, ModMatrix::identity(g, p), ModMatrix(g, g, p), c,
                      ModMatrix::identity(g, p));
}

ModMatrix a_map(int i, int j, int g, long p) {
  ModMatrix x = ModMatrix::identity(g, p);
  x.set(j - 1, i - 1, -1);
  ModMatrix y = ModMatrix::identity(g, p);
  y.set(i - 1, j - 1, 1);
  return block_matrix(g, p, x, ModMatrix(g, g, p), ModMatrix(g, g, p), y);
}

ModMatrix exchange_map(int i, int j, int g, long p) {
  ModMatrix m(2 * g, 2 * g, p);
  for (int t = 1; t <= g; ++t) {
    if (t == i || t == j) {
      m.set(g + t - 1, t - 1, -1);  // a_t -> -b_t
      m.set(t - 1, g + t - 1, 1);   // b_t -> a_t
    } else {
      m.set(t - 1, t - 1, 1);
      m.set(g + t - 1, g + t - 1, 1);
    }
  }
  return m;
}

bool gl_block_decomposition_check(int g, long p) {
  // generators of the GL(g) block subgroup
  std::vector<ModMatrix> gl_gens;
  for (int i = 0; i < g; ++i)
    for (int j = 0; j < g; ++j) {
      if (i == j) continue;
      ModMatrix x = ModMatrix::identity(g, p);
      x.set(i, j, 1);
      gl_gens.push_back(x);
    }
  if (p > 2) {
    ModMatrix x = ModMatrix::identity(g, p);
    x.set(0, 0, p - 1);  // -1 is a unit; enough to exercise a diagonal scaling
    gl_gens.push_back(x);
  }
  const SpBasis basis(g, p);
  for (const auto& x : gl_gens) {
    const ModMatrix xinv = x.inverse();
    const ModMatrix xt = x.transpose();
    const ModMatrix xtinv = xt.inverse();
    const ModMatrix sigma =
        block_matrix(g, p, x, ModMatrix(g, g, p), ModMatrix(g, g, p), xtinv);
    for (int t = 0; t < basis.dim(); ++t) {
      const ModMatrix& b = basis.element(t);
      const ModMatrix lhs = conj_action(sigma, b);
      // split b into blocks
      ModMatrix ba(g, g, p), bb(g, g, p), bc(g, g, p);
      for (int i = 0; i < g; ++i)
        for (int j = 0; j < g; ++j) {
          ba.set(i, j, b.at(i, j));
          bb.set(i, j, b.at(i, g + j));
          bc.set(i, j, b.at(g + i, j));
        }
      const ModMatrix ra = x * ba * xinv;        // matrix block: conjugation
      const ModMatrix rb = x * bb * xt;          // u-block: x A x^T
      const ModMatrix rc = xtinv * bc * xinv;    // l-block: (x^T)^{-1} A x^{-1}
      const ModMatrix rd = ra.transpose().scaled(-1);
      const ModMatrix rhs = block_matrix(g, p, ra, rb, rc, rd);
      if (lhs != rhs) return false;
    }
  }
  return true;
}

}  // namespace weilcheck
