#include "weilcheck/witt.hpp"

#include <random>
#include <stdexcept>

namespace weilcheck {

namespace {

long det_mod4_of(const ModMatrix& g) {
  IntMat m(g.rows(), g.cols());
  for (int i = 0; i < g.rows(); ++i)
    for (int j = 0; j < g.cols(); ++j) m.set(i, j, g.at(i, j));
  long long d = m.det() % 4;
  if (d < 0) d += 4;
  return static_cast<long>(d);
}

}  // namespace

BilForm::BilForm(const ModMatrix& gram) : gram_(gram) {
  if (gram.rows() != gram.cols())
    throw std::invalid_argument("BilForm: Gram matrix must be square");
  if (gram.modulus() != 4) gram_ = gram.reduced(4);
  if (gram_ != gram_.transpose())
    throw std::invalid_argument("BilForm: Gram matrix must be symmetric");
  if (rank() > 0 && det_mod4_of(gram_) % 2 == 0)
    throw std::invalid_argument("BilForm: form is degenerate");
}

BilForm BilForm::diagonal(const std::vector<long>& entries) {
  ModMatrix g(static_cast<int>(entries.size()), static_cast<int>(entries.size()), 4);
  for (std::size_t i = 0; i < entries.size(); ++i)
    g.set(static_cast<int>(i), static_cast<int>(i), entries[i]);
  return BilForm(g);
}

BilForm BilForm::omega() {
  ModMatrix g(2, 2, 4);
  g.set(0, 0, 2); g.set(0, 1, 1);
  g.set(1, 0, 1); g.set(1, 1, 2);
  return BilForm(g);
}

BilForm BilForm::hyperbolic() {
  ModMatrix g(2, 2, 4);
  g.set(0, 1, 1);
  g.set(1, 0, 1);
  return BilForm(g);
}

long BilForm::det_mod4() const { return det_mod4_of(gram_); }

FormTriple::FormTriple(BilForm a, BilForm b) : q0(std::move(a)), q1(std::move(b)) {
  if (q0.rank() != q1.rank())
    throw std::invalid_argument("FormTriple: ranks must agree");
}

BilForm direct_sum(const BilForm& f1, const BilForm& f2) {
  const int n1 = f1.rank(), n2 = f2.rank();
  ModMatrix g(n1 + n2, n1 + n2, 4);
  for (int i = 0; i < n1; ++i)
    for (int j = 0; j < n1; ++j) g.set(i, j, f1.gram().at(i, j));
  for (int i = 0; i < n2; ++i)
    for (int j = 0; j < n2; ++j) g.set(n1 + i, n1 + j, f2.gram().at(i, j));
  return BilForm(g);
}

namespace {

// pairing of two coordinate vectors under a Gram matrix mod 4
long pair_mod4(const ModMatrix& g, const std::vector<int>& x,
               const std::vector<int>& y) {
  long acc = 0;
  const int n = g.rows();
  for (int i = 0; i < n; ++i) {
    if (x[i] == 0) continue;
    long row = 0;
    for (int j = 0; j < n; ++j) row += g.at(i, j) * y[j];
    acc += x[i] * row;
  }
  return ((acc % 4) + 4) % 4;
}

// mod-2 row reduction state for independence checks
struct Mod2Echelon {
  std::vector<std::vector<int>> rows;  // reduced rows, entries 0/1
  bool try_insert(std::vector<int> v) {
    for (auto& x : v) x &= 1;
    for (const auto& r : rows) {
      int lead = -1;
      for (std::size_t i = 0; i < r.size(); ++i)
        if (r[i]) { lead = static_cast<int>(i); break; }
      if (lead >= 0 && v[static_cast<std::size_t>(lead)])
        for (std::size_t i = 0; i < v.size(); ++i) v[i] ^= r[i];
    }
    for (int x : v)
      if (x) {
        rows.push_back(std::move(v));
        return true;
      }
    return false;
  }
};

bool split_dfs(const ModMatrix& g, std::vector<std::vector<int>>& chosen,
               int target, unsigned long from) {
  if (static_cast<int>(chosen.size()) == target) return true;
  const int n = g.rows();
  const unsigned long total = 1UL << (2 * n);  // 4^n vectors
  for (unsigned long code = from; code < total; ++code) {
    std::vector<int> v(n);
    unsigned long c = code;
    for (int i = 0; i < n; ++i) {
      v[i] = static_cast<int>(c & 3);
      c >>= 2;
    }
    // normalize: first odd coordinate must be 1 (units act on spans)
    int first_odd = -1;
    for (int i = 0; i < n; ++i)
      if (v[i] % 2 == 1) { first_odd = i; break; }
    if (first_odd < 0 || v[first_odd] != 1) continue;
    if (pair_mod4(g, v, v) != 0) continue;
    bool ok = true;
    for (const auto& u : chosen)
      if (pair_mod4(g, u, v) != 0) { ok = false; break; }
    if (!ok) continue;
    Mod2Echelon ech;
    for (const auto& u : chosen) ech.try_insert(u);
    if (!ech.try_insert(v)) continue;  // Nakayama: dependent mod 2
    chosen.push_back(v);
    if (split_dfs(g, chosen, target, code + 1)) return true;
    chosen.pop_back();
  }
  return false;
}

}  // namespace

bool is_split(const BilForm& f, int rank_cap) {
  const int n = f.rank();
  if (n == 0) return true;
  if (n % 2 != 0) return false;
  if (n > rank_cap)
    throw std::invalid_argument("is_split: rank exceeds the search cap");
  std::vector<std::vector<int>> chosen;
  return split_dfs(f.gram(), chosen, n / 2, 0);
}

DecomposeCounts decompose(const BilForm& f) {
  DecomposeCounts counts;
  // mutable working Gram over plain ints mod 4
  int n = f.rank();
  std::vector<std::vector<long>> g(n, std::vector<long>(n));
  for (int i = 0; i < n; ++i)
    for (int j = 0; j < n; ++j) g[i][j] = f.gram().at(i, j);

  auto drop = [&](std::vector<int> kill) {
    std::vector<std::vector<long>> h;
    for (int i = 0; i < n; ++i) {
      if (i == kill[0] || (kill.size() > 1 && i == kill[1])) continue;
      std::vector<long> row;
      for (int j = 0; j < n; ++j) {
        if (j == kill[0] || (kill.size() > 1 && j == kill[1])) continue;
        row.push_back(g[i][j]);
      }
      h.push_back(std::move(row));
    }
    g = std::move(h);
    n = static_cast<int>(g.size());
  };
  auto md = [](long v) { return ((v % 4) + 4) % 4; };

  while (n > 0) {
    int pivot = -1;
    for (int i = 0; i < n; ++i)
      if (g[i][i] % 2 == 1) { pivot = i; break; }
    if (pivot >= 0) {
      const long u = md(g[pivot][pivot]);
      (u == 1 ? counts.plus : counts.minus) += 1;
      const long uinv = u;  // 1 and 3 are self-inverse mod 4
      for (int m = 0; m < n; ++m) {
        if (m == pivot) continue;
        const long c = md(g[pivot][m] * uinv);
        if (c == 0) continue;
        // e_m -> e_m - c e_pivot
        for (int t = 0; t < n; ++t) {
          g[m][t] = md(g[m][t] - c * g[pivot][t]);
          }
        for (int t = 0; t < n; ++t) g[t][m] = md(g[t][m] - c * g[t][pivot]);
      }
      drop({pivot});
      continue;
    }
    // all self-pairings in {0,2}: find the lex-first odd off-diagonal pair
    int pi = -1, pj = -1;
    for (int i = 0; i < n && pi < 0; ++i)
      for (int j = i + 1; j < n; ++j)
        if (g[i][j] % 2 == 1) { pi = i; pj = j; break; }
    if (pi < 0)
      throw std::invalid_argument("decompose: form is degenerate");
    if (md(g[pi][pj]) == 3) {
      // negate e_pj to make the pairing +1; the diagonal entry is negated
      // twice and stays put
      for (int t = 0; t < n; ++t) g[t][pj] = md(-g[t][pj]);
      for (int t = 0; t < n; ++t) g[pj][t] = md(-g[pj][t]);
    }
    const long s = md(g[pi][pi]), t = md(g[pj][pj]);
    if (s == 2 && t == 2) counts.omega += 1;
    else counts.split += 1;
    // orthogonalize the rest against the (e_pi, e_pj) block:
    // block B = (s 1; 1 t), B^{-1} = (3t 1; 1 3s) since det = st - 1 = -1.
    const long i00 = md(3 * t), i01 = 1, i10 = 1, i11 = md(3 * s);
    for (int m = 0; m < n; ++m) {
      if (m == pi || m == pj) continue;
      const long r0 = md(g[pi][m]), r1 = md(g[pj][m]);
      const long c0 = md(i00 * r0 + i01 * r1);
      const long c1 = md(i10 * r0 + i11 * r1);
      if (c0 == 0 && c1 == 0) continue;
      // e_m -> e_m - c0 e_pi - c1 e_pj
      for (int x = 0; x < n; ++x)
        g[m][x] = md(g[m][x] - c0 * g[pi][x] - c1 * g[pj][x]);
      for (int x = 0; x < n; ++x)
        g[x][m] = md(g[x][m] - c0 * g[x][pi] - c1 * g[x][pj]);
    }
    drop({pi, pj});
  }
  return counts;
}

WittClass witt_class(const BilForm& f) {
  const DecomposeCounts c = decompose(f);
  return WittClass(c.minus - c.plus + 4 * c.omega);
}

long discriminant(const BilForm& f) {
  // (Z/4Z)*/squares = {1, 3}; raw determinant convention.
  return f.det_mod4();
}

WittClass v_class(const FormTriple& t) {
  return witt_class(t.q1) - witt_class(t.q0);
}

BilForm assemble(const DecomposeCounts& c) {
  std::vector<long> diag;
  for (int i = 0; i < c.plus; ++i) diag.push_back(1);
  for (int i = 0; i < c.minus; ++i) diag.push_back(3);
  BilForm acc = BilForm::diagonal(diag);
  for (int i = 0; i < c.omega; ++i) acc = direct_sum(acc, BilForm::omega());
  for (int i = 0; i < c.split; ++i) acc = direct_sum(acc, BilForm::hyperbolic());
  return acc;
}

std::optional<ModMatrix> find_isometry(const BilForm& f, const BilForm& h,
                                       std::uint64_t seed, std::size_t trials) {
  if (f.rank() != h.rank()) return std::nullopt;
  const int n = f.rank();
  if (n == 0) return ModMatrix(0, 0, 4);
  auto check = [&](const ModMatrix& p) {
    return p.transpose() * f.gram() * p == h.gram();
  };
  if (n <= 3) {
    const unsigned long total = 1UL << (2 * n * n);
    for (unsigned long code = 0; code < total; ++code) {
      ModMatrix p(n, n, 4);
      unsigned long c = code;
      for (int i = 0; i < n; ++i)
        for (int j = 0; j < n; ++j) {
          p.set(i, j, static_cast<long>(c & 3));
          c >>= 2;
        }
      IntMat pi(n, n);
      for (int i = 0; i < n; ++i)
        for (int j = 0; j < n; ++j) pi.set(i, j, p.at(i, j));
      if (pi.det() % 2 == 0) continue;
      if (check(p)) return p;
    }
    return std::nullopt;
  }
  std::mt19937_64 rng(seed);
  for (std::size_t t = 0; t < trials; ++t) {
    ModMatrix p(n, n, 4);
    for (int i = 0; i < n; ++i)
      for (int j = 0; j < n; ++j)
        p.set(i, j, static_cast<long>(rng() & 3));
    IntMat pi(n, n);
    for (int i = 0; i < n; ++i)
      for (int j = 0; j < n; ++j) pi.set(i, j, p.at(i, j));
    if (pi.det() % 2 == 0) continue;
    if (check(p)) return p;
  }
  return std::nullopt;
}

}  // namespace weilcheck
