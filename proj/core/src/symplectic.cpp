#include "weilcheck/symplectic.hpp"

#include <deque>
#include <stdexcept>
#include <unordered_set>

namespace weilcheck {

IntMat symplectic_form(int g) {
  IntMat j(2 * g, 2 * g);
  for (int i = 0; i < g; ++i) {
    j.set(i, g + i, 1);
    j.set(g + i, i, -1);
  }
  return j;
}

ModMatrix symplectic_form(int g, long modulus) {
  return symplectic_form(g).reduced(modulus);
}

bool is_symplectic(const ModMatrix& m, int g) {
  if (m.rows() != 2 * g || m.cols() != 2 * g)
    throw std::invalid_argument("is_symplectic: matrix must be 2g x 2g");
  const ModMatrix j = symplectic_form(g, m.modulus());
  return m.transpose() * j * m == j;
}

bool is_symplectic(const IntMat& m, int g) {
  if (m.rows() != 2 * g || m.cols() != 2 * g)
    throw std::invalid_argument("is_symplectic: matrix must be 2g x 2g");
  const IntMat j = symplectic_form(g);
  return m.transpose() * j * m == j;
}

bool is_theta_group(const IntMat& m) {
  if (m.rows() != m.cols() || m.rows() % 2 != 0)
    throw std::invalid_argument("is_theta_group: matrix must be 2g x 2g");
  const int g = m.rows() / 2;
  if (!is_symplectic(m, g)) return false;
  IntMat a(g, g), b(g, g), c(g, g), d(g, g);
  for (int i = 0; i < g; ++i)
    for (int j = 0; j < g; ++j) {
      a.set(i, j, m.at(i, j));
      b.set(i, j, m.at(i, g + j));
      c.set(i, j, m.at(g + i, j));
      d.set(i, j, m.at(g + i, g + j));
    }
  const IntMat atc = a.transpose() * c;
  const IntMat btd = b.transpose() * d;
  for (int i = 0; i < g; ++i)
    if (atc.at(i, i) % 2 != 0 || btd.at(i, i) % 2 != 0) return false;
  return true;
}

ModMatrix transvection(const std::vector<long>& v, int g, long modulus) {
  if (static_cast<int>(v.size()) != 2 * g)
    throw std::invalid_argument("transvection: vector must have length 2g");
  // T = 1 + v (J v)^T: then T x = x + ((Jv)^T x) v = x + <x,v> v.
  ModMatrix t = ModMatrix::identity(2 * g, modulus);
  std::vector<long> jv(2 * g, 0);
  for (int i = 0; i < g; ++i) {
    jv[i] = v[g + i];        // (J v)_i = v_{g+i}
    jv[g + i] = -v[i];       // (J v)_{g+i} = -v_i
  }
  for (int r = 0; r < 2 * g; ++r)
    for (int c = 0; c < 2 * g; ++c)
      t.set(r, c, t.at(r, c) + v[r] * jv[c]);
  return t;
}

std::vector<ModMatrix> humphries_generators(int g, long modulus) {
  if (g < 1) throw std::invalid_argument("humphries_generators: g must be >= 1");
  std::vector<ModMatrix> gens;
  auto unit = [&](int pos) {
    std::vector<long> v(2 * g, 0);
    v[pos] = 1;
    return v;
  };
  for (int i = 0; i < g; ++i) gens.push_back(transvection(unit(i), g, modulus));
  if (g == 1) {
    gens.push_back(transvection(unit(1), g, modulus));
    return gens;
  }
  for (int j = 0; j + 1 < g; ++j) {
    std::vector<long> v(2 * g, 0);
    v[g + j] = 1;
    v[g + j + 1] = -1;
    gens.push_back(transvection(v, g, modulus));
  }
  gens.push_back(transvection(unit(g + g - 2), g, modulus));  // b_{g-1}
  gens.push_back(transvection(unit(g + g - 1), g, modulus));  // b_g
  return gens;
}

std::optional<std::size_t> group_order_bfs(const std::vector<ModMatrix>& gens,
                                           std::size_t cap) {
  if (gens.empty()) return std::size_t{1};
  const int n = gens[0].rows();
  const long mod = gens[0].modulus();
  for (const auto& m : gens)
    if (m.rows() != n || m.cols() != n || m.modulus() != mod)
      throw std::invalid_argument("group_order_bfs: mixed generator shapes");
  const ModMatrix id = ModMatrix::identity(n, mod);
  std::unordered_set<std::string> seen;
  std::deque<ModMatrix> queue;
  seen.insert(id.key());
  queue.push_back(id);
  while (!queue.empty()) {
    const ModMatrix cur = std::move(queue.front());
    queue.pop_front();
    for (const auto& gmat : gens) {
      ModMatrix next = cur * gmat;
      if (seen.insert(next.key()).second) {
        if (seen.size() > cap) return std::nullopt;
        queue.push_back(std::move(next));
      }
    }
  }
  return seen.size();
}

bool is_sp_lie(const ModMatrix& m, long p) {
  if (m.rows() != m.cols() || m.rows() % 2 != 0)
    throw std::invalid_argument("is_sp_lie: matrix must be square of even size");
  const int g = m.rows() / 2;
  const ModMatrix mm = m.modulus() == p ? m : m.reduced(p);
  const ModMatrix j = symplectic_form(g, p);
  return (mm.transpose() * j + j * mm).is_zero();
}

ModMatrix reduce_mod(const ModMatrix& m, long p) {
  if (p < 2) throw std::invalid_argument("reduce_mod: p must be >= 2");
  long n = m.modulus();
  long power = 1;
  while (n % p == 0) {
    n /= p;
    power *= p;
  }
  if (n != 1 || power < p * p)
    throw std::invalid_argument(
        "reduce_mod: modulus must be p^{k+1} with k >= 1");
  return m.reduced(m.modulus() / p);
}

ModMatrix symplectic_inverse(const ModMatrix& m, int g) {
  const ModMatrix j = symplectic_form(g, m.modulus());
  // J^{-1} = -J
  return (j * m.transpose() * j).scaled(-1);
}

}  // namespace weilcheck
