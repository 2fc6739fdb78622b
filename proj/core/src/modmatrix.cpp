#include "weilcheck/modmatrix.hpp"

#include <cctype>
#include <numeric>
#include <sstream>
#include <stdexcept>

namespace weilcheck {

namespace {
long normalize(long v, long n) {
  v %= n;
  if (v < 0) v += n;
  return v;
}

void require_same_modulus(const ModMatrix& a, const ModMatrix& b) {
  if (a.modulus() != b.modulus())
    throw std::invalid_argument("ModMatrix: mixed moduli");
}

long long checked_mul(long long a, long long b) {
  long long r;
  if (__builtin_mul_overflow(a, b, &r))
    throw std::overflow_error("IntMat: multiplication overflow");
  return r;
}

long long checked_add(long long a, long long b) {
  long long r;
  if (__builtin_add_overflow(a, b, &r))
    throw std::overflow_error("IntMat: addition overflow");
  return r;
}
}  // namespace

ZMod::ZMod(long v, long n) : value(normalize(v, n)), modulus(n) {
  if (n < 1) throw std::invalid_argument("ZMod: modulus must be positive");
}

ZMod ZMod::operator+(ZMod rhs) const {
  if (modulus != rhs.modulus) throw std::invalid_argument("ZMod: mixed moduli");
  return ZMod(value + rhs.value, modulus);
}
ZMod ZMod::operator-(ZMod rhs) const {
  if (modulus != rhs.modulus) throw std::invalid_argument("ZMod: mixed moduli");
  return ZMod(value - rhs.value, modulus);
}
ZMod ZMod::operator*(ZMod rhs) const {
  if (modulus != rhs.modulus) throw std::invalid_argument("ZMod: mixed moduli");
  return ZMod(value * rhs.value, modulus);
}
ZMod ZMod::operator-() const { return ZMod(-value, modulus); }
bool ZMod::operator==(ZMod rhs) const {
  return modulus == rhs.modulus && value == rhs.value;
}
bool ZMod::is_unit() const { return std::gcd(value, modulus) == 1; }

ZMod ZMod::inverse() const {
  long t = 0, newt = 1, r = modulus, newr = value;
  while (newr != 0) {
    const long q = r / newr;
    t -= q * newt;
    std::swap(t, newt);
    r -= q * newr;
    std::swap(r, newr);
  }
  if (r != 1) throw std::domain_error("ZMod: value is not invertible");
  return ZMod(t, modulus);
}

ModMatrix::ModMatrix(int rows, int cols, long modulus)
    : rows_(rows), cols_(cols), modulus_(modulus),
      data_(static_cast<std::size_t>(rows) * cols, 0) {
  if (rows < 0 || cols < 0 || modulus < 1)
    throw std::invalid_argument("ModMatrix: bad shape or modulus");
}

ModMatrix ModMatrix::identity(int n, long modulus) {
  ModMatrix m(n, n, modulus);
  for (int i = 0; i < n; ++i) m.set(i, i, 1);
  return m;
}

void ModMatrix::set(int r, int c, long v) {
  data_[idx(r, c)] = normalize(v, modulus_);
}

ModMatrix ModMatrix::operator+(const ModMatrix& rhs) const {
  require_same_modulus(*this, rhs);
  if (rows_ != rhs.rows_ || cols_ != rhs.cols_)
    throw std::invalid_argument("ModMatrix: shape mismatch");
  ModMatrix r(rows_, cols_, modulus_);
  for (std::size_t i = 0; i < data_.size(); ++i)
    r.data_[i] = normalize(data_[i] + rhs.data_[i], modulus_);
  return r;
}

ModMatrix ModMatrix::operator-(const ModMatrix& rhs) const {
  require_same_modulus(*this, rhs);
  if (rows_ != rhs.rows_ || cols_ != rhs.cols_)
    throw std::invalid_argument("ModMatrix: shape mismatch");
  ModMatrix r(rows_, cols_, modulus_);
  for (std::size_t i = 0; i < data_.size(); ++i)
    r.data_[i] = normalize(data_[i] - rhs.data_[i], modulus_);
  return r;
}

ModMatrix ModMatrix::operator*(const ModMatrix& rhs) const {
  require_same_modulus(*this, rhs);
  if (cols_ != rhs.rows_)
    throw std::invalid_argument("ModMatrix: shape mismatch");
  ModMatrix r(rows_, rhs.cols_, modulus_);
  for (int i = 0; i < rows_; ++i)
    for (int j = 0; j < rhs.cols_; ++j) {
      long acc = 0;
      for (int t = 0; t < cols_; ++t)
        acc = (acc + at(i, t) * rhs.at(t, j)) % modulus_;
      r.data_[r.idx(i, j)] = acc;
    }
  return r;
}

ModMatrix ModMatrix::scaled(long s) const {
  ModMatrix r(rows_, cols_, modulus_);
  s = normalize(s, modulus_);
  for (std::size_t i = 0; i < data_.size(); ++i)
    r.data_[i] = normalize(data_[i] * s, modulus_);
  return r;
}

bool ModMatrix::operator==(const ModMatrix& rhs) const {
  return rows_ == rhs.rows_ && cols_ == rhs.cols_ &&
         modulus_ == rhs.modulus_ && data_ == rhs.data_;
}

ModMatrix ModMatrix::transpose() const {
  ModMatrix r(cols_, rows_, modulus_);
  for (int i = 0; i < rows_; ++i)
    for (int j = 0; j < cols_; ++j) r.data_[r.idx(j, i)] = at(i, j);
  return r;
}

bool ModMatrix::is_identity() const {
  if (rows_ != cols_) return false;
  for (int i = 0; i < rows_; ++i)
    for (int j = 0; j < cols_; ++j)
      if (at(i, j) != (i == j ? 1 % modulus_ : 0)) return false;
  return true;
}

bool ModMatrix::is_zero() const {
  for (long v : data_)
    if (v != 0) return false;
  return true;
}

ModMatrix ModMatrix::reduced(long new_modulus) const {
  if (new_modulus < 1 || modulus_ % new_modulus != 0)
    throw std::invalid_argument("ModMatrix: new modulus must divide the old one");
  ModMatrix r(rows_, cols_, new_modulus);
  for (int i = 0; i < rows_; ++i)
    for (int j = 0; j < cols_; ++j) r.set(i, j, at(i, j));
  return r;
}

ModMatrix ModMatrix::inverse() const {
  if (rows_ != cols_) throw std::invalid_argument("ModMatrix: not square");
  const int n = rows_;
  ModMatrix a = *this;
  ModMatrix inv = identity(n, modulus_);
  for (int col = 0; col < n; ++col) {
    int pivot = -1;
    for (int r = col; r < n; ++r)
      if (ZMod(a.at(r, col), modulus_).is_unit()) { pivot = r; break; }
    if (pivot < 0) throw std::domain_error("ModMatrix: not invertible");
    if (pivot != col)
      for (int j = 0; j < n; ++j) {
        std::swap(a.data_[a.idx(pivot, j)], a.data_[a.idx(col, j)]);
        std::swap(inv.data_[inv.idx(pivot, j)], inv.data_[inv.idx(col, j)]);
      }
    const long pinv = ZMod(a.at(col, col), modulus_).inverse().value;
    for (int j = 0; j < n; ++j) {
      a.data_[a.idx(col, j)] = normalize(a.at(col, j) * pinv, modulus_);
      inv.data_[inv.idx(col, j)] = normalize(inv.at(col, j) * pinv, modulus_);
    }
    for (int r = 0; r < n; ++r) {
      if (r == col) continue;
      const long f = a.at(r, col);
      if (f == 0) continue;
      for (int j = 0; j < n; ++j) {
        a.data_[a.idx(r, j)] = normalize(a.at(r, j) - f * a.at(col, j), modulus_);
        inv.data_[inv.idx(r, j)] =
            normalize(inv.at(r, j) - f * inv.at(col, j), modulus_);
      }
    }
  }
  return inv;
}

std::string ModMatrix::key() const {
  std::string k;
  k.reserve(data_.size() + 8);
  k.push_back(static_cast<char>(rows_));
  k.push_back(static_cast<char>(cols_));
  for (long v : data_) {
    if (modulus_ <= 256) {
      k.push_back(static_cast<char>(v));
    } else {
      k.push_back(static_cast<char>(v & 0xff));
      k.push_back(static_cast<char>((v >> 8) & 0xff));
      k.push_back(static_cast<char>((v >> 16) & 0xff));
    }
  }
  return k;
}

IntMat::IntMat(int rows, int cols)
    : rows_(rows), cols_(cols),
      data_(static_cast<std::size_t>(rows) * cols, 0) {
  if (rows < 0 || cols < 0) throw std::invalid_argument("IntMat: bad shape");
}

IntMat IntMat::identity(int n) {
  IntMat m(n, n);
  for (int i = 0; i < n; ++i) m.set(i, i, 1);
  return m;
}

IntMat IntMat::operator+(const IntMat& rhs) const {
  if (rows_ != rhs.rows_ || cols_ != rhs.cols_)
    throw std::invalid_argument("IntMat: shape mismatch");
  IntMat r(rows_, cols_);
  for (std::size_t i = 0; i < data_.size(); ++i)
    r.data_[i] = checked_add(data_[i], rhs.data_[i]);
  return r;
}

IntMat IntMat::operator-(const IntMat& rhs) const {
  if (rows_ != rhs.rows_ || cols_ != rhs.cols_)
    throw std::invalid_argument("IntMat: shape mismatch");
  IntMat r(rows_, cols_);
  for (std::size_t i = 0; i < data_.size(); ++i)
    r.data_[i] = checked_add(data_[i], -rhs.data_[i]);
  return r;
}

IntMat IntMat::operator*(const IntMat& rhs) const {
  if (cols_ != rhs.rows_) throw std::invalid_argument("IntMat: shape mismatch");
  IntMat r(rows_, rhs.cols_);
  for (int i = 0; i < rows_; ++i)
    for (int j = 0; j < rhs.cols_; ++j) {
      long long acc = 0;
      for (int t = 0; t < cols_; ++t)
        acc = checked_add(acc, checked_mul(at(i, t), rhs.at(t, j)));
      r.set(i, j, acc);
    }
  return r;
}

IntMat IntMat::operator-() const {
  IntMat r(rows_, cols_);
  for (std::size_t i = 0; i < data_.size(); ++i) r.data_[i] = -data_[i];
  return r;
}

bool IntMat::operator==(const IntMat& rhs) const {
  return rows_ == rhs.rows_ && cols_ == rhs.cols_ && data_ == rhs.data_;
}

IntMat IntMat::transpose() const {
  IntMat r(cols_, rows_);
  for (int i = 0; i < rows_; ++i)
    for (int j = 0; j < cols_; ++j) r.set(j, i, at(i, j));
  return r;
}

long long IntMat::det() const {
  if (rows_ != cols_) throw std::invalid_argument("IntMat: not square");
  const int n = rows_;
  if (n == 0) return 1;
  // Bareiss fraction-free elimination.
  std::vector<long long> a = data_;
  auto at2 = [&](int r, int c) -> long long& {
    return a[static_cast<std::size_t>(r) * n + c];
  };
  long long sign = 1, prev = 1;
  for (int k = 0; k < n - 1; ++k) {
    if (at2(k, k) == 0) {
      int swap_row = -1;
      for (int r = k + 1; r < n; ++r)
        if (at2(r, k) != 0) { swap_row = r; break; }
      if (swap_row < 0) return 0;
      for (int c = 0; c < n; ++c) std::swap(at2(k, c), at2(swap_row, c));
      sign = -sign;
    }
    for (int i = k + 1; i < n; ++i)
      for (int j = k + 1; j < n; ++j) {
        const long long num = checked_add(checked_mul(at2(i, j), at2(k, k)),
                                          -checked_mul(at2(i, k), at2(k, j)));
        at2(i, j) = num / prev;
      }
    prev = at2(k, k);
  }
  return sign * at2(n - 1, n - 1);
}

IntMat IntMat::unimodular_inverse() const {
  const long long d = det();
  if (d != 1 && d != -1)
    throw std::domain_error("IntMat: matrix is not unimodular");
  const int n = rows_;
  // adjugate via cofactors (desk-scale sizes only)
  IntMat adj(n, n);
  for (int i = 0; i < n; ++i)
    for (int j = 0; j < n; ++j) {
      IntMat minor(n - 1, n - 1);
      for (int r = 0, rr = 0; r < n; ++r) {
        if (r == i) continue;
        for (int c = 0, cc = 0; c < n; ++c) {
          if (c == j) continue;
          minor.set(rr, cc, at(r, c));
          ++cc;
        }
        ++rr;
      }
      const long long cof = ((i + j) % 2 == 0 ? 1 : -1) * minor.det();
      adj.set(j, i, cof);
    }
  if (d == -1)
    for (int i = 0; i < n; ++i)
      for (int j = 0; j < n; ++j) adj.set(i, j, -adj.at(i, j));
  return adj;
}

ModMatrix IntMat::reduced(long modulus) const {
  ModMatrix r(rows_, cols_, modulus);
  for (int i = 0; i < rows_; ++i)
    for (int j = 0; j < cols_; ++j) r.set(i, j, static_cast<long>(at(i, j) % modulus));
  return r;
}

IntMat parse_matrix(const std::string& text) {
  std::vector<std::vector<long long>> rows;
  std::stringstream ss(text);
  std::string row;
  while (std::getline(ss, row, ';')) {
    std::vector<long long> entries;
    std::stringstream rs(row);
    std::string cell;
    while (std::getline(rs, cell, ',')) {
      std::size_t pos = 0;
      const long long v = std::stoll(cell, &pos);
      while (pos < cell.size() && std::isspace(static_cast<unsigned char>(cell[pos]))) ++pos;
      if (pos != cell.size())
        throw std::invalid_argument("parse_matrix: bad entry '" + cell + "'");
      entries.push_back(v);
    }
    if (!entries.empty()) rows.push_back(std::move(entries));
  }
  if (rows.empty()) throw std::invalid_argument("parse_matrix: empty input");
  const std::size_t cols = rows[0].size();
  for (const auto& r : rows)
    if (r.size() != cols)
      throw std::invalid_argument("parse_matrix: ragged rows");
  IntMat m(static_cast<int>(rows.size()), static_cast<int>(cols));
  for (int i = 0; i < m.rows(); ++i)
    for (int j = 0; j < m.cols(); ++j) m.set(i, j, rows[i][j]);
  return m;
}

std::string format_matrix(const IntMat& m) {
  std::ostringstream os;
  for (int i = 0; i < m.rows(); ++i) {
    if (i) os << ";";
    for (int j = 0; j < m.cols(); ++j) {
      if (j) os << ",";
      os << m.at(i, j);
    }
  }
  return os.str();
}

std::string format_matrix(const ModMatrix& m) {
  std::ostringstream os;
  for (int i = 0; i < m.rows(); ++i) {
    if (i) os << ";";
    for (int j = 0; j < m.cols(); ++j) {
      if (j) os << ",";
      os << m.at(i, j);
    }
  }
  return os.str();
}

}  // namespace weilcheck
