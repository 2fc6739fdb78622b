#pragma once

#include <cstdint>
#include <string>
#include <vector>

namespace weilcheck {

/// Residue in Z/nZ, always stored reduced to [0, n).
struct ZMod {
  long value = 0;
  long modulus = 1;

  ZMod() = default;
  ZMod(long v, long n);

  ZMod operator+(ZMod rhs) const;
  ZMod operator-(ZMod rhs) const;
  ZMod operator*(ZMod rhs) const;
  ZMod operator-() const;
  bool operator==(ZMod rhs) const;
  bool is_unit() const;
  ZMod inverse() const;  // exists iff gcd(value, n) = 1
};

/// Dense rows x cols matrix over Z/nZ with one shared modulus.
class ModMatrix {
 public:
  ModMatrix() = default;
  ModMatrix(int rows, int cols, long modulus);
  static ModMatrix identity(int n, long modulus);

  int rows() const { return rows_; }
  int cols() const { return cols_; }
  long modulus() const { return modulus_; }

  long at(int r, int c) const { return data_[idx(r, c)]; }
  void set(int r, int c, long v);

  ModMatrix operator+(const ModMatrix& rhs) const;
  ModMatrix operator-(const ModMatrix& rhs) const;
  ModMatrix operator*(const ModMatrix& rhs) const;
  ModMatrix scaled(long s) const;
  bool operator==(const ModMatrix& rhs) const;
  bool operator!=(const ModMatrix& rhs) const { return !(*this == rhs); }

  ModMatrix transpose() const;
  bool is_identity() const;
  bool is_zero() const;

  /// Entrywise reduction to a divisor modulus.
  ModMatrix reduced(long new_modulus) const;

  /// Inverse over Z/nZ via elimination with unit pivots; throws when the
  /// matrix is not invertible.
  ModMatrix inverse() const;

  /// Canonical byte encoding, usable as a hash/set key.
  std::string key() const;

 private:
  int rows_ = 0, cols_ = 0;
  long modulus_ = 1;
  std::vector<long> data_;
  std::size_t idx(int r, int c) const {
    return static_cast<std::size_t>(r) * cols_ + c;
  }
};

/// Small dense integer matrix (exact arithmetic over Z).
class IntMat {
 public:
  IntMat() = default;
  IntMat(int rows, int cols);
  static IntMat identity(int n);

  int rows() const { return rows_; }
  int cols() const { return cols_; }
  long long at(int r, int c) const { return data_[idx(r, c)]; }
  void set(int r, int c, long long v) { data_[idx(r, c)] = v; }

  IntMat operator+(const IntMat& rhs) const;
  IntMat operator-(const IntMat& rhs) const;
  IntMat operator*(const IntMat& rhs) const;  // overflow-checked
  IntMat operator-() const;
  bool operator==(const IntMat& rhs) const;
  bool operator!=(const IntMat& rhs) const { return !(*this == rhs); }

  IntMat transpose() const;
  long long det() const;       // Bareiss, exact
  IntMat unimodular_inverse() const;  // requires det = +-1

  ModMatrix reduced(long modulus) const;

 private:
  int rows_ = 0, cols_ = 0;
  std::vector<long long> data_;
  std::size_t idx(int r, int c) const {
    return static_cast<std::size_t>(r) * cols_ + c;
  }
};

/// Repo-wide matrix text format: rows separated by ';', entries by ','.
IntMat parse_matrix(const std::string& text);
std::string format_matrix(const IntMat& m);
std::string format_matrix(const ModMatrix& m);

}  // namespace weilcheck
