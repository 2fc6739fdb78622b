#pragma once

#include <cstdint>
#include <map>
#include <vector>

namespace weilcheck {

/// Incremental row-echelon rank over F_2 with bit-packed rows. Rows are
/// reduced against existing pivots on insertion; supports span membership
/// queries against the inserted rows.
class BitEchelon {
 public:
  explicit BitEchelon(int cols);

  /// Returns true when the row enlarged the span.
  bool insert(std::vector<std::uint64_t> row);
  bool insert_bits(const std::vector<int>& bits);

  bool in_span(std::vector<std::uint64_t> row) const;
  int rank() const { return static_cast<int>(pivots_.size()); }
  int cols() const { return cols_; }

  static std::vector<std::uint64_t> pack(const std::vector<int>& bits);

 private:
  int cols_;
  int words_;
  std::map<int, std::vector<std::uint64_t>> pivots_;  // leading column -> row
  int leading(const std::vector<std::uint64_t>& row) const;
  void reduce(std::vector<std::uint64_t>& row) const;
};

/// Incremental row-echelon rank over F_p (odd prime or 2, generic path).
class FpEchelon {
 public:
  FpEchelon(int cols, long p);

  bool insert(std::vector<long> row);
  bool in_span(std::vector<long> row) const;
  int rank() const { return static_cast<int>(pivots_.size()); }

 private:
  int cols_;
  long p_;
  std::map<int, std::vector<long>> pivots_;  // leading col -> row (monic lead)
  void reduce(std::vector<long>& row) const;
  long inv_mod(long a) const;
};

}  // namespace weilcheck
