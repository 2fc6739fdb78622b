#include "weilcheck/gf_linalg.hpp"

#include <stdexcept>

namespace weilcheck {

BitEchelon::BitEchelon(int cols)
    : cols_(cols), words_((cols + 63) / 64) {}

std::vector<std::uint64_t> BitEchelon::pack(const std::vector<int>& bits) {
  std::vector<std::uint64_t> row((bits.size() + 63) / 64, 0);
  for (std::size_t i = 0; i < bits.size(); ++i)
    if (bits[i] & 1) row[i / 64] |= (std::uint64_t{1} << (i % 64));
  return row;
}

int BitEchelon::leading(const std::vector<std::uint64_t>& row) const {
  for (int w = 0; w < words_; ++w)
    if (row[w] != 0)
      return w * 64 + __builtin_ctzll(row[w]);
  return -1;
}

void BitEchelon::reduce(std::vector<std::uint64_t>& row) const {
  int lead = leading(row);
  while (lead >= 0) {
    auto it = pivots_.find(lead);
    if (it == pivots_.end()) return;
    const auto& p = it->second;
    for (int w = 0; w < words_; ++w) row[w] ^= p[w];
    lead = leading(row);
  }
}

bool BitEchelon::insert(std::vector<std::uint64_t> row) {
  row.resize(words_, 0);
  reduce(row);
  const int lead = leading(row);
  if (lead < 0) return false;
  pivots_.emplace(lead, std::move(row));
  return true;
}

bool BitEchelon::insert_bits(const std::vector<int>& bits) {
  if (static_cast<int>(bits.size()) != cols_)
    throw std::invalid_argument("BitEchelon: wrong row length");
  return insert(pack(bits));
}

bool BitEchelon::in_span(std::vector<std::uint64_t> row) const {
  row.resize(words_, 0);
  reduce(row);
  return leading(row) < 0;
}

FpEchelon::FpEchelon(int cols, long p) : cols_(cols), p_(p) {
  if (p < 2) throw std::invalid_argument("FpEchelon: p must be >= 2");
}

long FpEchelon::inv_mod(long a) const {
  long t = 0, newt = 1, r = p_, newr = ((a % p_) + p_) % p_;
  while (newr != 0) {
    const long q = r / newr;
    t -= q * newt;
    std::swap(t, newt);
    r -= q * newr;
    std::swap(r, newr);
  }
  if (r != 1) throw std::domain_error("FpEchelon: not invertible");
  return ((t % p_) + p_) % p_;
}

void FpEchelon::reduce(std::vector<long>& row) const {
  for (const auto& [lead, pivot] : pivots_) {
    const long f = row[static_cast<std::size_t>(lead)] % p_;
    if (f == 0) continue;
    for (int i = lead; i < cols_; ++i)
      row[static_cast<std::size_t>(i)] =
          (row[static_cast<std::size_t>(i)] - f * pivot[static_cast<std::size_t>(i)]) % p_;
  }
  for (auto& v : row) v = ((v % p_) + p_) % p_;
}

bool FpEchelon::insert(std::vector<long> row) {
  if (static_cast<int>(row.size()) != cols_)
    throw std::invalid_argument("FpEchelon: wrong row length");
  for (auto& v : row) v = ((v % p_) + p_) % p_;
  reduce(row);
  int lead = -1;
  for (int i = 0; i < cols_; ++i)
    if (row[static_cast<std::size_t>(i)] != 0) { lead = i; break; }
  if (lead < 0) return false;
  const long inv = inv_mod(row[static_cast<std::size_t>(lead)]);
  for (int i = lead; i < cols_; ++i)
    row[static_cast<std::size_t>(i)] = (row[static_cast<std::size_t>(i)] * inv) % p_;
  pivots_.emplace(lead, std::move(row));
  return true;
}

bool FpEchelon::in_span(std::vector<long> row) const {
  if (static_cast<int>(row.size()) != cols_)
    throw std::invalid_argument("FpEchelon: wrong row length");
  for (auto& v : row) v = ((v % p_) + p_) % p_;
  reduce(row);
  for (long v : row)
    if (v != 0) return false;
  return true;
}

}  // namespace weilcheck
