#pragma once

#include <cstdint>
#include <optional>
#include <span>
#include <string>
#include <string_view>
#include <vector>

#include "qrseq/numtheory.hpp"

namespace qrseq {

/// Word-packed binary word with an optional period T. When the period is
/// set the stored bits are exactly one period and indexing wraps.
class BitSequence {
 public:
  BitSequence() = default;

  static BitSequence zeros(std::size_t n);
  static BitSequence ones(std::size_t n);
  static BitSequence from_string(std::string_view s01);  // "0110..."
  static BitSequence from_bits(const std::vector<std::uint8_t>& bits);

  void push_back(int bit);

  std::size_t size() const noexcept { return size_; }
  bool empty() const noexcept { return size_ == 0; }

  // Raw bit, i < size().
  int bit(std::size_t i) const noexcept { return static_cast<int>(words_[i >> 6] >> (i & 63) & 1); }

  // Periodic indexing when the period is set; bounds-checked otherwise
  // (std::out_of_range).
  int at(std::uint64_t n) const;

  std::optional<std::uint64_t> period() const noexcept { return period_; }
  bool is_periodic() const noexcept { return period_.has_value(); }

  // Declares the stored bits to be one full period. Throws unless T == size().
  void set_period(std::uint64_t T);

  std::span<const std::uint64_t> words() const noexcept { return words_; }
  std::size_t ones_count() const noexcept;

  std::string to_string() const;  // 0/1 characters, no separators

  // First n terms as one byte per bit, extending periodically when allowed.
  std::vector<std::uint8_t> materialize(std::uint64_t n) const;

  bool operator==(const BitSequence&) const = default;

 private:
  std::vector<std::uint64_t> words_;
  std::size_t size_ = 0;
  std::optional<std::uint64_t> period_;
};

enum class SequenceKind { D_GAP_PARITY, T_CONSECUTIVE };

// d_n = q_n + q_{n+1} mod 2, n = 0..(p-5)/2, declared (p-3)/2-periodic.
BitSequence build_d(const ValidatedPrime& p);

// t_n = 1 iff q_{n+1} = q_n + 1, same length and period.
BitSequence build_t(const ValidatedPrime& p);

BitSequence build_sequence(const ValidatedPrime& p, SequenceKind kind);

const char* to_string(SequenceKind k) noexcept;

}  // namespace qrseq
