#include "qrseq/bitseq.hpp"

#include <bit>
#include <stdexcept>

namespace qrseq {

BitSequence BitSequence::zeros(std::size_t n) {
  BitSequence s;
  s.words_.assign((n + 63) / 64, 0);
  s.size_ = n;
  return s;
}

BitSequence BitSequence::ones(std::size_t n) {
  BitSequence s = zeros(n);
  for (auto& w : s.words_) w = ~0ull;
  if (n & 63) s.words_.back() &= (1ull << (n & 63)) - 1;
  return s;
}

BitSequence BitSequence::from_string(std::string_view s01) {
  BitSequence s;
  for (char c : s01) {
    if (c != '0' && c != '1') throw std::invalid_argument("BitSequence: expected 0/1 characters");
    s.push_back(c - '0');
  }
  return s;
}

BitSequence BitSequence::from_bits(const std::vector<std::uint8_t>& bits) {
  BitSequence s;
  for (auto b : bits) s.push_back(b & 1);
  return s;
}

void BitSequence::push_back(int bit) {
  if ((size_ & 63) == 0) words_.push_back(0);
  if (bit & 1) words_.back() |= 1ull << (size_ & 63);
  ++size_;
}

int BitSequence::at(std::uint64_t n) const {
  if (period_) return bit(static_cast<std::size_t>(n % *period_));
  if (n >= size_) throw std::out_of_range("BitSequence::at: index past end of aperiodic sequence");
  return bit(static_cast<std::size_t>(n));
}

void BitSequence::set_period(std::uint64_t T) {
  if (T == 0 || T != size_) {
    throw std::invalid_argument("BitSequence::set_period: period must equal stored length");
  }
  period_ = T;
}

std::size_t BitSequence::ones_count() const noexcept {
  std::size_t n = 0;
  for (auto w : words_) n += static_cast<std::size_t>(std::popcount(w));
  return n;
}

std::string BitSequence::to_string() const {
  std::string out(size_, '0');
  for (std::size_t i = 0; i < size_; ++i) out[i] = static_cast<char>('0' + bit(i));
  return out;
}

std::vector<std::uint8_t> BitSequence::materialize(std::uint64_t n) const {
  std::vector<std::uint8_t> out(n);
  if (period_) {
    for (std::uint64_t i = 0; i < n; ++i) out[i] = static_cast<std::uint8_t>(bit(i % *period_));
  } else {
    if (n > size_) throw std::out_of_range("BitSequence::materialize: aperiodic sequence too short");
    for (std::uint64_t i = 0; i < n; ++i) out[i] = static_cast<std::uint8_t>(bit(i));
  }
  return out;
}

namespace {

BitSequence build_from_residues(const ValidatedPrime& p, SequenceKind kind) {
  const auto& q = p.residues();
  const std::uint64_t T = (p.value() - 3) / 2;  // q.size() - 1
  BitSequence s;
  for (std::uint64_t n = 0; n < T; ++n) {
    int b = kind == SequenceKind::D_GAP_PARITY ? static_cast<int>((q[n] ^ q[n + 1]) & 1)
                                               : (q[n + 1] == q[n] + 1 ? 1 : 0);
    s.push_back(b);
  }
  s.set_period(T);
  return s;
}

}  // namespace

BitSequence build_d(const ValidatedPrime& p) { return build_from_residues(p, SequenceKind::D_GAP_PARITY); }

BitSequence build_t(const ValidatedPrime& p) { return build_from_residues(p, SequenceKind::T_CONSECUTIVE); }

BitSequence build_sequence(const ValidatedPrime& p, SequenceKind kind) { return build_from_residues(p, kind); }

const char* to_string(SequenceKind k) noexcept {
  return k == SequenceKind::D_GAP_PARITY ? "d" : "t";
}

}  // namespace qrseq
