#pragma once

#include <cstdint>
#include <stdexcept>
#include <vector>

#include "qrseq/bitseq.hpp"

namespace qrseq {

enum class ProfileKind { LINEAR, MAX_ORDER };

struct ComplexityProfile {
  ProfileKind kind;
  std::vector<std::uint64_t> values;  // values[N-1] = measure of the first N terms
};

// L(s_n) = T - deg(gcd(X^T + 1, S(X))) for a T-periodic sequence; the
// all-zero sequence has L = 0.
std::uint64_t linear_complexity_gcd(const BitSequence& seq);

// Berlekamp-Massey on the first n_terms terms (word-packed, masked-parity
// discrepancies). Feeding 2T terms of a T-periodic sequence yields the
// periodic linear complexity.
std::uint64_t linear_complexity_bm(const BitSequence& seq, std::uint64_t n_terms);

// One BM pass recording L after every term.
ComplexityProfile linear_profile(const BitSequence& seq, std::uint64_t n_terms);

// Maximum order complexity of the first n_terms terms: 1 + length of the
// longest word occurring twice with distinct successor bits (suffix
// automaton). n_terms >= 2.
std::uint64_t max_order_complexity(const BitSequence& seq, std::uint64_t n_terms);

// M of the full periodic sequence. Window constraints repeat with period T,
// so scanning the 2T-term extension is exact.
std::uint64_t max_order_complexity_periodic(const BitSequence& seq);

ComplexityProfile moc_profile(const BitSequence& seq, std::uint64_t n_terms);

inline constexpr std::uint64_t kDefaultC2Cap = 4096;

class C2CapExceeded : public std::runtime_error {
 public:
  C2CapExceeded(std::uint64_t n, std::uint64_t cap);
  std::uint64_t n() const noexcept { return n_; }
  std::uint64_t cap() const noexcept { return cap_; }

 private:
  std::uint64_t n_, cap_;
};

struct C2Witness {
  std::uint64_t value;   // |sum| at the witness
  std::uint64_t window;  // M
  std::uint64_t d1, d2;  // shifts, d1 < d2 <= N - M
};

// Exact order-2 correlation measure over the first N terms: maximum of
// |sum_{n<M} (-1)^{s_{n+d1}+s_{n+d2}}| over all M >= 1, 0 <= d1 < d2 <= N-M.
// Ties resolve to the smallest (d2, d1, M). Cubic cost; refuses N > cap.
C2Witness correlation_measure_2(const BitSequence& seq, std::uint64_t N,
                                std::uint64_t cap = kDefaultC2Cap);

}  // namespace qrseq
