#pragma once

#include <cstdint>
#include <initializer_list>
#include <span>
#include <string>
#include <vector>

#include "qrseq/bitseq.hpp"

namespace qrseq {

/// Dense polynomial over F_2, packed 64 coefficients per word, always
/// trimmed so the top stored word is nonzero. The zero polynomial has no
/// numeric degree: degree() throws instead of returning a sentinel.
class BinaryPolynomial {
 public:
  BinaryPolynomial() = default;  // zero

  static BinaryPolynomial one();
  static BinaryPolynomial x_pow(std::uint64_t k);  // X^k
  static BinaryPolynomial from_exponents(std::initializer_list<std::uint64_t> exps);
  static BinaryPolynomial from_words(std::vector<std::uint64_t> words);

  // Coefficient of X^n is bits[n] of one period. Throws std::invalid_argument
  // for aperiodic input.
  static BinaryPolynomial from_sequence(const BitSequence& seq);

  bool is_zero() const noexcept { return words_.empty(); }

  // Degree of a nonzero polynomial; throws std::domain_error on zero.
  std::uint64_t degree() const;

  int coefficient(std::uint64_t k) const noexcept;

  std::span<const std::uint64_t> words() const noexcept { return words_; }

  bool operator==(const BinaryPolynomial&) const = default;

 private:
  void trim();
  friend BinaryPolynomial add(const BinaryPolynomial&, const BinaryPolynomial&);
  friend BinaryPolynomial mul(const BinaryPolynomial&, const BinaryPolynomial&);
  friend struct PolyDivMod;

  std::vector<std::uint64_t> words_;
};

BinaryPolynomial add(const BinaryPolynomial& a, const BinaryPolynomial& b);
BinaryPolynomial mul(const BinaryPolynomial& a, const BinaryPolynomial& b);

struct PolyDivMod {
  BinaryPolynomial quotient;
  BinaryPolynomial remainder;
  static PolyDivMod of(const BinaryPolynomial& a, const BinaryPolynomial& b);
};

// Remainder of a by b; throws std::domain_error when b = 0.
BinaryPolynomial rem(const BinaryPolynomial& a, const BinaryPolynomial& b);

// Euclidean gcd; gcd(a, 0) = a. Throws std::domain_error when both are zero.
// Leading coefficients over F_2 are 1, so the result is monic by construction.
BinaryPolynomial gcd(BinaryPolynomial a, BinaryPolynomial b);

// X^T + 1 (same as X^T - 1 in characteristic 2). T >= 1.
BinaryPolynomial x_pow_minus_1(std::uint64_t T);

// Debug serialization: coefficient bytes low degree first, two hex digits
// per byte. Not a stability contract.
std::string to_hex(const BinaryPolynomial& a);

}  // namespace qrseq
