#include "qrseq/polyf2.hpp"

#include <bit>
#include <stdexcept>

namespace qrseq {

namespace {

constexpr char kHexDigits[] = "0123456789abcdef";

// dst ^= src << shift, dst sized in advance.
void xor_shifted(std::vector<std::uint64_t>& dst, std::span<const std::uint64_t> src,
                 std::uint64_t shift) {
  const std::size_t ws = static_cast<std::size_t>(shift >> 6);
  const unsigned sh = static_cast<unsigned>(shift & 63);
  if (sh == 0) {
    for (std::size_t i = 0; i < src.size(); ++i) dst[ws + i] ^= src[i];
    return;
  }
  std::uint64_t carry = 0;
  for (std::size_t i = 0; i < src.size(); ++i) {
    dst[ws + i] ^= (src[i] << sh) | carry;
    carry = src[i] >> (64 - sh);
  }
  if (carry) dst[ws + src.size()] ^= carry;
}

}  // namespace

void BinaryPolynomial::trim() {
  while (!words_.empty() && words_.back() == 0) words_.pop_back();
}

BinaryPolynomial BinaryPolynomial::one() { return x_pow(0); }

BinaryPolynomial BinaryPolynomial::x_pow(std::uint64_t k) {
  BinaryPolynomial p;
  p.words_.assign(static_cast<std::size_t>(k / 64) + 1, 0);
  p.words_.back() = 1ull << (k & 63);
  return p;
}

BinaryPolynomial BinaryPolynomial::from_exponents(std::initializer_list<std::uint64_t> exps) {
  BinaryPolynomial p;
  for (auto e : exps) {
    std::size_t w = static_cast<std::size_t>(e / 64);
    if (p.words_.size() <= w) p.words_.resize(w + 1, 0);
    p.words_[w] ^= 1ull << (e & 63);
  }
  p.trim();
  return p;
}

BinaryPolynomial BinaryPolynomial::from_words(std::vector<std::uint64_t> words) {
  BinaryPolynomial p;
  p.words_ = std::move(words);
  p.trim();
  return p;
}

BinaryPolynomial BinaryPolynomial::from_sequence(const BitSequence& seq) {
  if (!seq.is_periodic()) {
    throw std::invalid_argument("BinaryPolynomial::from_sequence: sequence has no period");
  }
  BinaryPolynomial p;
  auto w = seq.words();
  p.words_.assign(w.begin(), w.end());
  p.trim();
  return p;
}

std::uint64_t BinaryPolynomial::degree() const {
  if (is_zero()) throw std::domain_error("BinaryPolynomial::degree: zero polynomial");
  const std::uint64_t top = words_.back();
  return (words_.size() - 1) * 64 + (63 - static_cast<unsigned>(std::countl_zero(top)));
}

int BinaryPolynomial::coefficient(std::uint64_t k) const noexcept {
  const std::size_t w = static_cast<std::size_t>(k / 64);
  if (w >= words_.size()) return 0;
  return static_cast<int>(words_[w] >> (k & 63) & 1);
}

BinaryPolynomial add(const BinaryPolynomial& a, const BinaryPolynomial& b) {
  BinaryPolynomial out;
  const auto& longer = a.words_.size() >= b.words_.size() ? a.words_ : b.words_;
  const auto& shorter = a.words_.size() >= b.words_.size() ? b.words_ : a.words_;
  out.words_ = longer;
  for (std::size_t i = 0; i < shorter.size(); ++i) out.words_[i] ^= shorter[i];
  out.trim();
  return out;
}

BinaryPolynomial mul(const BinaryPolynomial& a, const BinaryPolynomial& b) {
  if (a.is_zero() || b.is_zero()) return {};
  BinaryPolynomial out;
  out.words_.assign(a.words_.size() + b.words_.size(), 0);
  for (std::size_t w = 0; w < a.words_.size(); ++w) {
    std::uint64_t bits = a.words_[w];
    while (bits) {
      const unsigned tz = static_cast<unsigned>(std::countr_zero(bits));
      bits &= bits - 1;
      xor_shifted(out.words_, b.words_, static_cast<std::uint64_t>(w) * 64 + tz);
    }
  }
  out.trim();
  return out;
}

PolyDivMod PolyDivMod::of(const BinaryPolynomial& a, const BinaryPolynomial& b) {
  if (b.is_zero()) throw std::domain_error("polyf2: division by zero polynomial");
  PolyDivMod out;
  out.remainder = a;
  if (a.is_zero()) return out;
  const std::uint64_t db = b.degree();
  std::uint64_t da;
  while (!out.remainder.is_zero() && (da = out.remainder.degree()) >= db) {
    const std::uint64_t shift = da - db;
    std::size_t qw = static_cast<std::size_t>(shift / 64);
    if (out.quotient.words_.size() <= qw) out.quotient.words_.resize(qw + 1, 0);
    out.quotient.words_[qw] ^= 1ull << (shift & 63);
    xor_shifted(out.remainder.words_, b.words_, shift);
    out.remainder.trim();
  }
  out.quotient.trim();
  return out;
}

BinaryPolynomial rem(const BinaryPolynomial& a, const BinaryPolynomial& b) {
  return PolyDivMod::of(a, b).remainder;
}

BinaryPolynomial gcd(BinaryPolynomial a, BinaryPolynomial b) {
  if (a.is_zero() && b.is_zero()) throw std::domain_error("gcd: gcd(0, 0) is undefined");
  while (!b.is_zero()) {
    BinaryPolynomial r = rem(a, b);
    a = std::move(b);
    b = std::move(r);
  }
  return a;
}

BinaryPolynomial x_pow_minus_1(std::uint64_t T) {
  if (T == 0) throw std::domain_error("x_pow_minus_1: T must be >= 1");
  return add(BinaryPolynomial::x_pow(T), BinaryPolynomial::one());
}

std::string to_hex(const BinaryPolynomial& a) {
  std::string out;
  auto words = a.words();
  for (std::size_t w = 0; w < words.size(); ++w) {
    for (unsigned byte = 0; byte < 8; ++byte) {
      const auto v = static_cast<unsigned>(words[w] >> (8 * byte) & 0xff);
      out.push_back(kHexDigits[v >> 4]);
      out.push_back(kHexDigits[v & 0xf]);
    }
  }
  // Drop trailing zero bytes (highest degrees) but keep at least one byte.
  while (out.size() > 2 && out[out.size() - 1] == '0' && out[out.size() - 2] == '0') {
    out.resize(out.size() - 2);
  }
  if (out.empty()) out = "00";
  return out;
}

}  // namespace qrseq
