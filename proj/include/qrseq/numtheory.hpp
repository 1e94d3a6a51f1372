#pragma once

#include <cstdint>
#include <memory>
#include <utility>
#include <vector>

namespace qrseq {

// Deterministic Miller-Rabin, valid for all n < 2^63.
bool is_prime(std::uint64_t n) noexcept;

// All primes in [lo, hi], ascending. Throws std::invalid_argument if lo > hi.
std::vector<std::uint64_t> primes_in_range(std::uint64_t lo, std::uint64_t hi);

// First `count` primes p >= start, ascending.
std::vector<std::uint64_t> first_primes_from(std::uint64_t start, std::size_t count);

std::uint64_t mul_mod(std::uint64_t a, std::uint64_t b, std::uint64_t m) noexcept;
std::uint64_t pow_mod(std::uint64_t a, std::uint64_t e, std::uint64_t m) noexcept;

// Prime-exponent pairs with ascending primes; factorize(1) is empty.
std::vector<std::pair<std::uint64_t, unsigned>> factorize(std::uint64_t n);

std::uint64_t euler_phi(std::uint64_t n);

// Smallest k >= 1 with a^k = 1 (mod m). Throws std::domain_error unless
// gcd(a, m) = 1 and m >= 2.
std::uint64_t multiplicative_order(std::uint64_t a, std::uint64_t m);

// m must be prime and not divide a; true iff ord_m(a) = m - 1.
bool is_primitive_root(std::uint64_t a, std::uint64_t m);

/// A checked odd prime p >= 5 with shared lazily built residue tables.
/// Tables are built at most once (std::call_once) and are immutable
/// afterwards, so concurrent readers are safe. Copies share the tables.
class ValidatedPrime {
 public:
  explicit ValidatedPrime(std::uint64_t p);

  std::uint64_t value() const noexcept { return p_; }

  // Membership test for a quadratic residue, a taken mod p. a = 0 -> false.
  bool is_residue(std::uint64_t a) const;

  // q_0 < q_1 < ... < q_{(p-3)/2}, the residues in increasing order.
  const std::vector<std::uint64_t>& residues() const;

  std::uint64_t residue_count() const noexcept { return (p_ - 1) / 2; }

 private:
  struct Tables;
  void ensure_tables() const;

  std::uint64_t p_;
  std::shared_ptr<Tables> tables_;
};

// Legendre symbol (a/p) in {-1, 0, +1}, via the iterative reciprocity
// algorithm (no table lookup).
int legendre(std::uint64_t a, const ValidatedPrime& p) noexcept;
int legendre_raw(std::uint64_t a, std::uint64_t odd_prime) noexcept;

inline const std::vector<std::uint64_t>& quadratic_residues(const ValidatedPrime& p) {
  return p.residues();
}

enum class LargestQrCase { pm1mod4, p3mod8, p7mod8 };

struct LargestQr {
  std::uint64_t value;  // q_{(p-3)/2}
  LargestQrCase case_tag;
  std::uint64_t u;  // p - value
};

// Found by a downward Legendre scan, independent of the residue table.
LargestQr largest_quadratic_residue(const ValidatedPrime& p);

const char* to_string(LargestQrCase c) noexcept;

}  // namespace qrseq
