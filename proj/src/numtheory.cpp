#include "qrseq/numtheory.hpp"

#include <algorithm>
#include <cmath>
#include <mutex>
#include <numeric>
#include <stdexcept>
#include <string>

namespace qrseq {

std::uint64_t mul_mod(std::uint64_t a, std::uint64_t b, std::uint64_t m) noexcept {
  return static_cast<std::uint64_t>((static_cast<__uint128_t>(a) * b) % m);
}

std::uint64_t pow_mod(std::uint64_t a, std::uint64_t e, std::uint64_t m) noexcept {
  if (m == 1) return 0;
  std::uint64_t r = 1;
  a %= m;
  while (e) {
    if (e & 1) r = mul_mod(r, a, m);
    a = mul_mod(a, a, m);
    e >>= 1;
  }
  return r;
}

namespace {

// Witness set proven deterministic for n < 3.3e24, so for all of uint64.
constexpr std::uint64_t kMrBases[] = {2, 3, 5, 7, 11, 13, 17, 19, 23, 29, 31, 37};

bool miller_rabin_composite(std::uint64_t n, std::uint64_t a, std::uint64_t d, unsigned s) {
  std::uint64_t x = pow_mod(a, d, n);
  if (x == 1 || x == n - 1) return false;
  for (unsigned i = 1; i < s; ++i) {
    x = mul_mod(x, x, n);
    if (x == n - 1) return false;
  }
  return true;
}

}  // namespace

bool is_prime(std::uint64_t n) noexcept {
  if (n < 2) return false;
  for (std::uint64_t q : kMrBases) {
    if (n % q == 0) return n == q;
  }
  std::uint64_t d = n - 1;
  unsigned s = 0;
  while ((d & 1) == 0) {
    d >>= 1;
    ++s;
  }
  for (std::uint64_t a : kMrBases) {
    if (miller_rabin_composite(n, a, d, s)) return false;
  }
  return true;
}

std::vector<std::uint64_t> primes_in_range(std::uint64_t lo, std::uint64_t hi) {
  if (lo > hi) throw std::invalid_argument("primes_in_range: empty range (lo > hi)");
  std::vector<std::uint64_t> out;
  if (hi < 2) return out;
  lo = std::max<std::uint64_t>(lo, 2);

  // Sieve dense ranges, fall back to per-candidate Miller-Rabin otherwise.
  const std::uint64_t len = hi - lo + 1;
  if (len >= 64 && hi <= (1ull << 34)) {
    std::vector<std::uint8_t> composite(len, 0);
    const auto root = static_cast<std::uint64_t>(std::sqrt(static_cast<double>(hi))) + 1;
    std::vector<std::uint8_t> small(root + 1, 0);
    for (std::uint64_t i = 2; i <= root; ++i) {
      if (small[i]) continue;
      for (std::uint64_t j = i * i; j <= root; j += i) small[j] = 1;
      std::uint64_t start = std::max(i * i, ((lo + i - 1) / i) * i);
      for (std::uint64_t j = start; j <= hi; j += i) composite[j - lo] = 1;
    }
    for (std::uint64_t v = lo; v <= hi; ++v) {
      if (!composite[v - lo]) out.push_back(v);
    }
    return out;
  }
  for (std::uint64_t v = lo; v <= hi; ++v) {
    if (is_prime(v)) out.push_back(v);
  }
  return out;
}

std::vector<std::uint64_t> first_primes_from(std::uint64_t start, std::size_t count) {
  std::vector<std::uint64_t> out;
  out.reserve(count);
  std::uint64_t v = std::max<std::uint64_t>(start, 2);
  while (out.size() < count) {
    if (is_prime(v)) out.push_back(v);
    v = (v <= 2) ? 3 : v + 2;
  }
  return out;
}

std::vector<std::pair<std::uint64_t, unsigned>> factorize(std::uint64_t n) {
  if (n == 0) throw std::domain_error("factorize: n must be >= 1");
  std::vector<std::pair<std::uint64_t, unsigned>> out;
  for (std::uint64_t d : {2ull, 3ull}) {
    unsigned e = 0;
    while (n % d == 0) {
      n /= d;
      ++e;
    }
    if (e) out.emplace_back(d, e);
  }
  for (std::uint64_t d = 5; d * d <= n; d += 6) {
    for (std::uint64_t q : {d, d + 2}) {
      unsigned e = 0;
      while (n % q == 0) {
        n /= q;
        ++e;
      }
      if (e) out.emplace_back(q, e);
    }
  }
  if (n > 1) out.emplace_back(n, 1);
  return out;
}

std::uint64_t euler_phi(std::uint64_t n) {
  std::uint64_t phi = 1;
  for (auto [p, e] : factorize(n)) {
    phi *= p - 1;
    for (unsigned i = 1; i < e; ++i) phi *= p;
  }
  return phi;
}

std::uint64_t multiplicative_order(std::uint64_t a, std::uint64_t m) {
  if (m < 2) throw std::domain_error("multiplicative_order: modulus must be >= 2");
  a %= m;
  if (std::gcd(a, m) != 1) throw std::domain_error("multiplicative_order: gcd(a, m) != 1");
  std::uint64_t k = euler_phi(m);
  for (auto [q, e] : factorize(k)) {
    (void)e;
    while (k % q == 0 && pow_mod(a, k / q, m) == 1) k /= q;
  }
  return k;
}

bool is_primitive_root(std::uint64_t a, std::uint64_t m) {
  if (!is_prime(m)) throw std::domain_error("is_primitive_root: modulus must be prime");
  return multiplicative_order(a, m) == m - 1;
}

int legendre_raw(std::uint64_t a, std::uint64_t p) noexcept {
  // Jacobi algorithm; equals the Legendre symbol for odd prime p.
  a %= p;
  if (a == 0) return 0;
  int t = 1;
  std::uint64_t n = p;
  while (a != 0) {
    while ((a & 1) == 0) {
      a >>= 1;
      std::uint64_t r = n & 7;
      if (r == 3 || r == 5) t = -t;
    }
    std::swap(a, n);
    if ((a & 3) == 3 && (n & 3) == 3) t = -t;
    a %= n;
  }
  return t;
}

struct ValidatedPrime::Tables {
  std::once_flag once;
  std::vector<std::uint64_t> bitmap;  // packed membership over 0..p-1
  std::vector<std::uint64_t> sorted;
};

ValidatedPrime::ValidatedPrime(std::uint64_t p) : p_(p), tables_(std::make_shared<Tables>()) {
  if (!is_prime(p)) {
    throw std::invalid_argument("ValidatedPrime: " + std::to_string(p) + " failed primality check");
  }
  if (p < 5) {
    throw std::invalid_argument("ValidatedPrime: " + std::to_string(p) + " failed p >= 5 check");
  }
}

void ValidatedPrime::ensure_tables() const {
  std::call_once(tables_->once, [this] {
    const std::uint64_t p = p_;
    auto& bm = tables_->bitmap;
    bm.assign((p + 63) / 64, 0);
    for (std::uint64_t x = 1; x <= (p - 1) / 2; ++x) {
      std::uint64_t a = mul_mod(x, x, p);
      bm[a >> 6] |= 1ull << (a & 63);
    }
    auto& sorted = tables_->sorted;
    sorted.reserve((p - 1) / 2);
    for (std::uint64_t a = 1; a < p; ++a) {
      if (bm[a >> 6] >> (a & 63) & 1) sorted.push_back(a);
    }
  });
}

bool ValidatedPrime::is_residue(std::uint64_t a) const {
  ensure_tables();
  a %= p_;
  return tables_->bitmap[a >> 6] >> (a & 63) & 1;
}

const std::vector<std::uint64_t>& ValidatedPrime::residues() const {
  ensure_tables();
  return tables_->sorted;
}

int legendre(std::uint64_t a, const ValidatedPrime& p) noexcept {
  return legendre_raw(a, p.value());
}

LargestQr largest_quadratic_residue(const ValidatedPrime& p) {
  const std::uint64_t pv = p.value();
  LargestQr out{};
  if (pv % 4 == 1) {
    out.case_tag = LargestQrCase::pm1mod4;
  } else if (pv % 8 == 3) {
    out.case_tag = LargestQrCase::p3mod8;
  } else {
    out.case_tag = LargestQrCase::p7mod8;
  }
  for (std::uint64_t a = pv - 1;; --a) {
    if (legendre_raw(a, pv) == 1) {
      out.value = a;
      break;
    }
  }
  out.u = pv - out.value;
  return out;
}

const char* to_string(LargestQrCase c) noexcept {
  switch (c) {
    case LargestQrCase::pm1mod4: return "pm1mod4";
    case LargestQrCase::p3mod8: return "p3mod8";
    case LargestQrCase::p7mod8: return "p7mod8";
  }
  return "?";
}

}  // namespace qrseq
