#include "qrseq/complexity.hpp"

#include <algorithm>
#include <bit>
#include <cstdlib>
#include <string>

#include "qrseq/polyf2.hpp"

namespace qrseq {

std::uint64_t linear_complexity_gcd(const BitSequence& seq) {
  if (!seq.is_periodic()) {
    throw std::invalid_argument("linear_complexity_gcd: sequence has no period");
  }
  const std::uint64_t T = *seq.period();
  BinaryPolynomial s = BinaryPolynomial::from_sequence(seq);
  if (s.is_zero()) return 0;
  BinaryPolynomial g = gcd(x_pow_minus_1(T), s);
  return T - g.degree();
}

namespace {

// Packed bit buffer with fixed capacity, for the BM inner loops.
struct Words {
  std::vector<std::uint64_t> w;
  explicit Words(std::size_t nwords) : w(nwords, 0) {}
  void set_bit0() { w[0] |= 1; }
  // this ^= other << shift
  void xor_shifted(const Words& other, std::uint64_t shift) {
    const std::size_t ws = static_cast<std::size_t>(shift >> 6);
    const unsigned sh = static_cast<unsigned>(shift & 63);
    const std::size_t n = w.size();
    if (sh == 0) {
      for (std::size_t i = 0; i + ws < n; ++i) w[i + ws] ^= other.w[i];
      return;
    }
    std::uint64_t carry = 0;
    for (std::size_t i = 0; i + ws < n; ++i) {
      w[i + ws] ^= (other.w[i] << sh) | carry;
      carry = other.w[i] >> (64 - sh);
    }
  }
};

// Parity of AND(c[0..L], rev[off..off+L]) where rev holds the input bits
// reversed; c is zero above bit L, so no tail mask is needed.
int discrepancy(const Words& c, std::uint64_t L, const std::vector<std::uint64_t>& rev,
                std::uint64_t off) {
  const std::size_t nwords = static_cast<std::size_t>(L / 64) + 1;
  const std::size_t base = static_cast<std::size_t>(off >> 6);
  const unsigned sh = static_cast<unsigned>(off & 63);
  std::uint64_t acc = 0;
  for (std::size_t i = 0; i < nwords; ++i) {
    std::uint64_t r = rev[base + i] >> sh;
    if (sh) {
      const std::size_t hi = base + i + 1;
      if (hi < rev.size()) r |= rev[hi] << (64 - sh);
    }
    acc ^= c.w[i] & r;
  }
  return std::popcount(acc) & 1;
}

struct BmState {
  std::uint64_t n_terms;
  std::vector<std::uint64_t> rev;  // input bits reversed, packed
  Words c, b, tmp;
  std::uint64_t L = 0;
  std::uint64_t m = 1;

  explicit BmState(const std::vector<std::uint8_t>& bits)
      : n_terms(bits.size()),
        rev(bits.size() / 64 + 2, 0),
        c(bits.size() / 64 + 2),
        b(bits.size() / 64 + 2),
        tmp(bits.size() / 64 + 2) {
    for (std::uint64_t i = 0; i < n_terms; ++i) {
      const std::uint64_t j = n_terms - 1 - i;
      if (bits[i]) rev[j >> 6] |= 1ull << (j & 63);
    }
    c.set_bit0();
    b.set_bit0();
  }

  // Process term n (0-based); returns L afterwards.
  std::uint64_t step(std::uint64_t n) {
    const int d = discrepancy(c, L, rev, n_terms - 1 - n);
    if (d == 0) {
      ++m;
    } else if (2 * L <= n) {
      tmp.w = c.w;
      c.xor_shifted(b, m);
      b.w = std::move(tmp.w);
      tmp.w.assign(c.w.size(), 0);
      L = n + 1 - L;
      m = 1;
    } else {
      c.xor_shifted(b, m);
      ++m;
    }
    return L;
  }
};

}  // namespace

std::uint64_t linear_complexity_bm(const BitSequence& seq, std::uint64_t n_terms) {
  if (n_terms == 0) return 0;
  BmState bm(seq.materialize(n_terms));
  std::uint64_t L = 0;
  for (std::uint64_t n = 0; n < n_terms; ++n) L = bm.step(n);
  return L;
}

ComplexityProfile linear_profile(const BitSequence& seq, std::uint64_t n_terms) {
  ComplexityProfile out{ProfileKind::LINEAR, {}};
  out.values.reserve(n_terms);
  if (n_terms == 0) return out;
  BmState bm(seq.materialize(n_terms));
  for (std::uint64_t n = 0; n < n_terms; ++n) out.values.push_back(bm.step(n));
  return out;
}

namespace {

// Binary suffix automaton that tracks the longest word seen with two
// occurrences followed by distinct bits. A state has such a pair exactly
// when it carries both outgoing transitions, so the record is updated
// whenever a state gains its second edge. Clones copy their edges from a
// state whose len is strictly larger, so they never raise the record.
class ConflictSam {
 public:
  explicit ConflictSam(std::size_t expected_len) {
    nodes_.reserve(2 * expected_len + 4);
    nodes_.push_back(Node{{-1, -1}, -1, 0});
  }

  void extend(int cbit) {
    const int c = cbit & 1;
    const int cur = new_node(nodes_[last_].len + 1);
    int p = last_;
    while (p != -1 && nodes_[p].next[c] == -1) {
      set_edge(p, c, cur);
      p = nodes_[p].link;
    }
    if (p == -1) {
      nodes_[cur].link = 0;
    } else {
      const int q = nodes_[p].next[c];
      if (nodes_[p].len + 1 == nodes_[q].len) {
        nodes_[cur].link = q;
      } else {
        const int clone = new_node(nodes_[p].len + 1);
        nodes_[clone].next[0] = nodes_[q].next[0];
        nodes_[clone].next[1] = nodes_[q].next[1];
        nodes_[clone].link = nodes_[q].link;
        while (p != -1 && nodes_[p].next[c] == q) {
          nodes_[p].next[c] = clone;  // retarget only; no new (state, bit) pair
          p = nodes_[p].link;
        }
        nodes_[q].link = clone;
        nodes_[cur].link = clone;
      }
    }
    last_ = cur;
  }

  std::uint64_t longest_conflict() const noexcept { return best_; }

 private:
  struct Node {
    int next[2];
    int link;
    std::uint64_t len;
  };

  int new_node(std::uint64_t len) {
    nodes_.push_back(Node{{-1, -1}, -1, len});
    return static_cast<int>(nodes_.size() - 1);
  }

  void set_edge(int v, int c, int to) {
    nodes_[v].next[c] = to;
    if (nodes_[v].next[c ^ 1] != -1) best_ = std::max(best_, nodes_[v].len);
  }

  std::vector<Node> nodes_;
  int last_ = 0;
  std::uint64_t best_ = 0;
};

}  // namespace

std::uint64_t max_order_complexity(const BitSequence& seq, std::uint64_t n_terms) {
  if (n_terms < 2) throw std::domain_error("max_order_complexity: need at least 2 terms");
  const auto bits = seq.materialize(n_terms);
  ConflictSam sam(bits.size());
  for (auto b : bits) sam.extend(b);
  return sam.longest_conflict() + 1;
}

std::uint64_t max_order_complexity_periodic(const BitSequence& seq) {
  if (!seq.is_periodic()) {
    throw std::invalid_argument("max_order_complexity_periodic: sequence has no period");
  }
  return max_order_complexity(seq, 2 * *seq.period());
}

ComplexityProfile moc_profile(const BitSequence& seq, std::uint64_t n_terms) {
  ComplexityProfile out{ProfileKind::MAX_ORDER, {}};
  out.values.reserve(n_terms);
  const auto bits = seq.materialize(n_terms);
  ConflictSam sam(bits.size());
  for (auto b : bits) {
    sam.extend(b);
    out.values.push_back(sam.longest_conflict() + 1);
  }
  return out;
}

C2CapExceeded::C2CapExceeded(std::uint64_t n, std::uint64_t cap)
    : std::runtime_error("correlation_measure_2: N = " + std::to_string(n) +
                         " exceeds the cap " + std::to_string(cap) +
                         " (cost is cubic; raise the cap to proceed)"),
      n_(n),
      cap_(cap) {}

namespace {

// Prefer larger value, then smaller (d2, d1, window); matches the order a
// serial (d2, d1, M)-ascending scan would report.
bool better(const C2Witness& a, const C2Witness& b) {
  if (a.value != b.value) return a.value > b.value;
  if (a.d2 != b.d2) return a.d2 < b.d2;
  if (a.d1 != b.d1) return a.d1 < b.d1;
  return a.window < b.window;
}

}  // namespace

C2Witness correlation_measure_2(const BitSequence& seq, std::uint64_t N, std::uint64_t cap) {
  if (N < 2) throw std::domain_error("correlation_measure_2: need N >= 2");
  if (N > cap) throw C2CapExceeded(N, cap);
  const auto bits = seq.materialize(N);
  std::vector<C2Witness> per_d2(N, C2Witness{0, 0, 0, 0});

#pragma omp parallel for schedule(dynamic)
  for (std::int64_t d2s = 1; d2s < static_cast<std::int64_t>(N); ++d2s) {
    const std::uint64_t d2 = static_cast<std::uint64_t>(d2s);
    const std::uint64_t limit = N - d2;  // max window length for this d2
    C2Witness best{0, 0, 0, 0};
    for (std::uint64_t d1 = 0; d1 < d2; ++d1) {
      std::int64_t sum = 0;
      const std::uint8_t* a = bits.data() + d1;
      const std::uint8_t* b = bits.data() + d2;
      for (std::uint64_t n = 0; n < limit; ++n) {
        sum += (a[n] == b[n]) ? 1 : -1;
        const std::uint64_t mag = static_cast<std::uint64_t>(sum < 0 ? -sum : sum);
        if (mag > best.value) best = C2Witness{mag, n + 1, d1, d2};
      }
    }
    per_d2[d2] = best;
  }

  C2Witness out{0, 0, 0, 0};
  bool have = false;
  for (std::uint64_t d2 = 1; d2 < N; ++d2) {
    if (per_d2[d2].window == 0) continue;  // no candidate recorded
    if (!have || better(per_d2[d2], out)) {
      out = per_d2[d2];
      have = true;
    }
  }
  return out;
}

}  // namespace qrseq
