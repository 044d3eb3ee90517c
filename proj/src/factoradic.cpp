#include "topk/factoradic.hpp"

#include <numeric>
#include <string>

namespace topk {

namespace {

// Fenwick tree over 1..n counting inserted values.
class CountTree {
 public:
  explicit CountTree(std::size_t n) : tree_(n + 1, 0) {}

  void insert(std::size_t v) {
    for (; v < tree_.size(); v += v & (~v + 1)) ++tree_[v];
  }

  // Number of inserted values <= v.
  std::uint32_t prefix(std::size_t v) const {
    std::uint32_t sum = 0;
    for (; v > 0; v -= v & (~v + 1)) sum += tree_[v];
    return sum;
  }

 private:
  std::vector<std::uint32_t> tree_;
};

std::uint64_t factorial(std::size_t n) {
  std::uint64_t f = 1;
  for (std::size_t i = 2; i <= n; ++i) f *= i;
  return f;
}

void check_rankable(std::size_t n) {
  if (n > factoradic::kMaxRankedSize) {
    throw Overflow("permutation of size " + std::to_string(n) +
                   " cannot be ranked in 64 bits");
  }
}

}  // namespace

Permutation::Permutation(std::vector<std::uint32_t> seq)
    : seq_(std::move(seq)) {
  std::vector<bool> seen(seq_.size() + 1, false);
  for (const auto v : seq_) {
    if (v < 1 || v > seq_.size() || seen[v]) {
      throw InvalidPermutation("not a permutation of 1.." +
                               std::to_string(seq_.size()));
    }
    seen[v] = true;
  }
}

Permutation Permutation::identity(std::size_t n) {
  std::vector<std::uint32_t> seq(n);
  std::iota(seq.begin(), seq.end(), 1u);
  return Permutation(std::move(seq));
}

FactoradicDigits::FactoradicDigits(std::vector<std::uint32_t> digits)
    : digits_(std::move(digits)) {
  const std::size_t n = digits_.size();
  for (std::size_t i = 0; i < n; ++i) {
    if (digits_[i] > n - i - 1) throw DigitOutOfRange(digits_[i], n - i);
  }
}

namespace factoradic {

FactoradicDigits lehmer(const Permutation& p) {
  const std::size_t n = p.size();
  std::vector<std::uint32_t> digits(n);
  CountTree seen(n);
  for (std::size_t i = n; i-- > 0;) {
    digits[i] = seen.prefix(p[i] - 1);
    seen.insert(p[i]);
  }
  return FactoradicDigits(std::move(digits));
}

Permutation from_lehmer(const FactoradicDigits& d) {
  const std::size_t n = d.size();
  // Select the (f^i)-th smallest unused value by binary descent on a
  // Fenwick tree of free slots.
  std::vector<std::uint32_t> tree(n + 1, 0);
  for (std::size_t v = 1; v <= n; ++v) {
    ++tree[v];
    const std::size_t parent = v + (v & (~v + 1));
    if (parent <= n) tree[parent] += tree[v];
  }
  std::size_t top = 1;
  while (top * 2 <= n) top *= 2;

  std::vector<std::uint32_t> seq(n);
  for (std::size_t i = 0; i < n; ++i) {
    std::size_t pos = 0;
    std::uint32_t remaining = d[i] + 1;
    for (std::size_t step = top; step > 0; step /= 2) {
      if (pos + step <= n && tree[pos + step] < remaining) {
        pos += step;
        remaining -= tree[pos];
      }
    }
    const std::size_t value = pos + 1;
    seq[i] = static_cast<std::uint32_t>(value);
    for (std::size_t v = value; v <= n; v += v & (~v + 1)) --tree[v];
  }
  return Permutation(std::move(seq));
}

std::uint64_t rank(const FactoradicDigits& d) {
  check_rankable(d.size());
  std::uint64_t r = 0;
  for (std::size_t i = 0; i < d.size(); ++i) {
    r = r * (d.size() - i) + d[i];
  }
  return r;
}

Permutation unrank(std::uint64_t r, std::size_t n) {
  check_rankable(n);
  if (r >= factorial(n)) {
    throw RankOutOfRange("rank " + std::to_string(r) + " >= " +
                         std::to_string(n) + "!");
  }
  std::vector<std::uint32_t> digits(n, 0);
  for (std::size_t radix = 1; radix <= n; ++radix) {
    digits[n - radix] = static_cast<std::uint32_t>(r % radix);
    r /= radix;
  }
  return from_lehmer(FactoradicDigits(std::move(digits)));
}

std::uint64_t inversions(const Permutation& p) {
  const auto d = lehmer(p);
  return std::accumulate(d.values().begin(), d.values().end(),
                         std::uint64_t{0});
}

Bits perm_info_len(const Permutation& p) {
  if (p.size() <= 1) return 0.0;
  return perm_info_len(lehmer(p), codes::TruncatedWtcCode(p.size()));
}

Bits perm_info_len(const FactoradicDigits& d,
                   const codes::TruncatedWtcCode& code) {
  const std::size_t n = d.size();
  Bits total = 0.0;
  for (std::size_t i = 0; i + 1 < n; ++i) total += code.length(d[i], n - i);
  return total;
}

}  // namespace factoradic
}  // namespace topk
