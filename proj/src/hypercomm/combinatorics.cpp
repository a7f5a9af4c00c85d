#include "hypercomm/combinatorics.hpp"

#include <numeric>
#include <string>

namespace hypercomm {

std::uint64_t binom_checked(std::uint32_t n, std::uint32_t k) {
  if (k > n) return 0;
  if (k > n - k) k = n - k;
  std::uint64_t c = 1;
  for (std::uint32_t i = 1; i <= k; ++i) {
    // c <- c * (n-k+i) / i; reduce the divisor away first so the multiply
    // is exact and every intermediate equals C(n-k+i, i) <= C(n, k)
    std::uint64_t num = n - k + i;
    std::uint64_t den = i;
    std::uint64_t g = std::gcd(num, den);
    num /= g;
    den /= g;
    g = std::gcd(c, den);
    c /= g;
    den /= g;
    // den == 1 now: C(n-k+i, i) is an integer
    if (num != 0 && c > UINT64_MAX / num)
      fail(Status::overflow, "binom(" + std::to_string(n) + ", " +
                                 std::to_string(k) + ") overflows 64 bits");
    c *= num;
  }
  return c;
}

std::uint64_t phi(std::uint32_t n, std::uint32_t m) {
  require(n >= 1, Status::invalid_argument, "phi: n must be >= 1");
  require(m >= 1 && m <= n, Status::invalid_argument, "phi: m must be in [1, n]");
  std::uint64_t total = 0;
  for (std::uint32_t k = 1; k <= m; ++k) {
    const std::uint64_t c = binom_checked(n, k);
    if (total > UINT64_MAX - c)
      fail(Status::overflow, "phi(" + std::to_string(n) + ", " +
                                 std::to_string(m) + ") overflows 64 bits");
    total += c;
  }
  return total;
}

void first_combination(std::uint32_t k, std::vector<std::uint32_t>& out) {
  out.resize(k);
  for (std::uint32_t i = 0; i < k; ++i) out[i] = i + 1;
}

bool next_combination(std::uint32_t n, std::vector<std::uint32_t>& comb) {
  const auto k = static_cast<std::uint32_t>(comb.size());
  std::uint32_t i = k;
  while (i > 0 && comb[i - 1] == n - k + i) --i;
  if (i == 0) return false;
  ++comb[i - 1];
  for (std::uint32_t j = i; j < k; ++j) comb[j] = comb[j - 1] + 1;
  return true;
}

void unrank_combination(std::uint32_t n, std::uint32_t k, std::uint64_t rank,
                        std::vector<std::uint32_t>& out) {
  require(k >= 1 && k <= n, Status::invalid_argument,
          "unrank_combination: k must be in [1, n]");
  require(rank < binom_checked(n, k), Status::invalid_argument,
          "unrank_combination: rank out of range");
  out.resize(k);
  std::uint32_t x = 1;
  for (std::uint32_t i = 1; i <= k; ++i) {
    while (true) {
      const std::uint64_t block = binom_checked(n - x, k - i);
      if (rank < block) break;
      rank -= block;
      ++x;
    }
    out[i - 1] = x;
    ++x;
  }
}

}  // namespace hypercomm
