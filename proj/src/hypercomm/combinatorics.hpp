#pragma once

#include <cstdint>
#include <span>
#include <vector>

#include "hypercomm/error.hpp"

namespace hypercomm {

// C(n, k) as an exact 64-bit integer; throws Status::overflow if it does not fit.
std::uint64_t binom_checked(std::uint32_t n, std::uint32_t k);

// Number of candidate hyperedges of size 1..m over n vertices:
// phi(n, m) = sum_{k=1}^{m} C(n, k). Exact; throws on overflow.
std::uint64_t phi(std::uint32_t n, std::uint32_t m);

// Lexicographically first size-k subset of [1..n], written into out.
void first_combination(std::uint32_t k, std::vector<std::uint32_t>& out);

// Advances a strictly increasing size-k subset of [1..n] to its lexicographic
// successor; returns false when out was the last one.
bool next_combination(std::uint32_t n, std::vector<std::uint32_t>& comb);

// Size-k subset of [1..n] at 0-based lexicographic rank.
void unrank_combination(std::uint32_t n, std::uint32_t k, std::uint64_t rank,
                        std::vector<std::uint32_t>& out);

// Streams every non-empty subset of [1..n] with size <= m exactly once,
// ordered by size then lexicographically. Never materializes the list.
template <class F>
void for_each_index_set(std::uint32_t n, std::uint32_t m, F&& f) {
  require(n >= 1, Status::invalid_argument, "for_each_index_set: n must be >= 1");
  require(m >= 1 && m <= n, Status::invalid_argument,
          "for_each_index_set: m must be in [1, n]");
  std::vector<std::uint32_t> comb;
  comb.reserve(m);
  for (std::uint32_t k = 1; k <= m; ++k) {
    first_combination(k, comb);
    do {
      f(std::span<const std::uint32_t>(comb.data(), comb.size()));
    } while (next_combination(n, comb));
  }
}

// Same stream restricted to global ranks [begin, end); ranks follow the
// size-then-lex order, so disjoint rank ranges partition the traversal.
template <class F>
void for_each_index_set_range(std::uint32_t n, std::uint32_t m,
                              std::uint64_t begin, std::uint64_t end, F&& f) {
  const std::uint64_t total = phi(n, m);
  require(begin <= end && end <= total, Status::invalid_argument,
          "for_each_index_set_range: bad rank range");
  if (begin == end) return;

  // locate the size class containing `begin`
  std::uint32_t k = 1;
  std::uint64_t class_start = 0;
  while (true) {
    const std::uint64_t sz = binom_checked(n, k);
    if (begin < class_start + sz) break;
    class_start += sz;
    ++k;
  }

  std::vector<std::uint32_t> comb;
  comb.reserve(m);
  unrank_combination(n, k, begin - class_start, comb);
  std::uint64_t rank = begin;
  while (rank < end) {
    f(std::span<const std::uint32_t>(comb.data(), comb.size()));
    ++rank;
    if (rank == end) break;
    if (!next_combination(n, comb)) {
      ++k;
      first_combination(k, comb);
    }
  }
}

}  // namespace hypercomm
