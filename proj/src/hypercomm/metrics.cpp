#include "hypercomm/metrics.hpp"

#include <cmath>
#include <limits>
#include <vector>

#include "hypercomm/combinatorics.hpp"

namespace hypercomm {

namespace {

// classic O(K^3) Hungarian algorithm, minimum-cost square assignment;
// returns the chosen column for each row
std::vector<int> min_cost_assignment(const std::vector<std::vector<std::int64_t>>& cost) {
  const int n = static_cast<int>(cost.size());
  const std::int64_t inf = std::numeric_limits<std::int64_t>::max() / 4;
  std::vector<std::int64_t> u(n + 1, 0), v(n + 1, 0);
  std::vector<int> p(n + 1, 0), way(n + 1, 0);
  for (int i = 1; i <= n; ++i) {
    p[0] = i;
    int j0 = 0;
    std::vector<std::int64_t> minv(n + 1, inf);
    std::vector<char> used(n + 1, 0);
    do {
      used[j0] = 1;
      const int i0 = p[j0];
      std::int64_t delta = inf;
      int j1 = -1;
      for (int j = 1; j <= n; ++j) {
        if (used[j]) continue;
        const std::int64_t cur = cost[i0 - 1][j - 1] - u[i0] - v[j];
        if (cur < minv[j]) {
          minv[j] = cur;
          way[j] = j0;
        }
        if (minv[j] < delta) {
          delta = minv[j];
          j1 = j;
        }
      }
      for (int j = 0; j <= n; ++j) {
        if (used[j]) {
          u[p[j]] += delta;
          v[j] -= delta;
        } else {
          minv[j] -= delta;
        }
      }
      j0 = j1;
    } while (p[j0] != 0);
    do {
      const int j1 = way[j0];
      p[j0] = p[j1];
      j0 = j1;
    } while (j0);
  }
  std::vector<int> row_to_col(n, -1);
  for (int j = 1; j <= n; ++j)
    if (p[j] != 0) row_to_col[p[j] - 1] = j - 1;
  return row_to_col;
}

}  // namespace

double hamming_error(const Labels& truth, const Labels& pred, std::uint32_t k) {
  require(k >= 1, Status::invalid_argument, "hamming_error: k must be >= 1");
  require(truth.size() == pred.size(), Status::invalid_argument,
          "hamming_error: assignments differ in length");
  require(!truth.empty(), Status::invalid_argument, "hamming_error: empty input");
  const std::size_t n = truth.size();
  std::vector<std::vector<std::int64_t>> confusion(
      k, std::vector<std::int64_t>(k, 0));
  for (std::size_t i = 0; i < n; ++i) {
    require(truth[i] >= 1 && truth[i] <= k, Status::invalid_argument,
            "hamming_error: truth label out of [1, K]");
    require(pred[i] >= 1 && pred[i] <= k, Status::invalid_argument,
            "hamming_error: predicted label out of [1, K]");
    ++confusion[truth[i] - 1][pred[i] - 1];
  }
  // maximize matched count == minimize negated confusion
  std::vector<std::vector<std::int64_t>> cost(k, std::vector<std::int64_t>(k, 0));
  for (std::uint32_t a = 0; a < k; ++a)
    for (std::uint32_t b = 0; b < k; ++b) cost[a][b] = -confusion[a][b];
  const std::vector<int> match = min_cost_assignment(cost);
  std::int64_t agreed = 0;
  for (std::uint32_t a = 0; a < k; ++a) agreed += confusion[a][match[a]];
  return 1.0 - static_cast<double>(agreed) / static_cast<double>(n);
}

double hellinger_distance(const EmbeddingMatrix& a, const EmbeddingMatrix& b,
                          std::uint32_t m, double s_n) {
  require(a.n() == b.n() && a.r() == b.r(), Status::invalid_argument,
          "hellinger: embeddings differ in shape");
  require(s_n > 0.0 && s_n <= 1.0, Status::invalid_argument,
          "hellinger: s_n must lie in (0, 1]");
  require(m >= 2 && m <= a.n(), Status::invalid_argument,
          "hellinger: m must be in [2, n]");
  double sum = 0.0;
  for_each_index_set(a.n(), m, [&](std::span<const VertexId> s) {
    const double pa = link_prob(theta(a, s), s_n);
    const double pb = link_prob(theta(b, s), s_n);
    const double d1 = std::sqrt(pa) - std::sqrt(pb);
    const double d2 = std::sqrt(1.0 - pa) - std::sqrt(1.0 - pb);
    sum += d1 * d1 + d2 * d2;
  });
  return std::sqrt(sum / static_cast<double>(phi(a.n(), m)));
}

}  // namespace hypercomm
