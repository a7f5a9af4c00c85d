#pragma once

#include <cstdint>
#include <optional>

#include "hypercomm/io.hpp"

namespace hypercomm {

struct KMeansResult {
  Labels labels;  // 1-based cluster ids, one per input row
  Mat centers;    // K x r
  double wcss = 0.0;
};

// Lloyd's algorithm with k-means++ seeding and multiple restarts; returns the
// restart with the lowest within-cluster sum of squares. Empty clusters are
// re-seeded with the point farthest from its assigned center. When
// warm_start centers are given they are run as an extra restart, which makes
// the best result at least as good as the warm start.
KMeansResult kmeans(const Eigen::Ref<const Mat>& points, std::uint32_t k,
                    std::uint64_t seed, std::uint32_t restarts = 10,
                    const Mat* warm_start = nullptr);

}  // namespace hypercomm
