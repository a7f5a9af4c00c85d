#include "hypercomm/kmeans.hpp"

#include <limits>
#include <vector>

#include "hypercomm/error.hpp"
#include "hypercomm/rng.hpp"

namespace hypercomm {

namespace {

constexpr std::uint32_t kMaxLloydIters = 200;

double sq_dist(const Eigen::Ref<const Mat>& points, Eigen::Index i,
               const Mat& centers, Eigen::Index c) {
  return (points.row(i) - centers.row(c)).squaredNorm();
}

// one Lloyd descent from the given centers; centers is modified in place
KMeansResult lloyd(const Eigen::Ref<const Mat>& points, std::uint32_t k, Mat centers) {
  const Eigen::Index n = points.rows();
  const Eigen::Index r = points.cols();
  std::vector<std::uint32_t> assign(static_cast<std::size_t>(n), 0);

  for (std::uint32_t iter = 0; iter < kMaxLloydIters; ++iter) {
    bool changed = iter == 0;
    for (Eigen::Index i = 0; i < n; ++i) {
      std::uint32_t best = 0;
      double best_d = sq_dist(points, i, centers, 0);
      for (std::uint32_t c = 1; c < k; ++c) {
        const double d = sq_dist(points, i, centers, c);
        if (d < best_d) {
          best_d = d;
          best = c;
        }
      }
      if (assign[static_cast<std::size_t>(i)] != best) {
        assign[static_cast<std::size_t>(i)] = best;
        changed = true;
      }
    }
    if (!changed) break;

    Mat sums = Mat::Zero(k, r);
    std::vector<std::uint64_t> counts(k, 0);
    for (Eigen::Index i = 0; i < n; ++i) {
      sums.row(assign[static_cast<std::size_t>(i)]) += points.row(i);
      ++counts[assign[static_cast<std::size_t>(i)]];
    }
    for (std::uint32_t c = 0; c < k; ++c) {
      if (counts[c] > 0) {
        centers.row(c) = sums.row(c) / static_cast<double>(counts[c]);
      } else {
        // steal the point farthest from its current center
        Eigen::Index far_i = 0;
        double far_d = -1.0;
        for (Eigen::Index i = 0; i < n; ++i) {
          const double d =
              sq_dist(points, i, centers, assign[static_cast<std::size_t>(i)]);
          if (d > far_d) {
            far_d = d;
            far_i = i;
          }
        }
        centers.row(c) = points.row(far_i);
      }
    }
  }

  KMeansResult res;
  res.centers = std::move(centers);
  res.labels.resize(static_cast<std::size_t>(n));
  res.wcss = 0.0;
  for (Eigen::Index i = 0; i < n; ++i) {
    std::uint32_t best = 0;
    double best_d = sq_dist(points, i, res.centers, 0);
    for (std::uint32_t c = 1; c < k; ++c) {
      const double d = sq_dist(points, i, res.centers, c);
      if (d < best_d) {
        best_d = d;
        best = c;
      }
    }
    res.labels[static_cast<std::size_t>(i)] = best + 1;
    res.wcss += best_d;
  }
  return res;
}

Mat kmeanspp_centers(const Eigen::Ref<const Mat>& points, std::uint32_t k, Rng& rng) {
  const Eigen::Index n = points.rows();
  Mat centers(k, points.cols());
  std::vector<double> min_d(static_cast<std::size_t>(n),
                            std::numeric_limits<double>::infinity());
  const auto first = static_cast<Eigen::Index>(rng.uniform_below(static_cast<std::uint64_t>(n)));
  centers.row(0) = points.row(first);
  for (std::uint32_t c = 1; c < k; ++c) {
    double total = 0.0;
    for (Eigen::Index i = 0; i < n; ++i) {
      const double d = sq_dist(points, i, centers, c - 1);
      auto& slot = min_d[static_cast<std::size_t>(i)];
      if (d < slot) slot = d;
      total += slot;
    }
    Eigen::Index pick = 0;
    if (total > 0.0) {
      const double target = rng.uniform01() * total;
      double acc = 0.0;
      pick = n - 1;
      for (Eigen::Index i = 0; i < n; ++i) {
        acc += min_d[static_cast<std::size_t>(i)];
        if (acc > target) {
          pick = i;
          break;
        }
      }
    } else {
      pick = static_cast<Eigen::Index>(rng.uniform_below(static_cast<std::uint64_t>(n)));
    }
    centers.row(c) = points.row(pick);
  }
  return centers;
}

}  // namespace

KMeansResult kmeans(const Eigen::Ref<const Mat>& points, std::uint32_t k,
                    std::uint64_t seed, std::uint32_t restarts,
                    const Mat* warm_start) {
  require(points.rows() >= 1, Status::invalid_argument, "kmeans: no points");
  require(k >= 1, Status::invalid_argument, "kmeans: k must be >= 1");
  require(static_cast<Eigen::Index>(k) <= points.rows(), Status::invalid_argument,
          "kmeans: more clusters than points");
  require(restarts >= 1, Status::invalid_argument, "kmeans: need at least one restart");

  std::optional<KMeansResult> best;
  if (warm_start) {
    require(warm_start->rows() == static_cast<Eigen::Index>(k) &&
                warm_start->cols() == points.cols(),
            Status::invalid_argument, "kmeans: bad warm-start shape");
    best = lloyd(points, k, *warm_start);
  }
  for (std::uint32_t t = 0; t < restarts; ++t) {
    Rng rng(mix_seed(seed, t));
    KMeansResult res = lloyd(points, k, kmeanspp_centers(points, k, rng));
    if (!best || res.wcss < best->wcss) best = std::move(res);
  }
  return *best;
}

}  // namespace hypercomm
