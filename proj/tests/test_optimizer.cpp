#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include <doctest.h>

#include <cstring>

#include "hypercomm/fit.hpp"
#include "hypercomm/hosvd.hpp"
#include "hypercomm/kmeans.hpp"
#include "hypercomm/metrics.hpp"
#include "hypercomm/rng.hpp"
#include "hypercomm/synth.hpp"
#include "oracles.hpp"

using namespace hypercomm;

namespace {

Hypergraph random_hypergraph(std::uint32_t n, std::uint32_t m, double density,
                             std::uint64_t seed) {
  Rng rng(seed);
  std::vector<Edge> edges;
  for_each_index_set(n, m, [&](std::span<const VertexId> s) {
    if (rng.uniform01() < density) edges.emplace_back(s.begin(), s.end());
  });
  return Hypergraph(n, m, std::move(edges));
}

}  // namespace

TEST_CASE("hosvd gram matrix matches the dense unfolding product") {
  Rng rng(7);
  for (int trial = 0; trial < 8; ++trial) {
    const std::uint32_t n = 3 + static_cast<std::uint32_t>(rng.uniform_below(4));
    const std::uint32_t m =
        2 + static_cast<std::uint32_t>(rng.uniform_below(std::min(n, 4u) - 1));
    const auto h = random_hypergraph(n, m, 0.4, rng.next_u64());
    const Eigen::MatrixXd fast = hosvd_gram(h);
    const Eigen::MatrixXd slow = oracle::gram_bruteforce(h);
    CHECK((fast - slow).cwiseAbs().maxCoeff() == doctest::Approx(0.0).epsilon(1e-12));
  }
}

TEST_CASE("hosvd_init shape, null row and determinism") {
  const auto h = random_hypergraph(8, 3, 0.3, 17);
  const auto alpha = hosvd_init(h, 4, 5);
  CHECK(alpha.data().rows() == 9);
  CHECK(alpha.data().cols() == 4);
  CHECK((alpha.data().row(8).array() == 1.0).all());
  const auto again = hosvd_init(h, 4, 5);
  CHECK(alpha.data() == again.data());
}

TEST_CASE("hosvd_init pads rank-deficient directions with noise") {
  const Hypergraph empty(6, 3, {});
  const auto alpha = hosvd_init(empty, 3, 11);
  CHECK((alpha.data().row(6).array() == 1.0).all());
  const auto block = alpha.vertex_rows();
  CHECK(block.cwiseAbs().maxCoeff() < 0.01);  // std 1e-3 noise
  CHECK(block.cwiseAbs().maxCoeff() > 0.0);
}

TEST_CASE("kmeans recovers well-separated clouds") {
  Rng rng(23);
  Mat points(40, 3);
  Labels truth(40);
  for (int i = 0; i < 40; ++i) {
    const int c = i < 20 ? 0 : 1;
    truth[i] = c + 1;
    for (int j = 0; j < 3; ++j)
      points(i, j) = (c == 0 ? 0.0 : 100.0) + rng.normal(0.0, 0.5);
  }
  const auto res = kmeans(points, 2, 3);
  CHECK(hamming_error(truth, res.labels, 2) == 0.0);
}

TEST_CASE("kmeans with K=1 returns the mean") {
  Mat points(5, 2);
  points << 1, 2, 3, 4, 5, 6, 7, 8, 9, 10;
  const auto res = kmeans(points, 1, 9);
  CHECK(res.centers.rows() == 1);
  CHECK(res.centers(0, 0) == doctest::Approx(5.0).epsilon(1e-12));
  CHECK(res.centers(0, 1) == doctest::Approx(6.0).epsilon(1e-12));
}

TEST_CASE("multi-restart kmeans is at least as good as every single restart") {
  Rng rng(31);
  Mat points(30, 2);
  for (int i = 0; i < 30; ++i)
    for (int j = 0; j < 2; ++j) points(i, j) = rng.normal(0.0, 2.0);
  const auto multi = kmeans(points, 4, 77, 10);
  for (std::uint32_t t = 0; t < 10; ++t) {
    const auto single = kmeans(points, 4, mix_seed(77, t), 1);
    CHECK(multi.wcss <= single.wcss + 1e-12);
  }
  // no empty clusters
  std::vector<int> counts(4, 0);
  for (auto label : multi.labels) ++counts[label - 1];
  for (int c : counts) CHECK(c > 0);
}

TEST_CASE("kmeans rejects more clusters than points") {
  Mat points(3, 2);
  points.setZero();
  CHECK_THROWS_AS(kmeans(points, 4, 1), Error);
}

TEST_CASE("fit recovers a strongly separated planted partition") {
  ScenarioParams p{60, 2, 3, 4, 0.5, 2024};
  auto [h, truth] = generate_scenario2(p);
  FitConfig config;
  config.k = 2;
  config.r = 4;
  config.s_n = 0.5;
  config.seed = 7;
  config.max_outer = 200;
  config.tol = 1e-6;
  const auto res = fit(h, config);
  CHECK(hamming_error(truth.labels_star, res.labels, 2) <= 0.05);

  // loss trace non-increasing across accepted steps
  for (std::size_t t = 1; t < res.loss_trace.size(); ++t)
    CHECK(res.loss_trace[t] <= res.loss_trace[t - 1]);

  // null row pinned and centers row K+1 pinned
  CHECK((res.alpha.data().row(60).array() == 1.0).all());
  CHECK((res.centers.row(2).array() == 1.0).all());
  CHECK(res.centers.rows() == 3);
  for (auto label : res.labels) {
    CHECK(label >= 1);
    CHECK(label <= 2);
  }
}

TEST_CASE("fit is bitwise reproducible under a fixed seed") {
  ScenarioParams p{30, 2, 3, 3, 0.6, 99};
  auto [h, truth] = generate_scenario2(p);
  (void)truth;
  FitConfig config;
  config.k = 2;
  config.r = 3;
  config.s_n = 0.6;
  config.seed = 42;
  config.max_outer = 40;
  const auto a = fit(h, config);
  const auto b = fit(h, config);
  REQUIRE(a.loss_trace.size() == b.loss_trace.size());
  CHECK(std::memcmp(a.loss_trace.data(), b.loss_trace.data(),
                    a.loss_trace.size() * sizeof(double)) == 0);
  CHECK(a.labels == b.labels);
  CHECK(std::memcmp(a.alpha.data().data(), b.alpha.data().data(),
                    sizeof(double) * a.alpha.data().size()) == 0);
  CHECK(a.final_eta == b.final_eta);
  CHECK(a.outer_iters == b.outer_iters);
}

TEST_CASE("with lambda1 = 0 the k-means step cannot steer alpha") {
  const auto h = random_hypergraph(20, 2, 0.5, 404);
  FitConfig config;
  config.k = 2;
  config.r = 3;
  config.s_n = 0.9;
  config.lambda0 = 1e-4;
  config.lambda1 = 0.0;
  config.max_outer = 25;
  config.seed = 1;
  const auto a = fit(h, config);
  config.seed = 2;  // different k-means draws, same full-rank hosvd init
  const auto b = fit(h, config);
  CHECK(std::memcmp(a.alpha.data().data(), b.alpha.data().data(),
                    sizeof(double) * a.alpha.data().size()) == 0);
}

TEST_CASE("fit validates its configuration") {
  const auto h = random_hypergraph(10, 2, 0.5, 55);
  FitConfig config;
  config.k = 1;
  config.r = 3;
  CHECK_THROWS_AS(fit(h, config), Error);
  config.k = 2;
  config.r = 1;
  CHECK_THROWS_AS(fit(h, config), Error);
  config.r = 3;
  config.eta0 = 0.0;
  CHECK_THROWS_AS(fit(h, config), Error);
  config.eta0 = 1.0;
  config.s_n = 1.5;
  CHECK_THROWS_AS(fit(h, config), Error);
}

TEST_CASE("auto lambda defaults follow the published schedule") {
  CHECK(default_lambda0(300, 3) ==
        doctest::Approx(1e-6 * std::pow(300.0, -1.0)).epsilon(1e-12));
  CHECK(default_lambda1(300) ==
        doctest::Approx(1e-6 * std::sqrt(300.0) * std::log(300.0)).epsilon(1e-12));
}
