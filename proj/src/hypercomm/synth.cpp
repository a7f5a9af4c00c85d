#include "hypercomm/synth.hpp"

#include <algorithm>
#include <cmath>
#include <functional>

#include "hypercomm/rng.hpp"

namespace hypercomm {

namespace {

void validate(const ScenarioParams& p) {
  // k == 1 is allowed as the degenerate single-community case
  require(p.k >= 1, Status::invalid_argument, "generate: k must be >= 1");
  require(p.r >= 2, Status::invalid_argument, "generate: r must be >= 2");
  require(p.m >= 2, Status::invalid_argument, "generate: m must be >= 2");
  require(p.n >= p.k, Status::invalid_argument, "generate: n must be >= k");
  require(p.m <= p.n, Status::invalid_argument, "generate: m must be <= n");
  require(p.s_n > 0.0 && p.s_n <= 1.0, Status::invalid_argument,
          "generate: s_n must lie in (0, 1]");
}

// community of slot i (1-based), floor((i-1)K/n) + 1; balanced to within one
std::uint32_t slot_community(std::uint32_t i, std::uint32_t k, std::uint32_t n) {
  return static_cast<std::uint32_t>(
             (static_cast<std::uint64_t>(i - 1) * k) / n) + 1;
}

Hypergraph sample_with(const std::function<double(std::span<const VertexId>)>& prob,
                       std::uint32_t n, std::uint32_t m, std::uint64_t seed) {
  Rng rng(seed);
  std::vector<Edge> edges;
  for_each_index_set(n, m, [&](std::span<const VertexId> s) {
    const double u = rng.uniform01();
    if (u < prob(s)) edges.emplace_back(s.begin(), s.end());
  });
  return Hypergraph(n, m, std::move(edges));
}

}  // namespace

Hypergraph sample_hypergraph(const EmbeddingMatrix& alpha, std::uint32_t m,
                             double s_n, std::uint64_t seed) {
  require(s_n > 0.0 && s_n <= 1.0, Status::invalid_argument,
          "sample: s_n must lie in (0, 1]");
  require(m >= 2 && m <= alpha.n(), Status::invalid_argument,
          "sample: m must be in [2, n]");
  return sample_with(
      [&](std::span<const VertexId> s) { return link_prob(theta(alpha, s), s_n); },
      alpha.n(), m, seed);
}

std::pair<Hypergraph, SyntheticTruth> generate_scenario1(const ScenarioParams& p) {
  validate(p);
  Rng rng(mix_seed(p.seed, 0x5331ULL));

  std::vector<double> mu(p.k);
  for (std::uint32_t c = 0; c < p.k; ++c) mu[c] = rng.normal(0.0, 0.5);
  const std::vector<std::uint32_t> perm = rng.permutation(p.n);

  SyntheticTruth truth;
  truth.scenario = 1;
  truth.params = p;
  truth.alpha_star = EmbeddingMatrix(p.n, p.r);
  truth.labels_star.assign(p.n, 0);
  for (std::uint32_t i = 1; i <= p.n; ++i) {
    const std::uint32_t vertex = perm[i - 1] + 1;
    const std::uint32_t community = slot_community(i, p.k, p.n);
    truth.labels_star[vertex - 1] = community;
    for (std::uint32_t j = 0; j < p.r; ++j)
      truth.alpha_star.vertex_rows()(vertex - 1, j) =
          rng.normal(mu[community - 1], 0.5);
  }

  Hypergraph h =
      sample_hypergraph(truth.alpha_star, p.m, p.s_n, mix_seed(p.seed, 0x5332ULL));
  return {std::move(h), std::move(truth)};
}

std::pair<Hypergraph, SyntheticTruth> generate_scenario2(const ScenarioParams& p,
                                                         bool literal_probability) {
  validate(p);
  Rng rng(mix_seed(p.seed, 0x5341ULL));

  const std::vector<std::uint32_t> perm = rng.permutation(p.n);
  std::vector<double> mu(p.k);
  for (std::uint32_t c = 0; c < p.k; ++c) mu[c] = rng.normal(0.0, 1.0);

  Mat centers(p.k + 1, p.r);
  for (std::uint32_t c = 0; c < p.k; ++c)
    for (std::uint32_t j = 0; j < p.r; ++j)
      centers(c, j) = rng.normal(mu[c], 0.5);
  centers.row(p.k).setOnes();

  SyntheticTruth truth;
  truth.scenario = 2;
  truth.params = p;
  truth.alpha_star = EmbeddingMatrix(p.n, p.r);
  truth.labels_star.assign(p.n, 0);
  for (std::uint32_t i = 1; i <= p.n; ++i) {
    const std::uint32_t vertex = perm[i - 1] + 1;
    const std::uint32_t community = slot_community(i, p.k, p.n);
    truth.labels_star[vertex - 1] = community;
    truth.alpha_star.vertex_rows().row(vertex - 1) = centers.row(community - 1);
  }
  truth.centers_star = centers;

  const std::uint64_t sample_seed = mix_seed(p.seed, 0x5342ULL);
  Hypergraph h = literal_probability
                     ? sample_with(
                           [&](std::span<const VertexId> s) {
                             return std::clamp(theta(truth.alpha_star, s), 0.0, 1.0);
                           },
                           p.n, p.m, sample_seed)
                     : sample_hypergraph(truth.alpha_star, p.m, p.s_n, sample_seed);
  return {std::move(h), std::move(truth)};
}

}  // namespace hypercomm
