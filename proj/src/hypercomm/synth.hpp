#pragma once

#include <cstdint>
#include <optional>
#include <utility>

#include "hypercomm/embedding.hpp"
#include "hypercomm/hypergraph.hpp"
#include "hypercomm/io.hpp"

namespace hypercomm {

struct ScenarioParams {
  std::uint32_t n = 0;
  std::uint32_t k = 0;
  std::uint32_t m = 0;
  std::uint32_t r = 0;
  double s_n = 1.0;
  std::uint64_t seed = 0;
};

// Evaluates the planted theta / link probability for any candidate set.
struct ThetaOracle {
  EmbeddingMatrix alpha;

  double theta_of(std::span<const VertexId> s) const { return theta(alpha, s); }
  double prob_of(std::span<const VertexId> s, double s_n) const {
    return link_prob(theta_of(s), s_n);
  }
};

struct SyntheticTruth {
  EmbeddingMatrix alpha_star;
  Labels labels_star;            // 1-based, balanced to within one
  int scenario = 0;
  ScenarioParams params;
  std::optional<Mat> centers_star;  // (K+1) x r, scenario 2 only

  ThetaOracle oracle() const { return ThetaOracle{alpha_star}; }

  SyntheticTruth() : alpha_star(1, 2) {}
};

// Draws each candidate set S (size-then-lex order, one uniform per set) as a
// hyperedge independently with probability link_prob(theta_S, s_n).
Hypergraph sample_hypergraph(const EmbeddingMatrix& alpha, std::uint32_t m,
                             double s_n, std::uint64_t seed);

// Vertex embeddings fluctuate around per-community scalar means:
// mu_k iid N(0, 0.5^2), row pi(i) ~ N_r(mu * 1_r, 0.5^2 I).
std::pair<Hypergraph, SyntheticTruth> generate_scenario1(const ScenarioParams& p);

// Block-model special case: all vertices of a community share one embedding
// row drawn as c_k ~ N_r(mu'_k * 1_r, 0.5^2 I) with mu'_k ~ N(0, 1).
// literal_probability treats the CP tensor entries directly as probabilities
// (clipped to [0, 1]) instead of passing theta through the sparsity link.
std::pair<Hypergraph, SyntheticTruth> generate_scenario2(
    const ScenarioParams& p, bool literal_probability = false);

}  // namespace hypercomm
