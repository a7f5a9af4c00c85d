#pragma once

#include <cstdint>
#include <optional>
#include <vector>

#include "hypercomm/embedding.hpp"
#include "hypercomm/hypergraph.hpp"
#include "hypercomm/io.hpp"

namespace hypercomm {

struct FitConfig {
  std::uint32_t k = 2;                 // number of communities
  std::uint32_t r = 2;                 // embedding dimension
  std::optional<double> s_n;           // empty = estimate from hyperedge density
  std::optional<double> lambda0;       // empty = 1e-6 * n^{(1-m)/2}
  std::optional<double> lambda1;       // empty = 1e-6 * sqrt(n) * log(n)
  double eta0 = 1.0;                   // initial learning rate
  double tol = 1e-6;                   // relative objective-change threshold
  std::uint32_t max_outer = 500;
  std::uint64_t seed = 1;
  std::optional<double> c0;            // optional row-norm cap, off by default
  std::uint32_t kmeans_restarts = 10;
};

struct FitResult {
  EmbeddingMatrix alpha;
  Labels labels;                 // 1-based, length n
  Mat centers;                   // (K+1) x r, last row all-ones
  std::vector<double> loss_trace;  // post-k-means objective per outer iteration
  std::vector<double> eta_trace;   // learning rate in effect at each entry
  std::uint32_t outer_iters = 0;
  bool converged = false;
  double final_eta = 0.0;
  ModelParams params;            // resolved s_n / lambda values

  FitResult() : alpha(1, 2) {}
};

// Resolved paper-default tuning weights.
double default_lambda0(std::uint32_t n, std::uint32_t m);
double default_lambda1(std::uint32_t n);

// Alternating scheme: gradient step on the first n rows of alpha with
// overshoot halving, then k-means on those rows to refresh (Z, C); stops when
// the relative objective change drops below tol or max_outer is reached.
FitResult fit(const Hypergraph& h, const FitConfig& config);

}  // namespace hypercomm
