#pragma once

#include <cstdint>

#include <Eigen/Core>

#include "hypercomm/embedding.hpp"
#include "hypercomm/hypergraph.hpp"

namespace hypercomm {

// Gram matrix G = M M^T of the mode-1 unfolding M of the augmented adjacency
// tensor, built by streaming edges and their index symmetries; M itself is
// never materialized. G is (n+1) x (n+1), symmetric positive semidefinite.
Eigen::MatrixXd hosvd_gram(const Hypergraph& h);

// Embedding initialization: top-r eigenvectors of the Gram matrix scaled
// column-wise by eigenvalue^{1/m}, sign-fixed so each eigenvector's
// largest-magnitude entry is positive, null row overwritten with ones.
// Rank-deficient directions are padded with seeded Gaussian noise (std 1e-3).
EmbeddingMatrix hosvd_init(const Hypergraph& h, std::uint32_t r,
                           std::uint64_t seed = 0);

}  // namespace hypercomm
