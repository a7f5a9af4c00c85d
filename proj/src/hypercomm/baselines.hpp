#pragma once

#include <cstdint>

#include <Eigen/Core>

#include "hypercomm/hypergraph.hpp"
#include "hypercomm/io.hpp"

namespace hypercomm {

// Weighted projection to graph: W_uv = sum over edges containing both u and v
// of 1/(|e|-1); symmetric, non-negative, zero diagonal. Size-1 edges
// contribute nothing.
Eigen::MatrixXd wptg_weights(const Hypergraph& h);

// Normalized hypergraph Laplacian L = I - Dv^{-1/2} H De^{-1} H^T Dv^{-1/2}
// built from the incidence matrix; rows/columns of zero-degree vertices stay
// at the identity.
Eigen::MatrixXd shp_laplacian(const Hypergraph& h);

// Spectral clustering on the weighted-projection graph (symmetric normalized
// Laplacian, top-K eigenvectors, row normalization, k-means). Vertices with
// zero degree keep a zero spectral row and fall to the nearest center, ties
// toward the lowest cluster id.
Labels wptg_detect(const Hypergraph& h, std::uint32_t k, std::uint64_t seed);

// Spectral clustering with the K smallest eigenvectors of the normalized
// hypergraph Laplacian, row-normalized, then k-means.
Labels shp_detect(const Hypergraph& h, std::uint32_t k, std::uint64_t seed);

}  // namespace hypercomm
