#pragma once

#include <cstdint>

#include "hypercomm/embedding.hpp"
#include "hypercomm/io.hpp"

namespace hypercomm {

// Minimum scaled Hamming distance over all K! label permutations, computed
// exactly via maximum-weight assignment on the K x K confusion matrix.
double hamming_error(const Labels& truth, const Labels& pred, std::uint32_t k);

// Averaged Hellinger distance between the Bernoulli laws induced by two
// embeddings: sqrt( phi^{-1} sum_S d^2(theta_S, theta'_S) ), in [0, sqrt(2)].
double hellinger_distance(const EmbeddingMatrix& a, const EmbeddingMatrix& b,
                          std::uint32_t m, double s_n);

}  // namespace hypercomm
