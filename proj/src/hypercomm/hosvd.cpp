#include "hypercomm/hosvd.hpp"

#include <cmath>
#include <iostream>
#include <map>

#include <Eigen/Eigenvalues>

#include "hypercomm/rng.hpp"

namespace hypercomm {

Eigen::MatrixXd hosvd_gram(const Hypergraph& h) {
  const std::uint32_t n = h.n();
  const std::uint32_t m = h.m();
  const VertexId null_id = n + 1;

  // tail set R (|R| <= m-1) -> first indices u with multiset {u} + R + nulls
  // reducing to an edge: u extends R to an edge, or u is the null vertex and
  // R itself is an edge
  std::map<Edge, std::vector<VertexId>> compatible;
  for (const Edge& e : h.edges()) {
    Edge tail(e.size() - 1);
    for (std::size_t drop = 0; drop < e.size(); ++drop) {
      std::size_t w = 0;
      for (std::size_t i = 0; i < e.size(); ++i)
        if (i != drop) tail[w++] = e[i];
      compatible[tail].push_back(e[drop]);
    }
    if (e.size() <= static_cast<std::size_t>(m) - 1) compatible[e].push_back(null_id);
  }

  // number of orderings of a tail with q distinct reals and m-1-q nulls
  std::vector<double> orderings(m);
  for (std::uint32_t q = 0; q < m; ++q) {
    double w = 1.0;
    for (std::uint32_t t = 0; t < q; ++t) w *= static_cast<double>(m - 1 - t);
    orderings[q] = w;
  }

  Eigen::MatrixXd gram = Eigen::MatrixXd::Zero(n + 1, n + 1);
  for (const auto& [tail, heads] : compatible) {
    const double w = orderings[tail.size()];
    for (VertexId u : heads)
      for (VertexId v : heads) gram(u - 1, v - 1) += w;
  }
  return gram;
}

EmbeddingMatrix hosvd_init(const Hypergraph& h, std::uint32_t r, std::uint64_t seed) {
  require(r >= 2, Status::invalid_argument, "hosvd_init: r must be >= 2");
  require(r <= h.n(), Status::invalid_argument, "hosvd_init: r exceeds n");

  const Eigen::MatrixXd gram = hosvd_gram(h);
  Eigen::SelfAdjointEigenSolver<Eigen::MatrixXd> solver(gram);
  require(solver.info() == Eigen::Success, Status::numeric_failure,
          "hosvd_init: eigendecomposition failed");
  const auto& values = solver.eigenvalues();    // ascending
  const auto& vectors = solver.eigenvectors();
  const Eigen::Index last = values.size() - 1;
  const double tol = std::max(values(last), 0.0) * 1e-12;

  EmbeddingMatrix alpha(h.n(), r);
  Rng rng(mix_seed(seed, 0x9051ULL));
  std::uint32_t padded = 0;
  for (std::uint32_t c = 0; c < r; ++c) {
    const Eigen::Index idx = last - static_cast<Eigen::Index>(c);
    const double value = values(idx);
    if (value <= tol) {
      for (std::uint32_t i = 0; i < h.n(); ++i)
        alpha.vertex_rows()(i, c) = rng.normal(0.0, 1e-3);
      ++padded;
      continue;
    }
    Eigen::VectorXd vec = vectors.col(idx);
    Eigen::Index max_i = 0;
    for (Eigen::Index i = 1; i < vec.size(); ++i)
      if (std::abs(vec(i)) > std::abs(vec(max_i))) max_i = i;
    if (vec(max_i) < 0.0) vec = -vec;
    const double scale = std::pow(value, 1.0 / static_cast<double>(h.m()));
    for (std::uint32_t i = 0; i < h.n(); ++i)
      alpha.vertex_rows()(i, c) = scale * vec(i);
  }
  if (padded > 0)
    std::cerr << "hypercomm: hosvd rank deficient, padded " << padded
              << " column(s) with noise\n";

  // On dense graphs the raw eigenvalue scaling lands deep in the logistic's
  // saturated range where gradients vanish; a global rescale keeps the
  // initial scores responsive without touching the cluster geometry.
  double max_norm = 0.0;
  for (std::uint32_t i = 0; i < h.n(); ++i)
    max_norm = std::max(max_norm, alpha.data().row(i).norm());
  if (max_norm > 1.0) alpha.vertex_rows() *= 1.0 / max_norm;
  return alpha;
}

}  // namespace hypercomm
