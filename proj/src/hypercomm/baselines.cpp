#include "hypercomm/baselines.hpp"

#include <cmath>

#include <Eigen/Eigenvalues>

#include "hypercomm/kmeans.hpp"

namespace hypercomm {

namespace {

// top-k eigenvectors (largest eigenvalues) of a symmetric matrix, followed by
// row normalization; zero rows are left as zeros
Mat spectral_embedding(const Eigen::MatrixXd& sym, std::uint32_t k) {
  Eigen::SelfAdjointEigenSolver<Eigen::MatrixXd> solver(sym);
  require(solver.info() == Eigen::Success, Status::numeric_failure,
          "spectral: eigendecomposition failed");
  const Eigen::Index n = sym.rows();
  Mat embed(n, k);
  for (std::uint32_t c = 0; c < k; ++c)
    embed.col(c) = solver.eigenvectors().col(n - 1 - static_cast<Eigen::Index>(c));
  for (Eigen::Index i = 0; i < n; ++i) {
    const double norm = embed.row(i).norm();
    if (norm > 0.0) embed.row(i) /= norm;
  }
  return embed;
}

Labels cluster(const Mat& embed, std::uint32_t k, std::uint64_t seed) {
  return kmeans(embed, k, seed).labels;
}

}  // namespace

Eigen::MatrixXd wptg_weights(const Hypergraph& h) {
  const std::uint32_t n = h.n();
  Eigen::MatrixXd w = Eigen::MatrixXd::Zero(n, n);
  for (const Edge& e : h.edges()) {
    if (e.size() < 2) continue;
    const double weight = 1.0 / static_cast<double>(e.size() - 1);
    for (std::size_t a = 0; a < e.size(); ++a)
      for (std::size_t b = a + 1; b < e.size(); ++b) {
        w(e[a] - 1, e[b] - 1) += weight;
        w(e[b] - 1, e[a] - 1) += weight;
      }
  }
  return w;
}

Eigen::MatrixXd shp_laplacian(const Hypergraph& h) {
  const std::uint32_t n = h.n();
  const std::vector<std::uint64_t> deg = h.degrees();
  Eigen::MatrixXd a = Eigen::MatrixXd::Zero(n, n);
  for (const Edge& e : h.edges()) {
    const double inv_sz = 1.0 / static_cast<double>(e.size());
    for (VertexId u : e) {
      if (deg[u - 1] == 0) continue;
      for (VertexId v : e) {
        if (deg[v - 1] == 0) continue;
        a(u - 1, v - 1) += inv_sz / std::sqrt(static_cast<double>(deg[u - 1]) *
                                              static_cast<double>(deg[v - 1]));
      }
    }
  }
  return Eigen::MatrixXd::Identity(n, n) - a;
}

Labels wptg_detect(const Hypergraph& h, std::uint32_t k, std::uint64_t seed) {
  require(k >= 2, Status::invalid_argument, "wptg: k must be >= 2");
  require(k <= h.n(), Status::invalid_argument, "wptg: k exceeds n");
  const Eigen::MatrixXd w = wptg_weights(h);
  const Eigen::VectorXd deg = w.rowwise().sum();
  Eigen::MatrixXd sym = Eigen::MatrixXd::Zero(h.n(), h.n());
  for (Eigen::Index i = 0; i < sym.rows(); ++i) {
    if (deg(i) <= 0.0) continue;
    for (Eigen::Index j = 0; j < sym.cols(); ++j) {
      if (deg(j) <= 0.0 || w(i, j) == 0.0) continue;
      sym(i, j) = w(i, j) / std::sqrt(deg(i) * deg(j));
    }
  }
  return cluster(spectral_embedding(sym, k), k, seed);
}

Labels shp_detect(const Hypergraph& h, std::uint32_t k, std::uint64_t seed) {
  require(k >= 2, Status::invalid_argument, "shp: k must be >= 2");
  require(k <= h.n(), Status::invalid_argument, "shp: k exceeds n");
  // K smallest eigenvectors of L == K largest of I - L
  const Eigen::MatrixXd a =
      Eigen::MatrixXd::Identity(h.n(), h.n()) - shp_laplacian(h);
  return cluster(spectral_embedding(a, k), k, seed);
}

}  // namespace hypercomm
