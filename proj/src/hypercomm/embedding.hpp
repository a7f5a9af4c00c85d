#pragma once

#include <cmath>
#include <cstdint>
#include <span>

#include <Eigen/Core>

#include "hypercomm/error.hpp"
#include "hypercomm/hypergraph.hpp"

namespace hypercomm {

using Mat = Eigen::Matrix<double, Eigen::Dynamic, Eigen::Dynamic, Eigen::RowMajor>;

// (n+1) x r embedding matrix; the last row belongs to the null vertex and is
// pinned to all-ones. Mutation goes through vertex_rows() so the pin holds.
class EmbeddingMatrix {
 public:
  EmbeddingMatrix(std::uint32_t n, std::uint32_t r)
      : n_(n), data_(Mat::Zero(n + 1, r)) {
    require(n >= 1, Status::invalid_argument, "embedding: n must be >= 1");
    require(r >= 2, Status::invalid_argument, "embedding: r must be >= 2");
    data_.row(n_).setOnes();
  }

  // full (n+1) x r matrix; the last row must already be all-ones
  static EmbeddingMatrix from_matrix(const Mat& m) {
    require(m.rows() >= 2 && m.cols() >= 2, Status::invalid_argument,
            "embedding: matrix must be at least 2x2");
    EmbeddingMatrix a(static_cast<std::uint32_t>(m.rows() - 1),
                      static_cast<std::uint32_t>(m.cols()));
    require((m.row(m.rows() - 1).array() == 1.0).all(), Status::invalid_argument,
            "embedding: null-vertex row must be all-ones");
    require(m.allFinite(), Status::invalid_argument,
            "embedding: entries must be finite");
    a.data_ = m;
    return a;
  }

  // n x r vertex block on top of an all-ones null row
  static EmbeddingMatrix from_vertex_rows(const Mat& rows) {
    EmbeddingMatrix a(static_cast<std::uint32_t>(rows.rows()),
                      static_cast<std::uint32_t>(rows.cols()));
    require(rows.allFinite(), Status::invalid_argument,
            "embedding: entries must be finite");
    a.data_.topRows(a.n_) = rows;
    return a;
  }

  std::uint32_t n() const { return n_; }
  std::uint32_t r() const { return static_cast<std::uint32_t>(data_.cols()); }
  const Mat& data() const { return data_; }

  auto vertex_rows() { return data_.topRows(n_); }
  auto vertex_rows() const { return data_.topRows(n_); }

  // Euclidean projection of each vertex row onto the ball of radius c0.
  void cap_row_norms(double c0) {
    require(c0 > 0, Status::invalid_argument, "embedding: c0 must be positive");
    for (std::uint32_t i = 0; i < n_; ++i) {
      const double norm = data_.row(i).norm();
      if (norm > c0) data_.row(i) *= c0 / norm;
    }
  }

 private:
  std::uint32_t n_;
  Mat data_;
};

struct ModelParams {
  double s_n = 1.0;
  double lambda0 = 0.0;
  double lambda1 = 0.0;

  void validate() const {
    require(s_n > 0.0 && s_n <= 1.0, Status::invalid_argument,
            "model: s_n must lie in (0, 1]");
    require(lambda0 >= 0.0 && lambda1 >= 0.0, Status::invalid_argument,
            "model: penalty weights must be non-negative");
  }
};

inline double logistic(double x) {
  if (x >= 0.0) return 1.0 / (1.0 + std::exp(-x));
  const double e = std::exp(x);
  return e / (1.0 + e);
}

// log(1 + e^x) without overflow
inline double softplus(double x) {
  if (x > 0.0) return x + std::log1p(std::exp(-x));
  return std::log1p(std::exp(x));
}

// p = s_n * logistic(theta), in (0, s_n)
inline double link_prob(double theta, double s_n) {
  return s_n * logistic(theta);
}

// Bernoulli negative log-likelihood -a log p - (1-a) log(1-p), p = s_n*logistic(theta)
inline double edge_loss(double theta, bool a, double s_n) {
  const double log_p = std::log(s_n) - softplus(-theta);
  double log_1mp;
  if (s_n == 1.0) {
    log_1mp = -softplus(theta);  // 1 - p = logistic(-theta)
  } else {
    log_1mp = std::log1p(-link_prob(theta, s_n));
  }
  return a ? -log_p : -log_1mp;
}

// d/dtheta of edge_loss: (p - a) (1 - p/s_n) / (1 - p)
inline double edge_loss_dtheta(double theta, bool a, double s_n) {
  const double p = link_prob(theta, s_n);
  const double av = a ? 1.0 : 0.0;
  if (s_n == 1.0) return p - av;  // exact cancellation of (1-p) at saturation
  return (p - av) * logistic(-theta) / (1.0 - p);
}

// theta_S = sum_j prod_{i in S} alpha_{ij}; null padding contributes factor 1
double theta(const EmbeddingMatrix& alpha, std::span<const VertexId> s);

}  // namespace hypercomm
