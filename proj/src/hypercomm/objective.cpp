#include "hypercomm/objective.hpp"

#include <vector>

namespace hypercomm {

namespace {

void check_dims(const EmbeddingMatrix& alpha, const Hypergraph& h,
                const ModelParams& params, const Mat& y) {
  params.validate();
  require(alpha.n() == h.n(), Status::invalid_argument,
          "objective: embedding size does not match vertex count");
  require(y.rows() == alpha.data().rows() && y.cols() == alpha.data().cols(),
          Status::invalid_argument, "objective: Y dimensions mismatch");
  require((y.row(y.rows() - 1).array() == 1.0).all(), Status::invalid_argument,
          "objective: Y null-vertex row must be all-ones");
}

}  // namespace

ObjectiveParts objective_parts(const EmbeddingMatrix& alpha, const Hypergraph& h,
                               const ModelParams& params, const Mat& y) {
  check_dims(alpha, h, params, y);
  const Mat& a = alpha.data();
  const auto r = static_cast<std::size_t>(alpha.r());
  const double inv_phi = 1.0 / static_cast<double>(phi(h.n(), h.m()));

  std::vector<double> prod(r);
  double loss_sum = 0.0;
  for_each_index_set_with_adjacency(h, [&](std::span<const VertexId> s, bool is_edge) {
    const double* row0 = a.row(s[0] - 1).data();
    for (std::size_t j = 0; j < r; ++j) prod[j] = row0[j];
    for (std::size_t q = 1; q < s.size(); ++q) {
      const double* row = a.row(s[q] - 1).data();
      for (std::size_t j = 0; j < r; ++j) prod[j] *= row[j];
    }
    double th = 0.0;
    for (std::size_t j = 0; j < r; ++j) th += prod[j];
    loss_sum += edge_loss(th, is_edge, params.s_n);
  });

  const double n = static_cast<double>(h.n());
  ObjectiveParts parts;
  parts.base = loss_sum * inv_phi + params.lambda0 / n * a.squaredNorm();
  // null rows agree, so restricting to the vertex block changes nothing; the
  // optimizer recomputes this piece with the exact same expression
  parts.j1 =
      params.lambda1 / n * (a.topRows(h.n()) - y.topRows(h.n())).squaredNorm();
  return parts;
}

double objective(const EmbeddingMatrix& alpha, const Hypergraph& h,
                 const ModelParams& params, const Mat& y) {
  return objective_parts(alpha, h, params, y).total();
}

Mat gradient(const EmbeddingMatrix& alpha, const Hypergraph& h,
             const ModelParams& params, const Mat& y) {
  check_dims(alpha, h, params, y);
  const Mat& a = alpha.data();
  const auto r = static_cast<std::size_t>(alpha.r());
  const auto n = h.n();
  const double inv_phi = 1.0 / static_cast<double>(phi(n, h.m()));

  Mat grad = Mat::Zero(n, static_cast<Eigen::Index>(r));
  // pre[q*r + j] = prod of factors before position q in column j
  std::vector<double> pre(static_cast<std::size_t>(h.m()) * r);
  std::vector<double> suf(r);
  std::vector<const double*> rows(h.m());

  for_each_index_set_with_adjacency(h, [&](std::span<const VertexId> s, bool is_edge) {
    const std::size_t sz = s.size();
    for (std::size_t q = 0; q < sz; ++q) rows[q] = a.row(s[q] - 1).data();

    for (std::size_t j = 0; j < r; ++j) pre[j] = 1.0;
    for (std::size_t q = 1; q < sz; ++q) {
      const double* prev = pre.data() + (q - 1) * r;
      double* cur = pre.data() + q * r;
      const double* row = rows[q - 1];
      for (std::size_t j = 0; j < r; ++j) cur[j] = prev[j] * row[j];
    }
    double th = 0.0;
    {
      const double* last_pre = pre.data() + (sz - 1) * r;
      const double* last_row = rows[sz - 1];
      for (std::size_t j = 0; j < r; ++j) th += last_pre[j] * last_row[j];
    }
    const double g = edge_loss_dtheta(th, is_edge, params.s_n);

    for (std::size_t j = 0; j < r; ++j) suf[j] = 1.0;
    for (std::size_t q = sz; q-- > 0;) {
      double* grow = grad.row(s[q] - 1).data();
      const double* qpre = pre.data() + q * r;
      const double* row = rows[q];
      for (std::size_t j = 0; j < r; ++j) {
        grow[j] += g * qpre[j] * suf[j];
        suf[j] *= row[j];
      }
    }
  });

  const double dn = static_cast<double>(n);
  grad *= inv_phi;
  grad += (2.0 * params.lambda0 / dn) * a.topRows(n);
  grad += (2.0 * params.lambda1 / dn) * (a.topRows(n) - y.topRows(n));
  return grad;
}

}  // namespace hypercomm
