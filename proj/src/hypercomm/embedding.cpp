#include "hypercomm/embedding.hpp"

namespace hypercomm {

double theta(const EmbeddingMatrix& alpha, std::span<const VertexId> s) {
  require(!s.empty(), Status::invalid_argument, "theta: empty vertex set");
  const Mat& a = alpha.data();
  const auto r = static_cast<Eigen::Index>(alpha.r());
  for (VertexId v : s)
    require(v >= 1 && v <= alpha.n(), Status::invalid_argument,
            "theta: vertex id out of range");
  double sum = 0.0;
  for (Eigen::Index j = 0; j < r; ++j) {
    double prod = 1.0;
    for (VertexId v : s) prod *= a(v - 1, j);
    sum += prod;
  }
  return sum;
}

}  // namespace hypercomm
