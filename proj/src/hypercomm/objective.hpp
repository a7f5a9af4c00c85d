#pragma once

#include "hypercomm/embedding.hpp"
#include "hypercomm/hypergraph.hpp"

namespace hypercomm {

// The two alpha-only pieces and the Y-coupled piece of the regularized cost,
// kept separate so the optimizer can swap Y without re-summing the likelihood.
struct ObjectiveParts {
  double base = 0.0;     // phi^{-1} sum_S L(theta_S; a_S) + (lambda0/n)||alpha||_F^2
  double j1 = 0.0;       // (lambda1/n)||alpha - Y||_F^2
  double total() const { return base + j1; }
};

ObjectiveParts objective_parts(const EmbeddingMatrix& alpha, const Hypergraph& h,
                               const ModelParams& params, const Mat& y);

// phi^{-1} sum_S L(theta_S; a_S, s_n) + (lambda0/n)||alpha||_F^2
//                                     + (lambda1/n)||alpha - Y||_F^2,
// summed over all candidate index sets in size-then-lex order (serial left fold).
double objective(const EmbeddingMatrix& alpha, const Hypergraph& h,
                 const ModelParams& params, const Mat& y);

// Gradient of objective with respect to the first n rows of alpha; n x r.
Mat gradient(const EmbeddingMatrix& alpha, const Hypergraph& h,
             const ModelParams& params, const Mat& y);

}  // namespace hypercomm
