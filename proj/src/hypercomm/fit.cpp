#include "hypercomm/fit.hpp"

#include <cmath>

#include "hypercomm/hosvd.hpp"
#include "hypercomm/kmeans.hpp"
#include "hypercomm/objective.hpp"
#include "hypercomm/rng.hpp"

namespace hypercomm {

namespace {

constexpr std::uint32_t kMaxHalvings = 30;
constexpr std::uint32_t kMaxFirstStepGrowth = 60;

Mat expand_centers(const Labels& labels, const Mat& centers, std::uint32_t n) {
  Mat y(n + 1, centers.cols());
  for (std::uint32_t i = 0; i < n; ++i) y.row(i) = centers.row(labels[i] - 1);
  y.row(n).setOnes();
  return y;
}

}  // namespace

double default_lambda0(std::uint32_t n, std::uint32_t m) {
  return 1e-6 * std::pow(static_cast<double>(n),
                         (1.0 - static_cast<double>(m)) / 2.0);
}

double default_lambda1(std::uint32_t n) {
  const double dn = static_cast<double>(n);
  return 1e-6 * std::sqrt(dn) * std::log(dn);
}

FitResult fit(const Hypergraph& h, const FitConfig& config) {
  const std::uint32_t n = h.n();
  require(config.k >= 2, Status::invalid_argument, "fit: k must be >= 2");
  require(config.k <= n, Status::invalid_argument, "fit: k exceeds n");
  require(config.r >= 2 && config.r <= n, Status::invalid_argument,
          "fit: r must be in [2, n]");
  require(config.eta0 > 0.0, Status::invalid_argument, "fit: eta0 must be positive");
  require(config.tol > 0.0, Status::invalid_argument, "fit: tol must be positive");
  require(config.max_outer >= 1, Status::invalid_argument,
          "fit: max_outer must be >= 1");

  ModelParams params;
  params.s_n = config.s_n ? *config.s_n : estimate_sparsity(h);
  params.lambda0 = config.lambda0 ? *config.lambda0 : default_lambda0(n, h.m());
  params.lambda1 = config.lambda1 ? *config.lambda1 : default_lambda1(n);
  params.validate();

  FitResult res;
  res.params = params;
  res.alpha = hosvd_init(h, config.r, mix_seed(config.seed, 0x4853ULL));

  KMeansResult km = kmeans(res.alpha.vertex_rows(), config.k,
                           mix_seed(config.seed, 0x4B4DULL, 0),
                           config.kmeans_restarts);
  Mat y = expand_centers(km.labels, km.centers, n);

  ObjectiveParts parts = objective_parts(res.alpha, h, params, y);
  double obj = parts.total();
  require(std::isfinite(obj), Status::numeric_failure,
          "fit: non-finite objective at initialization");

  double eta = config.eta0;
  res.loss_trace.push_back(obj);
  res.eta_trace.push_back(eta);

  const double l1_over_n = params.lambda1 / static_cast<double>(n);
  std::uint32_t t = 0;
  for (t = 1; t <= config.max_outer; ++t) {
    const Mat grad = gradient(res.alpha, h, params, y);
    require(grad.allFinite(), Status::numeric_failure,
            "fit: non-finite gradient at iteration " + std::to_string(t));

    // gradient step with overshoot halving; the halved rate persists
    EmbeddingMatrix cand = res.alpha;
    const auto eval_step = [&](double step) {
      cand = res.alpha;
      cand.vertex_rows() -= step * grad;
      if (config.c0) cand.cap_row_norms(*config.c0);
      ObjectiveParts p = objective_parts(cand, h, params, y);
      require(std::isfinite(p.total()), Status::numeric_failure,
              "fit: non-finite objective at iteration " + std::to_string(t));
      return p;
    };

    ObjectiveParts cand_parts;
    bool accepted = false;
    bool halved = false;
    for (std::uint32_t attempt = 0; attempt <= kMaxHalvings; ++attempt) {
      cand_parts = eval_step(eta);
      if (cand_parts.total() <= obj) {
        accepted = true;
        break;
      }
      halved = true;
      if (attempt < kMaxHalvings) eta *= 0.5;
    }
    if (accepted) {
      // the phi^{-1}-normalized gradient makes a fixed rate far too timid, so
      // expand along the accepted direction while the objective still drops;
      // aggressive only on the first step, at most one doubling afterwards
      res.alpha = cand;
      if (!halved) {
        const std::uint32_t max_grow = t == 1 ? kMaxFirstStepGrowth : 1;
        for (std::uint32_t grow = 0; grow < max_grow; ++grow) {
          const ObjectiveParts wider = eval_step(2.0 * eta);
          if (!(wider.total() < cand_parts.total())) break;
          eta *= 2.0;
          cand_parts = wider;
          res.alpha = cand;
        }
      }
      parts = cand_parts;
      obj = parts.total();
    }
    // on a stall the step is skipped and the loop proceeds with alpha as-is

    // refresh (Z, C); adopt only if it does not worsen the J1 surrogate
    KMeansResult next = kmeans(res.alpha.vertex_rows(), config.k,
                               mix_seed(config.seed, 0x4B4DULL, t),
                               config.kmeans_restarts, &km.centers);
    const Mat y_next = expand_centers(next.labels, next.centers, n);
    const double d_old =
        (res.alpha.data().topRows(n) - y.topRows(n)).squaredNorm();
    const double d_new =
        (res.alpha.data().topRows(n) - y_next.topRows(n)).squaredNorm();
    if (d_new <= d_old) {
      km = std::move(next);
      y = y_next;
      parts.j1 = l1_over_n * d_new;
    } else {
      parts.j1 = l1_over_n * d_old;
    }
    obj = parts.total();

    res.loss_trace.push_back(obj);
    res.eta_trace.push_back(eta);

    const double prev = res.loss_trace[res.loss_trace.size() - 2];
    if (std::abs(obj - prev) / std::max(1.0, std::abs(prev)) < config.tol) {
      res.converged = true;
      break;
    }
  }

  res.outer_iters = std::min(t, config.max_outer);
  res.final_eta = eta;
  res.labels = km.labels;
  res.centers = Mat(config.k + 1, config.r);
  res.centers.topRows(config.k) = km.centers;
  res.centers.row(config.k).setOnes();
  return res;
}

}  // namespace hypercomm
