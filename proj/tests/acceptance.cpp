// Acceptance suite. Runs every criterion at its stated tolerance and prints
// one PASS/FAIL line per criterion; exit code is the number of failures.
//
//   acceptance [--only K] [--list]
//
// Heavy runs are shared: criterion 5's fits feed 8 and 9, criterion 6's grid
// feeds 7 and 8.
#include <chrono>
#include <cmath>
#include <cstring>
#include <functional>
#include <iostream>
#include <optional>
#include <sstream>
#include <vector>

#include "hypercomm/baselines.hpp"
#include "hypercomm/fit.hpp"
#include "hypercomm/hosvd.hpp"
#include "hypercomm/metrics.hpp"
#include "hypercomm/rng.hpp"
#include "hypercomm/synth.hpp"
#include "hypercomm/threads.hpp"
#include "oracles.hpp"

using namespace hypercomm;

namespace {

constexpr std::uint64_t kMasterSeed = 20240815;

struct Outcome {
  bool pass = false;
  std::string detail;
};

double elapsed_s(std::chrono::steady_clock::time_point start) {
  return std::chrono::duration<double>(std::chrono::steady_clock::now() - start)
      .count();
}

Hypergraph random_hypergraph(std::uint32_t n, std::uint32_t m, double density,
                             std::uint64_t seed) {
  Rng rng(seed);
  std::vector<Edge> edges;
  for_each_index_set(n, m, [&](std::span<const VertexId> s) {
    if (rng.uniform01() < density) edges.emplace_back(s.begin(), s.end());
  });
  return Hypergraph(n, m, std::move(edges));
}

EmbeddingMatrix random_embedding(std::uint32_t n, std::uint32_t r, double sd,
                                 std::uint64_t seed) {
  EmbeddingMatrix alpha(n, r);
  Rng rng(seed);
  for (std::uint32_t i = 0; i < n; ++i)
    for (std::uint32_t j = 0; j < r; ++j)
      alpha.vertex_rows()(i, j) = rng.normal(0.0, sd);
  return alpha;
}

Mat random_y(std::uint32_t n, std::uint32_t r, std::uint64_t seed) {
  Mat y(n + 1, r);
  Rng rng(seed);
  for (std::uint32_t i = 0; i < n; ++i)
    for (std::uint32_t j = 0; j < r; ++j) y(i, j) = rng.normal(0.0, 0.5);
  y.row(n).setOnes();
  return y;
}

std::string format(double value) {
  std::ostringstream out;
  out.precision(4);
  out << value;
  return out.str();
}

// ---------------------------------------------------------------- shared runs

struct PlantedRun {
  Hypergraph h;
  SyntheticTruth truth;
  FitResult fit_result;
  double error = 1.0;
  double hellinger_fit = 0.0;
  double hellinger_init = 0.0;
  bool trace_monotone = false;
  bool null_row_ones = false;
};

// criterion 5 instances: scenario 2, n=100, K=2, m=3, r=4, s_n=0.5, 10 seeds
const std::vector<PlantedRun>& planted_runs() {
  static const std::vector<PlantedRun> runs = [] {
    const std::uint32_t n = 100, k = 2, m = 3, r = 4;
    const double s_n = 0.5;
    std::vector<PlantedRun> out;
    out.reserve(10);
    for (std::uint64_t i = 0; i < 10; ++i) {
      ScenarioParams p{n, k, m, r, s_n, mix_seed(kMasterSeed, 0xC5ULL, i)};
      auto [h, truth] = generate_scenario2(p);
      FitConfig config;
      config.k = k;
      config.r = r;
      config.s_n = s_n;
      config.seed = mix_seed(p.seed, 0xF17ULL);
      config.tol = 1e-6;
      config.max_outer = 300;
      FitResult res = fit(h, config);

      PlantedRun run{std::move(h), std::move(truth), std::move(res)};
      run.error = hamming_error(run.truth.labels_star, run.fit_result.labels, k);
      run.hellinger_fit =
          hellinger_distance(run.fit_result.alpha, run.truth.alpha_star, m, s_n);
      const EmbeddingMatrix init = hosvd_init(run.h, r, 0);
      run.hellinger_init =
          hellinger_distance(init, run.truth.alpha_star, m, s_n);
      run.trace_monotone = true;
      for (std::size_t t = 1; t < run.fit_result.loss_trace.size(); ++t)
        if (run.fit_result.loss_trace[t] > run.fit_result.loss_trace[t - 1])
          run.trace_monotone = false;
      run.null_row_ones =
          (run.fit_result.alpha.data().row(n).array() == 1.0).all();
      out.push_back(std::move(run));
    }
    return out;
  }();
  return runs;
}

struct GridCell {
  double s_n = 0.0;
  std::vector<double> hem, wptg, shp;
  bool traces_monotone = true;
  bool null_rows_ones = true;

  double mean(const std::vector<double>& v) const {
    double sum = 0.0;
    for (double x : v) sum += x;
    return sum / static_cast<double>(v.size());
  }
  double sd(const std::vector<double>& v) const {
    const double m = mean(v);
    double ss = 0.0;
    for (double x : v) ss += (x - m) * (x - m);
    return std::sqrt(ss / static_cast<double>(v.size() - 1));
  }
};

// criterion 6 grid: scenario 1, n=150, m=3, K=2, r=10, s_n in {0.1, 0.04}, 20 reps
const std::vector<GridCell>& table_grid() {
  static const std::vector<GridCell> cells = [] {
    const std::uint32_t n = 150, k = 2, m = 3, r = 10, reps = 20;
    const std::vector<double> sn_values{0.1, 0.04};
    std::vector<GridCell> out(sn_values.size());
    for (std::size_t c = 0; c < sn_values.size(); ++c) {
      GridCell& cell = out[c];
      cell.s_n = sn_values[c];
      cell.hem.resize(reps);
      cell.wptg.resize(reps);
      cell.shp.resize(reps);
      std::vector<char> monotone(reps, 1), ones(reps, 1);
      parallel_for(reps, resolve_thread_count(-1), [&](std::uint64_t rep) {
        ScenarioParams p{n, k, m, r, cell.s_n,
                         mix_seed(kMasterSeed, 0xC6ULL + c, rep)};
        auto [h, truth] = generate_scenario1(p);
        FitConfig config;
        config.k = k;
        config.r = r;
        config.s_n = cell.s_n;
        config.seed = mix_seed(p.seed, 0xF17ULL);
        config.tol = 1e-5;
        config.max_outer = 300;
        const FitResult res = fit(h, config);
        cell.hem[rep] = hamming_error(truth.labels_star, res.labels, k);
        for (std::size_t t = 1; t < res.loss_trace.size(); ++t)
          if (res.loss_trace[t] > res.loss_trace[t - 1]) monotone[rep] = 0;
        if (!(res.alpha.data().row(n).array() == 1.0).all()) ones[rep] = 0;
        cell.wptg[rep] = hamming_error(
            truth.labels_star, wptg_detect(h, k, mix_seed(p.seed, 0x3071ULL)), k);
        cell.shp[rep] = hamming_error(
            truth.labels_star, shp_detect(h, k, mix_seed(p.seed, 0x3072ULL)), k);
      });
      for (std::uint32_t rep = 0; rep < reps; ++rep) {
        cell.traces_monotone = cell.traces_monotone && monotone[rep];
        cell.null_rows_ones = cell.null_rows_ones && ones[rep];
      }
    }
    return out;
  }();
  return cells;
}

// ---------------------------------------------------------------- criteria

Outcome criterion1() {
  const auto start = std::chrono::steady_clock::now();
  double worst = 0.0;
  for (int trial = 0; trial < 20; ++trial) {
    const std::uint64_t seed = mix_seed(kMasterSeed, 0xC1ULL, trial);
    const auto h = random_hypergraph(12, 3, 0.3, mix_seed(seed, 1));
    const auto alpha = random_embedding(12, 3, 0.6, mix_seed(seed, 2));
    const auto y = random_y(12, 3, mix_seed(seed, 3));
    const ModelParams params{trial % 2 == 0 ? 0.1 : 1.0, 0.02, 0.03};
    const Mat analytic = gradient(alpha, h, params, y);
    const Mat fd = oracle::fd_gradient(alpha, h, params, y, 1e-5);
    worst = std::max(worst,
                     (analytic - fd).norm() / std::max(1.0, fd.norm()));
  }
  const double secs = elapsed_s(start);
  return {worst < 1e-5 && secs < 10.0,
          "max rel err " + format(worst) + ", " + format(secs) + "s"};
}

Outcome criterion2() {
  const auto start = std::chrono::steady_clock::now();
  double worst = 0.0;
  for (int trial = 0; trial < 100; ++trial) {
    const std::uint64_t seed = mix_seed(kMasterSeed, 0xC2ULL, trial);
    Rng rng(seed);
    const std::uint32_t n = 2 + static_cast<std::uint32_t>(rng.uniform_below(5));
    const std::uint32_t m =
        2 + static_cast<std::uint32_t>(rng.uniform_below(std::min(n, 4u) - 1));
    const std::uint32_t r = 2 + static_cast<std::uint32_t>(rng.uniform_below(3));
    const auto h = random_hypergraph(n, m, 0.4, rng.next_u64());
    const auto alpha = random_embedding(n, r, 0.7, rng.next_u64());
    const auto y = random_y(n, r, rng.next_u64());
    const ModelParams params{trial % 2 == 0 ? 0.25 : 1.0, 0.1 * rng.uniform01(),
                             0.1 * rng.uniform01()};
    const double fast = objective(alpha, h, params, y);
    const double slow = oracle::objective_bruteforce(
        alpha.data(), h, params.s_n, params.lambda0, params.lambda1, y);
    worst = std::max(worst, std::abs(fast - slow) / std::max(1.0, std::abs(slow)));
  }
  const double secs = elapsed_s(start);
  return {worst < 1e-10 && secs < 30.0,
          "max rel err " + format(worst) + ", " + format(secs) + "s"};
}

Outcome criterion3() {
  double worst = 0.0;
  for (std::uint32_t n = 2; n <= 6; ++n) {
    for (std::uint32_t m = 2; m <= std::min(n, 4u); ++m) {
      for (std::uint32_t r = 2; r <= 3; ++r) {
        const auto alpha =
            random_embedding(n, r, 0.8, mix_seed(kMasterSeed, 0xC3ULL, n * 100 + m * 10 + r));
        const auto dense = oracle::dense_theta_tensor(alpha.data(), m);
        for_each_index_set(n, m, [&](std::span<const VertexId> s) {
          std::vector<std::uint32_t> padded(s.begin(), s.end());
          padded.resize(m, n + 1);
          const double diff = std::abs(theta(alpha, s) - dense.at(padded)) /
                              std::max(1.0, std::abs(dense.at(padded)));
          worst = std::max(worst, diff);
        });
      }
    }
  }
  return {worst <= 1e-12, "max rel diff " + format(worst)};
}

Outcome criterion4() {
  Rng rng(mix_seed(kMasterSeed, 0xC4ULL));
  double worst = 0.0;
  for (int trial = 0; trial < 100; ++trial) {
    const std::uint32_t k = 2 + static_cast<std::uint32_t>(rng.uniform_below(5));
    Labels truth(50), pred(50);
    for (auto& x : truth) x = 1 + static_cast<std::uint32_t>(rng.uniform_below(k));
    for (auto& x : pred) x = 1 + static_cast<std::uint32_t>(rng.uniform_below(k));
    const double fast = hamming_error(truth, pred, k);
    const double slow = oracle::hamming_exhaustive(truth, pred, k);
    worst = std::max(worst, std::abs(fast - slow));
  }
  Labels same{1, 2, 2, 1, 2};
  const double self_err = hamming_error(same, same, 2);
  Labels flipped{2, 1, 1, 2, 1};
  const double flip_err = hamming_error(same, flipped, 2);
  return {worst <= 1e-12 && self_err == 0.0 && flip_err == 0.0,
          "max |matching - exhaustive| " + format(worst)};
}

Outcome criterion5() {
  const auto start = std::chrono::steady_clock::now();
  std::vector<double> errors;
  for (const auto& run : planted_runs()) errors.push_back(run.error);
  std::sort(errors.begin(), errors.end());
  const double median = 0.5 * (errors[4] + errors[5]);
  const double secs = elapsed_s(start);
  std::ostringstream detail;
  detail << "median err " << format(median) << " [";
  for (std::size_t i = 0; i < errors.size(); ++i)
    detail << (i ? " " : "") << format(errors[i]);
  detail << "], " << format(secs) << "s";
  return {median <= 0.05 && secs <= 300.0, detail.str()};
}

Outcome criterion6() {
  const auto start = std::chrono::steady_clock::now();
  const auto& cells = table_grid();
  const double secs = elapsed_s(start);
  bool ordered = true;
  std::ostringstream detail;
  for (const auto& cell : cells) {
    const double hem = cell.mean(cell.hem);
    const double wptg = cell.mean(cell.wptg);
    const double shp = cell.mean(cell.shp);
    ordered = ordered && hem < wptg && hem < shp;
    detail << "s_n=" << cell.s_n << ": hem " << format(hem) << " vs wptg "
           << format(wptg) << ", shp " << format(shp) << "; ";
  }
  detail << format(secs) << "s";
  return {ordered && secs <= 1800.0, detail.str()};
}

Outcome criterion7() {
  const auto& cells = table_grid();
  const auto& dense = cells[0];   // s_n = 0.1
  const auto& sparse = cells[1];  // s_n = 0.04
  const double m_dense = dense.mean(dense.hem);
  const double m_sparse = sparse.mean(sparse.hem);
  const double pooled_se =
      std::sqrt(dense.sd(dense.hem) * dense.sd(dense.hem) / 20.0 +
                sparse.sd(sparse.hem) * sparse.sd(sparse.hem) / 20.0);
  const bool pass = m_sparse >= m_dense - pooled_se;
  return {pass, "mean@0.04 " + format(m_sparse) + " vs mean@0.1 " +
                    format(m_dense) + " - se " + format(pooled_se)};
}

Outcome criterion8() {
  bool monotone = true, ones = true;
  for (const auto& run : planted_runs()) {
    monotone = monotone && run.trace_monotone;
    ones = ones && run.null_row_ones;
  }
  for (const auto& cell : table_grid()) {
    monotone = monotone && cell.traces_monotone;
    ones = ones && cell.null_rows_ones;
  }

  // bitwise reproducibility on the first criterion-5 instance
  const std::uint32_t n = 100, k = 2, m = 3, r = 4;
  ScenarioParams p{n, k, m, r, 0.5, mix_seed(kMasterSeed, 0xC5ULL, 0)};
  auto [h, truth] = generate_scenario2(p);
  (void)truth;
  FitConfig config;
  config.k = k;
  config.r = r;
  config.s_n = 0.5;
  config.seed = mix_seed(p.seed, 0xF17ULL);
  config.tol = 1e-6;
  config.max_outer = 300;
  const FitResult a = fit(h, config);
  const FitResult b = fit(h, config);
  const bool bitwise =
      a.labels == b.labels &&
      a.loss_trace.size() == b.loss_trace.size() &&
      std::memcmp(a.loss_trace.data(), b.loss_trace.data(),
                  a.loss_trace.size() * sizeof(double)) == 0 &&
      std::memcmp(a.alpha.data().data(), b.alpha.data().data(),
                  sizeof(double) * a.alpha.data().size()) == 0;

  std::ostringstream detail;
  detail << "traces monotone: " << (monotone ? "yes" : "NO")
         << ", null row pinned: " << (ones ? "yes" : "NO")
         << ", refit bitwise-identical: " << (bitwise ? "yes" : "NO");
  return {monotone && ones && bitwise, detail.str()};
}

Outcome criterion9() {
  int improved = 0;
  std::ostringstream detail;
  for (const auto& run : planted_runs())
    if (run.hellinger_fit < run.hellinger_init) ++improved;
  detail << improved << "/10 seeds improved on the initialization";
  return {improved >= 8, detail.str()};
}

Outcome criterion10() {
  const std::uint32_t n = 40, k = 2, m = 3, r = 10;
  const double s_n = 0.2;
  bool all_pass = true;
  std::ostringstream detail;
  for (int scenario : {1, 2}) {
    ScenarioParams p{n, k, m, r, s_n, mix_seed(kMasterSeed, 0xCAULL, scenario)};
    auto [h0, truth] = scenario == 1 ? generate_scenario1(p)
                                     : generate_scenario2(p);
    (void)h0;
    double mean = 0.0, var = 0.0;
    const auto oracle_eval = truth.oracle();
    for_each_index_set(n, m, [&](std::span<const VertexId> s) {
      const double prob = oracle_eval.prob_of(s, s_n);
      mean += prob;
      var += prob * (1.0 - prob);
    });
    const int reps = 50;
    double total = 0.0;
    for (int rep = 0; rep < reps; ++rep)
      total += static_cast<double>(
          sample_hypergraph(truth.alpha_star, m, s_n, mix_seed(p.seed, 7, rep))
              .edge_count());
    const double observed = total / reps;
    const double sigma = std::sqrt(var / reps);
    const double z = (observed - mean) / sigma;
    all_pass = all_pass && std::abs(z) <= 3.0;
    detail << "scenario " << scenario << ": mean " << format(observed) << " vs "
           << format(mean) << " (z=" << format(z) << "); ";
  }
  return {all_pass, detail.str()};
}

struct Criterion {
  int id;
  const char* name;
  std::function<Outcome()> run;
};

}  // namespace

int main(int argc, char** argv) {
  std::optional<int> only;
  for (int i = 1; i < argc; ++i) {
    if (std::string(argv[i]) == "--only" && i + 1 < argc) only = std::atoi(argv[++i]);
  }

  const std::vector<Criterion> criteria{
      {1, "gradient matches central finite differences (rel < 1e-5)", criterion1},
      {2, "objective equals dense brute-force evaluation (1e-10)", criterion2},
      {3, "theta equals explicit mode-product evaluation (1e-12)", criterion3},
      {4, "matching-based Hamming equals exhaustive minimum", criterion4},
      {5, "planted recovery: median error <= 0.05 over 10 seeds", criterion5},
      {6, "desk-scale grid: HEM mean beats WPTG and SHP in every cell", criterion6},
      {7, "sparsity degradation trend within one pooled standard error", criterion7},
      {8, "optimizer invariants: monotone trace, pinned row, bitwise refit", criterion8},
      {9, "fitted Hellinger beats initialization in >= 8/10 seeds", criterion9},
      {10, "sampled edge counts within 3 sigma of the analytic mean", criterion10},
  };

  int failures = 0;
  for (const auto& criterion : criteria) {
    if (only && *only != criterion.id) continue;
    const auto start = std::chrono::steady_clock::now();
    Outcome outcome;
    try {
      outcome = criterion.run();
    } catch (const std::exception& e) {
      outcome = {false, std::string("exception: ") + e.what()};
    }
    const double secs = elapsed_s(start);
    std::cout << "[" << (outcome.pass ? "PASS" : "FAIL") << "] criterion "
              << criterion.id << ": " << criterion.name << " — "
              << outcome.detail << " (" << format(secs) << "s)\n"
              << std::flush;
    if (!outcome.pass) ++failures;
  }
  if (!only) {
    std::cout << (failures == 0 ? "acceptance: all criteria passed\n"
                                : "acceptance: " + std::to_string(failures) +
                                      " criterion(s) failed\n");
  }
  return failures;
}
