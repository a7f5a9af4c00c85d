#include "hypercomm/benchmark.hpp"

#include <chrono>
#include <cmath>
#include <limits>
#include <sstream>

#include <json.hpp>

#include "hypercomm/baselines.hpp"
#include "hypercomm/metrics.hpp"
#include "hypercomm/rng.hpp"
#include "hypercomm/synth.hpp"
#include "hypercomm/threads.hpp"

namespace hypercomm {

std::optional<Method> parse_method(std::string_view name) {
  if (name == "hem") return Method::hem;
  if (name == "wptg") return Method::wptg;
  if (name == "shp") return Method::shp;
  return std::nullopt;
}

std::string method_name(Method method) {
  switch (method) {
    case Method::hem: return "hem";
    case Method::wptg: return "wptg";
    case Method::shp: return "shp";
  }
  return "?";
}

namespace {

struct RepOutcome {
  std::vector<double> errors;        // per method
  std::vector<double> seconds;       // per method
  std::vector<std::string> failures; // per method
};

double run_method(Method method, const Hypergraph& h, const SyntheticTruth& truth,
                  const BenchConfig& config, std::uint64_t seed) {
  Labels pred;
  switch (method) {
    case Method::hem: {
      FitConfig fc = config.fit;
      fc.k = config.k;
      fc.r = config.r;
      fc.s_n = truth.params.s_n;
      fc.seed = seed;
      pred = fit(h, fc).labels;
      break;
    }
    case Method::wptg:
      pred = wptg_detect(h, config.k, seed);
      break;
    case Method::shp:
      pred = shp_detect(h, config.k, seed);
      break;
  }
  return hamming_error(truth.labels_star, pred, config.k);
}

}  // namespace

BenchResult run_benchmark(const BenchConfig& config) {
  require(config.reps >= 1, Status::invalid_argument, "bench: reps must be >= 1");
  require(!config.n_list.empty() && !config.sn_list.empty(),
          Status::invalid_argument, "bench: empty grid");
  require(!config.methods.empty(), Status::invalid_argument, "bench: no methods");
  require(config.scenario == 1 || config.scenario == 2, Status::invalid_argument,
          "bench: scenario must be 1 or 2");

  const std::size_t n_cells = config.n_list.size() * config.sn_list.size();
  const std::uint64_t tasks = static_cast<std::uint64_t>(n_cells) * config.reps;
  std::vector<RepOutcome> outcomes(tasks);

  const unsigned threads = resolve_thread_count(config.threads);
  parallel_for(tasks, threads, [&](std::uint64_t task) {
    const std::size_t cell = static_cast<std::size_t>(task / config.reps);
    const std::uint32_t rep = static_cast<std::uint32_t>(task % config.reps);
    const std::uint32_t n = config.n_list[cell / config.sn_list.size()];
    const double s_n = config.sn_list[cell % config.sn_list.size()];

    RepOutcome& out = outcomes[task];
    out.errors.assign(config.methods.size(),
                      std::numeric_limits<double>::quiet_NaN());
    out.seconds.assign(config.methods.size(), 0.0);
    out.failures.assign(config.methods.size(), "");

    ScenarioParams params{n, config.k, config.m, config.r, s_n,
                          mix_seed(config.seed, cell, rep)};
    std::optional<std::pair<Hypergraph, SyntheticTruth>> instance;
    try {
      instance = config.scenario == 1 ? generate_scenario1(params)
                                      : generate_scenario2(params);
    } catch (const std::exception& e) {
      for (auto& msg : out.failures) msg = std::string("generate: ") + e.what();
      return;
    }

    for (std::size_t mi = 0; mi < config.methods.size(); ++mi) {
      const auto start = std::chrono::steady_clock::now();
      try {
        out.errors[mi] =
            run_method(config.methods[mi], instance->first, instance->second,
                       config, mix_seed(params.seed, 0xDEC0ULL, mi));
      } catch (const std::exception& e) {
        out.failures[mi] = e.what();
      }
      out.seconds[mi] =
          std::chrono::duration<double>(std::chrono::steady_clock::now() - start)
              .count();
    }
  });

  BenchResult result;
  for (std::size_t cell = 0; cell < n_cells; ++cell) {
    for (std::size_t mi = 0; mi < config.methods.size(); ++mi) {
      BenchCell c;
      c.scenario = config.scenario;
      c.n = config.n_list[cell / config.sn_list.size()];
      c.s_n = config.sn_list[cell % config.sn_list.size()];
      c.method = method_name(config.methods[mi]);
      c.reps = config.reps;
      for (std::uint32_t rep = 0; rep < config.reps; ++rep) {
        const RepOutcome& out =
            outcomes[static_cast<std::uint64_t>(cell) * config.reps + rep];
        c.errors.push_back(out.errors[mi]);
        c.failures.push_back(out.failures[mi]);
        c.seconds += out.seconds[mi];
      }
      double sum = 0.0;
      std::uint32_t ok = 0;
      for (double e : c.errors)
        if (!std::isnan(e)) {
          sum += e;
          ++ok;
        }
      c.mean = ok > 0 ? sum / ok : std::numeric_limits<double>::quiet_NaN();
      if (ok > 1) {
        double ss = 0.0;
        for (double e : c.errors)
          if (!std::isnan(e)) ss += (e - c.mean) * (e - c.mean);
        c.sd = std::sqrt(ss / (ok - 1));
      } else {
        c.sd = 0.0;
      }
      result.cells.push_back(std::move(c));
    }
  }
  return result;
}

std::string BenchResult::to_csv() const {
  std::ostringstream out;
  out << "scenario,n,s_n,method,mean,sd,reps,seconds\n";
  for (const BenchCell& c : cells) {
    out << c.scenario << ',' << c.n << ',' << format_double(c.s_n) << ','
        << c.method << ',' << format_double(c.mean) << ',' << format_double(c.sd)
        << ',' << c.reps << ',' << format_double(c.seconds) << '\n';
  }
  return out.str();
}

std::string BenchResult::to_json() const {
  nlohmann::json root;
  root["cells"] = nlohmann::json::array();
  for (const BenchCell& c : cells) {
    nlohmann::json cell;
    cell["scenario"] = c.scenario;
    cell["n"] = c.n;
    cell["s_n"] = c.s_n;
    cell["method"] = c.method;
    cell["mean"] = c.mean;
    cell["sd"] = c.sd;
    cell["reps"] = c.reps;
    cell["seconds"] = c.seconds;
    cell["errors"] = nlohmann::json::array();
    for (double e : c.errors) {
      if (std::isnan(e))
        cell["errors"].push_back(nullptr);
      else
        cell["errors"].push_back(e);
    }
    cell["failures"] = c.failures;
    root["cells"].push_back(std::move(cell));
  }
  return root.dump(2);
}

}  // namespace hypercomm
