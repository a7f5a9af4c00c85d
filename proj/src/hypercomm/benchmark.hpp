#pragma once

#include <cstdint>
#include <optional>
#include <string>
#include <string_view>
#include <vector>

#include "hypercomm/fit.hpp"

namespace hypercomm {

enum class Method { hem, wptg, shp };

std::optional<Method> parse_method(std::string_view name);
std::string method_name(Method method);

struct BenchConfig {
  int scenario = 1;
  std::vector<std::uint32_t> n_list;
  std::vector<double> sn_list;
  std::uint32_t reps = 1;
  std::vector<Method> methods;
  std::uint32_t k = 2;
  std::uint32_t m = 3;
  std::uint32_t r = 10;
  std::uint64_t seed = 1;
  FitConfig fit;    // k, r, s_n and seed are filled in per replication
  int threads = -1; // -1 = HYPERCOMM_THREADS env or hardware, 0 = serial
};

struct BenchCell {
  int scenario = 0;
  std::uint32_t n = 0;
  double s_n = 0.0;
  std::string method;
  std::vector<double> errors;          // NaN marks a failed replication
  std::vector<std::string> failures;   // parallel to errors, empty when ok
  double mean = 0.0;
  double sd = 0.0;                     // sample sd; 0 when reps == 1
  double seconds = 0.0;
  std::uint32_t reps = 0;
};

struct BenchResult {
  std::vector<BenchCell> cells;

  // one row per cell x method: scenario,n,s_n,method,mean,sd,reps,seconds
  std::string to_csv() const;
  // per-replication errors and failure messages included
  std::string to_json() const;
};

// Runs reps independent generate -> detect -> hamming_error pipelines for
// every (n, s_n) cell and method. Replications share the generated instance
// across methods, run in parallel across seeds, and are reduced in seed
// order, so the numbers are independent of the thread count. A failing
// replication is recorded and never aborts the grid.
BenchResult run_benchmark(const BenchConfig& config);

}  // namespace hypercomm
