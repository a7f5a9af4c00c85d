// hypercomm command-line front end. Talks to the shared library strictly
// through the public C API.
#include <hypercomm.h>

#include <CLI11.hpp>
#include <json.hpp>

#include <chrono>
#include <cmath>
#include <cstdio>
#include <fstream>
#include <iostream>
#include <optional>
#include <string>
#include <vector>

namespace {

constexpr int kExitUsage = 2;
constexpr int kExitData = 3;
constexpr int kExitNumeric = 4;

using nlohmann::json;

struct CliError {
  int exit_code;
  std::string message;
};

[[noreturn]] void die(int code, const std::string& message) {
  throw CliError{code, message};
}

void check_rc(hc_status rc) {
  if (rc == HC_OK) return;
  const int code = rc == HC_ERR_NUMERIC ? kExitNumeric : kExitData;
  die(code, hc_last_error());
}

std::string fmt(double value) {
  char buf[40];
  std::snprintf(buf, sizeof(buf), "%.17g", value);
  return buf;
}

std::string fmt4(double value) {
  if (std::isnan(value)) return "n/a";
  char buf[32];
  std::snprintf(buf, sizeof(buf), "%.4f", value);
  return buf;
}

// "auto" or a positive real
std::optional<double> parse_auto(const std::string& text, const char* flag) {
  if (text == "auto") return std::nullopt;
  try {
    std::size_t pos = 0;
    const double value = std::stod(text, &pos);
    if (pos != text.size()) throw std::invalid_argument(text);
    return value;
  } catch (const std::exception&) {
    die(kExitUsage, std::string(flag) + " expects 'auto' or a number, got '" +
                        text + "'");
  }
}

std::vector<uint32_t> parse_u32_list(const std::string& text, const char* flag) {
  std::vector<uint32_t> out;
  std::size_t pos = 0;
  while (pos <= text.size()) {
    auto comma = text.find(',', pos);
    if (comma == std::string::npos) comma = text.size();
    const std::string item = text.substr(pos, comma - pos);
    if (!item.empty()) {
      try {
        out.push_back(static_cast<uint32_t>(std::stoul(item)));
      } catch (const std::exception&) {
        die(kExitUsage, std::string(flag) + ": bad integer '" + item + "'");
      }
    }
    pos = comma + 1;
    if (comma == text.size()) break;
  }
  if (out.empty()) die(kExitUsage, std::string(flag) + ": empty list");
  return out;
}

std::vector<double> parse_double_list(const std::string& text, const char* flag) {
  std::vector<double> out;
  std::size_t pos = 0;
  while (pos <= text.size()) {
    auto comma = text.find(',', pos);
    if (comma == std::string::npos) comma = text.size();
    const std::string item = text.substr(pos, comma - pos);
    if (!item.empty()) {
      try {
        out.push_back(std::stod(item));
      } catch (const std::exception&) {
        die(kExitUsage, std::string(flag) + ": bad number '" + item + "'");
      }
    }
    pos = comma + 1;
    if (comma == text.size()) break;
  }
  if (out.empty()) die(kExitUsage, std::string(flag) + ": empty list");
  return out;
}

void write_text_file(const std::string& path, const std::string& content) {
  std::ofstream out(path);
  if (!out.good()) die(kExitData, "cannot open '" + path + "' for writing");
  out << content;
  out.flush();
  if (!out.good()) die(kExitData, "write to '" + path + "' failed");
}

void write_manifest(const std::string& path, const json& manifest) {
  write_text_file(path, manifest.dump(2) + "\n");
}

// vertex rows only; the all-ones null row is implied by the format
void write_alpha_csv(const double* data, uint64_t rows, uint64_t cols,
                     uint64_t keep_rows, const std::string& path) {
  hc_matrix* m = nullptr;
  (void)rows;
  check_rc(hc_matrix_create(keep_rows, cols, data, &m));
  const hc_status rc = hc_matrix_write_csv(m, path.c_str());
  hc_matrix_free(m);
  check_rc(rc);
}

struct Stopwatch {
  std::chrono::steady_clock::time_point start = std::chrono::steady_clock::now();
  double seconds() const {
    return std::chrono::duration<double>(std::chrono::steady_clock::now() - start)
        .count();
  }
};

// ---------------------------------------------------------------- generate

struct GenerateArgs {
  int scenario = 1;
  uint32_t n = 0, k = 0, m = 3, r = 10;
  double sn = 0.1;
  uint64_t seed = 1;
  std::string out;
};

int run_generate(const GenerateArgs& args) {
  if (args.scenario != 1 && args.scenario != 2)
    die(kExitUsage, "--scenario must be 1 or 2");
  if (args.sn <= 0.0 || args.sn > 1.0)
    die(kExitUsage, "--sn must lie in (0, 1]");
  if (args.k < 1) die(kExitUsage, "--k must be >= 1");
  if (args.r < 2) die(kExitUsage, "--r must be >= 2");
  if (args.m < 2) die(kExitUsage, "--m must be >= 2");
  if (args.n < args.k || args.n < args.m)
    die(kExitUsage, "--n must be at least k and m");

  Stopwatch watch;
  hc_hypergraph* h = nullptr;
  hc_truth* truth = nullptr;
  check_rc(hc_generate(args.scenario, args.n, args.k, args.m, args.r, args.sn,
                       args.seed, &h, &truth));

  check_rc(hc_hypergraph_save_file(h, (args.out + ".hg").c_str()));
  uint64_t n_labels = 0;
  const uint32_t* labels = hc_truth_labels(truth, &n_labels);
  check_rc(hc_labels_write(labels, n_labels, (args.out + ".labels").c_str()));
  uint64_t rows = 0, cols = 0;
  const double* alpha = hc_truth_alpha(truth, &rows, &cols);
  write_alpha_csv(alpha, rows, cols, args.n, args.out + ".alpha.csv");

  json manifest;
  manifest["command"] = "generate";
  manifest["version"] = hc_version();
  manifest["seed"] = args.seed;
  manifest["config"] = {{"scenario", args.scenario}, {"n", args.n},
                        {"k", args.k},               {"m", args.m},
                        {"r", args.r},               {"s_n", args.sn}};
  manifest["outputs"] = {{"hypergraph", args.out + ".hg"},
                         {"labels", args.out + ".labels"},
                         {"alpha", args.out + ".alpha.csv"}};
  manifest["edge_count"] = hc_hypergraph_edge_count(h);
  manifest["wall_clock_seconds"] = watch.seconds();
  write_manifest(args.out + ".manifest.json", manifest);

  std::cout << "generated scenario " << args.scenario << ": n=" << args.n
            << " m=" << args.m << " edges=" << hc_hypergraph_edge_count(h)
            << " -> " << args.out << ".hg\n";
  hc_truth_free(truth);
  hc_hypergraph_free(h);
  return 0;
}

// ---------------------------------------------------------------- detect

struct DetectArgs {
  std::string input;
  uint32_t k = 0, r = 0;
  std::string sn = "auto", lambda0 = "auto", lambda1 = "auto";
  double eta = 1.0, tol = 1e-6;
  uint32_t max_iter = 500;
  uint64_t seed = 1;
  uint32_t clique_expand = 0, min_size = 0, max_size = 0;
  std::string out;
};

int run_detect(const DetectArgs& args) {
  if (args.k < 2) die(kExitUsage, "--k must be >= 2");
  if (args.r < 2) die(kExitUsage, "--r must be >= 2");
  if (args.eta <= 0.0) die(kExitUsage, "--eta must be positive");
  if (args.tol <= 0.0) die(kExitUsage, "--tol must be positive");
  const auto sn = parse_auto(args.sn, "--sn");
  if (sn && (*sn <= 0.0 || *sn > 1.0)) die(kExitUsage, "--sn must lie in (0, 1]");
  const auto lambda0 = parse_auto(args.lambda0, "--lambda0");
  const auto lambda1 = parse_auto(args.lambda1, "--lambda1");
  if ((lambda0 && *lambda0 < 0.0) || (lambda1 && *lambda1 < 0.0))
    die(kExitUsage, "penalty weights must be non-negative");

  Stopwatch watch;
  hc_load_options opts;
  hc_load_options_init(&opts);
  opts.min_size = args.min_size;
  opts.max_size = args.max_size;
  opts.clique_cap = args.clique_expand;
  hc_hypergraph* h = nullptr;
  check_rc(hc_hypergraph_load_file(args.input.c_str(), &opts, &h));
  if (hc_hypergraph_duplicates_collapsed(h) > 0)
    std::cerr << "note: collapsed " << hc_hypergraph_duplicates_collapsed(h)
              << " duplicate hyperedge(s)\n";

  hc_fit_config config;
  hc_fit_config_init(&config, args.k, args.r);
  if (sn) config.s_n = *sn;
  if (lambda0) config.lambda0 = *lambda0;
  if (lambda1) config.lambda1 = *lambda1;
  config.eta0 = args.eta;
  config.tol = args.tol;
  config.max_outer = args.max_iter;
  config.seed = args.seed;

  hc_fit_result* res = nullptr;
  const hc_status rc = hc_fit(h, &config, &res);
  if (rc != HC_OK) {
    hc_hypergraph_free(h);
    check_rc(rc);
  }

  uint64_t n_labels = 0;
  const uint32_t* labels = hc_fit_result_labels(res, &n_labels);
  check_rc(hc_labels_write(labels, n_labels, (args.out + ".labels").c_str()));

  uint64_t rows = 0, cols = 0;
  const double* alpha = hc_fit_result_alpha(res, &rows, &cols);
  write_alpha_csv(alpha, rows, cols, rows - 1, args.out + ".alpha.csv");

  uint64_t trace_len = 0;
  const double* loss = hc_fit_result_loss_trace(res, &trace_len);
  uint64_t eta_len = 0;
  const double* eta = hc_fit_result_eta_trace(res, &eta_len);
  std::string trace_csv = "iteration,objective,eta\n";
  for (uint64_t i = 0; i < trace_len; ++i)
    trace_csv += std::to_string(i) + "," + fmt(loss[i]) + "," + fmt(eta[i]) + "\n";
  write_text_file(args.out + ".trace.csv", trace_csv);

  const bool converged = hc_fit_result_converged(res) != 0;
  json manifest;
  manifest["command"] = "detect";
  manifest["version"] = hc_version();
  manifest["seed"] = args.seed;
  manifest["inputs"] = {{"hypergraph", args.input}};
  manifest["config"] = {{"k", args.k},
                        {"r", args.r},
                        {"s_n", hc_fit_result_s_n(res)},
                        {"lambda0", hc_fit_result_lambda0(res)},
                        {"lambda1", hc_fit_result_lambda1(res)},
                        {"eta0", args.eta},
                        {"tol", args.tol},
                        {"max_iter", args.max_iter},
                        {"min_size", args.min_size},
                        {"max_size", args.max_size},
                        {"clique_expand", args.clique_expand}};
  manifest["network"] = {{"n", hc_hypergraph_n(h)},
                         {"m", hc_hypergraph_m(h)},
                         {"edges", hc_hypergraph_edge_count(h)}};
  manifest["converged"] = converged;
  manifest["outer_iters"] = hc_fit_result_outer_iters(res);
  manifest["final_eta"] = hc_fit_result_final_eta(res);
  manifest["outputs"] = {{"labels", args.out + ".labels"},
                         {"alpha", args.out + ".alpha.csv"},
                         {"trace", args.out + ".trace.csv"}};
  manifest["wall_clock_seconds"] = watch.seconds();
  write_manifest(args.out + ".manifest.json", manifest);

  std::cout << "detect: n=" << hc_hypergraph_n(h) << " converged="
            << (converged ? "true" : "false")
            << " iters=" << hc_fit_result_outer_iters(res) << " -> " << args.out
            << ".labels\n";
  hc_fit_result_free(res);
  hc_hypergraph_free(h);
  return 0;
}

// ---------------------------------------------------------------- eval

struct EvalArgs {
  std::string truth, pred;
  uint32_t k = 0;
  std::string alpha_true, alpha_pred;
  double sn = 0.0;
  uint32_t m = 0;
  bool as_json = false;
};

int run_eval(const EvalArgs& args) {
  if (args.k < 1) die(kExitUsage, "--k must be >= 1");
  const bool want_hellinger = !args.alpha_true.empty() || !args.alpha_pred.empty();
  if (want_hellinger) {
    if (args.alpha_true.empty() || args.alpha_pred.empty())
      die(kExitUsage, "Hellinger needs both --alpha-true and --alpha-pred");
    if (args.sn <= 0.0 || args.sn > 1.0)
      die(kExitUsage, "--sn must lie in (0, 1] for Hellinger");
    if (args.m < 2) die(kExitUsage, "--m must be >= 2 for Hellinger");
  }

  uint32_t* truth = nullptr;
  uint32_t* pred = nullptr;
  uint64_t truth_len = 0, pred_len = 0;
  check_rc(hc_labels_read(args.truth.c_str(), &truth, &truth_len));
  const hc_status rc_pred = hc_labels_read(args.pred.c_str(), &pred, &pred_len);
  if (rc_pred != HC_OK) {
    hc_buffer_free(truth);
    check_rc(rc_pred);
  }
  if (truth_len != pred_len) {
    hc_buffer_free(truth);
    hc_buffer_free(pred);
    die(kExitData, "label files differ in length: " + std::to_string(truth_len) +
                       " vs " + std::to_string(pred_len));
  }
  double err = 0.0;
  const hc_status rc = hc_hamming_error(truth, pred, truth_len, args.k, &err);
  hc_buffer_free(truth);
  hc_buffer_free(pred);
  check_rc(rc);

  std::optional<double> hellinger;
  if (want_hellinger) {
    hc_matrix* a = nullptr;
    hc_matrix* b = nullptr;
    check_rc(hc_matrix_read_csv(args.alpha_true.c_str(), &a));
    const hc_status rb = hc_matrix_read_csv(args.alpha_pred.c_str(), &b);
    if (rb != HC_OK) {
      hc_matrix_free(a);
      check_rc(rb);
    }
    double d = 0.0;
    const hc_status rd = hc_hellinger(a, b, args.m, args.sn, &d);
    hc_matrix_free(a);
    hc_matrix_free(b);
    check_rc(rd);
    hellinger = d;
  }

  if (args.as_json) {
    json out;
    out["hamming_error"] = err;
    if (hellinger) out["hellinger"] = *hellinger;
    std::cout << out.dump() << "\n";
  } else {
    std::cout << "hamming_error " << fmt(err) << "\n";
    if (hellinger) std::cout << "hellinger " << fmt(*hellinger) << "\n";
  }
  return 0;
}

// ---------------------------------------------------------------- bench

struct BenchArgs {
  int scenario = 1;
  std::string n_list, sn_list;
  uint32_t reps = 1;
  std::string methods = "hem,wptg,shp";
  uint32_t k = 2, m = 3, r = 10;
  uint64_t seed = 1;
  double eta = 1.0, tol = 1e-6;
  uint32_t max_iter = 500;
  std::string out;
};

int run_bench(const BenchArgs& args) {
  if (args.scenario != 1 && args.scenario != 2)
    die(kExitUsage, "--scenario must be 1 or 2");
  if (args.reps < 1) die(kExitUsage, "--reps must be >= 1");
  const auto n_list = parse_u32_list(args.n_list, "--n-list");
  const auto sn_list = parse_double_list(args.sn_list, "--sn-list");
  for (double s : sn_list)
    if (s <= 0.0 || s > 1.0) die(kExitUsage, "--sn-list entries must lie in (0, 1]");

  // validate method names up front so typos are a usage error
  {
    std::size_t pos = 0;
    while (pos <= args.methods.size()) {
      auto comma = args.methods.find(',', pos);
      if (comma == std::string::npos) comma = args.methods.size();
      const std::string name = args.methods.substr(pos, comma - pos);
      if (!name.empty() && name != "hem" && name != "wptg" && name != "shp")
        die(kExitUsage, "unsupported method '" + name +
                            "' (supported: hem, wptg, shp)");
      pos = comma + 1;
      if (comma == args.methods.size()) break;
    }
  }

  Stopwatch watch;
  hc_bench_config config;
  hc_bench_config_init(&config);
  config.scenario = args.scenario;
  config.n_list = n_list.data();
  config.n_count = n_list.size();
  config.sn_list = sn_list.data();
  config.sn_count = sn_list.size();
  config.reps = args.reps;
  config.methods = args.methods.c_str();
  config.k = args.k;
  config.m = args.m;
  config.r = args.r;
  config.seed = args.seed;
  config.eta0 = args.eta;
  config.tol = args.tol;
  config.max_outer = args.max_iter;

  hc_bench_result* res = nullptr;
  check_rc(hc_bench_run(&config, &res));

  write_text_file(args.out + ".csv", hc_bench_result_csv(res));
  write_text_file(args.out + ".json", std::string(hc_bench_result_json(res)) + "\n");

  json manifest;
  manifest["command"] = "bench";
  manifest["version"] = hc_version();
  manifest["seed"] = args.seed;
  manifest["config"] = {{"scenario", args.scenario}, {"n_list", n_list},
                        {"sn_list", sn_list},        {"reps", args.reps},
                        {"methods", args.methods},   {"k", args.k},
                        {"m", args.m},               {"r", args.r},
                        {"eta0", args.eta},          {"tol", args.tol},
                        {"max_iter", args.max_iter}};
  manifest["outputs"] = {{"csv", args.out + ".csv"}, {"json", args.out + ".json"}};
  manifest["wall_clock_seconds"] = watch.seconds();
  write_manifest(args.out + ".manifest.json", manifest);

  // human-readable table, 4 decimals
  std::cout << "scenario  n       s_n     method  mean    sd      reps\n";
  const size_t cells = hc_bench_result_num_cells(res);
  for (size_t i = 0; i < cells; ++i) {
    int scenario = 0;
    uint32_t n = 0, reps = 0;
    double s_n = 0, mean = 0, sd = 0, seconds = 0;
    const char* method = nullptr;
    check_rc(hc_bench_result_cell(res, i, &scenario, &n, &s_n, &method, &mean,
                                  &sd, &reps, &seconds));
    std::printf("%-9d %-7u %-7.4f %-7s %-7s %-7s %u\n", scenario, n, s_n, method,
                fmt4(mean).c_str(), fmt4(sd).c_str(), reps);
  }
  hc_bench_result_free(res);
  return 0;
}

}  // namespace

int main(int argc, char** argv) {
  CLI::App app{"Community detection in general hypergraphs via tensor embedding"};
  app.require_subcommand(1);
  app.set_version_flag("--version", hc_version());

  GenerateArgs gen;
  auto* cmd_gen = app.add_subcommand("generate", "Generate a synthetic hypergraph");
  cmd_gen->add_option("--scenario", gen.scenario, "1 = embedding model, 2 = block model")
      ->required();
  cmd_gen->add_option("--n", gen.n, "number of vertices")->required();
  cmd_gen->add_option("--k", gen.k, "number of communities")->required();
  cmd_gen->add_option("--m", gen.m, "hypergraph range (max edge size)");
  cmd_gen->add_option("--r", gen.r, "embedding dimension");
  cmd_gen->add_option("--sn", gen.sn, "sparsity factor in (0,1]")->required();
  cmd_gen->add_option("--seed", gen.seed, "RNG seed");
  cmd_gen->add_option("--out", gen.out, "output prefix")->required();

  DetectArgs det;
  auto* cmd_det = app.add_subcommand("detect", "Fit the embedding model and cluster");
  cmd_det->add_option("--input", det.input, "input .hg file")->required();
  cmd_det->add_option("--k", det.k, "number of communities")->required();
  cmd_det->add_option("--r", det.r, "embedding dimension")->required();
  cmd_det->add_option("--sn", det.sn, "sparsity factor or 'auto'");
  cmd_det->add_option("--lambda0", det.lambda0, "ridge penalty weight or 'auto'");
  cmd_det->add_option("--lambda1", det.lambda1, "clustering penalty weight or 'auto'");
  cmd_det->add_option("--eta", det.eta, "initial learning rate");
  cmd_det->add_option("--tol", det.tol, "relative objective-change tolerance");
  cmd_det->add_option("--max-iter", det.max_iter, "outer iteration cap");
  cmd_det->add_option("--seed", det.seed, "RNG seed");
  cmd_det->add_option("--clique-expand", det.clique_expand,
                      "expand larger edges to this size at ingest");
  cmd_det->add_option("--min-size", det.min_size, "drop edges smaller than this");
  cmd_det->add_option("--max-size", det.max_size, "drop edges larger than this");
  cmd_det->add_option("--out", det.out, "output prefix")->required();

  EvalArgs ev;
  auto* cmd_eval = app.add_subcommand("eval", "Score a predicted assignment");
  cmd_eval->add_option("--truth", ev.truth, "ground-truth label file")->required();
  cmd_eval->add_option("--pred", ev.pred, "predicted label file")->required();
  cmd_eval->add_option("--k", ev.k, "number of communities")->required();
  cmd_eval->add_option("--alpha-true", ev.alpha_true, "true embedding CSV");
  cmd_eval->add_option("--alpha-pred", ev.alpha_pred, "fitted embedding CSV");
  cmd_eval->add_option("--sn", ev.sn, "sparsity factor for Hellinger");
  cmd_eval->add_option("--m", ev.m, "hypergraph range for Hellinger");
  cmd_eval->add_flag("--json", ev.as_json, "machine-readable output");

  BenchArgs bench;
  auto* cmd_bench = app.add_subcommand("bench", "Run the synthetic benchmark grid");
  cmd_bench->add_option("--scenario", bench.scenario, "1 or 2")->required();
  cmd_bench->add_option("--n-list", bench.n_list, "comma-separated vertex counts")
      ->required();
  cmd_bench->add_option("--sn-list", bench.sn_list, "comma-separated sparsities")
      ->required();
  cmd_bench->add_option("--reps", bench.reps, "replications per cell")->required();
  cmd_bench->add_option("--methods", bench.methods, "comma list of hem,wptg,shp");
  cmd_bench->add_option("--k", bench.k, "number of communities");
  cmd_bench->add_option("--m", bench.m, "hypergraph range");
  cmd_bench->add_option("--r", bench.r, "embedding dimension");
  cmd_bench->add_option("--seed", bench.seed, "master seed");
  cmd_bench->add_option("--eta", bench.eta, "initial learning rate for HEM");
  cmd_bench->add_option("--tol", bench.tol, "HEM stopping tolerance");
  cmd_bench->add_option("--max-iter", bench.max_iter, "HEM outer iteration cap");
  cmd_bench->add_option("--out", bench.out, "output prefix")->required();

  try {
    app.parse(argc, argv);
  } catch (const CLI::CallForHelp& e) {
    return app.exit(e);
  } catch (const CLI::CallForAllHelp& e) {
    return app.exit(e);
  } catch (const CLI::CallForVersion& e) {
    return app.exit(e);
  } catch (const CLI::ParseError& e) {
    app.exit(e);
    return kExitUsage;
  }

  try {
    if (cmd_gen->parsed()) return run_generate(gen);
    if (cmd_det->parsed()) return run_detect(det);
    if (cmd_eval->parsed()) return run_eval(ev);
    if (cmd_bench->parsed()) return run_bench(bench);
  } catch (const CliError& e) {
    std::cerr << "error: " << e.message << "\n";
    return e.exit_code;
  } catch (const std::exception& e) {
    std::cerr << "error: " << e.what() << "\n";
    return kExitData;
  }
  return kExitUsage;
}
