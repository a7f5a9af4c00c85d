#include "hypercomm.h"

#include <cstdlib>
#include <cstring>
#include <new>
#include <sstream>
#include <string>

#include "hypercomm/baselines.hpp"
#include "hypercomm/benchmark.hpp"
#include "hypercomm/fit.hpp"
#include "hypercomm/hypergraph.hpp"
#include "hypercomm/io.hpp"
#include "hypercomm/metrics.hpp"
#include "hypercomm/synth.hpp"

namespace {

constexpr const char* kVersion = "0.1.0";

thread_local std::string g_last_error;

hc_status status_of(const hypercomm::Error& e) {
  using hypercomm::Status;
  switch (e.status()) {
    case Status::ok: return HC_OK;
    case Status::invalid_argument: return HC_ERR_INVALID_ARGUMENT;
    case Status::parse_error: return HC_ERR_PARSE;
    case Status::empty_network: return HC_ERR_EMPTY_NETWORK;
    case Status::overflow: return HC_ERR_OVERFLOW;
    case Status::numeric_failure: return HC_ERR_NUMERIC;
    case Status::io_error: return HC_ERR_IO;
    case Status::internal: return HC_ERR_INTERNAL;
  }
  return HC_ERR_INTERNAL;
}

template <class F>
hc_status guarded(F&& f) {
  try {
    f();
    return HC_OK;
  } catch (const hypercomm::Error& e) {
    g_last_error = e.what();
    return status_of(e);
  } catch (const std::exception& e) {
    g_last_error = e.what();
    return HC_ERR_INTERNAL;
  } catch (...) {
    g_last_error = "unknown error";
    return HC_ERR_INTERNAL;
  }
}

uint32_t* copy_labels(const hypercomm::Labels& labels, uint64_t* out_len) {
  auto* buf = static_cast<uint32_t*>(std::malloc(labels.size() * sizeof(uint32_t)));
  if (!buf) throw std::bad_alloc();
  std::memcpy(buf, labels.data(), labels.size() * sizeof(uint32_t));
  *out_len = labels.size();
  return buf;
}

}  // namespace

struct hc_hypergraph {
  hypercomm::Hypergraph h;
  uint64_t duplicates_collapsed = 0;
};

struct hc_matrix {
  hypercomm::Mat m;
};

struct hc_fit_result {
  hypercomm::FitResult res;
};

struct hc_truth {
  hypercomm::SyntheticTruth truth;
};

struct hc_bench_result {
  hypercomm::BenchResult res;
  std::string csv;
  std::string json;
};

extern "C" {

const char* hc_version(void) { return kVersion; }

const char* hc_last_error(void) { return g_last_error.c_str(); }

void hc_buffer_free(void* ptr) { std::free(ptr); }

void hc_load_options_init(hc_load_options* opts) {
  opts->n_override = 0;
  opts->m_override = 0;
  opts->min_size = 0;
  opts->max_size = 0;
  opts->clique_cap = 0;
}

}  // extern "C"

namespace {

hypercomm::LoadOptions convert(const hc_load_options* opts) {
  hypercomm::LoadOptions o;
  if (!opts) return o;
  if (opts->n_override) o.n_override = opts->n_override;
  if (opts->m_override) o.m_override = opts->m_override;
  if (opts->min_size > 1) o.min_size = opts->min_size;
  if (opts->max_size) o.max_size = opts->max_size;
  if (opts->clique_cap) o.clique_cap = opts->clique_cap;
  return o;
}

}  // namespace

extern "C" {

hc_status hc_hypergraph_load_file(const char* path, const hc_load_options* opts,
                                  hc_hypergraph** out) {
  return guarded([&] {
    hypercomm::LoadStats stats;
    auto h = hypercomm::load_hypergraph_file(path, convert(opts), &stats);
    *out = new hc_hypergraph{std::move(h), stats.duplicates_collapsed};
  });
}

hc_status hc_hypergraph_load_string(const char* text, const hc_load_options* opts,
                                    hc_hypergraph** out) {
  return guarded([&] {
    std::istringstream in(text);
    hypercomm::LoadStats stats;
    auto h = hypercomm::load_hypergraph(in, convert(opts), &stats);
    *out = new hc_hypergraph{std::move(h), stats.duplicates_collapsed};
  });
}

hc_status hc_hypergraph_save_file(const hc_hypergraph* h, const char* path) {
  return guarded([&] { hypercomm::save_hypergraph_file(h->h, path); });
}

void hc_hypergraph_free(hc_hypergraph* h) { delete h; }

uint32_t hc_hypergraph_n(const hc_hypergraph* h) { return h->h.n(); }
uint32_t hc_hypergraph_m(const hc_hypergraph* h) { return h->h.m(); }
uint64_t hc_hypergraph_edge_count(const hc_hypergraph* h) {
  return h->h.edge_count();
}
uint64_t hc_hypergraph_duplicates_collapsed(const hc_hypergraph* h) {
  return h->duplicates_collapsed;
}

hc_status hc_hypergraph_degree(const hc_hypergraph* h, uint32_t vertex,
                               uint64_t* out) {
  return guarded([&] { *out = h->h.degree(vertex); });
}

hc_status hc_clique_expand(const hc_hypergraph* h, uint32_t m_cap,
                           hc_hypergraph** out) {
  return guarded([&] {
    *out = new hc_hypergraph{hypercomm::clique_expand(h->h, m_cap), 0};
  });
}

hc_status hc_estimate_sparsity(const hc_hypergraph* h, double* out) {
  return guarded([&] { *out = hypercomm::estimate_sparsity(h->h); });
}

hc_status hc_phi(uint32_t n, uint32_t m, uint64_t* out) {
  return guarded([&] { *out = hypercomm::phi(n, m); });
}

hc_status hc_labels_read(const char* path, uint32_t** out, uint64_t* out_len) {
  return guarded([&] {
    const auto labels = hypercomm::read_labels_file(path);
    *out = copy_labels(labels, out_len);
  });
}

hc_status hc_labels_write(const uint32_t* labels, uint64_t len, const char* path) {
  return guarded([&] {
    hypercomm::Labels vec(labels, labels + len);
    hypercomm::write_labels_file(vec, path);
  });
}

hc_status hc_matrix_create(uint64_t rows, uint64_t cols, const double* data,
                           hc_matrix** out) {
  return guarded([&] {
    hypercomm::require(rows > 0 && cols > 0, hypercomm::Status::invalid_argument,
                       "matrix: empty shape");
    hypercomm::Mat m(static_cast<Eigen::Index>(rows),
                     static_cast<Eigen::Index>(cols));
    std::memcpy(m.data(), data, rows * cols * sizeof(double));
    *out = new hc_matrix{std::move(m)};
  });
}

uint64_t hc_matrix_rows(const hc_matrix* m) {
  return static_cast<uint64_t>(m->m.rows());
}
uint64_t hc_matrix_cols(const hc_matrix* m) {
  return static_cast<uint64_t>(m->m.cols());
}
const double* hc_matrix_data(const hc_matrix* m) { return m->m.data(); }

hc_status hc_matrix_read_csv(const char* path, hc_matrix** out) {
  return guarded([&] {
    *out = new hc_matrix{hypercomm::read_matrix_csv_file(path)};
  });
}

hc_status hc_matrix_write_csv(const hc_matrix* m, const char* path) {
  return guarded([&] { hypercomm::write_matrix_csv_file(m->m, path); });
}

void hc_matrix_free(hc_matrix* m) { delete m; }

void hc_fit_config_init(hc_fit_config* config, uint32_t k, uint32_t r) {
  config->k = k;
  config->r = r;
  config->s_n = -1.0;
  config->lambda0 = -1.0;
  config->lambda1 = -1.0;
  config->eta0 = 1.0;
  config->tol = 1e-6;
  config->max_outer = 500;
  config->seed = 1;
  config->c0 = 0.0;
}

hc_status hc_fit(const hc_hypergraph* h, const hc_fit_config* config,
                 hc_fit_result** out) {
  return guarded([&] {
    hypercomm::FitConfig fc;
    fc.k = config->k;
    fc.r = config->r;
    if (config->s_n > 0.0) fc.s_n = config->s_n;
    if (config->lambda0 >= 0.0) fc.lambda0 = config->lambda0;
    if (config->lambda1 >= 0.0) fc.lambda1 = config->lambda1;
    fc.eta0 = config->eta0;
    fc.tol = config->tol;
    fc.max_outer = config->max_outer;
    fc.seed = config->seed;
    if (config->c0 > 0.0) fc.c0 = config->c0;
    *out = new hc_fit_result{hypercomm::fit(h->h, fc)};
  });
}

void hc_fit_result_free(hc_fit_result* res) { delete res; }

const uint32_t* hc_fit_result_labels(const hc_fit_result* res, uint64_t* out_len) {
  *out_len = res->res.labels.size();
  return res->res.labels.data();
}

const double* hc_fit_result_alpha(const hc_fit_result* res, uint64_t* out_rows,
                                  uint64_t* out_cols) {
  *out_rows = static_cast<uint64_t>(res->res.alpha.data().rows());
  *out_cols = static_cast<uint64_t>(res->res.alpha.data().cols());
  return res->res.alpha.data().data();
}

const double* hc_fit_result_centers(const hc_fit_result* res, uint64_t* out_rows,
                                    uint64_t* out_cols) {
  *out_rows = static_cast<uint64_t>(res->res.centers.rows());
  *out_cols = static_cast<uint64_t>(res->res.centers.cols());
  return res->res.centers.data();
}

const double* hc_fit_result_loss_trace(const hc_fit_result* res,
                                       uint64_t* out_len) {
  *out_len = res->res.loss_trace.size();
  return res->res.loss_trace.data();
}

const double* hc_fit_result_eta_trace(const hc_fit_result* res, uint64_t* out_len) {
  *out_len = res->res.eta_trace.size();
  return res->res.eta_trace.data();
}

int hc_fit_result_converged(const hc_fit_result* res) {
  return res->res.converged ? 1 : 0;
}
uint32_t hc_fit_result_outer_iters(const hc_fit_result* res) {
  return res->res.outer_iters;
}
double hc_fit_result_final_eta(const hc_fit_result* res) {
  return res->res.final_eta;
}
double hc_fit_result_s_n(const hc_fit_result* res) { return res->res.params.s_n; }
double hc_fit_result_lambda0(const hc_fit_result* res) {
  return res->res.params.lambda0;
}
double hc_fit_result_lambda1(const hc_fit_result* res) {
  return res->res.params.lambda1;
}

hc_status hc_generate(int scenario, uint32_t n, uint32_t k, uint32_t m, uint32_t r,
                      double s_n, uint64_t seed, hc_hypergraph** out_h,
                      hc_truth** out_truth) {
  return guarded([&] {
    hypercomm::require(scenario == 1 || scenario == 2,
                       hypercomm::Status::invalid_argument,
                       "generate: scenario must be 1 or 2");
    hypercomm::ScenarioParams p{n, k, m, r, s_n, seed};
    auto [h, truth] = scenario == 1 ? hypercomm::generate_scenario1(p)
                                    : hypercomm::generate_scenario2(p);
    *out_h = new hc_hypergraph{std::move(h), 0};
    *out_truth = new hc_truth{std::move(truth)};
  });
}

void hc_truth_free(hc_truth* truth) { delete truth; }

const uint32_t* hc_truth_labels(const hc_truth* truth, uint64_t* out_len) {
  *out_len = truth->truth.labels_star.size();
  return truth->truth.labels_star.data();
}

const double* hc_truth_alpha(const hc_truth* truth, uint64_t* out_rows,
                             uint64_t* out_cols) {
  *out_rows = static_cast<uint64_t>(truth->truth.alpha_star.data().rows());
  *out_cols = static_cast<uint64_t>(truth->truth.alpha_star.data().cols());
  return truth->truth.alpha_star.data().data();
}

const double* hc_truth_centers(const hc_truth* truth, uint64_t* out_rows,
                               uint64_t* out_cols) {
  if (!truth->truth.centers_star) return nullptr;
  *out_rows = static_cast<uint64_t>(truth->truth.centers_star->rows());
  *out_cols = static_cast<uint64_t>(truth->truth.centers_star->cols());
  return truth->truth.centers_star->data();
}

hc_status hc_wptg_detect(const hc_hypergraph* h, uint32_t k, uint64_t seed,
                         uint32_t** out_labels, uint64_t* out_len) {
  return guarded([&] {
    *out_labels = copy_labels(hypercomm::wptg_detect(h->h, k, seed), out_len);
  });
}

hc_status hc_shp_detect(const hc_hypergraph* h, uint32_t k, uint64_t seed,
                        uint32_t** out_labels, uint64_t* out_len) {
  return guarded([&] {
    *out_labels = copy_labels(hypercomm::shp_detect(h->h, k, seed), out_len);
  });
}

hc_status hc_hamming_error(const uint32_t* truth, const uint32_t* pred,
                           uint64_t len, uint32_t k, double* out) {
  return guarded([&] {
    hypercomm::Labels t(truth, truth + len), p(pred, pred + len);
    *out = hypercomm::hamming_error(t, p, k);
  });
}

hc_status hc_hellinger(const hc_matrix* alpha_a, const hc_matrix* alpha_b,
                       uint32_t m, double s_n, double* out) {
  return guarded([&] {
    auto a = hypercomm::EmbeddingMatrix::from_vertex_rows(alpha_a->m);
    auto b = hypercomm::EmbeddingMatrix::from_vertex_rows(alpha_b->m);
    *out = hypercomm::hellinger_distance(a, b, m, s_n);
  });
}

void hc_bench_config_init(hc_bench_config* config) {
  config->scenario = 1;
  config->n_list = nullptr;
  config->n_count = 0;
  config->sn_list = nullptr;
  config->sn_count = 0;
  config->reps = 1;
  config->methods = "hem,wptg,shp";
  config->k = 2;
  config->m = 3;
  config->r = 10;
  config->seed = 1;
  config->eta0 = 1.0;
  config->tol = 1e-6;
  config->max_outer = 500;
  config->lambda0 = -1.0;
  config->lambda1 = -1.0;
  config->threads = -1;
}

hc_status hc_bench_run(const hc_bench_config* config, hc_bench_result** out) {
  return guarded([&] {
    hypercomm::BenchConfig bc;
    bc.scenario = config->scenario;
    bc.n_list.assign(config->n_list, config->n_list + config->n_count);
    bc.sn_list.assign(config->sn_list, config->sn_list + config->sn_count);
    bc.reps = config->reps;
    std::string methods = config->methods ? config->methods : "";
    std::size_t pos = 0;
    while (pos <= methods.size()) {
      auto comma = methods.find(',', pos);
      if (comma == std::string::npos) comma = methods.size();
      const std::string name = methods.substr(pos, comma - pos);
      if (!name.empty()) {
        const auto parsed = hypercomm::parse_method(name);
        hypercomm::require(parsed.has_value(),
                           hypercomm::Status::invalid_argument,
                           "bench: unsupported method '" + name + "'");
        bc.methods.push_back(*parsed);
      }
      pos = comma + 1;
      if (comma == methods.size()) break;
    }
    bc.k = config->k;
    bc.m = config->m;
    bc.r = config->r;
    bc.seed = config->seed;
    bc.fit.eta0 = config->eta0;
    bc.fit.tol = config->tol;
    bc.fit.max_outer = config->max_outer;
    if (config->lambda0 >= 0.0) bc.fit.lambda0 = config->lambda0;
    if (config->lambda1 >= 0.0) bc.fit.lambda1 = config->lambda1;
    bc.threads = config->threads;
    auto res = hypercomm::run_benchmark(bc);
    auto* handle = new hc_bench_result{std::move(res), "", ""};
    handle->csv = handle->res.to_csv();
    handle->json = handle->res.to_json();
    *out = handle;
  });
}

void hc_bench_result_free(hc_bench_result* res) { delete res; }

const char* hc_bench_result_csv(const hc_bench_result* res) {
  return res->csv.c_str();
}
const char* hc_bench_result_json(const hc_bench_result* res) {
  return res->json.c_str();
}
size_t hc_bench_result_num_cells(const hc_bench_result* res) {
  return res->res.cells.size();
}

hc_status hc_bench_result_cell(const hc_bench_result* res, size_t index,
                               int* scenario, uint32_t* n, double* s_n,
                               const char** method, double* mean, double* sd,
                               uint32_t* reps, double* seconds) {
  return guarded([&] {
    hypercomm::require(index < res->res.cells.size(),
                       hypercomm::Status::invalid_argument,
                       "bench: cell index out of range");
    const auto& c = res->res.cells[index];
    if (scenario) *scenario = c.scenario;
    if (n) *n = c.n;
    if (s_n) *s_n = c.s_n;
    if (method) *method = c.method.c_str();
    if (mean) *mean = c.mean;
    if (sd) *sd = c.sd;
    if (reps) *reps = c.reps;
    if (seconds) *seconds = c.seconds;
  });
}

}  // extern "C"
