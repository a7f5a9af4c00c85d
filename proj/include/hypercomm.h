/* hypercomm — community detection in general hypergraphs via tensor
 * embedding. C API for the shared library: opaque handles, integer status
 * codes, thread-local error messages. All vertex ids and community labels
 * are 1-based. */

#ifndef HYPERCOMM_H
#define HYPERCOMM_H

#include <stddef.h>
#include <stdint.h>

#ifdef __cplusplus
extern "C" {
#endif

typedef enum hc_status {
  HC_OK = 0,
  HC_ERR_INVALID_ARGUMENT = 1,
  HC_ERR_PARSE = 2,
  HC_ERR_EMPTY_NETWORK = 3,
  HC_ERR_OVERFLOW = 4,
  HC_ERR_NUMERIC = 5,
  HC_ERR_IO = 6,
  HC_ERR_INTERNAL = 7
} hc_status;

/* library version string, e.g. "0.1.0" */
const char* hc_version(void);

/* message for the most recent failure on this thread */
const char* hc_last_error(void);

/* frees label/double buffers returned through out-parameters */
void hc_buffer_free(void* ptr);

/* ---------------- hypergraphs ---------------- */

typedef struct hc_hypergraph hc_hypergraph;

typedef struct hc_load_options {
  uint32_t n_override;   /* 0 = infer from data / header */
  uint32_t m_override;   /* 0 = infer */
  uint32_t min_size;     /* 0 or 1 = keep all */
  uint32_t max_size;     /* 0 = no upper filter */
  uint32_t clique_cap;   /* 0 = no clique expansion at ingest */
} hc_load_options;

void hc_load_options_init(hc_load_options* opts);

/* ".hg" text format: optional "#n <n> m <m>" header, one hyperedge per line
 * as whitespace-separated vertex ids, '#' comment lines */
hc_status hc_hypergraph_load_file(const char* path, const hc_load_options* opts,
                                  hc_hypergraph** out);
hc_status hc_hypergraph_load_string(const char* text, const hc_load_options* opts,
                                    hc_hypergraph** out);
hc_status hc_hypergraph_save_file(const hc_hypergraph* h, const char* path);
void hc_hypergraph_free(hc_hypergraph* h);

uint32_t hc_hypergraph_n(const hc_hypergraph* h);
uint32_t hc_hypergraph_m(const hc_hypergraph* h);
uint64_t hc_hypergraph_edge_count(const hc_hypergraph* h);
/* number of hyperedges containing the given vertex */
hc_status hc_hypergraph_degree(const hc_hypergraph* h, uint32_t vertex,
                               uint64_t* out);
/* duplicate hyperedges collapsed at the most recent load, 0 if none */
uint64_t hc_hypergraph_duplicates_collapsed(const hc_hypergraph* h);

hc_status hc_clique_expand(const hc_hypergraph* h, uint32_t m_cap,
                           hc_hypergraph** out);
/* hyperedge density estimate of the sparsity factor s_n */
hc_status hc_estimate_sparsity(const hc_hypergraph* h, double* out);
/* phi(n, m) = sum_{k=1..m} C(n, k), exact; HC_ERR_OVERFLOW if > 64 bits */
hc_status hc_phi(uint32_t n, uint32_t m, uint64_t* out);

/* ---------------- label vectors ---------------- */

/* label file: one integer per line, line i = label of vertex i */
hc_status hc_labels_read(const char* path, uint32_t** out, uint64_t* out_len);
hc_status hc_labels_write(const uint32_t* labels, uint64_t len, const char* path);

/* ---------------- dense matrices (row-major doubles) ---------------- */

typedef struct hc_matrix hc_matrix;

hc_status hc_matrix_create(uint64_t rows, uint64_t cols, const double* data,
                           hc_matrix** out);
uint64_t hc_matrix_rows(const hc_matrix* m);
uint64_t hc_matrix_cols(const hc_matrix* m);
const double* hc_matrix_data(const hc_matrix* m);
hc_status hc_matrix_read_csv(const char* path, hc_matrix** out);
hc_status hc_matrix_write_csv(const hc_matrix* m, const char* path);
void hc_matrix_free(hc_matrix* m);

/* ---------------- model fitting ---------------- */

typedef struct hc_fit_config {
  uint32_t k;          /* number of communities, >= 2 */
  uint32_t r;          /* embedding dimension, >= 2 */
  double s_n;          /* <= 0: estimate from hyperedge density */
  double lambda0;      /* < 0: default 1e-6 * n^{(1-m)/2} */
  double lambda1;      /* < 0: default 1e-6 * sqrt(n) * log(n) */
  double eta0;         /* initial learning rate */
  double tol;          /* relative objective-change stopping threshold */
  uint32_t max_outer;  /* outer iteration cap */
  uint64_t seed;
  double c0;           /* > 0 enables the per-row norm cap */
} hc_fit_config;

void hc_fit_config_init(hc_fit_config* config, uint32_t k, uint32_t r);

typedef struct hc_fit_result hc_fit_result;

hc_status hc_fit(const hc_hypergraph* h, const hc_fit_config* config,
                 hc_fit_result** out);
void hc_fit_result_free(hc_fit_result* res);

/* community labels for vertices 1..n (entry i-1 is vertex i) */
const uint32_t* hc_fit_result_labels(const hc_fit_result* res, uint64_t* out_len);
/* fitted embedding, (n+1) x r row-major; row i-1 is vertex i, last row ones */
const double* hc_fit_result_alpha(const hc_fit_result* res, uint64_t* out_rows,
                                  uint64_t* out_cols);
/* fitted centers, (K+1) x r row-major, last row ones */
const double* hc_fit_result_centers(const hc_fit_result* res, uint64_t* out_rows,
                                    uint64_t* out_cols);
/* post-k-means objective and learning rate per outer iteration */
const double* hc_fit_result_loss_trace(const hc_fit_result* res, uint64_t* out_len);
const double* hc_fit_result_eta_trace(const hc_fit_result* res, uint64_t* out_len);
int hc_fit_result_converged(const hc_fit_result* res);
uint32_t hc_fit_result_outer_iters(const hc_fit_result* res);
double hc_fit_result_final_eta(const hc_fit_result* res);
/* resolved tunables actually used by the fit */
double hc_fit_result_s_n(const hc_fit_result* res);
double hc_fit_result_lambda0(const hc_fit_result* res);
double hc_fit_result_lambda1(const hc_fit_result* res);

/* ---------------- synthetic generators ---------------- */

typedef struct hc_truth hc_truth;

/* scenario 1: vertex embeddings fluctuate around community means;
 * scenario 2: block model, one shared embedding row per community */
hc_status hc_generate(int scenario, uint32_t n, uint32_t k, uint32_t m, uint32_t r,
                      double s_n, uint64_t seed, hc_hypergraph** out_h,
                      hc_truth** out_truth);
void hc_truth_free(hc_truth* truth);

const uint32_t* hc_truth_labels(const hc_truth* truth, uint64_t* out_len);
/* planted embedding, (n+1) x r row-major, last row ones */
const double* hc_truth_alpha(const hc_truth* truth, uint64_t* out_rows,
                             uint64_t* out_cols);
/* planted centers, (K+1) x r, scenario 2 only (NULL otherwise) */
const double* hc_truth_centers(const hc_truth* truth, uint64_t* out_rows,
                               uint64_t* out_cols);

/* ---------------- baseline detectors ---------------- */

hc_status hc_wptg_detect(const hc_hypergraph* h, uint32_t k, uint64_t seed,
                         uint32_t** out_labels, uint64_t* out_len);
hc_status hc_shp_detect(const hc_hypergraph* h, uint32_t k, uint64_t seed,
                        uint32_t** out_labels, uint64_t* out_len);

/* ---------------- evaluation ---------------- */

/* minimum scaled Hamming distance over all K! label permutations */
hc_status hc_hamming_error(const uint32_t* truth, const uint32_t* pred,
                           uint64_t len, uint32_t k, double* out);

/* averaged Hellinger distance between the Bernoulli laws of two embeddings;
 * matrices carry vertex rows only (n x r), the all-ones null row is implied */
hc_status hc_hellinger(const hc_matrix* alpha_a, const hc_matrix* alpha_b,
                       uint32_t m, double s_n, double* out);

/* ---------------- benchmark harness ---------------- */

typedef struct hc_bench_config {
  int scenario;             /* 1 or 2 */
  const uint32_t* n_list;
  size_t n_count;
  const double* sn_list;
  size_t sn_count;
  uint32_t reps;
  const char* methods;      /* comma-separated: hem,wptg,shp */
  uint32_t k, m, r;
  uint64_t seed;
  double eta0, tol;         /* HEM fit controls */
  uint32_t max_outer;
  double lambda0, lambda1;  /* < 0 = paper defaults */
  int threads;              /* -1 = env/hardware, 0 = serial */
} hc_bench_config;

void hc_bench_config_init(hc_bench_config* config);

typedef struct hc_bench_result hc_bench_result;

hc_status hc_bench_run(const hc_bench_config* config, hc_bench_result** out);
void hc_bench_result_free(hc_bench_result* res);

/* one row per cell x method: scenario,n,s_n,method,mean,sd,reps,seconds */
const char* hc_bench_result_csv(const hc_bench_result* res);
/* per-replication errors and failure messages */
const char* hc_bench_result_json(const hc_bench_result* res);

size_t hc_bench_result_num_cells(const hc_bench_result* res);
hc_status hc_bench_result_cell(const hc_bench_result* res, size_t index,
                               int* scenario, uint32_t* n, double* s_n,
                               const char** method, double* mean, double* sd,
                               uint32_t* reps, double* seconds);

#ifdef __cplusplus
} /* extern "C" */
#endif

#endif /* HYPERCOMM_H */
