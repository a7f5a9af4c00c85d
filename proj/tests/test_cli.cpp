// End-to-end driver for the CLI binary. argv[1] is the path to the binary;
// exercises every subcommand, the exit-code policy and output reproducibility.
#include <sys/wait.h>

#include <cstdio>
#include <cstdlib>
#include <fstream>
#include <iostream>
#include <sstream>
#include <string>
#include <vector>

namespace {

int g_failures = 0;
std::string g_cli;
std::string g_dir;

void check(bool ok, const std::string& what) {
  if (ok) {
    std::cout << "ok: " << what << "\n";
  } else {
    ++g_failures;
    std::cout << "FAILED: " << what << "\n";
  }
}

int run(const std::string& args, std::string* output = nullptr) {
  const std::string command = g_cli + " " + args + " 2>&1";
  FILE* pipe = popen(command.c_str(), "r");
  if (!pipe) return -1;
  std::string out;
  char buf[512];
  while (fgets(buf, sizeof(buf), pipe)) out += buf;
  const int status = pclose(pipe);
  if (output) *output = out;
  return WIFEXITED(status) ? WEXITSTATUS(status) : -1;
}

std::string slurp(const std::string& path) {
  std::ifstream in(path);
  std::ostringstream ss;
  ss << in.rdbuf();
  return ss.str();
}

bool exists(const std::string& path) {
  std::ifstream in(path);
  return in.good();
}

}  // namespace

int main(int argc, char** argv) {
  if (argc < 2) {
    std::cerr << "usage: test_cli <path-to-cli>\n";
    return 1;
  }
  g_cli = argv[1];
  char tmpl[] = "/tmp/hypercomm_cli_XXXXXX";
  if (!mkdtemp(tmpl)) {
    std::cerr << "mkdtemp failed\n";
    return 1;
  }
  g_dir = tmpl;
  setenv("HYPERCOMM_THREADS", "0", 1);

  // ---- generate -------------------------------------------------------
  const std::string gen_flags =
      "generate --scenario 2 --n 40 --k 2 --m 3 --r 3 --sn 0.4 --seed 7 --out ";
  check(run(gen_flags + g_dir + "/a") == 0, "generate exits 0");
  check(exists(g_dir + "/a.hg"), "generate writes .hg");
  check(exists(g_dir + "/a.labels"), "generate writes .labels");
  check(exists(g_dir + "/a.alpha.csv"), "generate writes .alpha.csv");
  check(exists(g_dir + "/a.manifest.json"), "generate writes manifest");

  check(run(gen_flags + g_dir + "/b") == 0, "generate twice");
  check(slurp(g_dir + "/a.hg") == slurp(g_dir + "/b.hg"),
        "same seed gives identical .hg");
  check(slurp(g_dir + "/a.labels") == slurp(g_dir + "/b.labels"),
        "same seed gives identical labels");
  check(slurp(g_dir + "/a.alpha.csv") == slurp(g_dir + "/b.alpha.csv"),
        "same seed gives identical alpha");

  check(run("generate --scenario 1 --n 30 --k 2 --m 3 --r 3 --sn 1.5 --seed 1 "
            "--out " + g_dir + "/bad") == 2,
        "--sn 1.5 is a usage error");
  check(run("generate --scenario 3 --n 30 --k 2 --m 3 --r 3 --sn 0.5 --seed 1 "
            "--out " + g_dir + "/bad") == 2,
        "--scenario 3 is a usage error");

  // ---- detect ---------------------------------------------------------
  const std::string det_flags = "detect --input " + g_dir +
                                "/a.hg --k 2 --r 3 --sn auto --seed 5 "
                                "--max-iter 40 --out ";
  check(run(det_flags + g_dir + "/fit1") == 0, "detect exits 0");
  check(exists(g_dir + "/fit1.labels"), "detect writes labels");
  check(exists(g_dir + "/fit1.alpha.csv"), "detect writes alpha");
  check(exists(g_dir + "/fit1.trace.csv"), "detect writes trace");
  check(exists(g_dir + "/fit1.manifest.json"), "detect writes manifest");

  check(run(det_flags + g_dir + "/fit2") == 0, "detect reruns");
  check(slurp(g_dir + "/fit1.labels") == slurp(g_dir + "/fit2.labels"),
        "detect is reproducible (labels)");
  check(slurp(g_dir + "/fit1.alpha.csv") == slurp(g_dir + "/fit2.alpha.csv"),
        "detect is reproducible (alpha)");
  check(slurp(g_dir + "/fit1.trace.csv") == slurp(g_dir + "/fit2.trace.csv"),
        "detect is reproducible (trace)");

  {
    // objective column is non-increasing
    std::ifstream trace(g_dir + "/fit1.trace.csv");
    std::string line;
    std::getline(trace, line);  // header
    double prev = 1e300;
    bool monotone = true;
    int rows = 0;
    while (std::getline(trace, line)) {
      const auto c1 = line.find(','), c2 = line.rfind(',');
      const double obj = std::stod(line.substr(c1 + 1, c2 - c1 - 1));
      if (obj > prev) monotone = false;
      prev = obj;
      ++rows;
    }
    check(monotone && rows >= 2, "trace objective is non-increasing");
  }
  {
    const std::string manifest = slurp(g_dir + "/fit1.manifest.json");
    check(manifest.find("\"converged\"") != std::string::npos,
          "manifest records convergence");
    check(manifest.find("\"s_n\"") != std::string::npos,
          "manifest records resolved s_n");
  }

  {
    // iteration-cap stop still exits 0 but the manifest says converged:false
    const int rc = run("detect --input " + g_dir +
                       "/a.hg --k 2 --r 3 --max-iter 1 --tol 1e-12 --out " +
                       g_dir + "/capstop");
    check(rc == 0, "iteration-cap stop exits 0");
    const std::string manifest = slurp(g_dir + "/capstop.manifest.json");
    check(manifest.find("\"converged\": false") != std::string::npos,
          "manifest records converged:false on cap stop");
  }

  check(run("detect --input " + g_dir + "/a.hg --k 0 --r 3 --out " + g_dir +
            "/bad") == 2,
        "--k 0 is a usage error");
  check(run("detect --input " + g_dir + "/missing.hg --k 2 --r 3 --out " +
            g_dir + "/bad") == 3,
        "missing input is a data error");
  {
    std::ofstream bad(g_dir + "/broken.hg");
    bad << "1 2\n3 oops\n";
  }
  check(run("detect --input " + g_dir + "/broken.hg --k 2 --r 3 --out " +
            g_dir + "/bad") == 3,
        "parse failure is a data error");

  // ---- eval -----------------------------------------------------------
  {
    std::string out;
    const int rc = run("eval --truth " + g_dir + "/a.labels --pred " + g_dir +
                           "/a.labels --k 2",
                       &out);
    check(rc == 0, "eval exits 0");
    check(out.find("hamming_error 0") != std::string::npos,
          "identical labels score 0");
  }
  {
    std::string out;
    const int rc = run("eval --truth " + g_dir + "/a.labels --pred " + g_dir +
                           "/fit1.labels --k 2 --json",
                       &out);
    check(rc == 0, "eval --json exits 0");
    check(out.find("\"hamming_error\"") != std::string::npos, "json output");
  }
  {
    // Hellinger between the planted embedding and itself
    std::string out;
    const int rc = run("eval --truth " + g_dir + "/a.labels --pred " + g_dir +
                           "/a.labels --k 2 --alpha-true " + g_dir +
                           "/a.alpha.csv --alpha-pred " + g_dir +
                           "/a.alpha.csv --sn 0.4 --m 3",
                       &out);
    check(rc == 0, "eval with embeddings exits 0");
    check(out.find("hellinger 0") != std::string::npos, "self Hellinger is 0");
  }
  {
    std::ofstream shorter(g_dir + "/short.labels");
    for (int i = 0; i < 39; ++i) shorter << 1 << "\n";
  }
  check(run("eval --truth " + g_dir + "/a.labels --pred " + g_dir +
            "/short.labels --k 2") == 3,
        "length mismatch is a data error");

  // ---- bench ----------------------------------------------------------
  {
    std::string out;
    const int rc = run(
        "bench --scenario 2 --n-list 20 --sn-list 0.5 --reps 2 "
        "--methods wptg,shp --k 2 --m 2 --r 3 --seed 3 --out " +
            g_dir + "/bench",
        &out);
    check(rc == 0, "bench exits 0");
    check(exists(g_dir + "/bench.csv"), "bench writes csv");
    check(exists(g_dir + "/bench.json"), "bench writes json");
    check(exists(g_dir + "/bench.manifest.json"), "bench writes manifest");
    const std::string csv = slurp(g_dir + "/bench.csv");
    check(csv.rfind("scenario,n,s_n,method,mean,sd,reps,seconds", 0) == 0,
          "bench csv header");
    int lines = 0;
    for (char ch : csv)
      if (ch == '\n') ++lines;
    check(lines == 3, "bench csv has one row per cell x method");
  }
  check(run("bench --scenario 1 --n-list 20 --sn-list 0.5 --reps 1 "
            "--methods tensor-score --out " + g_dir + "/bad") == 2,
        "unsupported method is a usage error");

  // ---- misc -----------------------------------------------------------
  check(run("--version") == 0, "--version exits 0");
  check(run("bogus") == 2, "unknown subcommand is a usage error");

  if (g_failures == 0) {
    std::cout << "test_cli: all checks passed\n";
    return 0;
  }
  std::cout << "test_cli: " << g_failures << " check(s) failed\n";
  return 1;
}
