#include "hypercomm/hypergraph.hpp"

#include <algorithm>
#include <fstream>
#include <ostream>
#include <sstream>

namespace hypercomm {

bool edge_less(std::span<const VertexId> a, std::span<const VertexId> b) {
  if (a.size() != b.size()) return a.size() < b.size();
  return std::lexicographical_compare(a.begin(), a.end(), b.begin(), b.end());
}

bool reduces_to_vertex_set(std::span<const VertexId> tuple, std::uint32_t n) {
  const VertexId null_id = n + 1;
  std::vector<VertexId> reals;
  reals.reserve(tuple.size());
  for (VertexId v : tuple) {
    if (v == null_id) continue;
    if (v < 1 || v > n) return false;
    reals.push_back(v);
  }
  if (reals.empty()) return false;
  std::sort(reals.begin(), reals.end());
  return std::adjacent_find(reals.begin(), reals.end()) == reals.end();
}

bool reduces_to_vertex_set_ordered(std::span<const VertexId> tuple, std::uint32_t n) {
  return std::is_sorted(tuple.begin(), tuple.end()) &&
         reduces_to_vertex_set(tuple, n);
}

CanonicalTuple augment(std::span<const VertexId> edge, std::uint32_t m, std::uint32_t n) {
  require(!edge.empty(), Status::invalid_argument, "augment: empty edge");
  require(edge.size() <= m, Status::invalid_argument,
          "augment: edge larger than range m");
  CanonicalTuple t;
  t.indices.assign(edge.begin(), edge.end());
  std::sort(t.indices.begin(), t.indices.end());
  require(std::adjacent_find(t.indices.begin(), t.indices.end()) == t.indices.end(),
          Status::invalid_argument, "augment: repeated vertex in edge");
  require(t.indices.front() >= 1 && t.indices.back() <= n,
          Status::invalid_argument, "augment: vertex id out of [1, n]");
  t.real_count = static_cast<std::uint32_t>(t.indices.size());
  t.indices.resize(m, n + 1);
  return t;
}

Edge strip_padding(const CanonicalTuple& tuple, std::uint32_t n) {
  Edge e;
  for (VertexId v : tuple.indices)
    if (v != n + 1) e.push_back(v);
  return e;
}

Hypergraph::Hypergraph(std::uint32_t n, std::uint32_t m, std::vector<Edge> edges)
    : n_(n), m_(m), edges_(std::move(edges)) {
  require(n_ >= 2, Status::invalid_argument, "hypergraph: need at least 2 vertices");
  require(m_ >= 2 && m_ <= n_, Status::invalid_argument,
          "hypergraph: range m must be in [2, n]");
  for (const Edge& e : edges_) {
    require(!e.empty() && e.size() <= m_, Status::invalid_argument,
            "hypergraph: edge size out of [1, m]");
    require(e.front() >= 1 && e.back() <= n_, Status::invalid_argument,
            "hypergraph: vertex id out of [1, n]");
    for (std::size_t i = 1; i < e.size(); ++i)
      require(e[i - 1] < e[i], Status::invalid_argument,
              "hypergraph: edge not strictly increasing");
  }
  std::sort(edges_.begin(), edges_.end(),
            [](const Edge& a, const Edge& b) { return edge_less(a, b); });
  edges_.erase(std::unique(edges_.begin(), edges_.end()), edges_.end());
}

std::uint64_t Hypergraph::degree(VertexId v) const {
  require(v >= 1 && v <= n_, Status::invalid_argument, "degree: vertex out of range");
  std::uint64_t count = 0;
  for (const Edge& e : edges_)
    if (std::binary_search(e.begin(), e.end(), v)) ++count;
  return count;
}

std::vector<std::uint64_t> Hypergraph::degrees() const {
  std::vector<std::uint64_t> deg(n_, 0);
  for (const Edge& e : edges_)
    for (VertexId v : e) ++deg[v - 1];
  return deg;
}

bool Hypergraph::contains(std::span<const VertexId> edge) const {
  auto it = std::lower_bound(
      edges_.begin(), edges_.end(), edge,
      [](const Edge& a, std::span<const VertexId> b) { return edge_less(a, b); });
  return it != edges_.end() && it->size() == edge.size() &&
         std::equal(edge.begin(), edge.end(), it->begin());
}

namespace {

struct ParsedInput {
  std::vector<Edge> edges;
  VertexId max_id = 0;
  std::optional<std::uint32_t> header_n;
  std::optional<std::uint32_t> header_m;
};

ParsedInput parse_edge_lines(std::istream& in) {
  ParsedInput parsed;
  std::string line;
  std::uint64_t line_no = 0;
  bool seen_content = false;
  while (std::getline(in, line)) {
    ++line_no;
    const auto first = line.find_first_not_of(" \t\r");
    if (first == std::string::npos) continue;
    if (line[first] == '#') {
      if (!seen_content) {
        // optional "#n <n> m <m>" header on the first non-blank line
        std::istringstream hs(line.substr(first + 1));
        std::string tag_n, tag_m;
        long long hn = 0, hm = 0;
        if (hs >> tag_n >> hn >> tag_m >> hm && tag_n == "n" && tag_m == "m" &&
            hn >= 1 && hm >= 1) {
          parsed.header_n = static_cast<std::uint32_t>(hn);
          parsed.header_m = static_cast<std::uint32_t>(hm);
        }
        seen_content = true;
      }
      continue;
    }
    seen_content = true;
    std::istringstream ls(line);
    std::string token;
    Edge edge;
    while (ls >> token) {
      std::size_t pos = 0;
      long long id = 0;
      try {
        id = std::stoll(token, &pos);
      } catch (const std::exception&) {
        fail(Status::parse_error, "line " + std::to_string(line_no) +
                                      ": non-integer token '" + token + "'");
      }
      if (pos != token.size())
        fail(Status::parse_error, "line " + std::to_string(line_no) +
                                      ": non-integer token '" + token + "'");
      require(id >= 1, Status::invalid_argument,
              "line " + std::to_string(line_no) + ": vertex id " +
                  std::to_string(id) + " is not positive");
      require(id <= UINT32_MAX, Status::invalid_argument,
              "line " + std::to_string(line_no) + ": vertex id too large");
      edge.push_back(static_cast<VertexId>(id));
    }
    if (edge.empty()) continue;
    std::sort(edge.begin(), edge.end());
    edge.erase(std::unique(edge.begin(), edge.end()), edge.end());
    parsed.max_id = std::max(parsed.max_id, edge.back());
    parsed.edges.push_back(std::move(edge));
  }
  return parsed;
}

}  // namespace

Hypergraph load_hypergraph(std::istream& in, const LoadOptions& options,
                           LoadStats* stats) {
  ParsedInput parsed = parse_edge_lines(in);
  LoadStats local;
  local.raw_edges = parsed.edges.size();

  const std::uint32_t min_size = std::max<std::uint32_t>(options.min_size, 1);
  std::vector<Edge> kept;
  kept.reserve(parsed.edges.size());
  for (Edge& e : parsed.edges) {
    const auto sz = static_cast<std::uint32_t>(e.size());
    if (sz < min_size || (options.max_size && sz > *options.max_size)) {
      ++local.filtered_out;
      continue;
    }
    kept.push_back(std::move(e));
  }

  if (options.clique_cap) {
    const std::uint32_t cap = *options.clique_cap;
    require(cap >= 2, Status::invalid_argument, "clique-expansion cap must be >= 2");
    std::vector<Edge> expanded;
    expanded.reserve(kept.size());
    for (const Edge& e : kept) {
      if (e.size() <= cap) {
        expanded.push_back(e);
        continue;
      }
      std::vector<std::uint32_t> pick;
      first_combination(cap, pick);
      do {
        Edge sub(cap);
        for (std::uint32_t i = 0; i < cap; ++i) sub[i] = e[pick[i] - 1];
        expanded.push_back(std::move(sub));
      } while (next_combination(static_cast<std::uint32_t>(e.size()), pick));
    }
    kept = std::move(expanded);
  }

  std::sort(kept.begin(), kept.end(),
            [](const Edge& a, const Edge& b) { return edge_less(a, b); });
  const auto before = kept.size();
  kept.erase(std::unique(kept.begin(), kept.end()), kept.end());
  local.duplicates_collapsed = before - kept.size();

  require(!kept.empty(), Status::empty_network,
          "no hyperedges left after filtering");

  std::uint32_t max_id = 0, max_size = 0;
  for (const Edge& e : kept) {
    max_id = std::max(max_id, e.back());
    max_size = std::max<std::uint32_t>(max_size, static_cast<std::uint32_t>(e.size()));
  }

  std::uint32_t n = options.n_override ? *options.n_override
                    : parsed.header_n ? *parsed.header_n
                                      : max_id;
  require(n >= max_id, Status::invalid_argument,
          "declared n is smaller than the largest vertex id");
  std::uint32_t m = options.m_override ? *options.m_override
                    : options.clique_cap ? *options.clique_cap
                    : parsed.header_m   ? *parsed.header_m
                                        : max_size;
  m = std::max<std::uint32_t>(m, 2);
  require(m >= max_size, Status::invalid_argument,
          "declared m is smaller than the largest edge size");

  if (stats) *stats = local;
  return Hypergraph(n, m, std::move(kept));
}

Hypergraph load_hypergraph_file(const std::string& path, const LoadOptions& options,
                                LoadStats* stats) {
  std::ifstream in(path);
  require(in.good(), Status::io_error, "cannot open '" + path + "'");
  return load_hypergraph(in, options, stats);
}

void save_hypergraph(const Hypergraph& h, std::ostream& out) {
  out << "#n " << h.n() << " m " << h.m() << "\n";
  for (const Edge& e : h.edges()) {
    for (std::size_t i = 0; i < e.size(); ++i) {
      if (i) out << ' ';
      out << e[i];
    }
    out << '\n';
  }
}

void save_hypergraph_file(const Hypergraph& h, const std::string& path) {
  std::ofstream out(path);
  require(out.good(), Status::io_error, "cannot open '" + path + "' for writing");
  save_hypergraph(h, out);
  out.flush();
  require(out.good(), Status::io_error, "write to '" + path + "' failed");
}

Hypergraph clique_expand(const Hypergraph& h, std::uint32_t m_cap) {
  require(m_cap >= 2, Status::invalid_argument, "clique_expand: cap must be >= 2");
  require(m_cap <= h.n(), Status::invalid_argument, "clique_expand: cap exceeds n");
  std::vector<Edge> out;
  out.reserve(h.edge_count());
  for (const Edge& e : h.edges()) {
    if (e.size() <= m_cap) {
      out.push_back(e);
      continue;
    }
    std::vector<std::uint32_t> pick;
    first_combination(m_cap, pick);
    do {
      Edge sub(m_cap);
      for (std::uint32_t i = 0; i < m_cap; ++i) sub[i] = e[pick[i] - 1];
      out.push_back(std::move(sub));
    } while (next_combination(static_cast<std::uint32_t>(e.size()), pick));
  }
  return Hypergraph(h.n(), m_cap, std::move(out));
}

double estimate_sparsity(const Hypergraph& h) {
  require(h.edge_count() > 0, Status::invalid_argument,
          "estimate_sparsity: empty hypergraph");
  std::uint32_t k_min = h.m();
  for (const Edge& e : h.edges())
    k_min = std::min<std::uint32_t>(k_min, static_cast<std::uint32_t>(e.size()));
  std::uint64_t denom = 0;
  for (std::uint32_t k = k_min; k <= h.m(); ++k) {
    const std::uint64_t c = binom_checked(h.n(), k);
    require(denom <= UINT64_MAX - c, Status::overflow, "estimate_sparsity: overflow");
    denom += c;
  }
  require(h.edge_count() <= denom, Status::internal,
          "estimate_sparsity: edge count exceeds candidate count");
  return static_cast<double>(h.edge_count()) / static_cast<double>(denom);
}

}  // namespace hypercomm
