#pragma once

#include <cstdint>
#include <iosfwd>
#include <optional>
#include <span>
#include <string>
#include <vector>

#include "hypercomm/combinatorics.hpp"
#include "hypercomm/error.hpp"

namespace hypercomm {

using VertexId = std::uint32_t;       // 1-based in every interface
using Edge = std::vector<VertexId>;   // strictly increasing vertex ids

// size-then-lex order; matches the index-set enumeration order exactly
bool edge_less(std::span<const VertexId> a, std::span<const VertexId> b);

// delta^{n+1} == 0: the multiset minus null copies is a non-empty set
bool reduces_to_vertex_set(std::span<const VertexId> tuple, std::uint32_t n);
// delta^{n+1,ord} == 0: additionally the tuple is sorted non-decreasing
bool reduces_to_vertex_set_ordered(std::span<const VertexId> tuple, std::uint32_t n);

// A hyperedge padded with null-vertex copies (id n+1) up to length m.
struct CanonicalTuple {
  std::vector<VertexId> indices;  // real vertices strictly increasing, nulls trailing
  std::uint32_t real_count = 0;
};

// Pads a sorted edge with (m - |edge|) copies of the null vertex n+1.
CanonicalTuple augment(std::span<const VertexId> edge, std::uint32_t m, std::uint32_t n);

// Drops the null padding; inverse of augment.
Edge strip_padding(const CanonicalTuple& tuple, std::uint32_t n);

class Hypergraph {
 public:
  // edges must each be strictly increasing with ids in [1..n] and size in
  // [1..m]; the list is sorted canonically and list-level duplicates collapse.
  Hypergraph(std::uint32_t n, std::uint32_t m, std::vector<Edge> edges);

  std::uint32_t n() const { return n_; }
  std::uint32_t m() const { return m_; }
  const std::vector<Edge>& edges() const { return edges_; }
  std::uint64_t edge_count() const { return edges_.size(); }

  std::uint64_t degree(VertexId v) const;
  std::vector<std::uint64_t> degrees() const;
  bool contains(std::span<const VertexId> edge) const;

 private:
  std::uint32_t n_;
  std::uint32_t m_;
  std::vector<Edge> edges_;  // sorted by (size, lex), unique
};

struct LoadOptions {
  std::optional<std::uint32_t> n_override;
  std::optional<std::uint32_t> m_override;
  std::uint32_t min_size = 1;
  std::optional<std::uint32_t> max_size;
  std::optional<std::uint32_t> clique_cap;  // expand larger edges at ingest
};

struct LoadStats {
  std::uint64_t raw_edges = 0;
  std::uint64_t duplicates_collapsed = 0;
  std::uint64_t filtered_out = 0;
};

// One hyperedge per line, whitespace-separated positive vertex ids; '#' lines
// are comments; an optional leading "#n <n> m <m>" header pins dimensions.
Hypergraph load_hypergraph(std::istream& in, const LoadOptions& options = {},
                           LoadStats* stats = nullptr);
Hypergraph load_hypergraph_file(const std::string& path,
                                const LoadOptions& options = {},
                                LoadStats* stats = nullptr);

void save_hypergraph(const Hypergraph& h, std::ostream& out);
void save_hypergraph_file(const Hypergraph& h, const std::string& path);

// Replaces every edge larger than m_cap by all of its size-m_cap subsets.
Hypergraph clique_expand(const Hypergraph& h, std::uint32_t m_cap);

// Hyperedge density: |E| / sum_{k=k_min}^{m} C(n,k) with k_min the smallest
// observed edge size, the estimator used for real networks.
double estimate_sparsity(const Hypergraph& h);

// Streams all candidate index sets together with their adjacency indicator.
// Relies on edges being sorted in enumeration order, so the walk is O(1)
// amortized per set.
template <class F>
void for_each_index_set_with_adjacency(const Hypergraph& h, F&& f) {
  const auto& edges = h.edges();
  std::size_t next = 0;
  for_each_index_set(h.n(), h.m(), [&](std::span<const VertexId> s) {
    bool is_edge = false;
    if (next < edges.size() && edges[next].size() == s.size() &&
        std::equal(s.begin(), s.end(), edges[next].begin())) {
      is_edge = true;
      ++next;
    }
    f(s, is_edge);
  });
}

}  // namespace hypercomm
