#pragma once

#include <cstdint>
#include <string>
#include <utility>
#include <vector>

namespace oddfactor {

// Sorted, duplicate-free list of vertex indices.
using VertexSet = std::vector<int>;

/// Undirected simple graph on vertices 0..n-1 with a dense bit-matrix
/// adjacency.  Values are cheap to copy and safe to share for concurrent
/// reads; all free functions below are pure.
class Graph {
 public:
  Graph() = default;
  explicit Graph(int order);

  int order() const { return n_; }
  long long edge_count() const { return edges_; }

  bool adjacent(int u, int v) const;
  void add_edge(int u, int v);     // duplicate edges are ignored; loops rejected
  void remove_edge(int u, int v);

  int degree(int v) const;
  std::vector<int> degrees() const;
  int min_degree() const;          // requires order >= 1
  std::vector<int> neighbors(int v) const;

  // Adjacency row of v as a bit mask.  Only valid for order <= 64.
  std::uint64_t neighbor_mask(int v) const;

  bool operator==(const Graph&) const = default;

 private:
  void check_vertex(int v) const;

  int n_ = 0;
  int words_ = 0;
  long long edges_ = 0;
  std::vector<std::uint64_t> bits_;  // row-major, words_ per row
};

Graph build_graph(int n, const std::vector<std::pair<int, int>>& edges);
Graph complete_graph(int n);

// Disjoint union; vertices of b are shifted past those of a.
Graph union_graphs(const Graph& a, const Graph& b);
// Disjoint union plus all edges between the two vertex sets.
Graph join_graphs(const Graph& a, const Graph& b);

struct ComponentReport {
  std::vector<VertexSet> components;  // ordered by smallest contained vertex
  int component_count = 0;            // omega(G)
  int odd_count = 0;                  // o(G), components of odd cardinality
};
ComponentReport component_report(const Graph& g);

// Throws std::invalid_argument unless s is sorted, duplicate-free and within
// range for g.
void validate_vertex_set(const Graph& g, const VertexSet& s);

struct DeletionResult {
  Graph graph;
  std::vector<int> kept;  // kept[new index] = old index
};
DeletionResult delete_vertices(const Graph& g, const VertexSet& s);

/// True iff order > k and removing any vertex set of size < k leaves a
/// connected graph.  Decided exactly by enumerating all small cuts, which is
/// fine for the orders this project works at.
bool is_k_connected(const Graph& g, int k);

// Image of g under the permutation new_of[old].
Graph relabeled(const Graph& g, const std::vector<int>& new_of);

}  // namespace oddfactor
