#include "oddfactor/graph.hpp"

#include <algorithm>
#include <bit>
#include <stdexcept>

namespace oddfactor {

Graph::Graph(int order) {
  if (order < 0) throw std::invalid_argument("graph order must be nonnegative");
  n_ = order;
  words_ = (order + 63) / 64;
  bits_.assign(static_cast<size_t>(n_) * words_, 0);
}

void Graph::check_vertex(int v) const {
  if (v < 0 || v >= n_) throw std::invalid_argument("vertex index out of range");
}

bool Graph::adjacent(int u, int v) const {
  check_vertex(u);
  check_vertex(v);
  if (u == v) return false;
  return (bits_[static_cast<size_t>(u) * words_ + v / 64] >> (v % 64)) & 1u;
}

void Graph::add_edge(int u, int v) {
  check_vertex(u);
  check_vertex(v);
  if (u == v) throw std::invalid_argument("self-loops are not allowed");
  if (adjacent(u, v)) return;
  bits_[static_cast<size_t>(u) * words_ + v / 64] |= (std::uint64_t{1} << (v % 64));
  bits_[static_cast<size_t>(v) * words_ + u / 64] |= (std::uint64_t{1} << (u % 64));
  ++edges_;
}

void Graph::remove_edge(int u, int v) {
  check_vertex(u);
  check_vertex(v);
  if (u == v || !adjacent(u, v)) return;
  bits_[static_cast<size_t>(u) * words_ + v / 64] &= ~(std::uint64_t{1} << (v % 64));
  bits_[static_cast<size_t>(v) * words_ + u / 64] &= ~(std::uint64_t{1} << (u % 64));
  --edges_;
}

int Graph::degree(int v) const {
  check_vertex(v);
  int d = 0;
  for (int w = 0; w < words_; ++w)
    d += std::popcount(bits_[static_cast<size_t>(v) * words_ + w]);
  return d;
}

std::vector<int> Graph::degrees() const {
  std::vector<int> out(n_);
  for (int v = 0; v < n_; ++v) out[v] = degree(v);
  return out;
}

int Graph::min_degree() const {
  if (n_ == 0) throw std::invalid_argument("minimum degree of the empty graph");
  int best = n_;
  for (int v = 0; v < n_; ++v) best = std::min(best, degree(v));
  return best;
}

std::vector<int> Graph::neighbors(int v) const {
  check_vertex(v);
  std::vector<int> out;
  for (int u = 0; u < n_; ++u)
    if (u != v && adjacent(v, u)) out.push_back(u);
  return out;
}

std::uint64_t Graph::neighbor_mask(int v) const {
  check_vertex(v);
  if (n_ > 64) throw std::invalid_argument("neighbor_mask requires order <= 64");
  return bits_[static_cast<size_t>(v) * words_];
}

Graph build_graph(int n, const std::vector<std::pair<int, int>>& edges) {
  Graph g(n);
  for (const auto& [u, v] : edges) g.add_edge(u, v);
  return g;
}

Graph complete_graph(int n) {
  Graph g(n);
  for (int u = 0; u < n; ++u)
    for (int v = u + 1; v < n; ++v) g.add_edge(u, v);
  return g;
}

Graph union_graphs(const Graph& a, const Graph& b) {
  Graph g(a.order() + b.order());
  for (int u = 0; u < a.order(); ++u)
    for (int v = u + 1; v < a.order(); ++v)
      if (a.adjacent(u, v)) g.add_edge(u, v);
  const int off = a.order();
  for (int u = 0; u < b.order(); ++u)
    for (int v = u + 1; v < b.order(); ++v)
      if (b.adjacent(u, v)) g.add_edge(off + u, off + v);
  return g;
}

Graph join_graphs(const Graph& a, const Graph& b) {
  Graph g = union_graphs(a, b);
  for (int u = 0; u < a.order(); ++u)
    for (int v = 0; v < b.order(); ++v) g.add_edge(u, a.order() + v);
  return g;
}

ComponentReport component_report(const Graph& g) {
  const int n = g.order();
  ComponentReport report;
  std::vector<char> seen(n, 0);
  std::vector<int> stack;
  for (int start = 0; start < n; ++start) {
    if (seen[start]) continue;
    VertexSet comp;
    stack.push_back(start);
    seen[start] = 1;
    while (!stack.empty()) {
      int v = stack.back();
      stack.pop_back();
      comp.push_back(v);
      for (int u = 0; u < n; ++u) {
        if (!seen[u] && g.adjacent(v, u)) {
          seen[u] = 1;
          stack.push_back(u);
        }
      }
    }
    std::sort(comp.begin(), comp.end());
    report.components.push_back(std::move(comp));
  }
  report.component_count = static_cast<int>(report.components.size());
  for (const auto& comp : report.components)
    if (comp.size() % 2 == 1) ++report.odd_count;
  return report;
}

void validate_vertex_set(const Graph& g, const VertexSet& s) {
  for (size_t i = 0; i < s.size(); ++i) {
    if (s[i] < 0 || s[i] >= g.order())
      throw std::invalid_argument("vertex set index out of range");
    if (i > 0 && s[i] <= s[i - 1])
      throw std::invalid_argument("vertex set must be sorted and duplicate-free");
  }
}

DeletionResult delete_vertices(const Graph& g, const VertexSet& s) {
  validate_vertex_set(g, s);
  const int n = g.order();
  std::vector<char> removed(n, 0);
  for (int v : s) removed[v] = 1;
  DeletionResult result;
  for (int v = 0; v < n; ++v)
    if (!removed[v]) result.kept.push_back(v);
  Graph h(static_cast<int>(result.kept.size()));
  for (size_t i = 0; i < result.kept.size(); ++i)
    for (size_t j = i + 1; j < result.kept.size(); ++j)
      if (g.adjacent(result.kept[i], result.kept[j]))
        h.add_edge(static_cast<int>(i), static_cast<int>(j));
  result.graph = std::move(h);
  return result;
}

namespace {

bool connected_after_removal(const Graph& g, const std::vector<char>& removed,
                             int remaining) {
  const int n = g.order();
  if (remaining <= 1) return true;
  int start = 0;
  while (removed[start]) ++start;
  std::vector<char> seen(n, 0);
  std::vector<int> stack{start};
  seen[start] = 1;
  int visited = 1;
  while (!stack.empty()) {
    int v = stack.back();
    stack.pop_back();
    for (int u = 0; u < n; ++u) {
      if (!seen[u] && !removed[u] && g.adjacent(v, u)) {
        seen[u] = 1;
        ++visited;
        stack.push_back(u);
      }
    }
  }
  return visited == remaining;
}

// Enumerates all removal sets of exactly `size` vertices; returns false as
// soon as one disconnects the rest.
bool survives_all_cuts(const Graph& g, int size) {
  const int n = g.order();
  std::vector<int> pick(size);
  std::vector<char> removed(n, 0);
  // standard combination walk
  for (int i = 0; i < size; ++i) pick[i] = i;
  while (true) {
    std::fill(removed.begin(), removed.end(), 0);
    for (int v : pick) removed[v] = 1;
    if (!connected_after_removal(g, removed, n - size)) return false;
    int i = size - 1;
    while (i >= 0 && pick[i] == n - size + i) --i;
    if (i < 0) break;
    ++pick[i];
    for (int j = i + 1; j < size; ++j) pick[j] = pick[j - 1] + 1;
  }
  return true;
}

}  // namespace

bool is_k_connected(const Graph& g, int k) {
  if (k < 0) throw std::invalid_argument("connectivity parameter must be >= 0");
  if (g.order() <= k) return false;
  for (int size = 0; size < k; ++size)
    if (!survives_all_cuts(g, size)) return false;
  return true;
}

Graph relabeled(const Graph& g, const std::vector<int>& new_of) {
  const int n = g.order();
  if (static_cast<int>(new_of.size()) != n)
    throw std::invalid_argument("permutation size mismatch");
  std::vector<char> hit(n, 0);
  for (int v : new_of) {
    if (v < 0 || v >= n || hit[v])
      throw std::invalid_argument("not a permutation");
    hit[v] = 1;
  }
  Graph h(n);
  for (int u = 0; u < n; ++u)
    for (int v = u + 1; v < n; ++v)
      if (g.adjacent(u, v)) h.add_edge(new_of[u], new_of[v]);
  return h;
}

}  // namespace oddfactor
