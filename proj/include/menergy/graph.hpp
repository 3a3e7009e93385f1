#pragma once

#include <bit>
#include <cstdint>
#include <span>
#include <stdexcept>
#include <string>
#include <string_view>
#include <utility>
#include <vector>

namespace menergy {

/// Largest order a Graph can hold; adjacency rows are 64-bit words.
inline constexpr int kMaxOrder = 64;
/// Largest order accepted by the public certificate and cut-enumeration paths.
inline constexpr int kEnumerationBound = 16;

using VertexMask = std::uint64_t;
using Edge = std::pair<int, int>;

inline constexpr VertexMask full_mask(int n) {
  return n >= 64 ? ~VertexMask{0} : (VertexMask{1} << n) - 1;
}
inline constexpr VertexMask bit(int v) { return VertexMask{1} << v; }
inline int popcount(VertexMask m) { return std::popcount(m); }

/// Simple undirected graph on vertices 0..n-1, stored as one adjacency
/// bitset per vertex. Values are immutable; every edit returns a new Graph.
class Graph {
 public:
  Graph() = default;

  /// Builds from an edge list. Duplicate pairs collapse; loops and
  /// out-of-range endpoints throw std::invalid_argument.
  Graph(int n, std::span<const Edge> edges);

  /// Builds from adjacency rows. Rows must be symmetric and loop-free.
  static Graph from_rows(int n, std::vector<VertexMask> rows);

  int order() const { return n_; }
  int size() const { return edge_count_; }

  bool adjacent(int u, int v) const { return (rows_[u] >> v) & 1U; }
  VertexMask neighbors(int u) const { return rows_[u]; }
  int degree(int u) const { return popcount(rows_[u]); }
  int min_degree() const;
  int max_degree() const;
  std::span<const VertexMask> rows() const { return rows_; }

  /// Edges (u, v) with u < v in lexicographic order.
  std::vector<Edge> edges() const;

  bool is_connected() const;
  /// Vertex masks of the connected components, ordered by lowest vertex.
  std::vector<VertexMask> components() const;
  /// Vertices reachable from `start` without leaving `within`.
  VertexMask reach(int start, VertexMask within) const;

  friend bool operator==(const Graph&, const Graph&) = default;

 private:
  int n_ = 0;
  int edge_count_ = 0;
  std::vector<VertexMask> rows_;
};

Graph build_graph(int n, std::span<const Edge> edges);
Graph build_graph(int n, std::initializer_list<Edge> edges);
Graph complete_graph(int n);
Graph empty_graph(int n);
Graph path_graph(int n);
Graph cycle_graph(int n);
Graph star_graph(int leaves);

/// K^k_{n-1,1}: vertex 0 joined to vertices 1..k of a clique on 1..n-1.
Graph apex_family(int n, int k);

struct FamilyParams {
  int n = 0;
  int k = 0;
  int m = 0;
};

/// K^k_{n-m,m}: a clique on 0..n-m-1 and a clique on n-m..n-1 joined by the
/// k disjoint edges (i, n-m+i), i < k.
Graph split_family(const FamilyParams& p);

Graph add_edge(const Graph& g, int u, int v);
Graph delete_edge(const Graph& g, int u, int v);
/// Survivors keep their relative order and are renumbered densely.
Graph delete_vertex(const Graph& g, int u);
Graph delete_vertex_pair(const Graph& g, int u, int v);
Graph disjoint_union(const Graph& g, const Graph& h);
Graph induced_subgraph(const Graph& g, VertexMask keep);
/// Vertex i of the result is vertex order[i] of g.
Graph relabeled(const Graph& g, std::span<const int> order);

// ---------------------------------------------------------------- cuts

/// The edge cut [S, V \ S] for a vertex subset S.
struct CutWitness {
  VertexMask side = 0;
  int size = 0;
  bool trivial = false;

  int side_order() const { return popcount(side); }
  friend bool operator==(const CutWitness&, const CutWitness&) = default;
};

struct Connectivity {
  int k = 0;
  CutWitness witness;
};

int cut_size(const Graph& g, VertexMask side);
/// Witness for S normalized to the side with at most floor(n/2) vertices.
CutWitness make_cut(const Graph& g, VertexMask side);

/// Edge connectivity by unit-capacity max-flow from vertex 0 to every other
/// vertex. A disconnected graph yields k = 0 and an empty-cut witness.
Connectivity edge_connectivity(const Graph& g);

/// Every side S with 1 <= |S| <= floor(n/2) whose cut has size kappa'(G),
/// found by subset enumeration. Complementary sides are reported once.
std::vector<CutWitness> all_min_cut_sides(const Graph& g,
                                          int bound = kEnumerationBound);

/// True iff some vertex has degree equal to the edge connectivity.
bool has_trivial_min_cut(const Graph& g);

/// G - u1 v2 + u2 v2. Throws std::invalid_argument naming the first
/// local precondition that fails.
Graph operation_I(const Graph& g, int v2, int u1, int u2);

// ---------------------------------------------------------- certificates

/// Canonical relabeling. `order[i]` is the vertex placed at position i of
/// the canonical form.
struct CanonicalForm {
  std::vector<int> order;
  Graph graph;
};

/// Canonical form under an optional vertex coloring: only permutations that
/// preserve color values are considered. No order bound beyond kMaxOrder.
CanonicalForm canonical_form(const Graph& g, std::span<const int> colors = {});

/// Isomorphism certificate: the graph6 line of the canonical form.
/// Throws std::length_error above kEnumerationBound.
std::string canonical_certificate(const Graph& g);

/// Certificate without the public order bound. Used for memo keys.
std::string certificate_key(const Graph& g);

// ---------------------------------------------------------------- graph6

class Graph6Error : public std::runtime_error {
 public:
  using std::runtime_error::runtime_error;
};

Graph graph6_decode(std::string_view line);
std::string graph6_encode(const Graph& g);

}  // namespace menergy
