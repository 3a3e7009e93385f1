#include "menergy/graph.hpp"

#include <algorithm>
#include <string>

namespace menergy {

namespace {

void check_order(int n) {
  if (n < 0 || n > kMaxOrder) {
    throw std::invalid_argument("graph order " + std::to_string(n) +
                                " outside 0.." + std::to_string(kMaxOrder));
  }
}

void check_vertex(const Graph& g, int v) {
  if (v < 0 || v >= g.order()) {
    throw std::invalid_argument("vertex " + std::to_string(v) +
                                " not in graph of order " +
                                std::to_string(g.order()));
  }
}

}  // namespace

Graph::Graph(int n, std::span<const Edge> edges) : n_(n) {
  check_order(n);
  rows_.assign(static_cast<std::size_t>(n), 0);
  for (auto [u, v] : edges) {
    if (u < 0 || v < 0 || u >= n || v >= n) {
      throw std::invalid_argument("edge (" + std::to_string(u) + "," +
                                  std::to_string(v) + ") out of range for n=" +
                                  std::to_string(n));
    }
    if (u == v) {
      throw std::invalid_argument("loop edge at vertex " + std::to_string(u));
    }
    rows_[u] |= bit(v);
    rows_[v] |= bit(u);
  }
  for (auto r : rows_) edge_count_ += popcount(r);
  edge_count_ /= 2;
}

Graph Graph::from_rows(int n, std::vector<VertexMask> rows) {
  check_order(n);
  if (rows.size() != static_cast<std::size_t>(n)) {
    throw std::invalid_argument("row count does not match order");
  }
  Graph g;
  g.n_ = n;
  const VertexMask all = full_mask(n);
  for (int u = 0; u < n; ++u) {
    if ((rows[u] & ~all) != 0 || ((rows[u] >> u) & 1U)) {
      throw std::invalid_argument("adjacency row " + std::to_string(u) +
                                  " has a loop or out-of-range bit");
    }
    for (VertexMask r = rows[u]; r != 0; r &= r - 1) {
      int v = std::countr_zero(r);
      if (!((rows[v] >> u) & 1U)) {
        throw std::invalid_argument("adjacency rows are not symmetric");
      }
    }
    g.edge_count_ += popcount(rows[u]);
  }
  g.edge_count_ /= 2;
  g.rows_ = std::move(rows);
  return g;
}

int Graph::min_degree() const {
  int d = n_ > 0 ? n_ : 0;
  for (auto r : rows_) d = std::min(d, popcount(r));
  return d;
}

int Graph::max_degree() const {
  int d = 0;
  for (auto r : rows_) d = std::max(d, popcount(r));
  return d;
}

std::vector<Edge> Graph::edges() const {
  std::vector<Edge> out;
  out.reserve(static_cast<std::size_t>(edge_count_));
  for (int u = 0; u < n_; ++u) {
    for (VertexMask r = rows_[u] & ~full_mask(u + 1); r != 0; r &= r - 1) {
      out.emplace_back(u, std::countr_zero(r));
    }
  }
  return out;
}

VertexMask Graph::reach(int start, VertexMask within) const {
  VertexMask seen = bit(start);
  VertexMask frontier = seen;
  while (frontier != 0) {
    VertexMask next = 0;
    for (VertexMask f = frontier; f != 0; f &= f - 1) {
      next |= rows_[std::countr_zero(f)];
    }
    next &= within & ~seen;
    seen |= next;
    frontier = next;
  }
  return seen;
}

bool Graph::is_connected() const {
  if (n_ <= 1) return true;
  return reach(0, full_mask(n_)) == full_mask(n_);
}

std::vector<VertexMask> Graph::components() const {
  std::vector<VertexMask> out;
  VertexMask left = full_mask(n_);
  while (left != 0) {
    VertexMask c = reach(std::countr_zero(left), left);
    out.push_back(c);
    left &= ~c;
  }
  return out;
}

Graph build_graph(int n, std::span<const Edge> edges) { return Graph(n, edges); }

Graph build_graph(int n, std::initializer_list<Edge> edges) {
  return Graph(n, std::span<const Edge>(edges.begin(), edges.size()));
}

Graph complete_graph(int n) {
  if (n < 1) throw std::invalid_argument("complete graph needs n >= 1");
  check_order(n);
  std::vector<VertexMask> rows(static_cast<std::size_t>(n));
  for (int u = 0; u < n; ++u) rows[u] = full_mask(n) & ~bit(u);
  return Graph::from_rows(n, std::move(rows));
}

Graph empty_graph(int n) {
  check_order(n);
  return Graph::from_rows(n, std::vector<VertexMask>(static_cast<std::size_t>(n), 0));
}

Graph path_graph(int n) {
  std::vector<Edge> e;
  for (int i = 0; i + 1 < n; ++i) e.emplace_back(i, i + 1);
  return Graph(n, e);
}

Graph cycle_graph(int n) {
  if (n < 3) throw std::invalid_argument("cycle needs n >= 3");
  std::vector<Edge> e;
  for (int i = 0; i < n; ++i) e.emplace_back(i, (i + 1) % n);
  return Graph(n, e);
}

Graph star_graph(int leaves) {
  std::vector<Edge> e;
  for (int i = 1; i <= leaves; ++i) e.emplace_back(0, i);
  return Graph(leaves + 1, e);
}

Graph apex_family(int n, int k) {
  if (n < 2 || k < 1 || k > n - 1) {
    throw std::invalid_argument("apex family needs n >= 2 and 1 <= k <= n-1 (got n=" +
                                std::to_string(n) + ", k=" + std::to_string(k) + ")");
  }
  check_order(n);
  std::vector<VertexMask> rows(static_cast<std::size_t>(n));
  const VertexMask clique = full_mask(n) & ~bit(0);
  const VertexMask apex_nbrs = full_mask(k + 1) & ~bit(0);
  rows[0] = apex_nbrs;
  for (int u = 1; u < n; ++u) {
    rows[u] = (clique & ~bit(u)) | (u <= k ? bit(0) : 0);
  }
  return Graph::from_rows(n, std::move(rows));
}

Graph split_family(const FamilyParams& p) {
  const auto [n, k, m] = p;
  if (n < 2 || m < 1 || m > n / 2 || k < 1 || k > m) {
    throw std::invalid_argument(
        "split family needs 1 <= k <= m <= floor(n/2) (got n=" + std::to_string(n) +
        ", k=" + std::to_string(k) + ", m=" + std::to_string(m) + ")");
  }
  check_order(n);
  const int big = n - m;
  const VertexMask left = full_mask(big);
  const VertexMask right = full_mask(n) & ~left;
  std::vector<VertexMask> rows(static_cast<std::size_t>(n));
  for (int u = 0; u < n; ++u) {
    rows[u] = (u < big ? left : right) & ~bit(u);
  }
  for (int i = 0; i < k; ++i) {
    rows[i] |= bit(big + i);
    rows[big + i] |= bit(i);
  }
  return Graph::from_rows(n, std::move(rows));
}

Graph add_edge(const Graph& g, int u, int v) {
  check_vertex(g, u);
  check_vertex(g, v);
  if (u == v) throw std::invalid_argument("loop edge at vertex " + std::to_string(u));
  std::vector<VertexMask> rows(g.rows().begin(), g.rows().end());
  rows[u] |= bit(v);
  rows[v] |= bit(u);
  return Graph::from_rows(g.order(), std::move(rows));
}

Graph delete_edge(const Graph& g, int u, int v) {
  check_vertex(g, u);
  check_vertex(g, v);
  if (!g.adjacent(u, v)) {
    throw std::invalid_argument("no edge (" + std::to_string(u) + "," +
                                std::to_string(v) + ")");
  }
  std::vector<VertexMask> rows(g.rows().begin(), g.rows().end());
  rows[u] &= ~bit(v);
  rows[v] &= ~bit(u);
  return Graph::from_rows(g.order(), std::move(rows));
}

Graph induced_subgraph(const Graph& g, VertexMask keep) {
  keep &= full_mask(g.order());
  std::vector<int> order;
  for (VertexMask k = keep; k != 0; k &= k - 1) order.push_back(std::countr_zero(k));
  return relabeled(g, order);
}

Graph delete_vertex(const Graph& g, int u) {
  check_vertex(g, u);
  return induced_subgraph(g, full_mask(g.order()) & ~bit(u));
}

Graph delete_vertex_pair(const Graph& g, int u, int v) {
  check_vertex(g, u);
  check_vertex(g, v);
  if (u == v) throw std::invalid_argument("vertex pair must be distinct");
  return induced_subgraph(g, full_mask(g.order()) & ~bit(u) & ~bit(v));
}

Graph disjoint_union(const Graph& g, const Graph& h) {
  const int n = g.order() + h.order();
  check_order(n);
  std::vector<VertexMask> rows(g.rows().begin(), g.rows().end());
  for (auto r : h.rows()) rows.push_back(r << g.order());
  return Graph::from_rows(n, std::move(rows));
}

Graph relabeled(const Graph& g, std::span<const int> order) {
  const int n = static_cast<int>(order.size());
  std::vector<int> pos(static_cast<std::size_t>(g.order()), -1);
  for (int i = 0; i < n; ++i) {
    check_vertex(g, order[i]);
    if (pos[order[i]] != -1) throw std::invalid_argument("relabeling repeats a vertex");
    pos[order[i]] = i;
  }
  std::vector<VertexMask> rows(static_cast<std::size_t>(n), 0);
  for (int i = 0; i < n; ++i) {
    for (VertexMask r = g.neighbors(order[i]); r != 0; r &= r - 1) {
      int p = pos[std::countr_zero(r)];
      if (p >= 0) rows[i] |= bit(p);
    }
  }
  return Graph::from_rows(n, std::move(rows));
}

Graph operation_I(const Graph& g, int v2, int u1, int u2) {
  check_vertex(g, v2);
  check_vertex(g, u1);
  check_vertex(g, u2);
  if (u1 == u2 || u1 == v2 || u2 == v2) {
    throw std::invalid_argument("operation I needs three distinct vertices");
  }
  if (!g.adjacent(u1, v2)) {
    throw std::invalid_argument("operation I: u1 v2 is not an edge");
  }
  if (g.adjacent(u2, v2)) {
    throw std::invalid_argument("operation I: u2 is already adjacent to v2");
  }
  return add_edge(delete_edge(g, u1, v2), u2, v2);
}

}  // namespace menergy
