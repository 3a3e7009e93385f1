#include <algorithm>
#include <array>
#include <limits>

#include "menergy/graph.hpp"

namespace menergy {

namespace {

// Residual network of an undirected unit-capacity graph. Each edge {u,v}
// becomes arcs u->v and v->u with capacity 1; flow[u][v] is the net flow.
class UnitFlow {
 public:
  explicit UnitFlow(const Graph& g) : g_(g), n_(g.order()) {
    flow_.assign(static_cast<std::size_t>(n_ * n_), 0);
  }

  int max_flow(int s, int t) {
    std::fill(flow_.begin(), flow_.end(), 0);
    int total = 0;
    std::vector<int> parent(static_cast<std::size_t>(n_));
    std::vector<int> queue(static_cast<std::size_t>(n_));
    while (true) {
      std::fill(parent.begin(), parent.end(), -1);
      parent[s] = s;
      int head = 0, tail = 0;
      queue[tail++] = s;
      while (head < tail && parent[t] < 0) {
        int u = queue[head++];
        for (VertexMask r = g_.neighbors(u); r != 0; r &= r - 1) {
          int v = std::countr_zero(r);
          if (parent[v] < 0 && residual(u, v) > 0) {
            parent[v] = u;
            queue[tail++] = v;
          }
        }
      }
      if (parent[t] < 0) return total;
      for (int v = t; v != s; v = parent[v]) {
        int u = parent[v];
        ++at(u, v);
        --at(v, u);
      }
      ++total;
    }
  }

  // Vertices reachable from s in the residual network after max_flow.
  VertexMask source_side(int s) const {
    VertexMask seen = bit(s);
    std::vector<int> stack{s};
    while (!stack.empty()) {
      int u = stack.back();
      stack.pop_back();
      for (VertexMask r = g_.neighbors(u) & ~seen; r != 0; r &= r - 1) {
        int v = std::countr_zero(r);
        if (residual(u, v) > 0) {
          seen |= bit(v);
          stack.push_back(v);
        }
      }
    }
    return seen;
  }

 private:
  int residual(int u, int v) const { return 1 - flow_[u * n_ + v]; }
  int& at(int u, int v) { return flow_[u * n_ + v]; }

  const Graph& g_;
  int n_;
  std::vector<int> flow_;
};

}  // namespace

int cut_size(const Graph& g, VertexMask side) {
  const VertexMask other = full_mask(g.order()) & ~side;
  int total = 0;
  for (VertexMask s = side; s != 0; s &= s - 1) {
    total += popcount(g.neighbors(std::countr_zero(s)) & other);
  }
  return total;
}

CutWitness make_cut(const Graph& g, VertexMask side) {
  const int n = g.order();
  side &= full_mask(n);
  if (popcount(side) * 2 > n) side = full_mask(n) & ~side;
  CutWitness w;
  w.side = side;
  w.size = cut_size(g, side);
  const int small = std::min(popcount(side), n - popcount(side));
  w.trivial = small == 1;
  return w;
}

Connectivity edge_connectivity(const Graph& g) {
  const int n = g.order();
  if (n < 2) throw std::invalid_argument("edge connectivity needs n >= 2");
  if (!g.is_connected()) {
    Connectivity c;
    c.k = 0;
    c.witness = make_cut(g, g.reach(0, full_mask(n)));
    return c;
  }
  UnitFlow flow(g);
  int best = std::numeric_limits<int>::max();
  VertexMask best_side = 0;
  for (int t = 1; t < n; ++t) {
    int f = flow.max_flow(0, t);
    if (f < best) {
      best = f;
      best_side = flow.source_side(0);
    }
  }
  Connectivity c;
  c.k = best;
  c.witness = make_cut(g, best_side);
  return c;
}

std::vector<CutWitness> all_min_cut_sides(const Graph& g, int bound) {
  const int n = g.order();
  if (n > bound) {
    throw std::length_error("cut enumeration bound " + std::to_string(bound) +
                            " exceeded by n=" + std::to_string(n));
  }
  if (n < 2) throw std::invalid_argument("cut enumeration needs n >= 2");
  const int k = edge_connectivity(g).k;
  std::vector<CutWitness> out;
  const VertexMask all = full_mask(n);
  for (VertexMask s = 1; s < all; ++s) {
    const int size = popcount(s);
    if (size * 2 > n) continue;
    // For |S| = n/2 both S and its complement qualify; keep the one holding vertex 0.
    if (size * 2 == n && !(s & 1U)) continue;
    if (cut_size(g, s) == k) out.push_back(make_cut(g, s));
  }
  return out;
}

bool has_trivial_min_cut(const Graph& g) {
  if (!g.is_connected()) throw std::invalid_argument("graph is not connected");
  return g.min_degree() == edge_connectivity(g).k;
}

}  // namespace menergy
