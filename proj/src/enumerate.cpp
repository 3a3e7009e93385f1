#include <algorithm>
#include <set>

#include "menergy/parallel.hpp"
#include "menergy/verify.hpp"

namespace menergy {

namespace {

std::string marked_certificate(const Graph& g, int marked) {
  std::vector<int> colors(static_cast<std::size_t>(g.order()), 0);
  colors[marked] = 1;
  // The marked vertex is its own last cell, so it always lands at the final
  // canonical position and the plain graph6 of the form suffices.
  return graph6_encode(canonical_form(g, colors).graph);
}

bool is_cut_vertex(const Graph& g, int v) {
  const VertexMask rest = full_mask(g.order()) & ~bit(v);
  if (rest == 0) return false;
  return g.reach(std::countr_zero(rest), rest) != rest;
}

// Non-cut vertex occupying the last canonical position among non-cut vertices.
int canonical_deletion_vertex(const Graph& g) {
  const auto form = canonical_form(g);
  for (int pos = g.order() - 1; pos >= 0; --pos) {
    const int v = form.order[pos];
    if (!is_cut_vertex(g, v)) return v;
  }
  return form.order.back();
}

std::vector<Graph> children(const Graph& parent) {
  const int m = parent.order();
  std::vector<VertexMask> rows(parent.rows().begin(), parent.rows().end());
  rows.push_back(0);
  std::set<std::string> seen;
  std::vector<Graph> out;
  for (VertexMask nbrs = 1; nbrs <= full_mask(m); ++nbrs) {
    auto child_rows = rows;
    child_rows[m] = nbrs;
    for (VertexMask r = nbrs; r != 0; r &= r - 1) child_rows[std::countr_zero(r)] |= bit(m);
    Graph child = Graph::from_rows(m + 1, std::move(child_rows));
    const int w = canonical_deletion_vertex(child);
    if (w != m) {
      if (child.degree(w) != child.degree(m)) continue;
      if (marked_certificate(child, w) != marked_certificate(child, m)) continue;
    }
    if (seen.insert(certificate_key(child)).second) out.push_back(std::move(child));
  }
  return out;
}

void sort_by_certificate(std::vector<Graph>& graphs) {
  std::vector<std::pair<std::string, Graph>> keyed;
  keyed.reserve(graphs.size());
  for (auto& g : graphs) keyed.emplace_back(certificate_key(g), std::move(g));
  std::sort(keyed.begin(), keyed.end(),
            [](const auto& a, const auto& b) { return a.first < b.first; });
  graphs.clear();
  for (auto& [key, g] : keyed) graphs.push_back(std::move(g));
}

}  // namespace

std::vector<Graph> enumerate_connected(int n, int workers) {
  if (n < 1 || n > kEnumeratorBound) {
    throw std::out_of_range("built-in enumeration supports 1 <= n <= " +
                            std::to_string(kEnumeratorBound) + " (got " + std::to_string(n) + ")");
  }
  std::vector<Graph> level{empty_graph(1)};
  for (int order = 2; order <= n; ++order) {
    auto grown = parallel_map(level.size(), workers, [&](std::size_t i) { return children(level[i]); });
    level.clear();
    for (auto& batch : grown) {
      for (auto& g : batch) level.push_back(std::move(g));
    }
    sort_by_certificate(level);
  }
  return level;
}

std::vector<Graph> enumerate_connected_bruteforce(int n) {
  if (n < 1 || n > 6) throw std::out_of_range("brute-force enumeration supports 1 <= n <= 6");
  std::vector<Edge> slots;
  for (int j = 1; j < n; ++j) {
    for (int i = 0; i < j; ++i) slots.emplace_back(i, j);
  }
  std::set<std::string> seen;
  std::vector<Graph> out;
  for (std::uint64_t pick = 0; pick < (std::uint64_t{1} << slots.size()); ++pick) {
    std::vector<Edge> edges;
    for (std::size_t b = 0; b < slots.size(); ++b) {
      if ((pick >> b) & 1U) edges.push_back(slots[b]);
    }
    Graph g(n, edges);
    if (!g.is_connected()) continue;
    if (seen.insert(certificate_key(g)).second) out.push_back(std::move(g));
  }
  sort_by_certificate(out);
  return out;
}

std::map<int, std::vector<Graph>> classify(std::span<const Graph> graphs) {
  std::map<int, std::vector<Graph>> out;
  for (const Graph& g : graphs) {
    if (g.order() < 2 || !g.is_connected()) {
      throw std::invalid_argument("classify needs connected graphs of order >= 2; got " +
                                  graph6_encode(g));
    }
    out[edge_connectivity(g).k].push_back(g);
  }
  return out;
}

}  // namespace menergy
