// Canonical labeling by color refinement plus individualization search.
//
// The search tree is the usual one: refine the ordered partition to an
// equitable one, individualize each vertex of the first smallest non-singleton
// cell, recurse. Leaves are discrete partitions; the canonical form is the
// leaf whose adjacency code is lexicographically greatest. Automorphisms found
// by equal leaf codes prune sibling subtrees (orbit pruning) and, when the
// match is against the first leaf, cut the search back to the branch point.

#include <algorithm>
#include <map>
#include <numeric>

#include "menergy/graph.hpp"

namespace menergy {

namespace {

using Cell = std::vector<int>;
using Partition = std::vector<Cell>;
using Code = std::vector<VertexMask>;

class CanonicalSearch {
 public:
  CanonicalSearch(const Graph& g, Partition initial)
      : g_(g), n_(g.order()), initial_(std::move(initial)) {}

  std::vector<int> run() {
    if (n_ == 0) return {};
    search(initial_, 0);
    return best_order_;
  }

 private:
  void refine(Partition& cells) const {
    std::vector<VertexMask> masks;
    std::vector<std::pair<std::vector<int>, int>> keyed;
    while (true) {
      masks.assign(cells.size(), 0);
      for (std::size_t c = 0; c < cells.size(); ++c) {
        for (int v : cells[c]) masks[c] |= bit(v);
      }
      Partition next;
      next.reserve(cells.size());
      for (const Cell& cell : cells) {
        if (cell.size() == 1) {
          next.push_back(cell);
          continue;
        }
        keyed.clear();
        for (int v : cell) {
          std::vector<int> sig(masks.size());
          for (std::size_t c = 0; c < masks.size(); ++c) {
            sig[c] = popcount(g_.neighbors(v) & masks[c]);
          }
          keyed.emplace_back(std::move(sig), v);
        }
        std::sort(keyed.begin(), keyed.end());
        for (std::size_t i = 0; i < keyed.size();) {
          std::size_t j = i;
          Cell part;
          while (j < keyed.size() && keyed[j].first == keyed[i].first) {
            part.push_back(keyed[j].second);
            ++j;
          }
          next.push_back(std::move(part));
          i = j;
        }
      }
      const bool stable = next.size() == cells.size();
      cells = std::move(next);
      if (stable) return;
    }
  }

  Code code_of(const std::vector<int>& order) const {
    Code code(static_cast<std::size_t>(n_), 0);
    for (int j = 1; j < n_; ++j) {
      VertexMask w = 0;
      for (int i = 0; i < j; ++i) {
        if (g_.adjacent(order[i], order[j])) w |= VertexMask{1} << (63 - i);
      }
      code[j] = w;
    }
    return code;
  }

  // Returns the depth to unwind to, or -1 to continue normally.
  int leaf(const Partition& cells) {
    std::vector<int> order;
    order.reserve(static_cast<std::size_t>(n_));
    for (const Cell& c : cells) order.push_back(c.front());
    Code code = code_of(order);
    if (first_order_.empty()) {
      first_order_ = order;
      first_code_ = code;
      first_path_ = path_;
      best_order_ = std::move(order);
      best_code_ = std::move(code);
      return -1;
    }
    if (code == first_code_) {
      record_automorphism(first_order_, order);
      auto mismatch = std::mismatch(path_.begin(), path_.end(), first_path_.begin(),
                                    first_path_.end());
      return static_cast<int>(mismatch.first - path_.begin());
    }
    if (code == best_code_) {
      record_automorphism(best_order_, order);
    } else if (code > best_code_) {
      best_order_ = std::move(order);
      best_code_ = std::move(code);
    }
    return -1;
  }

  void record_automorphism(const std::vector<int>& from, const std::vector<int>& to) {
    std::vector<int> gamma(static_cast<std::size_t>(n_));
    for (int i = 0; i < n_; ++i) gamma[from[i]] = to[i];
    automorphisms_.push_back(std::move(gamma));
  }

  // Union-find roots of the orbits of the automorphisms fixing the current path.
  std::vector<int> orbit_roots() const {
    std::vector<int> parent(static_cast<std::size_t>(n_));
    std::iota(parent.begin(), parent.end(), 0);
    auto find = [&](int x) {
      while (parent[x] != x) x = parent[x] = parent[parent[x]];
      return x;
    };
    for (const auto& gamma : automorphisms_) {
      bool fixes = std::all_of(path_.begin(), path_.end(),
                               [&](int p) { return gamma[p] == p; });
      if (!fixes) continue;
      for (int v = 0; v < n_; ++v) {
        int a = find(v), b = find(gamma[v]);
        if (a != b) parent[std::max(a, b)] = std::min(a, b);
      }
    }
    for (int v = 0; v < n_; ++v) parent[v] = find(v);
    return parent;
  }

  int search(Partition cells, int depth) {
    refine(cells);
    if (cells.size() == static_cast<std::size_t>(n_)) return leaf(cells);

    std::size_t target = cells.size();
    for (std::size_t c = 0; c < cells.size(); ++c) {
      if (cells[c].size() > 1 && (target == cells.size() || cells[c].size() < cells[target].size())) {
        target = c;
      }
    }
    const Cell choices = cells[target];
    std::vector<int> explored;
    for (int v : choices) {
      if (!explored.empty()) {
        auto roots = orbit_roots();
        bool seen = std::any_of(explored.begin(), explored.end(),
                                [&](int w) { return roots[w] == roots[v]; });
        if (seen) continue;
      }
      explored.push_back(v);

      Partition child;
      child.reserve(cells.size() + 1);
      for (std::size_t c = 0; c < cells.size(); ++c) {
        if (c != target) {
          child.push_back(cells[c]);
          continue;
        }
        child.push_back({v});
        Cell rest;
        for (int w : cells[c]) {
          if (w != v) rest.push_back(w);
        }
        child.push_back(std::move(rest));
      }
      path_.push_back(v);
      int jump = search(std::move(child), depth + 1);
      path_.pop_back();
      if (jump >= 0 && jump < depth) return jump;
    }
    return -1;
  }

  const Graph& g_;
  int n_;
  Partition initial_;
  std::vector<int> path_;
  std::vector<int> first_path_;
  std::vector<int> first_order_;
  std::vector<int> best_order_;
  Code first_code_;
  Code best_code_;
  std::vector<std::vector<int>> automorphisms_;
};

Partition initial_partition(int n, std::span<const int> colors) {
  if (colors.empty()) {
    Cell all(static_cast<std::size_t>(n));
    std::iota(all.begin(), all.end(), 0);
    return n == 0 ? Partition{} : Partition{std::move(all)};
  }
  if (colors.size() != static_cast<std::size_t>(n)) {
    throw std::invalid_argument("coloring size does not match graph order");
  }
  std::map<int, Cell> by_color;
  for (int v = 0; v < n; ++v) by_color[colors[v]].push_back(v);
  Partition out;
  for (auto& [color, cell] : by_color) out.push_back(std::move(cell));
  return out;
}

}  // namespace

CanonicalForm canonical_form(const Graph& g, std::span<const int> colors) {
  CanonicalSearch search(g, initial_partition(g.order(), colors));
  CanonicalForm out;
  out.order = search.run();
  out.graph = relabeled(g, out.order);
  return out;
}

std::string certificate_key(const Graph& g) {
  return graph6_encode(canonical_form(g).graph);
}

std::string canonical_certificate(const Graph& g) {
  if (g.order() > kEnumerationBound) {
    throw std::length_error("certificate bound " + std::to_string(kEnumerationBound) +
                            " exceeded by n=" + std::to_string(g.order()));
  }
  return certificate_key(g);
}

}  // namespace menergy
