#include "menergy/matchcount.hpp"

#include <algorithm>
#include <mutex>

namespace menergy {

namespace {

using Poly = std::vector<BigInt>;

Poly multiply(const Poly& a, const Poly& b) {
  Poly out(a.size() + b.size() - 1);
  for (std::size_t i = 0; i < a.size(); ++i) {
    if (a[i] == 0) continue;
    for (std::size_t j = 0; j < b.size(); ++j) out[i + j] += a[i] * b[j];
  }
  while (out.size() > 1 && out.back() == 0) out.pop_back();
  return out;
}

// Components below this order are cheaper to recount than to canonize.
constexpr int kMemoMinOrder = 5;

// Counts matchings of induced subgraphs top[S], S given as a vertex mask.
//
// For a component C the edge recurrence is applied to every edge u v_1,
// ..., u v_d at a maximum-degree vertex u in turn. The pair branches are
// C - u - v_i no matter how many edges at u were already deleted, and the
// last edge-deleted graph is C - u plus an isolated vertex, so
//   m(C,t) = m(C-u,t) + sum_i m(C-u-v_i,t-1)
// and every subproblem is again an induced subgraph of top.
class MatchCounter {
 public:
  MatchCounter(const Graph& top, MatchCache& cache) : top_(top), cache_(cache) {}

  Poly count(VertexMask s) {
    Poly out{BigInt(1)};
    while (s != 0) {
      const VertexMask comp = top_.reach(std::countr_zero(s), s);
      s &= ~comp;
      if (popcount(comp) < 2) continue;
      out = multiply(out, count_connected(comp));
    }
    return out;
  }

 private:
  int degree_in(int v, VertexMask s) const { return popcount(top_.neighbors(v) & s); }

  Poly count_connected(VertexMask c) {
    const int n = popcount(c);
    if (n == 2) return {BigInt(1), BigInt(1)};
    if (n == 3) {
      int twice_edges = 0;
      for (VertexMask r = c; r != 0; r &= r - 1) twice_edges += degree_in(std::countr_zero(r), c);
      return {BigInt(1), BigInt(twice_edges / 2)};
    }
    if (auto it = labeled_.find(c); it != labeled_.end()) return it->second;

    std::string key;
    if (n >= kMemoMinOrder) {
      key = certificate_key(induced_subgraph(top_, c));
      Poly hit;
      if (cache_.lookup(key, hit)) {
        labeled_.emplace(c, hit);
        return hit;
      }
    }

    int u = -1;
    for (VertexMask r = c; r != 0; r &= r - 1) {
      const int w = std::countr_zero(r);
      if (u < 0 || degree_in(w, c) > degree_in(u, c)) u = w;
    }
    const VertexMask rest = c & ~bit(u);
    Poly out = count(rest);
    for (VertexMask r = top_.neighbors(u) & c; r != 0; r &= r - 1) {
      const Poly pair = count(rest & ~bit(std::countr_zero(r)));
      if (out.size() < pair.size() + 1) out.resize(pair.size() + 1);
      for (std::size_t t = 0; t < pair.size(); ++t) out[t + 1] += pair[t];
    }

    if (!key.empty()) cache_.insert(key, out);
    labeled_.emplace(c, out);
    return out;
  }

  const Graph& top_;
  MatchCache& cache_;
  std::unordered_map<VertexMask, Poly> labeled_;
};

void enumerate_matchings(const std::vector<Edge>& edges, std::size_t from, VertexMask used,
                         int size, std::vector<BigInt>& counts) {
  counts[size] += 1;
  for (std::size_t i = from; i < edges.size(); ++i) {
    const auto [u, v] = edges[i];
    if ((used & (bit(u) | bit(v))) != 0) continue;
    enumerate_matchings(edges, i + 1, used | bit(u) | bit(v), size + 1, counts);
  }
}

}  // namespace

MatchVector::MatchVector(int order, std::vector<BigInt> counts) : order_(order) {
  if (order < 0) throw std::invalid_argument("negative order");
  const std::size_t len = static_cast<std::size_t>(order / 2 + 1);
  if (counts.empty() || counts[0] != 1) {
    throw std::invalid_argument("match vector must start with m(G,0) = 1");
  }
  for (std::size_t t = len; t < counts.size(); ++t) {
    if (counts[t] != 0) throw std::invalid_argument("nonzero count beyond floor(n/2)");
  }
  for (const auto& c : counts) {
    if (c < 0) throw std::invalid_argument("negative matching count");
  }
  counts.resize(len);
  counts_ = std::move(counts);
}

int MatchVector::matching_number() const {
  int nu = 0;
  for (std::size_t t = 0; t < counts_.size(); ++t) {
    if (counts_[t] != 0) nu = static_cast<int>(t);
  }
  return nu;
}

bool MatchCache::lookup(const std::string& key, std::vector<BigInt>& out) const {
  std::shared_lock lock(mutex_);
  auto it = map_.find(key);
  if (it == map_.end()) return false;
  out = it->second;
  return true;
}

void MatchCache::insert(const std::string& key, const std::vector<BigInt>& value) {
  std::unique_lock lock(mutex_);
  map_.try_emplace(key, value);
}

std::size_t MatchCache::size() const {
  std::shared_lock lock(mutex_);
  return map_.size();
}

MatchVector match_vector(const Graph& g, MatchCache* shared) {
  if (g.order() > kMatchVectorBound) {
    throw std::length_error("match_vector bound " + std::to_string(kMatchVectorBound) +
                            " exceeded by n=" + std::to_string(g.order()));
  }
  MatchCache local;
  MatchCounter counter(g, shared ? *shared : local);
  return MatchVector(g.order(), counter.count(full_mask(g.order())));
}

MatchVector match_vector_bruteforce(const Graph& g) {
  if (g.order() > kBruteForceBound) {
    throw std::length_error("brute-force bound " + std::to_string(kBruteForceBound) +
                            " exceeded by n=" + std::to_string(g.order()));
  }
  std::vector<BigInt> counts(static_cast<std::size_t>(g.order() / 2 + 1));
  enumerate_matchings(g.edges(), 0, 0, 0, counts);
  return MatchVector(g.order(), std::move(counts));
}

bool edge_recurrence_check(const Graph& g, int u, int v, MatchCache* shared) {
  const MatchVector whole = match_vector(g, shared);
  const MatchVector minus_edge = match_vector(delete_edge(g, u, v), shared);
  const MatchVector minus_pair = match_vector(delete_vertex_pair(g, u, v), shared);
  for (std::size_t t = 0; t < whole.size(); ++t) {
    BigInt rhs = minus_edge[t];
    if (t >= 1 && t - 1 < minus_pair.size()) rhs += minus_pair[t - 1];
    if (whole[t] != rhs) return false;
  }
  return true;
}

bool vertex_recurrence_check(const Graph& g, int u, MatchCache* shared) {
  const MatchVector whole = match_vector(g, shared);
  const MatchVector minus_u = match_vector(delete_vertex(g, u), shared);
  std::vector<MatchVector> minus_pairs;
  for (VertexMask r = g.neighbors(u); r != 0; r &= r - 1) {
    minus_pairs.push_back(match_vector(delete_vertex_pair(g, u, std::countr_zero(r)), shared));
  }
  for (std::size_t t = 0; t < whole.size(); ++t) {
    BigInt rhs = t < minus_u.size() ? minus_u[t] : BigInt(0);
    if (t >= 1) {
      for (const auto& mv : minus_pairs) {
        if (t - 1 < mv.size()) rhs += mv[t - 1];
      }
    }
    if (whole[t] != rhs) return false;
  }
  return true;
}

BigInt hosoya_index(const MatchVector& mv) {
  BigInt z = 0;
  for (const auto& c : mv.counts()) z += c;
  return z;
}

std::string_view to_string(QuasiOrder q) {
  switch (q) {
    case QuasiOrder::Equal: return "Equal";
    case QuasiOrder::StrictlyBelow: return "StrictlyBelow";
    case QuasiOrder::StrictlyAbove: return "StrictlyAbove";
    case QuasiOrder::Incomparable: return "Incomparable";
  }
  return "?";
}

QuasiOrder quasi_compare(const MatchVector& a, const MatchVector& b) {
  if (a.order() != b.order()) {
    throw std::invalid_argument("quasi-order compares graphs of equal order only (" +
                                std::to_string(a.order()) + " vs " +
                                std::to_string(b.order()) + ")");
  }
  bool below = false, above = false;
  for (std::size_t t = 0; t < a.size(); ++t) {
    if (a[t] < b[t]) below = true;
    if (a[t] > b[t]) above = true;
  }
  if (below && above) return QuasiOrder::Incomparable;
  if (below) return QuasiOrder::StrictlyBelow;
  if (above) return QuasiOrder::StrictlyAbove;
  return QuasiOrder::Equal;
}

PolyCoeffs poly_coeffs(const MatchVector& mv) {
  PolyCoeffs p;
  p.order = mv.order();
  p.coeffs.assign(static_cast<std::size_t>(mv.order() + 1), BigInt(0));
  for (std::size_t t = 0; t < mv.size(); ++t) {
    p.coeffs[2 * t] = (t % 2 == 0) ? mv[t] : BigInt(-mv[t]);
  }
  return p;
}

}  // namespace menergy
