#pragma once

#include <boost/multiprecision/cpp_int.hpp>
#include <memory>
#include <shared_mutex>
#include <span>
#include <string>
#include <unordered_map>
#include <vector>

#include "menergy/graph.hpp"

namespace menergy {

using BigInt = boost::multiprecision::cpp_int;

/// Largest order accepted by match_vector.
inline constexpr int kMatchVectorBound = 24;
/// Largest order accepted by the enumeration oracle.
inline constexpr int kBruteForceBound = 12;

/// m(G, t) for t = 0..floor(n/2).
class MatchVector {
 public:
  MatchVector() = default;
  /// `counts` is padded with zeros to floor(order/2) + 1 entries; longer
  /// input with nonzero tail, or counts[0] != 1, throws.
  MatchVector(int order, std::vector<BigInt> counts);

  int order() const { return order_; }
  std::size_t size() const { return counts_.size(); }
  const BigInt& operator[](std::size_t t) const { return counts_[t]; }
  std::span<const BigInt> counts() const { return counts_; }
  /// Size of a maximum matching.
  int matching_number() const;

  friend bool operator==(const MatchVector&, const MatchVector&) = default;

 private:
  int order_ = 0;
  std::vector<BigInt> counts_{BigInt(1)};
};

/// Grow-only memo from component certificates to matching generating
/// functions. Safe to share between threads.
class MatchCache {
 public:
  bool lookup(const std::string& key, std::vector<BigInt>& out) const;
  void insert(const std::string& key, const std::vector<BigInt>& value);
  std::size_t size() const;

 private:
  mutable std::shared_mutex mutex_;
  std::unordered_map<std::string, std::vector<BigInt>> map_;
};

/// Exact matching counts by the edge recurrence
///   m(G,t) = m(G-uv,t) + m(G-u-v,t-1)
/// with components multiplied and memoized by certificate. Uses a private
/// cache unless `shared` is given.
MatchVector match_vector(const Graph& g, MatchCache* shared = nullptr);

/// Independent oracle: enumerates every edge subset that is a matching.
MatchVector match_vector_bruteforce(const Graph& g);

/// Checks m(G,t) = m(G-uv,t) + m(G-u-v,t-1) for every t.
bool edge_recurrence_check(const Graph& g, int u, int v, MatchCache* shared = nullptr);
/// Checks m(G,t) = m(G-u,t) + sum over neighbours v of m(G-u-v,t-1) for every t.
bool vertex_recurrence_check(const Graph& g, int u, MatchCache* shared = nullptr);

/// Z(G), the total number of matchings.
BigInt hosoya_index(const MatchVector& mv);

enum class QuasiOrder {
  Equal,
  StrictlyBelow,
  StrictlyAbove,
  Incomparable,
};

std::string_view to_string(QuasiOrder q);

/// Componentwise comparison of match vectors of graphs of equal order.
QuasiOrder quasi_compare(const MatchVector& a, const MatchVector& b);

/// Coefficients of the matching polynomial sum_t (-1)^t m(G,t) x^(n-2t),
/// highest degree first; coeffs has n+1 entries.
struct PolyCoeffs {
  int order = 0;
  std::vector<BigInt> coeffs;
};

PolyCoeffs poly_coeffs(const MatchVector& mv);

}  // namespace menergy
