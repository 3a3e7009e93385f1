#pragma once

#include <cstdint>
#include <map>
#include <optional>
#include <random>
#include <span>
#include <string>
#include <vector>

#include "menergy/graph.hpp"
#include "menergy/matchcount.hpp"

namespace menergy {

/// Largest order the built-in enumerator generates.
inline constexpr int kEnumeratorBound = 8;
/// Separation below which two ME values are reported as a tie.
inline constexpr double kEnergySeparation = 1e-7;

/// One representative per isomorphism class of connected graphs on n
/// vertices, sorted by certificate. Generated by canonical augmentation:
/// a child (parent plus one vertex) is kept only if the new vertex lies in
/// the automorphism orbit of the child's canonical deletion vertex, with
/// children of one parent deduplicated by certificate.
std::vector<Graph> enumerate_connected(int n, int workers = 1);

/// Oracle for enumerate_connected: every labeled graph on n <= 6 vertices,
/// kept when connected, deduplicated by certificate.
std::vector<Graph> enumerate_connected_bruteforce(int n);

/// Partition by edge connectivity. Throws on a disconnected input.
std::map<int, std::vector<Graph>> classify(std::span<const Graph> graphs);

struct SweepReport {
  int n = 0;
  int k = 0;
  std::size_t class_size = 0;
  std::vector<std::string> me_maximizers;
  std::vector<std::string> z_maximizers;
  std::string expected_certificate;
  bool unique = false;
  std::optional<std::string> counterexample;

  friend bool operator==(const SweepReport&, const SweepReport&) = default;
};

/// Maximizers of ME and Z over `members`, all of which must be connected of
/// order n with edge connectivity k. ME candidates are compared by the
/// quasi-order first and by root-route ME (kEnergySeparation) when
/// incomparable; ties within the separation are kept as co-maximizers.
SweepReport verify_class(int n, int k, std::span<const Graph> members, int workers = 1);

/// verify_class over the built-in enumeration of the class (n, k).
SweepReport verify_theorem(int n, int k, int workers = 1);

/// Outcome of a lemma check: `cases` inputs examined, the first failing
/// input (graph6) if any.
struct LemmaCheck {
  bool passed = true;
  std::size_t cases = 0;
  std::optional<std::string> counterexample;

  explicit operator bool() const { return passed; }
  void fail(std::string witness) {
    if (passed) counterexample = std::move(witness);
    passed = false;
  }
};

/// Every G in the class (n, k), other than the apex graph, that has a
/// trivial min cut is StrictlyBelow the apex graph.
LemmaCheck verify_lemma_trivial_cut(int n, int k);

/// Every connected G on n vertices without a trivial min cut has
/// |S| >= kappa'(G) for each min-cut side with 2 <= |S| <= n/2.
LemmaCheck verify_lemma_side_bound(int n);

/// Every G in the class (n, k) other than the apex graph is StrictlyBelow it.
LemmaCheck verify_quasi_dominance(int n, int k);

struct OperationTrial {
  Graph before;
  int v2 = 0;
  int u1 = 0;
  int u2 = 0;
  int resamples = 0;
};

/// A random two-clique configuration on <= 12 vertices in which some clique
/// vertex u1 carries two cross edges and u2 carries none.
OperationTrial sample_operation_trial(std::mt19937_64& rng);

/// Random operation-I trials; each must give before StrictlyBelow after.
LemmaCheck verify_operation_I(int trials, std::uint64_t seed);

/// Deleting any edge of a random graph gives StrictlyBelow and a strictly
/// smaller root-route ME.
LemmaCheck verify_edge_deletion(int trials, std::uint64_t seed);

/// e(apex(n,k)) - e(split(n,k,m)) = (m-1)(n-m-1) for every valid triple
/// with n <= max_n.
LemmaCheck verify_edge_count_identity(int max_n);

/// m(K^1_{m,m}) <= m(K^1_{2m-1,1}) and m(K^1_{m+1,m}) <= m(K^1_{2m,1});
/// m(K^k_{n-m,m}) <= m(K^k_{n-1,1}) for k <= m; strictly below when
/// m >= 2. Every valid (n, k, m) with m <= max_m and n <= 2 max_m + 4.
LemmaCheck verify_family_inequalities(int max_m);

}  // namespace menergy
