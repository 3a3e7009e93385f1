#include <doctest.h>

#include <algorithm>
#include <numeric>
#include <random>
#include <set>

#include "menergy/graph.hpp"

using namespace menergy;

namespace {

Graph random_graph(std::mt19937_64& rng, int n, double p) {
  std::bernoulli_distribution coin(p);
  std::vector<Edge> edges;
  for (int j = 1; j < n; ++j)
    for (int i = 0; i < j; ++i)
      if (coin(rng)) edges.emplace_back(i, j);
  return Graph(n, edges);
}

// Isomorphism by trying every permutation.
bool isomorphic_bruteforce(const Graph& a, const Graph& b) {
  if (a.order() != b.order() || a.size() != b.size()) return false;
  std::vector<int> perm(static_cast<std::size_t>(a.order()));
  std::iota(perm.begin(), perm.end(), 0);
  do {
    if (relabeled(a, perm) == b) return true;
  } while (std::next_permutation(perm.begin(), perm.end()));
  return false;
}

}  // namespace

TEST_CASE("construction and queries") {
  const Graph k4 = complete_graph(4);
  CHECK(k4.order() == 4);
  CHECK(k4.size() == 6);
  CHECK(k4.min_degree() == 3);
  CHECK(k4.is_connected());

  const Graph dup = build_graph(3, {{0, 1}, {1, 0}, {1, 2}});
  CHECK(dup.size() == 2);
  CHECK_THROWS_AS(build_graph(3, {{1, 1}}), std::invalid_argument);
  CHECK_THROWS_AS(build_graph(3, {{0, 3}}), std::invalid_argument);

  const Graph two = disjoint_union(complete_graph(2), complete_graph(3));
  CHECK_FALSE(two.is_connected());
  CHECK(two.components().size() == 2);
  CHECK(edge_connectivity(two).k == 0);
}

TEST_CASE("edits") {
  const Graph c5 = cycle_graph(5);
  CHECK(delete_edge(c5, 0, 1).size() == 4);
  CHECK(delete_vertex(c5, 2).order() == 4);
  CHECK(delete_vertex(c5, 2).size() == 3);
  CHECK(delete_vertex_pair(c5, 0, 1).order() == 3);
  CHECK(add_edge(path_graph(3), 0, 2) == cycle_graph(3));
}

TEST_CASE("apex family") {
  const Graph g = apex_family(5, 2);
  CHECK(g.degree(0) == 2);
  CHECK(g.size() == 6 + 2);
  CHECK(edge_connectivity(g).k == 2);
  CHECK(canonical_certificate(apex_family(4, 3)) == canonical_certificate(complete_graph(4)));
  CHECK(canonical_certificate(apex_family(3, 1)) == canonical_certificate(path_graph(3)));
}

TEST_CASE("family invariants") {
  for (int n = 4; n <= 12; ++n) {
    for (int m = 2; m <= n / 2; ++m) {
      for (int k = 1; k <= m; ++k) {
        const Graph split = split_family({n, k, m});
        const Graph apex = apex_family(n, k);
        CHECK(edge_connectivity(split).k == k);
        CHECK(edge_connectivity(apex).k == k);
        CHECK(apex.size() - split.size() == (m - 1) * (n - m - 1));
      }
    }
  }
  CHECK_THROWS(split_family({6, 4, 3}));
  CHECK_THROWS(split_family({6, 1, 4}));
  CHECK(canonical_certificate(split_family({5, 1, 1})) == canonical_certificate(apex_family(5, 1)));
}

TEST_CASE("edge connectivity witnesses") {
  const auto c4 = edge_connectivity(cycle_graph(4));
  CHECK(c4.k == 2);
  CHECK(cut_size(cycle_graph(4), c4.witness.side) == 2);

  // C4 has 4 trivial cuts and 2 sides of order 2 (up to complement).
  const auto c4_sides = all_min_cut_sides(cycle_graph(4));
  CHECK(c4_sides.size() == 6);
  CHECK(has_trivial_min_cut(cycle_graph(4)));

  // Every min cut of K4 is trivial.
  for (const auto& cut : all_min_cut_sides(complete_graph(4))) CHECK(cut.side_order() == 1);
  CHECK(all_min_cut_sides(complete_graph(4)).size() == 4);

  const Graph barbell = split_family({8, 1, 4});
  const auto conn = edge_connectivity(barbell);
  CHECK(conn.k == 1);
  CHECK(conn.witness.side_order() == 4);
  CHECK_FALSE(conn.witness.trivial);
}

TEST_CASE("edge connectivity is at most min degree") {
  std::mt19937_64 rng(11);
  for (int i = 0; i < 300; ++i) {
    const int n = std::uniform_int_distribution<int>(2, 12)(rng);
    const Graph g = random_graph(rng, n, 0.5);
    if (!g.is_connected()) continue;
    const auto c = edge_connectivity(g);
    CHECK(c.k <= g.min_degree());
    CHECK(cut_size(g, c.witness.side) == c.k);
  }
}

TEST_CASE("operation I") {
  // Cliques {0,1,2} and {3,4,5}; cross edges 0-3 and 0-4.
  Graph g = build_graph(6, {{0, 1}, {0, 2}, {1, 2}, {3, 4}, {3, 5}, {4, 5}, {0, 3}, {0, 4}});
  const Graph h = operation_I(g, 4, 0, 1);
  CHECK(h.size() == g.size());
  CHECK(h.adjacent(1, 4));
  CHECK_FALSE(h.adjacent(0, 4));
  CHECK_THROWS(operation_I(g, 5, 0, 1));
  CHECK_THROWS(operation_I(g, 4, 0, 0));
}

TEST_CASE("certificate separates the 11 graphs on 4 vertices") {
  std::vector<Graph> all;
  for (unsigned mask = 0; mask < 64; ++mask) {
    std::vector<Edge> edges;
    int bitpos = 0;
    for (int j = 1; j < 4; ++j)
      for (int i = 0; i < j; ++i, ++bitpos)
        if (mask >> bitpos & 1u) edges.emplace_back(i, j);
    all.push_back(Graph(4, edges));
  }
  std::vector<Graph> reps;
  for (const auto& g : all) {
    bool seen = false;
    for (const auto& r : reps) seen = seen || isomorphic_bruteforce(g, r);
    if (!seen) reps.push_back(g);
  }
  CHECK(reps.size() == 11);
  std::set<std::string> certs;
  for (const auto& g : all) certs.insert(canonical_certificate(g));
  CHECK(certs.size() == 11);
  for (const auto& a : all)
    for (const auto& b : all)
      CHECK((canonical_certificate(a) == canonical_certificate(b)) == isomorphic_bruteforce(a, b));
}

TEST_CASE("certificate is invariant under relabeling") {
  std::mt19937_64 rng(3);
  for (int trial = 0; trial < 100; ++trial) {
    const int n = std::uniform_int_distribution<int>(1, 16)(rng);
    const Graph g = random_graph(rng, n, std::uniform_real_distribution<double>(0.1, 0.9)(rng));
    std::vector<int> perm(static_cast<std::size_t>(n));
    std::iota(perm.begin(), perm.end(), 0);
    std::shuffle(perm.begin(), perm.end(), rng);
    const Graph h = relabeled(g, perm);
    CHECK(canonical_certificate(g) == canonical_certificate(h));
    CHECK(certificate_key(g) == certificate_key(h));
    CHECK(graph6_decode(canonical_certificate(g)).size() == g.size());
  }
  CHECK_THROWS_AS(canonical_certificate(complete_graph(17)), std::length_error);
}

TEST_CASE("certificates distinguish cospectral-style pairs") {
  // C6 and two triangles are both 2-regular on 6 vertices.
  const Graph c6 = cycle_graph(6);
  const Graph triangles = disjoint_union(cycle_graph(3), cycle_graph(3));
  CHECK(canonical_certificate(c6) != canonical_certificate(triangles));
  // K_{3,3} against the prism, both 3-regular.
  const Graph k33 = build_graph(6, {{0, 3}, {0, 4}, {0, 5}, {1, 3}, {1, 4}, {1, 5}, {2, 3}, {2, 4}, {2, 5}});
  const Graph prism = build_graph(6, {{0, 1}, {1, 2}, {0, 2}, {3, 4}, {4, 5}, {3, 5}, {0, 3}, {1, 4}, {2, 5}});
  CHECK(canonical_certificate(k33) != canonical_certificate(prism));
}

TEST_CASE("graph6") {
  CHECK(graph6_decode("C~") == complete_graph(4));
  CHECK(graph6_encode(complete_graph(4)) == "C~");
  CHECK(graph6_decode(">>graph6<<C~\n") == complete_graph(4));
  CHECK(graph6_decode("@").order() == 1);
  CHECK_THROWS_AS(graph6_decode(""), Graph6Error);
  CHECK_THROWS_AS(graph6_decode("C"), Graph6Error);
  CHECK_THROWS_AS(graph6_decode("C~~"), Graph6Error);
  CHECK_THROWS_AS(graph6_decode("C\x7f"), Graph6Error);

  std::mt19937_64 rng(5);
  for (int trial = 0; trial < 100; ++trial) {
    const int n = std::uniform_int_distribution<int>(0, 64)(rng);
    const Graph g = random_graph(rng, n, 0.3);
    CHECK(graph6_decode(graph6_encode(g)) == g);
  }
  CHECK(graph6_encode(complete_graph(63)).substr(0, 4) == "~??~");
}
