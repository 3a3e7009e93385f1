#include <doctest.h>

#include <random>

#include "menergy/matchcount.hpp"

using namespace menergy;

namespace {

std::vector<BigInt> big(std::initializer_list<long> xs) {
  std::vector<BigInt> out;
  for (long x : xs) out.emplace_back(x);
  return out;
}

Graph random_graph(std::mt19937_64& rng, int n, double p) {
  std::bernoulli_distribution coin(p);
  std::vector<Edge> edges;
  for (int j = 1; j < n; ++j)
    for (int i = 0; i < j; ++i)
      if (coin(rng)) edges.emplace_back(i, j);
  return Graph(n, edges);
}

}  // namespace

TEST_CASE("small match vectors") {
  CHECK(match_vector(cycle_graph(6)).counts()[2] == 9);
  CHECK(match_vector(cycle_graph(6)) == MatchVector(6, big({1, 6, 9, 2})));
  const Graph paw = build_graph(4, {{0, 1}, {1, 2}, {0, 2}, {2, 3}});
  CHECK(match_vector(paw) == MatchVector(4, big({1, 4, 1})));
  CHECK(match_vector(complete_graph(4)) == MatchVector(4, big({1, 6, 3})));
  CHECK(match_vector(empty_graph(5)) == MatchVector(5, big({1})));
  CHECK(match_vector(empty_graph(0)).size() == 1);
  CHECK(match_vector(star_graph(5)).matching_number() == 1);
  CHECK(hosoya_index(match_vector(path_graph(5))) == 8);
}

TEST_CASE("complete graph counts") {
  // m(K_n, n/2) is the double factorial (n-1)!!.
  BigInt df = 1;
  for (int n = 2; n <= 24; n += 2) {
    df *= n - 1;
    CHECK(match_vector(complete_graph(n))[static_cast<std::size_t>(n / 2)] == df);
  }
  CHECK_THROWS(match_vector(complete_graph(25)));
}

TEST_CASE("match vector construction rejects bad input") {
  CHECK_THROWS(MatchVector(4, big({2, 1})));
  CHECK_THROWS(MatchVector(4, big({1, 1, 1, 1})));
  CHECK(MatchVector(4, big({1, 1, 0})) == MatchVector(4, big({1, 1})));
}

TEST_CASE("match vector agrees with brute force on random graphs") {
  std::mt19937_64 rng(21);
  MatchCache cache;
  for (int i = 0; i < 200; ++i) {
    const int n = std::uniform_int_distribution<int>(0, 12)(rng);
    const Graph g = random_graph(rng, n, std::uniform_real_distribution<double>(0.0, 1.0)(rng));
    CHECK(match_vector(g) == match_vector_bruteforce(g));
    CHECK(match_vector(g, &cache) == match_vector_bruteforce(g));
  }
}

TEST_CASE("recurrences") {
  std::mt19937_64 rng(8);
  for (int i = 0; i < 50; ++i) {
    const Graph g = random_graph(rng, 9, 0.5);
    for (auto [u, v] : g.edges()) CHECK(edge_recurrence_check(g, u, v));
    for (int u = 0; u < g.order(); ++u) CHECK(vertex_recurrence_check(g, u));
  }
}

TEST_CASE("quasi-order") {
  const MatchVector a(4, big({1, 4, 1}));
  const MatchVector b(4, big({1, 6, 3}));
  const MatchVector c(4, big({1, 5, 0}));
  CHECK(quasi_compare(a, b) == QuasiOrder::StrictlyBelow);
  CHECK(quasi_compare(b, a) == QuasiOrder::StrictlyAbove);
  CHECK(quasi_compare(a, a) == QuasiOrder::Equal);
  CHECK(quasi_compare(a, c) == QuasiOrder::Incomparable);
  CHECK_THROWS(quasi_compare(a, MatchVector(5, big({1, 4, 1}))));
  CHECK(to_string(QuasiOrder::StrictlyBelow) == "StrictlyBelow");
}

TEST_CASE("edge deletion moves strictly down") {
  std::mt19937_64 rng(4);
  for (int i = 0; i < 50; ++i) {
    const Graph g = random_graph(rng, 8, 0.6);
    for (auto [u, v] : g.edges()) {
      CHECK(quasi_compare(match_vector(delete_edge(g, u, v)), match_vector(g)) == QuasiOrder::StrictlyBelow);
    }
  }
}

TEST_CASE("matching polynomial coefficients") {
  const auto p3 = poly_coeffs(match_vector(path_graph(3)));
  CHECK(p3.coeffs == big({1, 0, -2, 0}));
  const auto k4 = poly_coeffs(match_vector(complete_graph(4)));
  CHECK(k4.coeffs == big({1, 0, -6, 0, 3}));
  CHECK(poly_coeffs(match_vector(empty_graph(3))).coeffs == big({1, 0, 0, 0}));
}
