#include <doctest.h>

#include <cmath>
#include <random>

#include "menergy/energy.hpp"
#include "menergy/quadrature.hpp"

using namespace menergy;

namespace {

double me(const Graph& g) { return matching_energy_roots(match_vector(g)).value; }

Graph random_graph(std::mt19937_64& rng, int n, double p) {
  std::bernoulli_distribution coin(p);
  std::vector<Edge> edges;
  for (int j = 1; j < n; ++j)
    for (int i = 0; i < j; ++i)
      if (coin(rng)) edges.emplace_back(i, j);
  return Graph(n, edges);
}

}  // namespace

TEST_CASE("spot values") {
  CHECK(me(complete_graph(2)) == 2.0);
  CHECK(me(path_graph(3)) == doctest::Approx(2 * std::sqrt(2.0)).epsilon(1e-12));
  CHECK(me(empty_graph(4)) == 0.0);
  const double k4 = 2 * (std::sqrt(3 + std::sqrt(6.0)) + std::sqrt(3 - std::sqrt(6.0)));
  CHECK(std::abs(me(complete_graph(4)) - k4) < 1e-12);
  CHECK(std::abs(graph_energy(star_graph(3)).value - 2 * std::sqrt(3.0)) < 1e-12);
  CHECK(std::abs(graph_energy(complete_graph(5)).value - 8.0) < 1e-10);
  CHECK(std::abs(graph_energy(cycle_graph(4)).value - 4.0) < 1e-10);
}

TEST_CASE("routes agree") {
  std::mt19937_64 rng(9);
  for (int i = 0; i < 60; ++i) {
    const int n = std::uniform_int_distribution<int>(2, 14)(rng);
    const MatchVector mv = match_vector(random_graph(rng, n, 0.5));
    const auto roots = matching_energy_roots(mv);
    const auto quad = matching_energy_quadrature(mv);
    CHECK(std::abs(roots.value - quad.value) <= 1e-7);
    CHECK(roots.method == EnergyMethod::Roots);
    CHECK(quad.method == EnergyMethod::Quadrature);
  }
}

TEST_CASE("integrand tends to the edge count") {
  const Graph g = cycle_graph(7);
  CHECK(std::abs(matching_energy_integrand(match_vector(g), 1e-8) - 7.0) < 1e-4);
  CHECK(matching_energy_integrand(match_vector(g), 0.0) == 7.0);
}

TEST_CASE("trees") {
  CHECK(is_tree(path_graph(6)));
  CHECK_FALSE(is_tree(cycle_graph(6)));
  CHECK(tree_equality_check(star_graph(7)));
  CHECK(tree_equality_check(path_graph(9)));
  CHECK_THROWS_AS(tree_equality_check(cycle_graph(5)), std::invalid_argument);
  const double c4 = 2 * (std::sqrt(2 + std::sqrt(2.0)) + std::sqrt(2 - std::sqrt(2.0)));
  CHECK(std::abs(me(cycle_graph(4)) - c4) < 1e-12);
  CHECK(std::abs(graph_energy(cycle_graph(4)).value - 4.0) < 1e-12);
}

TEST_CASE("edge deletion lowers ME") {
  std::mt19937_64 rng(12);
  for (int i = 0; i < 30; ++i) {
    const Graph g = random_graph(rng, 9, 0.5);
    for (auto [u, v] : g.edges()) CHECK(me(delete_edge(g, u, v)) < me(g));
  }
}

TEST_CASE("real roots") {
  // (y-1)^2 (y-2)
  const RationalPoly p{-2, 5, -4, 1};
  for (const auto& roots : {positive_real_roots(p), positive_real_roots_sturm(p)}) {
    REQUIRE(roots.size() == 2);
    CHECK(roots[0].multiplicity == 2);
    CHECK(abs(roots[0].midpoint() - 1) < 1e-25);
    CHECK(roots[1].multiplicity == 1);
    CHECK(abs(roots[1].midpoint() - 2) < 1e-25);
  }
  CHECK(sturm_count(p, 0, 3) == 2);
  CHECK(sturm_count(p, 1, 3) == 1);
  CHECK_THROWS_AS(positive_real_roots(RationalPoly{1, 0, 1}), std::domain_error);
  CHECK_THROWS_AS(positive_real_roots(RationalPoly{0, 1}), std::domain_error);
  CHECK_THROWS_AS(positive_real_roots(RationalPoly{1, 1}), std::domain_error);
  const auto factors = square_free_factors(p);
  REQUIRE(factors.size() == 2);
  CHECK(factors[1] == RationalPoly{-1, 1});
}

TEST_CASE("adaptive quadrature") {
  const auto r = integrate_adaptive<double>([](double x) { return std::exp(x); }, 0.0, 1.0, 1e-12);
  CHECK(r.converged);
  CHECK(std::abs(r.value - (std::exp(1.0) - 1.0)) < 1e-12);
  const auto s = integrate_adaptive<double>([](double x) { return std::log(x); }, 0.0, 1.0, 1e-10);
  CHECK(std::abs(s.value + 1.0) < 1e-9);
}

TEST_CASE("spectral energy on a generic matrix type") {
  Eigen::Matrix2d m;
  m << 0, 2, 2, 0;
  CHECK(std::abs(spectral_energy(m) - 4.0) < 1e-12);
  CHECK(std::abs(spectral_energy(adjacency_matrix<long double>(path_graph(3))) - 2 * std::sqrt(2.0L)) < 1e-15L);
}
