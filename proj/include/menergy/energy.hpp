#pragma once

#include <Eigen/Dense>
#include <string_view>

#include "menergy/graph.hpp"
#include "menergy/matchcount.hpp"
#include "menergy/real_roots.hpp"

namespace menergy {

enum class EnergyMethod { Roots, Quadrature, Spectrum };

std::string_view to_string(EnergyMethod m);

struct EnergyResult {
  double value = 0.0;
  EnergyMethod method = EnergyMethod::Roots;
  double abs_error_bound = 0.0;
};

/// Dense adjacency matrix of g.
template <typename Scalar = double>
Eigen::Matrix<Scalar, Eigen::Dynamic, Eigen::Dynamic> adjacency_matrix(const Graph& g) {
  const int n = g.order();
  Eigen::Matrix<Scalar, Eigen::Dynamic, Eigen::Dynamic> a =
      Eigen::Matrix<Scalar, Eigen::Dynamic, Eigen::Dynamic>::Zero(n, n);
  for (auto [u, v] : g.edges()) a(u, v) = a(v, u) = Scalar(1);
  return a;
}

/// Sum |lambda_i| over the eigenvalues of a symmetric matrix.
template <typename Derived>
typename Derived::Scalar spectral_energy(const Eigen::MatrixBase<Derived>& symmetric) {
  using Matrix = Eigen::Matrix<typename Derived::Scalar, Eigen::Dynamic, Eigen::Dynamic>;
  if (symmetric.rows() == 0) return 0;
  Eigen::SelfAdjointEigenSolver<Matrix> solver(symmetric, Eigen::EigenvaluesOnly);
  return solver.eigenvalues().cwiseAbs().sum();
}

/// Sum_t (-1)^t m(G,t) y^(nu-t): the matching polynomial in y = x^2 with
/// the factor y^(floor(n/2)-nu) removed, lowest degree first.
RationalPoly even_part_polynomial(const MatchVector& mv);

/// The positive roots y_i of the even-part polynomial with multiplicities.
std::vector<RootBracket> even_part_roots(const MatchVector& mv);

/// ME(G) = 2 * sum sqrt(y_i) over the roots of the even-part polynomial.
EnergyResult matching_energy_roots(const MatchVector& mv);

/// The integrand of the head piece of the Coulson-type integral,
/// ln(sum_t m(G,t) x^(2t)) / x^2, extended by e(G) at x = 0.
double matching_energy_integrand(const MatchVector& mv, double x);

/// ME(G) = (2/pi) * int_0^inf x^-2 ln(sum_t m(G,t) x^(2t)) dx, split at
/// x = 1 with the tail mapped to [0, 1] by x -> 1/x.
EnergyResult matching_energy_quadrature(const MatchVector& mv, double tolerance = 1e-9);

/// E(G) from the adjacency spectrum.
EnergyResult graph_energy(const Graph& g);

/// ME(T) == E(T) within the combined error bounds. Throws
/// std::invalid_argument when g is not a tree.
bool tree_equality_check(const Graph& g);

bool is_tree(const Graph& g);

}  // namespace menergy
