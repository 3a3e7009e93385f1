#include "menergy/energy.hpp"

#include <boost/math/constants/constants.hpp>
#include <cmath>
#include <limits>

#include "menergy/quadrature.hpp"

namespace menergy {

std::string_view to_string(EnergyMethod m) {
  switch (m) {
    case EnergyMethod::Roots: return "roots";
    case EnergyMethod::Quadrature: return "quadrature";
    case EnergyMethod::Spectrum: return "spectrum";
  }
  return "?";
}

RationalPoly even_part_polynomial(const MatchVector& mv) {
  const int nu = mv.matching_number();
  RationalPoly p(static_cast<std::size_t>(nu + 1));
  for (int t = 0; t <= nu; ++t) {
    Rational c(mv[static_cast<std::size_t>(t)]);
    p[static_cast<std::size_t>(nu - t)] = (t % 2 == 0) ? c : Rational(-c);
  }
  return p;
}

std::vector<RootBracket> even_part_roots(const MatchVector& mv) {
  return positive_real_roots(even_part_polynomial(mv));
}

EnergyResult matching_energy_roots(const MatchVector& mv) {
  EnergyResult out;
  out.method = EnergyMethod::Roots;
  if (mv.matching_number() == 0) return out;

  WideFloat sum = 0;
  WideFloat spread = 0;
  for (const auto& root : even_part_roots(mv)) {
    sum += root.multiplicity * sqrt(root.midpoint());
    spread += root.multiplicity * (sqrt(root.upper) - sqrt(root.lower));
  }
  out.value = static_cast<double>(2 * sum);
  out.abs_error_bound = static_cast<double>(2 * spread) +
                        4 * std::numeric_limits<double>::epsilon() * out.value;
  return out;
}

namespace {

std::vector<double> counts_as_double(const MatchVector& mv) {
  std::vector<double> c;
  for (const auto& m : mv.counts()) c.push_back(static_cast<double>(m));
  return c;
}

// ln(1 + s) / x^2 with s = sum_{t>=1} m_t x^(2t), stable as x -> 0.
double head_integrand(const std::vector<double>& m, double x) {
  const double y = x * x;
  double s_over_y = 0;
  for (std::size_t t = m.size(); t-- > 1;) s_over_y = s_over_y * y + m[t];
  const double s = s_over_y * y;
  if (s < 1e-8) return s_over_y * (1 - s / 2 + s * s / 3);
  return std::log1p(s) / y;
}

// ln(sum_t m_t u^(2(nu-t))) on [0, 1].
double tail_integrand(const std::vector<double>& m, int nu, double u) {
  const double y = u * u;
  double acc = 0;
  for (int t = 0; t <= nu; ++t) acc = acc * y + m[static_cast<std::size_t>(t)];
  return std::log(acc);
}

}  // namespace

double matching_energy_integrand(const MatchVector& mv, double x) {
  return head_integrand(counts_as_double(mv), x);
}

EnergyResult matching_energy_quadrature(const MatchVector& mv, double tolerance) {
  EnergyResult out;
  out.method = EnergyMethod::Quadrature;
  const int nu = mv.matching_number();
  if (nu == 0) return out;

  const auto m = counts_as_double(mv);
  auto head = integrate_adaptive<double>([&](double x) { return head_integrand(m, x); }, 0.0,
                                         1.0, tolerance / 2);
  auto tail = integrate_adaptive<double>([&](double u) { return tail_integrand(m, nu, u); },
                                         0.0, 1.0, tolerance / 2);
  const double scale = 2 / boost::math::constants::pi<double>();
  out.value = scale * (head.value + 2.0 * nu + tail.value);
  double bound = scale * (head.abs_error + tail.abs_error);
  if (!head.converged || !tail.converged) bound *= 10;
  out.abs_error_bound = bound + 8 * std::numeric_limits<double>::epsilon() * out.value;
  return out;
}

EnergyResult graph_energy(const Graph& g) {
  EnergyResult out;
  out.method = EnergyMethod::Spectrum;
  if (g.size() == 0) return out;
  const auto a = adjacency_matrix<double>(g);
  out.value = spectral_energy(a);
  out.abs_error_bound = 64.0 * g.order() * std::numeric_limits<double>::epsilon() *
                        (1.0 + g.max_degree());
  return out;
}

bool is_tree(const Graph& g) {
  return g.order() >= 1 && g.size() == g.order() - 1 && g.is_connected();
}

bool tree_equality_check(const Graph& g) {
  if (!is_tree(g)) throw std::invalid_argument("input is not a tree");
  const auto me = matching_energy_roots(match_vector(g));
  const auto e = graph_energy(g);
  const double tolerance = std::max(me.abs_error_bound + e.abs_error_bound, 1e-9);
  return std::abs(me.value - e.value) <= tolerance;
}

}  // namespace menergy
