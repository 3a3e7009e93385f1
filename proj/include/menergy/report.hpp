#pragma once

#include <json.hpp>
#include <string>

#include "menergy/energy.hpp"
#include "menergy/graph.hpp"
#include "menergy/matchcount.hpp"
#include "menergy/verify.hpp"

namespace menergy {

using Json = nlohmann::json;

/// Decimal with 12 significant digits.
std::string format_float(double x);
/// x rounded to 12 significant digits.
double round_float(double x);

Json to_json(const MatchVector& mv);
MatchVector match_vector_from_json(const Json& j, int order);
Json to_json(const EnergyResult& e);
Json to_json(const SweepReport& r);
SweepReport sweep_report_from_json(const Json& j);

std::string sweep_csv_header();
std::string to_csv_row(const SweepReport& r);

/// Every invariant the CLI reports for one graph.
struct InvariantRow {
  std::string certificate;
  int n = 0;
  int e = 0;
  int kappa = 0;
  int delta = 0;
  MatchVector counts;
  BigInt hosoya;
  EnergyResult me_roots;
  EnergyResult me_quadrature;
  EnergyResult energy;
};

/// Invariants of g; the certificate is canonical_certificate when
/// n <= 16 and certificate_key otherwise.
InvariantRow compute_invariants(const Graph& g);

Json to_json(const InvariantRow& row);
std::string invariants_csv_header();
std::string to_csv_row(const InvariantRow& row);

}  // namespace menergy
