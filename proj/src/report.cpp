#include "menergy/report.hpp"

#include <cstdio>

namespace menergy {

namespace {

std::string join_counts(const MatchVector& mv) {
  std::string out;
  for (std::size_t t = 0; t < mv.size(); ++t) {
    if (t > 0) out += ';';
    out += mv[t].str();
  }
  return out;
}

std::string join_certs(const std::vector<std::string>& certs) {
  std::string out;
  for (std::size_t i = 0; i < certs.size(); ++i) {
    if (i > 0) out += ';';
    out += certs[i];
  }
  return out;
}

}  // namespace

std::string format_float(double x) {
  char buf[64];
  std::snprintf(buf, sizeof buf, "%.12g", x);
  return buf;
}

double round_float(double x) { return std::stod(format_float(x)); }

Json to_json(const MatchVector& mv) {
  Json out = Json::array();
  for (const auto& c : mv.counts()) out.push_back(c.str());
  return out;
}

MatchVector match_vector_from_json(const Json& j, int order) {
  std::vector<BigInt> counts;
  for (const auto& c : j) counts.emplace_back(c.get<std::string>());
  return MatchVector(order, std::move(counts));
}

Json to_json(const EnergyResult& e) {
  return Json{{"value", round_float(e.value)},
              {"abs_error_bound", round_float(e.abs_error_bound)},
              {"method", std::string(to_string(e.method))}};
}

Json to_json(const SweepReport& r) {
  Json out;
  out["n"] = r.n;
  out["k"] = r.k;
  out["class_size"] = r.class_size;
  out["me_max_certs"] = r.me_maximizers;
  out["z_max_certs"] = r.z_maximizers;
  out["expected_cert"] = r.expected_certificate;
  out["unique"] = r.unique;
  out["counterexample"] = r.counterexample ? Json(*r.counterexample) : Json(nullptr);
  return out;
}

SweepReport sweep_report_from_json(const Json& j) {
  SweepReport r;
  r.n = j.at("n").get<int>();
  r.k = j.at("k").get<int>();
  r.class_size = j.at("class_size").get<std::size_t>();
  r.me_maximizers = j.at("me_max_certs").get<std::vector<std::string>>();
  r.z_maximizers = j.at("z_max_certs").get<std::vector<std::string>>();
  r.expected_certificate = j.at("expected_cert").get<std::string>();
  r.unique = j.at("unique").get<bool>();
  if (!j.at("counterexample").is_null()) r.counterexample = j.at("counterexample").get<std::string>();
  return r;
}

std::string sweep_csv_header() {
  return "n,k,class_size,me_max_certs,z_max_certs,expected_cert,unique,counterexample";
}

std::string to_csv_row(const SweepReport& r) {
  return std::to_string(r.n) + ',' + std::to_string(r.k) + ',' + std::to_string(r.class_size) +
         ',' + join_certs(r.me_maximizers) + ',' + join_certs(r.z_maximizers) + ',' +
         r.expected_certificate + ',' + (r.unique ? "true" : "false") + ',' +
         r.counterexample.value_or("");
}

InvariantRow compute_invariants(const Graph& g) {
  InvariantRow row;
  row.certificate = g.order() <= kEnumerationBound ? canonical_certificate(g) : certificate_key(g);
  row.n = g.order();
  row.e = g.size();
  row.kappa = g.order() >= 2 ? edge_connectivity(g).k : 0;
  row.delta = g.order() > 0 ? g.min_degree() : 0;
  row.counts = match_vector(g);
  row.hosoya = hosoya_index(row.counts);
  row.me_roots = matching_energy_roots(row.counts);
  row.me_quadrature = matching_energy_quadrature(row.counts);
  row.energy = graph_energy(g);
  return row;
}

Json to_json(const InvariantRow& row) {
  return Json{{"certificate", row.certificate},
              {"n", row.n},
              {"e", row.e},
              {"kappa", row.kappa},
              {"delta", row.delta},
              {"match_vector", to_json(row.counts)},
              {"hosoya", row.hosoya.str()},
              {"me_roots", to_json(row.me_roots)},
              {"me_quadrature", to_json(row.me_quadrature)},
              {"energy", to_json(row.energy)}};
}

std::string invariants_csv_header() {
  return "certificate,n,e,kappa,delta,match_vector,hosoya,me_roots,me_quadrature,energy";
}

std::string to_csv_row(const InvariantRow& row) {
  return row.certificate + ',' + std::to_string(row.n) + ',' + std::to_string(row.e) + ',' +
         std::to_string(row.kappa) + ',' + std::to_string(row.delta) + ',' +
         join_counts(row.counts) + ',' + row.hosoya.str() + ',' +
         format_float(row.me_roots.value) + ',' + format_float(row.me_quadrature.value) + ',' +
         format_float(row.energy.value);
}

}  // namespace menergy
