#include "cli.hpp"

#include <CLI11.hpp>
#include <algorithm>
#include <cmath>
#include <fstream>
#include <functional>
#include <iostream>
#include <map>
#include <optional>
#include <random>
#include <set>
#include <sstream>

#include "menergy/energy.hpp"
#include "menergy/parallel.hpp"
#include "menergy/report.hpp"
#include "menergy/verify.hpp"

namespace menergy::cli {

namespace {

struct Config {
  std::string input = "-";
  std::optional<std::string> corpus;
  std::string format = "csv";
  std::optional<int> n;
  std::optional<int> k;
  std::optional<int> m;
  std::string family;
  std::optional<int> trials;
  std::uint64_t seed = 7;
  int workers = 1;
  std::string suite;
};

struct UsageError : std::runtime_error {
  using std::runtime_error::runtime_error;
};
struct InputError : std::runtime_error {
  using std::runtime_error::runtime_error;
};

std::vector<std::string> read_lines(const std::string& path, std::istream& in) {
  std::vector<std::string> lines;
  auto slurp = [&](std::istream& s) {
    for (std::string line; std::getline(s, line);) {
      if (!line.empty() && line.back() == '\r') line.pop_back();
      lines.push_back(std::move(line));
    }
  };
  if (path == "-") {
    slurp(in);
  } else {
    std::ifstream file(path);
    if (!file) throw InputError("cannot open input '" + path + "'");
    slurp(file);
  }
  return lines;
}

// Blank lines are skipped; each other line must be a graph6 string.
struct NumberedGraph {
  std::size_t line = 0;
  Graph graph;
};

std::vector<NumberedGraph> decode_all(const std::vector<std::string>& lines,
                                      std::vector<std::pair<std::size_t, std::string>>& errors) {
  std::vector<NumberedGraph> out;
  for (std::size_t i = 0; i < lines.size(); ++i) {
    if (lines[i].empty()) continue;
    try {
      out.push_back({i + 1, graph6_decode(lines[i])});
    } catch (const Graph6Error& e) {
      errors.emplace_back(i + 1, e.what());
    }
  }
  return out;
}

void emit_error(const Config& cfg, std::ostream& out, std::ostream& err, std::size_t line,
                const std::string& message) {
  err << "error: line " << line << ": " << message << '\n';
  if (cfg.format == "json") out << Json{{"line", line}, {"error", message}}.dump() << '\n';
}

int cmd_invariants(const Config& cfg, std::istream& in, std::ostream& out, std::ostream& err) {
  std::vector<std::pair<std::size_t, std::string>> errors;
  const auto graphs = decode_all(read_lines(cfg.input, in), errors);
  std::map<std::size_t, std::string> rows;
  for (const auto& [line, g] : graphs) {
    try {
      const auto row = compute_invariants(g);
      rows[line] = cfg.format == "json" ? to_json(row).dump() : to_csv_row(row);
    } catch (const std::exception& e) {
      errors.emplace_back(line, e.what());
    }
  }
  std::sort(errors.begin(), errors.end());
  if (cfg.format == "csv") out << invariants_csv_header() << '\n';
  auto next_error = errors.begin();
  for (const auto& [line, text] : rows) {
    for (; next_error != errors.end() && next_error->first < line; ++next_error) {
      emit_error(cfg, out, err, next_error->first, next_error->second);
    }
    out << text << '\n';
  }
  for (; next_error != errors.end(); ++next_error) {
    emit_error(cfg, out, err, next_error->first, next_error->second);
  }
  return errors.empty() ? kSuccess : kInputError;
}

int cmd_construct(const Config& cfg, std::ostream& out) {
  if (!cfg.n || !cfg.k) throw UsageError("construct needs --n and --k");
  Graph g;
  try {
    if (cfg.family == "apex") {
      if (cfg.m && *cfg.m != 1) throw UsageError("apex family has m = 1");
      g = apex_family(*cfg.n, *cfg.k);
    } else {
      if (!cfg.m) throw UsageError("split family needs --m");
      g = split_family({*cfg.n, *cfg.k, *cfg.m});
    }
  } catch (const std::invalid_argument& e) {
    throw UsageError(e.what());
  }
  out << graph6_encode(g) << '\n';
  return kSuccess;
}

int cmd_compare(const Config& cfg, std::istream& in, std::ostream& out) {
  std::vector<std::pair<std::size_t, std::string>> errors;
  const auto graphs = decode_all(read_lines(cfg.input, in), errors);
  if (!errors.empty()) {
    throw InputError("line " + std::to_string(errors.front().first) + ": " + errors.front().second);
  }
  if (graphs.size() != 2) {
    throw InputError("compare needs exactly two graphs, got " + std::to_string(graphs.size()));
  }
  const Graph& a = graphs[0].graph;
  const Graph& b = graphs[1].graph;
  if (a.order() != b.order()) {
    throw InputError("order mismatch: " + std::to_string(a.order()) + " vs " +
                     std::to_string(b.order()));
  }
  const MatchVector ma = match_vector(a);
  const MatchVector mb = match_vector(b);
  const QuasiOrder relation = quasi_compare(ma, mb);
  const double me_a = matching_energy_roots(ma).value;
  const double me_b = matching_energy_roots(mb).value;
  const double diff = relation == QuasiOrder::Equal ? 0.0 : me_b - me_a;
  if (cfg.format == "json") {
    Json j{{"relation", std::string(to_string(relation))},
           {"first", {{"graph6", graph6_encode(a)}, {"match_vector", to_json(ma)}, {"me", round_float(me_a)}}},
           {"second", {{"graph6", graph6_encode(b)}, {"match_vector", to_json(mb)}, {"me", round_float(me_b)}}},
           {"me_difference", round_float(diff)}};
    out << j.dump() << '\n';
  } else {
    auto joined = [](const MatchVector& mv) {
      std::string s;
      for (std::size_t t = 0; t < mv.size(); ++t) s += (t ? ";" : "") + mv[t].str();
      return s;
    };
    out << "relation,match_vector_first,match_vector_second,me_first,me_second,me_difference\n"
        << to_string(relation) << ',' << joined(ma) << ',' << joined(mb) << ','
        << format_float(me_a) << ',' << format_float(me_b) << ',' << format_float(diff) << '\n';
  }
  return kSuccess;
}

constexpr int kCorpusBound = 10;

int cmd_verify(const Config& cfg, std::istream& in, std::ostream& out) {
  if (!cfg.n) throw UsageError("verify needs --n");
  const int n = *cfg.n;
  const bool corpus = cfg.corpus.has_value();
  if (n < 2) throw UsageError("verify needs n >= 2");
  if (!corpus && n > kEnumeratorBound) {
    throw UsageError("built-in enumeration stops at n = " + std::to_string(kEnumeratorBound) +
                     "; supply a graph6 corpus with --input");
  }
  if (n > kCorpusBound) throw UsageError("sweeps stop at n = " + std::to_string(kCorpusBound));
  if (cfg.k && (*cfg.k < 1 || *cfg.k > n - 1)) throw UsageError("k must satisfy 1 <= k <= n-1");

  std::map<int, std::vector<Graph>> classes;
  if (corpus) {
    std::vector<std::pair<std::size_t, std::string>> errors;
    const auto graphs = decode_all(read_lines(*cfg.corpus, in), errors);
    if (!errors.empty()) {
      throw InputError("line " + std::to_string(errors.front().first) + ": " + errors.front().second);
    }
    std::set<std::string> seen;
    std::vector<Graph> members;
    for (const auto& [line, g] : graphs) {
      if (g.order() != n) {
        throw InputError("line " + std::to_string(line) + ": graph of order " +
                         std::to_string(g.order()) + " in a sweep of order " + std::to_string(n));
      }
      if (!g.is_connected()) continue;
      if (seen.insert(canonical_certificate(g)).second) members.push_back(g);
    }
    classes = classify(members);
  } else {
    classes = classify(enumerate_connected(n, cfg.workers));
  }

  std::vector<int> ks;
  if (cfg.k) {
    ks.push_back(*cfg.k);
  } else {
    for (int k = 1; k <= n - 1; ++k) ks.push_back(k);
  }
  bool all_unique = true;
  if (cfg.format == "csv") out << sweep_csv_header() << '\n';
  for (int k : ks) {
    const auto& members = classes[k];
    if (members.empty()) throw InputError("class k=" + std::to_string(k) + " is empty in the input");
    const auto report = verify_class(n, k, members, cfg.workers);
    all_unique = all_unique && report.unique;
    out << (cfg.format == "json" ? to_json(report).dump() : to_csv_row(report)) << '\n';
  }
  return all_unique ? kSuccess : kVerificationFailure;
}

// ---------------------------------------------------------------- oracle

struct SuiteLine {
  std::string check;
  bool passed = true;
  std::size_t cases = 0;
  std::string detail;
};

std::vector<Graph> connected_up_to(int max_n, int workers) {
  std::vector<Graph> all;
  for (int n = 1; n <= max_n; ++n) {
    for (auto& g : enumerate_connected(n, workers)) all.push_back(std::move(g));
  }
  return all;
}

Graph random_graph(std::mt19937_64& rng, int max_n) {
  const int n = std::uniform_int_distribution<int>(1, max_n)(rng);
  const double p = std::uniform_real_distribution<double>(0.0, 1.0)(rng);
  std::vector<Edge> edges;
  for (int j = 1; j < n; ++j) {
    for (int i = 0; i < j; ++i) {
      if (std::uniform_real_distribution<double>(0.0, 1.0)(rng) < p) edges.emplace_back(i, j);
    }
  }
  return Graph(n, edges);
}

SuiteLine count_failures(std::string check, const std::vector<Graph>& graphs, int workers,
                         const std::function<bool(const Graph&)>& ok) {
  const auto verdicts = parallel_map(graphs.size(), workers, [&](std::size_t i) { return ok(graphs[i]) ? 1 : 0; });
  SuiteLine line{std::move(check), true, graphs.size(), ""};
  for (std::size_t i = 0; i < graphs.size(); ++i) {
    if (!verdicts[i]) {
      line.passed = false;
      line.detail = "counterexample " + graph6_encode(graphs[i]);
      break;
    }
  }
  return line;
}

SuiteLine from_lemma(std::string check, const LemmaCheck& c) {
  return {std::move(check), c.passed, c.cases, c.counterexample ? "counterexample " + *c.counterexample : ""};
}

std::vector<SuiteLine> run_suite(const Config& cfg) {
  std::vector<SuiteLine> lines;
  const int workers = cfg.workers;
  if (cfg.suite == "matchvec") {
    std::mt19937_64 rng(cfg.seed);
    std::vector<Graph> randoms;
    for (int i = 0; i < cfg.trials.value_or(500); ++i) randoms.push_back(random_graph(rng, 10));
    auto agree = [](const Graph& g) { return match_vector(g) == match_vector_bruteforce(g); };
    lines.push_back(count_failures("random graphs n<=10", randoms, workers, agree));
    lines.push_back(count_failures("connected graphs n<=7", connected_up_to(7, workers), workers, agree));
  } else if (cfg.suite == "recurrence") {
    const auto graphs = connected_up_to(7, workers);
    lines.push_back(count_failures("edge recurrence", graphs, workers, [](const Graph& g) {
      MatchCache cache;
      for (auto [u, v] : g.edges()) {
        if (!edge_recurrence_check(g, u, v, &cache)) return false;
      }
      return true;
    }));
    lines.push_back(count_failures("vertex recurrence", graphs, workers, [](const Graph& g) {
      MatchCache cache;
      for (int u = 0; u < g.order(); ++u) {
        if (!vertex_recurrence_check(g, u, &cache)) return false;
      }
      return true;
    }));
  } else if (cfg.suite == "energy-routes") {
    const auto graphs = connected_up_to(7, workers);
    const auto gaps = parallel_map(graphs.size(), workers, [&](std::size_t i) {
      const auto mv = match_vector(graphs[i]);
      return std::abs(matching_energy_roots(mv).value - matching_energy_quadrature(mv).value);
    });
    const double worst = gaps.empty() ? 0.0 : *std::max_element(gaps.begin(), gaps.end());
    lines.push_back({"roots vs quadrature n<=7", worst <= 1e-5, graphs.size(),
                     "max discrepancy " + format_float(worst)});
  } else if (cfg.suite == "lemmas") {
    lines.push_back(from_lemma("edge deletion", verify_edge_deletion(cfg.trials.value_or(200), cfg.seed)));
    LemmaCheck trivial;
    for (int n = 2; n <= 7; ++n) {
      for (int k = 1; k < n; ++k) {
        auto c = verify_lemma_trivial_cut(n, k);
        trivial.cases += c.cases;
        if (!c.passed) trivial.fail(*c.counterexample);
      }
    }
    lines.push_back(from_lemma("trivial cut n<=7", trivial));
    LemmaCheck sides;
    for (int n = 2; n <= 8; ++n) {
      auto c = verify_lemma_side_bound(n);
      sides.cases += c.cases;
      if (!c.passed) sides.fail(*c.counterexample);
    }
    lines.push_back(from_lemma("min-cut side bound n<=8", sides));
    lines.push_back(from_lemma("operation I", verify_operation_I(cfg.trials.value_or(100), cfg.seed)));
    lines.push_back(from_lemma("edge count identity n<=14", verify_edge_count_identity(14)));
    lines.push_back(from_lemma("family inequalities m<=8", verify_family_inequalities(8)));
  } else {
    throw UsageError("unknown suite '" + cfg.suite +
                     "' (expected matchvec, recurrence, energy-routes or lemmas)");
  }
  return lines;
}

int cmd_oracle(const Config& cfg, std::ostream& out) {
  const auto lines = run_suite(cfg);
  bool ok = true;
  if (cfg.format == "csv") out << "suite,check,passed,cases,detail\n";
  for (const auto& l : lines) {
    ok = ok && l.passed;
    if (cfg.format == "json") {
      out << Json{{"suite", cfg.suite}, {"check", l.check}, {"passed", l.passed},
                  {"cases", l.cases}, {"detail", l.detail}}.dump()
          << '\n';
    } else {
      out << cfg.suite << ',' << l.check << ',' << (l.passed ? "true" : "false") << ',' << l.cases
          << ',' << l.detail << '\n';
    }
  }
  return ok ? kSuccess : kVerificationFailure;
}

}  // namespace

int run(const std::vector<std::string>& args, std::istream& in, std::ostream& out,
        std::ostream& err) {
  CLI::App app{"Matching energy, Hosoya index and edge connectivity toolkit"};
  app.require_subcommand(1);
  Config cfg;

  auto add_format = [&](CLI::App* sub) {
    sub->add_option("--format", cfg.format, "Output format")->check(CLI::IsMember({"csv", "json"}));
  };
  auto add_input = [&](CLI::App* sub) {
    sub->add_option("--input", cfg.input, "graph6 input file, or - for stdin");
  };

  auto* invariants = app.add_subcommand("invariants", "Invariants of every graph6 line in the input");
  add_input(invariants);
  add_format(invariants);

  auto* construct = app.add_subcommand("construct", "Print a family member as graph6");
  construct->add_option("--family", cfg.family, "apex or split")
      ->required()
      ->check(CLI::IsMember({"apex", "split"}));
  construct->add_option("--n", cfg.n, "Order")->required();
  construct->add_option("--k", cfg.k, "Edge connectivity")->required();
  construct->add_option("--m", cfg.m, "Small side order (split family)");

  auto* compare = app.add_subcommand("compare", "Quasi-order and ME of two graph6 graphs");
  add_input(compare);
  add_format(compare);

  auto* verify = app.add_subcommand("verify", "Extremal sweep over the classes of order n");
  verify->add_option("--n", cfg.n, "Order")->required();
  verify->add_option("--k", cfg.k, "Edge connectivity class (default: all)");
  verify->add_option("--input", cfg.corpus, "graph6 corpus of order-n graphs (default: built-in enumeration)");
  verify->add_option("--workers", cfg.workers, "Worker threads")->check(CLI::PositiveNumber);
  add_format(verify);

  auto* oracle = app.add_subcommand("oracle", "Run a brute-force cross-check suite");
  oracle->add_option("--suite", cfg.suite, "matchvec, recurrence, energy-routes or lemmas")->required();
  oracle->add_option("--trials", cfg.trials, "Random trials where the suite uses them")
      ->check(CLI::PositiveNumber);
  oracle->add_option("--seed", cfg.seed, "Seed for random trials");
  oracle->add_option("--workers", cfg.workers, "Worker threads")->check(CLI::PositiveNumber);
  add_format(oracle);

  std::vector<std::string> reversed(args.rbegin(), args.rend());
  try {
    app.parse(reversed);
  } catch (const CLI::ParseError& e) {
    const int code = app.exit(e, out, err);
    return code == 0 ? kSuccess : kUsageError;
  }

  try {
    if (invariants->parsed()) return cmd_invariants(cfg, in, out, err);
    if (construct->parsed()) return cmd_construct(cfg, out);
    if (compare->parsed()) return cmd_compare(cfg, in, out);
    if (verify->parsed()) return cmd_verify(cfg, in, out);
    if (oracle->parsed()) return cmd_oracle(cfg, out);
  } catch (const UsageError& e) {
    err << "usage error: " << e.what() << '\n';
    return kUsageError;
  } catch (const InputError& e) {
    err << "input error: " << e.what() << '\n';
    return kInputError;
  } catch (const Graph6Error& e) {
    err << "input error: " << e.what() << '\n';
    return kInputError;
  }
  return kUsageError;
}

}  // namespace menergy::cli
