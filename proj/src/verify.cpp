#include "menergy/verify.hpp"

#include <algorithm>
#include <cmath>
#include <mutex>

#include "menergy/energy.hpp"
#include "menergy/parallel.hpp"

namespace menergy {

namespace {

struct Candidate {
  std::string certificate;
  MatchVector counts;
  BigInt hosoya;
  std::optional<double> energy;

  double me() {
    if (!energy) energy = matching_energy_roots(counts).value;
    return *energy;
  }
};

// +1 if a beats b, -1 if b beats a, 0 for a tie.
int compare_energy(Candidate& a, Candidate& b) {
  switch (quasi_compare(a.counts, b.counts)) {
    case QuasiOrder::StrictlyAbove: return 1;
    case QuasiOrder::StrictlyBelow: return -1;
    case QuasiOrder::Equal: return 0;
    case QuasiOrder::Incomparable: break;
  }
  const double diff = a.me() - b.me();
  if (diff > kEnergySeparation) return 1;
  if (diff < -kEnergySeparation) return -1;
  return 0;
}

std::vector<std::string> certificates_of(const std::vector<Candidate>& cands,
                                         const std::vector<std::size_t>& picks) {
  std::vector<std::string> out;
  for (auto i : picks) out.push_back(cands[i].certificate);
  std::sort(out.begin(), out.end());
  return out;
}

std::vector<Graph> enumerate_class(int n, int k) {
  if (k < 1 || k > n - 1) {
    throw std::out_of_range("edge connectivity class needs 1 <= k <= n-1");
  }
  static std::mutex mutex;
  static std::map<int, std::map<int, std::vector<Graph>>> by_order;
  std::lock_guard lock(mutex);
  auto it = by_order.find(n);
  if (it == by_order.end()) {
    const auto all = enumerate_connected(n);
    it = by_order.emplace(n, classify(all)).first;
  }
  auto found = it->second.find(k);
  return found == it->second.end() ? std::vector<Graph>{} : found->second;
}

}  // namespace

SweepReport verify_class(int n, int k, std::span<const Graph> members, int workers) {
  SweepReport report;
  report.n = n;
  report.k = k;
  report.class_size = members.size();
  report.expected_certificate = canonical_certificate(apex_family(n, k));
  if (members.empty()) throw std::logic_error("empty edge-connectivity class");

  auto cands = parallel_map(members.size(), workers, [&](std::size_t i) {
    const Graph& g = members[i];
    if (g.order() != n) throw std::invalid_argument("class member of wrong order");
    Candidate c{canonical_certificate(g), match_vector(g), {}, {}};
    c.hosoya = hosoya_index(c.counts);
    return c;
  });
  std::sort(cands.begin(), cands.end(),
            [](const Candidate& a, const Candidate& b) { return a.certificate < b.certificate; });

  std::vector<std::size_t> me_leaders;
  for (std::size_t i = 0; i < cands.size(); ++i) {
    bool beaten = false;
    std::vector<std::size_t> kept;
    for (auto j : me_leaders) {
      const int verdict = compare_energy(cands[i], cands[j]);
      if (verdict < 0) {
        beaten = true;
        break;
      }
      if (verdict == 0) kept.push_back(j);
    }
    if (beaten) continue;
    kept.push_back(i);
    me_leaders = std::move(kept);
  }

  std::vector<std::size_t> z_leaders;
  for (std::size_t i = 0; i < cands.size(); ++i) {
    if (z_leaders.empty() || cands[i].hosoya > cands[z_leaders.front()].hosoya) {
      z_leaders = {i};
    } else if (cands[i].hosoya == cands[z_leaders.front()].hosoya) {
      z_leaders.push_back(i);
    }
  }

  report.me_maximizers = certificates_of(cands, me_leaders);
  report.z_maximizers = certificates_of(cands, z_leaders);
  const std::vector<std::string> expected{report.expected_certificate};
  report.unique = report.me_maximizers == expected && report.z_maximizers == expected;
  if (!report.unique) {
    for (const auto* list : {&report.me_maximizers, &report.z_maximizers}) {
      for (const auto& c : *list) {
        if (c != report.expected_certificate && !report.counterexample) report.counterexample = c;
      }
    }
    if (!report.counterexample) report.counterexample = report.expected_certificate;
  }
  return report;
}

SweepReport verify_theorem(int n, int k, int workers) {
  if (n < 2 || n > kEnumeratorBound) {
    throw std::out_of_range("built-in sweep supports 2 <= n <= " + std::to_string(kEnumeratorBound));
  }
  const auto members = enumerate_class(n, k);
  return verify_class(n, k, members, workers);
}

LemmaCheck verify_lemma_trivial_cut(int n, int k) {
  LemmaCheck check;
  const Graph apex = apex_family(n, k);
  const std::string apex_cert = canonical_certificate(apex);
  const MatchVector apex_mv = match_vector(apex);
  for (const Graph& g : enumerate_class(n, k)) {
    if (g.min_degree() != k) continue;
    if (canonical_certificate(g) == apex_cert) continue;
    ++check.cases;
    if (quasi_compare(match_vector(g), apex_mv) != QuasiOrder::StrictlyBelow) {
      check.fail(graph6_encode(g));
    }
  }
  return check;
}

LemmaCheck verify_quasi_dominance(int n, int k) {
  LemmaCheck check;
  const Graph apex = apex_family(n, k);
  const std::string apex_cert = canonical_certificate(apex);
  const MatchVector apex_mv = match_vector(apex);
  for (const Graph& g : enumerate_class(n, k)) {
    if (canonical_certificate(g) == apex_cert) continue;
    ++check.cases;
    if (quasi_compare(match_vector(g), apex_mv) != QuasiOrder::StrictlyBelow) {
      check.fail(graph6_encode(g));
    }
  }
  return check;
}

LemmaCheck verify_lemma_side_bound(int n) {
  LemmaCheck check;
  if (n < 2) return check;
  for (const Graph& g : enumerate_connected(n)) {
    const int k = edge_connectivity(g).k;
    if (g.min_degree() == k) continue;
    ++check.cases;
    for (const auto& cut : all_min_cut_sides(g)) {
      const int side = cut.side_order();
      if (side >= 2 && side < k) {
        check.fail(graph6_encode(g));
        break;
      }
    }
  }
  return check;
}

OperationTrial sample_operation_trial(std::mt19937_64& rng) {
  auto uniform = [&](int lo, int hi) { return std::uniform_int_distribution<int>(lo, hi)(rng); };
  OperationTrial trial;
  while (true) {
    const int n = uniform(4, 12);
    const int m = uniform(2, n / 2);
    const int k = uniform(2, m);
    const int big = n - m;

    std::vector<Edge> pairs;
    for (int u = 0; u < big; ++u) {
      for (int v = big; v < n; ++v) pairs.emplace_back(u, v);
    }
    std::shuffle(pairs.begin(), pairs.end(), rng);
    pairs.resize(static_cast<std::size_t>(k));

    std::vector<int> cross_degree(static_cast<std::size_t>(big), 0);
    for (auto [u, v] : pairs) ++cross_degree[u];
    std::vector<int> doubled, bare;
    for (int u = 0; u < big; ++u) {
      if (cross_degree[u] >= 2) doubled.push_back(u);
      if (cross_degree[u] == 0) bare.push_back(u);
    }
    if (doubled.empty() || bare.empty()) {
      ++trial.resamples;
      continue;
    }

    std::vector<Edge> edges = pairs;
    for (int u = 0; u < big; ++u) {
      for (int w = u + 1; w < big; ++w) edges.emplace_back(u, w);
    }
    for (int v = big; v < n; ++v) {
      for (int w = v + 1; w < n; ++w) edges.emplace_back(v, w);
    }
    trial.before = Graph(n, edges);
    trial.u1 = doubled[static_cast<std::size_t>(uniform(0, static_cast<int>(doubled.size()) - 1))];
    trial.u2 = bare[static_cast<std::size_t>(uniform(0, static_cast<int>(bare.size()) - 1))];
    std::vector<int> targets;
    for (auto [u, v] : pairs) {
      if (u == trial.u1) targets.push_back(v);
    }
    trial.v2 = targets[static_cast<std::size_t>(uniform(0, static_cast<int>(targets.size()) - 1))];
    return trial;
  }
}

LemmaCheck verify_operation_I(int trials, std::uint64_t seed) {
  if (trials < 1) throw std::invalid_argument("need at least one trial");
  std::mt19937_64 rng(seed);
  LemmaCheck check;
  for (int i = 0; i < trials; ++i) {
    const auto trial = sample_operation_trial(rng);
    const Graph after = operation_I(trial.before, trial.v2, trial.u1, trial.u2);
    ++check.cases;
    if (after.size() != trial.before.size() ||
        quasi_compare(match_vector(trial.before), match_vector(after)) != QuasiOrder::StrictlyBelow) {
      check.fail(graph6_encode(trial.before));
    }
  }
  return check;
}

LemmaCheck verify_edge_deletion(int trials, std::uint64_t seed) {
  std::mt19937_64 rng(seed);
  LemmaCheck check;
  while (static_cast<int>(check.cases) < trials) {
    const int n = std::uniform_int_distribution<int>(2, 10)(rng);
    const double p = std::uniform_real_distribution<double>(0.1, 1.0)(rng);
    std::vector<Edge> edges;
    for (int j = 1; j < n; ++j) {
      for (int i = 0; i < j; ++i) {
        if (std::uniform_real_distribution<double>(0.0, 1.0)(rng) < p) edges.emplace_back(i, j);
      }
    }
    if (edges.empty()) continue;
    const Graph g(n, edges);
    const auto [u, v] = edges[std::uniform_int_distribution<std::size_t>(0, edges.size() - 1)(rng)];
    const Graph h = delete_edge(g, u, v);
    ++check.cases;
    const MatchVector mg = match_vector(g);
    const MatchVector mh = match_vector(h);
    if (quasi_compare(mh, mg) != QuasiOrder::StrictlyBelow ||
        !(matching_energy_roots(mh).value < matching_energy_roots(mg).value)) {
      check.fail(graph6_encode(g));
    }
  }
  return check;
}

LemmaCheck verify_edge_count_identity(int max_n) {
  LemmaCheck check;
  for (int n = 4; n <= max_n; ++n) {
    for (int m = 2; m <= n / 2; ++m) {
      for (int k = 1; k <= m; ++k) {
        ++check.cases;
        const int apex = apex_family(n, k).size();
        const int split = split_family({n, k, m}).size();
        const int formula = m * (m - 1) / 2 + (n - m) * (n - m - 1) / 2 + k;
        if (apex - split != (m - 1) * (n - m - 1) || split != formula ||
            apex != (n - 1) * (n - 2) / 2 + k) {
          check.fail(graph6_encode(split_family({n, k, m})));
        }
      }
    }
  }
  return check;
}

LemmaCheck verify_family_inequalities(int max_m) {
  if (max_m < 1 || max_m > 10) throw std::out_of_range("family inequalities support 1 <= max_m <= 10");
  LemmaCheck check;
  MatchCache cache;
  auto dominated = [](QuasiOrder q) { return q == QuasiOrder::StrictlyBelow || q == QuasiOrder::Equal; };

  for (int m = 1; m <= max_m; ++m) {
    // K^1_{m,m} vs K^1_{2m-1,1}, and K^1_{m+1,m} vs K^1_{2m,1}.
    for (int n : {2 * m, 2 * m + 1}) {
      ++check.cases;
      const Graph split = split_family({n, 1, m});
      if (!dominated(quasi_compare(match_vector(split, &cache), match_vector(apex_family(n, 1), &cache)))) {
        check.fail(graph6_encode(split));
      }
    }
    for (int n = 2 * m; n <= 2 * max_m + 4; ++n) {
      for (int k = 1; k <= m; ++k) {
        ++check.cases;
        const Graph split = split_family({n, k, m});
        const Graph apex = apex_family(n, k);
        const QuasiOrder q = quasi_compare(match_vector(split, &cache), match_vector(apex, &cache));
        const bool ok = m >= 2 ? q == QuasiOrder::StrictlyBelow
                               : q == QuasiOrder::Equal && certificate_key(split) == certificate_key(apex);
        if (!ok) check.fail(graph6_encode(split));
      }
    }
  }
  return check;
}

}  // namespace menergy
