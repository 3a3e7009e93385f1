#include <doctest.h>

#include <set>

#include "menergy/report.hpp"
#include "menergy/verify.hpp"

using namespace menergy;

TEST_CASE("enumeration matches the brute-force oracle") {
  const std::size_t expected[] = {0, 1, 1, 2, 6, 21, 112};
  for (int n = 1; n <= 6; ++n) {
    const auto fast = enumerate_connected(n);
    const auto slow = enumerate_connected_bruteforce(n);
    CHECK(fast.size() == expected[n]);
    REQUIRE(fast.size() == slow.size());
    for (std::size_t i = 0; i < fast.size(); ++i) {
      CHECK(canonical_certificate(fast[i]) == canonical_certificate(slow[i]));
      CHECK(fast[i].is_connected());
    }
  }
}

TEST_CASE("enumeration at n = 7") {
  const auto graphs = enumerate_connected(7);
  CHECK(graphs.size() == 853);
  std::set<std::string> certs;
  for (const auto& g : graphs) certs.insert(canonical_certificate(g));
  CHECK(certs.size() == 853);
  CHECK(enumerate_connected(7, 3).size() == 853);
  CHECK_THROWS(enumerate_connected(9));
}

TEST_CASE("classify") {
  const auto classes = classify(enumerate_connected(5));
  std::size_t total = 0;
  for (const auto& [k, members] : classes) {
    total += members.size();
    for (const auto& g : members) CHECK(edge_connectivity(g).k == k);
  }
  CHECK(total == 21);
  CHECK(classes.at(4).size() == 1);
  const std::vector<Graph> bad{disjoint_union(complete_graph(2), complete_graph(2))};
  CHECK_THROWS(classify(bad));
}

TEST_CASE("sweep on small orders") {
  for (int n = 2; n <= 6; ++n) {
    for (int k = 1; k <= n - 1; ++k) {
      const auto r = verify_theorem(n, k);
      CHECK(r.unique);
      CHECK(r.me_maximizers == std::vector<std::string>{canonical_certificate(apex_family(n, k))});
      CHECK_FALSE(r.counterexample);
    }
  }
  CHECK_THROWS(verify_theorem(9, 1));
  CHECK_THROWS(verify_theorem(5, 5));
}

TEST_CASE("sweep flags a class whose apex graph is missing") {
  const auto classes = classify(enumerate_connected(5));
  std::vector<Graph> members;
  for (const auto& g : classes.at(2)) {
    if (canonical_certificate(g) != canonical_certificate(apex_family(5, 2))) members.push_back(g);
  }
  const auto r = verify_class(5, 2, members);
  CHECK_FALSE(r.unique);
  CHECK(r.counterexample.has_value());
}

TEST_CASE("sweep is independent of worker count") {
  for (int k = 1; k <= 5; ++k) CHECK(verify_theorem(6, k, 1) == verify_theorem(6, k, 4));
}

TEST_CASE("lemma checks") {
  for (int n = 3; n <= 6; ++n) {
    for (int k = 1; k <= n - 1; ++k) {
      CHECK(verify_lemma_trivial_cut(n, k));
      CHECK(verify_quasi_dominance(n, k));
    }
    CHECK(verify_lemma_side_bound(n));
  }
  const auto op = verify_operation_I(20, 1);
  CHECK(op);
  CHECK(op.cases == 20);
  CHECK(verify_edge_deletion(30, 2));
  CHECK(verify_edge_count_identity(10));
  CHECK(verify_family_inequalities(4));
  CHECK_THROWS(verify_family_inequalities(11));
}

TEST_CASE("operation trials satisfy their preconditions") {
  std::mt19937_64 rng(99);
  for (int i = 0; i < 50; ++i) {
    const auto t = sample_operation_trial(rng);
    CHECK(t.before.adjacent(t.u1, t.v2));
    CHECK_FALSE(t.before.adjacent(t.u2, t.v2));
    CHECK(t.before.order() <= 12);
  }
}

TEST_CASE("report serialization round trip") {
  const auto r = verify_theorem(5, 2);
  CHECK(sweep_report_from_json(Json::parse(to_json(r).dump())) == r);
  const MatchVector mv = match_vector(complete_graph(12));
  CHECK(match_vector_from_json(to_json(mv), 12) == mv);
  CHECK(to_csv_row(r).rfind("5,2,", 0) == 0);
  CHECK(format_float(2.0) == "2");
}
