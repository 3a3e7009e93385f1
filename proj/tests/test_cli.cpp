#include <doctest.h>

#include <sstream>

#include "cli.hpp"
#include "menergy/report.hpp"

using namespace menergy;

namespace {

struct Run {
  int code;
  std::string out;
  std::string err;
};

Run run(std::vector<std::string> args, const std::string& input = "") {
  std::istringstream in(input);
  std::ostringstream out, err;
  const int code = cli::run(args, in, out, err);
  return {code, out.str(), err.str()};
}

std::vector<std::string> lines_of(const std::string& text) {
  std::vector<std::string> out;
  std::istringstream s(text);
  for (std::string line; std::getline(s, line);) out.push_back(line);
  return out;
}

}  // namespace

TEST_CASE("construct") {
  const auto apex = run({"construct", "--family", "apex", "--n", "5", "--k", "2"});
  CHECK(apex.code == cli::kSuccess);
  CHECK(graph6_decode(lines_of(apex.out).at(0)) == apex_family(5, 2));

  const auto split = run({"construct", "--family", "split", "--n", "8", "--k", "2", "--m", "3"});
  CHECK(split.code == cli::kSuccess);
  CHECK(graph6_decode(lines_of(split.out).at(0)) == split_family({8, 2, 3}));

  CHECK(run({"construct", "--family", "split", "--n", "6", "--k", "4", "--m", "3"}).code == cli::kUsageError);
  CHECK(run({"construct", "--family", "apex", "--n", "5", "--k", "5"}).code == cli::kUsageError);
  CHECK(run({"construct", "--family", "split", "--n", "6", "--k", "1"}).code == cli::kUsageError);
  CHECK(run({"construct", "--family", "wheel", "--n", "6", "--k", "1"}).code == cli::kUsageError);
}

TEST_CASE("invariants") {
  const auto csv = run({"invariants"}, "C~\n\nBw\n");
  CHECK(csv.code == cli::kSuccess);
  const auto rows = lines_of(csv.out);
  REQUIRE(rows.size() == 3);
  CHECK(rows[0] == invariants_csv_header());
  CHECK(rows[1].rfind("C~,4,6,3,3,1;6;3,10,6.15275600528,", 0) == 0);

  const auto json = run({"invariants", "--format", "json"}, "C~\n");
  const auto j = Json::parse(lines_of(json.out).at(0));
  CHECK(j.at("hosoya") == "10");
  CHECK(j.at("energy").at("value") == 6.0);

  const auto empty = run({"invariants"}, "");
  CHECK(empty.code == cli::kSuccess);
  CHECK(lines_of(empty.out).size() == 1);

  const auto bad = run({"invariants", "--format", "json"}, "C~\nxyz\nBw\n");
  CHECK(bad.code == cli::kInputError);
  const auto out = lines_of(bad.out);
  REQUIRE(out.size() == 3);
  CHECK(Json::parse(out[1]).at("line") == 2);
  CHECK(bad.err.find("line 2") != std::string::npos);
}

TEST_CASE("compare") {
  const auto r = run({"compare", "--format", "json"}, "Bw\nBW\n");
  CHECK(r.code == cli::kSuccess);
  const auto j = Json::parse(lines_of(r.out).at(0));
  CHECK(j.at("relation") == "StrictlyAbove");

  const auto same = run({"compare", "--format", "json"}, "C~\nC~\n");
  CHECK(Json::parse(lines_of(same.out).at(0)).at("me_difference") == 0.0);

  CHECK(run({"compare"}, "C~\n").code == cli::kInputError);
  CHECK(run({"compare"}, "C~\nBw\n").code == cli::kInputError);
}

TEST_CASE("verify") {
  const auto r = run({"verify", "--n", "5", "--format", "json"});
  CHECK(r.code == cli::kSuccess);
  const auto out = lines_of(r.out);
  REQUIRE(out.size() == 4);
  for (std::size_t i = 0; i < out.size(); ++i) {
    const auto report = sweep_report_from_json(Json::parse(out[i]));
    CHECK(report == verify_theorem(5, static_cast<int>(i) + 1));
  }

  CHECK(run({"verify", "--n", "12"}).code == cli::kUsageError);
  CHECK(run({"verify", "--n", "9"}).code == cli::kUsageError);
  CHECK(run({"verify", "--n", "5", "--k", "5"}).code == cli::kUsageError);
  CHECK(run({"verify", "--n", "5", "--workers", "0"}).code == cli::kUsageError);
}

TEST_CASE("verify over a corpus") {
  std::string corpus;
  for (const auto& g : enumerate_connected(5)) corpus += graph6_encode(g) + "\n";
  const auto r = run({"verify", "--n", "5", "--k", "2", "--input", "-"}, corpus);
  CHECK(r.code == cli::kSuccess);
  CHECK(lines_of(r.out).at(1) == to_csv_row(verify_theorem(5, 2)));

  const std::string apex = graph6_encode(apex_family(5, 2));
  std::string without;
  for (const auto& g : enumerate_connected(5)) {
    if (canonical_certificate(g) != canonical_certificate(apex_family(5, 2))) without += graph6_encode(g) + "\n";
  }
  CHECK(run({"verify", "--n", "5", "--k", "2", "--input", "-"}, without).code == cli::kVerificationFailure);
  CHECK(run({"verify", "--n", "5", "--input", "-"}, "C~\n").code == cli::kInputError);
}

TEST_CASE("oracle") {
  const auto r = run({"oracle", "--suite", "recurrence"});
  CHECK(r.code == cli::kSuccess);
  CHECK(r.out.find("false") == std::string::npos);
  CHECK(run({"oracle", "--suite", "nothing"}).code == cli::kUsageError);
  CHECK(run({"bogus"}).code == cli::kUsageError);
  CHECK(run({}).code == cli::kUsageError);
}
