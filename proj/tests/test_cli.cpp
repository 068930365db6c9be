#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include "doctest.h"

#include <cstdio>
#include <cstdlib>
#include <fstream>
#include <string>
#include <sys/wait.h>
#include <vector>

#include "json.hpp"

using nlohmann::json;

namespace {

struct CliResult {
  int exit_code = -1;
  std::string out;
};

CliResult run_cli(const std::string& args) {
  std::string cmd = std::string(ECGRAPH_CLI_BIN) + " " + args + " 2>&1";
  FILE* pipe = popen(cmd.c_str(), "r");
  REQUIRE(pipe != nullptr);
  CliResult r;
  char buf[4096];
  size_t got = 0;
  while ((got = fread(buf, 1, sizeof buf, pipe)) > 0) r.out.append(buf, got);
  int status = pclose(pipe);
  r.exit_code = WIFEXITED(status) ? WEXITSTATUS(status) : -1;
  return r;
}

json parse(const CliResult& r) {
  json doc = json::parse(r.out, nullptr, false);
  REQUIRE_FALSE(doc.is_discarded());
  return doc;
}

bool check_ok(const json& doc, const std::string& name) {
  for (const auto& c : doc.at("checks"))
    if (c.at("name") == name) return c.at("ok").get<bool>();
  FAIL("missing check: ", name);
  return false;
}

std::string slurp(const std::string& path) {
  std::ifstream in(path, std::ios::binary);
  REQUIRE(in.good());
  return std::string((std::istreambuf_iterator<char>(in)),
                     std::istreambuf_iterator<char>());
}

}  // namespace

TEST_CASE("construct reports the graph and its sanity checks") {
  CliResult r = run_cli("construct --q 5 --e 3");
  CHECK(r.exit_code == 0);
  json doc = parse(r);
  CHECK(doc.at("command") == "construct");
  CHECK(doc.at("seed") == 0);
  CHECK(doc.at("params").at("q") == 5);
  CHECK(doc.at("params").at("e") == 3);
  CHECK(doc.at("params").at("n") == 125);
  CHECK(doc.at("params").at("degree") == 50);
  CHECK(doc.at("result").at("order") == 125);
  CHECK(doc.at("result").at("edge_count") == 3125);
  CHECK(doc.at("result").at("connection_set_size") == 50);
  std::vector<std::uint64_t> prefix =
      doc.at("result").at("connection_set_prefix");
  REQUIRE(prefix.size() == 16);
  CHECK(prefix[0] == 1);
  CHECK(prefix[1] == 4);
  CHECK(prefix[2] == 6);
  CHECK(check_ok(doc, "regular"));
  CHECK(check_ok(doc, "symmetric"));
  CHECK(check_ok(doc, "loop_free"));
}

TEST_CASE("construct exports an edge list on request") {
  std::string path = "cli_edges.txt";
  CliResult r = run_cli("construct --q 13 --edges-out " + path);
  CHECK(r.exit_code == 0);
  json doc = parse(r);
  CHECK(doc.at("result").at("edges_out") == path);
  CHECK(check_ok(doc, "edges_exported"));
  std::string content = slurp(path);
  CHECK(content.substr(0, 5) == "13 39");
  std::remove(path.c_str());
}

TEST_CASE("spectrum emits the exact classes") {
  CliResult r = run_cli("spectrum --q 5 --e 3");
  CHECK(r.exit_code == 0);
  json doc = parse(r);
  CHECK(doc.at("result").at("lambda").get<double>() ==
        doctest::Approx(40.45084971874737).epsilon(1e-9));
  const json& classes = doc.at("result").at("classes");
  REQUIRE(classes.size() == 4);
  CHECK(classes[0].at("a_coeff") == 100);
  CHECK(classes[0].at("multiplicity") == 1);
  CHECK(classes[0].at("value") == 50.0);
  CHECK(classes[2].at("multiplicity") == 120);
  CHECK(classes[3].at("a_coeff") == -25);
  CHECK(classes[3].at("b_coeff") == -25);
  CHECK(check_ok(doc, "spectrum_identities"));
}

TEST_CASE("check-ec exhaustive verification exits zero") {
  CliResult r = run_cli("check-ec --q 13 --t 2");
  CHECK(r.exit_code == 0);
  json doc = parse(r);
  CHECK(doc.at("result").at("verified") == true);
  CHECK(doc.at("result").at("method") == "exhaustive");
  CHECK(doc.at("result").at("distinct_residues") == false);
  CHECK(doc.at("result").at("search_space") == 312);
  CHECK(doc.at("result").at("witness_count_min") == 2);
  CHECK(check_ok(doc, "t_ec_verified"));
}

TEST_CASE("check-ec refutation exits one with the first counterexample") {
  CliResult r = run_cli("check-ec --q 5 --t 2");
  CHECK(r.exit_code == 1);
  json doc = parse(r);
  CHECK(doc.at("result").at("verified") == false);
  CHECK(doc.at("result").at("counterexample").at("a") ==
        json::array({0, 1}));
  CHECK(doc.at("result").at("counterexample").at("b") == json::array());
  CHECK_FALSE(check_ok(doc, "t_ec_verified"));
}

TEST_CASE("check-ec twin refutation and restricted verification") {
  CliResult plain = run_cli("check-ec --q 13 --e 3 --t 2");
  CHECK(plain.exit_code == 1);
  json pd = parse(plain);
  CHECK(pd.at("result").at("counterexample").at("a") == json::array({0}));
  CHECK(pd.at("result").at("counterexample").at("b") == json::array({13}));

  CliResult restricted =
      run_cli("check-ec --q 13 --e 3 --t 2 --distinct-residues");
  CHECK(restricted.exit_code == 0);
  json rd = parse(restricted);
  CHECK(rd.at("result").at("verified") == true);
  CHECK(rd.at("result").at("distinct_residues") == true);
  CHECK(rd.at("result").at("witness_count_min") == 338);
}

TEST_CASE("check-ec sufficient-condition method") {
  CliResult ok = run_cli("check-ec --q 13 --e 3 --t 2 --method sufficient");
  CHECK(ok.exit_code == 0);
  json doc = parse(ok);
  CHECK(doc.at("result").at("verified") == true);
  CHECK(doc.at("result").at("method") == "sufficient-condition");

  CliResult no = run_cli("check-ec --q 5 --e 3 --t 2 --method sufficient");
  CHECK(no.exit_code == 1);
  CHECK(parse(no).at("result").at("verified") == false);
}

TEST_CASE("budget refusal exits three") {
  CliResult r = run_cli("check-ec --q 13 --e 3 --t 4");
  CHECK(r.exit_code == 3);
  CHECK(r.out.find("budget") != std::string::npos);
}

TEST_CASE("invalid arguments exit two") {
  CliResult bad_q = run_cli("construct --q 7");
  CHECK(bad_q.exit_code == 2);
  CHECK(bad_q.out.find("error:") != std::string::npos);
  CHECK(run_cli("construct --q 5 --e 2").exit_code == 2);
  CHECK(run_cli("nonsense").exit_code == 2);
  CHECK(run_cli("construct --no-such-flag").exit_code == 2);
  CHECK(run_cli("--help").exit_code == 0);
}

TEST_CASE("output file holds the same bytes stdout would carry") {
  std::string path = "cli_out.json";
  CliResult direct = run_cli("spectrum --q 13 --e 1");
  CHECK(direct.exit_code == 0);
  CliResult filed = run_cli("spectrum --q 13 --e 1 --output " + path);
  CHECK(filed.exit_code == 0);
  CHECK(filed.out.empty());
  CHECK(slurp(path) == direct.out);
  std::remove(path.c_str());
}

TEST_CASE("text format flattens the report") {
  CliResult r = run_cli("find-q1 --t 2 --e 3 --format text");
  CHECK(r.exit_code == 0);
  CHECK(r.out.find("command = find-q1\n") != std::string::npos);
  CHECK(r.out.find("result.q = 13\n") != std::string::npos);
  CHECK(r.out.find("checks[0].ok = true\n") != std::string::npos);
}

TEST_CASE("find-q1 frozen answers") {
  json doc = parse(run_cli("find-q1 --t 4 --e 3"));
  CHECK(doc.at("result").at("q") == 409);
  CHECK(check_ok(doc, "found"));
  CHECK(parse(run_cli("find-q1 --t 1 --e 1")).at("result").at("q") == 5);
}

TEST_CASE("trend direction checks per exponent") {
  json cubes = parse(run_cli("trend --e 3 --q 5 --q 13 --q 17"));
  CHECK(check_ok(cubes, "expected_trend"));
  const json& inst = cubes.at("result").at("instances");
  REQUIRE(inst.size() == 3);
  CHECK(inst[0].at("q") == 5);
  CHECK(inst[0].at("ratio").get<double>() <
        inst[1].at("ratio").get<double>());
  CHECK(inst[1].at("ratio").get<double>() <
        inst[2].at("ratio").get<double>());
  CHECK(cubes.at("result").at("epsilon") == 1.0);

  json primes = parse(run_cli("trend --e 1 --q 5 --q 13 --q 17 --q 29"));
  CHECK(check_ok(primes, "expected_trend"));
  for (const auto& i : primes.at("result").at("instances"))
    CHECK(i.at("ratio").get<double>() <= 2.0);
}

TEST_CASE("mixing echoes its seed and is reproducible") {
  CliResult a = run_cli("mixing --q 5 --e 3 --samples 100 --seed 7");
  CHECK(a.exit_code == 0);
  json doc = parse(a);
  CHECK(doc.at("seed") == 7);
  CHECK(doc.at("result").at("samples") == 100);
  CHECK(check_ok(doc, "mixing_bound"));
  CliResult b = run_cli("mixing --q 5 --e 3 --samples 100 --seed 7");
  CHECK(a.out == b.out);
}

TEST_CASE("worker count does not change the bytes") {
  CliResult one = run_cli("check-ec --q 13 --e 3 --t 2 --threads 1");
  CliResult four = run_cli("check-ec --q 13 --e 3 --t 2 --threads 4");
  CHECK(one.exit_code == 1);
  CHECK(four.exit_code == 1);
  CHECK(one.out == four.out);
  CliResult r1 =
      run_cli("check-ec --q 13 --e 3 --t 2 --distinct-residues --threads 1");
  CliResult r4 =
      run_cli("check-ec --q 13 --e 3 --t 2 --distinct-residues --threads 4");
  CHECK(r1.exit_code == 0);
  CHECK(r1.out == r4.out);
}

TEST_CASE("report aggregates the per-graph summary") {
  CliResult r = run_cli("report --q 5 --e 3 --samples 50");
  CHECK(r.exit_code == 0);
  json doc = parse(r);
  CHECK(doc.at("result").at("edge_count") == 3125);
  CHECK(doc.at("result").at("lambda").get<double>() ==
        doctest::Approx(40.45084971874737).epsilon(1e-9));
  const json& suff = doc.at("result").at("sufficient_condition");
  REQUIRE(suff.size() == 4);
  CHECK(suff[0].at("established") == true);   // t = 1
  CHECK(suff[1].at("established") == false);  // t = 2
  CHECK(doc.at("result").at("cheeger_spectral_lower").get<double>() ==
        doctest::Approx(17.274575140626315).epsilon(1e-9));
  for (const std::string name :
       {"regular", "symmetric", "loop_free", "spectrum_identities",
        "mixing_bound"})
    CHECK(check_ok(doc, name));
}
