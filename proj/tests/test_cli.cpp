#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include <cstdio>
#include <filesystem>
#include <fstream>
#include <sstream>
#include <string>
#include <vector>

#include "doctest.h"
#include "json.hpp"
#include "lefschetz/cli.hpp"

namespace {

struct RunResult {
  int code;
  std::string out;
  std::string err;
};

RunResult run_cli(const std::vector<std::string>& args) {
  std::ostringstream out, err;
  const int code = lefschetz::run(args, out, err);
  return {code, out.str(), err.str()};
}

}  // namespace

TEST_CASE("hvector output") {
  const RunResult text = run_cli({"hvector", "-a", "3", "-b", "3", "-g", "3"});
  CHECK(text.code == 0);
  CHECK(text.out == "1 3 6 7 6 3 1\n");
  CHECK(text.err.empty());

  const RunResult csv = run_cli({"hvector", "-a", "3", "-b", "3", "-g", "3", "--format", "csv"});
  CHECK(csv.code == 0);
  CHECK(csv.out == "d,h\n0,1\n1,3\n2,6\n3,7\n4,6\n5,3\n6,1\n");

  const RunResult json = run_cli({"hvector", "-a", "3", "-b", "3", "-g", "3", "--format", "json"});
  const auto doc = nlohmann::json::parse(json.out);
  CHECK(doc["alpha"] == 3);
  CHECK(doc["socle_degree"] == 6);
  CHECK(doc["h"] == nlohmann::json::array({1, 3, 6, 7, 6, 3, 1}));

  // Parameters arrive sorted, so permuted input gives the same vector.
  CHECK(run_cli({"hvector", "-a", "3", "-b", "1", "-g", "2"}).out ==
        run_cli({"hvector", "-a", "1", "-b", "2", "-g", "3"}).out);
}

TEST_CASE("matrix output") {
  const RunResult text = run_cli({"matrix", "-a", "2", "-b", "2", "-g", "2"});
  CHECK(text.code == 0);
  CHECK(text.out == "1 1 0\n1 0 1\n0 1 1\n");

  const RunResult coo = run_cli({"matrix", "-a", "2", "-b", "2", "-g", "2", "--format", "coo"});
  CHECK(coo.code == 0);
  CHECK(coo.out == "1 1\n1 2\n2 1\n2 3\n3 2\n3 3\n");

  const RunResult degree = run_cli({"matrix", "-a", "3", "-b", "3", "-g", "3", "--degree", "0"});
  CHECK(degree.code == 0);
  CHECK(degree.out == "1\n1\n1\n");

  CHECK(run_cli({"matrix", "-a", "1", "-b", "1", "-g", "1"}).code == 1);
}

TEST_CASE("wlp verdicts") {
  SUBCASE("single json record") {
    const RunResult r = run_cli({"wlp", "-a", "3", "-b", "3", "-g", "3", "--char", "3", "--format", "json"});
    REQUIRE(r.code == 0);
    const auto doc = nlohmann::json::parse(r.out);
    CHECK(doc["alpha"] == 3);
    CHECK(doc["p"] == 3);
    CHECK(doc["holds"] == false);
    CHECK(doc["method"] == "theorem");
    CHECK(doc["witness"]["kind"] == "divisor");
    REQUIRE(doc["witness"]["terms"].size() == 2);
    CHECK(doc["witness"]["terms"][0]["quantity"] == "H(1)");
    CHECK(doc["witness"]["terms"][0]["valuation"] == 1);
  }
  SUBCASE("both methods as an array") {
    const RunResult r = run_cli(
        {"wlp", "-a", "3", "-b", "3", "-g", "3", "--char", "3", "--method", "all", "--format", "json"});
    REQUIRE(r.code == 0);
    const auto doc = nlohmann::json::parse(r.out);
    REQUIRE(doc.is_array());
    REQUIRE(doc.size() == 2);
    CHECK(doc[0]["method"] == "direct");
    CHECK(doc[0]["witness"]["rank"] == 5);
    CHECK(doc[0]["witness"]["expected"] == 6);
    CHECK(doc[1]["method"] == "theorem");
    CHECK(doc[0]["holds"] == doc[1]["holds"]);
  }
  SUBCASE("csv quotes the witness column") {
    const RunResult r = run_cli({"wlp", "-a", "2", "-b", "2", "-g", "2", "--char", "2", "--format", "csv"});
    CHECK(r.code == 0);
    CHECK(r.out ==
          "alpha,beta,gamma,p,holds,method,witness\n"
          "2,2,2,2,false,theorem,\"v_2(M(1,1,1))=1\"\n");
  }
  SUBCASE("direct method in characteristic zero") {
    const RunResult r = run_cli({"wlp", "-a", "9", "-b", "9", "-g", "9", "--method", "direct"});
    CHECK(r.code == 0);
    CHECK(r.out.find("holds") != std::string::npos);
    CHECK(r.out.find("nonzero-determinant") != std::string::npos);
  }
  SUBCASE("composite characteristic is a usage error") {
    const RunResult r = run_cli({"wlp", "-a", "2", "-b", "2", "-g", "2", "--char", "4"});
    CHECK(r.code == 1);
    CHECK(r.err.find("error:") == 0);
  }
}

TEST_CASE("primes subcommand compares both enumerations") {
  const RunResult r = run_cli({"primes", "-a", "3", "-b", "3", "-g", "3"});
  CHECK(r.code == 0);
  CHECK(r.out == "3\n");
  CHECK(run_cli({"primes", "-a", "2", "-b", "2", "-g", "2", "--method", "theorem"}).out == "2\n");
  CHECK(run_cli({"primes", "-a", "2", "-b", "3", "-g", "9"}).out == "\n");
}

TEST_CASE("ppcount output and agreement") {
  const RunResult all = run_cli({"ppcount", "3", "3", "3", "--method", "all"});
  CHECK(all.code == 0);
  CHECK(all.out ==
        "enumeration 980\n"
        "transfer 980\n"
        "determinant 980\n"
        "macmahon 980\n"
        "agree true\n");

  const RunResult one = run_cli({"ppcount", "2", "6", "8", "--method", "macmahon"});
  CHECK(one.code == 0);
  CHECK(one.out == "2147145\n");

  CHECK(run_cli({"ppcount", "3", "3"}).code == 1);
  CHECK(run_cli({"ppcount", "3", "3", "3", "--method", "abacus"}).code == 1);
}

TEST_CASE("factor output") {
  const RunResult r = run_cli({"factor", "50", "50", "50", "--format", "json"});
  REQUIRE(r.code == 0);
  const auto doc = nlohmann::json::parse(r.out);
  CHECK(doc["box"] == nlohmann::json::array({50, 50, 50}));
  std::map<long long, long long> factors;
  for (const auto& f : doc["factors"]) factors[f["p"]] = f["exponent"];
  for (long long p : {2LL, 5LL, 11LL, 101LL, 103LL, 107LL, 109LL, 113LL, 127LL, 131LL, 137LL, 139LL}) {
    CAPTURE(p);
    CHECK(factors.count(p) == 1);
  }
  CHECK(factors[2] == 34);
  CHECK(factors[101] == 49);

  CHECK(run_cli({"factor", "1", "1", "1"}).out == "2 1\n");
}

TEST_CASE("window subcommand") {
  SUBCASE("box mode") {
    const RunResult r = run_cli({"window", "50", "50", "50"});
    CHECK(r.code == 0);
    CHECK(r.out ==
          "window 100 148\n"
          "primes 2 5 11 101 103 107 109 113 127 131 137 139\n");
  }
  SUBCASE("algebra mode lists prime powers") {
    const RunResult r = run_cli({"window", "-a", "100", "-b", "100", "-g", "100", "--format", "json"});
    REQUIRE(r.code == 0);
    const auto doc = nlohmann::json::parse(r.out);
    CHECK(doc["window"]["lo"] == 100);
    CHECK(doc["window"]["hi"] == 148);
    REQUIRE(doc["prime_powers"].size() == 12);
    CHECK(doc["prime_powers"][0]["prime"] == 2);
    CHECK(doc["prime_powers"][0]["exponent"] == 7);
    CHECK(doc["prime_powers"][0]["value"] == 128);
    CHECK(doc["primes"].size() == 12);
  }
  SUBCASE("modes are mutually exclusive") {
    CHECK(run_cli({"window", "-a", "2", "-b", "3", "-g", "9", "12", "12", "12"}).code == 1);
    CHECK(run_cli({"window"}).code == 1);
  }
}

TEST_CASE("conjecture table") {
  const RunResult r = run_cli({"conjecture", "--dmax", "5", "--format", "csv"});
  CHECK(r.code == 0);
  CHECK(r.out ==
        "d,holds,predicted,agree\n"
        "1,true,true,true\n"
        "2,false,false,true\n"
        "3,true,true,true\n"
        "4,false,false,true\n"
        "5,true,true,true\n");
}

TEST_CASE("scan is deterministic and cross-validates") {
  const RunResult a = run_cli({"scan", "--max", "3", "--format", "csv"});
  const RunResult b = run_cli({"scan", "--max", "3", "--format", "csv"});
  CHECK(a.code == 0);
  CHECK(a.out == b.out);
  CHECK(a.out.find("2,2,2,2,false,direct,rank=2;expected=3") != std::string::npos);
  CHECK(a.out.find("3,3,3,3,false,direct,rank=5;expected=6") != std::string::npos);
  CHECK(a.out.find("1,1,1,2,true,trivial,trivial-region") != std::string::npos);

  const RunResult cv = run_cli({"scan", "--max", "4", "--cross-validate", "--format", "csv"});
  CHECK(cv.code == 0);
  CHECK(cv.err.empty());

  const RunResult capped = run_cli({"scan", "--max", "4", "--max-sum", "6", "--format", "csv"});
  CHECK(capped.code == 0);
  CHECK(capped.out.find("2,2,2,") != std::string::npos);
  CHECK(capped.out.find("3,3,3,") == std::string::npos);
}

TEST_CASE("reports can be written to a file atomically") {
  const std::filesystem::path path = std::filesystem::temp_directory_path() / "lefschetz_cli_test.csv";
  std::filesystem::remove(path);

  const RunResult direct = run_cli({"scan", "--max", "3", "--format", "csv"});
  const RunResult filed = run_cli({"scan", "--max", "3", "--format", "csv", "--out", path.string()});
  CHECK(filed.code == 0);
  CHECK(filed.out.empty());

  std::ifstream in(path);
  std::stringstream content;
  content << in.rdbuf();
  CHECK(content.str() == direct.out);
  CHECK_FALSE(std::filesystem::exists(path.string() + ".tmp"));
  std::filesystem::remove(path);
}

TEST_CASE("usage errors exit with code one") {
  CHECK(run_cli({}).code == 1);
  CHECK(run_cli({"frobnicate"}).code == 1);
  CHECK(run_cli({"wlp", "-a", "2", "-b", "2"}).code == 1);
  CHECK(run_cli({"hvector", "-a", "2", "-b", "2", "-g", "2", "--format", "yaml"}).code == 1);
  CHECK(run_cli({"wlp", "-a", "2", "-b", "2", "-g", "2", "--method", "oracle"}).code == 1);
  CHECK(run_cli({"hvector", "-a", "0", "-b", "2", "-g", "2"}).code == 1);
  CHECK(run_cli({"--help"}).code == 0);
  CHECK(run_cli({"wlp", "--help"}).code == 0);
}
