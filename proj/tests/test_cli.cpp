#include "ssice/cli.hpp"

#include <doctest.h>
#include <json.hpp>

#include <cstdio>
#include <fstream>
#include <sstream>

using ssice::cli::run;
using Json = nlohmann::json;

namespace {

struct Result {
  int code;
  std::string out, err;
  Json json() const { return Json::parse(out); }
};

Result cli(std::vector<std::string> args) {
  std::ostringstream out, err;
  const int code = run(args, out, err);
  return {code, out.str(), err.str()};
}

const std::vector<std::string> kExample = {"partition", "--model", "reflecting", "--L", "1", "--lambda", "0",
                                           "--z",       "1/2",     "--q",        "2"};

std::vector<std::string> with(std::vector<std::string> base, std::initializer_list<std::string> extra) {
  base.insert(base.end(), extra);
  return base;
}

}  // namespace

TEST_CASE("partition prints the exact value") {
  const auto r = cli(kExample);
  CHECK(r.code == 0);
  CHECK(r.json()["Z"] == "1/2");
  CHECK(r.json()["config"]["command"] == "partition");
  CHECK(cli(with(kExample, {"--value-only"})).out == "1/2\n");
  CHECK(cli(with(kExample, {"--method", "transfer", "--value-only"})).out == "1/2\n");
}

TEST_CASE("verify exit codes") {
  const auto ok = cli({"verify", "--relation", "ybe-gg", "--points", "20", "--seed", "1"});
  CHECK(ok.code == 0);
  CHECK(ok.json()["report"]["boundaries_tested"] == 1280);

  const auto bad = cli({"verify", "--relation", "ybe-gg", "--corrupt", "gamma"});
  CHECK(bad.code == 1);
  const auto failures = bad.json()["report"]["failures"];
  REQUIRE_FALSE(failures.empty());
  CHECK(failures[0]["boundary"].size() == 6);
  CHECK(failures[0]["lhs"] != failures[0]["rhs"]);

  CHECK(cli({"verify", "--relation", "functional-weyl", "--points", "2"}).code == 0);
  CHECK(cli({"verify", "--relation", "dl", "--points", "2"}).code == 0);
}

TEST_CASE("usage errors exit 2") {
  CHECK(cli({}).code == 2);
  CHECK(cli({"verify"}).code == 2);
  CHECK(cli({"verify", "--relation", "nope"}).code == 2);
  CHECK(cli({"verify", "--relation", "ybe-gg", "--corrupt", "nope"}).code == 2);
  CHECK(cli({"partition", "--model", "x", "--L", "1", "--lambda", "0", "--z", "1/2", "--q", "2"}).code == 2);
  CHECK(cli({"partition", "--model", "reflecting", "--L", "1", "--lambda", "0", "--z", "1/0", "--q", "2"}).code == 2);
  CHECK(cli({"partition", "--model", "reflecting", "--L", "1", "--lambda", "3", "--z", "1/2", "--q", "2"}).code == 2);
  CHECK(cli(with(kExample, {"--n", "2"})).code == 2);
  CHECK(cli({"sample", "--model", "reflecting", "--L", "2", "--z", "3/4", "--q", "2"}).code == 2);
  CHECK(cli({"render", "--model", "reflecting", "--L", "2", "--lambda", "0", "--z", "1/2", "--q", "2", "--format",
             "png"})
            .code == 2);
  CHECK(cli({"--jobs", "0", "suite"}).code == 2);
}

TEST_CASE("help exits 0") { CHECK(cli({"--help"}).code == 0); }

TEST_CASE("config file merges under explicit flags") {
  const std::string path = "ssice_test_config.txt";
  {
    std::ofstream f(path);
    f << "# verify settings\nrelation = ybe-dd\npoints = 3\nseed=9\njobs = 2\nparanoid = false\n";
  }
  const auto r = cli({"--config", path, "verify", "--points", "2"});
  std::remove(path.c_str());
  REQUIRE(r.code == 0);
  const auto c = r.json()["config"];
  CHECK(c["relation"] == "ybe-dd");
  CHECK(c["points"] == 2);
  CHECK(c["seed"] == 9);
  CHECK(c["jobs"] == 2);

  CHECK(ssice::cli::merge_config({"verify"}, "points = 4\n") == std::vector<std::string>{"verify", "--points", "4"});
  CHECK(ssice::cli::merge_config({"--jobs", "3", "suite"}, "jobs = 2\nseed = 5\n") ==
        std::vector<std::string>{"--jobs", "3", "suite", "--seed", "5"});
  CHECK_THROWS(ssice::cli::merge_config({"suite"}, "no equals sign\n"));
  CHECK(cli({"--config", "/nonexistent/x", "suite"}).code == 2);
}

TEST_CASE("sample is reproducible") {
  const std::vector<std::string> args = {"sample", "--model", "signed", "--L", "3", "--z", "3/4,3/4",
                                         "--q",    "1/2",     "--samples", "2000", "--seed", "4"};
  const auto a = cli(args), b = cli(args);
  CHECK(a.code == 0);
  CHECK(a.out == b.out);
  const auto j = a.json();
  std::uint64_t total = j["summary"]["escape_count"];
  for (const auto& e : j["summary"]["histogram"]) total += e["count"].get<std::uint64_t>();
  CHECK(total == 2000);
  CHECK(j["statistics"]["chi_square"].is_string());
}

TEST_CASE("render") {
  const std::vector<std::string> args = {"render", "--model", "signed", "--L", "4", "--lambda", "2,1", "--sigma",
                                         "-1,-2",  "--tau",   "1,2",    "--z", "2/7,1/5", "--q", "2"};
  const auto ascii = cli(args);
  CHECK(ascii.code == 0);
  CHECK(ascii.out.find("strands: 2") != std::string::npos);
  CHECK(cli(with(args, {"--format", "svg"})).out.rfind("<svg", 0) == 0);
  CHECK(cli(with(args, {"--index", "1"})).code == 2);
}

TEST_CASE("suite subset") {
  const auto r = cli({"suite", "--only", "1,3"});
  CHECK(r.code == 0);
  CHECK(r.json()["criteria"].size() == 2);
  CHECK(r.err.find("PASS 1") != std::string::npos);
}
