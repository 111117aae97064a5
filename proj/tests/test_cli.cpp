#include <doctest.h>

#include <filesystem>
#include <fstream>
#include <sstream>
#include <vector>

#include <json.hpp>

#include "dowlab/cli.hpp"

namespace {

struct Run {
  int code;
  std::string out, err;
};

Run run(std::vector<std::string> args) {
  args.insert(args.begin(), "dowlab");
  std::vector<const char*> argv;
  for (const auto& a : args) argv.push_back(a.c_str());
  std::ostringstream out, err;
  const int code = dowlab::run_cli(static_cast<int>(argv.size()), argv.data(), out, err);
  return {code, out.str(), err.str()};
}

}  // namespace

TEST_CASE("triangle") {
  auto r = run({"triangle", "--family", "Wdeg", "--m", "1", "--symbolic", "--n-max", "2", "--format", "csv"});
  CHECK(r.code == 0);
  CHECK(r.out == "1\n1, 1\n1 - l, 3 - l, 1\n");
  r = run({"triangle", "--family", "V", "--m", "1", "--lambda", "0", "--n-max", "1"});
  CHECK(r.out == "1\n-1, 1\n");
  r = run({"triangle", "--family", "Wr", "--m", "2", "--r", "3", "--n-max", "3", "--format", "json"});
  CHECK(r.code == 0);
  CHECK(nlohmann::json::parse(r.out)["rows"].size() == 4);
  r = run({"triangle", "--family", "S2", "--n-max", "3", "--format", "latex"});
  CHECK(r.out.rfind("\\begin{tabular}", 0) == 0);
}

TEST_CASE("eval") {
  CHECK(run({"eval", "--family", "W", "--m", "2", "--n", "2", "--k", "1"}).out == "4 - l\n");
  CHECK(run({"eval", "--family", "W", "--m", "1", "--n", "2", "--x", "1"}).out == "5 - 2*l\n");
  CHECK(run({"eval", "--poly", "1 - 3*l + 2*l^2", "--lambda", "1/2"}).out == "0\n");
  const auto j = nlohmann::json::parse(run({"eval", "--family", "V", "--m", "3", "--n", "2", "--k", "0", "--format", "json"}).out);
  CHECK(j["value"] == "4");
}

TEST_CASE("verify and dobinski") {
  auto r = run({"verify", "--id", "lemma15", "--n-max", "10", "--seed", "7"});
  CHECK(r.code == 0);
  CHECK(nlohmann::json::parse(r.out)["reports"][0]["status"] == "pass");
  r = run({"verify", "--n-max", "4", "--m-set", "1,2", "--r-set", "1"});
  CHECK(r.code == 0);
  r = run({"dobinski", "--m", "1", "--n", "1", "--x", "1", "--lambda", "0", "--terms", "50", "--tol", "1e-9"});
  CHECK(r.code == 0);
  r = run({"dobinski", "--m", "2", "--n", "6", "--x", "1", "--lambda", "0.25", "--terms", "200", "--format", "json"});
  CHECK(r.code == 0);
  CHECK(nlohmann::json::parse(r.out).contains("exact"));
  CHECK(run({"dobinski", "--m", "1", "--n", "4", "--x", "5", "--lambda", "0", "--terms", "3"}).code == 1);
}

TEST_CASE("usage errors") {
  CHECK(run({"verify", "--id", "nosuch"}).code == 2);
  CHECK(run({"triangle", "--family", "Q", "--n-max", "3"}).code == 2);
  CHECK(run({"triangle", "--family", "W", "--m", "0", "--n-max", "3"}).code == 2);
  CHECK(run({"triangle", "--family", "W", "--n-max", "3", "--format", "xml"}).code == 2);
  CHECK(run({"triangle", "--bogus"}).code == 2);
  CHECK(run({"eval", "--poly", "1 +"}).code == 2);
  CHECK(run({"dobinski", "--m", "1", "--n", "2", "--x", "1", "--lambda", "symbolic"}).code == 2);
  CHECK(run({}).code == 2);
}

TEST_CASE("output file") {
  const auto dir = std::filesystem::temp_directory_path() / "dowlab_cli_test";
  std::filesystem::create_directories(dir);
  const auto path = dir / "w.csv";
  std::filesystem::remove(path);
  const auto r = run({"triangle", "--family", "W", "--m", "1", "--n-max", "2", "--out", path.string()});
  CHECK(r.code == 0);
  CHECK(r.out.empty());
  std::ifstream in(path);
  std::stringstream ss;
  ss << in.rdbuf();
  CHECK(ss.str() == "1\n1, 1\n1 - l, 3 - l, 1\n");
  CHECK(!std::filesystem::exists(path.string() + ".tmp"));
  std::filesystem::remove_all(dir);
}
