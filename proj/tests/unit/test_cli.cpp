#include <filesystem>
#include <fstream>
#include <sstream>

#include <json.hpp>

#include "common.hpp"
#include "degmc/cli.hpp"

using namespace degmc;
using nlohmann::json;

namespace {

struct Output {
  int code = 0;
  std::string text;
};

Output run(std::vector<std::string> args) {
  std::ostringstream out;
  const int code = dispatch(args, out);
  return {code, out.str()};
}

std::string temp_file(const std::string& name, const LabeledGraph& g) {
  const auto path = std::filesystem::temp_directory_path() / ("degmc_cli_" + name);
  std::ofstream f(path);
  write_graph(f, g);
  return path.string();
}

std::vector<json> ndjson(const std::string& text) {
  std::vector<json> out;
  std::istringstream in(text);
  for (std::string line; std::getline(in, line);)
    if (!line.empty()) out.push_back(json::parse(line));
  return out;
}

}  // namespace

TEST_CASE("enumerate and diagnose reports") {
  const Output one = run({"enumerate", "--instance", testutil::data("two_ones.json")});
  CHECK(one.code == 0);
  CHECK(one.text.find("\"count\":1") != std::string::npos);
  const json j = json::parse(one.text);
  CHECK(j["command"] == "enumerate");
  CHECK(j["version"] == kVersion);
  CHECK(j["instance_hash"].get<std::string>().size() == 16);

  const json d = json::parse(run({"diagnose", "--instance", testutil::data("six_2reg.json"), "--chain", "switch"}).text);
  CHECK(d["states"] == 70);
  CHECK(d["lambda1"].get<double>() < 1.0);
}

TEST_CASE("stability report") {
  const Output o = run({"stability", "--instance", testutil::data("quarter_bound.json")});
  CHECK(o.code == 0);
  CHECK(json::parse(o.text)["stable2"] == true);
}

TEST_CASE("usage errors") {
  const Output o = run({"sample", "--instance", testutil::data("six_2reg.json"), "--chain", "switch", "--steps", "10"});
  CHECK(o.code == 2);
  CHECK(json::parse(o.text).contains("error"));
  CHECK(run({"frobnicate"}).code == 2);
  const Output missing = run({"enumerate", "--instance", "/nonexistent/instance.json"});
  CHECK(missing.code == 1);
  CHECK(json::parse(missing.text)["error"] == "IoError");
  CHECK(run({"--help"}).code == 0);
}

TEST_CASE("sampling is reproducible") {
  const std::vector<std::string> args{"sample", "--instance", testutil::data("six_2reg.json"), "--chain", "js",
                                      "--steps", "500", "--seed", "7"};
  const Output a = run(args);
  const Output b = run(args);
  CHECK(a.code == 0);
  CHECK(a.text == b.text);
  const json j = json::parse(a.text);
  CHECK(j["steps"] == 500);
  CHECK(j["final"]["n"] == 6);
}

TEST_CASE("path subcommand emits NDJSON") {
  const std::string from = temp_file("from.txt", testutil::graph(6, {{0, 1}, {1, 2}, {2, 0}, {3, 4}, {4, 5}, {5, 3}}));
  const std::string to = temp_file("to.txt", testutil::graph(6, {{0, 1}, {1, 2}, {2, 3}, {3, 4}, {4, 5}, {5, 0}}));
  for (const char* chain : {"js", "switch"}) {
    const Output o = run({"path", "--instance", testutil::data("six_2reg.json"), "--chain", chain, "--from", from,
                          "--to", to});
    CHECK(o.code == 0);
    const auto lines = ndjson(o.text);
    REQUIRE_FALSE(lines.empty());
    CHECK(lines[0]["length"] == lines.size() - 1);
    for (std::size_t k = 1; k < lines.size(); ++k) CHECK(lines[k]["step"] == k - 1);
  }
}

TEST_CASE("repair subcommand") {
  const std::string g = temp_file("perturbed.txt", testutil::graph(6, {{0, 1}, {3, 4}, {0, 2}, {1, 5}, {2, 4}, {2, 5}}));
  const Output o = run({"repair", "--instance", testutil::data("pam_2reg.json"), "--graph", g});
  CHECK(o.code == 0);
  const json j = json::parse(o.text);
  CHECK(j["length"] == j["moves"].size());
  CHECK(j["final"]["edges"].size() == 6);
}
