#include <string>
#include <vector>

#include "doctest.h"
#include "inoue/cli.hpp"

using nlohmann::json;
using inoue::cli::run;

namespace {

json parse(const std::vector<std::string>& args) {
  const auto r = run(args);
  REQUIRE(r.exit_code == 0);
  return json::parse(r.output);
}

}  // namespace

TEST_CASE("mixed quotient JSON has the expected label and schema") {
  const json j = parse({"quotient", "--m", "6", "--kind", "mixed", "--l", "2", "--j", "1", "--json"});
  CHECK(j["schema"] == 1);
  CHECK(j["command"] == "quotient");
  CHECK(j["result_label"] == "S(3, alpha^2)");
  CHECK(j["parameters"]["j"] == 1);
  CHECK(j["report"]["final_cycle"]["length"] == 3);
  CHECK(j["failed_checks"].empty());
  for (const auto& c : j["checks"]) {
    CHECK(c["status"] == "pass");
    CHECK(c.contains("paper_anchor"));
    CHECK(c.contains("details"));
  }
}

TEST_CASE("JSON output round-trips") {
  for (const auto& args : std::vector<std::vector<std::string>>{
           {"verify", "--m", "2", "--json"},
           {"structure", "--m", "3", "--json"},
           {"quotient", "--m", "4", "--kind", "involution", "--json"},
           {"quotient", "--m", "2", "--kind", "cover", "--l", "3", "--root", "1", "--json"},
           {"dualgraph", "--m", "6", "--kind", "torus", "--l", "2", "--json"}}) {
    const auto r = run(args);
    REQUIRE(r.exit_code == 0);
    const json j = json::parse(r.output);
    CHECK(json::parse(j.dump()) == j);
    CHECK(j.dump(2) + "\n" == r.output);
  }
}

TEST_CASE("torus quotient text names the result") {
  const auto r = run({"quotient", "--m", "2", "--kind", "torus", "--l", "3"});
  CHECK(r.exit_code == 0);
  CHECK(r.output.find("S(6, alpha)") != std::string::npos);
}

TEST_CASE("free quotient selects the root") {
  const json j = parse({"quotient", "--m", "4", "--kind", "free", "--root", "1", "--json"});
  CHECK(j["result_label"] == "S(1, zeta_4*beta)");
}

TEST_CASE("verify exits 0 for single m and ranges") {
  CHECK(run({"verify", "--m", "4"}).exit_code == 0);
  const json j = parse({"verify", "--m-range", "1..3", "--json"});
  CHECK(j["checks"].front()["name"].get<std::string>().rfind("m=1: ", 0) == 0);
  CHECK(j["checks"].back()["name"].get<std::string>().rfind("m=3: ", 0) == 0);
}

TEST_CASE("help exits 0") {
  const auto r = run({"--help"});
  CHECK(r.exit_code == 0);
  CHECK(r.output.find("Usage") != std::string::npos);
}

TEST_CASE("invalid flags exit 2 with usage") {
  for (const auto& args : std::vector<std::vector<std::string>>{
           {},
           {"nonsense"},
           {"quotient", "--m", "3"},
           {"quotient", "--m", "3", "--kind", "bogus"},
           {"quotient", "--m", "3", "--kind", "involution"},
           {"quotient", "--m", "6", "--kind", "mixed", "--l", "4"},
           {"quotient", "--m", "6", "--kind", "mixed", "--l", "2", "--j", "6"},
           {"quotient", "--m", "2", "--kind", "cover", "--l", "1"},
           {"quotient", "--m", "2", "--kind", "cover", "--l", "3", "--root", "3"},
           {"quotient", "--m", "2", "--kind", "free", "--root", "5"},
           {"quotient", "--m", "0", "--kind", "torus", "--l", "2"},
           {"verify", "--m", "2", "--m-range", "1..3"},
           {"verify", "--m-range", "3..1"},
           {"verify", "--m-range", "x"},
           {"dualgraph", "--m", "2", "--stage", "mid"}}) {
    const auto r = run(args);
    INFO(args.size());
    CHECK(r.exit_code == 2);
    CHECK(r.output.find("Usage") != std::string::npos);
  }
}

TEST_CASE("failed checks exit 1 and are listed") {
  const inoue::CheckList checks{{"good", "anchor", true, ""}, {"bad one", "anchor", false, "x"}};
  const auto text = inoue::cli::emit("verify", json::object(), checks, std::nullopt, "", false);
  CHECK(text.exit_code == 1);
  CHECK(text.output.find("failed checks: bad one") != std::string::npos);
  const auto js = inoue::cli::emit("verify", json::object(), checks, std::nullopt, "", true);
  CHECK(js.exit_code == 1);
  const json j = json::parse(js.output);
  CHECK(j["failed_checks"] == json::array({"bad one"}));
  CHECK(j["checks"][1]["status"] == "fail");
  CHECK(j["result_label"].is_null());
}

TEST_CASE("dual graph edges follow the cycle length") {
  using inoue::CycleCurve;
  const std::string one = inoue::cli::dot_graph("g", {{"C0", 0}}, -1);
  CHECK(one.find("\"C0\" -- \"C0\"") != std::string::npos);
  const std::string two = inoue::cli::dot_graph("g", {{"C0", -2}, {"C1", -2}}, -2);
  std::size_t n = 0;
  for (auto p = two.find("--"); p != std::string::npos; p = two.find("--", p + 1)) ++n;
  CHECK(n == 2);
  const auto post = run({"dualgraph", "--m", "6", "--stage", "post", "--kind", "mixed", "--l", "2", "--j", "1"});
  CHECK(post.exit_code == 0);
  CHECK(post.output.find("\"C1\" [label=\"C1\\n-2\"]") != std::string::npos);
  CHECK(post.output.find("\"C0\"") == std::string::npos);
}
