#include <sys/wait.h>

#include <cstdlib>
#include <filesystem>
#include <fstream>
#include <sstream>

#include "doctest.h"
#include "gen23/claims.hpp"
#include "json.hpp"

using namespace gen23;
using nlohmann::json;

namespace {

const std::filesystem::path tmp = std::filesystem::temp_directory_path() / "gen23_cli_test";

int cli(const std::string& args) {
  const std::string cmd = std::string(GEN23_CLI) + " " + args + " > " + (tmp / "out.txt").string() + " 2>&1";
  const int status = std::system(cmd.c_str());
  return WIFEXITED(status) ? WEXITSTATUS(status) : -1;
}

std::string slurp(const std::filesystem::path& p) {
  std::ifstream in(p);
  std::stringstream s;
  s << in.rdbuf();
  return s.str();
}

void put(const std::string& name, const std::string& text) { std::ofstream(tmp / name) << text; }

json without_timing(json j) {
  for (auto& c : j["claims"]) c.erase("seconds");
  return j;
}

}  // namespace

TEST_CASE("registry") {
  const auto& reg = claim_registry();
  CHECK(reg.size() > 30);
  for (const auto& c : reg) {
    CHECK_FALSE(c.modules.empty());
    CHECK(c.run);
  }
  CHECK(find_claim("lemma-2.1"));
  CHECK(find_claim("thm-3.6-psu3-25")->slow);
  CHECK(find_claim("table-b-q7"));
  CHECK_FALSE(find_claim("unknown-claim"));
}

TEST_CASE("verify exit codes and reports") {
  std::filesystem::create_directories(tmp);
  CHECK(cli("verify unknown-claim") == 2);
  CHECK(cli("verify lemma-2.4 table-b-q7 --json " + (tmp / "a.json").string() + " --md " + (tmp / "a.md").string()) == 0);
  CHECK(cli("verify lemma-2.4 table-b-q7 --seed 0 --json " + (tmp / "b.json").string()) == 0);
  const json a = json::parse(slurp(tmp / "a.json")), b = json::parse(slurp(tmp / "b.json"));
  CHECK(without_timing(a).dump() == without_timing(b).dump());
  CHECK(a["claims"][0]["id"] == "lemma-2.4");
  CHECK(slurp(tmp / "a.md").find("| table-b-q7 |") != std::string::npos);
  CHECK(cli("verify lemma-3.3-z5-resultant") == 1);
  CHECK(cli("verify thm-3.5-sl3-5 --cap 1000") == 3);
  CHECK(cli("--bogus-flag list") == 2);
}

TEST_CASE("search and closure") {
  std::filesystem::create_directories(tmp);
  CHECK(cli("search --target sl3 --q 4") == 1);
  CHECK(slurp(tmp / "out.txt") == "none\n");
  CHECK(cli("search --target sp4 --q 4") == 2);
  CHECK(cli("search --target sl3 --q 6") == 2);
  const auto x = (tmp / "x.json").string(), y = (tmp / "y.json").string();
  CHECK(cli("search --target sl3 --q 2 --x " + x + " --y " + y) == 0);
  CHECK(cli("closure " + x + " " + y) == 0);
  CHECK(slurp(tmp / "out.txt").find("order 168\n") != std::string::npos);
  CHECK(cli("closure " + x + " " + y + " --cap 10") == 3);

  CHECK(cli("search --target su3 --q 13 --json " + (tmp / "s.json").string()) == 0);
  const json s = json::parse(slurp(tmp / "s.json"));
  CHECK(s["conditions"]["overall"] == true);
  CHECK(s["element_order"] == 168);

  put("id.json", R"({"n": 3, "rows": [[1,0,0],[0,1,0],[0,0,1]]})");
  CHECK(cli("closure " + (tmp / "id.json").string()) == 2);
  CHECK(cli("--field 2^1 closure " + (tmp / "id.json").string()) == 0);
  CHECK(slurp(tmp / "out.txt").find("order 1\n") != std::string::npos);
  put("f3.json", R"({"field": "3^1", "n": 3, "rows": [[1,0,0],[0,1,0],[0,0,1]]})");
  CHECK(cli("closure " + x + " " + (tmp / "f3.json").string()) == 2);
  put("bad.json", "{ not json");
  CHECK(cli("closure " + (tmp / "bad.json").string()) == 2);
  CHECK(cli("closure " + (tmp / "missing.json").string()) == 2);
}
