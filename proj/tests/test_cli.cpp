#include <cstdlib>
#include <fstream>
#include <regex>
#include <sstream>

#include "commands.hpp"
#include "doctest.h"

namespace {

struct Result {
  int code;
  std::string out;
  std::string err;
};

Result run(std::vector<std::string> args) {
  args.insert(args.begin(), "levelrank");
  std::ostringstream out;
  std::ostringstream err;
  const int code = levelrank::cli::run(args, out, err);
  return {code, out.str(), err.str()};
}

std::string stable(const std::string& text) {
  static const std::regex elapsed(R"("elapsed_us":[0-9]+)");
  return std::regex_replace(text, elapsed, R"("elapsed_us":0)");
}

void check_golden(const std::string& name, const std::vector<std::string>& args) {
  const Result r = run(args);
  const std::string got = "exit " + std::to_string(r.code) + "\n" + stable(r.out);
  const std::string path = std::string(LEVELRANK_GOLDEN_DIR) + "/" + name + ".txt";
  if (std::getenv("LEVELRANK_UPDATE_GOLDEN")) {
    std::ofstream(path) << got;
    return;
  }
  std::ifstream in(path);
  REQUIRE_MESSAGE(in.good(), "missing golden file " << path);
  std::stringstream want;
  want << in.rdbuf();
  CHECK_MESSAGE(got == want.str(), name);
}

}  // namespace

TEST_CASE("golden outputs") {
  check_golden("core_quotient", {"core-quotient", "8,6,1", "--m", "3", "--charge", "2"});
  check_golden("core_quotient_json", {"core-quotient", "8,6,1", "--m", "3", "--charge", "2", "--format", "json"});
  check_golden("abacus_glyph", {"abacus", "5,3", "--m", "4", "--charge", "2", "--glyph"});
  check_golden("uglov_4_3", {"uglov", "--l", "4", "--m", "3", "--components", ";;;1", "--charges", "1,0,1,0"});
  check_golden("uglov_json", {"uglov", "--l", "3", "--m", "4", "--json",
                              R"({"components": [[1,1],[],[]], "charges": [3,0,-1]})", "--format", "json"});
  check_golden("hc_series", {"hc-series", "--n", "8", "--m", "3", "--mu", "2"});
  check_golden("verify_duality", {"verify", "duality", "--n", "8", "--l", "4", "--lambda", "2^2", "--m", "3",
                                  "--mu", "2", "--w-l", "(1,0,0,-1)o[1032]", "--w-m", "(2,0,-1)o[201]"});
  check_golden("verify_duality_ascii", {"verify", "duality", "--n", "8", "--l", "4", "--lambda", "2^2", "--m",
                                        "3", "--mu", "2", "--format", "ascii"});
  check_golden("verify_uglov", {"verify", "uglov", "--l", "1", "--m", "2", "--kmax", "2", "--window", "2"});
  check_golden("duality_sweep", {"verify", "duality-sweep", "--nmax", "5", "--l", "2", "--m", "3",
                                 "--format", "ascii"});
}

TEST_CASE("exit codes") {
  CHECK(run({"abacus", "3,x", "--m", "2"}).code == levelrank::cli::kUsageError);
  CHECK(run({"abacus", "1,3", "--m", "2"}).code == levelrank::cli::kUsageError);
  CHECK(run({"abacus", "3"}).code == levelrank::cli::kUsageError);
  CHECK(run({"no-such-command"}).code == levelrank::cli::kUsageError);
  CHECK(run({"verify", "duality", "--n", "8", "--l", "4", "--lambda", "2,2", "--m", "2", "--mu", ""}).code ==
        levelrank::cli::kUsageError);
  const Result bad = run({"verify", "duality", "--n", "8", "--l", "4", "--lambda", "2^2", "--m", "3", "--mu", "2",
                          "--w-l", "[0123]", "--w-m", "[012]"});
  CHECK(bad.code == levelrank::cli::kVerificationFailed);
  CHECK(bad.out.find(R"("pass":false)") != std::string::npos);
  setenv("LEVELRANK_LIMITS", "max_n=5", 1);
  CHECK(run({"hc-series", "--n", "8", "--m", "3", "--mu", "2"}).code == levelrank::cli::kLimitExceeded);
  unsetenv("LEVELRANK_LIMITS");
  CHECK(run({"--help"}).code == levelrank::cli::kOk);
}
