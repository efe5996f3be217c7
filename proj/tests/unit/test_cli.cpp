#include <tzhu_cli/commands.hpp>
#include <tzhu_cli/report.hpp>

#include <gtest/gtest.h>
#include <sys/wait.h>

#include <cstdlib>
#include <filesystem>
#include <fstream>
#include <sstream>

namespace fs = std::filesystem;
using tzhu::cli::Json;

namespace {

struct ToolRun {
  int exit_code;
  std::string text;
  Json doc;
};

ToolRun run_tool(const std::string& args, const std::string& env = "") {
  static int counter = 0;
  fs::path out = fs::temp_directory_path() / ("tzhu_cli_test_" + std::to_string(::getpid()) + "_" +
                                              std::to_string(counter++) + ".json");
  std::string cmd = env + " " + TZHU_BINARY + " " + args + " --out " + out.string() + " 2>/dev/null";
  int status = std::system(cmd.c_str());
  ToolRun r{WIFEXITED(status) ? WEXITSTATUS(status) : -1, "", nullptr};
  std::ifstream in(out);
  std::stringstream ss;
  ss << in.rdbuf();
  r.text = ss.str();
  if (!r.text.empty()) r.doc = Json::parse(r.text);
  fs::remove(out);
  return r;
}

std::string without_timing(Json doc) {
  doc.erase("timing");
  return doc.dump(2);
}

const Json* find_check(const Json& doc, const std::string& name) {
  for (const auto& c : doc["checks"])
    if (c["name"] == name) return &c;
  return nullptr;
}

}  // namespace

TEST(Cli, TwistedHeisenbergZhu) {
  ToolRun r = run_tool("zhu --model heisenberg --twist charge-conjugation --cutoff 6 --margin 4");
  ASSERT_EQ(r.exit_code, 0) << r.text;
  EXPECT_EQ(r.doc["schema_version"], tzhu::cli::kSchemaVersion);
  EXPECT_EQ(r.doc["results"]["dim"], 1);
  EXPECT_EQ(r.doc["results"]["omega_class"], Json::array({"1/16"}));
  EXPECT_EQ(r.doc["results"]["stabilized"], true);
  EXPECT_EQ(r.doc["summary"]["status"], "pass");
  EXPECT_EQ(r.doc.back().size(), 1u);  // timing is the last field
  for (const char* name : {"zhu-ideal", "zhu-associativity", "zhu-phi"}) {
    const Json* c = find_check(r.doc, name);
    ASSERT_NE(c, nullptr) << name;
    EXPECT_EQ((*c)["status"], "pass");
    EXPECT_FALSE((*c)["anchor"].get<std::string>().empty());
  }
}

TEST(Cli, IsingZhu) {
  ToolRun r = run_tool("zhu --model virasoro-simple --c 1/2 --cutoff 8 --margin 3");
  ASSERT_EQ(r.exit_code, 0) << r.text;
  EXPECT_EQ(r.doc["results"]["dim"], 3);
  EXPECT_EQ(r.doc["results"]["semisimplicity"]["omega_spectrum"], Json::array({"0", "1/16", "1/2"}));
  EXPECT_EQ(r.doc["results"]["semisimplicity"]["radical_dim"], 0);
}

TEST(Cli, FreeBosonDoesNotStabilize) {
  ToolRun r = run_tool("zhu --model heisenberg --twist identity --cutoff 6 --margin 3");
  ASSERT_EQ(r.exit_code, 0) << r.text;
  EXPECT_EQ(r.doc["results"]["stabilized"], false);
}

TEST(Cli, Modules) {
  ToolRun t = run_tool("module --model heisenberg --twist charge-conjugation --cutoff 6 --margin 4 --depth 5/2");
  ASSERT_EQ(t.exit_code, 0) << t.text;
  EXPECT_EQ(t.doc["results"]["stages"]["simple"], Json::array({1, 1, 1, 2, 2, 3}));
  EXPECT_EQ(t.doc["results"]["lowest_module"]["lowest_weight"], "1/16");
  EXPECT_EQ((*find_check(t.doc, "omega-round-trip"))["status"], "pass");

  ToolRun v = run_tool("module --model virasoro-simple --c 1/2 --cutoff 8 --margin 3 --depth 2 --lowest-weight 1/2");
  ASSERT_EQ(v.exit_code, 0) << v.text;
  EXPECT_EQ(v.doc["results"]["stages"]["simple"], Json::array({1, 1, 1}));
}

TEST(Cli, DepthZero) {
  ToolRun r = run_tool("module --model heisenberg --twist charge-conjugation --cutoff 6 --margin 4 --depth 0");
  EXPECT_EQ(r.exit_code, 4);
  const Json* om = find_check(r.doc, "omega-round-trip");
  ASSERT_NE(om, nullptr);
  EXPECT_EQ((*om)["status"], "skipped");
  EXPECT_NE((*om)["note"].get<std::string>().find("insufficient depth"), std::string::npos);
}

TEST(Cli, ExitCodes) {
  EXPECT_EQ(run_tool("zhu --model lattice").exit_code, 2);
  EXPECT_EQ(run_tool("zhu --model virasoro-simple --twist charge-conjugation").exit_code, 2);
  EXPECT_EQ(run_tool("verify --model ,").exit_code, 2);
  EXPECT_EQ(run_tool("zhu --bogus 1").exit_code, 2);
  EXPECT_EQ(run_tool("module --model heisenberg --twist charge-conjugation --depth 1/3").exit_code, 2);
  ToolRun big = run_tool("zhu --model heisenberg --cutoff 30 --margin 10");
  EXPECT_EQ(big.exit_code, 3);
  EXPECT_EQ(big.doc["error"]["kind"], "cutoff-exceeded");
  EXPECT_EQ(big.doc["summary"]["status"], "error");
}

TEST(Cli, VerifyAndFaultInjection) {
  ToolRun ok = run_tool("verify --model virasoro-simple");
  ASSERT_EQ(ok.exit_code, 0) << ok.text;
  EXPECT_EQ(ok.doc["summary"]["checks_failed"], 0);
  EXPECT_GT(ok.doc["summary"]["checks_passed"].get<int>(), 20);

  ToolRun bad = run_tool("verify --model virasoro-simple", "TZHU_FAULT=bracket-sign");
  EXPECT_EQ(bad.exit_code, 1);
  EXPECT_EQ(bad.doc["results"]["fault_injection"], "bracket-sign");
  bool jacobi_failed = false;
  for (const auto& c : bad.doc["checks"])
    if (c["name"] == "lie-jacobi" && c["status"] == "fail") jacobi_failed = true;
  EXPECT_TRUE(jacobi_failed);
}

TEST(Cli, Determinism) {
  const std::string args = "module --model heisenberg --twist charge-conjugation --cutoff 4 --margin 2 --depth 3/2";
  ToolRun a = run_tool(args);
  ToolRun b = run_tool(args);
  ASSERT_EQ(a.exit_code, 0) << a.text;
  EXPECT_EQ(without_timing(a.doc), without_timing(b.doc));
  // byte-level: the documents differ at most in the final timing block
  auto cut = [](const std::string& s) { return s.substr(0, s.rfind("\"timing\"")); };
  EXPECT_EQ(cut(a.text), cut(b.text));
}
