#include "tzhu_cli/commands.hpp"

#include <CLI11.hpp>

#include <fstream>
#include <iostream>

int main(int argc, char** argv) {
  using namespace tzhu::cli;
  CLI::App app{"Exact twisted Zhu algebras, mode Lie algebras and twisted modules"};
  app.require_subcommand(1);
  RunConfig cfg;

  auto add_common = [&cfg](CLI::App* sub) {
    sub->add_option("--model", cfg.model, "heisenberg | virasoro-universal | virasoro-simple (verify: comma list)");
    sub->add_option("--twist", cfg.twist, "identity | charge-conjugation");
    sub->add_option("--c", cfg.c, "central charge for the Virasoro models");
    sub->add_option("--cutoff", cfg.cutoff, "Zhu cutoff N");
    sub->add_option("--margin", cfg.margin, "Zhu margin K");
    sub->add_option("--depth", cfg.depth, "module depth, a multiple of 1/T");
    sub->add_option("--lowest-weight", cfg.lowest_weight, "lowest weight h of a one-dimensional U");
    sub->add_option("--out", cfg.out, "report path (default stdout)");
  };
  CLI::App* zhu = app.add_subcommand("zhu", "build A_g(V) and run its checks");
  CLI::App* module = app.add_subcommand("module", "build L(U) and run the module checks");
  CLI::App* verify = app.add_subcommand("verify", "run every invariant suite");
  for (auto* s : {zhu, module, verify}) add_common(s);
  verify->get_option("--model")->default_str("heisenberg,virasoro-simple");

  try {
    app.parse(argc, argv);
  } catch (const CLI::ParseError& e) {
    const int code = app.exit(e);
    return code == 0 ? 0 : kConfigError;
  }
  CLI::App* chosen = app.get_subcommands().front();
  cfg.command = chosen->get_name();
  cfg.cutoff_set = chosen->count("--cutoff") > 0;
  cfg.margin_set = chosen->count("--margin") > 0;
  cfg.depth_set = chosen->count("--depth") > 0;
  cfg.twist_set = chosen->count("--twist") > 0;
  if (cfg.command == "verify" && chosen->count("--model") == 0) cfg.model = "heisenberg,virasoro-simple";

  RunResult res = run(cfg);
  const std::string text = render(res.document);
  if (cfg.out.empty()) {
    std::cout << text;
  } else {
    std::ofstream f(cfg.out, std::ios::binary);
    if (!f) {
      std::cerr << "cannot write " << cfg.out << "\n";
      return kConfigError;
    }
    f << text;
  }
  if (res.document.contains("error")) std::cerr << "error: " << res.document["error"]["message"].get<std::string>() << "\n";
  return res.exit_code;
}
