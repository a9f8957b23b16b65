#include <iostream>
#include <string>
#include <vector>

#include <CLI11.hpp>

#include "stratkit/report.hpp"

namespace {

// "z=1" -> ("z", "1")
std::pair<std::string, std::string> splitParam(const std::string& s) {
  const auto eq = s.find('=');
  if (eq == std::string::npos || eq == 0)
    throw CLI::ValidationError("--param expects name=value, got '" + s + "'");
  return {s.substr(0, eq), s.substr(eq + 1)};
}

std::vector<std::string> splitCommas(const std::string& s) {
  std::vector<std::string> out;
  std::string cur;
  for (char c : s) {
    if (c == ',') {
      if (!cur.empty()) out.push_back(cur);
      cur.clear();
    } else if (!isspace(static_cast<unsigned char>(c))) {
      cur += c;
    }
  }
  if (!cur.empty()) out.push_back(cur);
  return out;
}

}  // namespace

int main(int argc, char** argv) {
  CLI::App app{"verification toolkit for stratified quiver algebras"};
  app.require_subcommand(1);

  stratkit::RunConfig cfg;
  std::string segmentArg;
  std::vector<std::string> paramArgs;

  const std::vector<std::pair<std::string, std::string>> commands = {
      {"basis", "list the monomial basis of normal forms"},
      {"peirce", "dimensions and labels of the idempotent blocks e_x A e_y"},
      {"simples", "radical series and the simple modules"},
      {"check", "verify the stratification hypotheses"},
      {"chain", "build and certify the heredity chain of ideals"},
      {"ext", "Ext tables between simple modules"},
      {"certify", "embedding certificate for a poset segment"},
      {"report", "full report: hypotheses, chain, and all segment certificates"}};
  for (const auto& [name, blurb] : commands) {
    CLI::App* sub = app.add_subcommand(name, blurb);
    sub->add_option("file", cfg.input, "presentation file (or bundled corpus name)")
        ->required();
    sub->add_option("--bound", cfg.bound, "degree bound for rewriting and homology")
        ->check(CLI::PositiveNumber);
    sub->add_option("--segment", segmentArg,
                    "comma-separated vertex list; closed downward if needed");
    sub->add_flag("--json", cfg.json, "emit a stable-key JSON document");
    sub->add_option("--param", paramArgs, "override a PARAM line, name=value")
        ->take_all();
    if (name == "ext") {
      sub->add_option("--from", cfg.fromLabel, "source simple module label");
      sub->add_option("--to", cfg.toLabel, "target simple module label");
    }
    sub->callback([&cfg, name]() { cfg.command = name; });
  }

  CLI11_PARSE(app, argc, argv);

  try {
    for (const auto& p : paramArgs) cfg.params.push_back(splitParam(p));
  } catch (const CLI::ValidationError& e) {
    std::cerr << "error: " << e.what() << "\n";
    return 2;
  }
  const CLI::App* sub = app.get_subcommands().front();
  if (sub->count("--segment") > 0) {
    cfg.segmentGiven = true;
    cfg.segment = splitCommas(segmentArg);
  }

  return stratkit::runCommand(cfg, std::cout, std::cerr);
}
