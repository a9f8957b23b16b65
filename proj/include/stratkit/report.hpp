#pragma once

#include <ostream>
#include <string>
#include <vector>

#include "stratkit/homology.hpp"
#include "stratkit/rewrite.hpp"
#include "stratkit/strat.hpp"

namespace stratkit {

inline constexpr const char* kToolVersion = "stratkit 0.1.0";

struct RunConfig {
  std::string command;
  std::string input;  // file path, or a bundled corpus name
  int bound = 8;
  std::vector<std::string> segment;  // vertex names; empty = not specified
  bool segmentGiven = false;         // "--segment" with an empty list means {}
  bool json = false;
  std::vector<std::pair<std::string, std::string>> params;
  std::string fromLabel, toLabel;  // ext only
};

// Everything downstream commands need, built once per run.
struct Pipeline {
  Presentation pres;
  RewriteSystem rs;
  AlgebraPtr algebra;
  Poset poset;
};

Pipeline buildPipeline(const std::string& text, const RunConfig& cfg);

// Reads cfg.input from disk, falling back to the bundled corpus.
std::string loadInput(const std::string& input);

// Dispatches the command; returns the process exit code (0 pass, 1 certified
// fail, 2 error).  All diagnostics go to err; reports go to out.
int runCommand(const RunConfig& cfg, std::ostream& out, std::ostream& err);

}  // namespace stratkit
