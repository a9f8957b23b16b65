#pragma once

#include <string>
#include <utility>
#include <vector>

namespace stratkit {

// Bundled presentation files, embedded at build time, sorted by name.
const std::vector<std::pair<std::string, std::string>>& corpus();
// Content of one bundled file; UnknownSymbol if the name is not bundled.
const std::string& corpusFile(const std::string& name);

}  // namespace stratkit
