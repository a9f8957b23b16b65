#pragma once

#include <map>
#include <string>

#include "stratkit/quiver.hpp"

namespace stratkit {

// Parses the line-oriented presentation format:
//   FIELD rational | FIELD prime <p>
//   PARAM <name> = <scalar literal>
//   VERTICES <name> ...
//   ARROW <name> : <src> -> <tgt>
//   REL <linear combination of paths>
//   ORDER <x> < <y>
// '#' starts a comment; blank lines are skipped.  FIELD, when present, must
// precede PARAM and REL lines.  overrides replaces declared parameter values
// by name; naming an undeclared parameter is an error.
Presentation parsePresentation(const std::string& text,
                               const std::map<std::string, std::string>& overrides = {});

// Canonical textual form; parsePresentation(renderPresentation(p)) == p.
std::string renderPresentation(const Presentation& p);

}  // namespace stratkit
