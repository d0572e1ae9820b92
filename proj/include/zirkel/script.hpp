//-----------------------------------------------------------------------------
// Text form of construction scripts (".geo" files): a line-oriented DSL with
// one statement per line, `#` comments, and a canonical serialization that
// round-trips exactly. Bare numbers are legal only in `given` coordinates and
// `rotate` angles; every other length is a distance between named points.
//-----------------------------------------------------------------------------
#pragma once

#include "zirkel/engine.hpp"

#include <string>

namespace zirkel {

// Parses .geo text. Diagnostics (syntax errors, undefined or duplicate names)
// are thrown as ParseError with the offending line and column. A comment line
// `# rusty` marks the script as claiming a fixed compass opening; a trailing
// `# from macro <kind> <name>` records a step's macro provenance.
ConstructionScript parse(const std::string &text);

// Canonical text form: one statement per line, single spaces, lowercase
// keywords, provenance comments preserved. Serializing, reparsing, and
// serializing again is byte-identical.
std::string serialize(const ConstructionScript &script);

} // namespace zirkel
