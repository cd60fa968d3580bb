#pragma once

#include <iosfwd>
#include <string>
#include <vector>

#include "alterfold/fusion.hpp"
#include "alterfold/triangulation.hpp"

namespace alterfold::cli {

enum ExitCode { kOk = 0, kFailed = 1, kUsage = 2 };

// builtin:NAME[:p1[:p2]] or file:PATH; ALTERFOLD_TOL overrides the tolerance
CategoryPtr resolve_category(const std::string& ref);
// census:NAME or file:PATH
Triangulation resolve_triangulation(const std::string& ref);

// 64-bit FNV-1a over the canonical serialization, as 16 hex digits
std::string fingerprint(const FusionCategory& cat);

// args excludes the program name
int run(const std::vector<std::string>& args, std::ostream& out, std::ostream& err);

}  // namespace alterfold::cli
