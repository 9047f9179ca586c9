#pragma once

#include <set>
#include <string>
#include <vector>

#include "mtlog/ast.hpp"

namespace mtlog {

/// All constants mentioned by the program or the dataset. When none exist
/// but the program has variables, a fresh constant is injected so grounding
/// stays non-vacuous.
std::set<std::string> active_constants(const Program& program, const Dataset& dataset);

/// Instantiates every rule with every substitution of its variables by the
/// given constants; duplicates are dropped.
std::vector<Rule> ground(const Program& program, const std::set<std::string>& constants);

}  // namespace mtlog
