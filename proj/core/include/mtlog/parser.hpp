#pragma once

#include <string_view>

#include "mtlog/ast.hpp"
#include "mtlog/errors.hpp"

namespace mtlog {

/// Parses program text: "."-terminated rules, "%" line comments. Performs
/// safety, head-grammar, arity and delta checks; duplicate rules are dropped.
Program parse_program(std::string_view text);

/// Parses dataset text: one fact per line, "Atom@Interval" with ";"-joined
/// interval lists allowed (the dump format re-ingests). Duplicate facts are
/// dropped.
Dataset parse_dataset(std::string_view text);

/// Parses a single (ground) metric atom, e.g. for CLI queries.
MetricAtom parse_ground_metric_atom(std::string_view text);

/// Parses a single interval literal such as "[0,6]", "(-inf,3]" or "5".
Interval parse_interval_text(std::string_view text);

}  // namespace mtlog
