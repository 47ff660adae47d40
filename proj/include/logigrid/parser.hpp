#pragma once

#include <string>
#include <string_view>

#include "logigrid/puzzle.hpp"

namespace logigrid {

// Parses a puzzle document.
//
// Line-oriented UTF-8; `#` starts a comment, blank lines are skipped.
//   puzzle <name>                          (optional, at most once)
//   category <Label> [ordered]: <e1> ... <en>
//   clue <id>: <kind> <args...>
// Labels are single tokens; underscores turn into spaces in memory (and back
// on serialization). Throws LgError with a line number on the first problem;
// the returned puzzle always passes validate().
Puzzle parse_puzzle(std::string_view text);

// Canonical document for a puzzle: categories first, then constraints in
// their (clue id, input order) ordering. parse_puzzle(serialize_puzzle(p))
// reproduces p exactly.
std::string serialize_puzzle(const Puzzle& p);

// Display label ("United States") -> document token ("United_States").
std::string label_to_token(std::string_view label);
// Document token -> display label.
std::string token_to_label(std::string_view token);

}  // namespace logigrid
