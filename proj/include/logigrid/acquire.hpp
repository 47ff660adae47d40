#pragma once

#include <deque>
#include <string>
#include <utility>
#include <vector>

#include "logigrid/puzzle.hpp"

namespace logigrid {

// Question/answer channel for interactive puzzle acquisition.
class Prompter {
public:
    virtual ~Prompter() = default;
    virtual std::string ask(const std::string& question) = 0;
};

// Replays a fixed list of answers; handy for tests and for replaying a
// recorded transcript.
class ScriptedPrompter : public Prompter {
public:
    explicit ScriptedPrompter(std::vector<std::string> answers)
        : answers_(answers.begin(), answers.end()) {}

    std::string ask(const std::string& question) override;

private:
    std::deque<std::string> answers_;
};

struct AcquireResult {
    Puzzle puzzle;
    // (question, answer) pairs in the order they happened; feeding the
    // answers back through a ScriptedPrompter reproduces the same puzzle.
    std::vector<std::pair<std::string, std::string>> transcript;
};

// Walks the user through categories first, then constraints (clue id, kind,
// numeric parameter / polarities where the kind has them, then labels in the
// kind's role order). Invalid answers are re-asked, not fatal.
AcquireResult acquire_interactive(Prompter& prompter);

// Renders a transcript as alternating "? question" / "> answer" lines.
std::string format_transcript(const std::vector<std::pair<std::string, std::string>>& t);

}  // namespace logigrid
