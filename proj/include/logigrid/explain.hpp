#pragma once

#include <optional>
#include <string>
#include <vector>

#include "logigrid/solver.hpp"

namespace logigrid {

struct ExplanationOptions {
    bool group_bcr = true;          // collapse B1/B2 runs into one summary line
    bool announce_discards = false; // interleave "Clue c can now be discarded."
};

// Renders one event as its fixed English sentence.
std::string render_event(const Puzzle& p, const DeductionEvent& ev);

// Fills .text on every event.
void annotate(const Puzzle& p, std::vector<DeductionEvent>& events);

// Grouped (or per-event) output lines for an annotated event list, with
// discard announcements interleaved when asked for.
std::vector<std::string> output_lines(const Puzzle& p, const std::vector<DeductionEvent>& events,
                                      const ExplanationOptions& opts);

// True once every constraint of the clue is entailed by filled cells alone;
// monotone in the fill set. Uses each kind's own entailment test.
bool detect_discard(const Grid& grid, int clue_id, const std::vector<Constraint>& constraints);

// Subset of events that the target cell's fill transitively rests on
// (the filling event plus, recursively, the events filling each premise).
// Order is preserved. Throws Code::target_never_filled when the run never
// filled the target.
std::vector<DeductionEvent> slice_for_cell(const std::vector<DeductionEvent>& events,
                                           const CellRef& target);

// ASCII rendering of the grid in the usual staircase layout: category 1 rows
// on top, categories k..3 below, categories 2..k across.
std::string render_grid(const Grid& grid);

// Newline-delimited JSON, one record per event, fixed field order
// {seq, cell, value, rule, clue, premises, text}.
std::string render_log(const Puzzle& p, const std::vector<DeductionEvent>& events);

}  // namespace logigrid
