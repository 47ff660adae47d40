#pragma once

#include <optional>
#include <vector>

#include "logigrid/grid.hpp"
#include "logigrid/puzzle.hpp"

namespace logigrid {

// Identifies which deduction rule produced a fill. Clue rules carry their
// constraint; bcr_* and acr_* are the grid-consistency rules (B1/B2, A1/A2).
enum class RuleTag : uint8_t {
    clue_yes,
    clue_no,
    alldiff_pair,
    or_force,          // one disjunct refuted, assert the other
    or_eliminate,      // W incompatible with both alternatives => X != W
    xor_exclude,       // one disjunct entailed, deny the other
    xor_pair_exclude,  // W matched with both alternatives => X != W
    two_or_force,      // twobytwo via its derived or()
    two_or_eliminate,
    two_link_yes,  // scenario entailed: partner gets the other label
    two_link_no,   // scenario entailed: same element denied the other label
    two_force,     // scenario refuted: force the opposite pairing
    pos_not_equal,
    pos_bound_low,   // later element cleared out of the leading positions
    pos_bound_high,  // earlier element cleared out of the trailing positions
    fixed_no_range,  // offset partner would fall off the category
    fixed_no_cell,   // offset partner position already denied
    fixed_yes,       // offset partner position forced by a yes
    dist_no,
    dist_yes,
    disjunction_force,
    bcr_clear,       // B1: a yes clears its row and column
    bcr_last,        // B2: n-1 no's force the last cell
    acr_transitive,  // A1: yes(e,g) and yes(g,f) => yes(e,f)
    acr_pairwise,    // A2: no shared partner in a third category => no(e,f)
};

bool rule_is_basic(RuleTag t);     // B1 / B2
bool rule_is_advanced(RuleTag t);  // A1 / A2

struct Premise {
    CellRef cell;
    CellState value = CellState::unknown;
};

struct DeductionEvent {
    int seq = 0;
    CellRef cell;
    CellState value = CellState::unknown;
    RuleTag tag = RuleTag::clue_yes;
    int constraint_index = -1;  // into puzzle.constraints; -1 for B*/A* rules
    std::vector<Premise> premises;

    // Small rendering parameters, meaning depends on tag:
    //   pos_bound_*:    param_a = premise bound, param_b = derived bound
    //   fixed_no_range: param_a = blocked position count, param_b = side (0 = X, 1 = Y)
    //   acr_pairwise:   param_a = third category index
    //   disjunction:    param_a = surviving disjunct index
    int param_a = 0;
    int param_b = 0;
    ElementRef aux;  // acr_transitive middle element; dist_yes pinned position holder

    std::string text;  // rendered sentence, filled by explain::annotate
};

enum class SolveStatus : uint8_t {
    solved,
    stuck,
    contradiction,
};

const char* status_name(SolveStatus s);

struct SolveResult {
    SolveStatus status = SolveStatus::stuck;
    Grid grid;
    std::vector<DeductionEvent> events;  // .text left empty; see explain.hpp
};

// One pass of every rule of one constraint, in the kind's fixed rule order.
// Fills are applied to the grid as they are found; returns only real changes.
std::vector<DeductionEvent> clue_rule_pass(Grid& grid, int constraint_index);

// First applicable basic fill (B1 before B2, blocks in rank order, cells
// row-major). Applies it and returns the event, or nothing at fixpoint.
std::optional<DeductionEvent> bcr_step(Grid& grid);

// First applicable advanced fill; every A1 instance is tried before any A2.
std::optional<DeductionEvent> acr_step(Grid& grid);

// Full scheduler: clue pass over all constraints, then BCR to fixpoint,
// repeat while progress; on a stall apply exactly one ACR fill and resume.
// Stops at a complete grid (solved), a conflicting fill (contradiction) or
// a stall with no ACR fill left (stuck).
SolveResult solve(const Puzzle& puzzle);

}  // namespace logigrid
