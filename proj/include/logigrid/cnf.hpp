#pragma once

#include <string>
#include <utility>
#include <vector>

#include "logigrid/puzzle.hpp"

namespace logigrid {

struct Cnf {
    int num_vars = 0;
    std::vector<std::vector<int>> clauses;
    // var v <-> var_cells[v-1]; labels kept alongside for the DIMACS comments.
    std::vector<CellRef> var_cells;
    std::vector<std::pair<std::string, std::string>> var_labels;
};

// 1-based DIMACS variable for a cell: block_rank(a,b) * n^2 + i*n + j + 1,
// category pairs ranked lexicographically. Throws Code::same_category.
int var_index(const Puzzle& p, ElementRef e, ElementRef f);
int var_index(const Puzzle& p, std::string_view e, std::string_view f);

// Bijection clauses per block (at-least-one + pairwise at-most-one on every
// row and column), channeling triples linking every category triple, and one
// clause group per constraint. Deterministic clause order.
Cnf encode(const Puzzle& p);

// DIMACS text: "p cnf V C" header, the variable map as "c cell <v> = <e>|<f>"
// comment lines, then one clause per line.
std::string write_dimacs(const Cnf& cnf);

}  // namespace logigrid
