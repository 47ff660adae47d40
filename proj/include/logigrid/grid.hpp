#pragma once

#include <utility>
#include <vector>

#include "logigrid/puzzle.hpp"
#include "logigrid/types.hpp"

namespace logigrid {

// Tri-state association grid over all cross-category element pairs.
// Cells are unordered pairs; writes are monotone (unknown -> yes/no), and a
// conflicting write throws Code::contradiction. The puzzle must outlive the
// grid.
class Grid {
public:
    explicit Grid(const Puzzle& puzzle);

    const Puzzle& puzzle() const { return *puzzle_; }
    int k() const { return k_; }
    int n() const { return n_; }
    int cell_count() const { return static_cast<int>(cells_.size()); }
    int unknown_count() const { return unknown_; }
    bool complete() const { return unknown_ == 0; }

    CellState get(ElementRef e, ElementRef f) const;
    CellState get(std::string_view e, std::string_view f) const;
    CellState get(const CellRef& c) const { return get(c.a, c.b); }

    FillResult set(ElementRef e, ElementRef f, CellState v);
    FillResult set(std::string_view e, std::string_view f, CellState v);

    // Same category (and distinct) or an explicit `no` cell.
    bool incompatible(ElementRef e, ElementRef f) const;
    // Identical element or an explicit `yes` cell.
    bool entails_match(ElementRef e, ElementRef f) const;

    // Positions (0-based) in category `cat` not excluded for x. An element of
    // `cat` itself yields its own singleton. A `yes` cell collapses the set to
    // that position. Throws Code::empty_domain when everything is excluded.
    std::vector<int> feasible_positions(ElementRef x, int cat) const;

    // Category pairs (a, b) with a < b, in block-rank order.
    const std::vector<std::pair<int, int>>& blocks() const { return blocks_; }
    // Rank of the block holding categories a and b (order-insensitive).
    int block_rank(int a, int b) const;

private:
    int cell_index(ElementRef e, ElementRef f) const;

    const Puzzle* puzzle_;
    int k_ = 0;
    int n_ = 0;
    int unknown_ = 0;
    std::vector<std::pair<int, int>> blocks_;
    std::vector<int> rank_;  // k*k lookup, -1 on the diagonal
    std::vector<CellState> cells_;
};

}  // namespace logigrid
