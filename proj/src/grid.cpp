#include "logigrid/grid.hpp"

namespace logigrid {

Grid::Grid(const Puzzle& puzzle)
    : puzzle_(&puzzle), k_(puzzle.category_count()), n_(puzzle.elements_per_category()) {
    rank_.assign(static_cast<size_t>(k_) * k_, -1);
    int rank = 0;
    for (int a = 0; a < k_; ++a) {
        for (int b = a + 1; b < k_; ++b) {
            blocks_.emplace_back(a, b);
            rank_[a * k_ + b] = rank;
            rank_[b * k_ + a] = rank;
            ++rank;
        }
    }
    cells_.assign(static_cast<size_t>(rank) * n_ * n_, CellState::unknown);
    unknown_ = static_cast<int>(cells_.size());
}

int Grid::block_rank(int a, int b) const { return rank_[a * k_ + b]; }

int Grid::cell_index(ElementRef e, ElementRef f) const {
    if (e.category == f.category)
        throw LgError(Code::same_category, "\"" + puzzle_->label(e) + "\" and \"" +
                                               puzzle_->label(f) + "\" share a category");
    ElementRef lo = e, hi = f;
    if (hi.category < lo.category) std::swap(lo, hi);
    return block_rank(lo.category, hi.category) * n_ * n_ + lo.index * n_ + hi.index;
}

CellState Grid::get(ElementRef e, ElementRef f) const { return cells_[cell_index(e, f)]; }

CellState Grid::get(std::string_view e, std::string_view f) const {
    return get(puzzle_->element(e), puzzle_->element(f));
}

FillResult Grid::set(ElementRef e, ElementRef f, CellState v) {
    if (v == CellState::unknown)
        throw LgError(Code::invalid_argument, "cells cannot be reset to unknown");
    CellState& cell = cells_[cell_index(e, f)];
    if (cell == v) return FillResult::noop;
    if (cell != CellState::unknown)
        throw LgError(Code::contradiction, "cell (\"" + puzzle_->label(e) + "\", \"" +
                                               puzzle_->label(f) + "\") is already " +
                                               (cell == CellState::yes ? "yes" : "no"));
    cell = v;
    --unknown_;
    return FillResult::changed;
}

FillResult Grid::set(std::string_view e, std::string_view f, CellState v) {
    return set(puzzle_->element(e), puzzle_->element(f), v);
}

bool Grid::incompatible(ElementRef e, ElementRef f) const {
    if (e.category == f.category) return e.index != f.index;
    return get(e, f) == CellState::no;
}

bool Grid::entails_match(ElementRef e, ElementRef f) const {
    if (e.category == f.category) return e.index == f.index;
    return get(e, f) == CellState::yes;
}

std::vector<int> Grid::feasible_positions(ElementRef x, int cat) const {
    if (x.category == cat) return {x.index};
    // a yes pins the position outright
    for (int p = 0; p < n_; ++p) {
        if (get(x, ElementRef{static_cast<int16_t>(cat), static_cast<int16_t>(p)}) ==
            CellState::yes)
            return {p};
    }
    std::vector<int> out;
    for (int p = 0; p < n_; ++p) {
        if (get(x, ElementRef{static_cast<int16_t>(cat), static_cast<int16_t>(p)}) !=
            CellState::no)
            out.push_back(p);
    }
    if (out.empty())
        throw LgError(Code::empty_domain, "\"" + puzzle_->label(x) +
                                              "\" has no feasible position left in \"" +
                                              puzzle_->categories[cat].label + "\"");
    return out;
}

}  // namespace logigrid
