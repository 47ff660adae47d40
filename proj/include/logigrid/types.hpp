#pragma once

#include <cstdint>
#include <stdexcept>
#include <string>

namespace logigrid {

// Tri-state cell content. The numeric values are part of the external
// contract (structured logs, C API) and mirror the usual 0 / 1 / -1 coding.
enum class CellState : int8_t {
    unknown = 0,
    yes = 1,
    no = -1,
};

// Result of a cell write: whether the grid actually changed.
enum class FillResult {
    changed,
    noop,
};

// Machine-readable codes shared by parse errors, validation issues and the
// C API error surface. Keep in sync with the LG_ERR_* constants in logigrid.h.
enum class Code : int {
    ok = 0,
    syntax = 1,
    unknown_label = 2,
    arity = 3,
    unordered_category = 4,
    duplicate_label = 5,
    same_category = 6,       // a cell was addressed with two labels of one category
    same_category_pair = 7,  // a constraint matches two labels that share a category
    bad_category_size = 8,
    bad_n_param = 9,
    contradiction = 10,
    empty_domain = 11,
    target_never_filled = 12,
    invalid_argument = 13,
    io_error = 14,
};

const char* code_name(Code c);

class LgError : public std::runtime_error {
public:
    LgError(Code code, std::string message, int line = 0)
        : std::runtime_error(std::move(message)), code(code), line(line) {}

    Code code;
    int line;  // 1-based document line, 0 when not tied to a document
};

// Address of an element: category index plus element index within it.
struct ElementRef {
    int16_t category = -1;
    int16_t index = -1;

    friend bool operator==(ElementRef a, ElementRef b) {
        return a.category == b.category && a.index == b.index;
    }
    friend bool operator!=(ElementRef a, ElementRef b) { return !(a == b); }
    friend bool operator<(ElementRef a, ElementRef b) {
        if (a.category != b.category) return a.category < b.category;
        return a.index < b.index;
    }
};

// A grid cell, normalized so that a.category < b.category.
struct CellRef {
    ElementRef a;
    ElementRef b;

    CellRef() = default;
    CellRef(ElementRef x, ElementRef y) {
        if (y < x) std::swap(x, y);
        a = x;
        b = y;
    }

    friend bool operator==(const CellRef& l, const CellRef& r) { return l.a == r.a && l.b == r.b; }
    friend bool operator!=(const CellRef& l, const CellRef& r) { return !(l == r); }
    friend bool operator<(const CellRef& l, const CellRef& r) {
        if (!(l.a == r.a)) return l.a < r.a;
        return l.b < r.b;
    }
};

}  // namespace logigrid
