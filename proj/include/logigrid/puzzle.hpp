#pragma once

#include <optional>
#include <string>
#include <string_view>
#include <unordered_map>
#include <vector>

#include "logigrid/types.hpp"

namespace logigrid {

// The fourteen constraint kinds. `or`/`xor` are reserved tokens in C++, hence
// the trailing underscores; kind_name() yields the surface spelling.
enum class ConstraintKind : uint8_t {
    yes,
    no,
    or_,
    xor_,
    alldiff,
    twobytwo,
    before,
    after,
    beforefixed,
    afterfixed,
    beforeatleast,
    afteratleast,
    distance,
    disjunction,
};

const char* kind_name(ConstraintKind k);
std::optional<ConstraintKind> kind_from_name(std::string_view name);

// before..distance: the middle label names a category and the constraint
// talks about positions inside it.
bool kind_is_positional(ConstraintKind k);
// alldiff and beforefixed..distance carry a numeric parameter.
bool kind_has_n_param(ConstraintKind k);

struct Constraint {
    int clue_id = 0;  // clue 0 is the puzzle's opening statement
    ConstraintKind kind = ConstraintKind::yes;
    // Role order is the order the kind's definition lists them in. Positional
    // kinds keep the category label in the middle slot (X, C, Y).
    std::vector<std::string> labels;
    int n_param = 0;               // alldiff count / positional offset
    std::vector<bool> polarities;  // disjunction only, true = positive disjunct
    int source_line = 0;           // 1-based document line, 0 if synthetic

    friend bool operator==(const Constraint& l, const Constraint& r) {
        return l.clue_id == r.clue_id && l.kind == r.kind && l.labels == r.labels &&
               l.n_param == r.n_param && l.polarities == r.polarities;
    }
};

struct Category {
    std::string label;
    std::vector<std::string> elements;
    bool ordered = false;

    friend bool operator==(const Category& l, const Category& r) {
        return l.label == r.label && l.elements == r.elements && l.ordered == r.ordered;
    }
};

struct Issue {
    Code code = Code::ok;
    int line = 0;
    std::string message;
};

class Puzzle {
public:
    std::string name;
    std::vector<Category> categories;
    // Sorted by clue id, ties kept in input order; finalize() enforces this.
    std::vector<Constraint> constraints;

    int category_count() const { return static_cast<int>(categories.size()); }
    int elements_per_category() const {
        return categories.empty() ? 0 : static_cast<int>(categories.front().elements.size());
    }

    // Rebuilds the label index and stable-sorts constraints by clue id.
    // Call after mutating categories or constraints by hand.
    void finalize();

    std::optional<ElementRef> find_element(std::string_view label) const;
    ElementRef element(std::string_view label) const;  // throws unknown_label
    const std::string& label(ElementRef e) const;
    int find_category(std::string_view label) const;  // -1 when absent

    // Structural checks (label existence, arity, cross-category requirements,
    // ordered-category requirements). Empty result means the puzzle is sound.
    std::vector<Issue> validate() const;

    friend bool operator==(const Puzzle& l, const Puzzle& r) {
        return l.name == r.name && l.categories == r.categories && l.constraints == r.constraints;
    }

private:
    std::unordered_map<std::string, ElementRef> index_;
};

// Shared by validate() and the interactive acquirer: checks a single
// constraint against the declared categories. Returns issues, empty if fine.
std::vector<Issue> check_constraint(const Puzzle& p, const Constraint& c);

}  // namespace logigrid
