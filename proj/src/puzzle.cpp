#include "logigrid/puzzle.hpp"

#include <algorithm>

namespace logigrid {

namespace {

struct KindInfo {
    ConstraintKind kind;
    const char* name;
};

constexpr KindInfo kKinds[] = {
    {ConstraintKind::yes, "yes"},
    {ConstraintKind::no, "no"},
    {ConstraintKind::or_, "or"},
    {ConstraintKind::xor_, "xor"},
    {ConstraintKind::alldiff, "alldiff"},
    {ConstraintKind::twobytwo, "twobytwo"},
    {ConstraintKind::before, "before"},
    {ConstraintKind::after, "after"},
    {ConstraintKind::beforefixed, "beforefixed"},
    {ConstraintKind::afterfixed, "afterfixed"},
    {ConstraintKind::beforeatleast, "beforeatleast"},
    {ConstraintKind::afteratleast, "afteratleast"},
    {ConstraintKind::distance, "distance"},
    {ConstraintKind::disjunction, "disjunction"},
};

}  // namespace

const char* code_name(Code c) {
    switch (c) {
        case Code::ok: return "ok";
        case Code::syntax: return "SyntaxError";
        case Code::unknown_label: return "UnknownLabel";
        case Code::arity: return "ArityError";
        case Code::unordered_category: return "UnorderedCategory";
        case Code::duplicate_label: return "DuplicateLabel";
        case Code::same_category: return "SameCategory";
        case Code::same_category_pair: return "SameCategoryPair";
        case Code::bad_category_size: return "BadCategorySize";
        case Code::bad_n_param: return "BadNParam";
        case Code::contradiction: return "Contradiction";
        case Code::empty_domain: return "EmptyDomain";
        case Code::target_never_filled: return "TargetNeverFilled";
        case Code::invalid_argument: return "InvalidArgument";
        case Code::io_error: return "IoError";
    }
    return "unknown";
}

const char* kind_name(ConstraintKind k) {
    for (const auto& info : kKinds)
        if (info.kind == k) return info.name;
    return "?";
}

std::optional<ConstraintKind> kind_from_name(std::string_view name) {
    for (const auto& info : kKinds)
        if (name == info.name) return info.kind;
    return std::nullopt;
}

bool kind_is_positional(ConstraintKind k) {
    switch (k) {
        case ConstraintKind::before:
        case ConstraintKind::after:
        case ConstraintKind::beforefixed:
        case ConstraintKind::afterfixed:
        case ConstraintKind::beforeatleast:
        case ConstraintKind::afteratleast:
        case ConstraintKind::distance:
            return true;
        default:
            return false;
    }
}

bool kind_has_n_param(ConstraintKind k) {
    switch (k) {
        case ConstraintKind::alldiff:
        case ConstraintKind::beforefixed:
        case ConstraintKind::afterfixed:
        case ConstraintKind::beforeatleast:
        case ConstraintKind::afteratleast:
        case ConstraintKind::distance:
            return true;
        default:
            return false;
    }
}

void Puzzle::finalize() {
    index_.clear();
    for (size_t ci = 0; ci < categories.size(); ++ci) {
        const auto& cat = categories[ci];
        for (size_t ei = 0; ei < cat.elements.size(); ++ei) {
            index_.emplace(cat.elements[ei],
                           ElementRef{static_cast<int16_t>(ci), static_cast<int16_t>(ei)});
        }
    }
    std::stable_sort(constraints.begin(), constraints.end(),
                     [](const Constraint& l, const Constraint& r) { return l.clue_id < r.clue_id; });
}

std::optional<ElementRef> Puzzle::find_element(std::string_view label) const {
    auto it = index_.find(std::string(label));
    if (it == index_.end()) return std::nullopt;
    return it->second;
}

ElementRef Puzzle::element(std::string_view label) const {
    auto ref = find_element(label);
    if (!ref) throw LgError(Code::unknown_label, "unknown label \"" + std::string(label) + "\"");
    return *ref;
}

const std::string& Puzzle::label(ElementRef e) const {
    return categories.at(e.category).elements.at(e.index);
}

int Puzzle::find_category(std::string_view label) const {
    for (size_t i = 0; i < categories.size(); ++i)
        if (categories[i].label == label) return static_cast<int>(i);
    return -1;
}

namespace {

void require_cross(const Puzzle& p, const Constraint& c, const std::string& x,
                   const std::string& y, std::vector<Issue>& out) {
    auto ex = p.find_element(x);
    auto ey = p.find_element(y);
    if (!ex || !ey) return;  // reported separately
    if (ex->category == ey->category) {
        out.push_back({Code::same_category_pair, c.source_line,
                       "clue " + std::to_string(c.clue_id) + ": \"" + x + "\" and \"" + y +
                           "\" are in the same category but must be matchable"});
    }
}

}  // namespace

std::vector<Issue> check_constraint(const Puzzle& p, const Constraint& c) {
    std::vector<Issue> out;
    auto arity = [&](size_t want) {
        if (c.labels.size() != want) {
            out.push_back({Code::arity, c.source_line,
                           "clue " + std::to_string(c.clue_id) + ": " + kind_name(c.kind) +
                               " takes " + std::to_string(want) + " labels, got " +
                               std::to_string(c.labels.size())});
            return false;
        }
        return true;
    };
    auto element_exists = [&](const std::string& l) {
        if (!p.find_element(l)) {
            out.push_back({Code::unknown_label, c.source_line,
                           "clue " + std::to_string(c.clue_id) + ": unknown label \"" + l + "\""});
            return false;
        }
        return true;
    };

    if (c.clue_id < 0) {
        out.push_back({Code::invalid_argument, c.source_line, "negative clue id"});
    }

    if (kind_is_positional(c.kind)) {
        if (!arity(3)) return out;
        const std::string& x = c.labels[0];
        const std::string& cat = c.labels[1];
        const std::string& y = c.labels[2];
        int ci = p.find_category(cat);
        if (ci < 0) {
            out.push_back({Code::unknown_label, c.source_line,
                           "clue " + std::to_string(c.clue_id) + ": \"" + cat +
                               "\" does not name a category"});
        } else if (!p.categories[ci].ordered) {
            out.push_back({Code::unordered_category, c.source_line,
                           "clue " + std::to_string(c.clue_id) + ": category \"" + cat +
                               "\" is not ordered"});
        }
        element_exists(x);
        element_exists(y);
        if (c.kind != ConstraintKind::before && c.kind != ConstraintKind::after &&
            c.n_param < 1) {
            out.push_back({Code::bad_n_param, c.source_line,
                           "clue " + std::to_string(c.clue_id) + ": offset must be positive"});
        }
        return out;
    }

    switch (c.kind) {
        case ConstraintKind::yes:
        case ConstraintKind::no:
            if (!arity(2)) break;
            if (element_exists(c.labels[0]) & element_exists(c.labels[1]))
                require_cross(p, c, c.labels[0], c.labels[1], out);
            break;
        case ConstraintKind::or_:
        case ConstraintKind::xor_:
            if (!arity(3)) break;
            for (const auto& l : c.labels) element_exists(l);
            require_cross(p, c, c.labels[0], c.labels[1], out);
            require_cross(p, c, c.labels[0], c.labels[2], out);
            break;
        case ConstraintKind::alldiff:
            if (c.n_param < 1) {
                out.push_back({Code::bad_n_param, c.source_line,
                               "clue " + std::to_string(c.clue_id) + ": alldiff needs n >= 1"});
            }
            if (static_cast<int>(c.labels.size()) != c.n_param) {
                out.push_back({Code::arity, c.source_line,
                               "clue " + std::to_string(c.clue_id) + ": alldiff lists " +
                                   std::to_string(c.labels.size()) + " labels, declared " +
                                   std::to_string(c.n_param)});
            }
            for (const auto& l : c.labels) element_exists(l);
            break;
        case ConstraintKind::twobytwo:
            if (!arity(4)) break;
            for (const auto& l : c.labels) element_exists(l);
            require_cross(p, c, c.labels[0], c.labels[2], out);
            require_cross(p, c, c.labels[0], c.labels[3], out);
            require_cross(p, c, c.labels[1], c.labels[2], out);
            require_cross(p, c, c.labels[1], c.labels[3], out);
            break;
        case ConstraintKind::disjunction: {
            if (c.n_param < 1) {
                out.push_back({Code::bad_n_param, c.source_line,
                               "clue " + std::to_string(c.clue_id) + ": disjunction needs n >= 1"});
                break;
            }
            if (static_cast<int>(c.polarities.size()) != c.n_param ||
                static_cast<int>(c.labels.size()) != 2 * c.n_param) {
                out.push_back({Code::arity, c.source_line,
                               "clue " + std::to_string(c.clue_id) +
                                   ": disjunction wants n polarities and 2n labels"});
                break;
            }
            for (const auto& l : c.labels) element_exists(l);
            for (int i = 0; i < c.n_param; ++i)
                require_cross(p, c, c.labels[2 * i], c.labels[2 * i + 1], out);
            break;
        }
        default:
            break;
    }
    return out;
}

std::vector<Issue> Puzzle::validate() const {
    std::vector<Issue> out;
    if (categories.size() < 2) {
        out.push_back({Code::bad_category_size, 0, "a puzzle needs at least two categories"});
    }
    int n = elements_per_category();
    if (n < 2 && !categories.empty()) {
        out.push_back({Code::bad_category_size, 0, "categories need at least two elements"});
    }
    for (const auto& cat : categories) {
        if (static_cast<int>(cat.elements.size()) != n) {
            out.push_back({Code::bad_category_size, 0,
                           "category \"" + cat.label + "\" has " +
                               std::to_string(cat.elements.size()) + " elements, expected " +
                               std::to_string(n)});
        }
    }
    // label uniqueness across all categories
    {
        std::vector<std::string> all;
        for (const auto& cat : categories)
            for (const auto& e : cat.elements) all.push_back(e);
        std::sort(all.begin(), all.end());
        for (size_t i = 1; i < all.size(); ++i) {
            if (all[i] == all[i - 1]) {
                out.push_back({Code::duplicate_label, 0, "duplicate label \"" + all[i] + "\""});
            }
        }
    }
    for (const auto& c : constraints) {
        auto issues = check_constraint(*this, c);
        out.insert(out.end(), issues.begin(), issues.end());
    }
    return out;
}

}  // namespace logigrid
