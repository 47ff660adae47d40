#include "logigrid/cnf.hpp"

#include <algorithm>

namespace logigrid {

namespace {

int pair_rank(int k, int a, int b) {
    // (0,1),(0,2),...,(0,k-1),(1,2),... in lexicographic order
    return a * k - a * (a + 1) / 2 + (b - a - 1);
}

ElementRef at(int cat, int idx) {
    return ElementRef{static_cast<int16_t>(cat), static_cast<int16_t>(idx)};
}

}  // namespace

int var_index(const Puzzle& p, ElementRef e, ElementRef f) {
    if (e.category == f.category)
        throw LgError(Code::same_category, "no variable for a same-category pair");
    if (f.category < e.category) std::swap(e, f);
    int n = p.elements_per_category();
    int rank = pair_rank(p.category_count(), e.category, f.category);
    return rank * n * n + e.index * n + f.index + 1;
}

int var_index(const Puzzle& p, std::string_view e, std::string_view f) {
    return var_index(p, p.element(e), p.element(f));
}

Cnf encode(const Puzzle& p) {
    int k = p.category_count();
    int n = p.elements_per_category();

    Cnf cnf;
    cnf.num_vars = n * n * k * (k - 1) / 2;
    for (int a = 0; a < k; ++a) {
        for (int b = a + 1; b < k; ++b) {
            for (int i = 0; i < n; ++i) {
                for (int j = 0; j < n; ++j) {
                    cnf.var_cells.emplace_back(at(a, i), at(b, j));
                    cnf.var_labels.emplace_back(p.categories[a].elements[i],
                                                p.categories[b].elements[j]);
                }
            }
        }
    }

    auto v = [&](ElementRef e, ElementRef f) { return var_index(p, e, f); };
    auto add = [&](std::vector<int> clause) {
        // an element paired with itself repeats the literal; keep one copy
        std::vector<int> out;
        for (int lit : clause)
            if (std::find(out.begin(), out.end(), lit) == out.end()) out.push_back(lit);
        cnf.clauses.push_back(std::move(out));
    };

    // bijection inside each block: every row and column picks exactly one
    for (int a = 0; a < k; ++a) {
        for (int b = a + 1; b < k; ++b) {
            for (int i = 0; i < n; ++i) {
                std::vector<int> alo;
                for (int j = 0; j < n; ++j) alo.push_back(v(at(a, i), at(b, j)));
                add(alo);
            }
            for (int i = 0; i < n; ++i)
                for (int j1 = 0; j1 < n; ++j1)
                    for (int j2 = j1 + 1; j2 < n; ++j2)
                        add({-v(at(a, i), at(b, j1)), -v(at(a, i), at(b, j2))});
            for (int j = 0; j < n; ++j) {
                std::vector<int> alo;
                for (int i = 0; i < n; ++i) alo.push_back(v(at(a, i), at(b, j)));
                add(alo);
            }
            for (int j = 0; j < n; ++j)
                for (int i1 = 0; i1 < n; ++i1)
                    for (int i2 = i1 + 1; i2 < n; ++i2)
                        add({-v(at(a, i1), at(b, j)), -v(at(a, i2), at(b, j))});
        }
    }

    // channeling: matches compose through any middle category
    for (int a = 0; a < k; ++a) {
        for (int b = a + 1; b < k; ++b) {
            for (int c = 0; c < k; ++c) {
                if (c == a || c == b) continue;
                for (int i = 0; i < n; ++i)
                    for (int j = 0; j < n; ++j)
                        for (int m = 0; m < n; ++m)
                            add({-v(at(a, i), at(c, m)), -v(at(c, m), at(b, j)),
                                 v(at(a, i), at(b, j))});
            }
        }
    }

    // one clause group per constraint, in constraint order
    for (const auto& c : p.constraints) {
        auto el = [&](int i) { return p.element(c.labels[i]); };
        switch (c.kind) {
            case ConstraintKind::yes: add({v(el(0), el(1))}); break;
            case ConstraintKind::no: add({-v(el(0), el(1))}); break;
            case ConstraintKind::or_:
                add({v(el(0), el(1)), v(el(0), el(2))});
                break;
            case ConstraintKind::xor_:
                add({v(el(0), el(1)), v(el(0), el(2))});
                add({-v(el(0), el(1)), -v(el(0), el(2))});
                break;
            case ConstraintKind::alldiff: {
                for (size_t i = 0; i < c.labels.size(); ++i) {
                    for (size_t j = i + 1; j < c.labels.size(); ++j) {
                        ElementRef a = el(static_cast<int>(i)), b = el(static_cast<int>(j));
                        if (a == b)
                            add({});  // the same element can never differ from itself
                        else if (a.category != b.category)
                            add({-v(a, b)});
                    }
                }
                break;
            }
            case ConstraintKind::twobytwo: {
                int xw = v(el(0), el(2)), xz = v(el(0), el(3));
                int yw = v(el(1), el(2)), yz = v(el(1), el(3));
                add({xw, xz});
                add({yw, yz});
                add({-xw, yz});
                add({-xz, yw});
                add({-xw, -xz});
                add({-yw, -yz});
                break;
            }
            case ConstraintKind::before:
            case ConstraintKind::after:
            case ConstraintKind::beforefixed:
            case ConstraintKind::afterfixed:
            case ConstraintKind::beforeatleast:
            case ConstraintKind::afteratleast:
            case ConstraintKind::distance: {
                int cat = p.find_category(c.labels[1]);
                ElementRef x = el(0), y = el(2);
                auto allowed = [&](int px, int py) {
                    switch (c.kind) {
                        case ConstraintKind::before: return px < py;
                        case ConstraintKind::after: return px > py;
                        case ConstraintKind::beforefixed: return py - px == c.n_param;
                        case ConstraintKind::afterfixed: return px - py == c.n_param;
                        case ConstraintKind::beforeatleast: return py - px >= c.n_param;
                        case ConstraintKind::afteratleast: return px - py >= c.n_param;
                        default: return px - py == c.n_param || py - px == c.n_param;
                    }
                };
                for (int px = 0; px < n; ++px) {
                    if (x.category == cat && px != x.index) continue;
                    for (int py = 0; py < n; ++py) {
                        if (y.category == cat && py != y.index) continue;
                        if (allowed(px, py)) continue;
                        std::vector<int> clause;
                        if (x.category != cat) clause.push_back(-v(x, at(cat, px)));
                        if (y.category != cat) clause.push_back(-v(y, at(cat, py)));
                        add(std::move(clause));
                    }
                }
                break;
            }
            case ConstraintKind::disjunction: {
                std::vector<int> clause;
                for (int i = 0; i < c.n_param; ++i) {
                    int lit = v(el(2 * i), el(2 * i + 1));
                    clause.push_back(c.polarities[i] ? lit : -lit);
                }
                add(std::move(clause));
                break;
            }
        }
    }

    return cnf;
}

std::string write_dimacs(const Cnf& cnf) {
    std::string out = "p cnf " + std::to_string(cnf.num_vars) + " " +
                      std::to_string(cnf.clauses.size()) + "\n";
    for (size_t i = 0; i < cnf.var_labels.size(); ++i)
        out += "c cell " + std::to_string(i + 1) + " = " + cnf.var_labels[i].first + "|" +
               cnf.var_labels[i].second + "\n";
    for (const auto& clause : cnf.clauses) {
        std::string line;
        for (int lit : clause) line += std::to_string(lit) + " ";
        out += line + "0\n";
    }
    return out;
}

}  // namespace logigrid
