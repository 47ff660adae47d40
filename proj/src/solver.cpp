#include "logigrid/solver.hpp"

#include <algorithm>

namespace logigrid {

bool rule_is_basic(RuleTag t) { return t == RuleTag::bcr_clear || t == RuleTag::bcr_last; }

bool rule_is_advanced(RuleTag t) {
    return t == RuleTag::acr_transitive || t == RuleTag::acr_pairwise;
}

const char* status_name(SolveStatus s) {
    switch (s) {
        case SolveStatus::solved: return "solved";
        case SolveStatus::stuck: return "stuck";
        case SolveStatus::contradiction: return "contradiction";
    }
    return "?";
}

namespace {

ElementRef at(int cat, int idx) {
    return ElementRef{static_cast<int16_t>(cat), static_cast<int16_t>(idx)};
}

Premise premise_of(const Grid& g, ElementRef e, ElementRef f) {
    return Premise{CellRef(e, f), g.get(e, f)};
}

// Applies one candidate fill; records an event when the grid changed.
bool apply_fill(Grid& g, std::vector<DeductionEvent>& out, ElementRef e, ElementRef f,
                CellState v, RuleTag tag, int constraint_index, std::vector<Premise> premises,
                int param_a = 0, int param_b = 0, ElementRef aux = {}) {
    if (g.set(e, f, v) == FillResult::noop) return false;
    DeductionEvent ev;
    ev.cell = CellRef(e, f);
    ev.value = v;
    ev.tag = tag;
    ev.constraint_index = constraint_index;
    ev.premises = std::move(premises);
    ev.param_a = param_a;
    ev.param_b = param_b;
    ev.aux = aux;
    out.push_back(std::move(ev));
    return true;
}

// ---- clue rules ------------------------------------------------------

struct ClueCtx {
    Grid& g;
    const Puzzle& p;
    int cidx;
    const Constraint& c;
    std::vector<DeductionEvent>& out;
};

// Shared by or, xor and the two derived disjunctions inside twobytwo:
//   (a) X incompatible with Y  => X is Z
//   (b) X incompatible with Z  => X is Y
//   (c) W incompatible with both Y and Z => X is not W, for every W outside
//       X's category (element order, categories ascending).
void or_rules(ClueCtx& ctx, ElementRef x, ElementRef y, ElementRef z, RuleTag force,
              RuleTag eliminate) {
    Grid& g = ctx.g;
    if (g.incompatible(x, y))
        apply_fill(g, ctx.out, x, z, CellState::yes, force, ctx.cidx, {premise_of(g, x, y)}, 0,
                   0, x);
    if (g.incompatible(x, z))
        apply_fill(g, ctx.out, x, y, CellState::yes, force, ctx.cidx, {premise_of(g, x, z)}, 0,
                   0, x);
    for (int cat = 0; cat < g.k(); ++cat) {
        if (cat == x.category) continue;
        for (int i = 0; i < g.n(); ++i) {
            ElementRef w = at(cat, i);
            if (!g.incompatible(w, y) || !g.incompatible(w, z)) continue;
            std::vector<Premise> prem;
            if (w.category != y.category) prem.push_back(premise_of(g, w, y));
            if (w.category != z.category) prem.push_back(premise_of(g, w, z));
            apply_fill(g, ctx.out, x, w, CellState::no, eliminate, ctx.cidx, std::move(prem), 0,
                       0, x);
        }
    }
}

void rule_or(ClueCtx& ctx) {
    ElementRef x = ctx.p.element(ctx.c.labels[0]);
    ElementRef y = ctx.p.element(ctx.c.labels[1]);
    ElementRef z = ctx.p.element(ctx.c.labels[2]);
    or_rules(ctx, x, y, z, RuleTag::or_force, RuleTag::or_eliminate);
}

void rule_xor(ClueCtx& ctx) {
    Grid& g = ctx.g;
    ElementRef x = ctx.p.element(ctx.c.labels[0]);
    ElementRef y = ctx.p.element(ctx.c.labels[1]);
    ElementRef z = ctx.p.element(ctx.c.labels[2]);
    or_rules(ctx, x, y, z, RuleTag::or_force, RuleTag::or_eliminate);
    // exactly-one: an entailed alternative denies the other
    if (g.entails_match(x, y))
        apply_fill(g, ctx.out, x, z, CellState::no, RuleTag::xor_exclude, ctx.cidx,
                   {premise_of(g, x, y)}, 0, 0, x);
    if (g.entails_match(x, z))
        apply_fill(g, ctx.out, x, y, CellState::no, RuleTag::xor_exclude, ctx.cidx,
                   {premise_of(g, x, z)}, 0, 0, x);
    // anything matched with both alternatives cannot be X
    for (int cat = 0; cat < g.k(); ++cat) {
        if (cat == x.category) continue;
        for (int i = 0; i < g.n(); ++i) {
            ElementRef w = at(cat, i);
            if (!g.entails_match(w, y) || !g.entails_match(w, z)) continue;
            std::vector<Premise> prem;
            if (w.category != y.category && w != y) prem.push_back(premise_of(g, w, y));
            if (w.category != z.category && w != z) prem.push_back(premise_of(g, w, z));
            apply_fill(g, ctx.out, x, w, CellState::no, RuleTag::xor_pair_exclude, ctx.cidx,
                       std::move(prem), 0, 0, x);
        }
    }
}

void rule_alldiff(ClueCtx& ctx) {
    const auto& labels = ctx.c.labels;
    for (size_t i = 0; i < labels.size(); ++i) {
        for (size_t j = i + 1; j < labels.size(); ++j) {
            ElementRef a = ctx.p.element(labels[i]);
            ElementRef b = ctx.p.element(labels[j]);
            if (a.category == b.category) continue;  // distinct by definition
            apply_fill(ctx.g, ctx.out, a, b, CellState::no, RuleTag::alldiff_pair, ctx.cidx, {});
        }
    }
}

void rule_twobytwo(ClueCtx& ctx) {
    Grid& g = ctx.g;
    ElementRef x = ctx.p.element(ctx.c.labels[0]);
    ElementRef y = ctx.p.element(ctx.c.labels[1]);
    ElementRef w = ctx.p.element(ctx.c.labels[2]);
    ElementRef z = ctx.p.element(ctx.c.labels[3]);

    or_rules(ctx, x, w, z, RuleTag::two_or_force, RuleTag::two_or_eliminate);
    or_rules(ctx, y, w, z, RuleTag::two_or_force, RuleTag::two_or_eliminate);

    // linkage between the two scenarios {X->W, Y->Z} and {X->Z, Y->W};
    // the reading is exclusive even when W and Z sit in different categories
    struct Pair {
        ElementRef a, b;       // the tested match
        ElementRef pa, ob;     // partner of a, the other of b
    };
    const Pair pairs[] = {{x, w, y, z}, {x, z, y, w}, {y, w, x, z}, {y, z, x, w}};
    for (const auto& pr : pairs) {
        if (!g.entails_match(pr.a, pr.b)) continue;
        std::vector<Premise> prem{premise_of(g, pr.a, pr.b)};
        apply_fill(g, ctx.out, pr.pa, pr.ob, CellState::yes, RuleTag::two_link_yes, ctx.cidx,
                   prem, 0, 0, pr.a);
        if (w.category != z.category)
            apply_fill(g, ctx.out, pr.a, pr.ob, CellState::no, RuleTag::two_link_no, ctx.cidx,
                       prem, 0, 0, pr.a);
    }
    for (const auto& pr : pairs) {
        if (!g.incompatible(pr.a, pr.b)) continue;
        std::vector<Premise> prem{premise_of(g, pr.a, pr.b)};
        apply_fill(g, ctx.out, pr.a, pr.ob, CellState::yes, RuleTag::two_force, ctx.cidx, prem,
                   0, 0, pr.a);
        apply_fill(g, ctx.out, pr.pa, pr.b, CellState::yes, RuleTag::two_force, ctx.cidx, prem,
                   0, 0, pr.a);
    }
}

// Premise cells behind min/max of a feasible set: the pinning yes if there is
// one, otherwise the no cells cut off by the bound.
std::vector<Premise> bound_basis(const Grid& g, ElementRef e, int cat, bool lower, int bound) {
    std::vector<Premise> prem;
    if (e.category == cat) return prem;  // the element's own position, no cells involved
    for (int p = 0; p < g.n(); ++p) {
        if (g.get(e, at(cat, p)) == CellState::yes) {
            prem.push_back(premise_of(g, e, at(cat, p)));
            return prem;
        }
    }
    if (lower) {
        for (int p = 0; p < bound; ++p) prem.push_back(premise_of(g, e, at(cat, p)));
    } else {
        for (int p = bound + 1; p < g.n(); ++p) prem.push_back(premise_of(g, e, at(cat, p)));
    }
    return prem;
}

// Order constraints, generalized over the gap g (1 for before/after, n for
// the atleast kinds). earlier/later follow the kind; fills happen in the
// constraint's role order: the mutual no first, then X's cells, then Y's.
void rule_order(ClueCtx& ctx, int gap) {
    Grid& g = ctx.g;
    ElementRef x = ctx.p.element(ctx.c.labels[0]);
    int cat = ctx.p.find_category(ctx.c.labels[1]);
    ElementRef y = ctx.p.element(ctx.c.labels[2]);
    bool x_is_later =
        ctx.c.kind == ConstraintKind::after || ctx.c.kind == ConstraintKind::afteratleast;
    ElementRef earlier = x_is_later ? y : x;
    ElementRef later = x_is_later ? x : y;

    if (x.category != y.category)
        apply_fill(g, ctx.out, x, y, CellState::no, RuleTag::pos_not_equal, ctx.cidx, {});

    // the later element cannot sit in the first min(earlier)+gap positions
    auto lower_fills = [&]() {
        if (later.category == cat) return;
        int min_a = g.feasible_positions(earlier, cat).front();
        auto basis = bound_basis(g, earlier, cat, true, min_a);
        auto feas = g.feasible_positions(later, cat);
        for (int q : feas) {
            if (q - gap < min_a)
                apply_fill(g, ctx.out, later, at(cat, q), CellState::no, RuleTag::pos_bound_low,
                           ctx.cidx, basis, min_a, min_a + gap);
        }
    };
    // the earlier element cannot sit in the last (n-1-max(later))+gap positions
    auto upper_fills = [&]() {
        if (earlier.category == cat) return;
        int max_b = g.feasible_positions(later, cat).back();
        auto basis = bound_basis(g, later, cat, false, max_b);
        auto feas = g.feasible_positions(earlier, cat);
        int m = g.n() - 1 - max_b;
        for (int p : feas) {
            if (p + gap > max_b)
                apply_fill(g, ctx.out, earlier, at(cat, p), CellState::no, RuleTag::pos_bound_high,
                           ctx.cidx, basis, m, m + gap);
        }
    };

    if (x_is_later) {
        lower_fills();
        upper_fills();
    } else {
        upper_fills();
        lower_fills();
    }
}

// Exact offset: pos(B) = pos(A) + off.
void rule_fixed(ClueCtx& ctx) {
    Grid& g = ctx.g;
    ElementRef x = ctx.p.element(ctx.c.labels[0]);
    int cat = ctx.p.find_category(ctx.c.labels[1]);
    ElementRef y = ctx.p.element(ctx.c.labels[2]);
    int off = ctx.c.n_param;
    bool x_first = ctx.c.kind == ConstraintKind::beforefixed;
    ElementRef a = x_first ? x : y;
    ElementRef b = x_first ? y : x;

    auto pos_no = [&](ElementRef e, int pos) {
        // "e cannot be at pos": off-grid elements have a fixed position
        if (e.category == cat) return pos != e.index;
        return g.get(e, at(cat, pos)) == CellState::no;
    };
    auto pos_yes = [&](ElementRef e, int pos) {
        if (e.category == cat) return pos == e.index;
        return g.get(e, at(cat, pos)) == CellState::yes;
    };
    auto sweep = [&](ElementRef from, ElementRef to, int delta, int side) {
        for (int p = 0; p < g.n(); ++p) {
            int q = p + delta;
            if (from.category != cat) {
                if (q < 0 || q >= g.n()) {
                    apply_fill(g, ctx.out, from, at(cat, p), CellState::no,
                               RuleTag::fixed_no_range, ctx.cidx, {}, off, side);
                } else if (pos_no(to, q)) {
                    std::vector<Premise> prem;
                    if (to.category != cat) prem.push_back(premise_of(g, to, at(cat, q)));
                    apply_fill(g, ctx.out, from, at(cat, p), CellState::no,
                               RuleTag::fixed_no_cell, ctx.cidx, std::move(prem), q, side);
                }
            }
            if (q >= 0 && q < g.n() && pos_yes(from, p) && to.category != cat) {
                std::vector<Premise> prem;
                if (from.category != cat) prem.push_back(premise_of(g, from, at(cat, p)));
                apply_fill(g, ctx.out, to, at(cat, q), CellState::yes, RuleTag::fixed_yes,
                           ctx.cidx, std::move(prem), p, side);
            }
        }
    };
    sweep(a, b, +off, 0);
    sweep(b, a, -off, 1);
}

// |pos(X) - pos(Y)| = off, either direction.
void rule_distance(ClueCtx& ctx) {
    Grid& g = ctx.g;
    ElementRef x = ctx.p.element(ctx.c.labels[0]);
    int cat = ctx.p.find_category(ctx.c.labels[1]);
    ElementRef y = ctx.p.element(ctx.c.labels[2]);
    int off = ctx.c.n_param;

    auto side = [&](ElementRef from, ElementRef to) {
        auto feas_to = g.feasible_positions(to, cat);
        auto feasible = [&](int q) {
            return q >= 0 && q < g.n() &&
                   std::find(feas_to.begin(), feas_to.end(), q) != feas_to.end();
        };
        // why position q is off the table for `to`
        auto basis = [&](int q, std::vector<Premise>& prem) {
            if (q < 0 || q >= g.n() || to.category == cat) return;
            if (g.get(to, at(cat, q)) == CellState::no) {
                prem.push_back(premise_of(g, to, at(cat, q)));
            } else {
                for (int r = 0; r < g.n(); ++r)
                    if (g.get(to, at(cat, r)) == CellState::yes) {
                        prem.push_back(premise_of(g, to, at(cat, r)));
                        return;
                    }
            }
        };
        auto pinned_yes = [&](int p) {
            if (from.category == cat) return p == from.index;
            return g.get(from, at(cat, p)) == CellState::yes;
        };

        for (int p = 0; p < g.n(); ++p) {
            int lo = p - off, hi = p + off;
            bool lo_ok = feasible(lo), hi_ok = feasible(hi);
            if (from.category != cat && !lo_ok && !hi_ok &&
                g.get(from, at(cat, p)) == CellState::unknown) {
                std::vector<Premise> prem;
                basis(lo, prem);
                basis(hi, prem);
                apply_fill(g, ctx.out, from, at(cat, p), CellState::no, RuleTag::dist_no,
                           ctx.cidx, std::move(prem), p);
            }
            if (pinned_yes(p)) {
                std::vector<Premise> prem;
                if (from.category != cat) prem.push_back(premise_of(g, from, at(cat, p)));
                if (!lo_ok && hi >= 0 && hi < g.n() && to.category != cat) {
                    basis(lo, prem);
                    apply_fill(g, ctx.out, to, at(cat, hi), CellState::yes, RuleTag::dist_yes,
                               ctx.cidx, std::move(prem), p, 0, from);
                } else if (!hi_ok && lo >= 0 && lo < g.n() && to.category != cat) {
                    basis(hi, prem);
                    apply_fill(g, ctx.out, to, at(cat, lo), CellState::yes, RuleTag::dist_yes,
                               ctx.cidx, std::move(prem), p, 0, from);
                }
            }
        }
    };
    side(x, y);
    side(y, x);
}

void rule_disjunction(ClueCtx& ctx) {
    Grid& g = ctx.g;
    const Constraint& c = ctx.c;
    int survivor = -1;
    std::vector<Premise> prem;
    for (int i = 0; i < c.n_param; ++i) {
        ElementRef a = ctx.p.element(c.labels[2 * i]);
        ElementRef b = ctx.p.element(c.labels[2 * i + 1]);
        bool refuted = c.polarities[i] ? g.incompatible(a, b) : g.entails_match(a, b);
        if (refuted) {
            prem.push_back(premise_of(g, a, b));
        } else {
            if (survivor >= 0) return;  // two live disjuncts, nothing to conclude
            survivor = i;
        }
    }
    if (survivor < 0) return;  // all refuted; the conflict surfaces elsewhere
    ElementRef a = ctx.p.element(c.labels[2 * survivor]);
    ElementRef b = ctx.p.element(c.labels[2 * survivor + 1]);
    apply_fill(g, ctx.out, a, b, c.polarities[survivor] ? CellState::yes : CellState::no,
               RuleTag::disjunction_force, ctx.cidx, std::move(prem), survivor);
}

void clue_pass_into(Grid& grid, int constraint_index, std::vector<DeductionEvent>& out) {
    const Puzzle& p = grid.puzzle();
    const Constraint& c = p.constraints.at(constraint_index);
    ClueCtx ctx{grid, p, constraint_index, c, out};
    switch (c.kind) {
        case ConstraintKind::yes:
            apply_fill(grid, out, p.element(c.labels[0]), p.element(c.labels[1]), CellState::yes,
                       RuleTag::clue_yes, constraint_index, {});
            break;
        case ConstraintKind::no:
            apply_fill(grid, out, p.element(c.labels[0]), p.element(c.labels[1]), CellState::no,
                       RuleTag::clue_no, constraint_index, {});
            break;
        case ConstraintKind::or_: rule_or(ctx); break;
        case ConstraintKind::xor_: rule_xor(ctx); break;
        case ConstraintKind::alldiff: rule_alldiff(ctx); break;
        case ConstraintKind::twobytwo: rule_twobytwo(ctx); break;
        case ConstraintKind::before:
        case ConstraintKind::after: rule_order(ctx, 1); break;
        case ConstraintKind::beforeatleast:
        case ConstraintKind::afteratleast: rule_order(ctx, c.n_param); break;
        case ConstraintKind::beforefixed:
        case ConstraintKind::afterfixed: rule_fixed(ctx); break;
        case ConstraintKind::distance: rule_distance(ctx); break;
        case ConstraintKind::disjunction: rule_disjunction(ctx); break;
    }
}

// ---- basic consistency -----------------------------------------------

std::optional<DeductionEvent> b1_step(Grid& g) {
    std::vector<DeductionEvent> out;
    for (auto [a, b] : g.blocks()) {
        for (int i = 0; i < g.n(); ++i) {
            for (int j = 0; j < g.n(); ++j) {
                if (g.get(at(a, i), at(b, j)) != CellState::yes) continue;
                Premise prem = premise_of(g, at(a, i), at(b, j));
                for (int j2 = 0; j2 < g.n(); ++j2) {
                    if (j2 == j || g.get(at(a, i), at(b, j2)) != CellState::unknown) continue;
                    apply_fill(g, out, at(a, i), at(b, j2), CellState::no, RuleTag::bcr_clear, -1,
                               {prem});
                    return out.front();
                }
                for (int i2 = 0; i2 < g.n(); ++i2) {
                    if (i2 == i || g.get(at(a, i2), at(b, j)) != CellState::unknown) continue;
                    apply_fill(g, out, at(a, i2), at(b, j), CellState::no, RuleTag::bcr_clear, -1,
                               {prem});
                    return out.front();
                }
            }
        }
    }
    return std::nullopt;
}

std::optional<DeductionEvent> b2_step(Grid& g) {
    std::vector<DeductionEvent> out;
    auto try_line = [&](auto cell_at) -> bool {
        int unknown_at = -1;
        int nos = 0;
        for (int t = 0; t < g.n(); ++t) {
            CellState s = g.get(cell_at(t).a, cell_at(t).b);
            if (s == CellState::no)
                ++nos;
            else if (s == CellState::unknown)
                unknown_at = t;
        }
        if (nos != g.n() - 1 || unknown_at < 0) return false;
        std::vector<Premise> prem;
        for (int t = 0; t < g.n(); ++t)
            if (t != unknown_at) prem.push_back(premise_of(g, cell_at(t).a, cell_at(t).b));
        apply_fill(g, out, cell_at(unknown_at).a, cell_at(unknown_at).b, CellState::yes,
                   RuleTag::bcr_last, -1, std::move(prem));
        return true;
    };
    for (auto [a, b] : g.blocks()) {
        for (int i = 0; i < g.n(); ++i) {
            if (try_line([&, a = a, b = b](int t) { return CellRef(at(a, i), at(b, t)); }))
                return out.front();
        }
        for (int j = 0; j < g.n(); ++j) {
            if (try_line([&, a = a, b = b](int t) { return CellRef(at(a, t), at(b, j)); }))
                return out.front();
        }
    }
    return std::nullopt;
}

}  // namespace

std::vector<DeductionEvent> clue_rule_pass(Grid& grid, int constraint_index) {
    std::vector<DeductionEvent> out;
    clue_pass_into(grid, constraint_index, out);
    return out;
}

std::optional<DeductionEvent> bcr_step(Grid& grid) {
    if (auto ev = b1_step(grid)) return ev;
    return b2_step(grid);
}

std::optional<DeductionEvent> acr_step(Grid& grid) {
    Grid& g = grid;
    std::vector<DeductionEvent> out;
    // A1: two chained yes cells force the closing yes
    for (auto [a, b] : g.blocks()) {
        for (int i = 0; i < g.n(); ++i) {
            for (int j = 0; j < g.n(); ++j) {
                ElementRef e = at(a, i), f = at(b, j);
                if (g.get(e, f) != CellState::unknown) continue;
                for (int c = 0; c < g.k(); ++c) {
                    if (c == a || c == b) continue;
                    for (int m = 0; m < g.n(); ++m) {
                        ElementRef mid = at(c, m);
                        if (g.get(e, mid) != CellState::yes || g.get(mid, f) != CellState::yes)
                            continue;
                        apply_fill(g, out, e, f, CellState::yes, RuleTag::acr_transitive, -1,
                                   {premise_of(g, e, mid), premise_of(g, mid, f)}, 0, 0, mid);
                        return out.front();
                    }
                }
            }
        }
    }
    // A2: no element of some third category can join both e and f
    for (auto [a, b] : g.blocks()) {
        for (int i = 0; i < g.n(); ++i) {
            for (int j = 0; j < g.n(); ++j) {
                ElementRef e = at(a, i), f = at(b, j);
                if (g.get(e, f) != CellState::unknown) continue;
                for (int c = 0; c < g.k(); ++c) {
                    if (c == a || c == b) continue;
                    std::vector<Premise> prem;
                    bool all_blocked = true;
                    for (int m = 0; m < g.n() && all_blocked; ++m) {
                        ElementRef mid = at(c, m);
                        if (g.get(e, mid) == CellState::no)
                            prem.push_back(premise_of(g, e, mid));
                        else if (g.get(mid, f) == CellState::no)
                            prem.push_back(premise_of(g, mid, f));
                        else
                            all_blocked = false;
                    }
                    if (!all_blocked) continue;
                    apply_fill(g, out, e, f, CellState::no, RuleTag::acr_pairwise, -1,
                               std::move(prem), c);
                    return out.front();
                }
            }
        }
    }
    return std::nullopt;
}

SolveResult solve(const Puzzle& puzzle) {
    SolveResult res{SolveStatus::stuck, Grid(puzzle), {}};
    Grid& grid = res.grid;
    auto& events = res.events;

    try {
        while (true) {
            bool progress = false;
            for (size_t ci = 0; ci < puzzle.constraints.size(); ++ci) {
                size_t before = events.size();
                clue_pass_into(grid, static_cast<int>(ci), events);
                progress = progress || events.size() > before;
            }
            while (auto ev = bcr_step(grid)) {
                events.push_back(std::move(*ev));
                progress = true;
            }
            if (grid.complete()) {
                res.status = SolveStatus::solved;
                break;
            }
            if (progress) continue;
            if (auto ev = acr_step(grid)) {
                events.push_back(std::move(*ev));
                continue;
            }
            res.status = SolveStatus::stuck;
            break;
        }
    } catch (const LgError& err) {
        if (err.code != Code::contradiction && err.code != Code::empty_domain) throw;
        res.status = SolveStatus::contradiction;
    }

    for (size_t i = 0; i < events.size(); ++i) events[i].seq = static_cast<int>(i);
    return res;
}

}  // namespace logigrid
