#include "logigrid/explain.hpp"

#include <algorithm>
#include <set>
#include <sstream>

#include "json.hpp"

namespace logigrid {

namespace {

std::string q(const std::string& s) { return "\"" + s + "\""; }

std::string q(const Puzzle& p, ElementRef e) { return q(p.label(e)); }

std::string counted(int n, const char* noun) {
    std::string s = std::to_string(n) + " " + noun;
    if (n != 1) s += "s";
    return s;
}

// "(Clue 3)" attribution appended to the clue fragment.
std::string clue_ref(const Constraint& c) {
    return " (Clue " + std::to_string(c.clue_id) + ")";
}

// The restatement of the clue itself, without attribution. Positional kinds
// can name their category as "that category" when the premise already did.
std::string clue_fragment(const Constraint& c, bool that_category = false) {
    auto lab = [&](int i) { return q(c.labels[i]); };
    std::string cat = that_category ? std::string("that category")
                                    : "the " + q(c.labels[1]) + " category";
    switch (c.kind) {
        case ConstraintKind::yes: return lab(0) + " is " + lab(1);
        case ConstraintKind::no: return lab(0) + " is not " + lab(1);
        case ConstraintKind::or_: return lab(0) + " is " + lab(1) + " or " + lab(2);
        case ConstraintKind::xor_:
            return lab(0) + " is either " + lab(1) + " or " + lab(2);
        case ConstraintKind::alldiff: {
            std::string s;
            for (size_t i = 0; i < c.labels.size(); ++i) {
                if (i) s += ", ";
                s += q(c.labels[i]);
            }
            return s + " are all distinct";
        }
        case ConstraintKind::twobytwo:
            return "Out of " + lab(0) + " and " + lab(1) + ", one is " + lab(2) +
                   " and the other is " + lab(3);
        case ConstraintKind::before:
            return lab(0) + " is before " + lab(2) + " in " + cat;
        case ConstraintKind::after:
            return lab(0) + " is after " + lab(2) + " in " + cat;
        case ConstraintKind::beforefixed:
            return lab(0) + " is exactly " + counted(c.n_param, "element") + " before " + lab(2) +
                   " in " + cat;
        case ConstraintKind::afterfixed:
            return lab(0) + " is exactly " + counted(c.n_param, "element") + " after " + lab(2) +
                   " in " + cat;
        case ConstraintKind::beforeatleast:
            return lab(0) + " is at least " + counted(c.n_param, "element") + " before " +
                   lab(2) + " in " + cat;
        case ConstraintKind::afteratleast:
            return lab(0) + " is at least " + counted(c.n_param, "element") + " after " + lab(2) +
                   " in " + cat;
        case ConstraintKind::distance:
            return lab(0) + " is exactly " + counted(c.n_param, "element") + " from " + lab(2) +
                   " in " + cat;
        case ConstraintKind::disjunction: {
            std::string s;
            for (int i = 0; i < c.n_param; ++i) {
                if (i) s += " or ";
                s += q(c.labels[2 * i]) + (c.polarities[i] ? " is " : " is not ") +
                     q(c.labels[2 * i + 1]);
            }
            return s;
        }
    }
    return "";
}

// "first"/"last" bound phrase: special-cases a bound of one element.
std::string bound_phrase(bool low, int count, const std::string& cat_text) {
    std::string side = low ? "first" : "last";
    if (count == 1) return "the " + side + " element in " + cat_text;
    return "one of the " + side + " " + std::to_string(count) + " elements in " + cat_text;
}

// Restates one already-filled position cell, subject first.
std::string cell_phrase(const Puzzle& p, const Premise& prem, ElementRef subject) {
    ElementRef other = prem.cell.a == subject ? prem.cell.b : prem.cell.a;
    return q(p, subject) + (prem.value == CellState::yes ? " is " : " is not ") + q(p, other);
}

ElementRef other_of(const CellRef& cell, ElementRef one) {
    return cell.a == one ? cell.b : cell.a;
}

std::string conclusion(const Puzzle& p, ElementRef s, ElementRef t, CellState v) {
    return q(p, s) + (v == CellState::yes ? " is " : " is not ") + q(p, t);
}

}  // namespace

std::string render_event(const Puzzle& p, const DeductionEvent& ev) {
    const Constraint* c =
        ev.constraint_index >= 0 ? &p.constraints[ev.constraint_index] : nullptr;

    switch (ev.tag) {
        case RuleTag::clue_yes:
        case RuleTag::clue_no:
            return clue_fragment(*c) + clue_ref(*c) + ".";

        case RuleTag::alldiff_pair:
            return clue_fragment(*c) + clue_ref(*c) + ", so " +
                   conclusion(p, ev.cell.a, ev.cell.b, CellState::no) + ".";

        case RuleTag::or_force:
        case RuleTag::two_or_force: {
            ElementRef x = ev.aux;
            ElementRef target = other_of(ev.cell, x);
            return clue_fragment(*c) + clue_ref(*c) + ", and " +
                   cell_phrase(p, ev.premises[0], x) + ", so " +
                   conclusion(p, x, target, CellState::yes) + ".";
        }

        case RuleTag::or_eliminate:
        case RuleTag::two_or_eliminate: {
            ElementRef x = ev.aux;
            ElementRef w = other_of(ev.cell, x);
            // the two rejected alternatives, in the clue's order
            const std::string& y =
                c->kind == ConstraintKind::twobytwo ? c->labels[2] : c->labels[1];
            const std::string& z =
                c->kind == ConstraintKind::twobytwo ? c->labels[3] : c->labels[2];
            return clue_fragment(*c) + clue_ref(*c) + ", and " + q(p, w) + " is neither " +
                   q(y) + " nor " + q(z) + ", so " + conclusion(p, x, w, CellState::no) + ".";
        }

        case RuleTag::xor_exclude: {
            ElementRef x = ev.aux;
            ElementRef denied = other_of(ev.cell, x);
            ElementRef held = other_of(ev.premises[0].cell, x);
            return clue_fragment(*c) + clue_ref(*c) + ", and " +
                   conclusion(p, x, held, CellState::yes) + ", so " +
                   conclusion(p, x, denied, CellState::no) + ".";
        }

        case RuleTag::xor_pair_exclude: {
            ElementRef x = ev.aux;
            ElementRef w = other_of(ev.cell, x);
            return clue_fragment(*c) + clue_ref(*c) + ", and " + q(p, w) + " is both " +
                   q(c->labels[1]) + " and " + q(c->labels[2]) + ", so " +
                   conclusion(p, x, w, CellState::no) + ".";
        }

        case RuleTag::two_link_yes:
        case RuleTag::two_link_no: {
            ElementRef a = ev.aux;
            ElementRef b = other_of(ev.premises[0].cell, a);
            // link_yes fills the partner's cell, link_no another of a's own
            ElementRef partner =
                p.element(c->labels[0]) == a ? p.element(c->labels[1]) : p.element(c->labels[0]);
            ElementRef subj = ev.tag == RuleTag::two_link_yes ? partner : a;
            ElementRef obj = other_of(ev.cell, subj);
            return clue_fragment(*c) + clue_ref(*c) + ", and " +
                   conclusion(p, a, b, CellState::yes) + ", so " +
                   conclusion(p, subj, obj, ev.value) + ".";
        }

        case RuleTag::two_force: {
            ElementRef a = ev.aux;
            ElementRef b = other_of(ev.premises[0].cell, a);
            // the conclusion subject is whichever of X/Y the cell touches
            ElementRef x = p.element(c->labels[0]), y = p.element(c->labels[1]);
            ElementRef subj = (ev.cell.a == x || ev.cell.a == y) ? ev.cell.a : ev.cell.b;
            ElementRef obj = other_of(ev.cell, subj);
            return clue_fragment(*c) + clue_ref(*c) + ", and " +
                   conclusion(p, a, b, CellState::no) + ", so " +
                   conclusion(p, subj, obj, CellState::yes) + ".";
        }

        case RuleTag::pos_not_equal:
            return clue_fragment(*c) + clue_ref(*c) + ", so " +
                   conclusion(p, p.element(c->labels[0]), p.element(c->labels[2]),
                              CellState::no) +
                   ".";

        case RuleTag::pos_bound_low:
        case RuleTag::pos_bound_high: {
            bool low = ev.tag == RuleTag::pos_bound_low;
            int cat = p.find_category(c->labels[1]);
            ElementRef pos_el = ev.cell.a.category == cat ? ev.cell.a : ev.cell.b;
            ElementRef filled = other_of(ev.cell, pos_el);
            ElementRef x = p.element(c->labels[0]), y = p.element(c->labels[2]);
            ElementRef basis_el = filled == x ? y : x;
            std::string cat_full = "the " + q(c->labels[1]) + " category";
            std::string line;
            if (ev.param_a == 0) {
                line = clue_fragment(*c) + clue_ref(*c) + ", so " + q(p, filled) +
                       " is not " + bound_phrase(low, ev.param_b, "that category");
            } else {
                // why: the other element's own bound is the premise here, and
                // the category gets named there, so the clue restatement
                // shortens to "that category"
                line = q(p, basis_el) + " is not one of the " + (low ? "first " : "last ") +
                       counted(ev.param_a, "element") + " in " + cat_full + ", and " +
                       clue_fragment(*c, true) + clue_ref(*c) + ", so " + q(p, filled) +
                       " is not one of the " + (low ? "first " : "last ") +
                       std::to_string(ev.param_b) + " elements in " + cat_full;
            }
            return line + ", so " + conclusion(p, filled, pos_el, CellState::no) + ".";
        }

        case RuleTag::fixed_no_range: {
            ElementRef pos_el = ev.cell.a.category == p.find_category(c->labels[1]) ? ev.cell.a
                                                                                    : ev.cell.b;
            ElementRef filled = other_of(ev.cell, pos_el);
            return clue_fragment(*c) + clue_ref(*c) + ", so " +
                   conclusion(p, filled, pos_el, CellState::no) + ".";
        }

        case RuleTag::fixed_no_cell:
        case RuleTag::fixed_yes: {
            int cat = p.find_category(c->labels[1]);
            ElementRef pos_el = ev.cell.a.category == cat ? ev.cell.a : ev.cell.b;
            ElementRef filled = other_of(ev.cell, pos_el);
            std::string line = clue_fragment(*c) + clue_ref(*c);
            if (!ev.premises.empty()) {
                const Premise& prem = ev.premises[0];
                ElementRef subj =
                    prem.cell.a.category == cat ? prem.cell.b : prem.cell.a;
                line += ", and " + cell_phrase(p, prem, subj);
            }
            return line + ", so " + conclusion(p, filled, pos_el, ev.value) + ".";
        }

        case RuleTag::dist_no:
        case RuleTag::dist_yes: {
            int cat = p.find_category(c->labels[1]);
            ElementRef pos_el = ev.cell.a.category == cat ? ev.cell.a : ev.cell.b;
            ElementRef filled = other_of(ev.cell, pos_el);
            std::string line = clue_fragment(*c) + clue_ref(*c);
            if (!ev.premises.empty()) {
                line += ", and ";
                for (size_t i = 0; i < ev.premises.size(); ++i) {
                    if (i) line += " and ";
                    const Premise& prem = ev.premises[i];
                    ElementRef subj =
                        prem.cell.a.category == cat ? prem.cell.b : prem.cell.a;
                    line += cell_phrase(p, prem, subj);
                }
            }
            return line + ", so " + conclusion(p, filled, pos_el, ev.value) + ".";
        }

        case RuleTag::disjunction_force: {
            std::string line = clue_fragment(*c) + clue_ref(*c);
            if (!ev.premises.empty()) {
                line += ", and ";
                // restate each refuted disjunct with its own X first
                std::vector<bool> used(ev.premises.size(), false);
                std::vector<std::string> parts;
                for (int i = 0; i < c->n_param; ++i) {
                    if (i == ev.param_a) continue;
                    CellRef want(p.element(c->labels[2 * i]), p.element(c->labels[2 * i + 1]));
                    for (size_t j = 0; j < ev.premises.size(); ++j) {
                        if (used[j] || !(ev.premises[j].cell == want)) continue;
                        used[j] = true;
                        parts.push_back(
                            cell_phrase(p, ev.premises[j], p.element(c->labels[2 * i])));
                        break;
                    }
                }
                for (size_t i = 0; i < parts.size(); ++i) {
                    if (i) line += " and ";
                    line += parts[i];
                }
            }
            int s = ev.param_a;
            return line + ", so " +
                   conclusion(p, p.element(c->labels[2 * s]), p.element(c->labels[2 * s + 1]),
                              ev.value) +
                   ".";
        }

        case RuleTag::bcr_clear:
            return cell_phrase(p, ev.premises[0], ev.premises[0].cell.a) + ", so " +
                   conclusion(p, ev.cell.a, ev.cell.b, CellState::no) + ".";

        case RuleTag::bcr_last: {
            // the element shared by target and premises anchors the sentence
            ElementRef shared = ev.cell.a;
            if (!ev.premises.empty() && ev.premises[0].cell.a != shared &&
                ev.premises[0].cell.b != shared)
                shared = ev.cell.b;
            std::string line;
            for (size_t i = 0; i < ev.premises.size(); ++i) {
                if (i) line += " and ";
                line += cell_phrase(p, ev.premises[i], shared);
            }
            return line + ", so " +
                   conclusion(p, shared, other_of(ev.cell, shared), CellState::yes) + ".";
        }

        case RuleTag::acr_transitive:
            return conclusion(p, ev.cell.a, ev.aux, CellState::yes) + " and " +
                   conclusion(p, ev.aux, ev.cell.b, CellState::yes) + ", so " +
                   conclusion(p, ev.cell.a, ev.cell.b, CellState::yes) + ".";

        case RuleTag::acr_pairwise:
            return "No element of " + q(p.categories[ev.param_a].label) +
                   " can be matched with both " + q(p, ev.cell.a) + " and " + q(p, ev.cell.b) +
                   ", so " + conclusion(p, ev.cell.a, ev.cell.b, CellState::no) + ".";
    }
    return "";
}

void annotate(const Puzzle& p, std::vector<DeductionEvent>& events) {
    for (auto& ev : events) ev.text = render_event(p, ev);
}

bool detect_discard(const Grid& grid, int clue_id, const std::vector<Constraint>& constraints) {
    const Puzzle& p = grid.puzzle();
    bool any = false;
    for (const auto& c : constraints) {
        if (c.clue_id != clue_id) continue;
        any = true;

        auto el = [&](int i) { return p.element(c.labels[i]); };
        auto entailed = [&](ElementRef a, ElementRef b) { return grid.entails_match(a, b); };
        auto refuted = [&](ElementRef a, ElementRef b) { return grid.incompatible(a, b); };

        bool ok = false;
        switch (c.kind) {
            case ConstraintKind::yes: ok = entailed(el(0), el(1)); break;
            case ConstraintKind::no: ok = refuted(el(0), el(1)); break;
            case ConstraintKind::or_:
                ok = entailed(el(0), el(1)) || entailed(el(0), el(2));
                break;
            case ConstraintKind::xor_:
                ok = (entailed(el(0), el(1)) && refuted(el(0), el(2))) ||
                     (entailed(el(0), el(2)) && refuted(el(0), el(1)));
                break;
            case ConstraintKind::alldiff: {
                ok = true;
                for (size_t i = 0; i < c.labels.size() && ok; ++i)
                    for (size_t j = i + 1; j < c.labels.size() && ok; ++j) {
                        ElementRef a = el(static_cast<int>(i)), b = el(static_cast<int>(j));
                        if (a.category != b.category && !refuted(a, b)) ok = false;
                        if (a == b) ok = false;
                    }
                break;
            }
            case ConstraintKind::twobytwo: {
                ElementRef x = el(0), y = el(1), w = el(2), z = el(3);
                bool first = entailed(x, w) && entailed(y, z);
                bool second = entailed(x, z) && entailed(y, w);
                if (w.category != z.category) {
                    first = first && refuted(x, z) && refuted(y, w);
                    second = second && refuted(x, w) && refuted(y, z);
                }
                ok = first || second;
                break;
            }
            case ConstraintKind::before:
            case ConstraintKind::after:
            case ConstraintKind::beforeatleast:
            case ConstraintKind::afteratleast: {
                int cat = p.find_category(c.labels[1]);
                bool x_later = c.kind == ConstraintKind::after ||
                               c.kind == ConstraintKind::afteratleast;
                ElementRef e = x_later ? el(2) : el(0);
                ElementRef l = x_later ? el(0) : el(2);
                int gap = (c.kind == ConstraintKind::before || c.kind == ConstraintKind::after)
                              ? 1
                              : c.n_param;
                try {
                    int max_e = grid.feasible_positions(e, cat).back();
                    int min_l = grid.feasible_positions(l, cat).front();
                    ok = max_e + gap <= min_l;
                } catch (const LgError&) {
                    ok = false;
                }
                break;
            }
            case ConstraintKind::beforefixed:
            case ConstraintKind::afterfixed:
            case ConstraintKind::distance: {
                int cat = p.find_category(c.labels[1]);
                auto pinned = [&](ElementRef e) -> int {
                    if (e.category == cat) return e.index;
                    for (int q = 0; q < grid.n(); ++q)
                        if (grid.get(e, ElementRef{static_cast<int16_t>(cat),
                                                   static_cast<int16_t>(q)}) == CellState::yes)
                            return q;
                    return -1;
                };
                int px = pinned(el(0)), py = pinned(el(2));
                if (px < 0 || py < 0) break;
                if (c.kind == ConstraintKind::beforefixed)
                    ok = py - px == c.n_param;
                else if (c.kind == ConstraintKind::afterfixed)
                    ok = px - py == c.n_param;
                else
                    ok = px - py == c.n_param || py - px == c.n_param;
                break;
            }
            case ConstraintKind::disjunction: {
                for (int i = 0; i < c.n_param && !ok; ++i) {
                    ElementRef a = el(2 * i), b = el(2 * i + 1);
                    ok = c.polarities[i] ? entailed(a, b) : refuted(a, b);
                }
                break;
            }
        }
        if (!ok) return false;
    }
    return any;
}

std::vector<std::string> output_lines(const Puzzle& p, const std::vector<DeductionEvent>& events,
                                      const ExplanationOptions& opts) {
    std::vector<std::string> lines;

    // clue ids in ascending order, for discard announcements
    std::set<int> pending;
    if (opts.announce_discards)
        for (const auto& c : p.constraints) pending.insert(c.clue_id);

    Grid replay(p);
    auto absorb = [&](const DeductionEvent& ev) { replay.set(ev.cell.a, ev.cell.b, ev.value); };
    auto announce = [&]() {
        if (!opts.announce_discards) return;
        for (auto it = pending.begin(); it != pending.end();) {
            if (detect_discard(replay, *it, p.constraints)) {
                lines.push_back("Clue " + std::to_string(*it) + " can now be discarded.");
                it = pending.erase(it);
            } else {
                ++it;
            }
        }
    };

    size_t i = 0;
    while (i < events.size()) {
        if (opts.group_bcr && rule_is_basic(events[i].tag)) {
            int count = 0;
            while (i < events.size() && rule_is_basic(events[i].tag)) {
                absorb(events[i]);
                ++count;
                ++i;
            }
            lines.push_back(std::to_string(count) + (count == 1 ? " cell" : " cells") +
                            " can be filled from basic consistency.");
        } else {
            const DeductionEvent& ev = events[i];
            lines.push_back(ev.text.empty() ? render_event(p, ev) : ev.text);
            absorb(ev);
            ++i;
        }
        announce();
    }
    return lines;
}

std::vector<DeductionEvent> slice_for_cell(const std::vector<DeductionEvent>& events,
                                           const CellRef& target) {
    int hit = -1;
    for (size_t i = 0; i < events.size(); ++i) {
        if (events[i].cell == target) {
            hit = static_cast<int>(i);
            break;
        }
    }
    if (hit < 0) throw LgError(Code::target_never_filled, "cell was never determined");

    std::set<CellRef> needed{target};
    std::vector<DeductionEvent> kept;
    for (int i = hit; i >= 0; --i) {
        if (!needed.count(events[i].cell)) continue;
        kept.push_back(events[i]);
        for (const auto& prem : events[i].premises) needed.insert(prem.cell);
    }
    std::reverse(kept.begin(), kept.end());
    return kept;
}

std::string render_grid(const Grid& grid) {
    const Puzzle& p = grid.puzzle();
    int k = grid.k(), n = grid.n();

    // rows: category 0, then k-1 down to 2; columns: categories 1..k-1
    std::vector<int> row_cats{0};
    for (int c = k - 1; c >= 2; --c) row_cats.push_back(c);

    size_t gutter = 0;
    for (int c : row_cats)
        for (const auto& e : p.categories[c].elements) gutter = std::max(gutter, e.size());

    auto pad = [](const std::string& s, size_t w) {
        return s + std::string(w > s.size() ? w - s.size() : 0, ' ');
    };
    auto centered = [](char ch, size_t w) {
        std::string s(w, ' ');
        s[(w - 1) / 2] = ch;
        return s;
    };

    std::string out;
    std::string header(gutter, ' ');
    for (int c = 1; c < k; ++c) {
        header += c == 1 ? " | " : "   ";
        for (int j = 0; j < n; ++j) {
            if (j) header += "  ";
            header += p.categories[c].elements[j];
        }
    }
    out += header + "\n";

    for (size_t band = 0; band < row_cats.size(); ++band) {
        int rc = row_cats[band];
        int last_col_cat = rc == 0 ? k - 1 : rc - 1;
        if (band) out += "\n";
        for (int i = 0; i < n; ++i) {
            std::string line = pad(p.categories[rc].elements[i], gutter);
            for (int c = 1; c <= last_col_cat; ++c) {
                line += c == 1 ? " | " : "   ";
                for (int j = 0; j < n; ++j) {
                    if (j) line += "  ";
                    CellState s = grid.get(ElementRef{static_cast<int16_t>(rc),
                                                      static_cast<int16_t>(i)},
                                           ElementRef{static_cast<int16_t>(c),
                                                      static_cast<int16_t>(j)});
                    char mark = s == CellState::yes ? 'Y' : (s == CellState::no ? '.' : ' ');
                    line += centered(mark, p.categories[c].elements[j].size());
                }
            }
            while (!line.empty() && line.back() == ' ') line.pop_back();
            out += line + "\n";
        }
    }
    return out;
}

std::string render_log(const Puzzle& p, const std::vector<DeductionEvent>& events) {
    auto rule_name = [&](const DeductionEvent& ev) -> std::string {
        switch (ev.tag) {
            case RuleTag::bcr_clear: return "B1";
            case RuleTag::bcr_last: return "B2";
            case RuleTag::acr_transitive: return "A1";
            case RuleTag::acr_pairwise: return "A2";
            default: return kind_name(p.constraints[ev.constraint_index].kind);
        }
    };
    std::string out;
    for (const auto& ev : events) {
        nlohmann::ordered_json rec;
        rec["seq"] = ev.seq;
        rec["cell"] = {p.label(ev.cell.a), p.label(ev.cell.b)};
        rec["value"] = ev.value == CellState::yes ? "yes" : "no";
        rec["rule"] = rule_name(ev);
        if (ev.constraint_index >= 0)
            rec["clue"] = p.constraints[ev.constraint_index].clue_id;
        else
            rec["clue"] = nullptr;
        auto prems = nlohmann::ordered_json::array();
        for (const auto& prem : ev.premises) {
            nlohmann::ordered_json pj;
            pj["cell"] = {p.label(prem.cell.a), p.label(prem.cell.b)};
            pj["value"] = prem.value == CellState::yes ? "yes" : "no";
            prems.push_back(std::move(pj));
        }
        rec["premises"] = std::move(prems);
        rec["text"] = ev.text.empty() ? render_event(p, ev) : ev.text;
        out += rec.dump() + "\n";
    }
    return out;
}

}  // namespace logigrid
