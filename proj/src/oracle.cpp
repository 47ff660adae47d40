#include "logigrid/oracle.hpp"

#include <algorithm>
#include <numeric>

namespace logigrid {

int Solution::tuple_of(int category, int index) const {
    for (size_t t = 0; t < tuples.size(); ++t)
        if (tuples[t][category] == index) return static_cast<int>(t);
    return -1;
}

bool Solution::matched(ElementRef e, ElementRef f) const {
    return tuple_of(e.category, e.index) == tuple_of(f.category, f.index);
}

namespace {

// Position of x inside the ordered category `cat` under solution s. Elements
// of the category sit at their own index.
int position_of(const Solution& s, ElementRef x, int cat) {
    if (x.category == cat) return x.index;
    int t = s.tuple_of(x.category, x.index);
    return s.tuples[t][cat];
}

}  // namespace

bool constraint_holds(const Puzzle& p, const Solution& s, const Constraint& c) {
    auto el = [&](int i) { return p.element(c.labels[i]); };
    switch (c.kind) {
        case ConstraintKind::yes: return s.matched(el(0), el(1));
        case ConstraintKind::no: return !s.matched(el(0), el(1));
        case ConstraintKind::or_: return s.matched(el(0), el(1)) || s.matched(el(0), el(2));
        case ConstraintKind::xor_:
            return s.matched(el(0), el(1)) != s.matched(el(0), el(2));
        case ConstraintKind::alldiff: {
            for (size_t i = 0; i < c.labels.size(); ++i)
                for (size_t j = i + 1; j < c.labels.size(); ++j)
                    if (s.matched(el(static_cast<int>(i)), el(static_cast<int>(j)))) return false;
            return true;
        }
        case ConstraintKind::twobytwo: {
            bool xw = s.matched(el(0), el(2)), xz = s.matched(el(0), el(3));
            bool yw = s.matched(el(1), el(2)), yz = s.matched(el(1), el(3));
            return (xw && yz && !xz && !yw) || (xz && yw && !xw && !yz);
        }
        default: {
            int cat = p.find_category(c.labels[1]);
            if (c.kind == ConstraintKind::disjunction) {
                for (int i = 0; i < c.n_param; ++i) {
                    bool m = s.matched(el(2 * i), el(2 * i + 1));
                    if (c.polarities[i] ? m : !m) return true;
                }
                return false;
            }
            int px = position_of(s, el(0), cat);
            int py = position_of(s, el(2), cat);
            switch (c.kind) {
                case ConstraintKind::before: return px < py;
                case ConstraintKind::after: return px > py;
                case ConstraintKind::beforefixed: return py - px == c.n_param;
                case ConstraintKind::afterfixed: return px - py == c.n_param;
                case ConstraintKind::beforeatleast: return py - px >= c.n_param;
                case ConstraintKind::afteratleast: return px - py >= c.n_param;
                default: return px - py == c.n_param || py - px == c.n_param;
            }
        }
    }
}

namespace {

// Highest category index a constraint reads (positions included); the
// enumerator can evaluate the constraint once categories 0..depth are set.
int constraint_scope(const Puzzle& p, const Constraint& c) {
    int top = 0;
    if (kind_is_positional(c.kind)) {
        top = p.find_category(c.labels[1]);
        top = std::max<int>(top, p.element(c.labels[0]).category);
        top = std::max<int>(top, p.element(c.labels[2]).category);
    } else {
        for (const auto& l : c.labels) top = std::max<int>(top, p.element(l).category);
    }
    return top;
}

struct Enumerator {
    const Puzzle& p;
    int limit;
    int k, n;
    Solution current;
    std::vector<std::vector<int>> scoped;  // constraint indices by scope depth
    std::vector<Solution> found;

    Enumerator(const Puzzle& puzzle, int lim)
        : p(puzzle), limit(lim), k(p.category_count()), n(p.elements_per_category()) {
        current.tuples.assign(n, std::vector<int16_t>(k, -1));
        for (int t = 0; t < n; ++t) current.tuples[t][0] = static_cast<int16_t>(t);
        scoped.resize(k);
        for (size_t ci = 0; ci < p.constraints.size(); ++ci)
            scoped[constraint_scope(p, p.constraints[ci])].push_back(static_cast<int>(ci));
    }

    bool consistent_at(int depth) {
        for (int ci : scoped[depth])
            if (!constraint_holds(p, current, p.constraints[ci])) return false;
        return true;
    }

    void fill_category(int cat, int tuple, std::vector<bool>& used) {
        if (static_cast<int>(found.size()) >= limit) return;
        if (tuple == n) {
            if (!consistent_at(cat)) return;
            if (cat + 1 == k) {
                found.push_back(current);
                return;
            }
            std::vector<bool> next_used(n, false);
            fill_category(cat + 1, 0, next_used);
            return;
        }
        for (int e = 0; e < n; ++e) {
            if (used[e]) continue;
            used[e] = true;
            current.tuples[tuple][cat] = static_cast<int16_t>(e);
            fill_category(cat, tuple + 1, used);
            current.tuples[tuple][cat] = -1;
            used[e] = false;
            if (static_cast<int>(found.size()) >= limit) return;
        }
    }

    std::vector<Solution> run() {
        if (k < 2 || n < 1) return {};
        if (!consistent_at(0)) return {};
        std::vector<bool> used(n, false);
        fill_category(1, 0, used);
        return found;
    }
};

}  // namespace

std::vector<Solution> enumerate_solutions(const Puzzle& p, int limit) {
    if (limit < 1) return {};
    return Enumerator(p, limit).run();
}

namespace {

struct Dpll {
    const Cnf& cnf;
    std::vector<int8_t> val;  // 1-based; 0 unknown, +1 true, -1 false

    explicit Dpll(const Cnf& c) : cnf(c), val(c.num_vars + 1, 0) {}

    int8_t lit_val(int lit) const {
        int8_t v = val[std::abs(lit)];
        return lit > 0 ? v : static_cast<int8_t>(-v);
    }

    // Returns false on conflict. Fills `sat_all` with whether every clause
    // now holds.
    bool propagate(bool& sat_all) {
        bool changed = true;
        while (changed) {
            changed = false;
            sat_all = true;
            for (const auto& clause : cnf.clauses) {
                int unassigned = 0, last = 0;
                bool sat = false;
                for (int lit : clause) {
                    int8_t v = lit_val(lit);
                    if (v > 0) {
                        sat = true;
                        break;
                    }
                    if (v == 0) {
                        ++unassigned;
                        last = lit;
                    }
                }
                if (sat) continue;
                if (unassigned == 0) return false;
                sat_all = false;
                if (unassigned == 1) {
                    val[std::abs(last)] = last > 0 ? 1 : -1;
                    changed = true;
                }
            }
        }
        return true;
    }

    int pick_branch_var() const {
        for (const auto& clause : cnf.clauses) {
            bool sat = false;
            int cand = 0;
            for (int lit : clause) {
                int8_t v = lit_val(lit);
                if (v > 0) {
                    sat = true;
                    break;
                }
                if (v == 0 && cand == 0) cand = std::abs(lit);
            }
            if (!sat && cand) return cand;
        }
        return 0;
    }

    long long count(long long limit) {
        bool sat_all = false;
        if (!propagate(sat_all)) return 0;
        if (sat_all) {
            int free = 0;
            for (int v = 1; v <= cnf.num_vars; ++v)
                if (val[v] == 0) ++free;
            if (free >= 62) return limit;
            long long total = 1LL << free;
            return std::min(total, limit);
        }
        int var = pick_branch_var();
        if (var == 0) return 0;
        auto saved = val;
        val[var] = 1;
        long long total = count(limit);
        val = saved;
        if (total >= limit) return limit;
        val[var] = -1;
        long long rest = count(limit - total);
        val = saved;
        return std::min(total + rest, limit);
    }

    void collect(int limit, std::vector<std::vector<int8_t>>& out) {
        if (static_cast<int>(out.size()) >= limit) return;
        bool sat_all = false;
        if (!propagate(sat_all)) return;
        if (sat_all) {
            int free_var = 0;
            for (int v = 1; v <= cnf.num_vars && !free_var; ++v)
                if (val[v] == 0) free_var = v;
            if (!free_var) {
                out.push_back(val);
                return;
            }
            auto saved = val;
            val[free_var] = 1;
            collect(limit, out);
            val = saved;
            val[free_var] = -1;
            collect(limit, out);
            val = saved;
            return;
        }
        int var = pick_branch_var();
        if (var == 0) return;
        auto saved = val;
        val[var] = 1;
        collect(limit, out);
        val = saved;
        val[var] = -1;
        collect(limit, out);
        val = saved;
    }
};

}  // namespace

long long count_models(const Cnf& cnf, long long limit) {
    if (limit <= 0) return 0;
    Dpll d(cnf);
    return d.count(limit);
}

std::vector<std::vector<int8_t>> enumerate_models(const Cnf& cnf, int limit) {
    std::vector<std::vector<int8_t>> out;
    if (limit <= 0) return out;
    Dpll d(cnf);
    d.collect(limit, out);
    return out;
}

}  // namespace logigrid
