#pragma once

#include <cstdint>
#include <vector>

#include "logigrid/cnf.hpp"
#include "logigrid/puzzle.hpp"

namespace logigrid {

// One complete assignment: tuples[t][c] is the element index of category c
// sitting in tuple t. Category 0 is kept in element order (tuples[t][0] == t),
// which canonicalizes the representation.
struct Solution {
    std::vector<std::vector<int16_t>> tuples;

    // Tuple containing element (category, index).
    int tuple_of(int category, int index) const;
    bool matched(ElementRef e, ElementRef f) const;
};

// Exhaustive backtracking enumeration (up to `limit` solutions), checking the
// constraints semantically. Deliberately independent of the inference rules:
// this is the reference the solver is validated against.
std::vector<Solution> enumerate_solutions(const Puzzle& p, int limit);

// True when the solution satisfies the constraint; the semantic definition of
// each kind, used by the enumerator and exposed for tests.
bool constraint_holds(const Puzzle& p, const Solution& s, const Constraint& c);

// DPLL model counter with unit propagation, exhaustive up to `limit`.
// Unconstrained variables count multiplicatively (an empty formula over two
// variables has four models).
long long count_models(const Cnf& cnf, long long limit);

// Complete satisfying assignments (index 0 unused, +1/-1 per var), up to
// `limit`. Free variables at a satisfied leaf are expanded both ways.
std::vector<std::vector<int8_t>> enumerate_models(const Cnf& cnf, int limit);

}  // namespace logigrid
