#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include "doctest.h"

#include <fstream>
#include <set>
#include <sstream>

#include "logigrid/cnf.hpp"
#include "logigrid/oracle.hpp"
#include "logigrid/parser.hpp"

using namespace logigrid;

namespace {

std::string read_file(const std::string& path) {
    std::ifstream in(path, std::ios::binary);
    REQUIRE(in);
    std::ostringstream buf;
    buf << in.rdbuf();
    return buf.str();
}

Puzzle load(const std::string& name) {
    return parse_puzzle(read_file(std::string(PUZZLES_DIR) + "/" + name + ".puzzle"));
}

bool clause_present(const Cnf& cnf, std::vector<int> want) {
    std::multiset<int> w(want.begin(), want.end());
    for (const auto& cl : cnf.clauses)
        if (std::multiset<int>(cl.begin(), cl.end()) == w) return true;
    return false;
}

}  // namespace

TEST_CASE("variable indexing follows the block formula") {
    Puzzle p = load("birthyears");
    // rank(FirstName, Country) = 0, rank(FirstName, Year) = 1, rank(Country, Year) = 2
    CHECK(var_index(p, "Angela", "Germany") == 1);
    CHECK(var_index(p, "Angela", "Ireland") == 2);
    CHECK(var_index(p, "Donald", "Germany") == 4);
    CHECK(var_index(p, "Leo", "United States") == 9);
    CHECK(var_index(p, "Angela", "1946") == 10);
    CHECK(var_index(p, "Leo", "1979") == 18);
    CHECK(var_index(p, "Germany", "1946") == 19);
    CHECK(var_index(p, "United States", "1979") == 27);
    // argument order never matters
    CHECK(var_index(p, "1979", "Leo") == 18);
    CHECK_THROWS_AS(var_index(p, "Angela", "Donald"), LgError);
    CHECK_THROWS_AS(var_index(p, "Angela", "nope"), LgError);
}

TEST_CASE("running example encodes to 27 variables and 161 clauses") {
    Puzzle p = load("birthyears");
    Cnf cnf = encode(p);
    CHECK(cnf.num_vars == 27);
    // 3 blocks x 24 bijection clauses, 27 channeling triples x 3, 8 clue clauses
    CHECK(cnf.clauses.size() == 161);
    CHECK(cnf.var_cells.size() == 27);
    CHECK(cnf.var_labels[17] == std::pair<std::string, std::string>("Leo", "1979"));
}

TEST_CASE("bijection clauses: one row's worth") {
    Puzzle p = load("minimal");
    Cnf cnf = encode(p);
    // 2x2 single block: vars 1..4 as (A,N1) (A,N2) (B,N1) (B,N2)
    CHECK(cnf.num_vars == 4);
    CHECK(clause_present(cnf, {1, 2}));    // row A at-least-one
    CHECK(clause_present(cnf, {-1, -2}));  // row A at-most-one
    CHECK(clause_present(cnf, {1, 3}));    // column N1 at-least-one
    CHECK(clause_present(cnf, {-1, -3}));
    // the yes clue lands as a unit clause
    CHECK(clause_present(cnf, {1}));
}

TEST_CASE("channeling links every category triple") {
    Puzzle p = parse_puzzle(
        "category A: a1 a2\n"
        "category B: b1 b2\n"
        "category C: c1 c2\n");
    Cnf cnf = encode(p);
    int ab = var_index(p, "a1", "b1");
    int ac = var_index(p, "a1", "c1");
    int bc = var_index(p, "b1", "c1");
    // a1=c1 and c1=b1 force a1=b1, and the other two rotations
    CHECK(clause_present(cnf, {-ac, -bc, ab}));
    CHECK(clause_present(cnf, {-ab, -bc, ac}));
    CHECK(clause_present(cnf, {-ab, -ac, bc}));
}

TEST_CASE("twobytwo emits six clauses that pin the two scenarios") {
    Puzzle p = parse_puzzle(
        "category A: a1 a2 a3\n"
        "category B: b1 b2 b3\n"
        "category C: c1 c2 c3\n"
        "clue 1: twobytwo a1 b1 c1 c2\n");
    // X=a1 Y=b1 W=c1 Z=c2: either a1-c1 and b1-c2, or a1-c2 and b1-c1
    auto sols = enumerate_solutions(p, 100);
    Cnf cnf = encode(p);
    CHECK(count_models(cnf, 100) == static_cast<long long>(sols.size()));
    for (const auto& s : sols) {
        bool one = s.matched(p.element("a1"), p.element("c1")) &&
                   s.matched(p.element("b1"), p.element("c2"));
        bool two = s.matched(p.element("a1"), p.element("c2")) &&
                   s.matched(p.element("b1"), p.element("c1"));
        CHECK(one != two);
    }

    // cross-category on both sides: without the sixth clause the encoding
    // would admit models where Y takes both W and Z
    Puzzle q = parse_puzzle(
        "category A: a1 a2 a3\n"
        "category B: b1 b2 b3\n"
        "category C: c1 c2 c3\n"
        "category D: d1 d2 d3\n"
        "clue 1: twobytwo a1 b1 c1 d1\n");
    Cnf qc = encode(q);
    int yw = var_index(q, "b1", "c1");
    int yz = var_index(q, "b1", "d1");
    CHECK(clause_present(qc, {-yw, -yz}));
    CHECK(count_models(qc, 10000) ==
          static_cast<long long>(enumerate_solutions(q, 10000).size()));
}

TEST_CASE("dimacs text layout") {
    Puzzle p = load("minimal");
    std::string text = write_dimacs(encode(p));
    std::istringstream in(text);
    std::string line;
    std::getline(in, line);
    // 2x2 single block: 4 at-least-one + 4 at-most-one + the unit clue
    CHECK(line == "p cnf 4 9");
    std::getline(in, line);
    CHECK(line == "c cell 1 = A|N1");
    std::getline(in, line);
    CHECK(line == "c cell 2 = A|N2");
    // skip the rest of the map, first clause follows
    std::getline(in, line);
    std::getline(in, line);
    std::getline(in, line);
    CHECK(line == "1 2 0");
}

TEST_CASE("positional constraints translate position pairs") {
    Puzzle p = parse_puzzle(
        "category A: a1 a2 a3\n"
        "category P ordered: p1 p2 p3\n"
        "category B: b1 b2 b3\n"
        "clue 1: before a1 P b1\n");
    auto sols = enumerate_solutions(p, 100);
    Cnf cnf = encode(p);
    CHECK(count_models(cnf, 100) == static_cast<long long>(sols.size()));
    // every violating position pair is forbidden by a binary clause
    int x3 = var_index(p, "a1", "p3");
    int y1 = var_index(p, "b1", "p1");
    int y3 = var_index(p, "b1", "p3");
    CHECK(clause_present(cnf, {-x3, -y1}));
    CHECK(clause_present(cnf, {-x3, -y3}));
    for (const auto& s : sols) CHECK(!s.matched(p.element("a1"), p.element("p3")));
}

TEST_CASE("in-category positional labels become fixed positions") {
    Puzzle p = parse_puzzle(
        "category A: a1 a2 a3\n"
        "category P ordered: p1 p2 p3\n"
        "clue 1: before a1 P p2\n");
    // p2 pins position 1, so a1 must be at position 0
    auto sols = enumerate_solutions(p, 100);
    REQUIRE(!sols.empty());
    for (const auto& s : sols) CHECK(s.matched(p.element("a1"), p.element("p1")));
    Cnf cnf = encode(p);
    CHECK(count_models(cnf, 100) == static_cast<long long>(sols.size()));
}

TEST_CASE("model counts match the oracle across the corpus") {
    struct Row {
        const char* name;
        long long count;
    };
    const Row rows[] = {
        {"birthyears", 1}, {"zebra", 1},   {"dinner_party", 1}, {"garden", 1},
        {"race", 1},       {"concert", 1}, {"library", 1},      {"minimal", 1},
        {"birthyears_no_clue3", 2},        {"impossible", 0},
    };
    for (const auto& row : rows) {
        CAPTURE(row.name);
        Puzzle p = load(row.name);
        Cnf cnf = encode(p);
        long long models = count_models(cnf, 10);
        auto sols = enumerate_solutions(p, 10);
        CHECK(models == static_cast<long long>(sols.size()));
        CHECK(models == row.count);
    }
}

TEST_CASE("decoded models are exactly the oracle solutions") {
    for (const char* name : {"birthyears", "garden", "birthyears_no_clue3"}) {
        CAPTURE(name);
        Puzzle p = load(name);
        Cnf cnf = encode(p);
        auto models = enumerate_models(cnf, 10);
        auto sols = enumerate_solutions(p, 10);
        REQUIRE(models.size() == sols.size());

        // decode each model into matched-pair sets and compare
        std::set<std::set<int>> from_models, from_oracle;
        for (const auto& m : models) {
            std::set<int> yes;
            for (int v = 1; v <= cnf.num_vars; ++v)
                if (m[v] > 0) yes.insert(v);
            from_models.insert(yes);
        }
        for (const auto& s : sols) {
            std::set<int> yes;
            for (int v = 1; v <= cnf.num_vars; ++v) {
                const CellRef& cell = cnf.var_cells[v - 1];
                if (s.matched(cell.a, cell.b)) yes.insert(v);
            }
            from_oracle.insert(yes);
        }
        CHECK(from_models == from_oracle);
    }
}

TEST_CASE("an empty formula counts free variables multiplicatively") {
    Cnf cnf;
    cnf.num_vars = 3;
    CHECK(count_models(cnf, 100) == 8);
    Cnf capped;
    capped.num_vars = 10;
    CHECK(count_models(capped, 100) == 100);  // clamped at the limit
}

TEST_CASE("unsatisfiable formulas count zero") {
    Cnf cnf;
    cnf.num_vars = 2;
    cnf.clauses = {{1}, {-1}};
    CHECK(count_models(cnf, 10) == 0);
    Puzzle p = load("impossible");
    CHECK(count_models(encode(p), 10) == 0);
}
