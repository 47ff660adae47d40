// End-to-end acceptance gate. Exercises the shipped CLI binary and the
// library side by side against the bundled corpus; one PASS/FAIL line per
// criterion, nonzero exit if anything fails.
//
// usage: acceptance <cli-binary> <puzzles-dir> <property-test-binary>

#include <sys/wait.h>

#include <chrono>
#include <cstdio>
#include <fstream>
#include <iostream>
#include <set>
#include <sstream>
#include <string>
#include <vector>

#include "logigrid/cnf.hpp"
#include "logigrid/explain.hpp"
#include "logigrid/oracle.hpp"
#include "logigrid/parser.hpp"
#include "logigrid/solver.hpp"

using namespace logigrid;

namespace {

const char* kSolvable[] = {"birthyears", "zebra", "dinner_party", "garden",
                           "race",       "concert", "library",     "minimal"};
const char* kCrafted[] = {"dinner_party", "garden", "race", "concert", "library", "minimal"};
const char* kAll[] = {"birthyears", "zebra",   "dinner_party", "garden",
                      "race",       "concert", "library",      "minimal",
                      "birthyears_no_clue3",    "impossible"};

int failures = 0;

void report(int criterion, const std::string& label, bool ok, const std::string& detail) {
    if (ok) {
        std::cout << "PASS: " << criterion << ". " << label << "\n";
    } else {
        std::cout << "FAIL: " << criterion << ". " << label << " (" << detail << ")\n";
        ++failures;
    }
}

struct RunResult {
    int exit_code = -1;
    std::string out;
};

RunResult run(const std::string& command) {
    RunResult r;
    FILE* pipe = popen((command + " 2>/dev/null").c_str(), "r");
    if (!pipe) return r;
    char buf[4096];
    size_t got;
    while ((got = fread(buf, 1, sizeof buf, pipe)) > 0) r.out.append(buf, got);
    int status = pclose(pipe);
    r.exit_code = (status >= 0 && WIFEXITED(status)) ? WEXITSTATUS(status) : -1;
    return r;
}

std::vector<std::string> split_lines(const std::string& s) {
    std::vector<std::string> lines;
    std::istringstream in(s);
    std::string line;
    while (std::getline(in, line)) lines.push_back(line);
    return lines;
}

std::string puzzles_dir;

std::string puzzle_path(const char* name) {
    return puzzles_dir + "/" + name + ".puzzle";
}

Puzzle load(const char* name) {
    std::ifstream in(puzzle_path(name), std::ios::binary);
    std::ostringstream buf;
    buf << in.rdbuf();
    return parse_puzzle(buf.str());
}

bool grid_equals_solution(const Puzzle& p, const Grid& g, const Solution& s,
                          std::string& why) {
    int k = p.category_count(), n = p.elements_per_category();
    for (int a = 0; a < k; ++a)
        for (int b = a + 1; b < k; ++b)
            for (int i = 0; i < n; ++i)
                for (int j = 0; j < n; ++j) {
                    ElementRef e{static_cast<int16_t>(a), static_cast<int16_t>(i)};
                    ElementRef f{static_cast<int16_t>(b), static_cast<int16_t>(j)};
                    CellState want = s.matched(e, f) ? CellState::yes : CellState::no;
                    if (g.get(e, f) != want) {
                        why = "cell (" + p.categories[a].elements[i] + ", " +
                              p.categories[b].elements[j] + ") differs";
                        return false;
                    }
                }
    return true;
}

// --- criterion 1: the running example's trace, intermediate grids, solution --

const char* kFinalGrid =
    "       | Germany  Ireland  United States   1946  1954  1979\n"
    "Angela |    Y        .           .          .     Y     .\n"
    "Donald |    .        .           Y          Y     .     .\n"
    "Leo    |    .        Y           .          .     .     Y\n"
    "\n"
    "1946   |    .        .           Y\n"
    "1954   |    Y        .           .\n"
    "1979   |    .        Y           .\n";

void criterion_golden_trace(const std::string& cli) {
    RunResult r = run(cli + " solve '" + puzzle_path("birthyears") + "'");
    auto lines = split_lines(r.out);

    std::string why;
    bool ok = r.exit_code == 0;
    if (!ok) why = "solve exited " + std::to_string(r.exit_code);

    if (ok && (lines.size() < 12 || !lines[11].empty())) {
        ok = false;
        why = "expected 11 explanation lines then a blank line";
    }
    if (ok) {
        for (int i : {0, 1, 2, 3, 5, 6, 7})
            if (lines[i].find("(Clue ") == std::string::npos) {
                ok = false;
                why = "line " + std::to_string(i) + " is not clue-derived: " + lines[i];
                break;
            }
    }
    auto expect_eq = [&](int i, const std::string& want) {
        if (ok && lines[i] != want) {
            ok = false;
            why = "line " + std::to_string(i) + " = \"" + lines[i] + "\"";
        }
    };
    expect_eq(4, "7 cells can be filled from basic consistency.");
    expect_eq(8, "9 cells can be filled from basic consistency.");
    expect_eq(10, "3 cells can be filled from basic consistency.");
    if (ok && lines[9].find("\"Donald\" is \"1946\" and \"1946\" is \"United States\"") ==
                  std::string::npos) {
        ok = false;
        why = "transitivity line = \"" + lines[9] + "\"";
    }

    // the grid block after the blank line must be byte-exact
    if (ok) {
        size_t at = r.out.find("\n\n");
        if (at == std::string::npos || r.out.substr(at + 2) != kFinalGrid) {
            ok = false;
            why = "final grid text differs";
        }
    }

    // intermediate states, cell-for-cell
    Puzzle p = load("birthyears");
    SolveResult sr = solve(p);
    if (ok && sr.events.size() != 27) {
        ok = false;
        why = "expected 27 deduction events, got " + std::to_string(sr.events.size());
    }
    if (ok) {
        Grid g(p);
        for (int i = 0; i < 4; ++i) g.set(sr.events[i].cell.a, sr.events[i].cell.b, sr.events[i].value);
        // after the first clue pass: exactly these four cells, nothing else
        bool fig = g.get(p.element("United States"), p.element("1946")) == CellState::yes &&
                   g.get(p.element("Leo"), p.element("Germany")) == CellState::no &&
                   g.get(p.element("Leo"), p.element("1946")) == CellState::no &&
                   g.get(p.element("Germany"), p.element("1979")) == CellState::no &&
                   g.unknown_count() == g.cell_count() - 4;
        if (!fig) {
            ok = false;
            why = "grid after the first clue pass differs";
        }
    }
    if (ok) {
        Grid g(p);
        for (int i = 0; i < 23; ++i) g.set(sr.events[i].cell.a, sr.events[i].cell.b, sr.events[i].value);
        // before the transitivity step: solved except Donald/Leo x Ireland/United States
        bool fig = g.unknown_count() == 4;
        for (const char* person : {"Donald", "Leo"})
            for (const char* place : {"Ireland", "United States"})
                fig = fig && g.get(p.element(person), p.element(place)) == CellState::unknown;
        if (fig) {
            auto sols = enumerate_solutions(p, 2);
            fig = sols.size() == 1;
            int k = p.category_count(), n = p.elements_per_category();
            for (int a = 0; fig && a < k; ++a)
                for (int b = a + 1; b < k; ++b)
                    for (int i = 0; i < n; ++i)
                        for (int j = 0; j < n; ++j) {
                            ElementRef e{static_cast<int16_t>(a), static_cast<int16_t>(i)};
                            ElementRef f{static_cast<int16_t>(b), static_cast<int16_t>(j)};
                            CellState v = g.get(e, f);
                            if (v == CellState::unknown) continue;
                            fig = fig && (v == CellState::yes) == sols[0].matched(e, f);
                        }
        }
        if (!fig) {
            ok = false;
            why = "grid before the transitivity step differs";
        }
    }
    if (ok) {
        auto sols = enumerate_solutions(p, 2);
        bool match = sols.size() == 1 && sr.status == SolveStatus::solved &&
                     sols[0].matched(p.element("Angela"), p.element("Germany")) &&
                     sols[0].matched(p.element("Angela"), p.element("1954")) &&
                     sols[0].matched(p.element("Donald"), p.element("United States")) &&
                     sols[0].matched(p.element("Donald"), p.element("1946")) &&
                     sols[0].matched(p.element("Leo"), p.element("Ireland")) &&
                     sols[0].matched(p.element("Leo"), p.element("1979"));
        if (!match) {
            ok = false;
            why = "final solution differs from the expected one";
        }
    }

    report(1, "running example trace, intermediate grids, final solution", ok, why);
}

// --- criterion 2: solver vs oracle on the whole corpus ----------------------

void criterion_oracle_agreement(const std::string& cli) {
    bool ok = true;
    std::string why;

    std::set<ConstraintKind> kinds;
    for (const char* name : kAll) {
        Puzzle p = load(name);
        for (const auto& c : p.constraints) kinds.insert(c.kind);
    }
    if (kinds.size() != 14) {
        ok = false;
        why = "corpus covers only " + std::to_string(kinds.size()) + " constraint kinds";
    }
    if (ok && sizeof kCrafted / sizeof *kCrafted < 5) {
        ok = false;
        why = "fewer than 5 crafted puzzles";
    }

    for (const char* name : kSolvable) {
        if (!ok) break;
        Puzzle p = load(name);
        auto sols = enumerate_solutions(p, 2);
        if (sols.size() != 1) {
            ok = false;
            why = std::string(name) + ": oracle found " + std::to_string(sols.size()) +
                  " solutions";
            break;
        }
        SolveResult r = solve(p);
        if (r.status != SolveStatus::solved) {
            ok = false;
            why = std::string(name) + ": solver status " + status_name(r.status);
            break;
        }
        if (!grid_equals_solution(p, r.grid, sols[0], why)) {
            ok = false;
            why = std::string(name) + ": " + why;
            break;
        }
    }

    if (ok) {
        SolveResult under = solve(load("birthyears_no_clue3"));
        SolveResult contra = solve(load("impossible"));
        if (under.status != SolveStatus::stuck) {
            ok = false;
            why = "under-constrained puzzle: solver status " + std::string(status_name(under.status));
        } else if (contra.status != SolveStatus::contradiction) {
            ok = false;
            why = "contradictory puzzle: solver status " + std::string(status_name(contra.status));
        }
    }
    if (ok) {
        RunResult r = run(cli + " validate '" + puzzle_path("birthyears_no_clue3") + "' '" +
                          puzzle_path("impossible") + "'");
        auto lines = split_lines(r.out);
        if (r.exit_code != 1 || lines.size() != 2 ||
            lines[0].find("ambiguous") == std::string::npos ||
            lines[1].find("unsat") == std::string::npos) {
            ok = false;
            why = "validate verdicts: " + r.out;
        }
    }

    report(2, "oracle agreement across the corpus, defect detection", ok, why);
}

// --- criterion 3: CNF encoding counts and models match the oracle -----------

void criterion_cnf_equivalence() {
    bool ok = true;
    std::string why;

    Puzzle birthyears = load("birthyears");
    Cnf byc = encode(birthyears);
    if (byc.num_vars != 27) {
        ok = false;
        why = "running example encodes to " + std::to_string(byc.num_vars) + " variables";
    }

    for (const char* name : kAll) {
        if (!ok) break;
        Puzzle p = load(name);
        Cnf cnf = encode(p);
        auto sols = enumerate_solutions(p, 10);
        long long counted = count_models(cnf, 10);
        if (counted != static_cast<long long>(sols.size())) {
            ok = false;
            why = std::string(name) + ": " + std::to_string(counted) + " models vs " +
                  std::to_string(sols.size()) + " solutions";
            break;
        }

        // each model's yes-set must be exactly one oracle solution's yes-set
        auto models = enumerate_models(cnf, 10);
        std::set<std::set<int>> model_sets, oracle_sets;
        for (const auto& m : models) {
            std::set<int> vars;
            for (int v = 1; v < static_cast<int>(m.size()); ++v)
                if (m[v] > 0) vars.insert(v);
            model_sets.insert(std::move(vars));
        }
        for (const auto& s : sols) {
            std::set<int> vars;
            int k = p.category_count(), n = p.elements_per_category();
            for (int a = 0; a < k; ++a)
                for (int b = a + 1; b < k; ++b)
                    for (int i = 0; i < n; ++i)
                        for (int j = 0; j < n; ++j) {
                            ElementRef e{static_cast<int16_t>(a), static_cast<int16_t>(i)};
                            ElementRef f{static_cast<int16_t>(b), static_cast<int16_t>(j)};
                            if (s.matched(e, f)) vars.insert(var_index(p, e, f));
                        }
            oracle_sets.insert(std::move(vars));
        }
        if (model_sets != oracle_sets) {
            ok = false;
            why = std::string(name) + ": decoded models differ from oracle solutions";
            break;
        }
    }

    report(3, "CNF model counts and decoded models equal the oracle", ok, why);
}

// --- criterion 4: corpus-wide timing ----------------------------------------

void criterion_timing(const std::string& cli) {
    // pinned budgets: full validate pipeline 1000 ms, inference alone 50 ms
    constexpr long long kValidateBudgetMs = 1000;
    constexpr long long kSolveBudgetMs = 50;

    std::string command = cli + " validate";
    for (const char* name : kAll) command += " '" + puzzle_path(name) + "'";

    auto t0 = std::chrono::steady_clock::now();
    RunResult r = run(command);
    auto t1 = std::chrono::steady_clock::now();
    long long validate_ms =
        std::chrono::duration_cast<std::chrono::milliseconds>(t1 - t0).count();

    std::vector<Puzzle> puzzles;
    for (const char* name : kAll) puzzles.push_back(load(name));
    auto t2 = std::chrono::steady_clock::now();
    for (const Puzzle& p : puzzles) {
        SolveResult sr = solve(p);
        (void)sr;
    }
    auto t3 = std::chrono::steady_clock::now();
    long long solve_ms = std::chrono::duration_cast<std::chrono::milliseconds>(t3 - t2).count();

    bool ok = true;
    std::string why;
    if (r.exit_code != 1) {  // two defective files are part of the corpus
        ok = false;
        why = "validate exited " + std::to_string(r.exit_code);
    } else if (validate_ms >= kValidateBudgetMs) {
        ok = false;
        why = "full validation took " + std::to_string(validate_ms) + " ms";
    } else if (solve_ms >= kSolveBudgetMs) {
        ok = false;
        why = "solver passes took " + std::to_string(solve_ms) + " ms";
    }
    report(4, "corpus validation under 1 s, inference under 50 ms (" +
                  std::to_string(validate_ms) + " ms / " + std::to_string(solve_ms) + " ms)",
           ok, why);
}

// --- criterion 5: randomized property suites --------------------------------

void criterion_properties(const std::string& property_binary) {
    RunResult r = run("'" + property_binary + "'");
    bool ok = r.exit_code == 0;
    report(5, "randomized property suites (1400+ cases)", ok,
           "property binary exited " + std::to_string(r.exit_code));
}

// --- criterion 6: the five-house riddle, end to end -------------------------

void criterion_zebra(const std::string& cli) {
    Puzzle p = load("zebra");
    bool ok = true;
    std::string why;

    auto sols = enumerate_solutions(p, 2);
    if (sols.size() != 1) {
        ok = false;
        why = "oracle found " + std::to_string(sols.size()) + " solutions";
    }

    std::string owner;
    if (ok) {
        int nat = p.find_category("Nationality");
        ElementRef zebra = p.element("Zebra");
        int t = sols[0].tuple_of(zebra.category, zebra.index);
        owner = p.categories[nat].elements[sols[0].tuples[t][nat]];

        SolveResult r = solve(p);
        if (r.status != SolveStatus::solved) {
            ok = false;
            why = "solver status " + std::string(status_name(r.status));
        } else if (r.grid.get(p.element(owner), zebra) != CellState::yes) {
            ok = false;
            why = "solver grid does not pair " + owner + " with the zebra";
        }
    }
    if (ok) {
        RunResult r = run(cli + " solve '" + puzzle_path("zebra") + "'");
        if (r.exit_code != 0) {
            ok = false;
            why = "solve exited " + std::to_string(r.exit_code);
        }
    }

    report(6, "five-house riddle solved, zebra owner = " + (owner.empty() ? "?" : owner),
           ok, why);
}

}  // namespace

int main(int argc, char** argv) {
    if (argc < 4) {
        std::cerr << "usage: acceptance <cli-binary> <puzzles-dir> <property-test-binary>\n";
        return 2;
    }
    std::string cli = std::string("'") + argv[1] + "'";
    puzzles_dir = argv[2];

    criterion_golden_trace(cli);
    criterion_oracle_agreement(cli);
    criterion_cnf_equivalence();
    criterion_timing(cli);
    criterion_properties(argv[3]);
    criterion_zebra(cli);

    if (failures) std::cout << failures << " criterion(s) failed\n";
    return failures ? 1 : 0;
}
