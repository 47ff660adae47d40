#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include "doctest.h"

#include <cstring>
#include <string>
#include <vector>

#include "logigrid.h"

namespace {

const char* kBirthyears =
    "category FirstName: Angela Donald Leo\n"
    "category Country: Germany Ireland United_States\n"
    "category Year_of_Birth ordered: 1946 1954 1979\n"
    "clue 1: yes United_States 1946\n"
    "clue 2: after Leo Year_of_Birth Germany\n"
    "clue 3: or Donald 1946 Ireland\n";

std::string puzzle_path(const char* name) {
    return std::string(PUZZLES_DIR) + "/" + name + ".puzzle";
}

// RAII wrappers to keep the tests leak-free under valgrind
struct PuzzleGuard {
    lg_puzzle* p;
    explicit PuzzleGuard(lg_puzzle* h) : p(h) {}
    ~PuzzleGuard() { lg_puzzle_free(p); }
};
struct ResultGuard {
    lg_result* r;
    explicit ResultGuard(lg_result* h) : r(h) {}
    ~ResultGuard() { lg_result_free(r); }
};
struct StringGuard {
    char* s;
    explicit StringGuard(char* h) : s(h) {}
    ~StringGuard() { lg_string_free(s); }
};

}  // namespace

TEST_CASE("version and error name tables") {
    REQUIRE(lg_version() != nullptr);
    CHECK(std::string(lg_version()).find('.') != std::string::npos);
    CHECK(std::string(lg_error_name(LG_OK)) == "ok");
    CHECK(std::string(lg_error_name(LG_ERR_SYNTAX)) == "SyntaxError");
    CHECK(std::string(lg_error_name(LG_ERR_CONTRADICTION)) == "Contradiction");
    CHECK(std::string(lg_status_name(LG_STATUS_SOLVED)) == "solved");
    CHECK(std::string(lg_status_name(LG_STATUS_STUCK)) == "stuck");
    CHECK(std::string(lg_status_name(LG_STATUS_CONTRADICTION)) == "contradiction");
}

TEST_CASE("parse, inspect, serialize round trip") {
    lg_puzzle* p = lg_parse(kBirthyears);
    REQUIRE(p != nullptr);
    PuzzleGuard g(p);

    CHECK(std::string(lg_puzzle_name(p)).empty());
    CHECK(lg_category_count(p) == 3);
    CHECK(lg_element_count(p) == 3);
    CHECK(std::string(lg_category_label(p, 0)) == "FirstName");
    CHECK(std::string(lg_category_label(p, 2)) == "Year of Birth");
    CHECK(lg_category_ordered(p, 0) == 0);
    CHECK(lg_category_ordered(p, 2) == 1);
    CHECK(std::string(lg_element_label(p, 1, 2)) == "United States");
    CHECK(lg_constraint_count(p) == 3);
    CHECK(lg_constraint_clue(p, 0) == 1);
    CHECK(std::string(lg_constraint_kind(p, 0)) == "yes");
    CHECK(std::string(lg_constraint_kind(p, 1)) == "after");
    CHECK(std::string(lg_constraint_kind(p, 2)) == "or");
    CHECK(lg_validate(p) == LG_OK);

    char* text = lg_serialize(p);
    REQUIRE(text != nullptr);
    StringGuard sg(text);
    lg_puzzle* again = lg_parse(text);
    REQUIRE(again != nullptr);
    PuzzleGuard g2(again);
    char* text2 = lg_serialize(again);
    StringGuard sg2(text2);
    CHECK(std::string(text) == text2);
}

TEST_CASE("parse failures report code and line") {
    CHECK(lg_parse("category A: a1 a2\nwhat is this\n") == nullptr);
    CHECK(lg_last_error_code() == LG_ERR_SYNTAX);
    CHECK(lg_last_error_line() == 2);
    CHECK(std::strlen(lg_last_error()) > 0);

    // unknown label is caught at parse time with its clue's line
    CHECK(lg_parse("category A: a1 a2\ncategory B: b1 b2\nclue 1: yes a1 zz\n") == nullptr);
    CHECK(lg_last_error_code() == LG_ERR_UNKNOWN_LABEL);
    CHECK(lg_last_error_line() == 3);

    CHECK(lg_parse(nullptr) == nullptr);
    CHECK(lg_last_error_code() == LG_ERR_INVALID_ARGUMENT);
}

TEST_CASE("lg_parse_file and IO errors") {
    lg_puzzle* p = lg_parse_file(puzzle_path("birthyears").c_str());
    REQUIRE(p != nullptr);
    PuzzleGuard g(p);
    CHECK(lg_category_count(p) == 3);

    CHECK(lg_parse_file("/no/such/file.puzzle") == nullptr);
    CHECK(lg_last_error_code() == LG_ERR_IO);
}

TEST_CASE("validate passes structurally sound puzzles, even unsolvable ones") {
    // a logical contradiction is not a structural defect
    for (const char* name : {"birthyears", "impossible", "birthyears_no_clue3"}) {
        CAPTURE(name);
        lg_puzzle* p = lg_parse_file(puzzle_path(name).c_str());
        REQUIRE(p != nullptr);
        PuzzleGuard g(p);
        CHECK(lg_validate(p) == LG_OK);
    }
}

TEST_CASE("solve produces status, cells, lines, grid, log") {
    lg_puzzle* p = lg_parse(kBirthyears);
    REQUIRE(p != nullptr);
    PuzzleGuard g(p);
    lg_result* r = lg_solve(p);
    REQUIRE(r != nullptr);
    ResultGuard rg(r);

    CHECK(lg_result_status(r) == LG_STATUS_SOLVED);
    CHECK(lg_result_event_count(r) == 27);

    int v = 99;
    CHECK(lg_result_cell(r, "Angela", "Germany", &v) == LG_OK);
    CHECK(v == 1);
    CHECK(lg_result_cell(r, "Angela", "Ireland", &v) == LG_OK);
    CHECK(v == -1);
    CHECK(lg_result_cell(r, "Angela", "nobody", &v) == LG_ERR_UNKNOWN_LABEL);
    CHECK(lg_result_cell(r, "Angela", "Donald", &v) == LG_ERR_SAME_CATEGORY);

    // grouped rendering is the default flag set
    int grouped = lg_result_line_count(r, 0);
    int flat = lg_result_line_count(r, LG_OPT_NO_GROUP);
    CHECK(grouped == 11);
    CHECK(flat == 27);
    REQUIRE(lg_result_line(r, 0, 0) != nullptr);
    CHECK(std::string(lg_result_line(r, 0, 0)) ==
          "\"United States\" is \"1946\" (Clue 1).");
    CHECK(lg_result_line(r, 0, grouped) == nullptr);  // out of range, no error
    CHECK(lg_result_line(r, 0, -1) == nullptr);

    // the same handle serves multiple flag combinations
    int with_discards = lg_result_line_count(r, LG_OPT_DISCARDS);
    CHECK(with_discards == grouped + 3);

    char* block = lg_result_render(r, 0);
    REQUIRE(block != nullptr);
    StringGuard bg(block);
    std::string s(block);
    CHECK(std::count(s.begin(), s.end(), '\n') == grouped);
    CHECK(s.find("\"United States\" is \"1946\" (Clue 1).\n") == 0);

    char* grid = lg_result_grid(r);
    REQUIRE(grid != nullptr);
    StringGuard gg(grid);
    CHECK(std::string(grid).find("Angela") != std::string::npos);

    char* log = lg_result_log(r);
    REQUIRE(log != nullptr);
    StringGuard lg_(log);
    std::string l(log);
    CHECK(std::count(l.begin(), l.end(), '\n') == 27);
    CHECK(l.rfind("{\"seq\":0,", 0) == 0);
}

TEST_CASE("slice narrows the explanation to one cell") {
    lg_puzzle* p = lg_parse(kBirthyears);
    REQUIRE(p != nullptr);
    PuzzleGuard g(p);
    lg_result* r = lg_solve(p);
    REQUIRE(r != nullptr);
    ResultGuard rg(r);

    char* slice = lg_result_slice(r, "Leo", "Ireland", LG_OPT_NO_GROUP);
    REQUIRE(slice != nullptr);
    StringGuard sg(slice);
    std::string s(slice);
    CHECK(s.find("\"Leo\" is \"Ireland\"") != std::string::npos);
    // the slice is a strict subset of the flat rendering
    char* full = lg_result_render(r, LG_OPT_NO_GROUP);
    StringGuard fg(full);
    CHECK(s.size() < std::string(full).size());

    CHECK(lg_result_slice(r, "Leo", "bogus", 0) == nullptr);
    CHECK(lg_last_error_code() == LG_ERR_UNKNOWN_LABEL);
}

TEST_CASE("slice on a never-filled cell sets the dedicated code") {
    lg_puzzle* p = lg_parse_file(puzzle_path("birthyears_no_clue3").c_str());
    REQUIRE(p != nullptr);
    PuzzleGuard g(p);
    lg_result* r = lg_solve(p);
    REQUIRE(r != nullptr);
    ResultGuard rg(r);
    CHECK(lg_result_status(r) == LG_STATUS_STUCK);

    CHECK(lg_result_slice(r, "Donald", "United States", 0) == nullptr);
    CHECK(lg_last_error_code() == LG_ERR_TARGET_NEVER_FILLED);
}

TEST_CASE("contradictions still hand back a result") {
    lg_puzzle* p = lg_parse_file(puzzle_path("impossible").c_str());
    REQUIRE(p != nullptr);
    PuzzleGuard g(p);
    lg_result* r = lg_solve(p);
    REQUIRE(r != nullptr);
    ResultGuard rg(r);
    CHECK(lg_result_status(r) == LG_STATUS_CONTRADICTION);
    CHECK(lg_result_event_count(r) > 0);
}

TEST_CASE("cnf encode, dimacs, counting") {
    lg_puzzle* p = lg_parse(kBirthyears);
    REQUIRE(p != nullptr);
    PuzzleGuard g(p);
    lg_cnf* c = lg_cnf_encode(p);
    REQUIRE(c != nullptr);

    CHECK(lg_cnf_num_vars(c) == 27);
    CHECK(lg_cnf_num_clauses(c) == 161);
    CHECK(lg_var_index(p, "Leo", "1979") == 18);
    CHECK(lg_var_index(p, "1979", "Leo") == 18);
    CHECK(lg_var_index(p, "Leo", "Angela") == 0);
    CHECK(lg_last_error_code() == LG_ERR_SAME_CATEGORY);

    char* dimacs = lg_cnf_dimacs(c);
    REQUIRE(dimacs != nullptr);
    StringGuard dg(dimacs);
    CHECK(std::string(dimacs).find("p cnf 27 161\n") != std::string::npos);

    CHECK(lg_cnf_count_models(c, 10) == 1);
    CHECK(lg_cnf_count_models(nullptr, 10) == -1);
    lg_cnf_free(c);
}

TEST_CASE("enumeration handles and element access") {
    lg_puzzle* p = lg_parse(kBirthyears);
    REQUIRE(p != nullptr);
    PuzzleGuard g(p);
    lg_solutions* s = lg_enumerate(p, 10);
    REQUIRE(s != nullptr);
    CHECK(lg_solutions_count(s) == 1);

    // collect the tuple containing Donald
    bool found = false;
    for (int t = 0; t < 3; ++t) {
        std::string name = lg_solution_element(s, 0, t, 0);
        if (name == "Donald") {
            CHECK(std::string(lg_solution_element(s, 0, t, 1)) == "United States");
            CHECK(std::string(lg_solution_element(s, 0, t, 2)) == "1946");
            found = true;
        }
    }
    CHECK(found);
    CHECK(lg_solution_element(s, 5, 0, 0) == nullptr);
    lg_solutions_free(s);
}

namespace {

// a scripted prompter: answers are consumed one per question
struct Script {
    std::vector<std::string> answers;
    size_t next = 0;
    std::string current;
};

const char* scripted_ask(const char* question, void* user) {
    Script* s = static_cast<Script*>(user);
    REQUIRE(question != nullptr);
    if (s->next >= s->answers.size()) return nullptr;
    s->current = s->answers[s->next++];
    return s->current.c_str();
}

}  // namespace

TEST_CASE("acquire drives the interview through a callback") {
    Script script;
    script.answers = {
        "",                    // puzzle name: skip
        "3",                   // categories
        "3",                   // elements each
        "FirstName",           // category 1 name
        "no",                  // ordered?
        "Angela Donald Leo",   // elements
        "Country",
        "no",
        "Germany Ireland United_States",
        "Year_of_Birth",
        "yes",
        "1946 1954 1979",
        "1", "yes", "United_States", "1946",
        "2", "after", "Leo", "Year_of_Birth", "Germany",
        "3", "or", "Donald", "1946", "Ireland",
        "done",
    };
    char* transcript = nullptr;
    lg_puzzle* p = lg_acquire(scripted_ask, &script, &transcript);
    REQUIRE(p != nullptr);
    PuzzleGuard g(p);
    StringGuard tg(transcript);

    char* text = lg_serialize(p);
    StringGuard sg(text);
    lg_puzzle* ref = lg_parse(kBirthyears);
    PuzzleGuard rg(ref);
    char* ref_text = lg_serialize(ref);
    StringGuard rsg(ref_text);
    CHECK(std::string(text) == ref_text);

    REQUIRE(transcript != nullptr);
    std::string t(transcript);
    CHECK(t.find("? Puzzle name (may be empty)?\n> \n") == 0);
    CHECK(t.find("? Constraint type?\n> yes\n") != std::string::npos);
    CHECK(t.find("> United_States\n") != std::string::npos);
}

TEST_CASE("acquire abort propagates as an error") {
    Script script;
    script.answers = {"", "3"};  // runs dry after two answers
    char* transcript = nullptr;
    lg_puzzle* p = lg_acquire(scripted_ask, &script, &transcript);
    CHECK(p == nullptr);
    CHECK(lg_last_error_code() == LG_ERR_IO);
}

TEST_CASE("null handles are rejected without crashing") {
    CHECK(lg_solve(nullptr) == nullptr);
    CHECK(lg_serialize(nullptr) == nullptr);
    CHECK(lg_validate(nullptr) == LG_ERR_INVALID_ARGUMENT);
    CHECK(lg_cnf_encode(nullptr) == nullptr);
    CHECK(lg_enumerate(nullptr, 5) == nullptr);
    int v;
    CHECK(lg_result_cell(nullptr, "a", "b", &v) == LG_ERR_INVALID_ARGUMENT);
    lg_puzzle_free(nullptr);
    lg_result_free(nullptr);
    lg_cnf_free(nullptr);
    lg_solutions_free(nullptr);
    lg_string_free(nullptr);
}
