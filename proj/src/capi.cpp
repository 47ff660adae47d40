#include "logigrid.h"

#include <cstdlib>
#include <cstring>
#include <fstream>
#include <sstream>

#include "logigrid/acquire.hpp"
#include "logigrid/cnf.hpp"
#include "logigrid/explain.hpp"
#include "logigrid/oracle.hpp"
#include "logigrid/parser.hpp"
#include "logigrid/solver.hpp"

using namespace logigrid;

namespace {

thread_local std::string g_error_message;
thread_local int g_error_code = LG_OK;
thread_local int g_error_line = 0;

void clear_error() {
    g_error_message.clear();
    g_error_code = LG_OK;
    g_error_line = 0;
}

void set_error(const LgError& e) {
    g_error_message = e.what();
    g_error_code = static_cast<int>(e.code);
    g_error_line = e.line;
}

void set_error(int code, std::string message) {
    g_error_message = std::move(message);
    g_error_code = code;
    g_error_line = 0;
}

// Runs the body, routing exceptions into the thread-local error slot.
template <typename F>
auto guarded(F&& body) -> decltype(body()) {
    clear_error();
    try {
        return body();
    } catch (const LgError& e) {
        set_error(e);
    } catch (const std::exception& e) {
        set_error(LG_ERR_INVALID_ARGUMENT, e.what());
    }
    return decltype(body()){};
}

char* copy_string(const std::string& s) {
    char* out = static_cast<char*>(std::malloc(s.size() + 1));
    if (!out) return nullptr;
    std::memcpy(out, s.c_str(), s.size() + 1);
    return out;
}

}  // namespace

struct lg_puzzle {
    Puzzle puzzle;
};

struct lg_result {
    Puzzle puzzle;  // the grid below points at this copy
    SolveResult res;
    // rendered line cache, one slot per flag combination (grouping x discards)
    std::vector<std::string> lines[4];
    bool lines_ready[4] = {false, false, false, false};

    explicit lg_result(const Puzzle& p) : puzzle(p), res(solve(puzzle)) {
        annotate(puzzle, res.events);
    }

    const std::vector<std::string>& lines_for(unsigned flags) {
        unsigned slot = flags & 3u;
        if (!lines_ready[slot]) {
            ExplanationOptions opts;
            opts.group_bcr = !(flags & LG_OPT_NO_GROUP);
            opts.announce_discards = (flags & LG_OPT_DISCARDS) != 0;
            lines[slot] = output_lines(puzzle, res.events, opts);
            lines_ready[slot] = true;
        }
        return lines[slot];
    }
};

struct lg_cnf {
    Cnf cnf;
};

struct lg_solutions {
    Puzzle puzzle;
    std::vector<Solution> solutions;
};

extern "C" {

const char* lg_version(void) { return "1.0.0"; }

const char* lg_last_error(void) { return g_error_message.c_str(); }
int lg_last_error_code(void) { return g_error_code; }
int lg_last_error_line(void) { return g_error_line; }

const char* lg_error_name(int code) { return code_name(static_cast<Code>(code)); }

const char* lg_status_name(int status) {
    switch (status) {
        case LG_STATUS_SOLVED: return "solved";
        case LG_STATUS_STUCK: return "stuck";
        case LG_STATUS_CONTRADICTION: return "contradiction";
    }
    return "?";
}

void lg_string_free(char* s) { std::free(s); }

lg_puzzle* lg_parse(const char* text) {
    if (!text) {
        set_error(LG_ERR_INVALID_ARGUMENT, "text is NULL");
        return nullptr;
    }
    return guarded([&]() -> lg_puzzle* { return new lg_puzzle{parse_puzzle(text)}; });
}

lg_puzzle* lg_parse_file(const char* path) {
    if (!path) {
        set_error(LG_ERR_INVALID_ARGUMENT, "path is NULL");
        return nullptr;
    }
    return guarded([&]() -> lg_puzzle* {
        std::ifstream in(path, std::ios::binary);
        if (!in) throw LgError(Code::io_error, std::string("cannot open ") + path);
        std::ostringstream buf;
        buf << in.rdbuf();
        return new lg_puzzle{parse_puzzle(buf.str())};
    });
}

void lg_puzzle_free(lg_puzzle* p) { delete p; }

char* lg_serialize(const lg_puzzle* p) {
    if (!p) return nullptr;
    return guarded([&]() { return copy_string(serialize_puzzle(p->puzzle)); });
}

const char* lg_puzzle_name(const lg_puzzle* p) { return p ? p->puzzle.name.c_str() : nullptr; }

int lg_category_count(const lg_puzzle* p) { return p ? p->puzzle.category_count() : 0; }

int lg_element_count(const lg_puzzle* p) { return p ? p->puzzle.elements_per_category() : 0; }

const char* lg_category_label(const lg_puzzle* p, int cat) {
    if (!p || cat < 0 || cat >= p->puzzle.category_count()) return nullptr;
    return p->puzzle.categories[cat].label.c_str();
}

int lg_category_ordered(const lg_puzzle* p, int cat) {
    if (!p || cat < 0 || cat >= p->puzzle.category_count()) return 0;
    return p->puzzle.categories[cat].ordered ? 1 : 0;
}

const char* lg_element_label(const lg_puzzle* p, int cat, int index) {
    if (!p || cat < 0 || cat >= p->puzzle.category_count()) return nullptr;
    const auto& els = p->puzzle.categories[cat].elements;
    if (index < 0 || index >= static_cast<int>(els.size())) return nullptr;
    return els[index].c_str();
}

int lg_constraint_count(const lg_puzzle* p) {
    return p ? static_cast<int>(p->puzzle.constraints.size()) : 0;
}

int lg_constraint_clue(const lg_puzzle* p, int index) {
    if (!p || index < 0 || index >= static_cast<int>(p->puzzle.constraints.size())) return -1;
    return p->puzzle.constraints[index].clue_id;
}

const char* lg_constraint_kind(const lg_puzzle* p, int index) {
    if (!p || index < 0 || index >= static_cast<int>(p->puzzle.constraints.size()))
        return nullptr;
    return kind_name(p->puzzle.constraints[index].kind);
}

int lg_validate(const lg_puzzle* p) {
    if (!p) return LG_ERR_INVALID_ARGUMENT;
    clear_error();
    auto issues = p->puzzle.validate();
    if (issues.empty()) return LG_OK;
    set_error(static_cast<int>(issues.front().code), issues.front().message);
    return g_error_code;
}

lg_puzzle* lg_acquire(lg_ask_fn ask, void* user, char** transcript) {
    if (!ask) {
        set_error(LG_ERR_INVALID_ARGUMENT, "ask callback is NULL");
        return nullptr;
    }
    struct CallbackPrompter : Prompter {
        lg_ask_fn fn;
        void* user;
        std::string ask(const std::string& question) override {
            const char* answer = fn(question.c_str(), user);
            if (!answer) throw LgError(Code::io_error, "prompter aborted");
            return answer;
        }
    };
    return guarded([&]() -> lg_puzzle* {
        CallbackPrompter prompter;
        prompter.fn = ask;
        prompter.user = user;
        AcquireResult acquired = acquire_interactive(prompter);
        if (transcript) *transcript = copy_string(format_transcript(acquired.transcript));
        return new lg_puzzle{std::move(acquired.puzzle)};
    });
}

lg_result* lg_solve(const lg_puzzle* p) {
    if (!p) {
        set_error(LG_ERR_INVALID_ARGUMENT, "puzzle is NULL");
        return nullptr;
    }
    return guarded([&]() -> lg_result* { return new lg_result(p->puzzle); });
}

void lg_result_free(lg_result* r) { delete r; }

int lg_result_status(const lg_result* r) {
    if (!r) return LG_STATUS_CONTRADICTION;
    switch (r->res.status) {
        case SolveStatus::solved: return LG_STATUS_SOLVED;
        case SolveStatus::stuck: return LG_STATUS_STUCK;
        case SolveStatus::contradiction: return LG_STATUS_CONTRADICTION;
    }
    return LG_STATUS_CONTRADICTION;
}

int lg_result_cell(const lg_result* r, const char* e, const char* f, int* value) {
    if (!r || !e || !f || !value) return LG_ERR_INVALID_ARGUMENT;
    clear_error();
    try {
        *value = static_cast<int>(r->res.grid.get(e, f));
        return LG_OK;
    } catch (const LgError& err) {
        set_error(err);
        return g_error_code;
    }
}

int lg_result_event_count(const lg_result* r) {
    return r ? static_cast<int>(r->res.events.size()) : 0;
}

int lg_result_line_count(const lg_result* r, unsigned flags) {
    if (!r) return 0;
    return static_cast<int>(const_cast<lg_result*>(r)->lines_for(flags).size());
}

const char* lg_result_line(const lg_result* r, unsigned flags, int index) {
    if (!r) return nullptr;
    const auto& lines = const_cast<lg_result*>(r)->lines_for(flags);
    if (index < 0 || index >= static_cast<int>(lines.size())) return nullptr;
    return lines[index].c_str();
}

char* lg_result_render(const lg_result* r, unsigned flags) {
    if (!r) return nullptr;
    const auto& lines = const_cast<lg_result*>(r)->lines_for(flags);
    std::string out;
    for (const auto& line : lines) out += line + "\n";
    return copy_string(out);
}

char* lg_result_grid(const lg_result* r) {
    if (!r) return nullptr;
    return guarded([&]() { return copy_string(render_grid(r->res.grid)); });
}

char* lg_result_log(const lg_result* r) {
    if (!r) return nullptr;
    return guarded([&]() { return copy_string(render_log(r->puzzle, r->res.events)); });
}

char* lg_result_slice(const lg_result* r, const char* e, const char* f, unsigned flags) {
    if (!r || !e || !f) return nullptr;
    return guarded([&]() -> char* {
        CellRef target(r->puzzle.element(e), r->puzzle.element(f));
        if (target.a.category == target.b.category)
            throw LgError(Code::same_category, "both labels are in one category");
        auto events = slice_for_cell(r->res.events, target);
        ExplanationOptions opts;
        opts.group_bcr = !(flags & LG_OPT_NO_GROUP);
        opts.announce_discards = (flags & LG_OPT_DISCARDS) != 0;
        std::string out;
        for (const auto& line : output_lines(r->puzzle, events, opts)) out += line + "\n";
        return copy_string(out);
    });
}

lg_cnf* lg_cnf_encode(const lg_puzzle* p) {
    if (!p) {
        set_error(LG_ERR_INVALID_ARGUMENT, "puzzle is NULL");
        return nullptr;
    }
    return guarded([&]() -> lg_cnf* { return new lg_cnf{encode(p->puzzle)}; });
}

void lg_cnf_free(lg_cnf* c) { delete c; }

int lg_cnf_num_vars(const lg_cnf* c) { return c ? c->cnf.num_vars : 0; }

int lg_cnf_num_clauses(const lg_cnf* c) {
    return c ? static_cast<int>(c->cnf.clauses.size()) : 0;
}

char* lg_cnf_dimacs(const lg_cnf* c) {
    if (!c) return nullptr;
    return guarded([&]() { return copy_string(write_dimacs(c->cnf)); });
}

int lg_var_index(const lg_puzzle* p, const char* e, const char* f) {
    if (!p || !e || !f) {
        set_error(LG_ERR_INVALID_ARGUMENT, "NULL argument");
        return 0;
    }
    clear_error();
    try {
        return var_index(p->puzzle, e, f);
    } catch (const LgError& err) {
        set_error(err);
        return 0;
    }
}

long long lg_cnf_count_models(const lg_cnf* c, long long limit) {
    if (!c) {
        set_error(LG_ERR_INVALID_ARGUMENT, "cnf is NULL");
        return -1;
    }
    clear_error();
    return count_models(c->cnf, limit);
}

lg_solutions* lg_enumerate(const lg_puzzle* p, int limit) {
    if (!p) {
        set_error(LG_ERR_INVALID_ARGUMENT, "puzzle is NULL");
        return nullptr;
    }
    return guarded([&]() -> lg_solutions* {
        return new lg_solutions{p->puzzle, enumerate_solutions(p->puzzle, limit)};
    });
}

void lg_solutions_free(lg_solutions* s) { delete s; }

int lg_solutions_count(const lg_solutions* s) {
    return s ? static_cast<int>(s->solutions.size()) : 0;
}

const char* lg_solution_element(const lg_solutions* s, int index, int tuple, int cat) {
    if (!s || index < 0 || index >= static_cast<int>(s->solutions.size())) return nullptr;
    const Solution& sol = s->solutions[index];
    if (tuple < 0 || tuple >= static_cast<int>(sol.tuples.size())) return nullptr;
    if (cat < 0 || cat >= static_cast<int>(sol.tuples[tuple].size())) return nullptr;
    int el = sol.tuples[tuple][cat];
    if (el < 0) return nullptr;
    return s->puzzle.categories[cat].elements[el].c_str();
}

}  // extern "C"
