#include <cstdio>
#include <fstream>
#include <iostream>
#include <sstream>
#include <string>
#include <vector>

#include "CLI11.hpp"
#include "logigrid.h"

namespace {

std::string underscores_to_spaces(std::string s) {
    for (char& c : s)
        if (c == '_') c = ' ';
    return s;
}

bool write_file(const std::string& path, const char* text) {
    std::ofstream out(path, std::ios::binary);
    if (!out) return false;
    out << (text ? text : "");
    return static_cast<bool>(out);
}

void print_error(const std::string& path) {
    int line = lg_last_error_line();
    if (line > 0)
        std::cerr << path << ":" << line << ": " << lg_last_error() << "\n";
    else
        std::cerr << path << ": " << lg_last_error() << "\n";
}

// exit code for a file that could not even be loaded
int load_failure(const std::string& path) {
    print_error(path);
    return lg_last_error_code() == LG_ERR_IO ? 2 : 1;
}

unsigned make_flags(bool no_group, bool discards) {
    unsigned flags = 0;
    if (no_group) flags |= LG_OPT_NO_GROUP;
    if (discards) flags |= LG_OPT_DISCARDS;
    return flags;
}

int cmd_solve(const std::string& path, unsigned flags, const std::string& log_path) {
    lg_puzzle* p = lg_parse_file(path.c_str());
    if (!p) return load_failure(path);
    lg_result* r = lg_solve(p);
    if (!r) {
        print_error(path);
        lg_puzzle_free(p);
        return 1;
    }
    int count = lg_result_line_count(r, flags);
    for (int i = 0; i < count; ++i) std::cout << lg_result_line(r, flags, i) << "\n";
    char* grid = lg_result_grid(r);
    std::cout << "\n" << grid;
    lg_string_free(grid);
    int status = lg_result_status(r);
    if (status != LG_STATUS_SOLVED) std::cout << "status: " << lg_status_name(status) << "\n";
    int rc = status == LG_STATUS_SOLVED ? 0 : 1;
    if (!log_path.empty()) {
        char* log_text = lg_result_log(r);
        if (!log_text || !write_file(log_path, log_text)) {
            std::cerr << log_path << ": cannot write log\n";
            rc = 2;
        }
        lg_string_free(log_text);
    }
    lg_result_free(r);
    lg_puzzle_free(p);
    return rc;
}

int cmd_hint(const std::string& path, unsigned flags) {
    lg_puzzle* p = lg_parse_file(path.c_str());
    if (!p) return load_failure(path);
    lg_result* r = lg_solve(p);
    if (!r) {
        print_error(path);
        lg_puzzle_free(p);
        return 1;
    }
    std::string state_path = path + ".hintstate";
    int next = 0;
    {
        std::ifstream in(state_path);
        if (in) in >> next;
        if (next < 0) next = 0;
    }
    int count = lg_result_line_count(r, flags);
    int rc = 0;
    if (next < count) {
        std::cout << lg_result_line(r, flags, next) << "\n";
        std::ofstream out(state_path, std::ios::trunc);
        if (out) {
            out << next + 1 << "\n";
        } else {
            std::cerr << state_path << ": cannot write hint state\n";
            rc = 2;
        }
    } else {
        std::cout << "No more hints.\n";
    }
    lg_result_free(r);
    lg_puzzle_free(p);
    return rc;
}

int cmd_explain_cell(const std::string& path, const std::string& e, const std::string& f,
                     unsigned flags) {
    lg_puzzle* p = lg_parse_file(path.c_str());
    if (!p) return load_failure(path);
    lg_result* r = lg_solve(p);
    if (!r) {
        print_error(path);
        lg_puzzle_free(p);
        return 1;
    }
    std::string label_e = underscores_to_spaces(e);
    std::string label_f = underscores_to_spaces(f);
    char* slice = lg_result_slice(r, label_e.c_str(), label_f.c_str(), flags);
    int rc = 0;
    if (!slice) {
        if (lg_last_error_code() == LG_ERR_TARGET_NEVER_FILLED) {
            std::cout << "No deduction fills this cell.\n";
            rc = 1;
        } else {
            std::cerr << lg_last_error() << "\n";
            rc = 2;
        }
    } else {
        std::cout << slice;
    }
    lg_string_free(slice);
    lg_result_free(r);
    lg_puzzle_free(p);
    return rc;
}

int cmd_export_cnf(const std::string& path, const std::string& out_path) {
    lg_puzzle* p = lg_parse_file(path.c_str());
    if (!p) return load_failure(path);
    lg_cnf* c = lg_cnf_encode(p);
    if (!c) {
        print_error(path);
        lg_puzzle_free(p);
        return 1;
    }
    char* text = lg_cnf_dimacs(c);
    int rc = 0;
    if (out_path.empty()) {
        std::cout << text;
    } else if (!write_file(out_path, text)) {
        std::cerr << out_path << ": cannot write\n";
        rc = 2;
    }
    lg_string_free(text);
    lg_cnf_free(c);
    lg_puzzle_free(p);
    return rc;
}

// Maps solution tuples onto element indices so the solver grid can be checked
// against the oracle's unique solution.
bool grid_matches_solution(const lg_puzzle* p, const lg_result* r, const lg_solutions* s,
                           bool require_complete) {
    int k = lg_category_count(p);
    int n = lg_element_count(p);
    std::vector<std::vector<int>> tuple_of(k, std::vector<int>(n, -1));
    for (int cat = 0; cat < k; ++cat) {
        for (int t = 0; t < n; ++t) {
            const char* label = lg_solution_element(s, 0, t, cat);
            if (!label) return false;
            for (int i = 0; i < n; ++i) {
                if (std::string(label) == lg_element_label(p, cat, i)) {
                    tuple_of[cat][i] = t;
                    break;
                }
            }
        }
    }
    for (int a = 0; a < k; ++a) {
        for (int b = a + 1; b < k; ++b) {
            for (int i = 0; i < n; ++i) {
                for (int j = 0; j < n; ++j) {
                    int v = 0;
                    if (lg_result_cell(r, lg_element_label(p, a, i), lg_element_label(p, b, j),
                                       &v) != LG_OK)
                        return false;
                    int expected = tuple_of[a][i] == tuple_of[b][j] ? 1 : -1;
                    if (require_complete ? v != expected : (v != 0 && v != expected))
                        return false;
                }
            }
        }
    }
    return true;
}

std::string validate_one(const std::string& path, int limit, bool& defect) {
    lg_puzzle* p = lg_parse_file(path.c_str());
    if (!p) {
        defect = true;
        return std::string("error (") + lg_last_error() + ")";
    }
    std::string verdict;
    if (lg_validate(p) != LG_OK) {
        verdict = std::string("invalid (") + lg_last_error() + ")";
        defect = true;
        lg_puzzle_free(p);
        return verdict;
    }
    lg_result* r = lg_solve(p);
    lg_solutions* s = lg_enumerate(p, limit);
    lg_cnf* c = lg_cnf_encode(p);
    long long models = c ? lg_cnf_count_models(c, limit) : -1;
    if (models > limit) models = limit;
    int found = lg_solutions_count(s);

    if (!r || !s || models < 0) {
        verdict = "error (internal)";
    } else if (found != models) {
        verdict = "mismatch";
    } else if (found == 0) {
        verdict = "unsat";
    } else if (found >= limit) {
        verdict = "ambiguous(>=" + std::to_string(found) + ")";
    } else if (found > 1) {
        verdict = "ambiguous(" + std::to_string(found) + ")";
    } else {
        switch (lg_result_status(r)) {
            case LG_STATUS_SOLVED:
                verdict = grid_matches_solution(p, r, s, true) ? "ok" : "mismatch";
                break;
            case LG_STATUS_STUCK:
                verdict = grid_matches_solution(p, r, s, false) ? "stuck" : "mismatch";
                break;
            default:
                verdict = "mismatch";
                break;
        }
    }
    if (verdict != "ok") defect = true;
    lg_cnf_free(c);
    lg_solutions_free(s);
    lg_result_free(r);
    lg_puzzle_free(p);
    return verdict;
}

int cmd_validate(const std::vector<std::string>& paths, int limit) {
    bool defect = false;
    for (const auto& path : paths)
        std::cout << path << ": " << validate_one(path, limit, defect) << "\n";
    return defect ? 1 : 0;
}

const char* stdin_ask(const char* question, void* user) {
    auto* buf = static_cast<std::string*>(user);
    std::cout << question << " " << std::flush;
    if (!std::getline(std::cin, *buf)) return nullptr;
    return buf->c_str();
}

int cmd_acquire(const std::string& out_path) {
    std::string answer_buf;
    char* transcript = nullptr;
    lg_puzzle* p = lg_acquire(stdin_ask, &answer_buf, &transcript);
    if (!p) {
        std::cerr << lg_last_error() << "\n";
        lg_string_free(transcript);
        return lg_last_error_code() == LG_ERR_IO ? 2 : 1;
    }
    char* text = lg_serialize(p);
    int rc = 0;
    if (!text || !write_file(out_path, text)) {
        std::cerr << out_path << ": cannot write\n";
        rc = 2;
    } else if (!write_file(out_path + ".transcript", transcript)) {
        std::cerr << out_path << ".transcript: cannot write\n";
        rc = 2;
    }
    lg_string_free(text);
    lg_string_free(transcript);
    lg_puzzle_free(p);
    return rc;
}

}  // namespace

int main(int argc, char** argv) {
    CLI::App app{"logigrid: explainable logic grid puzzle solver"};
    app.require_subcommand(1);
    app.set_version_flag("--version", lg_version());

    std::string path;
    std::string cell_e, cell_f;
    std::string log_path;
    std::string out_path;
    std::vector<std::string> paths;
    bool no_group = false;
    bool discards = false;
    int limit = 2;

    auto add_render_flags = [&](CLI::App* cmd) {
        cmd->add_flag("--no-group", no_group, "do not group consecutive consistency fills");
        cmd->add_flag("--discards", discards, "announce when a clue is exhausted");
    };

    CLI::App* solve = app.add_subcommand("solve", "solve a puzzle and explain every step");
    solve->add_option("FILE", path, "puzzle document")->required();
    add_render_flags(solve);
    solve->add_option("--log", log_path, "write the structured event log to this file");

    CLI::App* hint = app.add_subcommand("hint", "reveal the next explanation line");
    hint->add_option("FILE", path, "puzzle document")->required();
    add_render_flags(hint);

    CLI::App* explain = app.add_subcommand("explain-cell", "explain how one cell was decided");
    explain->add_option("FILE", path, "puzzle document")->required();
    explain->add_option("E", cell_e, "first element label")->required();
    explain->add_option("F", cell_f, "second element label")->required();
    add_render_flags(explain);

    CLI::App* cnf = app.add_subcommand("export-cnf", "emit the puzzle as DIMACS CNF");
    cnf->add_option("FILE", path, "puzzle document")->required();
    cnf->add_option("-o,--output", out_path, "write to a file instead of standard output");

    CLI::App* validate = app.add_subcommand("validate", "check solvability and uniqueness");
    validate->add_option("FILE", paths, "puzzle documents")->required();
    validate->add_option("--limit", limit, "stop enumerating after this many solutions")
        ->check(CLI::PositiveNumber);

    CLI::App* acquire = app.add_subcommand("acquire", "build a puzzle document interactively");
    acquire->add_option("OUT", out_path, "output puzzle document path")->required();

    try {
        app.parse(argc, argv);
    } catch (const CLI::ParseError& e) {
        int rc = app.exit(e);
        return rc == 0 ? 0 : 2;
    }

    unsigned flags = make_flags(no_group, discards);
    if (*solve) return cmd_solve(path, flags, log_path);
    if (*hint) return cmd_hint(path, flags);
    if (*explain) return cmd_explain_cell(path, cell_e, cell_f, flags);
    if (*cnf) return cmd_export_cnf(path, out_path);
    if (*validate) return cmd_validate(paths, limit);
    if (*acquire) return cmd_acquire(out_path);
    return 2;
}
