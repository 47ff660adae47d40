#include "logigrid/acquire.hpp"

#include <charconv>

#include "logigrid/parser.hpp"

namespace logigrid {

std::string ScriptedPrompter::ask(const std::string& question) {
    (void)question;
    if (answers_.empty())
        throw LgError(Code::invalid_argument, "scripted prompter ran out of answers");
    std::string a = std::move(answers_.front());
    answers_.pop_front();
    return a;
}

namespace {

struct Dialog {
    Prompter& prompter;
    std::vector<std::pair<std::string, std::string>> transcript;
    std::string pending_note;  // prefixed to the next question after a bad answer

    std::string ask(const std::string& question) {
        std::string full = pending_note.empty() ? question : pending_note + " " + question;
        pending_note.clear();
        std::string answer = prompter.ask(full);
        transcript.emplace_back(full, answer);
        return answer;
    }

    void complain(const std::string& reason) { pending_note = "Invalid answer (" + reason + ")."; }

    // Re-asks until the answer parses as an integer with value >= lo.
    int ask_int(const std::string& question, int lo) {
        while (true) {
            std::string a = ask(question);
            int value = 0;
            auto [ptr, ec] = std::from_chars(a.data(), a.data() + a.size(), value);
            if (ec != std::errc() || ptr != a.data() + a.size()) {
                complain("expected a number");
                continue;
            }
            if (value < lo) {
                complain("must be at least " + std::to_string(lo));
                continue;
            }
            return value;
        }
    }

    bool ask_yn(const std::string& question) {
        while (true) {
            std::string a = ask(question);
            if (a == "y" || a == "yes") return true;
            if (a == "n" || a == "no") return false;
            complain("expected y or n");
        }
    }

    // One whitespace-separated token, converted from document to display form.
    std::string ask_label(const std::string& question) {
        while (true) {
            std::string a = ask(question);
            if (a.empty() || a.find(' ') != std::string::npos ||
                a.find('\t') != std::string::npos) {
                complain("expected one label token");
                continue;
            }
            return token_to_label(a);
        }
    }
};

std::vector<std::string> split_tokens(const std::string& s) {
    std::vector<std::string> out;
    size_t i = 0;
    while (i < s.size()) {
        while (i < s.size() && (s[i] == ' ' || s[i] == '\t')) ++i;
        size_t start = i;
        while (i < s.size() && s[i] != ' ' && s[i] != '\t') ++i;
        if (i > start) out.push_back(s.substr(start, i - start));
    }
    return out;
}

}  // namespace

AcquireResult acquire_interactive(Prompter& prompter) {
    Dialog d{prompter, {}, {}};
    Puzzle p;

    p.name = d.ask("Puzzle name (may be empty)?");
    int k = d.ask_int("How many categories?", 2);
    int n = d.ask_int("How many elements per category?", 2);

    for (int c = 0; c < k; ++c) {
        Category cat;
        while (true) {
            cat.label = d.ask_label("Name of category " + std::to_string(c + 1) + "?");
            bool taken = false;
            for (const auto& prev : p.categories) taken = taken || prev.label == cat.label;
            if (taken) {
                d.complain("category name already used");
                continue;
            }
            break;
        }
        cat.ordered = d.ask_yn("Is " + cat.label + " ordered (y/n)?");
        while (true) {
            std::string line = d.ask("Elements of " + cat.label + " (" + std::to_string(n) +
                                     " space-separated labels)?");
            auto tokens = split_tokens(line);
            if (static_cast<int>(tokens.size()) != n) {
                d.complain("expected exactly " + std::to_string(n) + " labels");
                continue;
            }
            std::vector<std::string> labels;
            for (const auto& t : tokens) labels.push_back(token_to_label(t));
            bool clash = false;
            for (size_t i = 0; i < labels.size() && !clash; ++i) {
                for (size_t j = i + 1; j < labels.size(); ++j)
                    if (labels[i] == labels[j]) clash = true;
                for (const auto& prev : p.categories)
                    for (const auto& e : prev.elements)
                        if (e == labels[i]) clash = true;
            }
            if (clash) {
                d.complain("labels must be unique across the whole puzzle");
                continue;
            }
            cat.elements = std::move(labels);
            break;
        }
        p.categories.push_back(std::move(cat));
    }
    p.finalize();

    while (true) {
        std::string answer = d.ask("Clue id of the next constraint (or done)?");
        if (answer == "done") break;
        int clue_id = 0;
        auto [ptr, ec] = std::from_chars(answer.data(), answer.data() + answer.size(), clue_id);
        if (ec != std::errc() || ptr != answer.data() + answer.size() || clue_id < 0) {
            d.complain("expected a non-negative clue id or done");
            continue;
        }

        Constraint c;
        c.clue_id = clue_id;
        while (true) {
            std::string kind_answer = d.ask("Constraint type?");
            auto kind = kind_from_name(kind_answer);
            if (!kind) {
                d.complain("unknown constraint type");
                continue;
            }
            c.kind = *kind;
            break;
        }

        int labels_wanted = 0;
        if (c.kind == ConstraintKind::alldiff) {
            labels_wanted = d.ask_int("How many labels?", 1);
            c.n_param = labels_wanted;
        } else if (c.kind == ConstraintKind::disjunction) {
            c.n_param = d.ask_int("How many disjuncts?", 1);
            labels_wanted = 2 * c.n_param;
            while (true) {
                std::string line = d.ask("Polarities (" + std::to_string(c.n_param) +
                                         " signs, + for is, - for is not)?");
                auto tokens = split_tokens(line);
                bool ok = static_cast<int>(tokens.size()) == c.n_param;
                for (const auto& t : tokens) ok = ok && (t == "+" || t == "-");
                if (!ok) {
                    d.complain("expected " + std::to_string(c.n_param) + " signs");
                    continue;
                }
                c.polarities.clear();
                for (const auto& t : tokens) c.polarities.push_back(t == "+");
                break;
            }
        } else if (kind_has_n_param(c.kind)) {
            c.n_param = d.ask_int("Value of n?", 1);
        }

        switch (c.kind) {
            case ConstraintKind::yes:
            case ConstraintKind::no:
                c.labels.push_back(d.ask_label("Label X?"));
                c.labels.push_back(d.ask_label("Label Y?"));
                break;
            case ConstraintKind::or_:
            case ConstraintKind::xor_:
                c.labels.push_back(d.ask_label("Label X?"));
                c.labels.push_back(d.ask_label("Label Y?"));
                c.labels.push_back(d.ask_label("Label Z?"));
                break;
            case ConstraintKind::twobytwo:
                c.labels.push_back(d.ask_label("Label X?"));
                c.labels.push_back(d.ask_label("Label Y?"));
                c.labels.push_back(d.ask_label("Label W?"));
                c.labels.push_back(d.ask_label("Label Z?"));
                break;
            case ConstraintKind::alldiff:
                for (int i = 0; i < labels_wanted; ++i)
                    c.labels.push_back(
                        d.ask_label("Label X" + std::to_string(i + 1) + "?"));
                break;
            case ConstraintKind::disjunction:
                for (int i = 0; i < c.n_param; ++i) {
                    c.labels.push_back(
                        d.ask_label("Label X" + std::to_string(i + 1) + "?"));
                    c.labels.push_back(
                        d.ask_label("Label Y" + std::to_string(i + 1) + "?"));
                }
                break;
            default:  // positional: X, C, Y
                c.labels.push_back(d.ask_label("Label X?"));
                c.labels.push_back(d.ask_label("Category C?"));
                c.labels.push_back(d.ask_label("Label Y?"));
                break;
        }

        auto issues = check_constraint(p, c);
        if (!issues.empty()) {
            d.pending_note = "Invalid constraint (" + issues.front().message + ").";
            continue;
        }
        p.constraints.push_back(std::move(c));
        p.finalize();
    }

    auto issues = p.validate();
    if (!issues.empty()) throw LgError(issues.front().code, issues.front().message);
    return AcquireResult{std::move(p), std::move(d.transcript)};
}

std::string format_transcript(const std::vector<std::pair<std::string, std::string>>& t) {
    std::string out;
    for (const auto& [question, answer] : t) {
        out += "? " + question + "\n";
        out += "> " + answer + "\n";
    }
    return out;
}

}  // namespace logigrid
