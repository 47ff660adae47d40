#include "logigrid/parser.hpp"

#include <charconv>
#include <sstream>

namespace logigrid {

std::string label_to_token(std::string_view label) {
    std::string out(label);
    for (char& ch : out)
        if (ch == ' ') ch = '_';
    return out;
}

std::string token_to_label(std::string_view token) {
    std::string out(token);
    for (char& ch : out)
        if (ch == '_') ch = ' ';
    return out;
}

namespace {

std::vector<std::string> split_ws(std::string_view s) {
    std::vector<std::string> out;
    size_t i = 0;
    while (i < s.size()) {
        while (i < s.size() && (s[i] == ' ' || s[i] == '\t' || s[i] == '\r')) ++i;
        size_t start = i;
        while (i < s.size() && s[i] != ' ' && s[i] != '\t' && s[i] != '\r') ++i;
        if (i > start) out.emplace_back(s.substr(start, i - start));
    }
    return out;
}

int parse_int(const std::string& tok, int line, const char* what) {
    int value = 0;
    auto [ptr, ec] = std::from_chars(tok.data(), tok.data() + tok.size(), value);
    if (ec != std::errc() || ptr != tok.data() + tok.size())
        throw LgError(Code::syntax, std::string("expected a number for ") + what + ", got \"" +
                                        tok + "\"",
                      line);
    return value;
}

// Reads "clue <id>: <kind> <args...>" tails into a Constraint.
Constraint parse_clue(int clue_id, const std::vector<std::string>& args, int line) {
    if (args.empty()) throw LgError(Code::syntax, "clue without a constraint kind", line);
    auto kind = kind_from_name(args[0]);
    if (!kind)
        throw LgError(Code::syntax, "unknown constraint kind \"" + args[0] + "\"", line);

    Constraint c;
    c.clue_id = clue_id;
    c.kind = *kind;
    c.source_line = line;

    size_t i = 1;
    auto take_label = [&](const char* role) {
        if (i >= args.size())
            throw LgError(Code::arity,
                          std::string(kind_name(c.kind)) + " is missing the " + role + " label",
                          line);
        return token_to_label(args[i++]);
    };
    auto done = [&]() {
        if (i != args.size())
            throw LgError(Code::arity,
                          std::string("too many arguments for ") + kind_name(c.kind), line);
    };

    switch (c.kind) {
        case ConstraintKind::yes:
        case ConstraintKind::no:
            c.labels.push_back(take_label("X"));
            c.labels.push_back(take_label("Y"));
            done();
            break;
        case ConstraintKind::or_:
        case ConstraintKind::xor_:
            c.labels.push_back(take_label("X"));
            c.labels.push_back(take_label("Y"));
            c.labels.push_back(take_label("Z"));
            done();
            break;
        case ConstraintKind::alldiff: {
            if (i >= args.size()) throw LgError(Code::arity, "alldiff is missing its count", line);
            c.n_param = parse_int(args[i++], line, "the alldiff count");
            if (c.n_param < 1) throw LgError(Code::bad_n_param, "alldiff needs n >= 1", line);
            for (int j = 0; j < c.n_param; ++j) c.labels.push_back(take_label("list"));
            done();
            break;
        }
        case ConstraintKind::twobytwo:
            c.labels.push_back(take_label("X"));
            c.labels.push_back(take_label("Y"));
            c.labels.push_back(take_label("W"));
            c.labels.push_back(take_label("Z"));
            done();
            break;
        case ConstraintKind::before:
        case ConstraintKind::after:
            c.labels.push_back(take_label("X"));
            c.labels.push_back(take_label("category"));
            c.labels.push_back(take_label("Y"));
            done();
            break;
        case ConstraintKind::beforefixed:
        case ConstraintKind::afterfixed:
        case ConstraintKind::beforeatleast:
        case ConstraintKind::afteratleast:
        case ConstraintKind::distance: {
            if (i >= args.size())
                throw LgError(Code::arity,
                              std::string(kind_name(c.kind)) + " is missing its offset", line);
            c.n_param = parse_int(args[i++], line, "the offset");
            c.labels.push_back(take_label("X"));
            c.labels.push_back(take_label("category"));
            c.labels.push_back(take_label("Y"));
            done();
            break;
        }
        case ConstraintKind::disjunction: {
            if (i >= args.size())
                throw LgError(Code::arity, "disjunction is missing its disjunct count", line);
            c.n_param = parse_int(args[i++], line, "the disjunct count");
            if (c.n_param < 1) throw LgError(Code::bad_n_param, "disjunction needs n >= 1", line);
            for (int j = 0; j < c.n_param; ++j) {
                if (i >= args.size())
                    throw LgError(Code::arity, "disjunction is missing polarities", line);
                const std::string& tok = args[i++];
                if (tok == "+")
                    c.polarities.push_back(true);
                else if (tok == "-")
                    c.polarities.push_back(false);
                else
                    throw LgError(Code::syntax, "polarity must be + or -, got \"" + tok + "\"",
                                  line);
            }
            for (int j = 0; j < c.n_param; ++j) {
                c.labels.push_back(take_label("X"));
                c.labels.push_back(take_label("Y"));
            }
            done();
            break;
        }
    }
    return c;
}

}  // namespace

Puzzle parse_puzzle(std::string_view text) {
    Puzzle p;
    bool saw_name = false;

    std::istringstream in{std::string(text)};
    std::string raw;
    int lineno = 0;
    while (std::getline(in, raw)) {
        ++lineno;
        if (auto hash = raw.find('#'); hash != std::string::npos) raw.erase(hash);

        // split around the first ':' so "Label:" and "Label :" parse alike
        auto colon = raw.find(':');
        std::vector<std::string> head =
            split_ws(colon == std::string::npos ? std::string_view(raw)
                                                : std::string_view(raw).substr(0, colon));
        std::vector<std::string> tail =
            colon == std::string::npos
                ? std::vector<std::string>{}
                : split_ws(std::string_view(raw).substr(colon + 1));
        if (head.empty() && tail.empty()) continue;
        if (head.empty()) throw LgError(Code::syntax, "line starts with ':'", lineno);

        const std::string& directive = head[0];
        if (directive == "puzzle") {
            if (colon != std::string::npos)
                throw LgError(Code::syntax, "the puzzle line takes no ':'", lineno);
            if (head.size() != 2)
                throw LgError(Code::syntax, "usage: puzzle <name>", lineno);
            if (saw_name) throw LgError(Code::syntax, "duplicate puzzle line", lineno);
            p.name = head[1];
            saw_name = true;
        } else if (directive == "category") {
            if (colon == std::string::npos)
                throw LgError(Code::syntax, "category line needs a ':'", lineno);
            bool ordered = false;
            if (head.size() == 3 && head[2] == "ordered")
                ordered = true;
            else if (head.size() != 2)
                throw LgError(Code::syntax, "usage: category <Label> [ordered]: <elements>",
                              lineno);
            Category cat;
            cat.label = token_to_label(head[1]);
            cat.ordered = ordered;
            for (const auto& tok : tail) cat.elements.push_back(token_to_label(tok));
            if (cat.elements.empty())
                throw LgError(Code::bad_category_size, "category without elements", lineno);
            if (!p.constraints.empty())
                throw LgError(Code::syntax, "categories must be declared before clues", lineno);
            p.categories.push_back(std::move(cat));
        } else if (directive == "clue") {
            if (colon == std::string::npos)
                throw LgError(Code::syntax, "clue line needs a ':'", lineno);
            if (head.size() != 2) throw LgError(Code::syntax, "usage: clue <id>: ...", lineno);
            int id = parse_int(head[1], lineno, "the clue id");
            if (id < 0) throw LgError(Code::syntax, "clue ids cannot be negative", lineno);
            p.constraints.push_back(parse_clue(id, tail, lineno));
        } else {
            throw LgError(Code::syntax, "unrecognized directive \"" + directive + "\"", lineno);
        }
    }

    p.finalize();
    auto issues = p.validate();
    if (!issues.empty()) {
        const Issue& first = issues.front();
        throw LgError(first.code, first.message, first.line);
    }
    return p;
}

std::string serialize_puzzle(const Puzzle& p) {
    std::string out;
    if (!p.name.empty()) {
        out += "puzzle " + p.name + "\n";
    }
    for (const auto& cat : p.categories) {
        out += "category " + label_to_token(cat.label);
        if (cat.ordered) out += " ordered";
        out += ":";
        for (const auto& e : cat.elements) out += " " + label_to_token(e);
        out += "\n";
    }
    for (const auto& c : p.constraints) {
        out += "clue " + std::to_string(c.clue_id) + ": " + kind_name(c.kind);
        if (c.kind == ConstraintKind::alldiff) out += " " + std::to_string(c.n_param);
        if (kind_is_positional(c.kind) && c.kind != ConstraintKind::before &&
            c.kind != ConstraintKind::after)
            out += " " + std::to_string(c.n_param);
        if (c.kind == ConstraintKind::disjunction) {
            out += " " + std::to_string(c.n_param);
            for (bool pos : c.polarities) out += pos ? " +" : " -";
        }
        for (const auto& l : c.labels) out += " " + label_to_token(l);
        out += "\n";
    }
    return out;
}

}  // namespace logigrid
