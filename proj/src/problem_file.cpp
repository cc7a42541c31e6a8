#include "adm/problem_file.hpp"

#include "adm/error.hpp"

#include <array>
#include <cmath>
#include <cstdio>
#include <fstream>
#include <map>
#include <sstream>

namespace adm {

namespace {

constexpr std::array kRequired = {"p_exponent", "q_exponent", "f", "eta1", "alpha1", "beta1", "gamma1"};

std::string_view trim(std::string_view s) {
    const auto first = s.find_first_not_of(" \t\r");
    if (first == std::string_view::npos) return {};
    const auto last = s.find_last_not_of(" \t\r");
    return s.substr(first, last - first + 1);
}

// Drops a trailing `# ...` that is not inside double quotes.
std::string_view strip_comment(std::string_view line) {
    bool quoted = false;
    for (std::size_t i = 0; i < line.size(); ++i) {
        if (line[i] == '"') quoted = !quoted;
        if (line[i] == '#' && !quoted) return line.substr(0, i);
    }
    return line;
}

struct Entry {
    std::string value;
    std::size_t line = 0;
};

[[noreturn]] void invalid(const std::string& key, const Entry& entry, const std::string& why) {
    throw Error(ErrorCode::InvalidValue, "line " + std::to_string(entry.line) + ": " + key + ": " + why, key);
}

bool is_key(std::string_view key) {
    if (key == "exact") return true;
    for (const char* k : kRequired) {
        if (key == k) return true;
    }
    return false;
}

double parse_number(const std::string& key, const Entry& entry) {
    try {
        const Expr e = parse(entry.value);
        if (!free_vars(e).empty()) invalid(key, entry, "numeric value may not reference x, y or yp");
        const double v = eval_real(e, 0.0, 0.0, 0.0);
        if (!std::isfinite(v)) invalid(key, entry, "value is not finite");
        return v;
    } catch (const Error& err) {
        if (err.code() == ErrorCode::InvalidValue) throw;
        invalid(key, entry, err.what());
    }
}

Expr parse_quoted(const std::string& key, const Entry& entry) {
    const std::string& v = entry.value;
    if (v.size() < 2 || v.front() != '"' || v.back() != '"') invalid(key, entry, "expression must be double-quoted");
    try {
        return parse(std::string_view(v).substr(1, v.size() - 2));
    } catch (const Error& err) {
        throw Error(err.code(), "line " + std::to_string(entry.line) + ": " + key + ": " + err.what(), key);
    }
}

std::string number_text(double v) {
    char buf[40];
    std::snprintf(buf, sizeof buf, "%.17g", v);
    return buf;
}

} // namespace

Problem parse_problem(std::string_view text) {
    std::map<std::string, Entry, std::less<>> entries;
    std::size_t line_no = 0;
    std::size_t pos = 0;
    while (pos <= text.size()) {
        const auto eol = text.find('\n', pos);
        const std::string_view raw = text.substr(pos, eol == std::string_view::npos ? text.size() - pos : eol - pos);
        pos = eol == std::string_view::npos ? text.size() + 1 : eol + 1;
        ++line_no;

        const std::string_view line = trim(strip_comment(raw));
        if (line.empty()) continue;
        const auto eq = line.find('=');
        if (eq == std::string_view::npos) {
            throw Error(ErrorCode::SyntaxError, "line " + std::to_string(line_no) + ": expected 'key = value'",
                        std::to_string(line_no));
        }
        const std::string key(trim(line.substr(0, eq)));
        if (!is_key(key)) {
            throw Error(ErrorCode::UnknownKey, "line " + std::to_string(line_no) + ": unknown key '" + key + "'", key);
        }
        if (entries.count(key) != 0) {
            throw Error(ErrorCode::DuplicateKey, "line " + std::to_string(line_no) + ": key '" + key + "' repeated", key);
        }
        entries[key] = Entry{std::string(trim(line.substr(eq + 1))), line_no};
    }

    for (const char* k : kRequired) {
        if (entries.count(k) == 0) {
            throw Error(ErrorCode::MissingKey, std::string("required key '") + k + "' not found", k);
        }
    }

    Problem p;
    p.alpha = parse_number("p_exponent", entries["p_exponent"]);
    p.sigma = parse_number("q_exponent", entries["q_exponent"]);
    p.f = parse_quoted("f", entries["f"]);
    p.eta1 = parse_number("eta1", entries["eta1"]);
    p.alpha1 = parse_number("alpha1", entries["alpha1"]);
    p.beta1 = parse_number("beta1", entries["beta1"]);
    p.gamma1 = parse_number("gamma1", entries["gamma1"]);
    if (auto it = entries.find("exact"); it != entries.end()) p.exact = parse_quoted("exact", it->second);
    p.validate();
    return p;
}

Problem load_problem(const std::filesystem::path& path) {
    std::ifstream in(path, std::ios::binary);
    if (!in) throw Error(ErrorCode::IoError, "cannot open problem file '" + path.string() + "'", path.string());
    std::ostringstream buf;
    buf << in.rdbuf();
    return parse_problem(buf.str());
}

std::string dump_problem(const Problem& problem) {
    std::string out;
    out += "p_exponent = " + number_text(problem.alpha) + "\n";
    out += "q_exponent = " + number_text(problem.sigma) + "\n";
    out += "f = \"" + to_string(problem.f) + "\"\n";
    out += "eta1 = " + number_text(problem.eta1) + "\n";
    out += "alpha1 = " + number_text(problem.alpha1) + "\n";
    out += "beta1 = " + number_text(problem.beta1) + "\n";
    out += "gamma1 = " + number_text(problem.gamma1) + "\n";
    if (problem.exact) out += "exact = \"" + to_string(*problem.exact) + "\"\n";
    return out;
}

} // namespace adm
