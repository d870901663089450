#include "gitwin/config.hpp"

#include <fstream>
#include <sstream>

namespace gitwin {

namespace {

std::string trim(const std::string& s) {
    size_t b = s.find_first_not_of(" \t\r");
    if (b == std::string::npos) return "";
    size_t e = s.find_last_not_of(" \t\r");
    return s.substr(b, e - b + 1);
}

[[noreturn]] void fail(long long line, const std::string& field, const std::string& what) {
    throw config_error("config line " + std::to_string(line) + ", field '" + field +
                       "': " + what);
}

// Parses "[(x,y),(x,y),...]" with rational or integer entries.
std::vector<std::pair<std::string, std::string>> parse_pair_list(long long line,
                                                                 const std::string& field,
                                                                 const std::string& text) {
    std::vector<std::pair<std::string, std::string>> out;
    std::string s = trim(text);
    if (s.empty() || s.front() != '[' || s.back() != ']') fail(line, field, "expected [...] list");
    size_t pos = 1;
    while (pos < s.size() - 1) {
        if (s[pos] == ',' || s[pos] == ' ') {
            ++pos;
            continue;
        }
        if (s[pos] != '(') fail(line, field, "expected '(' in list");
        size_t comma = s.find(',', pos);
        size_t close = s.find(')', pos);
        if (comma == std::string::npos || close == std::string::npos || comma > close)
            fail(line, field, "malformed pair");
        out.emplace_back(trim(s.substr(pos + 1, comma - pos - 1)),
                         trim(s.substr(comma + 1, close - comma - 1)));
        pos = close + 1;
    }
    return out;
}

std::pair<Rat, Rat> parse_rat_pair(long long line, const std::string& field,
                                   const std::string& text) {
    std::string s = trim(text);
    if (s.empty() || s.front() != '(' || s.back() != ')') fail(line, field, "expected (x,y)");
    size_t comma = s.find(',');
    if (comma == std::string::npos) fail(line, field, "expected (x,y)");
    try {
        return {Rat::parse(trim(s.substr(1, comma - 1))),
                Rat::parse(trim(s.substr(comma + 1, s.size() - comma - 2)))};
    } catch (const arithmetic_error& e) {
        fail(line, field, e.what());
    }
}

long long parse_int(long long line, const std::string& field, const std::string& text) {
    try {
        size_t used = 0;
        long long v = std::stoll(trim(text), &used);
        if (used != trim(text).size()) fail(line, field, "trailing characters");
        return v;
    } catch (const std::exception&) {
        fail(line, field, "expected an integer");
    }
}

} // namespace

JobConfig JobConfig::parse(const std::string& text) {
    JobConfig cfg;
    std::istringstream in(text);
    std::string raw;
    long long lineno = 0;
    bool have_weights = false, have_summands = false;
    while (std::getline(in, raw)) {
        ++lineno;
        std::string line = raw;
        size_t hash = line.find('#');
        if (hash != std::string::npos) line = line.substr(0, hash);
        line = trim(line);
        if (line.empty()) continue;
        size_t eq = line.find('=');
        if (eq == std::string::npos) fail(lineno, line, "expected 'key = value'");
        std::string key = trim(line.substr(0, eq));
        std::string value = trim(line.substr(eq + 1));

        if (key == "group") {
            if (value == "torus2") cfg.group = GroupKind::Torus2;
            else if (value == "gl2") cfg.group = GroupKind::GL2;
            else fail(lineno, key, "expected torus2 or gl2");
        } else if (key == "weights") {
            have_weights = true;
            for (const auto& [x, y] : parse_pair_list(lineno, key, value)) {
                long long a = parse_int(lineno, key, x), b = parse_int(lineno, key, y);
                if (a > 1000000 || a < -1000000 || b > 1000000 || b < -1000000)
                    fail(lineno, key, "weight coordinate out of range");
                cfg.weights.push_back({a, b});
            }
        } else if (key == "gl2_summands") {
            have_summands = true;
            for (const auto& [x, y] : parse_pair_list(lineno, key, value))
                cfg.gl2_summands.push_back(
                    {parse_int(lineno, key, x), parse_int(lineno, key, y)});
        } else if (key == "lambda0") {
            if (value != "auto") {
                auto [a, b] = parse_rat_pair(lineno, key, value);
                cfg.lambda0 = Cochar{a, b};
            }
        } else if (key == "ell") {
            if (value == "anticanonical") {
                cfg.ell_mode = EllMode::Anticanonical;
            } else if (value.rfind("anticanonical+eps", 0) == 0) {
                cfg.ell_mode = EllMode::AnticanonicalEps;
                auto [a, b] = parse_rat_pair(lineno, key, trim(value.substr(17)));
                cfg.ell_direction = QWeight{a, b};
            } else {
                cfg.ell_mode = EllMode::Explicit;
                auto [a, b] = parse_rat_pair(lineno, key, value);
                cfg.ell_explicit = QWeight{a, b};
            }
        } else if (key == "theta") {
            if (value != "auto") {
                auto [a, b] = parse_rat_pair(lineno, key, value);
                cfg.theta = QWeight{a, b};
            }
        } else if (key == "degree_budget") {
            cfg.degree_budget = parse_int(lineno, key, value);
        } else if (key == "degree_cap") {
            cfg.degree_cap = parse_int(lineno, key, value);
        } else if (key == "seed_box") {
            try {
                cfg.seed_box = Rat::parse(value);
            } catch (const arithmetic_error& e) {
                fail(lineno, key, e.what());
            }
        } else if (key == "t_grid") {
            cfg.t_grid = parse_int(lineno, key, value);
        } else if (key == "quiver_vertices") {
            for (const auto& [x, y] : parse_pair_list(lineno, key, value))
                cfg.quiver_vertices.emplace_back(parse_int(lineno, key, x),
                                                 parse_int(lineno, key, y));
        } else if (key == "quiver_arrows") {
            for (const auto& [x, y] : parse_pair_list(lineno, key, value))
                cfg.quiver_arrows.emplace_back(parse_int(lineno, key, x),
                                               parse_int(lineno, key, y));
        } else {
            fail(lineno, key, "unknown key");
        }
    }
    if (have_weights && have_summands)
        throw config_error("config: exactly one of weights / gl2_summands may be given");
    return cfg;
}

JobConfig JobConfig::parse_file(const std::string& path) {
    std::ifstream in(path);
    if (!in) throw config_error("cannot open config file " + path);
    std::stringstream ss;
    ss << in.rdbuf();
    return parse(ss.str());
}

RepSpec JobConfig::build_rep() const {
    if (!group) throw config_error("config: missing 'group'");
    if (*group == GroupKind::GL2) {
        if (gl2_summands.empty())
            throw config_error("config: GL2 jobs need 'gl2_summands'");
        return RepSpec::gl2(gl2_summands);
    }
    if (weights.empty()) throw config_error("config: torus jobs need 'weights'");
    return RepSpec::torus(weights);
}

} // namespace gitwin
