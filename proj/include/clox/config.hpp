#pragma once

/**
 * @file config.hpp
 * @brief Flat key-value run configuration (TOML-style sections) and the
 *        RunConfig record shared by all CLI commands.
 *
 * Supported value forms: integers, floats, "strings", and flat numeric
 * arrays [a, b, c] (single line or continued until the closing bracket).
 * Comments start with '#'.  Unknown sections or keys are hard errors, with
 * line numbers, so a typo cannot silently fall back to a default.
 *
 * z_grid is a flattened list of re,im pairs: [0.5, 0.0, 1.2, 0.8] means
 * the two labels 0.5 and 1.2+0.8i.
 */

#include <cctype>
#include <complex>
#include <cstdlib>
#include <fstream>
#include <sstream>
#include <stdexcept>
#include <string>
#include <vector>

namespace clox {

class ConfigError : public std::runtime_error {
public:
    ConfigError(int line, const std::string& what)
        : std::runtime_error("config line " + std::to_string(line) + ": " + what),
          line_number(line) {}
    int line_number;
};

struct RunConfig {
    int lambda = 2;
    std::vector<double> alpha;  // must end up with lambda entries
    double tol = 1e-10;

    int kmax = 50;
    int dim = 0;  // 0 means "derive the default (kmax+2)*lambda"
    unsigned long long seed = 1;
    std::vector<std::complex<double>> z_grid;

    int mu = 0;
    int alpha_cs = 0;
    std::vector<double> y_grid;

    std::vector<int> sweep_lambdas;
    int sweep_count = 16;

    std::string out_path;
    std::string out_format = "json";
};

namespace detail {

inline std::string trim(const std::string& s) {
    std::size_t b = 0, e = s.size();
    while (b < e && std::isspace(static_cast<unsigned char>(s[b]))) ++b;
    while (e > b && std::isspace(static_cast<unsigned char>(s[e - 1]))) --e;
    return s.substr(b, e - b);
}

inline std::string strip_comment(const std::string& line) {
    bool in_str = false;
    for (std::size_t i = 0; i < line.size(); ++i) {
        if (line[i] == '"') in_str = !in_str;
        if (line[i] == '#' && !in_str) return line.substr(0, i);
    }
    return line;
}

inline double parse_number(const std::string& tok, int line) {
    const std::string t = trim(tok);
    if (t.empty()) throw ConfigError(line, "empty numeric value");
    char* end = nullptr;
    const double v = std::strtod(t.c_str(), &end);
    if (end != t.c_str() + t.size())
        throw ConfigError(line, "not a number: '" + t + "'");
    return v;
}

inline long long parse_integer(const std::string& tok, int line) {
    const std::string t = trim(tok);
    if (t.empty()) throw ConfigError(line, "empty integer value");
    char* end = nullptr;
    const long long v = std::strtoll(t.c_str(), &end, 10);
    if (end != t.c_str() + t.size())
        throw ConfigError(line, "not an integer: '" + t + "'");
    return v;
}

inline std::vector<double> parse_array(const std::string& body, int line) {
    std::vector<double> out;
    std::string tok;
    for (char c : body) {
        if (c == ',') {
            if (trim(tok).empty()) throw ConfigError(line, "empty array element");
            out.push_back(parse_number(tok, line));
            tok.clear();
        } else {
            tok += c;
        }
    }
    if (!trim(tok).empty()) out.push_back(parse_number(tok, line));
    return out;
}

inline std::string parse_string(const std::string& tok, int line) {
    const std::string t = trim(tok);
    if (t.size() < 2 || t.front() != '"' || t.back() != '"')
        throw ConfigError(line, "expected a quoted string, got '" + t + "'");
    return t.substr(1, t.size() - 2);
}

}  // namespace detail

/// Parses configuration text into a RunConfig (defaults for absent keys).
inline RunConfig parse_config_text(const std::string& text) {
    RunConfig cfg;
    std::istringstream in(text);
    std::string raw;
    std::string section;
    int line = 0;
    while (std::getline(in, raw)) {
        ++line;
        std::string s = detail::trim(detail::strip_comment(raw));
        if (s.empty()) continue;

        if (s.front() == '[') {
            if (s.back() != ']')
                throw ConfigError(line, "malformed section header '" + s + "'");
            section = detail::trim(s.substr(1, s.size() - 2));
            if (section != "algebra" && section != "run" && section != "density" &&
                section != "sweep" && section != "output")
                throw ConfigError(line, "unknown section [" + section + "]");
            continue;
        }

        const std::size_t eq = s.find('=');
        if (eq == std::string::npos)
            throw ConfigError(line, "expected 'key = value', got '" + s + "'");
        const std::string key = detail::trim(s.substr(0, eq));
        std::string value = detail::trim(s.substr(eq + 1));
        if (key.empty()) throw ConfigError(line, "empty key");
        if (section.empty())
            throw ConfigError(line, "key '" + key + "' outside any section");

        // arrays may continue across lines until the closing bracket
        if (!value.empty() && value.front() == '[') {
            const int open_line = line;
            while (value.find(']') == std::string::npos) {
                if (!std::getline(in, raw))
                    throw ConfigError(open_line, "unterminated array for key '" + key + "'");
                ++line;
                value += " " + detail::trim(detail::strip_comment(raw));
            }
            const std::size_t close = value.find(']');
            if (detail::trim(value.substr(close + 1)) != "")
                throw ConfigError(line, "trailing content after array for key '" + key + "'");
            value = value.substr(0, close + 1);
        }

        auto want_array = [&](const char* what) -> std::vector<double> {
            if (value.empty() || value.front() != '[' || value.back() != ']')
                throw ConfigError(line, std::string(what) + " must be an array [..]");
            return detail::parse_array(value.substr(1, value.size() - 2), line);
        };

        if (section == "algebra") {
            if (key == "lambda") cfg.lambda = static_cast<int>(detail::parse_integer(value, line));
            else if (key == "alpha") cfg.alpha = want_array("alpha");
            else if (key == "tol") cfg.tol = detail::parse_number(value, line);
            else throw ConfigError(line, "unknown key '" + key + "' in [algebra]");
        } else if (section == "run") {
            if (key == "dim") cfg.dim = static_cast<int>(detail::parse_integer(value, line));
            else if (key == "kmax") cfg.kmax = static_cast<int>(detail::parse_integer(value, line));
            else if (key == "seed") cfg.seed = static_cast<unsigned long long>(detail::parse_integer(value, line));
            else if (key == "z_grid") {
                const std::vector<double> flat = want_array("z_grid");
                if (flat.size() % 2 != 0)
                    throw ConfigError(line, "z_grid needs an even count of entries (re,im pairs)");
                cfg.z_grid.clear();
                for (std::size_t i = 0; i + 1 < flat.size(); i += 2)
                    cfg.z_grid.emplace_back(flat[i], flat[i + 1]);
            } else throw ConfigError(line, "unknown key '" + key + "' in [run]");
        } else if (section == "density") {
            if (key == "mu") cfg.mu = static_cast<int>(detail::parse_integer(value, line));
            else if (key == "alpha_cs") cfg.alpha_cs = static_cast<int>(detail::parse_integer(value, line));
            else if (key == "y_grid") cfg.y_grid = want_array("y_grid");
            else throw ConfigError(line, "unknown key '" + key + "' in [density]");
        } else if (section == "sweep") {
            if (key == "lambdas") {
                cfg.sweep_lambdas.clear();
                for (double v : want_array("lambdas"))
                    cfg.sweep_lambdas.push_back(static_cast<int>(v));
            } else if (key == "count") cfg.sweep_count = static_cast<int>(detail::parse_integer(value, line));
            else throw ConfigError(line, "unknown key '" + key + "' in [sweep]");
        } else {  // output
            if (key == "path") cfg.out_path = detail::parse_string(value, line);
            else if (key == "format") cfg.out_format = detail::parse_string(value, line);
            else throw ConfigError(line, "unknown key '" + key + "' in [output]");
        }
    }
    return cfg;
}

inline RunConfig parse_config_file(const std::string& path) {
    std::ifstream f(path, std::ios::binary);
    if (!f) throw std::runtime_error("cannot open config file: " + path);
    std::ostringstream buf;
    buf << f.rdbuf();
    return parse_config_text(buf.str());
}

/// Fills derived defaults and enforces cross-field invariants.  Call after
/// CLI overrides have been applied.
inline void finalize_run_config(RunConfig& cfg) {
    if (cfg.lambda < 2) throw std::invalid_argument("lambda must be at least 2");
    if (cfg.alpha.empty()) cfg.alpha.assign(static_cast<std::size_t>(cfg.lambda), 0.0);
    if (cfg.kmax < 1) throw std::invalid_argument("kmax must be positive");
    if (cfg.dim == 0) cfg.dim = (cfg.kmax + 2) * cfg.lambda;
    if (cfg.dim < (cfg.kmax + 2) * cfg.lambda)
        throw std::invalid_argument(
            "dim must be at least (kmax+2)*lambda = " +
            std::to_string((cfg.kmax + 2) * cfg.lambda) + ", got " +
            std::to_string(cfg.dim));
    if (cfg.out_format != "json" && cfg.out_format != "csv")
        throw std::invalid_argument("output format must be json or csv, got '" +
                                    cfg.out_format + "'");
    if (cfg.z_grid.empty())
        cfg.z_grid = {{0.5, 0.0}, {1.2, 0.8}, {-0.9, 1.1}, {2.0, 0.0}};
    if (cfg.y_grid.empty()) cfg.y_grid = {0.1, 0.5, 1.0, 2.0, 5.0};
    if (cfg.sweep_lambdas.empty()) cfg.sweep_lambdas = {2, 3, 4, 5, 6};
    if (cfg.sweep_count < 1) throw std::invalid_argument("sweep count must be positive");
}

}  // namespace clox
