#pragma once

/**
 * @file report.hpp
 * @brief Machine-readable verification reports (JSON and CSV) with
 *        deterministic, byte-stable rendering.
 *
 * Numbers are printed with %.17g so a double round-trips exactly; field
 * order is fixed; no locale-dependent formatting anywhere.  Files are
 * written to a temporary sibling and renamed into place so a crashed run
 * never leaves a half-written report.
 */

#include <cstdio>
#include <fstream>
#include <stdexcept>
#include <string>
#include <utility>
#include <vector>

#include "clox/version.hpp"

namespace clox {

struct CheckResult {
    std::string name;
    double max_deviation = 0.0;
    double threshold = 0.0;
    std::string status;  // "pass" | "fail" | "skipped"
    std::string reason;  // nonempty only for "skipped"
};

struct Report {
    // key -> pre-rendered JSON value (already quoted/bracketed by the caller)
    std::vector<std::pair<std::string, std::string>> config_echo;
    std::vector<CheckResult> checks;
    std::string version = CLOX_VERSION;
};

/// Shortest exact decimal form of a double.
inline std::string fmt17(double x) {
    char buf[64];
    std::snprintf(buf, sizeof(buf), "%.17g", x);
    return std::string(buf);
}

inline std::string json_escape(const std::string& s) {
    std::string out;
    out.reserve(s.size() + 2);
    for (char c : s) {
        switch (c) {
            case '"': out += "\\\""; break;
            case '\\': out += "\\\\"; break;
            case '\n': out += "\\n"; break;
            case '\t': out += "\\t"; break;
            case '\r': out += "\\r"; break;
            default:
                if (static_cast<unsigned char>(c) < 0x20) {
                    char buf[8];
                    std::snprintf(buf, sizeof(buf), "\\u%04x", c);
                    out += buf;
                } else {
                    out += c;
                }
        }
    }
    return out;
}

inline bool all_pass(const Report& r) {
    for (const CheckResult& c : r.checks)
        if (c.status == "fail") return false;
    return true;
}

inline std::string to_json(const Report& r) {
    std::string out = "{\n  \"config_echo\": {";
    for (std::size_t i = 0; i < r.config_echo.size(); ++i) {
        out += (i ? ",\n    " : "\n    ");
        out += "\"" + json_escape(r.config_echo[i].first) + "\": " + r.config_echo[i].second;
    }
    out += r.config_echo.empty() ? "},\n" : "\n  },\n";
    out += "  \"checks\": [";
    for (std::size_t i = 0; i < r.checks.size(); ++i) {
        const CheckResult& c = r.checks[i];
        out += (i ? ",\n    " : "\n    ");
        out += "{\"name\": \"" + json_escape(c.name) + "\", ";
        out += "\"max_deviation\": " + fmt17(c.max_deviation) + ", ";
        out += "\"threshold\": " + fmt17(c.threshold) + ", ";
        out += "\"status\": \"" + json_escape(c.status) + "\"";
        if (!c.reason.empty()) out += ", \"reason\": \"" + json_escape(c.reason) + "\"";
        out += "}";
    }
    out += r.checks.empty() ? "],\n" : "\n  ],\n";
    out += "  \"version\": \"" + json_escape(r.version) + "\"\n}\n";
    return out;
}

inline std::string csv_escape(const std::string& s) {
    bool quote = false;
    for (char c : s)
        if (c == ',' || c == '"' || c == '\n') quote = true;
    if (!quote) return s;
    std::string out = "\"";
    for (char c : s) {
        if (c == '"') out += '"';
        out += c;
    }
    out += '"';
    return out;
}

inline std::string to_csv(const Report& r) {
    std::string out = "name,max_deviation,threshold,status,reason\n";
    for (const CheckResult& c : r.checks) {
        out += csv_escape(c.name) + "," + fmt17(c.max_deviation) + "," +
               fmt17(c.threshold) + "," + csv_escape(c.status) + "," +
               csv_escape(c.reason) + "\n";
    }
    return out;
}

/// Writes content to path via a temporary sibling and an atomic rename.
inline void write_atomic(const std::string& path, const std::string& content) {
    const std::string tmp = path + ".tmp";
    {
        std::ofstream f(tmp, std::ios::binary | std::ios::trunc);
        if (!f) throw std::runtime_error("cannot open for writing: " + tmp);
        f.write(content.data(), static_cast<std::streamsize>(content.size()));
        f.flush();
        if (!f) throw std::runtime_error("write failed: " + tmp);
    }
    if (std::rename(tmp.c_str(), path.c_str()) != 0) {
        std::remove(tmp.c_str());
        throw std::runtime_error("rename failed: " + path);
    }
}

}  // namespace clox
