#pragma once

#include <cstdint>
#include <optional>
#include <string>
#include <vector>

#include "sepcode/code.hpp"

namespace sepcode {

enum class OutputFormat { table, json, csv };

OutputFormat format_from_string(const std::string& s);
std::string to_string(OutputFormat f);

struct Range {
    int64_t lo = 0;
    int64_t hi = 0;
};

/// "a..b" or a single value "a".
Range parse_range(const std::string& text);

/// Everything a command run needs. m defaults to q-1 (q+1 in hermitian
/// mode); hermitian mode rejects any other m.
struct RunConfig {
    int64_t p = 0;
    int n = 1;
    std::optional<int64_t> m;
    EvalMode mode = EvalMode::complement;
    std::optional<Range> s_range;
    std::optional<Range> r_range;
    uint64_t budget = kDefaultDistanceBudget;
    OutputFormat format = OutputFormat::table;
    std::string out;          // output file; empty = stdout
    std::string matrices_dir; // when set, cmd_code writes matrix CSV files here
    std::optional<std::vector<int64_t>> a_coeffs;
    std::optional<std::vector<int64_t>> b_coeffs;
};

/// Key-value config text, one "key = value" per line, '#' comments.
/// Keys: p, n, m, mode, s, r, budget, format, out, a_coeffs, b_coeffs
/// (coefficient lists comma-separated, low degree first).
RunConfig parse_config_text(const std::string& text, RunConfig base = {});
RunConfig parse_config_file(const std::string& path, RunConfig base = {});

/// Validates and resolves defaults; throws on inconsistent input.
CurveSpec curve_from_config(const RunConfig& cfg);

} // namespace sepcode
