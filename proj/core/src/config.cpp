#include "sepcode/config.hpp"

#include <fstream>
#include <sstream>
#include <stdexcept>

namespace sepcode {

namespace {

std::string trim(const std::string& s) {
    const auto a = s.find_first_not_of(" \t\r\n");
    if (a == std::string::npos) return "";
    const auto b = s.find_last_not_of(" \t\r\n");
    return s.substr(a, b - a + 1);
}

std::vector<int64_t> parse_int_list(const std::string& s) {
    std::vector<int64_t> out;
    std::stringstream ss(s);
    std::string item;
    while (std::getline(ss, item, ',')) out.push_back(std::stoll(trim(item)));
    return out;
}

} // namespace

OutputFormat format_from_string(const std::string& s) {
    if (s == "table") return OutputFormat::table;
    if (s == "json") return OutputFormat::json;
    if (s == "csv") return OutputFormat::csv;
    throw std::invalid_argument("unknown format: " + s);
}

std::string to_string(OutputFormat f) {
    switch (f) {
        case OutputFormat::table: return "table";
        case OutputFormat::json: return "json";
        case OutputFormat::csv: return "csv";
    }
    return "?";
}

Range parse_range(const std::string& text) {
    const auto pos = text.find("..");
    Range r;
    if (pos == std::string::npos) {
        r.lo = r.hi = std::stoll(trim(text));
    } else {
        r.lo = std::stoll(trim(text.substr(0, pos)));
        r.hi = std::stoll(trim(text.substr(pos + 2)));
    }
    if (r.lo > r.hi) throw std::invalid_argument("empty range: " + text);
    return r;
}

RunConfig parse_config_text(const std::string& text, RunConfig base) {
    std::istringstream in(text);
    std::string line;
    int lineno = 0;
    while (std::getline(in, line)) {
        ++lineno;
        const auto hash = line.find('#');
        if (hash != std::string::npos) line = line.substr(0, hash);
        line = trim(line);
        if (line.empty()) continue;
        const auto eq = line.find('=');
        if (eq == std::string::npos)
            throw std::invalid_argument("config line " + std::to_string(lineno) +
                                        ": expected key = value");
        const std::string key = trim(line.substr(0, eq));
        const std::string value = trim(line.substr(eq + 1));
        if (key == "p")
            base.p = std::stoll(value);
        else if (key == "n")
            base.n = static_cast<int>(std::stoll(value));
        else if (key == "m")
            base.m = std::stoll(value);
        else if (key == "mode")
            base.mode = eval_mode_from_string(value);
        else if (key == "s")
            base.s_range = parse_range(value);
        else if (key == "r")
            base.r_range = parse_range(value);
        else if (key == "budget")
            base.budget = static_cast<uint64_t>(std::stoull(value));
        else if (key == "format")
            base.format = format_from_string(value);
        else if (key == "out")
            base.out = value;
        else if (key == "a_coeffs")
            base.a_coeffs = parse_int_list(value);
        else if (key == "b_coeffs")
            base.b_coeffs = parse_int_list(value);
        else
            throw std::invalid_argument("config line " + std::to_string(lineno) +
                                        ": unknown key '" + key + "'");
    }
    return base;
}

RunConfig parse_config_file(const std::string& path, RunConfig base) {
    std::ifstream in(path);
    if (!in) throw std::invalid_argument("cannot open config file: " + path);
    std::stringstream ss;
    ss << in.rdbuf();
    return parse_config_text(ss.str(), std::move(base));
}

CurveSpec curve_from_config(const RunConfig& cfg) {
    if (cfg.p < 2) throw std::invalid_argument("p is required");
    if (!is_prime(cfg.p)) throw std::invalid_argument("p must be prime");
    if (cfg.n < 1) throw std::invalid_argument("n must be >= 1");
    const int64_t q = ipow(cfg.p, cfg.n);
    int64_t m;
    if (cfg.mode == EvalMode::hermitian) {
        m = q + 1;
        if (cfg.m && *cfg.m != m)
            throw std::invalid_argument("hermitian mode forces m = q+1 = " + std::to_string(m));
    } else {
        m = cfg.m.value_or(q - 1);
    }
    if (m < 1) throw std::invalid_argument("m must be >= 1");
    if (cfg.a_coeffs || cfg.b_coeffs) {
        std::vector<int64_t> a = cfg.a_coeffs.value_or([&] {
            std::vector<int64_t> v(static_cast<size_t>(cfg.n) + 1, 0);
            v.front() = 1;
            v.back() = 1;
            return v;
        }());
        std::vector<int64_t> b = cfg.b_coeffs.value_or([&] {
            std::vector<int64_t> v(static_cast<size_t>(m) + 1, 0);
            v.back() = 1;
            return v;
        }());
        return make_curve(cfg.p, cfg.n, m, std::move(a), std::move(b));
    }
    return make_curve(cfg.p, cfg.n, m);
}

} // namespace sepcode
