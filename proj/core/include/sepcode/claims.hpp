#pragma once

#include <cstdint>
#include <optional>
#include <string>
#include <vector>

#include <nlohmann/json.hpp>

#include "sepcode/code.hpp"

namespace sepcode {

using json = nlohmann::ordered_json;

enum class Verdict { confirmed, refuted, not_applicable, untested };

std::string to_string(Verdict v);

/// One adjudicated formula: the value it predicts for the configured inputs
/// against the value the oracle computation observed. REFUTED always means
/// both sides are present and differ.
struct Claim {
    std::string id;
    std::string statement;
    json inputs;
    json predicted;
    json observed;
    Verdict verdict = Verdict::untested;
    std::optional<Verdict> construction_verdict; // C7: pipeline-level verdict
    std::string notes;
};

struct RegistryConfig {
    CurveSpec spec;
    EvalMode mode = EvalMode::complement;
    int64_t r_lo = 0;
    int64_t r_hi = 0;
    uint64_t budget = kDefaultDistanceBudget;
};

/// r_hi chosen so C6/C7 ranges are exercised: max(3, q^2+q-3).
RegistryConfig default_registry_config(const CurveSpec& spec, EvalMode mode);

struct ClaimReport {
    json inputs;
    std::vector<Claim> claims; // always C1..C8, in order
};

/// Evaluates the fixed registry. The multipoint divisor with multiplier r is
/// realized as the one-point code with s = r(q^2-q+1). Oracle values always
/// fill "observed"; the formula value is kept verbatim in "predicted".
ClaimReport run_registry(const RegistryConfig& cfg);

json to_json(const ClaimReport& report);
std::string to_table(const ClaimReport& report);
std::string to_csv(const ClaimReport& report);

} // namespace sepcode
