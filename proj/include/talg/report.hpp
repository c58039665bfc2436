#pragma once

#include <optional>
#include <string>

#include <json.hpp>

#include "talg/rational.hpp"

namespace talg {

using Json = nlohmann::ordered_json;

enum class Verdict {
    ok,  // computation commands
    verified,
    counterexample,
    witness_found,
    no_witness_within_bounds,
};

inline std::string verdict_str(Verdict v) {
    switch (v) {
        case Verdict::ok: return "ok";
        case Verdict::verified: return "verified";
        case Verdict::counterexample: return "counterexample";
        case Verdict::witness_found: return "witness_found";
        case Verdict::no_witness_within_bounds: return "no_witness_within_bounds";
    }
    return "unknown";
}

/// 0 pass, 1 counterexample found, 2 usage error, 3 search exhausted.
inline int verdict_exit_code(Verdict v) {
    switch (v) {
        case Verdict::ok:
        case Verdict::verified:
        case Verdict::witness_found: return 0;
        case Verdict::counterexample: return 1;
        case Verdict::no_witness_within_bounds: return 3;
    }
    return 2;
}

/// Uniform result record for every check and computation. Serialized
/// reports contain no wall-clock data, so equal inputs give equal bytes.
struct CheckReport {
    std::string command;
    Json params = Json::object();
    Verdict verdict = Verdict::ok;
    Json result;          // computation output, when applicable
    Json witness;         // discovered witness data, when applicable
    Json counterexample;  // first offending datum, when applicable
    std::optional<Rational> max_ratio;

    bool passed() const { return verdict_exit_code(verdict) == 0; }

    Json to_json() const {
        Json j;
        j["command"] = command;
        j["params"] = params;
        j["verdict"] = verdict_str(verdict);
        if (!result.is_null()) j["result"] = result;
        if (!witness.is_null()) j["witness"] = witness;
        if (!counterexample.is_null()) j["counterexample"] = counterexample;
        if (max_ratio) j["max_ratio"] = rational_str(*max_ratio);
        j["runtime_ms"] = 0;  // fixed so reports stay byte-stable; timing goes to stderr
        return j;
    }
};

}  // namespace talg
