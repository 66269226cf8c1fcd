#pragma once

#include "minorsum/json_io.hpp"
#include "minorsum/rings.hpp"

#include <cstdint>
#include <string>
#include <vector>

namespace minorsum {

/// Outcome of one suite over one ring. wall_ms is measured for operator
/// feedback (stderr) but deliberately left out of the serialized report so
/// that reruns and different --jobs values produce byte-identical files.
struct VerificationReport {
    std::string suite;
    RingSpec ring;
    std::uint64_t instances = 0;
    std::uint64_t passes = 0;
    std::uint64_t failures = 0;
    std::vector<Json> counterexamples;
    double wall_ms = 0.0;

    Json to_json() const {
        Json j;
        j["suite"] = suite;
        j["ring"] = ring_spec_to_json(ring);
        j["instances"] = instances;
        j["passes"] = passes;
        j["failures"] = failures;
        j["counterexamples"] = Json(counterexamples);
        return j;
    }
};

/// A full command invocation: the flag echo (everything that can change
/// report content, so neither --jobs nor --out) plus one report per
/// (suite, ring) pair, in deterministic order.
struct RunResult {
    std::string command;
    Json params;
    std::vector<VerificationReport> reports;

    std::uint64_t total_failures() const {
        std::uint64_t f = 0;
        for (const auto& r : reports) f += r.failures;
        return f;
    }

    Json to_json() const {
        Json j;
        j["command"] = command;
        j["params"] = params;
        Json arr = Json::array();
        for (const auto& r : reports) arr.push_back(r.to_json());
        j["reports"] = std::move(arr);
        return j;
    }

    /// Canonical byte form written to --out.
    std::string to_bytes() const { return to_json().dump(2) + "\n"; }
};

}  // namespace minorsum
