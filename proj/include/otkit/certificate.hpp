#pragma once

#include "otkit/interval.hpp"

#include <json.hpp>

#include <cstdint>
#include <string>
#include <vector>

namespace otkit {

using ojson = nlohmann::ordered_json;

inline constexpr const char* kToolVersion = "0.1.0";

/// One named sub-check with its verdict and decimal-interval evidence.
struct VerdictEntry {
    std::string name;
    std::string verdict;  // "pass" | "fail" | "inconclusive"
    ojson evidence;
};

/// Deterministic, diff-able record of a verification run: identical inputs,
/// seed and version produce byte-identical text. All numeric evidence is
/// decimal strings, never binary floats.
struct Certificate {
    std::string command;
    ojson inputs;
    long bits = 128;
    long tolerance_exp = 64;
    std::uint64_t seed = 0;
    std::string version = kToolVersion;
    std::vector<std::string> caveats;
    std::vector<VerdictEntry> verdicts;
    std::string overall = "pass";

    void add(std::string name, bool pass, ojson evidence = ojson::object());
    void add_verdict(std::string name, std::string verdict, ojson evidence = ojson::object());
    void finalize();  // overall = worst of the verdicts
    int exit_code() const;
    std::string to_text() const;
};

/// "[lo, hi]" with outward decimal rounding.
std::string evidence_interval(const Interval& iv, int digits = 30);
std::string evidence_value(const BigFloat& v, int digits = 30);
ojson evidence_cinterval(const CInterval& z, int digits = 30);

}  // namespace otkit
