#pragma once

#include "rieszprob/fuzz.hpp"
#include "rieszprob/theorems.hpp"

#include <nlohmann/json.hpp>

#include <string>
#include <vector>

namespace rieszprob {

inline constexpr const char* kToolVersion = "0.1.0";

/// A full tool run: configuration echo, the individual check reports, and
/// tally totals that always match the report list.
struct RunReport {
    std::string command;
    nlohmann::ordered_json config;
    std::vector<CheckReport> reports;

    std::size_t passes() const;
    std::size_t fails() const;
    std::size_t skips() const;
};

nlohmann::ordered_json to_json(const CheckReport& report);
nlohmann::ordered_json to_json(const RunReport& report);
nlohmann::ordered_json to_json(const FuzzSummary& summary);

/// One aligned table row per check, plus a summary line.
std::string render_table(const RunReport& report);
std::string render_summary(const FuzzSummary& summary);

}  // namespace rieszprob
