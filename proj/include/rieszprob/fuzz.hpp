#pragma once

#include "rieszprob/theorems.hpp"

#include <cstdint>
#include <map>
#include <random>
#include <string>
#include <vector>

namespace rieszprob {

struct FuzzConfig {
    std::uint64_t seed = 42;
    std::size_t trials = 1000;
    std::size_t max_outcomes = 8;
    std::size_t max_bands = 4;
    std::size_t ie_cap = kDefaultInclusionExclusionCap;
    /// When set, one deliberately corrupted operator is verified per trial;
    /// its axiom failures are counted under "negative_control".
    bool inject_negative_control = false;
};

struct CheckTally {
    std::size_t pass = 0;
    std::size_t fail = 0;
    std::size_t skip = 0;
};

struct FuzzSummary {
    FuzzConfig config;
    std::map<std::string, CheckTally> tallies;  // per check name
    std::vector<CheckReport> failures;          // negative-control failures excluded
    /// Trials where T P_{B2}(f) is a nonzero element but not invertible:
    /// the weaker reading of the proviso would admit them, the formula cannot.
    std::size_t weak_proviso_only = 0;
    std::size_t negative_control_detected = 0;

    bool ok() const { return failures.empty(); }
    std::size_t total(const std::string& check, bool include_skips = true) const;
};

/// Deterministic generator for fuzz inputs; identical seeds give identical
/// instance streams. All sampling goes through the engine directly so the
/// stream does not depend on library distribution internals.
class InstanceGenerator {
public:
    explicit InstanceGenerator(std::uint64_t seed) : rng_(seed) {}

    std::size_t below(std::size_t n);                    // uniform in [0, n)
    std::size_t between(std::size_t lo, std::size_t hi); // uniform in [lo, hi]

    SpacePtr random_space(std::size_t max_outcomes);
    Band random_band(const SpacePtr& space);
    Band random_nonempty_band(const SpacePtr& space);
    Partition random_partition(const SpacePtr& space, std::size_t max_blocks);
    BandPartition random_band_partition(const SpacePtr& space, std::size_t max_bands);
    /// Small-integer coordinates in [-9, 9]; strictly positive in [1, 9]
    /// when positive_only is set.
    Element random_element(const SpacePtr& space, bool positive_only = false);

private:
    std::mt19937_64 rng_;
};

/// Runs the seeded campaign: random spaces, partitions, bands and elements;
/// inclusion-exclusion, LTP, Bayes, axiom, independence and correspondence
/// checks per trial. Failures abort nothing; they are collected with full
/// witnesses.
FuzzSummary fuzz_campaign(const FuzzConfig& config);

}  // namespace rieszprob
