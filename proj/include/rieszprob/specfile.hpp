#pragma once

#include "rieszprob/bands.hpp"
#include "rieszprob/cond_expectation.hpp"
#include "rieszprob/space.hpp"

#include <nlohmann/json.hpp>

#include <map>
#include <string>
#include <vector>

namespace rieszprob {

/// A sample-space specification as read from disk: outcomes, weights as
/// exact "p/q" strings, plus named events and named partitions. Loading
/// re-validates every module invariant.
struct SpaceSpec {
    std::vector<std::string> outcomes;
    std::vector<Rational> weights;
    std::map<std::string, std::vector<std::string>> events;
    std::map<std::string, std::vector<std::vector<std::string>>> partitions;

    /// Parses a JSON spec document. Throws ParseError on malformed input and
    /// InvariantError when the parsed data violates a module invariant.
    static SpaceSpec from_json(const nlohmann::json& doc);
    static SpaceSpec load(const std::string& path);

    SpacePtr build_space() const;
    Band build_event(const SpacePtr& space, const std::string& name) const;
    Partition build_partition(const SpacePtr& space, const std::string& name) const;

    /// Normalized form with weights in lowest terms; re-parses to an
    /// identical spec.
    nlohmann::ordered_json normalized() const;
};

}  // namespace rieszprob
