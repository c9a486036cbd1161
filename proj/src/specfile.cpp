#include "rieszprob/specfile.hpp"

#include <fstream>

namespace rieszprob {

namespace {

std::vector<std::string> string_list(const nlohmann::json& node, const std::string& what) {
    if (!node.is_array()) throw ParseError(what + " must be an array of strings");
    std::vector<std::string> out;
    for (const auto& item : node) {
        if (!item.is_string()) throw ParseError(what + " must contain only strings");
        out.push_back(item.get<std::string>());
    }
    return out;
}

}  // namespace

SpaceSpec SpaceSpec::from_json(const nlohmann::json& doc) {
    if (!doc.is_object()) throw ParseError("spec document must be a JSON object");
    if (!doc.contains("outcomes") || !doc.contains("weights")) {
        throw ParseError("spec document needs 'outcomes' and 'weights'");
    }

    SpaceSpec spec;
    spec.outcomes = string_list(doc.at("outcomes"), "'outcomes'");
    for (const auto& w : string_list(doc.at("weights"), "'weights'")) {
        spec.weights.push_back(parse_rational(w));
    }
    if (doc.contains("events")) {
        const auto& events = doc.at("events");
        if (!events.is_object()) throw ParseError("'events' must be an object of name -> outcome list");
        for (const auto& [name, members] : events.items()) {
            spec.events[name] = string_list(members, "event '" + name + "'");
        }
    }
    if (doc.contains("partitions")) {
        const auto& partitions = doc.at("partitions");
        if (!partitions.is_object()) throw ParseError("'partitions' must be an object of name -> block list");
        for (const auto& [name, blocks] : partitions.items()) {
            if (!blocks.is_array()) throw ParseError("partition '" + name + "' must be an array of blocks");
            std::vector<std::vector<std::string>> parsed;
            for (const auto& block : blocks) {
                parsed.push_back(string_list(block, "partition '" + name + "' block"));
            }
            spec.partitions[name] = std::move(parsed);
        }
    }

    // Re-validate all module invariants eagerly so 'validate' reports the
    // first violation even when nothing downstream is requested.
    SpacePtr space = spec.build_space();
    for (const auto& [name, members] : spec.events) Band::from_labels(space, members);
    for (const auto& [name, blocks] : spec.partitions) Partition::from_label_blocks(space, blocks);
    return spec;
}

SpaceSpec SpaceSpec::load(const std::string& path) {
    std::ifstream in(path);
    if (!in) throw ParseError("cannot open spec file '" + path + "'");
    nlohmann::json doc;
    try {
        doc = nlohmann::json::parse(in);
    } catch (const nlohmann::json::parse_error& e) {
        throw ParseError("invalid JSON in '" + path + "': " + e.what());
    }
    return from_json(doc);
}

SpacePtr SpaceSpec::build_space() const {
    return FiniteSampleSpace::create(outcomes, weights);
}

Band SpaceSpec::build_event(const SpacePtr& space, const std::string& name) const {
    auto it = events.find(name);
    if (it == events.end()) throw InvariantError("unknown event '" + name + "'");
    return Band::from_labels(space, it->second);
}

Partition SpaceSpec::build_partition(const SpacePtr& space, const std::string& name) const {
    auto it = partitions.find(name);
    if (it == partitions.end()) throw InvariantError("unknown partition '" + name + "'");
    return Partition::from_label_blocks(space, it->second);
}

nlohmann::ordered_json SpaceSpec::normalized() const {
    nlohmann::ordered_json doc;
    doc["outcomes"] = outcomes;
    nlohmann::ordered_json weight_list = nlohmann::ordered_json::array();
    for (const auto& w : weights) weight_list.push_back(to_string(w));
    doc["weights"] = std::move(weight_list);
    nlohmann::ordered_json event_map = nlohmann::ordered_json::object();
    for (const auto& [name, members] : events) event_map[name] = members;
    doc["events"] = std::move(event_map);
    nlohmann::ordered_json partition_map = nlohmann::ordered_json::object();
    for (const auto& [name, blocks] : partitions) partition_map[name] = blocks;
    doc["partitions"] = std::move(partition_map);
    return doc;
}

}  // namespace rieszprob
