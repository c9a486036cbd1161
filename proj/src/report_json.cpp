#include "rieszprob/report_json.hpp"

#include <algorithm>
#include <sstream>

namespace rieszprob {

std::size_t RunReport::passes() const {
    return std::count_if(reports.begin(), reports.end(),
                         [](const CheckReport& r) { return r.verdict == Verdict::Pass; });
}

std::size_t RunReport::fails() const {
    return std::count_if(reports.begin(), reports.end(),
                         [](const CheckReport& r) { return r.verdict == Verdict::Fail; });
}

std::size_t RunReport::skips() const {
    return std::count_if(reports.begin(), reports.end(),
                         [](const CheckReport& r) { return r.verdict == Verdict::Skipped; });
}

nlohmann::ordered_json to_json(const CheckReport& report) {
    nlohmann::ordered_json doc;
    doc["check"] = report.check;
    doc["inputs"] = report.inputs;
    doc["verdict"] = to_string(report.verdict);
    if (report.witness) {
        nlohmann::ordered_json w;
        w["outcome"] = report.witness->outcome;
        w["lhs"] = report.witness->lhs;
        w["rhs"] = report.witness->rhs;
        doc["witness"] = std::move(w);
    }
    if (!report.note.empty()) doc["note"] = report.note;
    return doc;
}

nlohmann::ordered_json to_json(const RunReport& report) {
    nlohmann::ordered_json doc;
    doc["tool_version"] = kToolVersion;
    doc["command"] = report.command;
    doc["config"] = report.config;
    nlohmann::ordered_json checks = nlohmann::ordered_json::array();
    for (const CheckReport& r : report.reports) checks.push_back(to_json(r));
    doc["checks"] = std::move(checks);
    nlohmann::ordered_json summary;
    summary["pass"] = report.passes();
    summary["fail"] = report.fails();
    summary["skip"] = report.skips();
    doc["summary"] = std::move(summary);
    return doc;
}

nlohmann::ordered_json to_json(const FuzzSummary& summary) {
    nlohmann::ordered_json doc;
    doc["tool_version"] = kToolVersion;
    doc["command"] = "fuzz";
    nlohmann::ordered_json config;
    config["seed"] = summary.config.seed;
    config["trials"] = summary.config.trials;
    config["max_outcomes"] = summary.config.max_outcomes;
    config["max_bands"] = summary.config.max_bands;
    config["ie_cap"] = summary.config.ie_cap;
    config["inject_negative_control"] = summary.config.inject_negative_control;
    doc["config"] = std::move(config);
    nlohmann::ordered_json tallies;
    for (const auto& [name, tally] : summary.tallies) {
        nlohmann::ordered_json t;
        t["pass"] = tally.pass;
        t["fail"] = tally.fail;
        t["skip"] = tally.skip;
        tallies[name] = std::move(t);
    }
    doc["tallies"] = std::move(tallies);
    nlohmann::ordered_json failures = nlohmann::ordered_json::array();
    for (const CheckReport& r : summary.failures) failures.push_back(to_json(r));
    doc["failures"] = std::move(failures);
    doc["weak_proviso_only"] = summary.weak_proviso_only;
    doc["negative_control_detected"] = summary.negative_control_detected;
    return doc;
}

std::string render_table(const RunReport& report) {
    std::ostringstream out;
    out << "check                 verdict               note\n";
    out << "--------------------  --------------------  ----\n";
    for (const CheckReport& r : report.reports) {
        std::string check = r.check;
        check.resize(20, ' ');
        std::string verdict = to_string(r.verdict);
        verdict.resize(20, ' ');
        out << check << "  " << verdict << "  " << r.note << "\n";
        if (r.witness) {
            out << "    witness: outcome='" << r.witness->outcome << "' lhs=" << r.witness->lhs
                << " rhs=" << r.witness->rhs << "\n";
        }
    }
    out << "summary: " << report.passes() << " pass, " << report.fails() << " fail, " << report.skips()
        << " skipped\n";
    return out.str();
}

std::string render_summary(const FuzzSummary& summary) {
    std::ostringstream out;
    out << "fuzz campaign: seed=" << summary.config.seed << " trials=" << summary.config.trials << "\n";
    out << "check                 pass      fail      skip\n";
    for (const auto& [name, tally] : summary.tallies) {
        std::string check = name;
        check.resize(20, ' ');
        out << check << "  " << tally.pass << "\t" << tally.fail << "\t" << tally.skip << "\n";
    }
    out << "weak-proviso-only instances: " << summary.weak_proviso_only << "\n";
    if (summary.config.inject_negative_control) {
        out << "negative controls detected: " << summary.negative_control_detected << "\n";
    }
    for (const CheckReport& r : summary.failures) {
        out << "FAILURE [" << r.check << "] " << r.inputs << " -- " << r.note;
        if (r.witness) {
            out << " (outcome='" << r.witness->outcome << "' lhs=" << r.witness->lhs
                << " rhs=" << r.witness->rhs << ")";
        }
        out << "\n";
    }
    out << (summary.ok() ? "result: OK\n" : "result: FAILURES\n");
    return out.str();
}

}  // namespace rieszprob
