#include "rieszprob/fuzz.hpp"
#include "rieszprob/report_json.hpp"
#include "rieszprob/specfile.hpp"

#include <CLI11.hpp>

#include <fstream>
#include <iostream>
#include <optional>
#include <random>
#include <sstream>
#include <string>
#include <vector>

namespace {

using namespace rieszprob;

// Documented exit codes.
constexpr int kExitOk = 0;
constexpr int kExitCheckFailed = 1;
constexpr int kExitParseError = 2;
constexpr int kExitInvariantViolation = 3;
constexpr int kExitSkippedOnly = 4;
constexpr int kExitUsage = 64;

Element parse_element(const SpacePtr& space, const std::string& text) {
    if (text == "e") return unit_e(space);
    std::vector<Rational> coords;
    std::stringstream stream(text);
    std::string token;
    while (std::getline(stream, token, ',')) coords.push_back(parse_rational(token));
    if (coords.size() != space->size()) {
        throw ParseError("element has " + std::to_string(coords.size()) + " coordinates, space has " +
                         std::to_string(space->size()) + " outcomes");
    }
    return Element(space, std::move(coords));
}

void write_report(const RunReport& report, const std::string& out_path) {
    std::cout << render_table(report);
    if (!out_path.empty()) {
        std::ofstream out(out_path);
        out << to_json(report).dump(2) << "\n";
    }
}

int exit_code_for(const RunReport& report) {
    if (report.fails() > 0) return kExitCheckFailed;
    if (report.skips() > 0) return kExitSkippedOnly;
    return kExitOk;
}

int run_validate(const std::string& path) {
    SpaceSpec spec = SpaceSpec::load(path);
    std::cout << spec.normalized().dump(2) << "\n";
    return kExitOk;
}

struct CheckArgs {
    std::string name;
    std::string space_path;
    std::vector<std::string> events;
    std::string partition;
    std::string t_partition;
    std::string f_text = "e";
    std::size_t j = 0;
    std::size_t ie_cap = kDefaultInclusionExclusionCap;
    std::uint64_t seed = 42;
    std::size_t samples = 100;
    std::string out_path;
};

int run_check(const CheckArgs& args) {
    SpaceSpec spec = SpaceSpec::load(args.space_path);
    SpacePtr space = spec.build_space();
    Element f = parse_element(space, args.f_text);

    // T defaults to the full expectation; --t-partition selects a finer one.
    CondExpectation t{args.t_partition.empty() ? Partition::one_block(space)
                                               : spec.build_partition(space, args.t_partition)};

    auto event_at = [&](std::size_t i) -> Band {
        if (i >= args.events.size()) {
            throw InvariantError("check '" + args.name + "' needs more --event arguments");
        }
        return spec.build_event(space, args.events[i]);
    };

    RunReport report;
    report.command = "check " + args.name;
    report.config["space"] = args.space_path;
    report.config["events"] = args.events;
    report.config["partition"] = args.partition;
    report.config["t_partition"] = args.t_partition;
    report.config["f"] = args.f_text;

    if (args.name == "condprob") {
        Band b1 = event_at(0), b2 = event_at(1);
        std::string inputs = "B1=" + to_string(b1) + "; B2=" + to_string(b2) + "; f=" + to_string(f);
        try {
            CondProbResult result = cond_prob(t, b1, b2, f);
            bool certified = mul(result.value, result.denominator) == result.numerator;
            report.reports.push_back({"condprob", inputs, certified ? Verdict::Pass : Verdict::Fail,
                                      std::nullopt, "value=" + to_string(result.value)});
        } catch (const NotInvertibleError& e) {
            report.reports.push_back({"condprob", inputs, Verdict::Skipped, std::nullopt, e.what()});
        }
    } else if (args.name == "independence") {
        report.reports.push_back(check_independence(t, event_at(0), event_at(1)));
    } else if (args.name == "ltp") {
        BandPartition parts = BandPartition::from_partition(spec.build_partition(space, args.partition));
        report.reports.push_back(check_ltp(t, parts, event_at(0), f));
    } else if (args.name == "bayes") {
        BandPartition parts = BandPartition::from_partition(spec.build_partition(space, args.partition));
        report.reports.push_back(check_bayes(t, parts, event_at(0), args.j, f));
    } else if (args.name == "inclusion-exclusion") {
        std::vector<Band> bands;
        for (std::size_t i = 0; i < args.events.size(); ++i) bands.push_back(event_at(i));
        CheckReport check = check_inclusion_exclusion(bands, args.ie_cap);
        SignedProjectionSum expansion = inclusion_exclusion_expand(bands, args.ie_cap);
        std::string terms;
        for (const SignedTerm& term : expansion.terms) {
            if (!terms.empty()) terms += " ";
            terms += (term.sign > 0 ? "+" : "-") + to_string(term.band);
        }
        check.note += "; terms: " + terms;
        report.reports.push_back(std::move(check));
    } else if (args.name == "axioms") {
        InstanceGenerator gen(args.seed);
        std::vector<Element> elements;
        for (std::size_t i = 0; i < args.samples; ++i) elements.push_back(gen.random_element(space));
        report.reports.push_back(check_axioms(t, elements));
    } else if (args.name == "correspondence") {
        BandPartition parts = args.partition.empty()
                                  ? BandPartition::from_bands({Band::full(space)})
                                  : BandPartition::from_partition(spec.build_partition(space, args.partition));
        report.reports.push_back(check_correspondence(space, event_at(0), event_at(1), parts));
    } else {
        throw ParseError("unknown check '" + args.name + "'");
    }

    write_report(report, args.out_path);
    return exit_code_for(report);
}

int run_fuzz(const FuzzConfig& config, const std::string& out_path) {
    FuzzSummary summary = fuzz_campaign(config);
    std::cout << render_summary(summary);
    if (!out_path.empty()) {
        std::ofstream out(out_path);
        out << to_json(summary).dump(2) << "\n";
    }
    return summary.ok() ? kExitOk : kExitCheckFailed;
}

}  // namespace

int main(int argc, char** argv) {
    CLI::App app{"Order-theoretic probability checks on finite Riesz spaces, in exact rational arithmetic"};
    app.require_subcommand(1);

    std::string validate_path;
    auto* validate = app.add_subcommand("validate", "Parse and validate a space spec file");
    validate->add_option("path", validate_path, "spec file")->required();

    CheckArgs check_args;
    auto* check = app.add_subcommand("check", "Run one named check against a spec file");
    check->add_option("name", check_args.name,
                      "one of: condprob, independence, ltp, bayes, inclusion-exclusion, axioms, correspondence")
        ->required();
    check->add_option("--space", check_args.space_path, "spec file")->required();
    check->add_option("--event", check_args.events, "named event (repeatable)");
    check->add_option("--partition", check_args.partition, "named partition: the band decomposition B_1..B_n");
    check->add_option("--t-partition", check_args.t_partition,
                      "named partition inducing T (default: one-block expectation)");
    check->add_option("--f", check_args.f_text, "element: comma-separated rationals, or 'e'");
    check->add_option("--j", check_args.j, "band index for bayes");
    check->add_option("--ie-cap", check_args.ie_cap, "inclusion-exclusion term cap");
    check->add_option("--seed", check_args.seed, "seed for generated sample elements");
    check->add_option("--samples", check_args.samples, "number of generated sample elements");
    check->add_option("--out", check_args.out_path, "write machine-readable report here");

    FuzzConfig fuzz_config;
    std::string fuzz_out;
    auto* fuzz = app.add_subcommand("fuzz", "Run the seeded fuzz campaign");
    fuzz->add_option("--seed", fuzz_config.seed, "campaign seed");
    fuzz->add_option("--trials", fuzz_config.trials, "number of trials");
    fuzz->add_option("--max-outcomes", fuzz_config.max_outcomes, "largest generated space");
    fuzz->add_option("--max-bands", fuzz_config.max_bands, "largest generated band partition");
    fuzz->add_option("--ie-cap", fuzz_config.ie_cap, "inclusion-exclusion term cap");
    fuzz->add_flag("--negative-control", fuzz_config.inject_negative_control,
                   "also verify a corrupted operator each trial");
    fuzz->add_option("--out", fuzz_out, "write machine-readable report here");

    try {
        app.parse(argc, argv);
        if (validate->parsed()) return run_validate(validate_path);
        if (check->parsed()) return run_check(check_args);
        if (fuzz->parsed()) return run_fuzz(fuzz_config, fuzz_out);
    } catch (const CLI::ParseError& e) {
        app.exit(e);
        return kExitUsage;
    } catch (const rieszprob::ParseError& e) {
        std::cerr << "parse error: " << e.what() << "\n";
        return kExitParseError;
    } catch (const rieszprob::InvariantError& e) {
        std::cerr << "invariant violation: " << e.what() << "\n";
        return kExitInvariantViolation;
    } catch (const std::exception& e) {
        std::cerr << "error: " << e.what() << "\n";
        return kExitInvariantViolation;
    }
    return kExitUsage;
}
