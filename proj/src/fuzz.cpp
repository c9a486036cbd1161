#include "rieszprob/fuzz.hpp"

#include <algorithm>
#include <utility>

namespace rieszprob {

std::size_t FuzzSummary::total(const std::string& check, bool include_skips) const {
    auto it = tallies.find(check);
    if (it == tallies.end()) return 0;
    return it->second.pass + it->second.fail + (include_skips ? it->second.skip : 0);
}

std::size_t InstanceGenerator::below(std::size_t n) {
    return n == 0 ? 0 : static_cast<std::size_t>(rng_() % n);
}

std::size_t InstanceGenerator::between(std::size_t lo, std::size_t hi) {
    return lo + below(hi - lo + 1);
}

SpacePtr InstanceGenerator::random_space(std::size_t max_outcomes) {
    std::size_t n = between(2, std::max<std::size_t>(2, max_outcomes));
    std::vector<std::string> outcomes;
    std::vector<Integer> raw;
    Integer total = 0;
    for (std::size_t i = 0; i < n; ++i) {
        outcomes.push_back("w" + std::to_string(i));
        Integer w = Integer(between(1, 9));
        total += w;
        raw.push_back(std::move(w));
    }
    std::vector<Rational> weights;
    weights.reserve(n);
    for (const Integer& w : raw) weights.emplace_back(w, total);
    return FiniteSampleSpace::create(std::move(outcomes), std::move(weights));
}

Band InstanceGenerator::random_band(const SpacePtr& space) {
    std::vector<std::size_t> members;
    for (std::size_t i = 0; i < space->size(); ++i) {
        if (below(2) == 1) members.push_back(i);
    }
    return Band::from_indices(space, std::move(members));
}

Band InstanceGenerator::random_nonempty_band(const SpacePtr& space) {
    Band b = random_band(space);
    if (!b.is_empty()) return b;
    return Band::from_indices(space, {below(space->size())});
}

Partition InstanceGenerator::random_partition(const SpacePtr& space, std::size_t max_blocks) {
    std::size_t k = between(1, std::min(max_blocks, space->size()));
    std::vector<std::vector<std::size_t>> blocks(k);
    // Seed each block with one outcome so none is empty, then scatter the rest.
    std::vector<std::size_t> order(space->size());
    for (std::size_t i = 0; i < order.size(); ++i) order[i] = i;
    for (std::size_t i = order.size(); i > 1; --i) std::swap(order[i - 1], order[below(i)]);
    for (std::size_t i = 0; i < order.size(); ++i) {
        blocks[i < k ? i : below(k)].push_back(order[i]);
    }
    return Partition::from_blocks(space, std::move(blocks));
}

BandPartition InstanceGenerator::random_band_partition(const SpacePtr& space, std::size_t max_bands) {
    return BandPartition::from_partition(random_partition(space, std::max<std::size_t>(2, max_bands)));
}

Element InstanceGenerator::random_element(const SpacePtr& space, bool positive_only) {
    std::vector<Rational> coords;
    coords.reserve(space->size());
    for (std::size_t i = 0; i < space->size(); ++i) {
        long v = positive_only ? static_cast<long>(between(1, 9))
                               : static_cast<long>(between(0, 18)) - 9;
        coords.emplace_back(v);
    }
    return Element(space, std::move(coords));
}

namespace {

bool is_zero(const Element& f) {
    for (std::size_t i = 0; i < f.size(); ++i) {
        if (f[i] != 0) return false;
    }
    return true;
}

}  // namespace

FuzzSummary fuzz_campaign(const FuzzConfig& config) {
    FuzzSummary summary;
    summary.config = config;
    InstanceGenerator gen(config.seed);

    auto record = [&summary](const CheckReport& report) {
        CheckTally& tally = summary.tallies[report.check];
        switch (report.verdict) {
            case Verdict::Pass: ++tally.pass; break;
            case Verdict::Skipped: ++tally.skip; break;
            case Verdict::Fail:
                ++tally.fail;
                summary.failures.push_back(report);
                break;
        }
    };

    for (std::size_t trial = 0; trial < config.trials; ++trial) {
        SpacePtr space = gen.random_space(config.max_outcomes);
        bool one_block = gen.below(2) == 0;
        CondExpectation t{one_block ? Partition::one_block(space)
                                    : gen.random_partition(space, 3)};
        BandPartition parts = gen.random_band_partition(space, config.max_bands);
        Band d = gen.random_band(space);

        // Draw f, retrying toward LTP admissibility; skips are recorded by
        // the checks themselves when the retries run out.
        bool positive_only = gen.below(2) == 0;
        Element f = gen.random_element(space, positive_only);
        for (int attempt = 0; attempt < 20; ++attempt) {
            bool admissible = true;
            for (const Band& b : parts.bands()) {
                if (!is_invertible(t.apply(project(b, f)))) {
                    admissible = false;
                    break;
                }
            }
            if (admissible) break;
            f = gen.random_element(space, positive_only || attempt > 10);
        }

        // Proviso-reading statistics for the conditioning band D.
        {
            Element td = t.apply(project(d, f));
            if (!is_zero(td) && !is_invertible(td)) ++summary.weak_proviso_only;
        }

        // Inclusion-exclusion on a fresh random band list.
        {
            std::size_t n = gen.between(1, std::min<std::size_t>(config.ie_cap, 6));
            std::vector<Band> bands;
            bands.reserve(n);
            for (std::size_t i = 0; i < n; ++i) bands.push_back(gen.random_band(space));
            record(check_inclusion_exclusion(bands, config.ie_cap));
        }

        record(check_ltp(t, parts, d, f));
        record(check_bayes(t, parts, d, gen.below(parts.size()), f));

        // Axiom suite on a handful of random elements.
        {
            std::vector<Element> samples;
            for (int i = 0; i < 4; ++i) samples.push_back(gen.random_element(space));
            record(check_axioms(t, samples));
        }

        // Independence: a random pair (no expectation) plus the b1 = b2
        // negative when the band is proper under one-block T.
        {
            record(check_independence(t, gen.random_band(space), gen.random_band(space)));
            Band b = gen.random_nonempty_band(space);
            if (one_block && !b.is_full()) {
                record(check_independence(t, b, b, false));
            }
        }

        // Classical correspondence on small spaces only.
        if (space->size() <= 5) {
            record(check_correspondence(space, gen.random_band(space), gen.random_band(space), parts));
        }

        if (config.inject_negative_control) {
            CondExpectation corrupted =
                t.with_block_weight(0, t.block_weights()[0] + 1);
            std::vector<Element> samples{gen.random_element(space)};
            AxiomReport axioms = verify_axioms(corrupted, samples);
            if (!axioms.all_pass()) {
                ++summary.negative_control_detected;
            } else {
                summary.failures.push_back({"negative_control", "trial " + std::to_string(trial),
                                            Verdict::Fail, std::nullopt,
                                            "corrupted operator passed the axiom suite"});
            }
        }
    }

    return summary;
}

}  // namespace rieszprob
