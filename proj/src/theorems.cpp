#include "rieszprob/theorems.hpp"

#include <utility>

namespace rieszprob {

BandPartition BandPartition::from_bands(std::vector<Band> bands) {
    if (bands.empty()) throw InvariantError("band partition needs at least one band");
    const SpacePtr& space = bands.front().space();
    std::vector<bool> covered(space->size(), false);
    for (const Band& b : bands) {
        if (!same_space(space, b.space())) throw SpaceMismatchError();
        if (b.is_empty()) throw InvariantError("band partition contains an empty band");
        for (std::size_t i : b.members()) {
            if (covered[i]) {
                throw InvariantError("band partition overlaps at outcome '" + space->label(i) + "'");
            }
            covered[i] = true;
        }
    }
    for (std::size_t i = 0; i < covered.size(); ++i) {
        if (!covered[i]) {
            throw InvariantError("band partition does not cover outcome '" + space->label(i) + "'");
        }
    }
    return BandPartition(std::move(bands));
}

BandPartition BandPartition::from_partition(const Partition& partition) {
    std::vector<Band> bands;
    bands.reserve(partition.block_count());
    for (const auto& block : partition.blocks()) {
        bands.push_back(Band::from_indices(partition.space(), block));
    }
    return from_bands(std::move(bands));
}

std::string to_string(Verdict v) {
    switch (v) {
        case Verdict::Pass: return "pass";
        case Verdict::Fail: return "fail";
        case Verdict::Skipped: return "precondition-skipped";
    }
    return "unknown";
}

namespace {

std::string digest(const SpacePtr& space, const std::string& extra) {
    return "|omega|=" + std::to_string(space->size()) + (extra.empty() ? "" : "; " + extra);
}

std::string bands_digest(const BandPartition& parts) {
    std::string out = "partition=[";
    for (std::size_t i = 0; i < parts.size(); ++i) {
        if (i) out += ", ";
        out += to_string(parts.bands()[i]);
    }
    out += "]";
    return out;
}

std::optional<Witness> first_difference(const Element& lhs, const Element& rhs) {
    for (std::size_t i = 0; i < lhs.size(); ++i) {
        if (lhs[i] != rhs[i]) {
            return Witness{lhs.space()->label(i), to_string(lhs[i]), to_string(rhs[i])};
        }
    }
    return std::nullopt;
}

CheckReport equality_report(std::string check, std::string inputs, const Element& lhs, const Element& rhs,
                            std::string note = "") {
    CheckReport report{std::move(check), std::move(inputs), Verdict::Pass, std::nullopt, std::move(note)};
    if (auto w = first_difference(lhs, rhs)) {
        report.verdict = Verdict::Fail;
        report.witness = std::move(w);
    }
    return report;
}

}  // namespace

CheckReport check_ltp(const CondExpectation& t, const BandPartition& parts, const Band& d, const Element& f) {
    std::string inputs = digest(d.space(), "D=" + to_string(d) + "; " + bands_digest(parts) + "; f=" + to_string(f));

    std::vector<Element> band_expectations;  // T P_{B_i}(f)
    band_expectations.reserve(parts.size());
    for (const Band& b : parts.bands()) {
        Element tb = t.apply(project(b, f));
        if (!is_invertible(tb)) {
            return {"ltp", inputs, Verdict::Skipped, std::nullopt,
                    "proviso fails: T P_B(f) not invertible for B=" + to_string(b)};
        }
        band_expectations.push_back(std::move(tb));
    }

    Element lhs = t.apply(project(d, f));
    Element rhs = zero_element(d.space());
    for (std::size_t i = 0; i < parts.size(); ++i) {
        CondProbResult cp = cond_prob(t, d, parts.bands()[i], f);
        rhs = add(rhs, mul(cp.value, band_expectations[i]));
    }
    return equality_report("ltp", inputs, lhs, rhs);
}

CheckReport check_bayes(const CondExpectation& t, const BandPartition& parts, const Band& d, std::size_t j,
                        const Element& f) {
    std::string inputs = digest(d.space(), "D=" + to_string(d) + "; j=" + std::to_string(j) + "; " +
                                               bands_digest(parts) + "; f=" + to_string(f));
    if (j >= parts.size()) throw InvariantError("bayes index j out of range");

    std::vector<Element> band_expectations;
    band_expectations.reserve(parts.size());
    for (const Band& b : parts.bands()) {
        Element tb = t.apply(project(b, f));
        if (!is_invertible(tb)) {
            return {"bayes", inputs, Verdict::Skipped, std::nullopt,
                    "proviso fails: T P_B(f) not invertible for B=" + to_string(b)};
        }
        band_expectations.push_back(std::move(tb));
    }
    Element td = t.apply(project(d, f));
    if (!is_invertible(td)) {
        return {"bayes", inputs, Verdict::Skipped, std::nullopt, "proviso fails: T P_D(f) not invertible"};
    }

    Element lhs = cond_prob(t, parts.bands()[j], d, f).value;

    Element numerator = zero_element(d.space());  // the j-th summand
    Element denominator = zero_element(d.space());
    for (std::size_t i = 0; i < parts.size(); ++i) {
        CondProbResult cp = cond_prob(t, d, parts.bands()[i], f);
        Element term = mul(cp.value, band_expectations[i]);
        if (i == j) numerator = term;
        denominator = add(denominator, term);
    }

    // Total-probability bridge: the denominator must equal T P_D(f).
    if (!(denominator == td)) {
        CheckReport report{"bayes", inputs, Verdict::Fail, first_difference(denominator, td),
                           "denominator differs from T P_D(f)"};
        return report;
    }

    Element rhs = mul(numerator, invert(denominator));
    return equality_report("bayes", inputs, lhs, rhs);
}

CheckReport check_inclusion_exclusion(std::span<const Band> bands, std::size_t cap) {
    const SpacePtr& space = bands.front().space();
    std::string names;
    for (std::size_t i = 0; i < bands.size(); ++i) {
        if (i) names += ", ";
        names += to_string(bands[i]);
    }
    std::string inputs = digest(space, "bands=[" + names + "]");

    SignedProjectionSum expansion = inclusion_exclusion_expand(bands, cap);
    std::size_t expected_terms = (std::size_t{1} << bands.size()) - 1;
    if (expansion.terms.size() != expected_terms) {
        return {"inclusion_exclusion", inputs, Verdict::Fail,
                Witness{"", std::to_string(expansion.terms.size()), std::to_string(expected_terms)},
                "term count differs from 2^n - 1"};
    }

    Band join = band_join(space, bands);
    for (std::size_t i = 0; i < space->size(); ++i) {
        Element delta = basis_vector(space, i);
        Element lhs = apply_signed_sum(expansion, delta);
        Element rhs = project(join, delta);
        if (auto w = first_difference(lhs, rhs)) {
            return {"inclusion_exclusion", inputs, Verdict::Fail, std::move(w),
                    "mismatch on basis vector at outcome '" + space->label(i) + "'"};
        }
    }
    return {"inclusion_exclusion", inputs, Verdict::Pass, std::nullopt,
            std::to_string(expected_terms) + " terms"};
}

CheckReport check_correspondence(const SpacePtr& space, const Band& a, const Band& b,
                                 const BandPartition& parts) {
    std::string inputs =
        digest(space, "A=" + to_string(a) + "; B=" + to_string(b) + "; " + bands_digest(parts));
    ClassicalOracle oracle(space);
    CondExpectation t{Partition::one_block(space)};
    Element e = unit_e(space);

    auto fail = [&](const Element& lhs, const Element& rhs, const std::string& note) {
        return CheckReport{"correspondence", inputs, Verdict::Fail, first_difference(lhs, rhs), note};
    };

    // Conditional probability vs P(A|B).
    if (oracle.prob(b.members()) > 0) {
        Element riesz = cond_prob(t, a, b, e).value;
        Element classical = scalar_mul(oracle.cond_prob(a.members(), b.members()), e);
        if (!(riesz == classical)) return fail(riesz, classical, "conditional probability differs from oracle");
    }

    std::vector<Event> blocks;
    blocks.reserve(parts.size());
    for (const Band& block : parts.bands()) blocks.push_back(block.members());

    // LTP: T P_A(e) vs classical total probability, and the identity itself.
    {
        Element lhs = t.apply(project(a, e));
        Element classical = scalar_mul(oracle.total_probability(a.members(), blocks), e);
        if (!(lhs == classical)) return fail(lhs, classical, "T P_A(e) differs from classical total probability");
        CheckReport ltp = check_ltp(t, parts, a, e);
        if (ltp.verdict == Verdict::Fail) return ltp;
    }

    // Bayes for every index, when P(A) > 0.
    if (oracle.prob(a.members()) > 0) {
        for (std::size_t j = 0; j < parts.size(); ++j) {
            Element riesz = cond_prob(t, parts.bands()[j], a, e).value;
            Element classical = scalar_mul(oracle.bayes(j, a.members(), blocks), e);
            if (!(riesz == classical)) return fail(riesz, classical, "Bayes value differs from oracle");
        }
    }

    // Inclusion-exclusion reduction: T applied to the expanded projection of
    // e equals P(A union B), and the expansion itself gives the union's
    // indicator.
    {
        std::vector<Band> pair{a, b};
        SignedProjectionSum expansion = inclusion_exclusion_expand(pair);
        Element expanded = apply_signed_sum(expansion, e);
        Element union_indicator = indicator(band_join(space, pair));
        if (!(expanded == union_indicator)) return fail(expanded, union_indicator, "expansion is not the union indicator");
        Element reduced = t.apply(expanded);
        Element classical = scalar_mul(oracle.prob(event_union(a.members(), b.members())), e);
        if (!(reduced == classical)) return fail(reduced, classical, "inclusion-exclusion reduction differs from oracle");
    }

    return {"correspondence", inputs, Verdict::Pass, std::nullopt, ""};
}

CheckReport check_axioms(const CondExpectation& t, std::span<const Element> samples) {
    std::string inputs = digest(t.partition().space(),
                                "blocks=" + std::to_string(t.partition().block_count()) +
                                    "; samples=" + std::to_string(samples.size()));
    AxiomReport report = verify_axioms(t, samples);
    for (const AxiomCheck& check : report.checks) {
        if (!check.pass) {
            return {"axioms", inputs, Verdict::Fail, Witness{"", check.axiom, check.witness},
                    "axiom '" + check.axiom + "' failed"};
        }
    }
    return {"axioms", inputs, Verdict::Pass, std::nullopt,
            std::to_string(report.checks.size()) + " axioms checked"};
}

CheckReport check_independence(const CondExpectation& t, const Band& b1, const Band& b2,
                               std::optional<bool> expected) {
    std::string inputs = digest(b1.space(), "B1=" + to_string(b1) + "; B2=" + to_string(b2));
    bool result = independent(t, b1, b2);

    // Structural check: on indicators, the pointwise product is the meet.
    Element i1 = indicator(b1);
    Element i2 = indicator(b2);
    if (!(mul(i1, i2) == inf(i1, i2))) {
        return {"independence", inputs, Verdict::Fail, first_difference(mul(i1, i2), inf(i1, i2)),
                "indicator product differs from lattice meet"};
    }
    if (independent(t, b2, b1) != result) {
        return {"independence", inputs, Verdict::Fail, std::nullopt, "independence is not symmetric"};
    }

    CheckReport report{"independence", inputs, Verdict::Pass, std::nullopt,
                       result ? "independent" : "not independent"};
    if (expected && result != *expected) {
        report.verdict = Verdict::Fail;
        report.witness = Witness{"", result ? "independent" : "not independent",
                                 *expected ? "independent" : "not independent"};
        report.note = "verdict differs from expectation";
    }
    return report;
}

}  // namespace rieszprob
