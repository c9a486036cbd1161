#pragma once

#include "rieszprob/bands.hpp"
#include "rieszprob/classical.hpp"
#include "rieszprob/cond_expectation.hpp"
#include "rieszprob/cond_probability.hpp"
#include "rieszprob/space.hpp"

#include <cstddef>
#include <optional>
#include <span>
#include <string>
#include <vector>

namespace rieszprob {

/// A band decomposition of the whole space: pairwise-disjoint nonempty bands
/// whose union is all outcomes.
class BandPartition {
public:
    static BandPartition from_bands(std::vector<Band> bands);
    static BandPartition from_partition(const Partition& partition);

    const std::vector<Band>& bands() const { return bands_; }
    std::size_t size() const { return bands_.size(); }
    const SpacePtr& space() const { return bands_.front().space(); }

private:
    explicit BandPartition(std::vector<Band> bands) : bands_(std::move(bands)) {}

    std::vector<Band> bands_;
};

enum class Verdict { Pass, Fail, Skipped };

std::string to_string(Verdict v);

struct Witness {
    std::string outcome;  // outcome label where the sides differ
    std::string lhs;
    std::string rhs;
};

struct CheckReport {
    std::string check;
    std::string inputs;  // short digest of space/bands/partition/f
    Verdict verdict = Verdict::Pass;
    std::optional<Witness> witness;  // present on Fail
    std::string note;                // skip reason or extra detail
};

/// Law of total probability: T P_D(f) = sum_i P(D|B_i)(f) * T P_{B_i}(f).
/// Proviso failures (some T P_{B_i}(f) not invertible) yield a Skipped
/// verdict, not an error, so campaigns can continue.
CheckReport check_ltp(const CondExpectation& t, const BandPartition& parts, const Band& d, const Element& f);

/// Bayes: P(B_j|D)(f) = [P(D|B_j)(f) T P_{B_j}(f)] * [sum_i P(D|B_i)(f) T P_{B_i}(f)]^{-1}.
/// Needs the LTP provisos plus invertibility of T P_D(f). Also confirms the
/// denominator equals T P_D(f) (the total-probability bridge).
CheckReport check_bayes(const CondExpectation& t, const BandPartition& parts, const Band& d, std::size_t j,
                        const Element& f);

/// Inclusion-exclusion: the expanded signed sum applied to every basis
/// vector equals the direct projection onto the union band; also checks the
/// term count is exactly 2^n - 1.
CheckReport check_inclusion_exclusion(std::span<const Band> bands,
                                      std::size_t cap = kDefaultInclusionExclusionCap);

/// Classical correspondence: with T the one-block expectation and f = e,
/// conditional probability, LTP, Bayes, and the inclusion-exclusion
/// reduction all equal the classical oracle's value times e.
CheckReport check_correspondence(const SpacePtr& space, const Band& a, const Band& b,
                                 const BandPartition& parts);

/// Axiom suite as a CheckReport (wraps verify_axioms).
CheckReport check_axioms(const CondExpectation& t, std::span<const Element> samples);

/// Independence check report: records the verdict of the definition, the
/// strong three-way cross-check, and (for indicator pairs) that the
/// pointwise product coincides with the lattice meet.
CheckReport check_independence(const CondExpectation& t, const Band& b1, const Band& b2,
                               std::optional<bool> expected = std::nullopt);

}  // namespace rieszprob
