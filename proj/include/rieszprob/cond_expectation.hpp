#pragma once

#include "rieszprob/space.hpp"

#include <cstddef>
#include <span>
#include <string>
#include <vector>

namespace rieszprob {

/// A partition of the outcomes into nonempty, pairwise-disjoint blocks.
/// Induces the weighted block-averaging conditional expectation.
class Partition {
public:
    static Partition from_blocks(SpacePtr space, std::vector<std::vector<std::size_t>> blocks);
    static Partition from_label_blocks(const SpacePtr& space,
                                       const std::vector<std::vector<std::string>>& blocks);
    /// The trivial partition; induces the full expectation operator.
    static Partition one_block(SpacePtr space);
    /// Singleton blocks; induces the identity operator.
    static Partition discrete(SpacePtr space);

    const SpacePtr& space() const { return space_; }
    const std::vector<std::vector<std::size_t>>& blocks() const { return blocks_; }
    std::size_t block_count() const { return blocks_.size(); }
    std::size_t block_of(std::size_t outcome) const { return block_of_[outcome]; }

    /// True when every block of this partition lies inside a block of other.
    bool refines(const Partition& other) const;

private:
    Partition(SpacePtr space, std::vector<std::vector<std::size_t>> blocks, std::vector<std::size_t> block_of)
        : space_(std::move(space)), blocks_(std::move(blocks)), block_of_(std::move(block_of)) {}

    SpacePtr space_;
    std::vector<std::vector<std::size_t>> blocks_;
    std::vector<std::size_t> block_of_;  // outcome index -> block index
};

/// The conditional expectation T induced by a partition: on each block the
/// output is the weight-averaged value of the input over that block. A
/// positive projection with T(e) = e and the averaging property; on a finite
/// space it is automatically order-continuous.
class CondExpectation {
public:
    explicit CondExpectation(Partition partition);

    Element apply(const Element& f) const;

    const Partition& partition() const { return partition_; }
    const std::vector<Rational>& block_weights() const { return block_weights_; }

    /// Fault-injection hook: returns a copy with one block weight replaced.
    /// The result is generally no longer a conditional expectation; used as a
    /// negative control for the axiom verifier.
    CondExpectation with_block_weight(std::size_t block, Rational weight) const;

private:
    Partition partition_;
    std::vector<Rational> block_weights_;  // sum of outcome weights per block
};

struct AxiomCheck {
    std::string axiom;
    bool pass;
    std::string witness;  // empty when pass
};

struct AxiomReport {
    std::vector<AxiomCheck> checks;
    bool all_pass() const;
};

/// Checks the conditional-expectation axioms on all basis vectors plus the
/// provided samples: positivity, strict positivity, projection (T^2 = T),
/// unit preservation (T e = e), linearity, block-constancy of the range, and
/// the averaging identity T(g * T f) = (T g)(T f). Failures carry a witness.
AxiomReport verify_axioms(const CondExpectation& t, std::span<const Element> samples);

}  // namespace rieszprob
