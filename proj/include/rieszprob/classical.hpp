#pragma once

#include "rieszprob/space.hpp"

#include <cstddef>
#include <span>
#include <vector>

namespace rieszprob {

/// A classical event: a sorted, deduplicated set of outcome indices.
using Event = std::vector<std::size_t>;

Event event_intersection(const Event& a, const Event& b);
Event event_union(const Event& a, const Event& b);

/// The same outcomes and weights viewed as a classical finite probability
/// space. All values are computed by direct summation over outcomes; this is
/// the independent brute-force oracle the Riesz-side machinery is checked
/// against, and it deliberately shares no code with the operator path.
class ClassicalOracle {
public:
    explicit ClassicalOracle(SpacePtr space);

    const SpacePtr& space() const { return space_; }

    Rational prob(const Event& a) const;

    /// P(A|B) = P(A and B) / P(B). Throws ConditioningOnNullError when P(B)=0.
    Rational cond_prob(const Event& a, const Event& b) const;

    /// Law of total probability: sum of P(A|B_i) P(B_i) over the partition.
    Rational total_probability(const Event& a, std::span<const Event> partition) const;

    /// Bayes: P(B_j|D) = P(D|B_j)P(B_j) / sum_i P(D|B_i)P(B_i).
    Rational bayes(std::size_t j, const Event& d, std::span<const Event> partition) const;

    bool independent(const Event& a, const Event& b) const;

private:
    SpacePtr space_;
};

}  // namespace rieszprob
