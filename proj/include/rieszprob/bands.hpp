#pragma once

#include "rieszprob/space.hpp"

#include <cstddef>
#include <span>
#include <string>
#include <vector>

namespace rieszprob {

/// A band of the finite function space, identified by the set of outcomes
/// off which its members vanish. Every band here is a projection band;
/// meet/join/complement make the band lattice a Boolean algebra of outcome
/// subsets. Members are kept sorted and deduplicated so equal bands compare
/// equal.
class Band {
public:
    static Band from_indices(SpacePtr space, std::vector<std::size_t> indices);
    static Band from_labels(const SpacePtr& space, const std::vector<std::string>& labels);
    static Band full(SpacePtr space);
    static Band empty(SpacePtr space);

    const SpacePtr& space() const { return space_; }
    const std::vector<std::size_t>& members() const { return members_; }
    std::vector<std::string> member_labels() const;
    bool contains(std::size_t index) const;
    bool is_empty() const { return members_.empty(); }
    bool is_full() const { return members_.size() == space_->size(); }
    std::size_t count() const { return members_.size(); }

    friend bool operator==(const Band& a, const Band& b) {
        return same_space(a.space_, b.space_) && a.members_ == b.members_;
    }

private:
    Band(SpacePtr space, std::vector<std::size_t> members)
        : space_(std::move(space)), members_(std::move(members)) {}

    SpacePtr space_;
    std::vector<std::size_t> members_;
};

std::string to_string(const Band& b);

/// Band projection P_B: keeps coordinates inside the band, zeroes the rest.
/// Equivalently multiplication by the band's indicator. Idempotent, positive,
/// linear.
Element project(const Band& band, const Element& f);

/// The indicator element of the band's outcome set.
Element indicator(const Band& band);

Band band_meet(const Band& a, const Band& b);
Band band_complement(const Band& a);

/// The sum band B1 + ... + Bn; set union of members. An empty list yields the
/// zero band (needs the space explicitly for that case).
Band band_join(const SpacePtr& space, std::span<const Band> bands);

/// One signed term of an inclusion-exclusion expansion.
struct SignedTerm {
    int sign;  // +1 or -1
    Band band;
};

/// An alternating sum of band projections, materialized so term counts and
/// signs can be inspected independently of evaluation.
struct SignedProjectionSum {
    SpacePtr space;
    std::vector<SignedTerm> terms;
};

inline constexpr std::size_t kDefaultInclusionExclusionCap = 12;

/// Expands P_{B1+...+Bn} into the alternating sum over all nonempty index
/// subsets: sign (-1)^(|S|-1), band = meet of the selected bands. Exactly
/// 2^n - 1 terms, enumerated by subset size then lexicographically; empty
/// intersections are kept. Throws InvariantError on an empty list or when n
/// exceeds the cap.
SignedProjectionSum inclusion_exclusion_expand(std::span<const Band> bands,
                                               std::size_t cap = kDefaultInclusionExclusionCap);

/// Evaluates the signed sum on an element: sum of sign * project(band, f).
Element apply_signed_sum(const SignedProjectionSum& s, const Element& f);

}  // namespace rieszprob
