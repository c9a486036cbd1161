#pragma once

#include "rieszprob/bands.hpp"
#include "rieszprob/cond_expectation.hpp"
#include "rieszprob/space.hpp"

namespace rieszprob {

/// The conditional probability of B1 given B2 with respect to T, together
/// with the two operator values it is built from. Certificate invariant:
/// mul(value, denominator) == numerator, exactly.
struct CondProbResult {
    Element value;        // numerator * denominator^{-1}
    Element numerator;    // T P_{B2} P_{B1} (f)
    Element denominator;  // T P_{B2} (f)
};

/// Computes [T P_{B2} P_{B1} f] * [T P_{B2} f]^{-1}. Band projections
/// commute, so the same value results with the projections applied in the
/// other order. Throws NotInvertibleError (with the offending outcome label)
/// when T P_{B2} f has a zero coordinate.
CondProbResult cond_prob(const CondExpectation& t, const Band& b1, const Band& b2, const Element& f);

/// B1 and B2 are independent with respect to T when
/// T P_{B2} P_{B1}(e) = (T P_{B2} e)(T P_{B1} e), with the pointwise product.
bool independent(const CondExpectation& t, const Band& b1, const Band& b2);

/// Cross-check against the stronger three-way formulation
/// T P_{B1} T P_{B2}(e) = T P_{B1} P_{B2}(e) = T P_{B2} T P_{B1}(e).
bool independent_strong(const CondExpectation& t, const Band& b1, const Band& b2);

}  // namespace rieszprob
