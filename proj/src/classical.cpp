#include "rieszprob/classical.hpp"

#include <algorithm>
#include <iterator>

namespace rieszprob {

Event event_intersection(const Event& a, const Event& b) {
    Event out;
    std::set_intersection(a.begin(), a.end(), b.begin(), b.end(), std::back_inserter(out));
    return out;
}

Event event_union(const Event& a, const Event& b) {
    Event out;
    std::set_union(a.begin(), a.end(), b.begin(), b.end(), std::back_inserter(out));
    return out;
}

ClassicalOracle::ClassicalOracle(SpacePtr space) : space_(std::move(space)) {
    if (!space_) throw InvariantError("oracle requires a sample space");
}

Rational ClassicalOracle::prob(const Event& a) const {
    Rational p = 0;
    for (std::size_t i : a) p += space_->weight(i);
    return p;
}

Rational ClassicalOracle::cond_prob(const Event& a, const Event& b) const {
    Rational pb = prob(b);
    if (pb == 0) throw ConditioningOnNullError();
    return prob(event_intersection(a, b)) / pb;
}

Rational ClassicalOracle::total_probability(const Event& a, std::span<const Event> partition) const {
    Rational total = 0;
    for (const Event& block : partition) {
        total += cond_prob(a, block) * prob(block);
    }
    return total;
}

Rational ClassicalOracle::bayes(std::size_t j, const Event& d, std::span<const Event> partition) const {
    Rational denom = total_probability(d, partition);
    if (denom == 0) throw ConditioningOnNullError();
    return cond_prob(d, partition[j]) * prob(partition[j]) / denom;
}

bool ClassicalOracle::independent(const Event& a, const Event& b) const {
    return prob(event_intersection(a, b)) == prob(a) * prob(b);
}

}  // namespace rieszprob
