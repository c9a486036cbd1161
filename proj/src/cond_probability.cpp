#include "rieszprob/cond_probability.hpp"

namespace rieszprob {

CondProbResult cond_prob(const CondExpectation& t, const Band& b1, const Band& b2, const Element& f) {
    Element denominator = t.apply(project(b2, f));
    Element inverse = invert(denominator);  // throws NotInvertibleError when the proviso fails
    Element numerator = t.apply(project(b2, project(b1, f)));
    Element value = mul(numerator, inverse);
    return {std::move(value), std::move(numerator), std::move(denominator)};
}

bool independent(const CondExpectation& t, const Band& b1, const Band& b2) {
    if (!same_space(b1.space(), b2.space()) || !same_space(b1.space(), t.partition().space())) {
        throw SpaceMismatchError();
    }
    Element e = unit_e(b1.space());
    Element lhs = t.apply(project(b2, project(b1, e)));
    Element rhs = mul(t.apply(project(b2, e)), t.apply(project(b1, e)));
    return lhs == rhs;
}

bool independent_strong(const CondExpectation& t, const Band& b1, const Band& b2) {
    Element e = unit_e(b1.space());
    Element mixed = t.apply(project(b1, project(b2, e)));
    Element ab = t.apply(project(b1, t.apply(project(b2, e))));
    Element ba = t.apply(project(b2, t.apply(project(b1, e))));
    return ab == mixed && mixed == ba;
}

}  // namespace rieszprob
