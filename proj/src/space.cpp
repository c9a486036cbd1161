#include "rieszprob/space.hpp"

#include <algorithm>
#include <set>
#include <utility>

namespace rieszprob {

std::shared_ptr<const FiniteSampleSpace> FiniteSampleSpace::create(std::vector<std::string> outcomes,
                                                                   std::vector<Rational> weights) {
    if (outcomes.empty()) {
        throw InvariantError("sample space must have at least one outcome");
    }
    if (outcomes.size() != weights.size()) {
        throw InvariantError("outcome count and weight count differ");
    }
    std::set<std::string> seen;
    for (const auto& label : outcomes) {
        if (!seen.insert(label).second) {
            throw InvariantError("duplicate outcome label '" + label + "'");
        }
    }
    Rational total = 0;
    for (std::size_t i = 0; i < weights.size(); ++i) {
        if (weights[i] <= 0) {
            throw InvariantError("weight of outcome '" + outcomes[i] + "' is not strictly positive (" +
                                 to_string(weights[i]) + ")");
        }
        total += weights[i];
    }
    if (total != 1) {
        throw InvariantError("weights sum to " + to_string(total) + ", expected 1");
    }
    return std::shared_ptr<const FiniteSampleSpace>(
        new FiniteSampleSpace(std::move(outcomes), std::move(weights)));
}

std::shared_ptr<const FiniteSampleSpace> FiniteSampleSpace::uniform(std::size_t n) {
    std::vector<std::string> outcomes;
    std::vector<Rational> weights;
    outcomes.reserve(n);
    weights.reserve(n);
    for (std::size_t i = 1; i <= n; ++i) {
        outcomes.push_back(std::to_string(i));
        weights.emplace_back(1, n);
    }
    return create(std::move(outcomes), std::move(weights));
}

std::optional<std::size_t> FiniteSampleSpace::index_of(const std::string& label) const {
    auto it = std::find(outcomes_.begin(), outcomes_.end(), label);
    if (it == outcomes_.end()) return std::nullopt;
    return static_cast<std::size_t>(it - outcomes_.begin());
}

bool same_space(const SpacePtr& a, const SpacePtr& b) {
    if (a == b) return true;
    if (!a || !b) return false;
    return *a == *b;
}

namespace {

void require_same_space(const Element& f, const Element& g) {
    if (!same_space(f.space(), g.space())) throw SpaceMismatchError();
}

}  // namespace

Element::Element(SpacePtr space, std::vector<Rational> coords) : space_(std::move(space)), coords_(std::move(coords)) {
    if (!space_) throw InvariantError("element requires a sample space");
    if (coords_.size() != space_->size()) {
        throw InvariantError("element has " + std::to_string(coords_.size()) + " coordinates, space has " +
                             std::to_string(space_->size()) + " outcomes");
    }
}

std::string to_string(const Element& f) {
    std::string out = "(";
    for (std::size_t i = 0; i < f.size(); ++i) {
        if (i) out += ", ";
        out += to_string(f[i]);
    }
    out += ")";
    return out;
}

Element unit_e(const SpacePtr& space) {
    return Element(space, std::vector<Rational>(space->size(), Rational(1)));
}

Element zero_element(const SpacePtr& space) {
    return Element(space, std::vector<Rational>(space->size(), Rational(0)));
}

Element basis_vector(const SpacePtr& space, std::size_t i) {
    std::vector<Rational> coords(space->size(), Rational(0));
    coords.at(i) = 1;
    return Element(space, std::move(coords));
}

Element add(const Element& f, const Element& g) {
    require_same_space(f, g);
    std::vector<Rational> coords(f.size());
    for (std::size_t i = 0; i < f.size(); ++i) coords[i] = f[i] + g[i];
    return Element(f.space(), std::move(coords));
}

Element scalar_mul(const Rational& c, const Element& f) {
    std::vector<Rational> coords(f.size());
    for (std::size_t i = 0; i < f.size(); ++i) coords[i] = c * f[i];
    return Element(f.space(), std::move(coords));
}

Element sup(const Element& f, const Element& g) {
    require_same_space(f, g);
    std::vector<Rational> coords(f.size());
    for (std::size_t i = 0; i < f.size(); ++i) coords[i] = std::max(f[i], g[i]);
    return Element(f.space(), std::move(coords));
}

Element inf(const Element& f, const Element& g) {
    require_same_space(f, g);
    std::vector<Rational> coords(f.size());
    for (std::size_t i = 0; i < f.size(); ++i) coords[i] = std::min(f[i], g[i]);
    return Element(f.space(), std::move(coords));
}

Element abs(const Element& f) {
    std::vector<Rational> coords(f.size());
    for (std::size_t i = 0; i < f.size(); ++i) coords[i] = boost::multiprecision::abs(f[i]);
    return Element(f.space(), std::move(coords));
}

Element mul(const Element& f, const Element& g) {
    require_same_space(f, g);
    std::vector<Rational> coords(f.size());
    for (std::size_t i = 0; i < f.size(); ++i) coords[i] = f[i] * g[i];
    return Element(f.space(), std::move(coords));
}

Element invert(const Element& f) {
    std::vector<Rational> coords(f.size());
    for (std::size_t i = 0; i < f.size(); ++i) {
        if (f[i] == 0) throw NotInvertibleError(i, f.space()->label(i));
        coords[i] = Rational(1) / f[i];
    }
    return Element(f.space(), std::move(coords));
}

bool leq(const Element& f, const Element& g) {
    require_same_space(f, g);
    for (std::size_t i = 0; i < f.size(); ++i) {
        if (f[i] > g[i]) return false;
    }
    return true;
}

bool is_invertible(const Element& f) {
    for (std::size_t i = 0; i < f.size(); ++i) {
        if (f[i] == 0) return false;
    }
    return true;
}

}  // namespace rieszprob
