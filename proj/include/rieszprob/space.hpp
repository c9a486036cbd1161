#pragma once

#include "rieszprob/errors.hpp"
#include "rieszprob/rational.hpp"

#include <cstddef>
#include <memory>
#include <optional>
#include <string>
#include <vector>

namespace rieszprob {

/// A finite set of outcome labels with strictly positive rational weights
/// summing to 1. Fixes the ambient space E of rational-valued functions on
/// the outcomes, ordered pointwise.
class FiniteSampleSpace {
public:
    /// Validates distinct labels, strictly positive weights, sum exactly 1.
    static std::shared_ptr<const FiniteSampleSpace> create(std::vector<std::string> outcomes,
                                                           std::vector<Rational> weights);

    /// Convenience: n outcomes "1".."n" with equal weight 1/n.
    static std::shared_ptr<const FiniteSampleSpace> uniform(std::size_t n);

    std::size_t size() const { return outcomes_.size(); }
    const std::string& label(std::size_t i) const { return outcomes_[i]; }
    const Rational& weight(std::size_t i) const { return weights_[i]; }
    const std::vector<std::string>& labels() const { return outcomes_; }
    const std::vector<Rational>& weights() const { return weights_; }
    std::optional<std::size_t> index_of(const std::string& label) const;

    friend bool operator==(const FiniteSampleSpace& a, const FiniteSampleSpace& b) {
        return a.outcomes_ == b.outcomes_ && a.weights_ == b.weights_;
    }

private:
    FiniteSampleSpace(std::vector<std::string> outcomes, std::vector<Rational> weights)
        : outcomes_(std::move(outcomes)), weights_(std::move(weights)) {}

    std::vector<std::string> outcomes_;
    std::vector<Rational> weights_;
};

using SpacePtr = std::shared_ptr<const FiniteSampleSpace>;

/// True when both pointers denote the same space, by identity or by value.
bool same_space(const SpacePtr& a, const SpacePtr& b);

/// A rational-valued function on the outcomes of a space, one coordinate per
/// outcome in outcome order. Immutable after construction.
class Element {
public:
    Element(SpacePtr space, std::vector<Rational> coords);

    const SpacePtr& space() const { return space_; }
    const std::vector<Rational>& coords() const { return coords_; }
    const Rational& operator[](std::size_t i) const { return coords_[i]; }
    std::size_t size() const { return coords_.size(); }

    friend bool operator==(const Element& a, const Element& b) {
        return same_space(a.space_, b.space_) && a.coords_ == b.coords_;
    }

private:
    SpacePtr space_;
    std::vector<Rational> coords_;
};

/// Renders "(c1, c2, ...)" with exact fractions.
std::string to_string(const Element& f);

/// The all-ones element: the canonical weak order unit and the identity of
/// the pointwise product.
Element unit_e(const SpacePtr& space);

/// The zero element.
Element zero_element(const SpacePtr& space);

/// Basis vector: 1 at outcome i, 0 elsewhere.
Element basis_vector(const SpacePtr& space, std::size_t i);

Element add(const Element& f, const Element& g);
Element scalar_mul(const Rational& c, const Element& f);
Element sup(const Element& f, const Element& g);
Element inf(const Element& f, const Element& g);
Element abs(const Element& f);

/// Pointwise product; commutative with identity unit_e.
Element mul(const Element& f, const Element& g);

/// Pointwise reciprocal. Throws NotInvertibleError at the first zero
/// coordinate; this is how the conditional-probability proviso surfaces.
Element invert(const Element& f);

/// Pointwise order: true iff f(w) <= g(w) at every outcome.
bool leq(const Element& f, const Element& g);

/// Every coordinate nonzero, i.e. invert(f) would succeed.
bool is_invertible(const Element& f);

}  // namespace rieszprob
