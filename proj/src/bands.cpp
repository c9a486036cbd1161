#include "rieszprob/bands.hpp"

#include <algorithm>
#include <numeric>
#include <utility>

namespace rieszprob {

namespace {

void require_band_space(const Band& band, const Element& f) {
    if (!same_space(band.space(), f.space())) throw SpaceMismatchError();
}

}  // namespace

Band Band::from_indices(SpacePtr space, std::vector<std::size_t> indices) {
    if (!space) throw InvariantError("band requires a sample space");
    std::sort(indices.begin(), indices.end());
    indices.erase(std::unique(indices.begin(), indices.end()), indices.end());
    if (!indices.empty() && indices.back() >= space->size()) {
        throw InvariantError("band member index " + std::to_string(indices.back()) + " out of range");
    }
    return Band(std::move(space), std::move(indices));
}

Band Band::from_labels(const SpacePtr& space, const std::vector<std::string>& labels) {
    std::vector<std::size_t> indices;
    indices.reserve(labels.size());
    for (const auto& label : labels) {
        auto idx = space->index_of(label);
        if (!idx) throw InvariantError("band member '" + label + "' is not an outcome of the space");
        indices.push_back(*idx);
    }
    return from_indices(space, std::move(indices));
}

Band Band::full(SpacePtr space) {
    std::vector<std::size_t> all(space->size());
    std::iota(all.begin(), all.end(), std::size_t{0});
    return from_indices(std::move(space), std::move(all));
}

Band Band::empty(SpacePtr space) {
    return from_indices(std::move(space), {});
}

std::vector<std::string> Band::member_labels() const {
    std::vector<std::string> labels;
    labels.reserve(members_.size());
    for (std::size_t i : members_) labels.push_back(space_->label(i));
    return labels;
}

bool Band::contains(std::size_t index) const {
    return std::binary_search(members_.begin(), members_.end(), index);
}

std::string to_string(const Band& b) {
    std::string out = "{";
    bool first = true;
    for (std::size_t i : b.members()) {
        if (!first) out += ", ";
        out += b.space()->label(i);
        first = false;
    }
    out += "}";
    return out;
}

Element project(const Band& band, const Element& f) {
    require_band_space(band, f);
    std::vector<Rational> coords(f.size(), Rational(0));
    for (std::size_t i : band.members()) coords[i] = f[i];
    return Element(f.space(), std::move(coords));
}

Element indicator(const Band& band) {
    std::vector<Rational> coords(band.space()->size(), Rational(0));
    for (std::size_t i : band.members()) coords[i] = 1;
    return Element(band.space(), std::move(coords));
}

Band band_meet(const Band& a, const Band& b) {
    if (!same_space(a.space(), b.space())) throw SpaceMismatchError();
    std::vector<std::size_t> out;
    std::set_intersection(a.members().begin(), a.members().end(), b.members().begin(), b.members().end(),
                          std::back_inserter(out));
    return Band::from_indices(a.space(), std::move(out));
}

Band band_complement(const Band& a) {
    std::vector<std::size_t> out;
    for (std::size_t i = 0; i < a.space()->size(); ++i) {
        if (!a.contains(i)) out.push_back(i);
    }
    return Band::from_indices(a.space(), std::move(out));
}

Band band_join(const SpacePtr& space, std::span<const Band> bands) {
    std::vector<std::size_t> out;
    for (const Band& b : bands) {
        if (!same_space(space, b.space())) throw SpaceMismatchError();
        out.insert(out.end(), b.members().begin(), b.members().end());
    }
    return Band::from_indices(space, std::move(out));
}

SignedProjectionSum inclusion_exclusion_expand(std::span<const Band> bands, std::size_t cap) {
    if (bands.empty()) throw InvariantError("inclusion-exclusion expansion needs at least one band");
    const std::size_t n = bands.size();
    if (n > cap) {
        throw InvariantError("band list of length " + std::to_string(n) +
                             " exceeds the inclusion-exclusion cap of " + std::to_string(cap));
    }
    const SpacePtr& space = bands.front().space();
    for (const Band& b : bands) {
        if (!same_space(space, b.space())) throw SpaceMismatchError();
    }

    SignedProjectionSum sum{space, {}};
    sum.terms.reserve((std::size_t{1} << n) - 1);

    // Subsets ordered by size, then lexicographically by index tuple.
    std::vector<std::size_t> subset;
    for (std::size_t k = 1; k <= n; ++k) {
        subset.assign(k, 0);
        std::iota(subset.begin(), subset.end(), std::size_t{0});
        while (true) {
            Band meet = bands[subset[0]];
            for (std::size_t j = 1; j < k; ++j) meet = band_meet(meet, bands[subset[j]]);
            sum.terms.push_back({k % 2 == 1 ? +1 : -1, std::move(meet)});

            // next k-combination of {0..n-1}
            std::size_t i = k;
            while (i > 0 && subset[i - 1] == n - k + (i - 1)) --i;
            if (i == 0) break;
            ++subset[i - 1];
            for (std::size_t j = i; j < k; ++j) subset[j] = subset[j - 1] + 1;
        }
    }
    return sum;
}

Element apply_signed_sum(const SignedProjectionSum& s, const Element& f) {
    if (!same_space(s.space, f.space())) throw SpaceMismatchError();
    Element acc = zero_element(f.space());
    for (const SignedTerm& term : s.terms) {
        Element part = project(term.band, f);
        acc = term.sign > 0 ? add(acc, part) : add(acc, scalar_mul(Rational(-1), part));
    }
    return acc;
}

}  // namespace rieszprob
