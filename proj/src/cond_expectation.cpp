#include "rieszprob/cond_expectation.hpp"

#include <algorithm>
#include <utility>

namespace rieszprob {

Partition Partition::from_blocks(SpacePtr space, std::vector<std::vector<std::size_t>> blocks) {
    if (!space) throw InvariantError("partition requires a sample space");
    std::vector<std::size_t> block_of(space->size(), blocks.size());
    for (std::size_t b = 0; b < blocks.size(); ++b) {
        auto& block = blocks[b];
        if (block.empty()) throw InvariantError("partition block " + std::to_string(b) + " is empty");
        std::sort(block.begin(), block.end());
        if (std::adjacent_find(block.begin(), block.end()) != block.end()) {
            throw InvariantError("partition block " + std::to_string(b) + " repeats an outcome");
        }
        for (std::size_t i : block) {
            if (i >= space->size()) {
                throw InvariantError("partition block member index " + std::to_string(i) + " out of range");
            }
            if (block_of[i] != blocks.size()) {
                throw InvariantError("outcome '" + space->label(i) + "' appears in more than one block");
            }
            block_of[i] = b;
        }
    }
    for (std::size_t i = 0; i < space->size(); ++i) {
        if (block_of[i] == blocks.size()) {
            throw InvariantError("outcome '" + space->label(i) + "' is not covered by any block");
        }
    }
    return Partition(std::move(space), std::move(blocks), std::move(block_of));
}

Partition Partition::from_label_blocks(const SpacePtr& space,
                                       const std::vector<std::vector<std::string>>& blocks) {
    std::vector<std::vector<std::size_t>> index_blocks;
    index_blocks.reserve(blocks.size());
    for (const auto& block : blocks) {
        std::vector<std::size_t> indices;
        indices.reserve(block.size());
        for (const auto& label : block) {
            auto idx = space->index_of(label);
            if (!idx) throw InvariantError("partition member '" + label + "' is not an outcome of the space");
            indices.push_back(*idx);
        }
        index_blocks.push_back(std::move(indices));
    }
    return from_blocks(space, std::move(index_blocks));
}

Partition Partition::one_block(SpacePtr space) {
    std::vector<std::size_t> all(space->size());
    for (std::size_t i = 0; i < all.size(); ++i) all[i] = i;
    return from_blocks(std::move(space), {std::move(all)});
}

Partition Partition::discrete(SpacePtr space) {
    std::vector<std::vector<std::size_t>> blocks;
    for (std::size_t i = 0; i < space->size(); ++i) blocks.push_back({i});
    return from_blocks(std::move(space), std::move(blocks));
}

bool Partition::refines(const Partition& other) const {
    if (!same_space(space_, other.space_)) throw SpaceMismatchError();
    for (const auto& block : blocks_) {
        std::size_t target = other.block_of(block.front());
        for (std::size_t i : block) {
            if (other.block_of(i) != target) return false;
        }
    }
    return true;
}

CondExpectation::CondExpectation(Partition partition) : partition_(std::move(partition)) {
    block_weights_.reserve(partition_.block_count());
    for (const auto& block : partition_.blocks()) {
        Rational w = 0;
        for (std::size_t i : block) w += partition_.space()->weight(i);
        block_weights_.push_back(std::move(w));
    }
}

Element CondExpectation::apply(const Element& f) const {
    if (!same_space(partition_.space(), f.space())) throw SpaceMismatchError();
    const auto& space = *partition_.space();
    std::vector<Rational> coords(f.size());
    for (std::size_t b = 0; b < partition_.block_count(); ++b) {
        Rational sum = 0;
        for (std::size_t i : partition_.blocks()[b]) sum += space.weight(i) * f[i];
        Rational avg = sum / block_weights_[b];
        for (std::size_t i : partition_.blocks()[b]) coords[i] = avg;
    }
    return Element(f.space(), std::move(coords));
}

CondExpectation CondExpectation::with_block_weight(std::size_t block, Rational weight) const {
    CondExpectation copy = *this;
    copy.block_weights_.at(block) = std::move(weight);
    return copy;
}

bool AxiomReport::all_pass() const {
    return std::all_of(checks.begin(), checks.end(), [](const AxiomCheck& c) { return c.pass; });
}

namespace {

std::string coordinate_witness(const Element& lhs, const Element& rhs, const std::string& context) {
    for (std::size_t i = 0; i < lhs.size(); ++i) {
        if (lhs[i] != rhs[i]) {
            return context + ": at outcome '" + lhs.space()->label(i) + "', " + to_string(lhs[i]) +
                   " != " + to_string(rhs[i]);
        }
    }
    return context + ": elements differ";
}

bool is_nonnegative(const Element& f) {
    for (std::size_t i = 0; i < f.size(); ++i) {
        if (f[i] < 0) return false;
    }
    return true;
}

bool is_strictly_greater_zero(const Element& f) {
    // Riesz order: f > 0 means f >= 0 and f != 0.
    bool any = false;
    for (std::size_t i = 0; i < f.size(); ++i) {
        if (f[i] < 0) return false;
        if (f[i] > 0) any = true;
    }
    return any;
}

}  // namespace

AxiomReport verify_axioms(const CondExpectation& t, std::span<const Element> samples) {
    const SpacePtr& space = t.partition().space();
    std::vector<Element> pool;
    for (std::size_t i = 0; i < space->size(); ++i) pool.push_back(basis_vector(space, i));
    pool.insert(pool.end(), samples.begin(), samples.end());

    AxiomReport report;
    auto record = [&report](std::string axiom, bool pass, std::string witness) {
        report.checks.push_back({std::move(axiom), pass, pass ? "" : std::move(witness)});
    };

    // unit preservation
    {
        Element e = unit_e(space);
        Element te = t.apply(e);
        record("unit_preservation", te == e, coordinate_witness(te, e, "T(e) vs e"));
    }

    // positivity and strict positivity, on |f| for every pool member
    {
        bool pos_ok = true, strict_ok = true;
        std::string pos_w, strict_w;
        for (std::size_t k = 0; k < pool.size() && (pos_ok || strict_ok); ++k) {
            Element f = abs(pool[k]);
            Element tf = t.apply(f);
            if (pos_ok && !is_nonnegative(tf)) {
                pos_ok = false;
                pos_w = "T|f| has a negative coordinate for sample " + std::to_string(k) + ": " + to_string(tf);
            }
            if (strict_ok && is_strictly_greater_zero(f) && !is_strictly_greater_zero(tf)) {
                strict_ok = false;
                strict_w = "f > 0 but T(f) is not > 0 for sample " + std::to_string(k) + ": " + to_string(tf);
            }
        }
        record("positivity", pos_ok, std::move(pos_w));
        record("strict_positivity", strict_ok, std::move(strict_w));
    }

    // projection: T(Tf) = Tf
    {
        bool ok = true;
        std::string w;
        for (std::size_t k = 0; k < pool.size() && ok; ++k) {
            Element tf = t.apply(pool[k]);
            Element ttf = t.apply(tf);
            if (!(ttf == tf)) {
                ok = false;
                w = coordinate_witness(ttf, tf, "T(T f) vs T f, sample " + std::to_string(k));
            }
        }
        record("projection", ok, std::move(w));
    }

    // linearity: additivity on consecutive pairs, homogeneity on a few scalars
    {
        bool ok = true;
        std::string w;
        const Rational scalars[] = {Rational(2), Rational(-3), Rational(1, 2)};
        for (std::size_t k = 0; k + 1 < pool.size() && ok; ++k) {
            Element lhs = t.apply(add(pool[k], pool[k + 1]));
            Element rhs = add(t.apply(pool[k]), t.apply(pool[k + 1]));
            if (!(lhs == rhs)) {
                ok = false;
                w = coordinate_witness(lhs, rhs, "T(f+g) vs Tf+Tg, samples " + std::to_string(k));
            }
        }
        for (std::size_t k = 0; k < pool.size() && ok; ++k) {
            for (const Rational& c : scalars) {
                Element lhs = t.apply(scalar_mul(c, pool[k]));
                Element rhs = scalar_mul(c, t.apply(pool[k]));
                if (!(lhs == rhs)) {
                    ok = false;
                    w = coordinate_witness(lhs, rhs, "T(c f) vs c T f, sample " + std::to_string(k));
                    break;
                }
            }
        }
        record("linearity", ok, std::move(w));
    }

    // range measurability: Tf constant on every block
    {
        bool ok = true;
        std::string w;
        for (std::size_t k = 0; k < pool.size() && ok; ++k) {
            Element tf = t.apply(pool[k]);
            for (const auto& block : t.partition().blocks()) {
                for (std::size_t i : block) {
                    if (tf[i] != tf[block.front()]) {
                        ok = false;
                        w = "T f not constant on a block, sample " + std::to_string(k) + ": outcome '" +
                            space->label(i) + "' has " + to_string(tf[i]) + " vs " + to_string(tf[block.front()]);
                        break;
                    }
                }
                if (!ok) break;
            }
        }
        record("block_constancy", ok, std::move(w));
    }

    // averaging identity: T(g * T f) = (T g)(T f) on consecutive pairs and (e, f)
    {
        bool ok = true;
        std::string w;
        Element e = unit_e(space);
        for (std::size_t k = 0; k < pool.size() && ok; ++k) {
            const Element& f = pool[k];
            const Element& g = k + 1 < pool.size() ? pool[k + 1] : e;
            Element lhs = t.apply(mul(g, t.apply(f)));
            Element rhs = mul(t.apply(g), t.apply(f));
            if (!(lhs == rhs)) {
                ok = false;
                w = coordinate_witness(lhs, rhs, "T(g Tf) vs (Tg)(Tf), sample " + std::to_string(k));
            }
        }
        record("averaging_identity", ok, std::move(w));
    }

    return report;
}

}  // namespace rieszprob
