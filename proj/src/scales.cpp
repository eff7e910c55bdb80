#include "etri/scales.hpp"

#include <cstdlib>
#include <limits>
#include <utility>

#include "etri/error.hpp"

namespace etri {

Level Level::numeric(Rational value) {
    Level l;
    l.label_ = format_rational(value);
    l.value_ = std::move(value);
    return l;
}

Level Level::symbol(std::string name) {
    if (name.empty()) throw StructuralError("symbolic level needs a nonempty name");
    Level l;
    l.label_ = std::move(name);
    return l;
}

const Rational& Level::number() const {
    if (!value_) throw PreconditionError("level '" + label_ + "' is symbolic, not numeric");
    return *value_;
}

std::string Level::display() const { return label_; }

bool operator==(const Level& a, const Level& b) {
    if (a.is_numeric() != b.is_numeric()) return false;
    if (a.is_numeric()) return *a.value_ == *b.value_;
    return a.label_ == b.label_;
}

Scale::Scale(std::string id, std::vector<Level> levels, std::string name)
    : id_(std::move(id)), name_(std::move(name)), levels_(std::move(levels)) {
    if (levels_.empty()) throw ValidationError("scale '" + id_ + "' has no levels");
    numeric_ = levels_.front().is_numeric();
    for (const Level& l : levels_)
        if (l.is_numeric() != numeric_)
            throw ValidationError("scale '" + id_ + "' mixes numeric and symbolic levels");
    if (numeric_) {
        for (std::size_t i = 1; i < levels_.size(); ++i)
            if (!(levels_[i - 1].number() < levels_[i].number()))
                throw ValidationError("scale '" + id_ + "' levels are not strictly increasing at position " +
                                      std::to_string(i));
    } else {
        for (std::size_t i = 0; i < levels_.size(); ++i)
            for (std::size_t j = i + 1; j < levels_.size(); ++j)
                if (levels_[i] == levels_[j])
                    throw ValidationError("scale '" + id_ + "' has duplicate level '" + levels_[i].display() + "'");
    }
}

std::optional<std::size_t> Scale::index_of(const Level& level) const {
    for (std::size_t i = 0; i < levels_.size(); ++i)
        if (levels_[i] == level) return i;
    return std::nullopt;
}

ProductSpace::ProductSpace(std::vector<Scale> scales) : scales_(std::move(scales)) {
    if (scales_.empty()) throw ValidationError("a product space needs at least one attribute");
    strides_.assign(scales_.size(), 1);
    const std::uint64_t limit = std::numeric_limits<std::uint64_t>::max();
    for (std::size_t i = scales_.size(); i-- > 0;) {
        if (i + 1 < scales_.size()) {
            std::uint64_t below = strides_[i + 1] * scales_[i + 1].size();
            strides_[i] = below;
        }
        if (cardinality_ > limit / scales_[i].size())
            throw ResourceError("product space cardinality exceeds 2^64");
        cardinality_ *= scales_[i].size();
    }
}

bool ProductSpace::all_numeric() const {
    for (const Scale& s : scales_)
        if (!s.numeric()) return false;
    return true;
}

std::uint64_t ProductSpace::cardinality() const { return cardinality_; }

std::uint64_t ProductSpace::rank_of(const IndexVector& x) const {
    if (x.size() != scales_.size()) throw StructuralError("rank_of: dimension mismatch");
    std::uint64_t r = 0;
    for (std::size_t i = 0; i < x.size(); ++i) r += static_cast<std::uint64_t>(x[i]) * strides_[i];
    return r;
}

IndexVector ProductSpace::indices_at(std::uint64_t rank) const {
    IndexVector x(scales_.size());
    for (std::size_t i = 0; i < scales_.size(); ++i) {
        x[i] = static_cast<std::int32_t>((rank / strides_[i]) % scales_[i].size());
    }
    return x;
}

IndexVector ProductSpace::to_indices(const Alternative& a) const {
    if (a.coords.size() != scales_.size())
        throw StructuralError("alternative has " + std::to_string(a.coords.size()) + " coordinates, space has " +
                              std::to_string(scales_.size()));
    IndexVector x(scales_.size());
    for (std::size_t i = 0; i < scales_.size(); ++i) {
        auto idx = scales_[i].index_of(a.coords[i]);
        if (!idx)
            throw ValidationError("coordinate '" + a.coords[i].display() + "' is not a level of scale '" +
                                  scales_[i].id() + "'");
        x[i] = static_cast<std::int32_t>(*idx);
    }
    return x;
}

Alternative ProductSpace::to_alternative(const IndexVector& x) const {
    if (x.size() != scales_.size()) throw StructuralError("to_alternative: dimension mismatch");
    Alternative a;
    a.coords.reserve(x.size());
    for (std::size_t i = 0; i < x.size(); ++i) a.coords.push_back(scales_[i].level(static_cast<std::size_t>(x[i])));
    return a;
}

std::vector<Rational> ProductSpace::numeric_coords(const IndexVector& x) const {
    if (x.size() != scales_.size()) throw StructuralError("numeric_coords: dimension mismatch");
    std::vector<Rational> v;
    v.reserve(x.size());
    for (std::size_t i = 0; i < x.size(); ++i) v.push_back(scales_[i].level(static_cast<std::size_t>(x[i])).number());
    return v;
}

bool operator==(const ProductSpace& a, const ProductSpace& b) {
    if (a.scales_.size() != b.scales_.size()) return false;
    for (std::size_t i = 0; i < a.scales_.size(); ++i) {
        if (a.scales_[i].size() != b.scales_[i].size()) return false;
        for (std::size_t l = 0; l < a.scales_[i].size(); ++l)
            if (a.scales_[i].level(l) != b.scales_[i].level(l)) return false;
    }
    return true;
}

bool dominates(const IndexVector& x, const IndexVector& y) {
    if (x.size() != y.size()) throw StructuralError("dominates: dimension mismatch");
    for (std::size_t i = 0; i < x.size(); ++i)
        if (x[i] < y[i]) return false;
    return true;
}

bool dominates(const Alternative& x, const Alternative& y, const ProductSpace& space) {
    return dominates(space.to_indices(x), space.to_indices(y));
}

std::uint64_t enumeration_cap() {
    if (const char* env = std::getenv("ETRI_ENUM_CAP")) {
        char* end = nullptr;
        unsigned long long v = std::strtoull(env, &end, 10);
        if (end && *end == '\0' && v > 0) return static_cast<std::uint64_t>(v);
    }
    return 100000000ull;  // 10^8
}

void ensure_enumerable(const ProductSpace& space, std::uint64_t cap) {
    std::uint64_t card = space.cardinality();
    if (card > cap)
        throw ResourceError("space has " + std::to_string(card) + " alternatives, above the cap of " +
                            std::to_string(cap));
}

SpaceEnumerator::SpaceEnumerator(const ProductSpace& space) : space_(&space), current_(space.attribute_count(), 0) {}

bool SpaceEnumerator::next(IndexVector& out) {
    if (done_) return false;
    if (!started_) {
        started_ = true;
        out = current_;
        return true;
    }
    for (std::size_t i = current_.size(); i-- > 0;) {
        if (static_cast<std::size_t>(current_[i]) + 1 < space_->scale(i).size()) {
            ++current_[i];
            std::fill(current_.begin() + static_cast<std::ptrdiff_t>(i) + 1, current_.end(), 0);
            out = current_;
            return true;
        }
    }
    done_ = true;
    return false;
}

}  // namespace etri
