#pragma once

#include <cstdint>
#include <optional>
#include <string>
#include <vector>

#include "etri/rational.hpp"

namespace etri {

/// One evaluation level. Either an exact rational or a named symbolic level
/// whose position in its scale is the only order information.
class Level {
public:
    static Level numeric(Rational value);
    static Level symbol(std::string name);

    bool is_numeric() const { return value_.has_value(); }
    const Rational& number() const;  // PreconditionError on symbolic levels
    std::string display() const;

    friend bool operator==(const Level& a, const Level& b);
    friend bool operator!=(const Level& a, const Level& b) { return !(a == b); }

private:
    Level() = default;
    std::optional<Rational> value_;
    std::string label_;
};

/// A finite attribute scale, stored worst-to-best. Numeric levels must be
/// strictly increasing; symbolic levels take the listing order as their order.
class Scale {
public:
    Scale(std::string id, std::vector<Level> levels, std::string name = "");

    const std::string& id() const { return id_; }
    const std::string& name() const { return name_; }
    std::size_t size() const { return levels_.size(); }
    const Level& level(std::size_t index) const { return levels_.at(index); }
    const std::vector<Level>& levels() const { return levels_; }
    bool numeric() const { return numeric_; }

    std::optional<std::size_t> index_of(const Level& level) const;

private:
    std::string id_;
    std::string name_;
    std::vector<Level> levels_;
    bool numeric_ = true;
};

/// An alternative as an evaluation vector, one level per attribute.
struct Alternative {
    std::vector<Level> coords;

    friend bool operator==(const Alternative& a, const Alternative& b) { return a.coords == b.coords; }
    friend bool operator!=(const Alternative& a, const Alternative& b) { return !(a == b); }
};

/// Positions of an alternative's levels inside their scales.
using IndexVector = std::vector<std::int32_t>;

/// Cartesian product of attribute scales.
class ProductSpace {
public:
    explicit ProductSpace(std::vector<Scale> scales);

    std::size_t attribute_count() const { return scales_.size(); }
    const Scale& scale(std::size_t i) const { return scales_.at(i); }
    const std::vector<Scale>& scales() const { return scales_; }
    bool all_numeric() const;

    /// Number of alternatives; ResourceError if it does not fit 64 bits.
    std::uint64_t cardinality() const;

    /// Row-major rank (last attribute varies fastest).
    std::uint64_t rank_of(const IndexVector& x) const;
    IndexVector indices_at(std::uint64_t rank) const;

    IndexVector to_indices(const Alternative& x) const;
    Alternative to_alternative(const IndexVector& x) const;

    /// Numeric values of the coordinates; PreconditionError on a symbolic scale.
    std::vector<Rational> numeric_coords(const IndexVector& x) const;

    friend bool operator==(const ProductSpace& a, const ProductSpace& b);

private:
    std::vector<Scale> scales_;
    std::vector<std::uint64_t> strides_;
    std::uint64_t cardinality_ = 1;
};

/// Coordinatewise weak dominance under each scale's order.
bool dominates(const IndexVector& x, const IndexVector& y);
bool dominates(const Alternative& x, const Alternative& y, const ProductSpace& space);

/// Enumeration cap: default 10^8 alternatives, ETRI_ENUM_CAP overrides.
std::uint64_t enumeration_cap();
void ensure_enumerable(const ProductSpace& space, std::uint64_t cap = enumeration_cap());

/// Odometer over the whole space in rank order.
class SpaceEnumerator {
public:
    explicit SpaceEnumerator(const ProductSpace& space);

    /// Fills `out` with the next alternative's indices; false when exhausted.
    bool next(IndexVector& out);

private:
    const ProductSpace* space_;
    IndexVector current_;
    bool done_ = false;
    bool started_ = false;
};

template <typename Fn>
void for_each_alternative(const ProductSpace& space, Fn&& fn) {
    SpaceEnumerator en(space);
    IndexVector x;
    while (en.next(x)) fn(const_cast<const IndexVector&>(x));
}

}  // namespace etri
