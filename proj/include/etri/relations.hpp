#pragma once

#include <cstddef>
#include <optional>
#include <string>
#include <vector>

#include "etri/rational.hpp"

namespace etri {

/// Explicit binary relation on a finite carrier, dense adjacency matrix.
class FiniteRelation {
public:
    explicit FiniteRelation(std::size_t carrier_size);

    static FiniteRelation identity(std::size_t carrier_size);
    static FiniteRelation full(std::size_t carrier_size);

    /// x T y iff f(x) >= f(y) - slack (semiorder when slack >= 0).
    static FiniteRelation threshold(const std::vector<Rational>& values, const Rational& slack);
    /// x T y iff f(x) > f(y) + slack (strict semiorder when slack >= 0).
    static FiniteRelation strict_threshold(const std::vector<Rational>& values, const Rational& slack);

    std::size_t size() const { return n_; }
    bool contains(std::size_t a, std::size_t b) const { return cells_[a * n_ + b] != 0; }
    void set(std::size_t a, std::size_t b, bool value = true) { cells_[a * n_ + b] = value ? 1 : 0; }
    bool empty() const;

    FiniteRelation asymmetric_part() const;
    FiniteRelation symmetric_part() const;
    /// x T y iff not (y R x); turns a strict semiorder into the semiorder it is the asymmetric part of.
    FiniteRelation converse_complement() const;
    FiniteRelation intersection(const FiniteRelation& other) const;
    bool subset_of(const FiniteRelation& other) const;

    friend bool operator==(const FiniteRelation& a, const FiniteRelation& b);
    friend bool operator!=(const FiniteRelation& a, const FiniteRelation& b) { return !(a == b); }

    /// Witness for a failed structural predicate: the offending elements and
    /// the property they violate.
    struct Violation {
        std::string property;
        std::vector<std::size_t> elements;
    };

    std::optional<Violation> reflexivity_violation() const;
    std::optional<Violation> irreflexivity_violation() const;
    std::optional<Violation> completeness_violation() const;
    std::optional<Violation> transitivity_violation() const;
    std::optional<Violation> antisymmetry_violation() const;
    std::optional<Violation> asymmetry_violation() const;
    /// [a T b and c T d] => [a T d or c T b]
    std::optional<Violation> ferrers_violation() const;
    /// [a T b and b T c] => [a T d or d T c]
    std::optional<Violation> semitransitivity_violation() const;

private:
    std::size_t n_;
    std::vector<std::uint8_t> cells_;
};

/// reflexive + Ferrers + semitransitive
std::optional<FiniteRelation::Violation> semiorder_violation(const FiniteRelation& t);
bool is_semiorder(const FiniteRelation& t);

/// irreflexive + Ferrers + semitransitive (asymmetry follows and is cross-checked)
std::optional<FiniteRelation::Violation> strict_semiorder_violation(const FiniteRelation& t);
bool is_strict_semiorder(const FiniteRelation& t);

std::optional<FiniteRelation::Violation> weak_order_violation(const FiniteRelation& t);
bool is_weak_order(const FiniteRelation& t);

std::optional<FiniteRelation::Violation> partial_order_violation(const FiniteRelation& t);
bool is_partial_order(const FiniteRelation& t);

/// The weak order induced by a Ferrers and semitransitive relation:
/// a T^wo b iff forall c: (b T c => a T c) and (c T a => c T b).
/// PreconditionError when T is not Ferrers and semitransitive.
FiniteRelation trace_weak_order(const FiniteRelation& t);

struct NestedChainCheck {
    bool homogeneous = false;
    std::optional<FiniteRelation> trace_meet;  // W = S^wo meet U^wo, present when homogeneous
    std::string reason;                        // explanation on failure
};

/// S subset of U, both semiorders, S^wo meet U^wo complete.
NestedChainCheck check_homogeneous_nested_chain(const FiniteRelation& s, const FiniteRelation& u);

/// Min(T, B) for a partial order T; ValidationError on empty B,
/// PreconditionError when T is not a partial order.
std::vector<std::size_t> minimal_elements(const FiniteRelation& t, const std::vector<std::size_t>& subset);
std::vector<std::size_t> maximal_elements(const FiniteRelation& t, const std::vector<std::size_t>& subset);

}  // namespace etri
