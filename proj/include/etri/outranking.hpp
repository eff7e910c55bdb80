#pragma once

#include <cstdint>
#include <optional>
#include <span>
#include <vector>

#include "etri/rational.hpp"
#include "etri/scales.hpp"

namespace etri {

enum class Variant { electre3, electre1 };

/// Per-attribute thresholds: 0 <= qt <= pt, and pt <= vt when a veto is present.
/// The ELECTRE I construction confounds qt and pt.
struct Thresholds {
    Rational qt;
    Rational pt;
    std::optional<Rational> vt;
};

struct OutrankingModel {
    Variant variant = Variant::electre3;
    std::vector<Thresholds> thresholds;  // one per attribute
    std::vector<Rational> weights;       // nonnegative, sum exactly 1
    Rational lambda;                     // cutting level in [1/2, 1]

    std::size_t attribute_count() const { return thresholds.size(); }
    bool has_veto() const;

    /// ValidationError when an invariant fails.
    void validate() const;
};

/// Single-criterion concordance with the assertion "x is at least as good as y".
/// electre3: 1 above y-qt, 0 below y-pt, linear in between (step when qt = pt).
/// electre1: 1 iff x >= y - qt, else 0.
Rational concordance_index(Variant variant, const Rational& x, const Rational& y, const Thresholds& th);

/// Single-criterion discordance. Without a veto threshold the index is 0.
/// electre3: 0 above y-pt, 1 below y-vt, linear in between.
/// electre1: 1 iff y - x > vt (strict), else 0.
Rational discordance_index(Variant variant, const Rational& x, const Rational& y, const Thresholds& th);

/// Weighted concordance sum over attributes.
Rational concordance(std::span<const Rational> x, std::span<const Rational> y, const OutrankingModel& m);

/// Credibility of "x outranks y".
/// electre3: c * prod over {i : d_i > c} of (1-d_i)/(1-c); the factor set is
/// empty when c = 1, so the quotient is never 0/0.
/// electre1: c * prod over all i of (1-d_i).
Rational credibility(std::span<const Rational> x, std::span<const Rational> y, const OutrankingModel& m);

/// x S y iff credibility(x,y) >= lambda.
bool outranks(std::span<const Rational> x, std::span<const Rational> y, const OutrankingModel& m);
bool strictly_outranks(std::span<const Rational> x, std::span<const Rational> y, const OutrankingModel& m);
bool indifferent(std::span<const Rational> x, std::span<const Rational> y, const OutrankingModel& m);

struct DominanceRespectVerdict {
    bool respects = true;
    std::uint64_t pairs_checked = 0;
    /// (x, y, z, w) with x S y, z >= x, y >= w but not z S w; never expected.
    std::optional<std::array<Alternative, 4>> counterexample;
};

/// Confirms that S respects coordinatewise dominance on the space. Exhausts
/// all ordered pairs combined with one-step coordinate moves when the pair
/// count fits the budget (this covers every quadruple, since dominance is
/// generated by single-coordinate steps); otherwise samples random quadruples.
DominanceRespectVerdict check_respects_dominance(const OutrankingModel& m, const ProductSpace& space,
                                                 std::uint64_t budget = 1u << 22, std::uint64_t seed = 1);

}  // namespace etri
