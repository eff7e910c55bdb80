#pragma once

#include <cstdint>
#include <optional>
#include <utility>
#include <vector>

#include "etri/relations.hpp"
#include "etri/scales.hpp"

namespace etri {

enum class Category { A, U };

/// Materialized total assignment over a product space. May be degenerate
/// (one class empty); TwofoldPartition is the validated form.
class PartitionTable {
public:
    PartitionTable(ProductSpace space, std::vector<bool> acceptable);

    const ProductSpace& space() const { return space_; }
    bool acceptable(std::uint64_t rank) const { return acceptable_[rank]; }
    Category category(const IndexVector& x) const {
        return acceptable_[space_.rank_of(x)] ? Category::A : Category::U;
    }
    std::uint64_t size() const { return acceptable_.size(); }
    std::uint64_t acceptable_count() const { return acceptable_count_; }
    std::uint64_t unacceptable_count() const { return size() - acceptable_count_; }
    bool degenerate() const { return acceptable_count_ == 0 || acceptable_count_ == size(); }

    friend bool operator==(const PartitionTable& a, const PartitionTable& b);

private:
    ProductSpace space_;
    std::vector<bool> acceptable_;
    std::uint64_t acceptable_count_ = 0;
};

/// A twofold partition <A,U>: both classes nonempty.
class TwofoldPartition {
public:
    /// ValidationError when one class is empty.
    explicit TwofoldPartition(PartitionTable table);

    const ProductSpace& space() const { return table_.space(); }
    const PartitionTable& table() const { return table_; }
    bool acceptable(std::uint64_t rank) const { return table_.acceptable(rank); }
    Category category(const IndexVector& x) const { return table_.category(x); }
    std::uint64_t acceptable_count() const { return table_.acceptable_count(); }
    std::uint64_t unacceptable_count() const { return table_.unacceptable_count(); }

private:
    PartitionTable table_;
};

/// Relation >=_i induced on scale i by the partition:
/// x_i >=_i y_i iff substituting x_i for y_i preserves membership of A in
/// every context. Reflexive and transitive by construction.
FiniteRelation induced_weak_order(const TwofoldPartition& p, std::size_t attribute);

struct InfluenceResult {
    bool influential = false;
    /// (x_i, a_-i) in A and (y_i, a_-i) in U, as full alternatives.
    std::optional<std::pair<Alternative, Alternative>> witness;
};

InfluenceResult is_influential(const TwofoldPartition& p, std::size_t attribute);

struct LinearityViolation {
    std::size_t attribute = 0;
    /// The four alternatives violating the cancellation condition:
    /// in_a0 = (x_i, a_-i) in A, in_a1 = (y_i, b_-i) in A,
    /// out0 = (y_i, a_-i) in U, out1 = (x_i, b_-i) in U.
    Alternative in_a0, in_a1, out0, out1;
};

struct AttributeLinearity {
    bool linear = true;
    std::optional<LinearityViolation> violation;
};

/// Per-attribute linearity, decided via completeness of the induced relation;
/// a violating quadruple is reconstructed from an incomparable pair.
std::vector<AttributeLinearity> check_linearity(const TwofoldPartition& p);
bool is_linear(const TwofoldPartition& p);

struct PartitionDominanceVerdict {
    bool respects = true;
    /// x dominates y, y in A, x in U.
    std::optional<std::pair<Alternative, Alternative>> violation;
    /// Consequences asserted when the partition respects dominance:
    bool linear = false;
    bool induced_compatible_with_scale_order = false;
};

/// Checks (one-step-generated) dominance respect w.r.t. each scale's own
/// order, and, on success, the induced compatibility consequences.
PartitionDominanceVerdict check_respects_dominance_partition(const TwofoldPartition& p);

struct QuotientResult {
    TwofoldPartition reduced;
    /// classes[i][k] = original level indices of scale i merged into reduced
    /// level k (reduced levels ordered worst-to-best when comparable).
    std::vector<std::vector<std::vector<std::size_t>>> classes;
    /// representatives[i][k] = least original level index of the class.
    std::vector<std::vector<std::size_t>> representatives;
};

/// Merges levels equivalent under the induced relation, one attribute at a
/// time. The reduced scales carry rank-valued numeric levels 0..k-1.
QuotientResult quotient(const TwofoldPartition& p);

/// Direct quantifier evaluation of the cancellation condition on one
/// attribute (test oracle; quartic cost).
bool linear_by_definition(const TwofoldPartition& p, std::size_t attribute);

}  // namespace etri
