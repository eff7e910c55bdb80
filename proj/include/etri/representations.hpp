#pragma once

#include <cstdint>
#include <functional>
#include <optional>
#include <string>
#include <vector>

#include "etri/models.hpp"
#include "etri/partition.hpp"

namespace etri {

/// Minimal elements of A under the product of the induced per-attribute
/// orders, mapped back to representative original levels. Requires a linear
/// partition (PreconditionError naming the offending attribute otherwise).
std::vector<Alternative> minimally_acceptable(const TwofoldPartition& p);

/// The unanimous representation: S_i = induced order, V_i empty, F = {N},
/// profiles = minimally acceptable alternatives. Round-trips the partition
/// exactly (verified before returning).
ModelERepresentation build_unanimous_representation(const TwofoldPartition& p);

/// Flattens a discordance-free representation to F = {N} by planting every
/// profile restricted to a minimal winning coalition on top of the bottom
/// vector. Assignments are verified identical over the space before
/// returning. PreconditionError when some V_i is nonempty (use the
/// unanimous construction from the partition instead).
ModelERepresentation unanimize(const ModelERepresentation& r, std::uint64_t cap = enumeration_cap());

/// Numerical representation of a linear partition: per-attribute rank values
/// and the monotone acceptance table over rank vectors.
class DecomposableRepresentation {
public:
    DecomposableRepresentation(QuotientResult reduced, std::vector<std::vector<Rational>> values);

    /// values()[i][l] = rank value of original level l on attribute i.
    const std::vector<std::vector<Rational>>& values() const { return values_; }
    const TwofoldPartition& reduced_partition() const { return reduced_.reduced; }

    /// +1 on A, -1 on U; nondecreasing in every rank argument.
    Rational evaluate(const IndexVector& original_indices) const;
    Category classify(const IndexVector& original_indices) const;

private:
    QuotientResult reduced_;
    std::vector<std::vector<Rational>> values_;
};

DecomposableRepresentation build_decomposable_representation(const TwofoldPartition& p);

struct AdditiveResult {
    bool feasible = false;
    /// utilities[i][l] = u_i(level l), present when feasible; the witness is
    /// re-verified against the partition before returning.
    std::vector<std::vector<Rational>> utilities;
};

/// Decides representability by x in A iff sum u_i(x_i) > 0, via exact
/// rational linear feasibility with a maximized positivity slack.
AdditiveResult check_additive_representable(const TwofoldPartition& p, std::uint64_t cap = 200000);

using AssignmentFn = std::function<Category(const IndexVector&)>;

struct EquivalenceResult {
    bool identical = true;
    std::uint64_t compared = 0;
    std::optional<Alternative> first_difference;
    Category left = Category::A, right = Category::A;  // classes at the difference
};

/// Exhaustive comparison of two assignment sources over a space.
EquivalenceResult verify_equivalence(const AssignmentFn& a, const AssignmentFn& b, const ProductSpace& space,
                                     std::uint64_t cap = enumeration_cap());

AssignmentFn assignment_of(const SortingModel& m);
AssignmentFn assignment_of(const ModelERepresentation& r);
AssignmentFn assignment_of(const ModelETilde& r);
AssignmentFn assignment_of(const PartitionTable& t);

/// A unanimous veto-free representation recast as a variant-I sorting model
/// on rank-encoded scales: qt = pt = 0, lambda = 1, equal weights, no veto.
struct RankEncodedModel {
    SortingModel model;
    /// level_rank[i][l] = rank of original level l on attribute i.
    std::vector<std::vector<std::size_t>> level_rank;

    Category assign_original(const IndexVector& original_indices) const;
};

RankEncodedModel to_etrinb_pc(const ModelERepresentation& r);

/// The direct representation of a variant-I sorting model in Model (E):
/// threshold semiorders from qt, strict threshold semiorders from vt,
/// coalitions from weights and lambda, same profiles. Verified exhaustively.
ModelERepresentation model_e_from_etrinb_i(const SortingModel& m, std::uint64_t cap = enumeration_cap());

struct UnanimitySearchCandidate {
    std::string name;
    std::vector<Alternative> profiles;
};

struct UnanimitySearchOutcome {
    std::string candidate;
    bool admissible = true;  // profiles pairwise incomparable under the induced order
    /// Families (by minimal coalitions) reproducing the partition with this profile set.
    std::vector<CoalitionFamily> successes;
    /// For a failing candidate: one concrete alternative misassigned by the
    /// closest family, with the class the candidate model gives it.
    std::optional<Alternative> sample_mismatch;
    std::optional<Category> mismatch_model_class;
};

struct UnanimitySearchReport {
    std::vector<UnanimitySearchOutcome> outcomes;
    std::uint64_t combinations_tried = 0;
};

/// Tests, for each candidate profile set and every upward-closed coalition
/// family, whether Model (E) with S_i = induced order and V_i = empty
/// reproduces the partition. ResourceError past the cap.
UnanimitySearchReport search_unanimity_forced(const TwofoldPartition& p,
                                              const std::vector<UnanimitySearchCandidate>& candidates,
                                              std::uint64_t cap = 1u << 24);

/// All nonempty antichains (under coordinatewise dominance) of a pool of
/// alternatives, as search candidates. ResourceError past the cap.
std::vector<UnanimitySearchCandidate> antichain_candidates(const ProductSpace& space,
                                                           const std::vector<Alternative>& pool,
                                                           std::uint64_t cap = 1u << 20);

}  // namespace etri
