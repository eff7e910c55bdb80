#pragma once

#include <cstdint>
#include <functional>
#include <optional>
#include <string>
#include <vector>

#include "etri/outranking.hpp"
#include "etri/partition.hpp"
#include "etri/relations.hpp"
#include "etri/scales.hpp"

namespace etri {

enum class Rule { pc, pd };

struct ProfileViolation {
    std::size_t p = 0;  // profiles[p] strictly outranks profiles[q]
    std::size_t q = 0;
};

/// First ordered pair of profiles related by strict outranking, if any.
std::optional<ProfileViolation> validate_profiles(const std::vector<IndexVector>& profiles,
                                                  const std::function<bool(const IndexVector&, const IndexVector&)>& outranks);

/// An ELECTRE Tri-(n)B sorting model over a concrete space: outranking
/// parameters, a set of limiting profiles, and an exploitation rule.
class SortingModel {
public:
    /// Validates scales (numeric), the outranking parameters, membership of
    /// the profiles, and that no profile strictly outranks another.
    SortingModel(ProductSpace space, OutrankingModel outranking, std::vector<Alternative> profiles, Rule rule);

    const ProductSpace& space() const { return space_; }
    const OutrankingModel& outranking() const { return outranking_; }
    const std::vector<Alternative>& profiles() const { return profiles_; }
    const std::vector<IndexVector>& profile_indices() const { return profile_indices_; }
    Rule rule() const { return rule_; }

    Rational credibility_against_profile(const IndexVector& x, std::size_t profile) const;
    Rational profile_credibility_against(std::size_t profile, const IndexVector& x) const;
    bool outranks_profile(const IndexVector& x, std::size_t profile) const;
    bool profile_outranks(std::size_t profile, const IndexVector& x) const;

    /// Acceptance: an alternative is acceptable when it outranks some
    /// limiting profile; the pd rule rejects an alternative strictly
    /// outranked by a profile that strictly outranks no profile itself.
    Category assign(const IndexVector& x) const;
    Category assign(const Alternative& x) const;

private:
    ProductSpace space_;
    OutrankingModel outranking_;
    std::vector<Alternative> profiles_;
    std::vector<IndexVector> profile_indices_;
    Rule rule_;
    // per profile, per attribute, per level: concordance / discordance tables
    std::vector<std::vector<std::vector<Rational>>> conc_;
    std::vector<std::vector<std::vector<Rational>>> disc_;
    std::vector<std::vector<std::vector<Rational>>> conc_rev_;  // profile vs level
    std::vector<std::vector<std::vector<Rational>>> disc_rev_;

    bool table_outranks(const std::vector<std::vector<Rational>>& c, const std::vector<std::vector<Rational>>& d,
                        const IndexVector& x) const;
};

/// Upward-closed family of winning coalitions over n attributes, stored by
/// its minimal members (an antichain under inclusion).
class CoalitionFamily {
public:
    static CoalitionFamily from_members(std::size_t attribute_count, const std::vector<std::uint32_t>& members);
    static CoalitionFamily from_minimal_lists(std::size_t attribute_count,
                                              const std::vector<std::vector<std::size_t>>& coalitions);
    /// { I : sum of weights over I >= lambda }
    static CoalitionFamily weight_threshold(const std::vector<Rational>& weights, const Rational& lambda);
    static CoalitionFamily unanimity(std::size_t attribute_count);

    std::size_t attribute_count() const { return n_; }
    bool contains(std::uint32_t mask) const;
    const std::vector<std::uint32_t>& minimal() const { return minimal_; }
    bool is_unanimity() const;
    const std::vector<std::string>& warnings() const { return warnings_; }

    friend bool operator==(const CoalitionFamily& a, const CoalitionFamily& b);

private:
    CoalitionFamily() = default;
    std::size_t n_ = 0;
    std::vector<std::uint32_t> minimal_;
    std::vector<std::string> warnings_;
};

enum class ProfileCheck { enforce, warn };

/// Model (E): per-attribute semiorders S_i, strict semiorders V_i inside the
/// strict part of S_i, a winning-coalition family and limiting profiles.
class ModelERepresentation {
public:
    ModelERepresentation(ProductSpace space, std::vector<FiniteRelation> s, std::vector<FiniteRelation> v,
                         CoalitionFamily family, std::vector<Alternative> profiles,
                         ProfileCheck profile_check = ProfileCheck::enforce);

    const ProductSpace& space() const { return space_; }
    const FiniteRelation& s_relation(std::size_t i) const { return s_.at(i); }
    const FiniteRelation& v_relation(std::size_t i) const { return v_.at(i); }
    const FiniteRelation& u_relation(std::size_t i) const { return u_.at(i); }
    const FiniteRelation& w_relation(std::size_t i) const { return w_.at(i); }
    const CoalitionFamily& family() const { return family_; }
    const std::vector<Alternative>& profiles() const { return profiles_; }
    const std::vector<IndexVector>& profile_indices() const { return profile_indices_; }
    const std::vector<std::string>& warnings() const { return warnings_; }
    bool discordance_free() const;

    /// x S y iff the agreeing coalition is winning and no attribute vetoes.
    bool global_s(const IndexVector& x, const IndexVector& y) const;
    bool global_p(const IndexVector& x, const IndexVector& y) const;

    Category assign(const IndexVector& x) const;
    Category assign(const Alternative& x) const;

private:
    ProductSpace space_;
    std::vector<FiniteRelation> s_, v_, u_, w_;
    CoalitionFamily family_;
    std::vector<Alternative> profiles_;
    std::vector<IndexVector> profile_indices_;
    std::vector<std::string> warnings_;
};

/// Variable-coalition variant: every profile carries its own family and
/// per-attribute relations.
struct ETildeComponent {
    Alternative profile;
    CoalitionFamily family;
    std::vector<FiniteRelation> s;
    std::vector<FiniteRelation> v;
};

class ModelETilde {
public:
    ModelETilde(ProductSpace space, std::vector<ETildeComponent> components);

    const ProductSpace& space() const { return space_; }
    const std::vector<ETildeComponent>& components() const { return components_; }
    bool component_s(std::size_t k, const IndexVector& x, const IndexVector& y) const;
    Category assign(const IndexVector& x) const;

private:
    ProductSpace space_;
    std::vector<ETildeComponent> components_;
    std::vector<IndexVector> profile_indices_;
};

/// Total assignment over the space; flags (rather than rejects) a degenerate
/// one-class outcome. ResourceError over the cap.
PartitionTable materialize(const SortingModel& m, std::uint64_t cap = enumeration_cap());
PartitionTable materialize(const ModelERepresentation& r, std::uint64_t cap = enumeration_cap());
PartitionTable materialize(const ModelETilde& r, std::uint64_t cap = enumeration_cap());

}  // namespace etri
