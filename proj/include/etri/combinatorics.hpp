#pragma once

#include <cstdint>
#include <vector>

#include "etri/rational.hpp"
#include "etri/scales.hpp"

namespace etri {

/// Chain lengths per attribute for antichain counting.
struct ChainProfile {
    std::vector<std::uint32_t> lengths;  // all >= 1
};

/// binom(n, k) with the truncation convention: 0 when k < 0, n < 0 or n < k.
BigInt binomial(std::int64_t n, std::int64_t k);

/// Maximal antichain size in a product of chains, by the closed form
/// sum over I of (-1)^|I| binom(h - m_I - 1, n - 1), h = floor((n + sum m)/2).
/// Terms with m_I past the boundary vanish under the binomial convention.
BigInt max_antichain_size(const ChainProfile& chains);

/// binom(n, ceil(n/2)): the maximal number of minimal majority coalitions.
BigInt sperner_number(std::uint32_t n);

/// Oracle: maximal antichain size as the largest rank-level width of the
/// (ranked) product of chains. ResourceError past the cap.
BigInt brute_force_max_antichain(const ChainProfile& chains, std::uint64_t cap = 1u << 20);
BigInt brute_force_max_antichain(const ProductSpace& space, std::uint64_t cap = 1u << 20);

/// Number of monotone boolean functions on n variables, by backtracking
/// over the cube in topological order. ResourceError for n > 5.
BigInt count_monotone_functions(std::uint32_t n);

/// Dominance-respecting twofold partitions of {0,1}^n with both classes
/// nonempty: monotone functions minus the two constants.
BigInt count_monotone_partitions(std::uint32_t n);

}  // namespace etri
