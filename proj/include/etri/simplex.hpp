#pragma once

#include <vector>

#include "etri/rational.hpp"

namespace etri {

/// maximize objective . x  subject to  rows . x <= rhs, x >= 0.
struct LinearProgram {
    std::vector<std::vector<Rational>> rows;
    std::vector<Rational> rhs;  // must be nonnegative (slack basis starts feasible)
    std::vector<Rational> objective;
};

enum class SimplexStatus { optimal, unbounded };

struct SimplexResult {
    SimplexStatus status = SimplexStatus::optimal;
    Rational objective_value;
    std::vector<Rational> solution;
};

/// Dense exact-rational simplex with Bland's rule (terminates under degeneracy).
SimplexResult solve_simplex(const LinearProgram& lp);

}  // namespace etri
