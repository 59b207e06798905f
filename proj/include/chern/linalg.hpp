#pragma once

#include <optional>
#include <vector>

#include "chern/rational.hpp"

namespace chern {

enum class Pivoting { FirstFeasible, Reverse };

/// Solves A x = b over the exact rationals, A given by rows. Returns any
/// solution (free variables set to 0, pivot columns chosen left-to-right or
/// right-to-left), or nullopt when the system is inconsistent.
std::optional<std::vector<Rat>> solve_linear_system(
    std::vector<std::vector<Rat>> rows, std::vector<Rat> rhs,
    Pivoting pivoting = Pivoting::FirstFeasible);

/// Expresses target as a rational combination of the given vectors; nullopt
/// when target is outside their span.
std::optional<std::vector<Rat>> express_in_span(
    const std::vector<std::vector<Rat>>& vectors, const std::vector<Rat>& target);

}  // namespace chern
