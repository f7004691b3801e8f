#pragma once

// Exact solution of A c = t over Q and the search for a strictly positive
// solution.

#include <optional>
#include <span>
#include <vector>

#include "sharp/poly.hpp"

namespace sharp {

using RationalVector = std::vector<Rational>;

enum class SolutionStatus { Inconsistent, Unique, Affine };

struct SolutionSet {
    SolutionStatus status = SolutionStatus::Inconsistent;
    RationalVector particular;
    std::vector<RationalVector> nullspace_basis;

    bool consistent() const { return status != SolutionStatus::Inconsistent; }
};

/// Gauss-Jordan elimination over Q on the columns of A (all of length
/// t.size()). The particular solution sets free variables to zero; the
/// nullspace basis has one vector per free column.
SolutionSet solve_exact(std::span<const ColumnVector> a_cols, const ColumnVector& t);

/// A point of the solution set with every coordinate strictly positive, if
/// one exists. Unique sets are checked directly; affine sets are searched
/// exactly by Fourier-Motzkin elimination of the strict inequalities
/// particular + sum lambda_i v_i > 0. Empty vectors are vacuously positive.
std::optional<RationalVector> positive_solution(const SolutionSet& s);

}  // namespace sharp
