#pragma once

#include <span>

#include "parityproj/types.hpp"

namespace parityproj {
// Reference projections built on an exact breakpoint search. Sorting and the
// O(d^2) worst case are acceptable here; this path exists to validate the
// component-fixing algorithm, not to compete with it.
namespace oracle {

struct CappedSimplexInstance {
    RealVec y;
    double s = 0.0; // target sum, 0 <= s <= d
};

/// Exact Euclidean projection onto {w in [0,1]^d : sum w = s}. The solution
/// is w_i = clamp01(y_i - mu) with mu located by scanning the sorted 2d
/// breakpoints {y_i, y_i - 1} of the piecewise-linear sum.
RealVec project_capped_simplex(const CappedSimplexInstance& inst);

/// Exact projection onto the face {w in [0,1]^d : theta' w = p}. Flipping the
/// negative-support coordinates (y_i = x_i or 1 - x_i) is an isometry that
/// maps the face onto {w' in [0,1]^d : sum w' = d - 1}.
RealVec project_face(std::span<const double> x, const ForbiddenSetInequality& ineq);

/// Exact projection onto the parity polytope: box-clamp, cut search, and if
/// the single candidate facet is violated, project onto it.
RealVec project(std::span<const double> x, ParityKind kind);

} // namespace oracle
} // namespace parityproj
