#pragma once

#include <span>

#include "parityproj/types.hpp"

namespace parityproj {

/// Componentwise projection onto [0,1]^d.
RealVec clamp_unit_box(std::span<const double> x);

/// Returns the single forbidden-set inequality that can be violated by
/// clamp_unit_box(x). theta_i = sgn(x_i - 0.5) with sgn(0) = -1, then the
/// component closest to 0.5 (after clamping; lowest index on ties) is flipped
/// if the positive support has the wrong parity. p = |{theta_i = +1}| - 1.
ForbiddenSetInequality cut_search(std::span<const double> x, ParityKind kind);

enum class MemberMode { FastSingleCut, ExhaustiveSmallD };

/// Membership test for the parity polytope. Requires x in [0,1]^d.
/// FastSingleCut checks only the cut-search facet; ExhaustiveSmallD checks
/// every forbidden-set inequality and throws std::invalid_argument for d > 20.
/// Facet inequalities are allowed slack `tol` (useful for computed points
/// that sit on a facet up to roundoff).
bool is_member(std::span<const double> x, ParityKind kind,
               MemberMode mode = MemberMode::FastSingleCut, double tol = 0.0);

} // namespace parityproj
