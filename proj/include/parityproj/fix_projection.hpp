#pragma once

#include <span>

#include "parityproj/detail/fix_impl.hpp"
#include "parityproj/opcount.hpp"
#include "parityproj/types.hpp"

namespace parityproj {

/// Projection of x onto the hyperplane theta' w = p:
///   v = x - ((theta' x - p) / d) * theta.
RealVec project_hyperplane(std::span<const double> x, const ForbiddenSetInequality& ineq);

/// Euclidean projection onto the even/odd parity polytope of dimension
/// x.size() by component fixing: one cut search up front, then alternating
/// hyperplane projections and fixing of components pushed past their bounds,
/// shrinking the live window until it lies in the box. No sorting, no
/// multiplications, one division per hyperplane pass.
FixProjectionResult project(std::span<const double> x, ParityKind kind);
FixProjectionResult project(std::span<const double> x, ParityKind kind, FixWorkspace& ws);

/// Same projection with instrumented arithmetic accumulated into `counters`.
FixProjectionResult project_counted(std::span<const double> x, ParityKind kind,
                                    OpCounters& counters);
FixProjectionResult project_counted(std::span<const double> x, ParityKind kind,
                                    OpCounters& counters, FixWorkspace& ws);

} // namespace parityproj
