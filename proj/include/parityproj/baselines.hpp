#pragma once

#include <span>

#include "parityproj/opcount.hpp"
#include "parityproj/types.hpp"

namespace parityproj {

/// Exact parity-polytope projection via cut search + sorted breakpoint walk
/// on the face in capped-simplex form.
RealVec project_zhang_siegel(std::span<const double> x, ParityKind kind);
RealVec project_zhang_siegel(std::span<const double> x, ParityKind kind, OpCounters& counters);

/// Exact parity-polytope projection via cut search + reduction of the face to
/// the probability simplex, projected with the sorted waterline scan.
RealVec project_wasson_draper(std::span<const double> x, ParityKind kind);
RealVec project_wasson_draper(std::span<const double> x, ParityKind kind, OpCounters& counters);

} // namespace parityproj
