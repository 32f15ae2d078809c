#pragma once

#include <cstdint>
#include <vector>

namespace parityproj {

using RealVec = std::vector<double>;

enum class ParityKind : std::uint8_t { Even, Odd };

// One forbidden-set inequality theta' * x <= p with theta in {-1,+1}^d.
// For the even polytope the positive support has odd cardinality, for the
// odd polytope even cardinality; in both cases p = |{i : theta_i = +1}| - 1.
struct ForbiddenSetInequality {
    std::vector<std::int8_t> theta;
    int p = 0;

    int dim() const { return static_cast<int>(theta.size()); }
};

enum class TerminationReason : std::uint8_t {
    BoxFeasible,    // clamped input already satisfies the single candidate cut
    InteriorOfFace, // a hyperplane step landed inside the box
    DimensionOne,   // recursion bottomed out at a single live component
};

// Trace of one component-fixing projection. iterations counts hyperplane
// projection passes (a terminal dimension-one pass performs none), and
// fixes_per_iteration holds the per-pass fix counts of the passes that fixed
// at least one component, so every entry is positive. permutation maps final
// slot -> original index (0-based).
struct ProjectionTrace {
    std::uint32_t iterations = 0;
    std::vector<std::uint32_t> fixes_per_iteration;
    std::vector<std::int32_t> permutation;
    TerminationReason terminated_by = TerminationReason::BoxFeasible;
};

struct FixProjectionResult {
    RealVec z;
    ProjectionTrace trace;
};

const char* to_string(ParityKind kind);
const char* to_string(TerminationReason reason);

} // namespace parityproj
