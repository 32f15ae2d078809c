#pragma once

#include <cstdint>
#include <span>

#include "parityproj/types.hpp"

namespace parityproj {

// Operation-counting policy
// -------------------------
// Counted:
//   divisions        real / real (or real / integer cast)
//   multiplications  real * real (or integer * real, e.g. zeta*t in a
//                    rewritten comparison delta/zeta > t)
//   low_complexity   real additions, subtractions and negations; fused
//                    a +/- b realizing a + theta_i*b (one op, the branch on
//                    theta is free); comparisons between two reals or between
//                    a real and a nonzero constant (0.5 and 1 included)
// Not counted:
//   comparisons with 0, max(x, 0), abs (sign-bit class), floor, assignments
//   (including to 0/1/-1 and swaps), comparisons of theta entries with +-1
//   (boolean storage), and all integer bookkeeping (loop indices, cardinality
//   counters, updates of p).
struct OpCounters {
    std::uint64_t divisions = 0;
    std::uint64_t multiplications = 0;
    std::uint64_t low_complexity = 0;

    std::uint64_t total() const { return divisions + multiplications + low_complexity; }

    OpCounters& operator+=(const OpCounters& o) {
        divisions += o.divisions;
        multiplications += o.multiplications;
        low_complexity += o.low_complexity;
        return *this;
    }
    friend bool operator==(const OpCounters&, const OpCounters&) = default;
};

enum class ProjectionAlgo : std::uint8_t { Fix, ZhangSiegel, WassonDraper };

const char* to_string(ProjectionAlgo algo);

struct CountedProjection {
    RealVec z;
    OpCounters counters;
};

// Runs the chosen algorithm with instrumented arithmetic. The counted and
// uncounted paths share one code path, so z is bit-identical either way.
CountedProjection counted_projection(ProjectionAlgo algo, std::span<const double> x,
                                     ParityKind kind);

} // namespace parityproj
