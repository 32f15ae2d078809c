#pragma once

#include <cassert>
#include <cmath>
#include <cstdint>
#include <span>

#include "parityproj/types.hpp"

namespace parityproj::detail {

inline double clamp01(double v) { return v < 0.0 ? 0.0 : (v > 1.0 ? 1.0 : v); }

// Box projection. max(x,0) is free, the min-with-1 comparison is counted.
template <class Ops>
void clamp_unit_box_impl(std::span<const double> x, std::span<double> out, Ops&& ops) {
    for (std::size_t i = 0; i < x.size(); ++i) {
        double v = x[i] > 0.0 ? x[i] : 0.0;
        ops.low(1);
        out[i] = v > 1.0 ? 1.0 : v;
    }
}

// Cut search on an already box-clamped vector u. Writes theta, returns p.
//
// Step 1 assigns theta_i = sgn(u_i - 0.5) with sgn(0) = -1. Step 2 flips the
// component closest to 0.5 (lowest index on ties) when the positive-support
// cardinality has the wrong parity for the requested polytope. Distances are
// measured on the clamped vector, which makes the result invariant under
// pre-clamping of the input.
template <class Ops>
int cut_search_clamped(std::span<const double> u, ParityKind kind,
                       std::span<std::int8_t> theta, Ops&& ops) {
    const int d = static_cast<int>(u.size());
    assert(d >= 1);
    int plus = 0;
    for (int i = 0; i < d; ++i) {
        ops.low(1);
        const bool up = u[i] > 0.5;
        theta[i] = up ? std::int8_t{1} : std::int8_t{-1};
        plus += up;
    }
    const bool odd = (plus & 1) != 0;
    const bool wrong = (kind == ParityKind::Even) ? !odd : odd;
    if (wrong) {
        ops.low(1);
        double best = std::abs(u[0] - 0.5);
        int best_i = 0;
        for (int i = 1; i < d; ++i) {
            ops.low(1);
            const double m = std::abs(u[i] - 0.5);
            ops.low(1);
            if (m < best) {
                best = m;
                best_i = i;
            }
        }
        theta[best_i] = static_cast<std::int8_t>(-theta[best_i]);
        plus += theta[best_i];
    }
    return plus - 1;
}

// theta' * v for theta in {-1,+1}^d; each fused accumulate is one low op.
template <class Ops>
double signed_sum(std::span<const double> v, std::span<const std::int8_t> theta, Ops&& ops) {
    double s = 0.0;
    for (std::size_t i = 0; i < v.size(); ++i) {
        ops.low(1);
        s = theta[i] > 0 ? s + v[i] : s - v[i];
    }
    return s;
}

} // namespace parityproj::detail
