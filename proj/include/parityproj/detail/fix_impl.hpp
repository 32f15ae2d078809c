#pragma once

#include <algorithm>
#include <cassert>
#include <cstdint>
#include <numeric>
#include <span>
#include <vector>

#include "parityproj/detail/geometry_impl.hpp"
#include "parityproj/types.hpp"

namespace parityproj {

// Reusable scratch for the component-fixing projection; one per call site
// allows allocation-free batch use.
struct FixWorkspace {
    std::vector<double> x;
    std::vector<std::int8_t> theta;
    std::vector<double> z;
    std::vector<double> v;
    std::vector<std::int32_t> q;

    void resize(std::size_t d) {
        x.resize(d);
        theta.resize(d);
        z.resize(d);
        v.resize(d);
        q.resize(d);
    }
};

namespace detail {

// Test/trace instrumentation hooks. Slot state passed by span is only valid
// for the duration of the callback.
struct NullFixObserver {
    // After the hyperplane step of a pass: live window is slot range [f, d).
    void on_pass(std::span<const double> /*x*/, std::span<const std::int8_t> /*theta*/,
                 int /*p*/, std::span<const double> /*v*/,
                 std::span<const std::int32_t> /*q*/, int /*f*/) {}
    // A component was fixed: it occupied `slot` before the swap scan reached
    // it and corresponds to original index `orig`.
    void on_fix(int /*slot*/, int /*orig*/, double /*value*/) {}
    void on_pass_end(int /*fixes*/, int /*live_after*/) {}
};

// Euclidean projection onto the parity polytope by iterated hyperplane
// projection and component fixing. Works in a permuted slot space: fixed
// components are swapped to the front, slot f is the first live one, and q
// maps slot -> original index. z is produced in slot space and scattered back
// through q at the end.
template <class Ops, class Observer>
void fix_project_impl(std::span<const double> input, ParityKind kind, FixWorkspace& ws,
                      RealVec& z_out, ProjectionTrace& trace, Ops&& ops, Observer&& obs) {
    const int d = static_cast<int>(input.size());
    assert(d >= 1);
    ws.resize(static_cast<std::size_t>(d));
    auto& x = ws.x;
    auto& th = ws.theta;
    auto& z = ws.z;
    auto& v = ws.v;
    auto& q = ws.q;
    std::copy(input.begin(), input.end(), x.begin());
    std::iota(q.begin(), q.end(), 0);
    trace = ProjectionTrace{};

    // Box projection + cut search + single membership check. v doubles as
    // the clamp buffer here; it is overwritten by the first hyperplane pass.
    clamp_unit_box_impl(input, std::span<double>(v), ops);
    int p = cut_search_clamped(std::span<const double>(v), kind, std::span<std::int8_t>(th), ops);
    const double dot_u = signed_sum(std::span<const double>(v), std::span<const std::int8_t>(th), ops);
    ops.low(1);
    if (dot_u <= static_cast<double>(p)) {
        z_out.assign(v.begin(), v.end());
        trace.terminated_by = TerminationReason::BoxFeasible;
        trace.permutation.assign(q.begin(), q.end());
        return;
    }

    int f = 0;
    int l = d;
    while (true) {
        if (l == 1) {
            z[f] = th[f] > 0 ? 0.0 : 1.0;
            trace.terminated_by = TerminationReason::DimensionOne;
            break;
        }
        // Project the live window onto theta' w = p.
        double dot = 0.0;
        for (int i = f; i < d; ++i) {
            ops.low(1);
            dot = th[i] > 0 ? dot + x[i] : dot - x[i];
        }
        ops.low(1);
        const double num = dot - static_cast<double>(p);
        ops.div(1);
        const double step = num / static_cast<double>(l);
        for (int i = f; i < d; ++i) {
            ops.low(1);
            v[i] = th[i] > 0 ? x[i] - step : x[i] + step;
        }
        obs.on_pass(std::span<const double>(x.data() + f, static_cast<std::size_t>(d - f)),
                    std::span<const std::int8_t>(th.data() + f, static_cast<std::size_t>(d - f)),
                    p,
                    std::span<const double>(v.data() + f, static_cast<std::size_t>(d - f)),
                    std::span<const std::int32_t>(q), f);
        ++trace.iterations;

        // Fix every component the hyperplane point pushed past its bound
        // (strict comparisons, no epsilon). Fixed components swap to slot f;
        // v[i] and th[i] still describe the pass-start occupant of slot i
        // because each slot is visited at most once.
        const int fold = f;
        for (int i = fold; i < d; ++i) {
            ops.low(1);
            if (v[i] > 1.0) {
                if (th[i] > 0) {
                    std::swap(q[f], q[i]);
                    x[i] = x[f];
                    th[i] = th[f];
                    z[f] = 1.0;
                    obs.on_fix(i, q[f], 1.0);
                    ++f;
                    --p;
                }
            } else if (v[i] < 0.0) {
                if (th[i] < 0) {
                    std::swap(q[f], q[i]);
                    x[i] = x[f];
                    th[i] = th[f];
                    z[f] = 0.0;
                    obs.on_fix(i, q[f], 0.0);
                    ++f;
                }
            }
        }
        const int fixes = f - fold;
        obs.on_pass_end(fixes, d - f);
        if (fixes == 0) {
            for (int i = fold; i < d; ++i) z[i] = v[i];
            trace.terminated_by = TerminationReason::InteriorOfFace;
            break;
        }
        trace.fixes_per_iteration.push_back(static_cast<std::uint32_t>(fixes));
        l = d - f;
        assert(l >= 1);
    }

    z_out.resize(static_cast<std::size_t>(d));
    for (int s = 0; s < d; ++s) z_out[static_cast<std::size_t>(q[s])] = z[s];
    trace.permutation.assign(q.begin(), q.end());
}

} // namespace detail
} // namespace parityproj
