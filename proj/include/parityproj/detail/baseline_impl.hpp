#pragma once

#include <cassert>
#include <cstdint>
#include <span>
#include <utility>
#include <vector>

#include "parityproj/detail/geometry_impl.hpp"
#include "parityproj/types.hpp"

namespace parityproj::detail {

// Quicksort, descending, Lomuto partition with the last element as pivot.
// Element comparisons are the counted operation; swaps are free.
template <class Ops>
void quicksort_desc(double* a, int lo, int hi, Ops&& ops) {
    while (lo < hi) {
        const double pivot = a[hi];
        int store = lo;
        for (int j = lo; j < hi; ++j) {
            ops.low(1);
            if (a[j] > pivot) {
                std::swap(a[store], a[j]);
                ++store;
            }
        }
        std::swap(a[store], a[hi]);
        // Recurse into the smaller side to bound stack depth.
        if (store - lo < hi - store) {
            quicksort_desc(a, lo, store - 1, ops);
            lo = store + 1;
        } else {
            quicksort_desc(a, store + 1, hi, ops);
            hi = store - 1;
        }
    }
}

template <class Ops>
void quicksort_desc(std::span<double> a, Ops&& ops) {
    if (!a.empty()) quicksort_desc(a.data(), 0, static_cast<int>(a.size()) - 1, ops);
}

struct BaselineWorkspace {
    std::vector<std::int8_t> theta;
    std::vector<double> y;
    std::vector<double> sorted;
    std::vector<double> lo;

    void resize(std::size_t d) {
        theta.resize(d);
        y.resize(d);
        sorted.resize(d);
        lo.resize(d);
    }
};

// Shared easy-case preamble: box projection, cut search, membership check.
// Returns true if the clamped input is already a member (out filled).
template <class Ops>
bool easy_case(std::span<const double> x, ParityKind kind, BaselineWorkspace& ws,
               RealVec& out, int& p, Ops&& ops) {
    const std::size_t d = x.size();
    ws.resize(d);
    out.resize(d);
    clamp_unit_box_impl(x, std::span<double>(out), ops);
    p = cut_search_clamped(std::span<const double>(out), kind,
                           std::span<std::int8_t>(ws.theta), ops);
    const double dot = signed_sum(std::span<const double>(out),
                                  std::span<const std::int8_t>(ws.theta), ops);
    ops.low(1);
    return dot <= static_cast<double>(p);
}

// Face projection via a descending walk over the 2d breakpoints
// {y_(k)} (component enters the free set) and {y_(k) - 1} (component caps at
// 1) of the waterline sum. One sort of d elements; the two breakpoint streams
// are already sorted afterwards and are merged on the fly. Candidate-segment
// tests run in multiplication form (delta > zeta * t, never delta/zeta > t);
// the single division computes the final waterline.
template <class Ops>
void zhang_siegel_impl(std::span<const double> x, ParityKind kind, BaselineWorkspace& ws,
                       RealVec& out, Ops&& ops) {
    const int d = static_cast<int>(x.size());
    assert(d >= 1);
    int p = 0;
    if (easy_case(x, kind, ws, out, p, ops)) return;

    // Map the face onto {w' in [0,1]^d : sum w' = s}, s = d - 1.
    auto& th = ws.theta;
    auto& y = ws.y;
    for (int i = 0; i < d; ++i) {
        if (th[i] > 0) {
            y[i] = x[i];
        } else {
            ops.low(1);
            y[i] = 1.0 - x[i];
        }
    }
    const int s = d - 1;

    auto& hi = ws.sorted;
    std::copy(y.begin(), y.end(), hi.begin());
    quicksort_desc(std::span<double>(hi), ops);
    auto& lo = ws.lo;
    for (int i = 0; i < d; ++i) {
        ops.low(1);
        lo[i] = hi[i] - 1.0;
    }

    int ih = 0;
    int il = 0;
    int at_one = 0;
    int nfree = 0;
    double sumfree = 0.0;
    double mu = 0.0;
    bool found = false;
    while (ih < d || il < d) {
        // Next breakpoint below the current segment.
        bool take_hi;
        if (ih >= d) {
            take_hi = false;
        } else if (il >= d) {
            take_hi = true;
        } else {
            ops.low(1);
            take_hi = hi[ih] >= lo[il];
        }
        const double t = take_hi ? hi[ih] : lo[il];
        if (nfree > 0) {
            ops.low(1);
            const double delta = sumfree - static_cast<double>(s - at_one);
            ops.mul(1);
            ops.low(1);
            if (delta > static_cast<double>(nfree) * t) {
                ops.div(1);
                mu = delta / static_cast<double>(nfree);
                found = true;
                break;
            }
        }
        if (take_hi) {
            ++nfree;
            ops.low(1);
            sumfree += hi[ih];
            ++ih;
        } else {
            --nfree;
            ++at_one;
            ops.low(1);
            sumfree -= hi[il] /* the y value whose lower breakpoint this is */;
            ++il;
        }
    }
    assert(found); // s = d - 1 < d, so the waterline sits above the lowest breakpoint
    if (!found) mu = lo[d - 1];

    for (int i = 0; i < d; ++i) {
        ops.low(1);
        double w = y[i] - mu;
        if (w < 0.0) w = 0.0;
        ops.low(1);
        if (w > 1.0) w = 1.0;
        if (th[i] > 0) {
            out[i] = w;
        } else {
            ops.low(1);
            out[i] = 1.0 - w;
        }
    }
}

// Face projection through the probability simplex: reflecting the face frame
// (w'' = 1 - w') maps {sum w' = d - 1} onto {w'' >= 0, sum w'' = 1}, whose
// projection is the classic sorted waterline. The rho scan runs in
// multiplication form (i * y_(i) vs prefix sum); one division at the end.
template <class Ops>
void wasson_draper_impl(std::span<const double> x, ParityKind kind, BaselineWorkspace& ws,
                        RealVec& out, Ops&& ops) {
    const int d = static_cast<int>(x.size());
    assert(d >= 1);
    int p = 0;
    if (easy_case(x, kind, ws, out, p, ops)) return;

    auto& th = ws.theta;
    auto& y = ws.y;
    for (int i = 0; i < d; ++i) {
        if (th[i] > 0) {
            ops.low(1);
            y[i] = 1.0 - x[i];
        } else {
            y[i] = x[i];
        }
    }

    auto& srt = ws.sorted;
    std::copy(y.begin(), y.end(), srt.begin());
    quicksort_desc(std::span<double>(srt), ops);

    // rho = max{i : i*y_(i) > S_i - 1}, taken literally: every index is
    // tested, as in the reference pseudocode, with the product form i*y_(i)
    // standing in for the division.
    double prefix = 0.0;
    double s_rho = 0.0;
    int rho = 0;
    for (int i = 1; i <= d; ++i) {
        ops.low(1);
        prefix += srt[i - 1];
        ops.mul(1);
        const double lhs = static_cast<double>(i) * srt[i - 1];
        ops.low(2); // S_i - 1 and the comparison
        if (lhs > prefix - 1.0) {
            rho = i;
            s_rho = prefix;
        }
    }
    assert(rho >= 1);
    ops.low(1);
    ops.div(1);
    const double tau = (s_rho - 1.0) / static_cast<double>(rho);

    for (int i = 0; i < d; ++i) {
        ops.low(1);
        double w = y[i] - tau;
        if (w < 0.0) w = 0.0;
        if (th[i] > 0) {
            ops.low(1);
            out[i] = 1.0 - w;
        } else {
            out[i] = w;
        }
    }
}

} // namespace parityproj::detail
