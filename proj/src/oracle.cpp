#include "parityproj/oracle.hpp"

#include <algorithm>
#include <cassert>
#include <cmath>
#include <stdexcept>

#include "parityproj/detail/geometry_impl.hpp"
#include "parityproj/geometry.hpp"

namespace parityproj::oracle {

namespace {

double waterline_sum(const RealVec& y, double mu) {
    double s = 0.0;
    for (double v : y) s += detail::clamp01(v - mu);
    return s;
}

} // namespace

RealVec project_capped_simplex(const CappedSimplexInstance& inst) {
    const auto& y = inst.y;
    const double s = inst.s;
    const int d = static_cast<int>(y.size());
    if (d == 0) throw std::invalid_argument("project_capped_simplex: empty input");
    if (s < 0.0 || s > static_cast<double>(d))
        throw std::invalid_argument("project_capped_simplex: target sum out of range");

    RealVec out(y.size());
    if (s == 0.0) {
        std::fill(out.begin(), out.end(), 0.0);
        return out;
    }
    if (s == static_cast<double>(d)) {
        std::fill(out.begin(), out.end(), 1.0);
        return out;
    }

    // sum_i clamp01(y_i - mu) is piecewise linear and nonincreasing in mu with
    // breakpoints {y_i - 1, y_i}; locate the crossing segment, then solve the
    // linear piece for mu.
    RealVec bp;
    bp.reserve(2 * y.size());
    for (double v : y) {
        bp.push_back(v - 1.0);
        bp.push_back(v);
    }
    std::sort(bp.begin(), bp.end());

    // Largest k with waterline_sum(bp[k]) >= s; exists since the sum is d at
    // bp[0] and 0 at bp back, and 0 < s < d.
    int lo = 0;
    int hi = static_cast<int>(bp.size()) - 1;
    while (lo < hi) {
        const int mid = (lo + hi + 1) / 2;
        if (waterline_sum(y, bp[static_cast<std::size_t>(mid)]) >= s)
            lo = mid;
        else
            hi = mid - 1;
    }
    const double left = bp[static_cast<std::size_t>(lo)];
    const double right = bp[static_cast<std::size_t>(lo + 1)];

    double mu;
    if (left == right) {
        mu = left;
    } else {
        const double mid = 0.5 * (left + right);
        int n_one = 0;
        int n_free = 0;
        double sum_free = 0.0;
        for (double v : y) {
            const double w = v - mid;
            if (w > 1.0) {
                ++n_one;
            } else if (w >= 0.0) {
                ++n_free;
                sum_free += v;
            }
        }
        if (n_free == 0) {
            mu = left; // flat piece equal to s
        } else {
            mu = (sum_free - (s - static_cast<double>(n_one))) / static_cast<double>(n_free);
        }
    }

    for (std::size_t i = 0; i < y.size(); ++i) out[i] = detail::clamp01(y[i] - mu);
    return out;
}

RealVec project_face(std::span<const double> x, const ForbiddenSetInequality& ineq) {
    const std::size_t d = x.size();
    if (d != ineq.theta.size()) throw std::invalid_argument("project_face: dimension mismatch");
    // Face nonemptiness: the flipped frame has target sum d - 1 in [0, d].
    assert(static_cast<std::size_t>(ineq.p + 1) <= d);

    CappedSimplexInstance inst;
    inst.y.resize(d);
    for (std::size_t i = 0; i < d; ++i) inst.y[i] = ineq.theta[i] > 0 ? x[i] : 1.0 - x[i];
    inst.s = static_cast<double>(d) - 1.0;

    RealVec w = project_capped_simplex(inst);
    for (std::size_t i = 0; i < d; ++i)
        if (ineq.theta[i] < 0) w[i] = 1.0 - w[i];
    return w;
}

RealVec project(std::span<const double> x, ParityKind kind) {
    RealVec u = clamp_unit_box(x);
    const ForbiddenSetInequality ineq = cut_search(x, kind);
    double dot = 0.0;
    for (std::size_t i = 0; i < u.size(); ++i) dot += ineq.theta[i] > 0 ? u[i] : -u[i];
    if (dot <= static_cast<double>(ineq.p)) return u;
    return project_face(x, ineq);
}

} // namespace parityproj::oracle
