#include "parityproj/fix_projection.hpp"

#include <stdexcept>

#include "parityproj/detail/ops_policy.hpp"

namespace parityproj {

RealVec project_hyperplane(std::span<const double> x, const ForbiddenSetInequality& ineq) {
    if (x.empty()) throw std::invalid_argument("project_hyperplane: empty input");
    if (x.size() != ineq.theta.size())
        throw std::invalid_argument("project_hyperplane: dimension mismatch");
    const double d = static_cast<double>(x.size());
    double dot = 0.0;
    for (std::size_t i = 0; i < x.size(); ++i) dot += ineq.theta[i] > 0 ? x[i] : -x[i];
    const double step = (dot - static_cast<double>(ineq.p)) / d;
    RealVec v(x.size());
    for (std::size_t i = 0; i < x.size(); ++i)
        v[i] = ineq.theta[i] > 0 ? x[i] - step : x[i] + step;
    return v;
}

FixProjectionResult project(std::span<const double> x, ParityKind kind, FixWorkspace& ws) {
    if (x.empty()) throw std::invalid_argument("project: empty input");
    FixProjectionResult res;
    detail::NullOps ops;
    detail::NullFixObserver obs;
    detail::fix_project_impl(x, kind, ws, res.z, res.trace, ops, obs);
    return res;
}

FixProjectionResult project(std::span<const double> x, ParityKind kind) {
    FixWorkspace ws;
    return project(x, kind, ws);
}

FixProjectionResult project_counted(std::span<const double> x, ParityKind kind,
                                    OpCounters& counters, FixWorkspace& ws) {
    if (x.empty()) throw std::invalid_argument("project: empty input");
    FixProjectionResult res;
    detail::CountingOps ops{&counters};
    detail::NullFixObserver obs;
    detail::fix_project_impl(x, kind, ws, res.z, res.trace, ops, obs);
    return res;
}

FixProjectionResult project_counted(std::span<const double> x, ParityKind kind,
                                    OpCounters& counters) {
    FixWorkspace ws;
    return project_counted(x, kind, counters, ws);
}

} // namespace parityproj
