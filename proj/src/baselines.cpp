#include "parityproj/baselines.hpp"

#include <stdexcept>

#include "parityproj/detail/baseline_impl.hpp"
#include "parityproj/detail/ops_policy.hpp"

namespace parityproj {

RealVec project_zhang_siegel(std::span<const double> x, ParityKind kind) {
    if (x.empty()) throw std::invalid_argument("project_zhang_siegel: empty input");
    detail::BaselineWorkspace ws;
    RealVec out;
    detail::NullOps ops;
    detail::zhang_siegel_impl(x, kind, ws, out, ops);
    return out;
}

RealVec project_zhang_siegel(std::span<const double> x, ParityKind kind, OpCounters& counters) {
    if (x.empty()) throw std::invalid_argument("project_zhang_siegel: empty input");
    detail::BaselineWorkspace ws;
    RealVec out;
    detail::CountingOps ops{&counters};
    detail::zhang_siegel_impl(x, kind, ws, out, ops);
    return out;
}

RealVec project_wasson_draper(std::span<const double> x, ParityKind kind) {
    if (x.empty()) throw std::invalid_argument("project_wasson_draper: empty input");
    detail::BaselineWorkspace ws;
    RealVec out;
    detail::NullOps ops;
    detail::wasson_draper_impl(x, kind, ws, out, ops);
    return out;
}

RealVec project_wasson_draper(std::span<const double> x, ParityKind kind, OpCounters& counters) {
    if (x.empty()) throw std::invalid_argument("project_wasson_draper: empty input");
    detail::BaselineWorkspace ws;
    RealVec out;
    detail::CountingOps ops{&counters};
    detail::wasson_draper_impl(x, kind, ws, out, ops);
    return out;
}

} // namespace parityproj
