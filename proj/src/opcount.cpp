#include "parityproj/opcount.hpp"

#include "parityproj/baselines.hpp"
#include "parityproj/fix_projection.hpp"

namespace parityproj {

const char* to_string(ProjectionAlgo algo) {
    switch (algo) {
    case ProjectionAlgo::Fix: return "Fix";
    case ProjectionAlgo::ZhangSiegel: return "ZhangSiegel";
    case ProjectionAlgo::WassonDraper: return "WassonDraper";
    }
    return "?";
}

CountedProjection counted_projection(ProjectionAlgo algo, std::span<const double> x,
                                     ParityKind kind) {
    CountedProjection res;
    switch (algo) {
    case ProjectionAlgo::Fix:
        res.z = project_counted(x, kind, res.counters).z;
        break;
    case ProjectionAlgo::ZhangSiegel:
        res.z = project_zhang_siegel(x, kind, res.counters);
        break;
    case ProjectionAlgo::WassonDraper:
        res.z = project_wasson_draper(x, kind, res.counters);
        break;
    }
    return res;
}

} // namespace parityproj
