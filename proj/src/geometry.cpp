#include "parityproj/geometry.hpp"

#include <bit>
#include <cstdint>
#include <stdexcept>

#include "parityproj/detail/geometry_impl.hpp"
#include "parityproj/detail/ops_policy.hpp"

namespace parityproj {

const char* to_string(ParityKind kind) {
    return kind == ParityKind::Even ? "even" : "odd";
}

const char* to_string(TerminationReason reason) {
    switch (reason) {
    case TerminationReason::BoxFeasible: return "box-feasible";
    case TerminationReason::InteriorOfFace: return "face-interior";
    case TerminationReason::DimensionOne: return "dimension-one";
    }
    return "?";
}

RealVec clamp_unit_box(std::span<const double> x) {
    RealVec out(x.size());
    detail::NullOps ops;
    detail::clamp_unit_box_impl(x, std::span<double>(out), ops);
    return out;
}

ForbiddenSetInequality cut_search(std::span<const double> x, ParityKind kind) {
    if (x.empty()) throw std::invalid_argument("cut_search: empty input");
    ForbiddenSetInequality ineq;
    ineq.theta.resize(x.size());
    RealVec u(x.size());
    detail::NullOps ops;
    detail::clamp_unit_box_impl(x, std::span<double>(u), ops);
    ineq.p = detail::cut_search_clamped(std::span<const double>(u), kind,
                                        std::span<std::int8_t>(ineq.theta), ops);
    return ineq;
}

namespace {

bool member_single_cut(std::span<const double> x, ParityKind kind, double tol) {
    const ForbiddenSetInequality ineq = cut_search(x, kind);
    double dot = 0.0;
    for (std::size_t i = 0; i < x.size(); ++i) dot += ineq.theta[i] > 0 ? x[i] : -x[i];
    return dot <= static_cast<double>(ineq.p) + tol;
}

// Gray-code walk over all sign patterns; subsets of matching parity are the
// forbidden-set family of the requested polytope.
bool member_exhaustive(std::span<const double> x, ParityKind kind, double tol) {
    const int d = static_cast<int>(x.size());
    if (d > 20) throw std::invalid_argument("is_member: exhaustive mode supports d <= 20");
    double total = 0.0;
    for (double v : x) total += v;
    const int want_odd = kind == ParityKind::Even ? 1 : 0;

    // signed = theta' x for the current subset V (theta_i = +1 iff i in V).
    double signed_sum = -total;
    int cardinality = 0;
    std::uint32_t mask = 0;
    const std::uint32_t count = 1u << d;
    for (std::uint32_t g = 0;; ++g) {
        if ((cardinality & 1) == want_odd) {
            if (signed_sum - static_cast<double>(cardinality - 1) > tol) return false;
        }
        if (g + 1 == count) break;
        const int bit = std::countr_zero(g + 1);
        const std::uint32_t flipped = mask ^ (1u << bit);
        if (flipped & (1u << bit)) {
            signed_sum += 2.0 * x[static_cast<std::size_t>(bit)];
            ++cardinality;
        } else {
            signed_sum -= 2.0 * x[static_cast<std::size_t>(bit)];
            --cardinality;
        }
        mask = flipped;
    }
    return true;
}

} // namespace

bool is_member(std::span<const double> x, ParityKind kind, MemberMode mode, double tol) {
    if (x.empty()) throw std::invalid_argument("is_member: empty input");
    return mode == MemberMode::FastSingleCut ? member_single_cut(x, kind, tol)
                                             : member_exhaustive(x, kind, tol);
}

} // namespace parityproj
