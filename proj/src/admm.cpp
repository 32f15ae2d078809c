#include "parityproj/admm.hpp"

#include <algorithm>
#include <cmath>
#include <stdexcept>
#include <utility>

#include "parityproj/baselines.hpp"
#include "parityproj/fix_projection.hpp"
#include "parityproj/oracle.hpp"

namespace parityproj {

const char* to_string(DecodeStatus status) {
    switch (status) {
    case DecodeStatus::ConvergedIntegral: return "converged-integral";
    case DecodeStatus::ConvergedFractional: return "converged-fractional";
    case DecodeStatus::IterLimit: return "iteration-limit";
    }
    return "?";
}

RealVec awgn_llr(std::span<const double> received, double sigma) {
    if (sigma <= 0.0) throw std::invalid_argument("awgn_llr: sigma must be positive");
    RealVec llr(received.size());
    const double scale = 2.0 / (sigma * sigma);
    for (std::size_t i = 0; i < received.size(); ++i) llr[i] = scale * received[i];
    return llr;
}

RowProjector make_row_projector(ProjectionAlgo algo) {
    switch (algo) {
    case ProjectionAlgo::Fix:
        return [ws = FixWorkspace{}](std::span<const double> t) mutable {
            return project(t, ParityKind::Even, ws).z;
        };
    case ProjectionAlgo::ZhangSiegel:
        return [](std::span<const double> t) { return project_zhang_siegel(t, ParityKind::Even); };
    case ProjectionAlgo::WassonDraper:
        return [](std::span<const double> t) { return project_wasson_draper(t, ParityKind::Even); };
    }
    throw std::invalid_argument("make_row_projector: unknown algorithm");
}

RowProjector make_oracle_row_projector() {
    return [](std::span<const double> t) { return oracle::project(t, ParityKind::Even); };
}

DecodeResult decode(const RealVec& llr, const ParityCheckMatrix& h, const DecoderConfig& cfg,
                    const RowProjector& projector, const IterationCallback& callback) {
    const int n = h.n();
    const int m = h.m();
    if (static_cast<int>(llr.size()) != n)
        throw std::invalid_argument("decode: llr length does not match the code length");
    for (int i = 0; i < n; ++i)
        if (h.col_degree(i) < 1)
            throw std::invalid_argument("decode: variable " + std::to_string(i + 1) +
                                        " appears in no check");
    if (!(cfg.rho > 0.0)) throw std::invalid_argument("decode: rho must be positive");
    if (cfg.max_iterations < 1) throw std::invalid_argument("decode: max_iterations must be >= 1");
    if (!(cfg.primal_tolerance > 0.0) || !(cfg.dual_tolerance > 0.0))
        throw std::invalid_argument("decode: tolerances must be positive");

    const RowProjector proj = projector ? projector : make_row_projector(ProjectionAlgo::Fix);

    std::vector<RealVec> z(static_cast<std::size_t>(m));
    std::vector<RealVec> u(static_cast<std::size_t>(m));
    for (int j = 0; j < m; ++j) {
        z[static_cast<std::size_t>(j)].assign(static_cast<std::size_t>(h.row_degree(j)), 0.5);
        u[static_cast<std::size_t>(j)].assign(static_cast<std::size_t>(h.row_degree(j)), 0.0);
    }

    DecodeResult res;
    res.x.assign(static_cast<std::size_t>(n), 0.0);
    RealVec t;
    bool converged = false;

    for (int iter = 1; iter <= cfg.max_iterations; ++iter) {
        // x-update: per-variable average of replica/dual contributions minus
        // the scaled channel term.
        for (int i = 0; i < n; ++i) {
            const auto& checks = h.col(i);
            const auto& pos = h.col_positions(i);
            double acc = 0.0;
            for (std::size_t k = 0; k < checks.size(); ++k) {
                const auto j = static_cast<std::size_t>(checks[k]);
                const auto kk = static_cast<std::size_t>(pos[k]);
                acc += cfg.x_update_sign == XUpdateSign::StandardADMM ? z[j][kk] - u[j][kk]
                                                                      : u[j][kk] - z[j][kk];
            }
            res.x[static_cast<std::size_t>(i)] =
                (acc - llr[static_cast<std::size_t>(i)] / cfg.rho) /
                static_cast<double>(checks.size());
        }

        // z-update (projection of T_j x + u_j) and dual ascent on u.
        double primal2 = 0.0;
        double dual2 = 0.0;
        for (int j = 0; j < m; ++j) {
            const auto& row = h.row(j);
            const auto js = static_cast<std::size_t>(j);
            t.resize(row.size());
            for (std::size_t k = 0; k < row.size(); ++k)
                t[k] = res.x[static_cast<std::size_t>(row[k])] + u[js][k];
            RealVec znew = proj(t);
            for (std::size_t k = 0; k < row.size(); ++k) {
                const double dz = znew[k] - z[js][k];
                dual2 += dz * dz;
                const double r = res.x[static_cast<std::size_t>(row[k])] - znew[k];
                u[js][k] += r;
                primal2 += r * r;
            }
            z[js] = std::move(znew);
        }

        res.iterations = iter;
        res.primal_residual = std::sqrt(primal2);
        res.dual_residual = cfg.rho * std::sqrt(dual2);
        if (callback) callback(iter, std::span<const double>(res.x));
        if (res.primal_residual <= cfg.primal_tolerance &&
            res.dual_residual <= cfg.dual_tolerance) {
            converged = true;
            break;
        }
    }

    res.hard_decision.resize(static_cast<std::size_t>(n));
    for (int i = 0; i < n; ++i)
        res.hard_decision[static_cast<std::size_t>(i)] =
            res.x[static_cast<std::size_t>(i)] >= 0.5 ? 1 : 0;

    if (!converged) {
        res.status = DecodeStatus::IterLimit;
        return res;
    }
    double dev = 0.0;
    for (double v : res.x) {
        const double d0 = std::abs(v);
        const double d1 = std::abs(v - 1.0);
        dev = std::max(dev, std::min(d0, d1));
    }
    res.status = dev <= cfg.integrality_tolerance && h.syndrome_ok(res.hard_decision)
                     ? DecodeStatus::ConvergedIntegral
                     : DecodeStatus::ConvergedFractional;
    return res;
}

} // namespace parityproj
