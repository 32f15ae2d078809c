#pragma once

#include <cstdint>
#include <functional>
#include <span>
#include <vector>

#include "parityproj/alist.hpp"
#include "parityproj/opcount.hpp"
#include "parityproj/types.hpp"

namespace parityproj {

enum class XUpdateSign : std::uint8_t {
    StandardADMM, // x_i = (sum_j (z_j - u_j)_i - lambda_i/rho) / d_i
    PaperLiteral, // keeps the (u_j - z_j) ordering of the printed formula
};

struct DecoderConfig {
    double rho = 1.0;
    int max_iterations = 1000;
    double primal_tolerance = 1e-5;
    double dual_tolerance = 1e-5;
    XUpdateSign x_update_sign = XUpdateSign::StandardADMM;
    // ConvergedIntegral additionally requires every x_i within this distance
    // of {0,1} and a clean syndrome of the hard decision.
    double integrality_tolerance = 1e-3;
};

enum class DecodeStatus : std::uint8_t { ConvergedIntegral, ConvergedFractional, IterLimit };

const char* to_string(DecodeStatus status);

struct DecodeResult {
    std::vector<std::uint8_t> hard_decision; // x_i >= 0.5
    DecodeStatus status = DecodeStatus::IterLimit;
    int iterations = 0;
    RealVec x;
    double primal_residual = 0.0;
    double dual_residual = 0.0;
};

/// Replica projection onto the even parity polytope of the row degree.
using RowProjector = std::function<RealVec(std::span<const double>)>;

/// Observes x after each ADMM iteration.
using IterationCallback = std::function<void(int iteration, std::span<const double> x)>;

RowProjector make_row_projector(ProjectionAlgo algo);
RowProjector make_oracle_row_projector();

/// BPSK over AWGN: bit 0 -> +1, bit 1 -> -1, lambda_i = 2 y_i / sigma^2.
RealVec awgn_llr(std::span<const double> received, double sigma);

/// ADMM LP decoding: x-update from the replica/dual averages, z-update by
/// projection onto the row parity polytopes, dual ascent on u. Stops when
/// both residuals meet their tolerances or at max_iterations.
DecodeResult decode(const RealVec& llr, const ParityCheckMatrix& h,
                    const DecoderConfig& cfg = {}, const RowProjector& projector = {},
                    const IterationCallback& callback = {});

} // namespace parityproj
