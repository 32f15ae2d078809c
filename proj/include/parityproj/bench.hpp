#pragma once

#include <cstdint>
#include <string>
#include <vector>

#include "parityproj/opcount.hpp"

namespace parityproj {

struct BenchSpec {
    std::vector<ProjectionAlgo> algorithms{ProjectionAlgo::Fix, ProjectionAlgo::ZhangSiegel,
                                           ProjectionAlgo::WassonDraper};
    int degree_min = 2;
    int degree_max = 50;          // degrees stay within [2, 64]
    double input_half_range = 5.0; // components drawn uniform on [-a, a)
    std::uint64_t trials = 100000;
    std::uint64_t seed = 0x5eedc0deULL;
    int workers = 0; // 0 = hardware concurrency
};

// Integer accumulators per (degree, algorithm); every statistic derives from
// these, so results are independent of worker count and merge order.
struct BenchCell {
    int degree = 0;
    ProjectionAlgo algorithm = ProjectionAlgo::Fix;
    std::uint64_t trials = 0;
    std::uint64_t hard_cases = 0;
    std::uint64_t iterations_hard = 0; // Fix only
    OpCounters ops;

    double mean_low() const { return static_cast<double>(ops.low_complexity) / static_cast<double>(trials); }
    double mean_mul() const { return static_cast<double>(ops.multiplications) / static_cast<double>(trials); }
    double mean_div() const { return static_cast<double>(ops.divisions) / static_cast<double>(trials); }
    double mean_total() const { return static_cast<double>(ops.total()) / static_cast<double>(trials); }
    double hard_fraction() const { return static_cast<double>(hard_cases) / static_cast<double>(trials); }
    double mean_iterations_hard() const {
        return hard_cases == 0 ? 0.0
                               : static_cast<double>(iterations_hard) / static_cast<double>(hard_cases);
    }
};

struct BenchResult {
    std::vector<BenchCell> cells; // degree-major, algorithms in enum order
};

void validate(const BenchSpec& spec); // throws std::invalid_argument

/// Mean instrumented op counts per degree and algorithm.
BenchResult run_op_bench(const BenchSpec& spec);

/// Hard-case (clamped input outside the polytope) frequency per degree; the
/// check is algorithm-independent, so cells carry only trial/hard counts.
BenchResult run_probability(const BenchSpec& spec);

/// Mean Fix iterations per degree conditioned on the hard case.
BenchResult run_iteration_stats(const BenchSpec& spec);

/// Shared CSV schema:
/// d,algorithm,mean_low_ops,mean_mults,mean_divs,hard_case_fraction,mean_iterations
/// Floats carry 6 significant digits. Subcommands leave columns they do not
/// measure at 0.
std::string to_csv(const BenchResult& result);

/// Minimal line chart (one polyline per algorithm) of `metric` against d.
/// metric: "low" | "mul" | "div" | "total" | "hard" | "iters".
std::string to_svg(const BenchResult& result, const std::string& metric);

} // namespace parityproj
