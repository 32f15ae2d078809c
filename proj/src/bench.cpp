#include "parityproj/bench.hpp"

#include <algorithm>
#include <cinttypes>
#include <cstdio>
#include <sstream>
#include <stdexcept>
#include <thread>
#include <vector>

#include "parityproj/baselines.hpp"
#include "parityproj/detail/baseline_impl.hpp"
#include "parityproj/detail/fix_impl.hpp"
#include "parityproj/detail/geometry_impl.hpp"
#include "parityproj/detail/ops_policy.hpp"
#include "parityproj/fix_projection.hpp"
#include "parityproj/rng.hpp"

namespace parityproj {

namespace {

enum class Mode { Ops, Probability, Iterations };

struct Acc {
    std::uint64_t trials = 0;
    std::uint64_t hard = 0;
    std::uint64_t iterations_hard = 0;
    OpCounters ops;

    void merge(const Acc& o) {
        trials += o.trials;
        hard += o.hard;
        iterations_hard += o.iterations_hard;
        ops += o.ops;
    }
};

std::vector<ProjectionAlgo> canonical_algos(const BenchSpec& spec) {
    std::vector<ProjectionAlgo> out;
    for (ProjectionAlgo a : {ProjectionAlgo::Fix, ProjectionAlgo::ZhangSiegel,
                             ProjectionAlgo::WassonDraper})
        if (std::find(spec.algorithms.begin(), spec.algorithms.end(), a) !=
                spec.algorithms.end() &&
            std::find(out.begin(), out.end(), a) == out.end())
            out.push_back(a);
    return out;
}

bool hard_case(std::span<const double> x, std::vector<double>& u,
               std::vector<std::int8_t>& theta) {
    detail::NullOps ops;
    u.resize(x.size());
    theta.resize(x.size());
    detail::clamp_unit_box_impl(x, std::span<double>(u), ops);
    const int p = detail::cut_search_clamped(std::span<const double>(u), ParityKind::Even,
                                             std::span<std::int8_t>(theta), ops);
    const double dot =
        detail::signed_sum(std::span<const double>(u), std::span<const std::int8_t>(theta), ops);
    return dot > static_cast<double>(p);
}

BenchResult run(const BenchSpec& spec, Mode mode) {
    validate(spec);
    const std::vector<ProjectionAlgo> algos =
        mode == Mode::Ops ? canonical_algos(spec) : std::vector<ProjectionAlgo>{ProjectionAlgo::Fix};
    const int ndeg = spec.degree_max - spec.degree_min + 1;
    const int lanes = static_cast<int>(algos.size());

    int workers = spec.workers > 0 ? spec.workers
                                   : static_cast<int>(std::thread::hardware_concurrency());
    if (workers < 1) workers = 1;
    if (static_cast<std::uint64_t>(workers) > spec.trials)
        workers = static_cast<int>(spec.trials);

    // One accumulator grid per worker; trials are striped by index, so the
    // drawn vectors depend only on (seed, d, trial) and the merged integer
    // sums are independent of the partitioning.
    std::vector<std::vector<Acc>> grids(static_cast<std::size_t>(workers));
    auto body = [&](int w) {
        auto& grid = grids[static_cast<std::size_t>(w)];
        grid.assign(static_cast<std::size_t>(ndeg * lanes), Acc{});
        RealVec x;
        std::vector<double> u;
        std::vector<std::int8_t> theta;
        FixWorkspace fws;
        detail::BaselineWorkspace bws;
        RealVec out;
        OpCounters counters;
        for (int di = 0; di < ndeg; ++di) {
            const int d = spec.degree_min + di;
            x.resize(static_cast<std::size_t>(d));
            for (std::uint64_t trial = static_cast<std::uint64_t>(w); trial < spec.trials;
                 trial += static_cast<std::uint64_t>(workers)) {
                Xoshiro256 rng = make_trial_rng(spec.seed, d, trial);
                for (auto& v : x) v = rng.uniform_sym(spec.input_half_range);
                const bool hard = hard_case(x, u, theta);

                if (mode == Mode::Probability) {
                    Acc& acc = grid[static_cast<std::size_t>(di)];
                    ++acc.trials;
                    acc.hard += hard;
                    continue;
                }
                if (mode == Mode::Iterations) {
                    Acc& acc = grid[static_cast<std::size_t>(di)];
                    ++acc.trials;
                    if (hard) {
                        detail::NullOps nops;
                        detail::NullFixObserver nobs;
                        ProjectionTrace trace;
                        detail::fix_project_impl(x, ParityKind::Even, fws, out, trace, nops, nobs);
                        ++acc.hard;
                        acc.iterations_hard += trace.iterations;
                    }
                    continue;
                }
                for (int li = 0; li < lanes; ++li) {
                    Acc& acc = grid[static_cast<std::size_t>(di * lanes + li)];
                    ++acc.trials;
                    acc.hard += hard;
                    counters = OpCounters{};
                    detail::CountingOps cops{&counters};
                    switch (algos[static_cast<std::size_t>(li)]) {
                    case ProjectionAlgo::Fix: {
                        detail::NullFixObserver nobs;
                        ProjectionTrace trace;
                        detail::fix_project_impl(x, ParityKind::Even, fws, out, trace, cops, nobs);
                        if (hard) acc.iterations_hard += trace.iterations;
                        break;
                    }
                    case ProjectionAlgo::ZhangSiegel:
                        detail::zhang_siegel_impl(x, ParityKind::Even, bws, out, cops);
                        break;
                    case ProjectionAlgo::WassonDraper:
                        detail::wasson_draper_impl(x, ParityKind::Even, bws, out, cops);
                        break;
                    }
                    acc.ops += counters;
                }
            }
        }
    };

    if (workers == 1) {
        body(0);
    } else {
        std::vector<std::thread> pool;
        pool.reserve(static_cast<std::size_t>(workers));
        for (int w = 0; w < workers; ++w) pool.emplace_back(body, w);
        for (auto& t : pool) t.join();
    }

    BenchResult res;
    res.cells.reserve(static_cast<std::size_t>(ndeg * lanes));
    for (int di = 0; di < ndeg; ++di) {
        for (int li = 0; li < lanes; ++li) {
            Acc total;
            for (int w = 0; w < workers; ++w)
                total.merge(grids[static_cast<std::size_t>(w)][static_cast<std::size_t>(di * lanes + li)]);
            BenchCell cell;
            cell.degree = spec.degree_min + di;
            cell.algorithm = algos[static_cast<std::size_t>(li)];
            cell.trials = total.trials;
            cell.hard_cases = total.hard;
            cell.iterations_hard = total.iterations_hard;
            cell.ops = total.ops;
            res.cells.push_back(cell);
        }
    }
    return res;
}

void format_sig6(std::string& line, double v) {
    char buf[64];
    std::snprintf(buf, sizeof(buf), "%.6g", v);
    line += buf;
}

} // namespace

void validate(const BenchSpec& spec) {
    if (spec.algorithms.empty())
        throw std::invalid_argument("bench: at least one algorithm required");
    if (spec.degree_min < 2 || spec.degree_max > 64 || spec.degree_min > spec.degree_max)
        throw std::invalid_argument("bench: degrees must satisfy 2 <= min <= max <= 64");
    if (spec.trials < 1) throw std::invalid_argument("bench: trials must be >= 1");
    if (!(spec.input_half_range > 0.0))
        throw std::invalid_argument("bench: input half-range must be positive");
    if (spec.workers < 0) throw std::invalid_argument("bench: workers must be >= 0");
}

BenchResult run_op_bench(const BenchSpec& spec) { return run(spec, Mode::Ops); }
BenchResult run_probability(const BenchSpec& spec) { return run(spec, Mode::Probability); }
BenchResult run_iteration_stats(const BenchSpec& spec) { return run(spec, Mode::Iterations); }

std::string to_csv(const BenchResult& result) {
    std::string out = "d,algorithm,mean_low_ops,mean_mults,mean_divs,hard_case_fraction,mean_iterations\n";
    for (const BenchCell& c : result.cells) {
        out += std::to_string(c.degree);
        out += ',';
        out += to_string(c.algorithm);
        out += ',';
        format_sig6(out, c.mean_low());
        out += ',';
        format_sig6(out, c.mean_mul());
        out += ',';
        format_sig6(out, c.mean_div());
        out += ',';
        format_sig6(out, c.hard_fraction());
        out += ',';
        format_sig6(out, c.mean_iterations_hard());
        out += '\n';
    }
    return out;
}

std::string to_svg(const BenchResult& result, const std::string& metric) {
    auto value = [&](const BenchCell& c) -> double {
        if (metric == "low") return c.mean_low();
        if (metric == "mul") return c.mean_mul();
        if (metric == "div") return c.mean_div();
        if (metric == "total") return c.mean_total();
        if (metric == "hard") return c.hard_fraction();
        if (metric == "iters") return c.mean_iterations_hard();
        throw std::invalid_argument("to_svg: unknown metric '" + metric + "'");
    };

    struct Series {
        ProjectionAlgo algo;
        std::vector<std::pair<double, double>> pts;
    };
    std::vector<Series> series;
    double xmin = 1e300, xmax = -1e300, ymax = 0.0;
    for (const BenchCell& c : result.cells) {
        auto it = std::find_if(series.begin(), series.end(),
                               [&](const Series& s) { return s.algo == c.algorithm; });
        if (it == series.end()) {
            series.push_back({c.algorithm, {}});
            it = series.end() - 1;
        }
        const double v = value(c);
        it->pts.emplace_back(static_cast<double>(c.degree), v);
        xmin = std::min(xmin, static_cast<double>(c.degree));
        xmax = std::max(xmax, static_cast<double>(c.degree));
        ymax = std::max(ymax, v);
    }
    if (series.empty()) throw std::invalid_argument("to_svg: empty result");
    if (xmax == xmin) xmax = xmin + 1.0;
    if (ymax <= 0.0) ymax = 1.0;

    const double W = 640, H = 420, ml = 64, mr = 16, mt = 20, mb = 44;
    auto px = [&](double x) { return ml + (x - xmin) / (xmax - xmin) * (W - ml - mr); };
    auto py = [&](double y) { return H - mb - y / ymax * (H - mt - mb); };
    const char* colors[] = {"#1f77b4", "#d62728", "#2ca02c"};

    std::ostringstream os;
    os << "<svg xmlns=\"http://www.w3.org/2000/svg\" width=\"" << W << "\" height=\"" << H
       << "\" viewBox=\"0 0 " << W << " " << H << "\">\n"
       << "<rect width=\"100%\" height=\"100%\" fill=\"white\"/>\n";
    os << "<line x1=\"" << ml << "\" y1=\"" << H - mb << "\" x2=\"" << W - mr << "\" y2=\""
       << H - mb << "\" stroke=\"black\"/>\n";
    os << "<line x1=\"" << ml << "\" y1=\"" << mt << "\" x2=\"" << ml << "\" y2=\"" << H - mb
       << "\" stroke=\"black\"/>\n";
    for (int k = 0; k <= 4; ++k) {
        const double yv = ymax * k / 4.0;
        os << "<text x=\"" << ml - 8 << "\" y=\"" << py(yv) + 4
           << "\" font-size=\"11\" text-anchor=\"end\">";
        char buf[32];
        std::snprintf(buf, sizeof(buf), "%.4g", yv);
        os << buf << "</text>\n";
        const double xv = xmin + (xmax - xmin) * k / 4.0;
        std::snprintf(buf, sizeof(buf), "%.3g", xv);
        os << "<text x=\"" << px(xv) << "\" y=\"" << H - mb + 18
           << "\" font-size=\"11\" text-anchor=\"middle\">" << buf << "</text>\n";
    }
    os << "<text x=\"" << (ml + W - mr) / 2 << "\" y=\"" << H - 8
       << "\" font-size=\"12\" text-anchor=\"middle\">d</text>\n";
    os << "<text x=\"14\" y=\"" << (mt + H - mb) / 2 << "\" font-size=\"12\" text-anchor=\"middle\""
       << " transform=\"rotate(-90 14 " << (mt + H - mb) / 2 << ")\">" << metric << "</text>\n";
    for (std::size_t si = 0; si < series.size(); ++si) {
        const char* color = colors[si % 3];
        os << "<polyline fill=\"none\" stroke=\"" << color << "\" stroke-width=\"1.5\" points=\"";
        for (const auto& [xv, yv] : series[si].pts) os << px(xv) << ',' << py(yv) << ' ';
        os << "\"/>\n";
        os << "<text x=\"" << W - mr - 8 << "\" y=\"" << mt + 16 + 16 * static_cast<double>(si)
           << "\" font-size=\"12\" text-anchor=\"end\" fill=\"" << color << "\">"
           << to_string(series[si].algo) << "</text>\n";
    }
    os << "</svg>\n";
    return os.str();
}

} // namespace parityproj
