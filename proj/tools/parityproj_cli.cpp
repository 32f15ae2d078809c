// Command line front end: single projections with a printed trace, ADMM
// decoding of alist codes, and the op-count / hard-case / iteration benches.
#include <algorithm>
#include <cstdint>
#include <fstream>
#include <iostream>
#include <optional>
#include <sstream>
#include <string>
#include <vector>

#include <CLI11.hpp>

#include "parityproj/admm.hpp"
#include "parityproj/bench.hpp"
#include "parityproj/detail/fix_impl.hpp"
#include "parityproj/detail/ops_policy.hpp"
#include "parityproj/fix_projection.hpp"
#include "parityproj/geometry.hpp"

namespace pp = parityproj;

namespace {

struct UsageError : std::runtime_error {
    using std::runtime_error::runtime_error;
};

pp::ParityKind parse_kind(const std::string& s) {
    if (s == "even") return pp::ParityKind::Even;
    if (s == "odd") return pp::ParityKind::Odd;
    throw UsageError("--kind must be 'even' or 'odd'");
}

std::vector<pp::ProjectionAlgo> parse_algos(const std::string& list) {
    std::vector<pp::ProjectionAlgo> out;
    std::stringstream ss(list);
    std::string item;
    while (std::getline(ss, item, ',')) {
        std::string t;
        for (char c : item)
            if (!std::isspace(static_cast<unsigned char>(c)))
                t += static_cast<char>(std::tolower(static_cast<unsigned char>(c)));
        if (t.empty()) continue;
        if (t == "fix")
            out.push_back(pp::ProjectionAlgo::Fix);
        else if (t == "zs" || t == "zhangsiegel" || t == "zhang-siegel")
            out.push_back(pp::ProjectionAlgo::ZhangSiegel);
        else if (t == "wd" || t == "wassondraper" || t == "wasson-draper")
            out.push_back(pp::ProjectionAlgo::WassonDraper);
        else
            throw UsageError("unknown algorithm '" + item + "' (use fix, zs, wd)");
    }
    if (out.empty()) throw UsageError("--algos selected no algorithm");
    return out;
}

std::pair<int, int> parse_degrees(const std::string& s) {
    for (const std::string sep : {"..", ":", "-"}) {
        const auto pos = s.find(sep);
        if (pos != std::string::npos) {
            try {
                const int lo = std::stoi(s.substr(0, pos));
                const int hi = std::stoi(s.substr(pos + sep.size()));
                return {lo, hi};
            } catch (const std::exception&) {
                throw UsageError("cannot parse --degrees '" + s + "'");
            }
        }
    }
    try {
        const int d = std::stoi(s);
        return {d, d};
    } catch (const std::exception&) {
        throw UsageError("cannot parse --degrees '" + s + "'");
    }
}

std::vector<double> parse_reals(const std::string& list, const char* what) {
    std::vector<double> out;
    std::string norm = list;
    std::replace(norm.begin(), norm.end(), ',', ' ');
    std::stringstream ss(norm);
    double v;
    while (ss >> v) out.push_back(v);
    std::string rest;
    ss.clear();
    if (ss >> rest || out.empty())
        throw UsageError(std::string("cannot parse ") + what + " '" + list + "'");
    for (double x : out)
        if (!std::isfinite(x)) throw UsageError(std::string(what) + " must be finite");
    return out;
}

std::vector<double> read_reals_file(const std::string& path) {
    std::ifstream in(path);
    if (!in) throw std::runtime_error("cannot open '" + path + "'");
    std::vector<double> out;
    double v;
    while (in >> v) out.push_back(v);
    if (!in.eof()) throw std::runtime_error("non-numeric content in '" + path + "'");
    if (out.empty()) throw std::runtime_error("'" + path + "' holds no values");
    return out;
}

void write_text(const std::string& path, const std::string& text) {
    std::ofstream out(path, std::ios::binary);
    if (!out) throw std::runtime_error("cannot open '" + path + "' for writing");
    out << text;
}

// Records per-pass hyperplane points labeled by original component index.
struct TraceRecorder {
    struct Pass {
        std::vector<std::pair<int, double>> v; // (original index, value)
        std::vector<std::pair<int, double>> fixed;
    };
    std::vector<Pass> passes;

    void on_pass(std::span<const double>, std::span<const std::int8_t>, int,
                 std::span<const double> v, std::span<const std::int32_t> q, int f) {
        Pass pass;
        for (std::size_t k = 0; k < v.size(); ++k)
            pass.v.emplace_back(q[static_cast<std::size_t>(f) + k], v[k]);
        passes.push_back(std::move(pass));
    }
    void on_fix(int, int orig, double value) { passes.back().fixed.emplace_back(orig, value); }
    void on_pass_end(int, int) {}
};

int cmd_project(const std::vector<double>& x, const std::string& kind_name, bool show_trace) {
    const pp::ParityKind kind = parse_kind(kind_name);
    pp::FixWorkspace ws;
    pp::RealVec z;
    pp::ProjectionTrace trace;
    TraceRecorder rec;
    pp::detail::NullOps ops;
    pp::detail::fix_project_impl(std::span<const double>(x), kind, ws, z, trace, ops, rec);

    std::ostringstream line;
    for (std::size_t i = 0; i < z.size(); ++i) line << (i ? " " : "") << z[i];
    std::cout << line.str() << '\n';
    if (show_trace) {
        std::cout << "status: " << pp::to_string(trace.terminated_by) << '\n';
        std::cout << "iterations: " << trace.iterations << '\n';
        std::cout << "fixes per iteration:";
        if (trace.fixes_per_iteration.empty()) std::cout << " none";
        for (auto f : trace.fixes_per_iteration) std::cout << ' ' << f;
        std::cout << '\n';
        std::cout << "permutation:";
        for (auto qv : trace.permutation) std::cout << ' ' << qv;
        std::cout << '\n';
        for (std::size_t pi = 0; pi < rec.passes.size(); ++pi) {
            std::cout << "pass " << pi + 1 << " hyperplane point:";
            for (const auto& [orig, v] : rec.passes[pi].v) std::cout << " v[" << orig << "]=" << v;
            std::cout << '\n';
            for (const auto& [orig, v] : rec.passes[pi].fixed)
                std::cout << "pass " << pi + 1 << " fixed: z[" << orig << "]=" << v << '\n';
        }
    }
    return 0;
}

} // namespace

int main(int argc, char** argv) {
    CLI::App app{"Parity polytope projections and ADMM LP decoding"};
    app.require_subcommand(1);

    // project
    auto* project = app.add_subcommand("project", "Project a vector onto a parity polytope");
    std::vector<double> proj_x;
    std::string proj_kind = "even";
    bool proj_trace = false;
    project->add_option("x", proj_x, "vector components")->required()->expected(-1);
    project->add_option("--kind", proj_kind, "even|odd (default even)");
    project->add_flag("--trace", proj_trace, "print the projection trace");

    // decode
    auto* decode = app.add_subcommand("decode", "ADMM LP decode of an alist code");
    std::string alist_path;
    std::string llr_arg, llr_file, received_arg;
    double sigma = 0.0;
    pp::DecoderConfig dec_cfg;
    std::string x_update = "standard";
    std::string projector_name = "fix";
    decode->add_option("--alist", alist_path, "alist file of the parity-check matrix")->required();
    decode->add_option("--llr", llr_arg, "comma/space separated channel LLRs");
    decode->add_option("--llr-file", llr_file, "file of whitespace separated LLRs");
    decode->add_option("--received", received_arg, "BPSK channel outputs (needs --sigma)");
    decode->add_option("--sigma", sigma, "AWGN noise standard deviation");
    decode->add_option("--rho", dec_cfg.rho, "ADMM penalty parameter (default 1.0)");
    decode->add_option("--max-iters", dec_cfg.max_iterations, "iteration cap (default 1000)");
    decode->add_option("--primal-tol", dec_cfg.primal_tolerance, "primal residual tolerance");
    decode->add_option("--dual-tol", dec_cfg.dual_tolerance, "dual residual tolerance");
    decode->add_option("--x-update", x_update, "standard|paper-literal x-update sign");
    decode->add_option("--projector", projector_name, "fix|zs|wd|oracle (default fix)");

    // bench family
    struct BenchArgs {
        std::string degrees = "2..50";
        double range = 5.0;
        std::uint64_t trials = 100000;
        std::uint64_t seed = 0x5eedc0deULL;
        std::string algos = "fix,zs,wd";
        std::string csv_out, svg_out;
        int workers = 0;
    };
    auto add_bench_flags = [](CLI::App* cmd, BenchArgs& args, bool with_algos) {
        cmd->add_option("--degrees", args.degrees, "degree range, e.g. 2..50");
        cmd->add_option("--range", args.range, "input half range a; components ~ U[-a,a)");
        cmd->add_option("--trials", args.trials, "Monte Carlo trials per degree");
        cmd->add_option("--seed", args.seed, "PRNG seed");
        if (with_algos) cmd->add_option("--algos", args.algos, "comma list of fix,zs,wd");
        cmd->add_option("--csv-out", args.csv_out, "write CSV here instead of stdout");
        cmd->add_option("--svg-out", args.svg_out, "also write an SVG chart");
        cmd->add_option("--workers", args.workers, "worker threads (0 = hardware)");
    };
    BenchArgs ops_args, prob_args, iter_args;
    auto* bench_ops = app.add_subcommand("bench-ops", "Mean operation counts per projection");
    add_bench_flags(bench_ops, ops_args, true);
    auto* bench_prob = app.add_subcommand("bench-prob", "Hard-case probability per degree");
    add_bench_flags(bench_prob, prob_args, false);
    auto* bench_iters = app.add_subcommand("bench-iters", "Mean hard-case iterations per degree");
    add_bench_flags(bench_iters, iter_args, false);

    try {
        app.parse(argc, argv);
    } catch (const CLI::ParseError& e) {
        const int code = app.exit(e);
        return code == 0 ? 0 : 1;
    }

    try {
        if (project->parsed()) return cmd_project(proj_x, proj_kind, proj_trace);

        if (decode->parsed()) {
            if (x_update == "standard")
                dec_cfg.x_update_sign = pp::XUpdateSign::StandardADMM;
            else if (x_update == "paper-literal")
                dec_cfg.x_update_sign = pp::XUpdateSign::PaperLiteral;
            else
                throw UsageError("--x-update must be 'standard' or 'paper-literal'");
            pp::RowProjector proj;
            if (projector_name == "fix")
                proj = pp::make_row_projector(pp::ProjectionAlgo::Fix);
            else if (projector_name == "zs")
                proj = pp::make_row_projector(pp::ProjectionAlgo::ZhangSiegel);
            else if (projector_name == "wd")
                proj = pp::make_row_projector(pp::ProjectionAlgo::WassonDraper);
            else if (projector_name == "oracle")
                proj = pp::make_oracle_row_projector();
            else
                throw UsageError("--projector must be fix, zs, wd or oracle");

            const int sources = !llr_arg.empty() + !llr_file.empty() + !received_arg.empty();
            if (sources != 1)
                throw UsageError("pass exactly one of --llr, --llr-file, --received");
            pp::RealVec llr;
            if (!llr_arg.empty()) {
                llr = parse_reals(llr_arg, "--llr");
            } else if (!llr_file.empty()) {
                llr = read_reals_file(llr_file);
            } else {
                if (!(sigma > 0.0)) throw UsageError("--received needs --sigma > 0");
                llr = pp::awgn_llr(parse_reals(received_arg, "--received"), sigma);
            }

            const pp::ParityCheckMatrix h = pp::load_alist(alist_path);
            const pp::DecodeResult res = pp::decode(llr, h, dec_cfg, proj);
            std::cout << "hard decision:";
            for (auto b : res.hard_decision) std::cout << ' ' << int(b);
            std::cout << '\n';
            std::cout << "status: " << pp::to_string(res.status) << '\n';
            std::cout << "iterations: " << res.iterations << '\n';
            std::cout << "primal residual: " << res.primal_residual << '\n';
            std::cout << "dual residual: " << res.dual_residual << '\n';
            return 0;
        }

        const auto run_bench = [&](const BenchArgs& args, bool with_algos,
                                   const char* svg_metric,
                                   pp::BenchResult (*runner)(const pp::BenchSpec&)) {
            pp::BenchSpec spec;
            std::tie(spec.degree_min, spec.degree_max) = parse_degrees(args.degrees);
            spec.input_half_range = args.range;
            spec.trials = args.trials;
            spec.seed = args.seed;
            spec.workers = args.workers;
            if (with_algos) spec.algorithms = parse_algos(args.algos);
            try {
                pp::validate(spec);
            } catch (const std::invalid_argument& e) {
                throw UsageError(e.what());
            }
            const pp::BenchResult result = runner(spec);
            const std::string csv = pp::to_csv(result);
            if (args.csv_out.empty())
                std::cout << csv;
            else
                write_text(args.csv_out, csv);
            if (!args.svg_out.empty()) write_text(args.svg_out, pp::to_svg(result, svg_metric));
            return 0;
        };
        if (bench_ops->parsed()) return run_bench(ops_args, true, "low", pp::run_op_bench);
        if (bench_prob->parsed()) return run_bench(prob_args, false, "hard", pp::run_probability);
        if (bench_iters->parsed())
            return run_bench(iter_args, false, "iters", pp::run_iteration_stats);
    } catch (const UsageError& e) {
        std::cerr << "error: " << e.what() << '\n';
        return 1;
    } catch (const std::exception& e) {
        std::cerr << "error: " << e.what() << '\n';
        return 2;
    }
    return 1;
}
