// Python bindings for the projection library. Kinds and algorithms are passed
// as short strings ("even"/"odd", "fix"/"zs"/"wd") so callers need no enums.
#include <pybind11/pybind11.h>
#include <pybind11/stl.h>

#include <cctype>
#include <stdexcept>
#include <string>

#include "parityproj/admm.hpp"
#include "parityproj/alist.hpp"
#include "parityproj/baselines.hpp"
#include "parityproj/bench.hpp"
#include "parityproj/fix_projection.hpp"
#include "parityproj/geometry.hpp"
#include "parityproj/opcount.hpp"
#include "parityproj/oracle.hpp"

namespace py = pybind11;
namespace pp = parityproj;

namespace {

std::string lower(std::string s) {
    for (char& c : s) c = static_cast<char>(std::tolower(static_cast<unsigned char>(c)));
    return s;
}

pp::ParityKind kind_from(const std::string& name) {
    const std::string k = lower(name);
    if (k == "even") return pp::ParityKind::Even;
    if (k == "odd") return pp::ParityKind::Odd;
    throw std::invalid_argument("kind must be 'even' or 'odd'");
}

pp::ProjectionAlgo algo_from(const std::string& name) {
    const std::string a = lower(name);
    if (a == "fix") return pp::ProjectionAlgo::Fix;
    if (a == "zs" || a == "zhang-siegel") return pp::ProjectionAlgo::ZhangSiegel;
    if (a == "wd" || a == "wasson-draper") return pp::ProjectionAlgo::WassonDraper;
    throw std::invalid_argument("algorithm must be 'fix', 'zs' or 'wd'");
}

py::dict trace_dict(const pp::ProjectionTrace& t) {
    py::dict d;
    d["iterations"] = t.iterations;
    d["fixes_per_iteration"] = t.fixes_per_iteration;
    d["permutation"] = t.permutation;
    d["terminated_by"] = pp::to_string(t.terminated_by);
    return d;
}

pp::BenchSpec spec_from(int degree_min, int degree_max, double input_half_range,
                        std::uint64_t trials, std::uint64_t seed, int workers,
                        const std::vector<std::string>& algorithms) {
    pp::BenchSpec spec;
    spec.degree_min = degree_min;
    spec.degree_max = degree_max;
    spec.input_half_range = input_half_range;
    spec.trials = trials;
    spec.seed = seed;
    spec.workers = workers;
    if (!algorithms.empty()) {
        spec.algorithms.clear();
        for (const auto& a : algorithms) spec.algorithms.push_back(algo_from(a));
    }
    pp::validate(spec);
    return spec;
}

} // namespace

PYBIND11_MODULE(_core, m) {
    m.doc() = "Euclidean projections onto parity polytopes and ADMM LP decoding";
    m.attr("__version__") = PARITYPROJ_VERSION;

    m.def(
        "clamp_unit_box", [](const pp::RealVec& x) { return pp::clamp_unit_box(x); },
        py::arg("x"), "Componentwise clamp of x to [0, 1]^d.");
    m.def(
        "cut_search",
        [](const pp::RealVec& x, const std::string& kind) {
            const pp::ForbiddenSetInequality ineq = pp::cut_search(x, kind_from(kind));
            return py::make_tuple(ineq.theta, ineq.p);
        },
        py::arg("x"), py::arg("kind") = "even",
        "Cut-search facet (theta, p) whose inequality theta.x <= p the clamped "
        "point violates most, or satisfies tightest when the point is a member.");
    m.def(
        "is_member",
        [](const pp::RealVec& x, const std::string& kind, bool exhaustive, double tol) {
            return pp::is_member(x, kind_from(kind),
                                 exhaustive ? pp::MemberMode::ExhaustiveSmallD
                                            : pp::MemberMode::FastSingleCut,
                                 tol);
        },
        py::arg("x"), py::arg("kind") = "even", py::arg("exhaustive") = false,
        py::arg("tol") = 0.0, "Membership test for the parity polytope.");
    m.def(
        "project_hyperplane",
        [](const pp::RealVec& x, const std::vector<std::int8_t>& theta, int p) {
            return pp::project_hyperplane(x, pp::ForbiddenSetInequality{theta, p});
        },
        py::arg("x"), py::arg("theta"), py::arg("p"),
        "Euclidean projection of x onto the hyperplane theta.x = p.");

    m.def(
        "project",
        [](const pp::RealVec& x, const std::string& kind) {
            const pp::FixProjectionResult res = pp::project(x, kind_from(kind));
            py::dict d = trace_dict(res.trace);
            d["z"] = res.z;
            return d;
        },
        py::arg("x"), py::arg("kind") = "even",
        "Component-fixing projection onto the parity polytope; returns a dict "
        "with 'z' and the trace fields.");
    m.def(
        "project_counted",
        [](const pp::RealVec& x, const std::string& kind, const std::string& algorithm) {
            if (lower(algorithm) == "fix") {
                pp::OpCounters c;
                const pp::FixProjectionResult res = pp::project_counted(x, kind_from(kind), c);
                py::dict d = trace_dict(res.trace);
                d["z"] = res.z;
                d["divisions"] = c.divisions;
                d["multiplications"] = c.multiplications;
                d["low_complexity"] = c.low_complexity;
                return d;
            }
            const pp::CountedProjection res =
                pp::counted_projection(algo_from(algorithm), x, kind_from(kind));
            py::dict d;
            d["z"] = res.z;
            d["divisions"] = res.counters.divisions;
            d["multiplications"] = res.counters.multiplications;
            d["low_complexity"] = res.counters.low_complexity;
            return d;
        },
        py::arg("x"), py::arg("kind") = "even", py::arg("algorithm") = "fix",
        "Projection with operation counters (divisions, multiplications, low).");

    m.def(
        "oracle_project",
        [](const pp::RealVec& x, const std::string& kind) {
            return pp::oracle::project(x, kind_from(kind));
        },
        py::arg("x"), py::arg("kind") = "even",
        "Reference projection via the capped-simplex waterline method.");
    m.def(
        "oracle_project_capped_simplex",
        [](const pp::RealVec& y, double s) {
            return pp::oracle::project_capped_simplex({y, s});
        },
        py::arg("y"), py::arg("s"), "Projection of y onto {w in [0,1]^d : sum w = s}.");

    m.def(
        "project_zhang_siegel",
        [](const pp::RealVec& x, const std::string& kind) {
            return pp::project_zhang_siegel(x, kind_from(kind));
        },
        py::arg("x"), py::arg("kind") = "even",
        "Sort-based projection (two-pointer breakpoint walk).");
    m.def(
        "project_wasson_draper",
        [](const pp::RealVec& x, const std::string& kind) {
            return pp::project_wasson_draper(x, kind_from(kind));
        },
        py::arg("x"), py::arg("kind") = "even",
        "Sort-based projection (probability-simplex reduction).");

    py::register_exception<pp::AlistParseError>(m, "AlistParseError", PyExc_ValueError);
    py::class_<pp::ParityCheckMatrix>(m, "ParityCheckMatrix")
        .def(py::init<int, int, std::vector<std::vector<std::int32_t>>>(), py::arg("n"),
             py::arg("m"), py::arg("rows"))
        .def_property_readonly("n", &pp::ParityCheckMatrix::n)
        .def_property_readonly("m", &pp::ParityCheckMatrix::m)
        .def_property_readonly("rows",
                               [](const pp::ParityCheckMatrix& h) {
                                   std::vector<std::vector<std::int32_t>> out;
                                   for (int j = 0; j < h.m(); ++j) out.push_back(h.row(j));
                                   return out;
                               })
        .def_property_readonly("cols",
                               [](const pp::ParityCheckMatrix& h) {
                                   std::vector<std::vector<std::int32_t>> out;
                                   for (int i = 0; i < h.n(); ++i) out.push_back(h.col(i));
                                   return out;
                               })
        .def("max_row_degree", &pp::ParityCheckMatrix::max_row_degree)
        .def("max_col_degree", &pp::ParityCheckMatrix::max_col_degree)
        .def(
            "syndrome_ok",
            [](const pp::ParityCheckMatrix& h, const std::vector<int>& bits) {
                std::vector<std::uint8_t> b(bits.begin(), bits.end());
                return h.syndrome_ok(b);
            },
            py::arg("bits"), "True when H @ bits = 0 over GF(2).")
        .def("to_alist", &pp::ParityCheckMatrix::to_alist);
    m.def("parse_alist", &pp::parse_alist, py::arg("text"),
          "Parse alist text into a ParityCheckMatrix.");
    m.def("load_alist", &pp::load_alist, py::arg("path"),
          "Load an alist file into a ParityCheckMatrix.");

    m.def(
        "awgn_llr",
        [](const pp::RealVec& received, double sigma) { return pp::awgn_llr(received, sigma); },
        py::arg("received"), py::arg("sigma"),
        "Channel LLRs 2*y/sigma^2 for BPSK (bit 0 -> +1) over AWGN.");
    m.def(
        "decode",
        [](const pp::RealVec& llr, const pp::ParityCheckMatrix& h, double rho,
           int max_iterations, double primal_tolerance, double dual_tolerance,
           const std::string& x_update_sign, double integrality_tolerance,
           const std::string& projector) {
            pp::DecoderConfig cfg;
            cfg.rho = rho;
            cfg.max_iterations = max_iterations;
            cfg.primal_tolerance = primal_tolerance;
            cfg.dual_tolerance = dual_tolerance;
            cfg.integrality_tolerance = integrality_tolerance;
            const std::string sign = lower(x_update_sign);
            if (sign == "standard")
                cfg.x_update_sign = pp::XUpdateSign::StandardADMM;
            else if (sign == "paper-literal")
                cfg.x_update_sign = pp::XUpdateSign::PaperLiteral;
            else
                throw std::invalid_argument("x_update_sign must be 'standard' or 'paper-literal'");
            pp::RowProjector proj = lower(projector) == "oracle"
                                        ? pp::make_oracle_row_projector()
                                        : pp::make_row_projector(algo_from(projector));
            const pp::DecodeResult res = pp::decode(llr, h, cfg, proj);
            py::dict d;
            d["hard_decision"] = std::vector<int>(res.hard_decision.begin(),
                                                  res.hard_decision.end());
            d["status"] = pp::to_string(res.status);
            d["iterations"] = res.iterations;
            d["x"] = res.x;
            d["primal_residual"] = res.primal_residual;
            d["dual_residual"] = res.dual_residual;
            return d;
        },
        py::arg("llr"), py::arg("h"), py::arg("rho") = 1.0, py::arg("max_iterations") = 1000,
        py::arg("primal_tolerance") = 1e-5, py::arg("dual_tolerance") = 1e-5,
        py::arg("x_update_sign") = "standard", py::arg("integrality_tolerance") = 1e-3,
        py::arg("projector") = "fix", "ADMM LP decode; returns a result dict.");

    const auto bench = [](pp::BenchResult (*runner)(const pp::BenchSpec&)) {
        return [runner](int degree_min, int degree_max, double input_half_range,
                        std::uint64_t trials, std::uint64_t seed, int workers,
                        const std::vector<std::string>& algorithms) {
            return pp::to_csv(runner(spec_from(degree_min, degree_max, input_half_range, trials,
                                               seed, workers, algorithms)));
        };
    };
    const auto def_bench = [&](const char* name, pp::BenchResult (*runner)(const pp::BenchSpec&),
                               const char* doc) {
        m.def(name, bench(runner), py::arg("degree_min") = 2, py::arg("degree_max") = 50,
              py::arg("input_half_range") = 5.0, py::arg("trials") = 100000, py::arg("seed") = 0x5eedc0deULL,
              py::arg("workers") = 0, py::arg("algorithms") = std::vector<std::string>{}, doc);
    };
    def_bench("bench_ops_csv", &pp::run_op_bench,
              "Mean operation counts per degree and algorithm, as CSV text.");
    def_bench("bench_probability_csv", &pp::run_probability,
              "Hard-case fraction per degree, as CSV text.");
    def_bench("bench_iterations_csv", &pp::run_iteration_stats,
              "Mean hard-case iteration count per degree, as CSV text.");
}
