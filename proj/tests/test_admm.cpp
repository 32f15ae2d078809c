#include <doctest.h>

#include <algorithm>
#include <cmath>
#include <string>
#include <vector>

#include "parityproj/admm.hpp"
#include "parityproj/fix_projection.hpp"
#include "parityproj/geometry.hpp"
#include "test_util.hpp"

using namespace parityproj;

namespace {

const std::string kDataDir = PARITYPROJ_TEST_DATA_DIR;

ParityCheckMatrix test_code() { return load_alist(kDataDir + "/hamming84.alist"); }

// Channel LLRs for a noiselessly received codeword: bit 0 -> +1, bit 1 -> -1.
RealVec noiseless_llr(const std::vector<std::uint8_t>& codeword, double sigma = 0.5) {
    RealVec received(codeword.size());
    for (std::size_t i = 0; i < codeword.size(); ++i) received[i] = codeword[i] ? -1.0 : 1.0;
    return awgn_llr(received, sigma);
}

} // namespace

TEST_SUITE("admm") {

    TEST_CASE("llr computation") {
        const RealVec llr = awgn_llr(RealVec{1.0, -1.0, 0.5}, 0.5);
        CHECK(llr == RealVec{8.0, -8.0, 4.0});
        CHECK_THROWS_AS((void)awgn_llr(RealVec{1.0}, 0.0), std::invalid_argument);
        CHECK_THROWS_AS((void)awgn_llr(RealVec{1.0}, -1.0), std::invalid_argument);
    }

    TEST_CASE("status names") {
        CHECK(std::string(to_string(DecodeStatus::ConvergedIntegral)) == "converged-integral");
        CHECK(std::string(to_string(DecodeStatus::ConvergedFractional)) ==
              "converged-fractional");
        CHECK(std::string(to_string(DecodeStatus::IterLimit)) == "iteration-limit");
    }

    TEST_CASE("input validation") {
        const ParityCheckMatrix h = test_code();
        CHECK_THROWS_AS((void)decode(RealVec{1.0, 2.0}, h), std::invalid_argument);
        DecoderConfig bad;
        const RealVec llr(8, 1.0);
        bad.rho = 0.0;
        CHECK_THROWS_AS((void)decode(llr, h, bad), std::invalid_argument);
        bad = DecoderConfig{};
        bad.max_iterations = 0;
        CHECK_THROWS_AS((void)decode(llr, h, bad), std::invalid_argument);
        bad = DecoderConfig{};
        bad.primal_tolerance = 0.0;
        CHECK_THROWS_AS((void)decode(llr, h, bad), std::invalid_argument);
    }

    TEST_CASE("noiseless codewords decode quickly and exactly") {
        const ParityCheckMatrix h = test_code();
        const std::vector<std::vector<std::uint8_t>> words = {
            {0, 0, 0, 0, 0, 0, 0, 0},
            {1, 1, 0, 0, 1, 1, 0, 0},
            {1, 0, 0, 0, 0, 1, 1, 1},
            {1, 1, 1, 1, 1, 1, 1, 1},
        };
        for (const auto& c : words) {
            REQUIRE(h.syndrome_ok(c));
            const DecodeResult res = decode(noiseless_llr(c), h);
            REQUIRE(res.status == DecodeStatus::ConvergedIntegral);
            REQUIRE(res.hard_decision == c);
            REQUIRE(res.iterations <= 50);
        }
    }

    TEST_CASE("single-check code recovers an even-weight word") {
        const ParityCheckMatrix h(3, 1, {{0, 1, 2}});
        const DecodeResult res = decode(noiseless_llr({1, 1, 0}), h);
        CHECK(res.status == DecodeStatus::ConvergedIntegral);
        CHECK(res.hard_decision == std::vector<std::uint8_t>{1, 1, 0});
    }

    TEST_CASE("first-iteration x matches the closed form") {
        const ParityCheckMatrix h = test_code();
        const RealVec llr{2.0, -1.0, 0.5, 3.0, -2.0, 1.0, 0.25, -0.75};
        for (const XUpdateSign sign : {XUpdateSign::StandardADMM, XUpdateSign::PaperLiteral}) {
            DecoderConfig cfg;
            cfg.max_iterations = 1;
            cfg.rho = 2.0;
            cfg.x_update_sign = sign;
            RealVec seen;
            (void)decode(llr, h, cfg, {},
                         [&](int iteration, std::span<const double> x) {
                             REQUIRE(iteration == 1);
                             seen.assign(x.begin(), x.end());
                         });
            REQUIRE(seen.size() == llr.size());
            // With z initialized to one half and u to zero, the first
            // x-update reduces to +-0.5 - llr_i / (rho * degree_i).
            const double base = sign == XUpdateSign::StandardADMM ? 0.5 : -0.5;
            for (std::size_t i = 0; i < llr.size(); ++i) {
                const double di = h.col_degree(static_cast<int>(i));
                REQUIRE(seen[i] ==
                        doctest::Approx(base - llr[i] / (cfg.rho * di)).epsilon(1e-12));
            }
        }
    }

    TEST_CASE("callback runs once per iteration and the cap is honored") {
        const ParityCheckMatrix h = test_code();
        // A first bit that conflicts with the rest of the frame has to be
        // corrected through consensus, which takes several iterations, so a
        // cap of three trips before the tolerances can be met.
        const RealVec llr = awgn_llr(RealVec{-0.9, 1.0, 1.0, 1.0, 1.0, 1.0, 1.0, 1.0}, 0.8);

        DecoderConfig cfg;
        cfg.max_iterations = 3;
        cfg.primal_tolerance = 1e-12;
        cfg.dual_tolerance = 1e-12;
        int calls = 0;
        const DecodeResult res = decode(llr, h, cfg, {},
                                        [&](int iteration, std::span<const double>) {
                                            ++calls;
                                            REQUIRE(iteration == calls);
                                        });
        CHECK(calls == 3);
        CHECK(res.status == DecodeStatus::IterLimit);
        CHECK(res.iterations == 3);

        // Without the cap the same frame converges, and the callback count
        // still matches the reported iterations.
        calls = 0;
        const DecodeResult full = decode(llr, h, {}, {},
                                         [&](int iteration, std::span<const double>) {
                                             ++calls;
                                             REQUIRE(iteration == calls);
                                         });
        CHECK(full.status != DecodeStatus::IterLimit);
        CHECK(calls == full.iterations);
        CHECK(full.iterations > 3);
    }

    TEST_CASE("replica updates stay inside the parity polytope") {
        const ParityCheckMatrix h = test_code();
        int projections = 0;
        RowProjector checked = [&](std::span<const double> t) {
            const RealVec z = project(t, ParityKind::Even).z;
            REQUIRE(is_member(z, ParityKind::Even, MemberMode::FastSingleCut, 1e-9));
            ++projections;
            return z;
        };
        Xoshiro256 rng(61);
        testutil::GaussianSource noise(rng);
        RealVec received(8);
        for (auto& r : received) r = 1.0 + 0.8 * noise();
        const DecodeResult res = decode(awgn_llr(received, 0.8), h, {}, checked);
        CHECK(projections == res.iterations * h.m());
    }

    TEST_CASE("projector choices lead to the same decoding path") {
        const ParityCheckMatrix h = test_code();
        Xoshiro256 rng(62);
        testutil::GaussianSource noise(rng);
        RealVec received(8);
        for (auto& r : received) r = 1.0 + 0.5 * noise();
        const RealVec llr = awgn_llr(received, 0.5);

        DecoderConfig probe;
        probe.max_iterations = 3;
        probe.primal_tolerance = 1e-300;
        probe.dual_tolerance = 1e-300;
        std::vector<RealVec> third_iterate;
        for (const auto& proj :
             {make_row_projector(ProjectionAlgo::Fix),
              make_row_projector(ProjectionAlgo::ZhangSiegel),
              make_row_projector(ProjectionAlgo::WassonDraper), make_oracle_row_projector()}) {
            RealVec last;
            (void)decode(llr, h, probe, proj,
                         [&](int, std::span<const double> x) { last.assign(x.begin(), x.end()); });
            third_iterate.push_back(last);
        }
        for (std::size_t k = 1; k < third_iterate.size(); ++k)
            REQUIRE(testutil::linf(third_iterate[k], third_iterate[0]) <= 1e-7);

        // Full decodes agree on the hard decision as well.
        const auto fix = decode(llr, h, {}, make_row_projector(ProjectionAlgo::Fix));
        const auto zs = decode(llr, h, {}, make_row_projector(ProjectionAlgo::ZhangSiegel));
        CHECK(fix.hard_decision == zs.hard_decision);
    }

    TEST_CASE("integral outputs match brute-force maximum likelihood") {
        const ParityCheckMatrix h = test_code();
        Xoshiro256 rng(63);
        testutil::GaussianSource noise(rng);
        int integral = 0;
        for (int frame = 0; frame < 100; ++frame) {
            RealVec received(8);
            for (auto& r : received) r = 1.0 + 0.5 * noise();
            const RealVec llr = awgn_llr(received, 0.5);
            const DecodeResult res = decode(llr, h);
            if (res.status != DecodeStatus::ConvergedIntegral) continue;
            ++integral;
            REQUIRE(h.syndrome_ok(res.hard_decision));
            const auto ml = testutil::ml_decode(llr, h);
            REQUIRE(testutil::llr_metric(llr, res.hard_decision) <= ml.metric + 1e-9);
        }
        CHECK(integral >= 50); // sigma 0.5 decodes cleanly most of the time
    }

    TEST_CASE("fractional fixed points exist and undercut every codeword") {
        // At high noise the LP optimum is often a non-integral pseudocodeword.
        // For each converged-fractional output, feasibility plus a strictly
        // smaller objective than the ML codeword certifies that no integral
        // point was optimal, so the fractional status is genuine.
        const ParityCheckMatrix h = test_code();
        Xoshiro256 rng(64);
        testutil::GaussianSource noise(rng);
        int fractional = 0, certified = 0;
        for (int frame = 0; frame < 400 && certified < 5; ++frame) {
            RealVec received(8);
            for (auto& r : received) r = 1.0 + 1.1 * noise();
            const RealVec llr = awgn_llr(received, 1.1);
            const DecodeResult res = decode(llr, h);
            if (res.status != DecodeStatus::ConvergedFractional) continue;
            ++fractional;

            // Feasibility of x up to a small tolerance on every check.
            bool feasible = true;
            for (int j = 0; j < h.m(); ++j) {
                RealVec t;
                for (auto i : h.row(j)) t.push_back(res.x[static_cast<std::size_t>(i)]);
                if (!is_member(t, ParityKind::Even, MemberMode::FastSingleCut, 1e-4))
                    feasible = false;
            }
            if (!feasible) continue;

            double objective = 0.0;
            for (std::size_t i = 0; i < llr.size(); ++i) objective += llr[i] * res.x[i];
            const auto ml = testutil::ml_decode(llr, h);
            if (objective < ml.metric - 1e-3) ++certified;
        }
        CHECK(fractional >= 1);
        CHECK(certified >= 1);
    }
}
