#include <doctest.h>

#include <algorithm>
#include <cmath>
#include <cstdint>
#include <numeric>
#include <utility>
#include <vector>

#include "parityproj/detail/fix_impl.hpp"
#include "parityproj/detail/ops_policy.hpp"
#include "parityproj/fix_projection.hpp"
#include "parityproj/geometry.hpp"
#include "parityproj/oracle.hpp"
#include "test_util.hpp"

using namespace parityproj;
using testutil::linf;
using testutil::parity_vertices;
using testutil::rand_vec;

namespace {

// Captures per-pass hyperplane points and fixes keyed by original index.
struct Recorder {
    struct Pass {
        std::vector<std::pair<int, double>> v;
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

RealVec flip_first(RealVec x) {
    x[0] = 1.0 - x[0];
    return x;
}

bool valid_permutation(const std::vector<std::int32_t>& q, int d) {
    std::vector<std::int32_t> sorted(q);
    std::sort(sorted.begin(), sorted.end());
    for (int i = 0; i < d; ++i)
        if (sorted[static_cast<std::size_t>(i)] != i) return false;
    return static_cast<int>(q.size()) == d;
}

} // namespace

TEST_SUITE("fix") {

    TEST_CASE("worked three-component example, bit exact") {
        const RealVec x{0.5, 1.0, 2.75};
        const auto res = project(x, ParityKind::Even);
        CHECK(res.z == RealVec{0.25, 0.75, 1.0});
        CHECK(res.trace.iterations == 2);
        CHECK(res.trace.fixes_per_iteration == std::vector<std::uint32_t>{1});
        CHECK(res.trace.permutation == std::vector<std::int32_t>{2, 1, 0});
        CHECK(res.trace.terminated_by == TerminationReason::InteriorOfFace);

        // Replay with the instrumented core to see the intermediate points.
        FixWorkspace ws;
        RealVec z;
        ProjectionTrace trace;
        Recorder rec;
        detail::NullOps ops;
        detail::fix_project_impl(std::span<const double>(x), ParityKind::Even, ws, z, trace, ops,
                                 rec);
        CHECK(z == res.z);
        REQUIRE(rec.passes.size() == 2);
        const auto& p1 = rec.passes[0];
        REQUIRE(p1.v.size() == 3);
        CHECK(p1.v[0] == std::pair<int, double>{0, -0.25});
        CHECK(p1.v[1] == std::pair<int, double>{1, 0.25});
        CHECK(p1.v[2] == std::pair<int, double>{2, 2.0});
        REQUIRE(p1.fixed.size() == 1);
        CHECK(p1.fixed[0] == std::pair<int, double>{2, 1.0});
        const auto& p2 = rec.passes[1];
        REQUIRE(p2.v.size() == 2);
        CHECK(p2.v[0] == std::pair<int, double>{1, 0.75});
        CHECK(p2.v[1] == std::pair<int, double>{0, 0.25});
        CHECK(p2.fixed.empty());
    }

    TEST_CASE("hyperplane projection") {
        const ForbiddenSetInequality q{{1, 1, 1}, 2};
        const RealVec v = project_hyperplane(RealVec{0.5, 1.0, 2.75}, q);
        CHECK(v == RealVec{-0.25, 0.25, 2.0});
        CHECK(testutil::violation(v, q) == doctest::Approx(0.0).epsilon(1e-15));
        CHECK_THROWS_AS((void)project_hyperplane(RealVec{1.0}, q), std::invalid_argument);
        CHECK_THROWS_AS((void)project_hyperplane(RealVec{}, ForbiddenSetInequality{}),
                        std::invalid_argument);

        // Mixed signs: projection moves along theta, reaching the hyperplane.
        Xoshiro256 rng(21);
        for (int rep = 0; rep < 200; ++rep) {
            const int d = 2 + static_cast<int>(rng.next() % 9);
            const RealVec x = rand_vec(rng, d, 3.0);
            ForbiddenSetInequality f;
            f.theta.resize(static_cast<std::size_t>(d));
            int pos = 0;
            for (auto& t : f.theta) {
                t = rng.next() & 1 ? 1 : -1;
                pos += t > 0;
            }
            f.p = pos - 1;
            const RealVec w = project_hyperplane(x, f);
            REQUIRE(std::abs(testutil::violation(w, f)) < 1e-9);
        }
    }

    TEST_CASE("degree one") {
        const auto hard_even = project(RealVec{0.7}, ParityKind::Even);
        CHECK(hard_even.z == RealVec{0.0});
        CHECK(hard_even.trace.terminated_by == TerminationReason::DimensionOne);
        CHECK(hard_even.trace.iterations == 0);

        const auto hard_odd = project(RealVec{0.2}, ParityKind::Odd);
        CHECK(hard_odd.z == RealVec{1.0});
        CHECK(hard_odd.trace.terminated_by == TerminationReason::DimensionOne);

        const auto easy_even = project(RealVec{-0.3}, ParityKind::Even);
        CHECK(easy_even.z == RealVec{0.0});
        CHECK(easy_even.trace.terminated_by == TerminationReason::BoxFeasible);

        const auto easy_odd = project(RealVec{1.4}, ParityKind::Odd);
        CHECK(easy_odd.z == RealVec{1.0});
        CHECK(easy_odd.trace.terminated_by == TerminationReason::BoxFeasible);
    }

    TEST_CASE("members project to their clamp") {
        Xoshiro256 rng(22);
        for (int d = 2; d <= 10; ++d) {
            for (const ParityKind kind : {ParityKind::Even, ParityKind::Odd}) {
                const auto vertices = parity_vertices(d, kind);
                for (const auto& v : vertices) {
                    const auto res = project(v, kind);
                    REQUIRE(res.z == v);
                    REQUIRE(res.trace.terminated_by == TerminationReason::BoxFeasible);
                    REQUIRE(res.trace.iterations == 0);
                }
                for (int rep = 0; rep < 100; ++rep) {
                    const RealVec y = testutil::random_member(rng, vertices);
                    const auto res = project(y, kind);
                    REQUIRE(linf(res.z, y) <= 1e-12);
                }
            }
        }
    }

    TEST_CASE("idempotence and feasibility of outputs") {
        Xoshiro256 rng(23);
        for (int d = 2; d <= 12; ++d) {
            for (int rep = 0; rep < 150; ++rep) {
                for (const ParityKind kind : {ParityKind::Even, ParityKind::Odd}) {
                    const RealVec x = rand_vec(rng, d, 4.0);
                    const auto res = project(x, kind);
                    for (double zi : res.z) REQUIRE((zi >= 0.0 && zi <= 1.0));
                    REQUIRE(is_member(res.z, kind, MemberMode::FastSingleCut, 1e-9));
                    const auto again = project(res.z, kind);
                    REQUIRE(linf(again.z, res.z) <= 1e-9);
                }
            }
        }
    }

    TEST_CASE("nonexpansiveness") {
        Xoshiro256 rng(24);
        for (int d = 2; d <= 12; ++d) {
            for (int rep = 0; rep < 150; ++rep) {
                for (const ParityKind kind : {ParityKind::Even, ParityKind::Odd}) {
                    const RealVec x = rand_vec(rng, d, 3.0);
                    const RealVec y = rand_vec(rng, d, 3.0);
                    const double dz = testutil::dist2(project(x, kind).z, project(y, kind).z);
                    const double dx = testutil::dist2(x, y);
                    REQUIRE(std::sqrt(dz) <= std::sqrt(dx) + 1e-12);
                }
            }
        }
    }

    TEST_CASE("agreement with the waterline reference") {
        Xoshiro256 rng(25);
        FixWorkspace ws;
        for (int d = 2; d <= 16; ++d) {
            for (const double a : {1.0, 5.0}) {
                for (int rep = 0; rep < 750; ++rep) {
                    for (const ParityKind kind : {ParityKind::Even, ParityKind::Odd}) {
                        const RealVec x = rand_vec(rng, d, a);
                        const RealVec ref = oracle::project(x, kind);
                        const auto res = project(x, kind, ws);
                        REQUIRE(linf(res.z, ref) <= 1e-9);
                    }
                }
            }
        }
    }

    TEST_CASE("odd projections via the even polytope and a reflection") {
        // x1 -> 1-x1 is an isometry exchanging the two polytopes, so it must
        // commute with the projections.
        Xoshiro256 rng(26);
        for (int d = 2; d <= 10; ++d) {
            for (int rep = 0; rep < 200; ++rep) {
                const RealVec x = rand_vec(rng, d, 4.0);
                const RealVec via_even =
                    flip_first(project(flip_first(x), ParityKind::Even).z);
                REQUIRE(linf(project(x, ParityKind::Odd).z, via_even) <= 1e-9);
            }
        }
    }

    TEST_CASE("trace invariants") {
        Xoshiro256 rng(27);
        for (int d = 2; d <= 16; ++d) {
            for (int rep = 0; rep < 200; ++rep) {
                const RealVec x = rand_vec(rng, d, 5.0);
                const auto res = project(x, ParityKind::Even);
                REQUIRE(res.trace.iterations <= static_cast<std::uint32_t>(d - 1));
                REQUIRE(valid_permutation(res.trace.permutation, d));
                std::uint32_t fixed_total = 0;
                for (auto fpi : res.trace.fixes_per_iteration) {
                    REQUIRE(fpi >= 1);
                    fixed_total += fpi;
                }
                REQUIRE(fixed_total <= static_cast<std::uint32_t>(d - 1));
                if (res.trace.terminated_by == TerminationReason::BoxFeasible) {
                    REQUIRE(res.trace.iterations == 0);
                    REQUIRE(res.z == clamp_unit_box(x));
                } else if (res.trace.terminated_by == TerminationReason::InteriorOfFace) {
                    REQUIRE(res.trace.iterations >= 1);
                }
            }
        }
    }

    TEST_CASE("workspace reuse matches fresh calls") {
        Xoshiro256 rng(28);
        FixWorkspace ws;
        for (int rep = 0; rep < 200; ++rep) {
            const int d = 2 + static_cast<int>(rng.next() % 15);
            const RealVec x = rand_vec(rng, d, 5.0);
            const auto shared = project(x, ParityKind::Even, ws);
            const auto fresh = project(x, ParityKind::Even);
            REQUIRE(shared.z == fresh.z);
            REQUIRE(shared.trace.iterations == fresh.trace.iterations);
            REQUIRE(shared.trace.permutation == fresh.trace.permutation);
        }
    }

    TEST_CASE("empty input throws") {
        CHECK_THROWS_AS((void)project(RealVec{}, ParityKind::Even), std::invalid_argument);
        OpCounters c;
        CHECK_THROWS_AS((void)project_counted(RealVec{}, ParityKind::Even, c),
                        std::invalid_argument);
    }
}
