#pragma once

#include <cstdint>

#include "parityproj/opcount.hpp"

namespace parityproj::detail {

// Arithmetic instrumentation hooks. Algorithm kernels are templates over one
// of these so the uncounted path compiles to nothing and both paths run the
// exact same arithmetic.
struct NullOps {
    static void div(std::uint64_t = 1) {}
    static void mul(std::uint64_t = 1) {}
    static void low(std::uint64_t = 1) {}
};

struct CountingOps {
    OpCounters* c;
    void div(std::uint64_t n = 1) const { c->divisions += n; }
    void mul(std::uint64_t n = 1) const { c->multiplications += n; }
    void low(std::uint64_t n = 1) const { c->low_complexity += n; }
};

} // namespace parityproj::detail
