#pragma once

#include <complex>
#include <cstdint>
#include <functional>

#include "bergman/ballgeom.hpp"
#include "bergman/parallel.hpp"

namespace bergman::mc {

using ballgeom::BallPoint;
using ballgeom::Complex;

struct Result {
    Complex value{0.0, 0.0};
    double std_error = 0.0;
    long long samples = 0;
};

// Monte-Carlo estimate of int_B f dV (normalized volume) by uniform sampling.
// Samples are drawn in fixed-size chunks with counter-based streams, and the
// chunk sums are reduced in index order, so the result is bit-identical for
// Exec::Serial and Exec::OpenMP at any thread count.
Result ball_integral(int n, std::uint64_t seed, long long samples,
                     const std::function<Complex(const BallPoint&)>& f,
                     Exec exec = Exec::OpenMP);

} // namespace bergman::mc
