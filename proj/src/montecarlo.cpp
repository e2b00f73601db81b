#include "bergman/montecarlo.hpp"

#include <cmath>
#include <vector>

#include "bergman/special.hpp"

namespace bergman::mc {

namespace {
constexpr long long kChunk = 1 << 16;
}

Result ball_integral(int n, std::uint64_t seed, long long samples,
                     const std::function<Complex(const BallPoint&)>& f, Exec exec) {
    long long n_chunks = (samples + kChunk - 1) / kChunk;
    std::vector<Complex> sums(static_cast<std::size_t>(n_chunks), Complex(0, 0));
    std::vector<double> sq_sums(static_cast<std::size_t>(n_chunks), 0.0);

    parallel_for(static_cast<std::size_t>(n_chunks), exec, [&](std::size_t c) {
        special::SplitMixStream rng(seed, c);
        long long count = std::min<long long>(kChunk, samples - static_cast<long long>(c) * kChunk);
        Complex acc(0, 0);
        double acc2 = 0.0;
        std::vector<Complex> coords(static_cast<std::size_t>(n));
        for (long long i = 0; i < count; ++i) {
            double norm2 = 0.0;
            for (int d = 0; d < n; ++d) {
                double re = rng.next_normal(), im = rng.next_normal();
                coords[static_cast<std::size_t>(d)] = Complex(re, im);
                norm2 += re * re + im * im;
            }
            double radius = std::pow(rng.next_uniform(), 1.0 / (2.0 * n));
            double scale = radius / std::sqrt(norm2);
            for (auto& z : coords) z *= scale;
            Complex v = f(BallPoint(coords));
            acc += v;
            acc2 += std::norm(v);
        }
        sums[c] = acc;
        sq_sums[c] = acc2;
    });

    Complex total(0, 0);
    double total2 = 0.0;
    for (std::size_t c = 0; c < sums.size(); ++c) {
        total += sums[c];
        total2 += sq_sums[c];
    }
    Result out;
    out.samples = samples;
    out.value = total / static_cast<double>(samples);
    double mean2 = total2 / static_cast<double>(samples);
    double var = std::max(0.0, mean2 - std::norm(out.value));
    out.std_error = std::sqrt(var / static_cast<double>(samples));
    return out;
}

} // namespace bergman::mc
