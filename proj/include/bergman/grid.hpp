#pragma once

#include <cmath>
#include <string>
#include <vector>

namespace bergman {

// Radial sampling grids shared by the sweep and classification code.
struct RadialGrid {
    enum class Scheme { Dyadic, GjSequence, Uniform };

    std::vector<double> nodes;
    Scheme scheme = Scheme::Dyadic;

    // r_k = 1 - 2^{-k}, k = 0..k_max
    static RadialGrid dyadic(int k_max) {
        RadialGrid g;
        g.scheme = Scheme::Dyadic;
        for (int k = 0; k <= k_max; ++k) g.nodes.push_back(1.0 - std::ldexp(1.0, -k));
        return g;
    }

    // r_j = 1 - 1/(2j+1), j = 0..j_max
    static RadialGrid gj_sequence(int j_max) {
        RadialGrid g;
        g.scheme = Scheme::GjSequence;
        for (int j = 0; j <= j_max; ++j) g.nodes.push_back(1.0 - 1.0 / (2.0 * j + 1.0));
        return g;
    }

    static RadialGrid uniform(double lo, double hi, int count) {
        RadialGrid g;
        g.scheme = Scheme::Uniform;
        for (int i = 0; i < count; ++i)
            g.nodes.push_back(lo + (hi - lo) * i / static_cast<double>(count - 1));
        return g;
    }

    std::size_t size() const { return nodes.size(); }
};

} // namespace bergman
