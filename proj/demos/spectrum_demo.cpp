// Prints the low-lying spectrum of a few deformed oscillators next to the
// undeformed one, and the worst algebra deviation of each truncated
// representation.

#include <cstdio>
#include <vector>

#include "clox/fock.hpp"

int main() {
    struct Entry {
        const char* name;
        int lambda;
        std::vector<double> alpha;
    };
    const std::vector<Entry> entries = {
        {"oscillator", 2, {0.0, 0.0}},
        {"evenly spaced", 2, {1.0, -1.0}},
        {"three-grade", 3, {0.7, 0.1, -0.8}},
    };

    for (const Entry& e : entries) {
        const clox::AlgebraParams p = clox::validate_params(e.lambda, e.alpha);
        const std::vector<double> energies = clox::spectrum(p, 8);

        std::printf("%s (lambda=%d):\n  E_n =", e.name, e.lambda);
        for (double en : energies) std::printf(" %.6f", en);
        std::printf("\n");

        const clox::FockRep rep = clox::build_fock(p, 60);
        double worst = 0.0;
        for (const auto& d : clox::check_algebra(rep))
            worst = std::max(worst, d.deviation);
        std::printf("  worst algebra deviation at dim %d: %.3g\n\n", rep.dim, worst);
    }
    return 0;
}
