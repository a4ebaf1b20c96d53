#pragma once

/**
 * @file sweep.hpp
 * @brief Deterministic random sampling of admissible parameter sets.
 *
 * Sampling is done in the β̄ coordinates, where admissibility is the box
 * constraint β̄_μ > 0: draw β̄_μ uniformly in (0.1, 3) for μ = 1..λ-1 and
 * map back through β_μ = λβ̄_μ − μ, α_μ = β_{μ+1} − β_μ.  The map is exact
 * up to float roundoff, so Σα_μ vanishes to machine precision and no
 * repair step is needed.
 *
 * The generator path is pinned (mt19937_64 + an explicit 53-bit uniform),
 * so a seed reproduces the same parameter sets on any platform.
 */

#include <cstdint>
#include <random>
#include <vector>

namespace clox {

/// Uniform double in [0,1) from the top 53 bits of one 64-bit draw.
inline double uniform01(std::mt19937_64& gen) {
    return static_cast<double>(gen() >> 11) * 0x1.0p-53;
}

/// One admissible α vector for the given λ.
inline std::vector<double> sample_admissible_alpha(int lambda, std::mt19937_64& gen) {
    std::vector<double> betabar(static_cast<std::size_t>(lambda) + 1, 0.0);
    for (int mu = 1; mu < lambda; ++mu)
        betabar[static_cast<std::size_t>(mu)] = 0.1 + 2.9 * uniform01(gen);
    betabar[static_cast<std::size_t>(lambda)] = 1.0;

    std::vector<double> beta(static_cast<std::size_t>(lambda) + 1, 0.0);
    for (int mu = 0; mu <= lambda; ++mu)
        beta[static_cast<std::size_t>(mu)] =
            lambda * betabar[static_cast<std::size_t>(mu)] - mu;

    std::vector<double> alpha(static_cast<std::size_t>(lambda));
    for (int mu = 0; mu < lambda; ++mu)
        alpha[static_cast<std::size_t>(mu)] =
            beta[static_cast<std::size_t>(mu) + 1] - beta[static_cast<std::size_t>(mu)];
    return alpha;
}

/// count admissible α vectors from one seeded stream.
inline std::vector<std::vector<double>> sample_admissible_alphas(int lambda, int count,
                                                                 std::uint64_t seed) {
    std::mt19937_64 gen(seed);
    std::vector<std::vector<double>> out;
    out.reserve(static_cast<std::size_t>(count));
    for (int i = 0; i < count; ++i) out.push_back(sample_admissible_alpha(lambda, gen));
    return out;
}

}  // namespace clox
