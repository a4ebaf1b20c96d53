#pragma once

/**
 * @file algebra.hpp
 * @brief Parameters of the C_λ-extended oscillator algebra and its structure function.
 *
 * The algebra is the boson algebra extended by the cyclic group C_λ,
 *     [a, a†] = I + Σ_μ α_μ P_μ = I + Σ_μ κ_μ T^μ,
 * where T = exp(2πiN/λ) generates C_λ and P_μ projects on the grade-μ
 * subspace of the Z_λ-graded Fock space.  Everything downstream (Fock
 * matrices, coherent states, unity-resolution measures, Bargmann operators)
 * is driven by the structure function
 *     F(n) = n + β_{n mod λ} = λ(k + β̄_μ)   for n = kλ + μ,
 * with β_μ = Σ_{ν<μ} α_ν and β̄_μ = (β_μ + μ)/λ.
 *
 * AlgebraParams is immutable after validation; all functions here are pure.
 */

#include <cmath>
#include <complex>
#include <cstddef>
#include <stdexcept>
#include <string>
#include <vector>

namespace clox {

namespace detail {
inline constexpr double kTwoPi = 6.283185307179586476925286766559;
}

/// Validated parameter set of the C_λ-extended oscillator algebra.
///
/// Invariants (established by validate_params, then never mutated):
///   - Σ α_μ = 0 within 1e-12,
///   - beta[0] = beta[lambda] = 0, beta[μ] = Σ_{ν<μ} α_ν,
///   - betabar[0] = 0, betabar[lambda] = 1, betabar[μ] = (beta[μ]+μ)/λ > 0
///     for μ = 1..λ-1 (admissibility: unitary Fock representation).
struct AlgebraParams {
    int lambda = 0;
    std::vector<double> alpha;    // size lambda
    std::vector<double> beta;     // size lambda+1
    std::vector<double> betabar;  // size lambda+1
    double tol = 1e-10;           // global numeric tolerance knob

    /// β̄ with the extended-index convention β̄_{ν+λ} = β̄_ν + 1 (ν ≥ 0).
    double betabar_ext(long long nu) const {
        const long long q = nu / lambda;
        const long long r = nu % lambda;
        return betabar[static_cast<std::size_t>(r)] + static_cast<double>(q);
    }
};

/// Builds an AlgebraParams from (λ, α, tol), checking all invariants.
///
/// Rejects λ < 2, a wrong-sized α, |Σ α_μ| > 1e-12 (inconsistent
/// parameters; no silent renormalization), and any β̄_μ ≤ 0
/// (non-unitarizable Fock representation).
inline AlgebraParams validate_params(int lambda, std::vector<double> alpha,
                                     double tol = 1e-10) {
    if (lambda < 2)
        throw std::invalid_argument("validate_params: lambda must be >= 2, got " +
                                    std::to_string(lambda));
    if (alpha.size() != static_cast<std::size_t>(lambda))
        throw std::invalid_argument("validate_params: alpha must have exactly lambda = " +
                                    std::to_string(lambda) + " entries, got " +
                                    std::to_string(alpha.size()));
    if (!(tol > 0.0))
        throw std::invalid_argument("validate_params: tol must be positive");

    double sum = 0.0;
    for (double a : alpha) {
        if (!std::isfinite(a))
            throw std::invalid_argument("validate_params: non-finite alpha entry");
        sum += a;
    }
    if (std::abs(sum) > 1e-12)
        throw std::invalid_argument(
            "validate_params: inconsistent parameters, sum(alpha) = " +
            std::to_string(sum) + " (must vanish within 1e-12)");

    AlgebraParams p;
    p.lambda = lambda;
    p.alpha = std::move(alpha);
    p.tol = tol;

    p.beta.assign(static_cast<std::size_t>(lambda) + 1, 0.0);
    for (int mu = 1; mu < lambda; ++mu)
        p.beta[static_cast<std::size_t>(mu)] =
            p.beta[static_cast<std::size_t>(mu - 1)] + p.alpha[static_cast<std::size_t>(mu - 1)];
    p.beta[static_cast<std::size_t>(lambda)] = 0.0;  // exact, sum(alpha) vanishes

    p.betabar.assign(static_cast<std::size_t>(lambda) + 1, 0.0);
    p.betabar[static_cast<std::size_t>(lambda)] = 1.0;
    for (int mu = 1; mu < lambda; ++mu) {
        const double bb = (p.beta[static_cast<std::size_t>(mu)] + mu) / lambda;
        if (!(bb > 0.0))
            throw std::invalid_argument(
                "validate_params: non-unitarizable Fock representation, betabar[" +
                std::to_string(mu) + "] = " + std::to_string(bb) + " is not > 0");
        p.betabar[static_cast<std::size_t>(mu)] = bb;
    }
    return p;
}

/// Structure function F(n): eigenvalue of a†a on the number state |n⟩.
///
/// F(0) = 0, F(n) > 0 for n ≥ 1, F(n+λ) = F(n) + λ,
/// F(n+1) - F(n) = 1 + α_{n mod λ}.
inline double structure_function(const AlgebraParams& p, long long n) {
    if (n < 0)
        throw std::invalid_argument("structure_function: n must be >= 0");
    return static_cast<double>(n) + p.beta[static_cast<std::size_t>(n % p.lambda)];
}

/// κ_ν = (1/λ) Σ_μ α_μ exp(-2πiμν/λ): the T-power form of the extension.
/// Satisfies κ_0 = 0 and κ_ν* = κ_{λ-ν}.
inline std::vector<std::complex<double>> kappa_from_alpha(const AlgebraParams& p) {
    const double lam = p.lambda;
    std::vector<std::complex<double>> kappa(static_cast<std::size_t>(p.lambda));
    constexpr double two_pi = detail::kTwoPi;
    for (int nu = 0; nu < p.lambda; ++nu) {
        std::complex<double> acc(0.0, 0.0);
        for (int mu = 0; mu < p.lambda; ++mu)
            acc += p.alpha[static_cast<std::size_t>(mu)] *
                   std::polar(1.0, -two_pi * mu * nu / lam);
        kappa[static_cast<std::size_t>(nu)] = acc / lam;
    }
    return kappa;
}

/// Inverse discrete transform: α_μ = Σ_ν κ_ν exp(+2πiμν/λ).
/// Round-trips kappa_from_alpha within 1e-12.
inline std::vector<double> alpha_from_kappa(int lambda,
                                            const std::vector<std::complex<double>>& kappa) {
    if (kappa.size() != static_cast<std::size_t>(lambda))
        throw std::invalid_argument("alpha_from_kappa: kappa must have lambda entries");
    constexpr double two_pi = detail::kTwoPi;
    std::vector<double> alpha(static_cast<std::size_t>(lambda));
    for (int mu = 0; mu < lambda; ++mu) {
        std::complex<double> acc(0.0, 0.0);
        for (int nu = 0; nu < lambda; ++nu)
            acc += kappa[static_cast<std::size_t>(nu)] *
                   std::polar(1.0, two_pi * mu * nu / static_cast<double>(lambda));
        alpha[static_cast<std::size_t>(mu)] = acc.real();
    }
    return alpha;
}

}  // namespace clox
