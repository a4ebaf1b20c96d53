#pragma once

/**
 * @file measure.hpp
 * @brief Resolution-of-unity verification for both coherent-state families,
 *        by exact moment matching in log space.
 *
 * Diagonal family: ∫ d²z h^{(α)}_μ(y) |z;μ;α)(z;μ;α| = I_μ with unnormalized
 * states |z;μ;α) and the conjectured density
 *     h^{(α)}_μ(y) = A^{(α)}_μ · G^{λ-α,0}_{α,λ-α}(y | arow; brow),
 *     arow = (β̄_{μ+1}-1, …, β̄_{μ+α}-1),
 *     brow = (0, β̄_1, …, β̄_μ, β̄_{μ+α+1}-1, …, β̄_{λ-1}-1).
 * Inserting the number-state expansion and integrating the angle reduces the
 * operator identity to the radial moment system
 *     ∫₀^∞ h^{(α)}_μ(y) y^k dy = [π λ^{(λ-2α)(k+1)} c'²_k]^{-1},  k ≥ 0,
 * whose left side is A times the exact Mellin transform of the G-function.
 * A^{(α)}_μ is deliberately fixed by the k = 0 moment (it is otherwise a free
 * constant), so every k ≥ 1 moment is a genuine test of the G-parameter rows
 * against the recursion coefficients.  Verification never evaluates G
 * pointwise; quadrature of its tails is fragile while Mellin identities are
 * exact.
 *
 * Nondiagonal family (a-eigenstates): Σ_μ ∫ d²z h_μ(t) |z_μ)(z_μ| = I with
 *     h_μ(t) = λ^λ (∏_{ν≤μ} β̄_ν) t^{λ-μ-1} h^{(0)}_μ(t^λ),
 *     g_μ(t) = (1/λ) Σ_ν e^{2πiμν/λ} h_ν(t),
 * t = |z|²/λ.  Expanding |z_μ) through the eigenstate mixing coefficients and
 * integrating the angle turns each diagonal matrix element into
 *     π λ^{λ(k+1)} c'²_k × (k-th radial moment of h^{(0)}_μ) = 1,
 * the same moment system as the diagonal α = 0 case; verify_nondiagonal
 * assembles the element through the eigenstate weight bookkeeping, realizing
 * the equivalence of the two resolutions as a computation.
 */

#include <cmath>
#include <complex>
#include <stdexcept>
#include <string>
#include <vector>

#include "clox/algebra.hpp"
#include "clox/cstates.hpp"
#include "clox/specfun.hpp"

namespace clox {

struct RadialMeasure {
    int mu = 0;
    int alpha = 0;
    MeijerParams mg;
    double logA = 0.0;  // log of the normalization constant
};

/// Logs of the required radial moments for k = 0..kmax:
///     log[π λ^{(λ-2α)(k+1)} c'²_k]^{-1}.
inline std::vector<double> required_log_moments(const AlgebraParams& p, int mu,
                                                int alpha, int kmax) {
    check_cs_labels(p, mu, alpha);
    const std::vector<long double> logc = cs_log_coefficients(p, mu, alpha, kmax);
    const long double loglam = std::log(static_cast<long double>(p.lambda));
    const long double logpi = 1.1447298858494001741434273513531L;  // log(π)
    std::vector<double> out(static_cast<std::size_t>(kmax) + 1);
    for (int k = 0; k <= kmax; ++k)
        out[static_cast<std::size_t>(k)] = static_cast<double>(
            -logpi - static_cast<long double>(p.lambda - 2 * alpha) * (k + 1) * loglam -
            2.0L * logc[static_cast<std::size_t>(k)]);
    return out;
}

inline double required_log_moment(const AlgebraParams& p, int mu, int alpha, int k) {
    return required_log_moments(p, mu, alpha, k).back();
}

/// G-function parameter rows of the density for the (μ, α) family, with the
/// normalization constant fixed by the k = 0 moment.
inline RadialMeasure radial_measure(const AlgebraParams& p, int mu, int alpha) {
    check_cs_labels(p, mu, alpha);
    RadialMeasure rm;
    rm.mu = mu;
    rm.alpha = alpha;
    for (int nu = mu + 1; nu <= mu + alpha; ++nu)
        rm.mg.arow.push_back(p.betabar[nu] - 1.0);
    rm.mg.brow.push_back(0.0);
    for (int nu = 1; nu <= mu; ++nu) rm.mg.brow.push_back(p.betabar[nu]);
    for (int nu = mu + alpha + 1; nu <= p.lambda - 1; ++nu)
        rm.mg.brow.push_back(p.betabar[nu] - 1.0);
    rm.logA = required_log_moment(p, mu, alpha, 0) - mellin_meijer_g(rm.mg, 1.0);
    return rm;
}

/// True when pointwise density evaluation is available (all pairwise
/// b-differences safely non-integer).
inline bool is_generic_measure(const RadialMeasure& rm) {
    for (std::size_t i = 0; i < rm.mg.brow.size(); ++i)
        for (std::size_t j = i + 1; j < rm.mg.brow.size(); ++j)
            if (detail::near_integer(rm.mg.brow[i] - rm.mg.brow[j])) return false;
    return true;
}

/// Pointwise density value h(y) = A·G(y).  Generic parameters only; the
/// moment-level checks below never call this.
inline double density_value(const RadialMeasure& rm, double y) {
    return std::exp(rm.logA) * meijer_g_residue_series(rm.mg, y);
}

/// Max over k = 0..kmax of the relative moment mismatch
/// |exp(logA + Mellin(k+1) − required(k)) − 1|.
inline double verify_resolution(const AlgebraParams& p, int mu, int alpha, int kmax) {
    const RadialMeasure rm = radial_measure(p, mu, alpha);
    const std::vector<double> req = required_log_moments(p, mu, alpha, kmax);
    double worst = 0.0;
    for (int k = 0; k <= kmax; ++k) {
        const double lhs = rm.logA + mellin_meijer_g(rm.mg, static_cast<double>(k) + 1.0);
        worst = std::max(worst, std::abs(std::expm1(lhs - req[static_cast<std::size_t>(k)])));
    }
    return worst;
}

struct NondiagonalWeights {
    std::vector<double> h;                 // h_0..h_{λ-1} at the given t
    std::vector<std::complex<double>> g;   // inverse DFT of h
};

/// Pointwise weights of the nondiagonal resolution at radial variable t.
/// Needs the residue-series evaluator, hence generic parameters; degenerate
/// parameter sets must fall back to the moment-level equivalence check.
inline NondiagonalWeights nondiagonal_weights(const AlgebraParams& p, double t) {
    if (!(t > 0.0))
        throw std::invalid_argument("nondiagonal_weights: t must be positive");
    NondiagonalWeights w;
    w.h.resize(p.lambda);
    const double tlam = std::pow(t, p.lambda);
    double bbar_prod = 1.0;
    for (int mu = 0; mu < p.lambda; ++mu) {
        if (mu > 0) bbar_prod *= p.betabar[mu];
        const RadialMeasure rm = radial_measure(p, mu, 0);
        if (!is_generic_measure(rm))
            throw std::invalid_argument(
                "nondiagonal_weights: degenerate parameters (integer b-differences); "
                "pointwise weights unavailable, use the moment-level equivalence check");
        w.h[mu] = std::pow(static_cast<double>(p.lambda), p.lambda) * bbar_prod *
                  std::pow(t, p.lambda - mu - 1) * density_value(rm, tlam);
    }
    w.g.resize(p.lambda);
    for (int mu = 0; mu < p.lambda; ++mu) {
        std::complex<double> acc(0.0, 0.0);
        for (int nu = 0; nu < p.lambda; ++nu)
            acc += w.h[nu] * std::polar(1.0, detail::kTwoPi * mu * nu / p.lambda);
        w.g[mu] = acc / static_cast<double>(p.lambda);
    }
    return w;
}

/// Max relative mismatch of the nondiagonal unity resolution, reduced to its
/// moment system.  Each diagonal element ⟨kλ+μ| · |kλ+μ⟩ is assembled from
/// the eigenstate weight bookkeeping (grade factor λ^{-μ} ∏β̄^{-1} c'²_k, the
/// angular 2π, the t-substitution Jacobian, and the h_μ prefactors) times the
/// measured moment A_μ·Mellin(k+1); the product must be 1.
inline double verify_nondiagonal(const AlgebraParams& p, int kmax) {
    const long double loglam = std::log(static_cast<long double>(p.lambda));
    const long double logpi = 1.1447298858494001741434273513531L;
    double worst = 0.0;
    long double log_bbar_prod = 0.0L;
    for (int mu = 0; mu < p.lambda; ++mu) {
        if (mu > 0) log_bbar_prod += std::log(static_cast<long double>(p.betabar[mu]));
        const RadialMeasure rm = radial_measure(p, mu, 0);
        const std::vector<long double> logc = cs_log_coefficients(p, mu, 0, kmax);
        for (int k = 0; k <= kmax; ++k) {
            // log of the squared eigenstate weight carried by |kλ+μ⟩
            const long double log_w2 =
                -static_cast<long double>(mu) * loglam - log_bbar_prod +
                2.0L * logc[static_cast<std::size_t>(k)];
            // angle integral, Jacobian, and h_μ prefactors
            const long double log_geom =
                logpi +
                static_cast<long double>(p.lambda) * (k + 1) * loglam +
                static_cast<long double>(mu) * loglam + log_bbar_prod;
            const long double log_moment =
                static_cast<long double>(rm.logA) +
                static_cast<long double>(
                    mellin_meijer_g(rm.mg, static_cast<double>(k) + 1.0));
            worst = std::max(
                worst, std::abs(std::expm1(
                           static_cast<double>(log_w2 + log_geom + log_moment))));
        }
    }
    return worst;
}

}  // namespace clox
