#pragma once

/**
 * @file cstates.hpp
 * @brief Both coherent-state families of the C_λ-extended oscillator.
 *
 * Family 1, |z;μ;α⟩: the normalizable solutions of
 *     (a^{λ-α} − z (a†)^α) |z;μ;α⟩ = 0
 * inside the grade-μ subspace, with 0 ≤ α ≤ λ/2 and 0 ≤ μ ≤ λ−α−1 (exactly
 * the range where the k=0 lowering term vanishes).  Expanded over number
 * states the amplitudes are c'_k z^k on |kλ+μ⟩; the k-dependent positive
 * coefficients obey the two-term recursion
 *     c'_{k+1} = c'_k √(∏_{j=1..α} F(kλ+μ+j)) / √(∏_{i=0..λ-α-1} F((k+1)λ+μ−i)),
 * normalized by the convention c'_0 = 1 (any k-independent rescaling cancels
 * in every normalized quantity).  The closed-form normalization is
 *     N^{(α)}_μ(|z|) = ₐF_{λ-α-1}(β̄_{μ+1}..β̄_{μ+α};
 *                                 β̄_1+1..β̄_μ+1, β̄_{μ+α+1}..β̄_{λ-1}; y),
 *     y = |z|² / λ^{λ-2α},
 * and the agreement of Σ c'²_k |z|^{2k} with it is the central
 * cross-validation between the recursion and the hypergeometric form.
 *
 * Family 2, |z⟩ with a|z⟩ = z|z⟩: assembled across all grades from the α=0
 * family at label ω = z^λ,
 *     |z⟩ = 𝒩^{-1/2} Σ_μ d'_μ (z/√λ)^μ |ω;μ;0⟩,
 *     d'_μ = [N^{(0)}_μ(|ω|) / ∏_{ν=1..μ} β̄_ν]^{1/2},
 *     𝒩(|z|) = Σ_μ ₀F_{λ-1}(β̄_1+1..β̄_μ+1, β̄_{μ+1}..β̄_{λ-1}; t^λ)
 *              · t^μ / ∏_{ν=1..μ} β̄_ν,   t = |z|²/λ.
 *
 * Truncation: K is chosen adaptively from the tail bound
 * c'²_K |z|^{2K} / norm < 1e-14; residual checks of the defining equations
 * exclude the top grade of the support, where the truncated ladder matrices
 * cannot reproduce the missing k = K+1 component.
 */

#include <algorithm>
#include <cmath>
#include <complex>
#include <stdexcept>
#include <string>
#include <vector>

#include <Eigen/Dense>

#include "clox/algebra.hpp"
#include "clox/fock.hpp"
#include "clox/specfun.hpp"

namespace clox {

struct CoherentState {
    std::complex<double> z;
    int mu = 0;
    int alpha = 0;
    std::vector<double> cprime;  // c'_0..c'_kmax, all positive
    double norm = 1.0;           // N^{(α)}_μ(|z|)
    int kmax = 0;
};

struct EigenCS {
    std::complex<double> z;
    std::vector<double> dprime;             // d'_0..d'_{λ-1}
    double norm = 1.0;                      // 𝒩(|z|)
    std::vector<CoherentState> components;  // label ω = z^λ, alpha = 0
};

/// Throws unless (mu, alpha) is a valid label pair: 0 ≤ α ≤ λ/2 and
/// 0 ≤ μ ≤ λ−α−1.
inline void check_cs_labels(const AlgebraParams& p, int mu, int alpha) {
    if (alpha < 0 || 2 * alpha > p.lambda)
        throw std::invalid_argument("coherent state: alpha must be in [0, lambda/2], got " +
                                    std::to_string(alpha));
    if (mu < 0 || mu > p.lambda - alpha - 1)
        throw std::invalid_argument(
            "coherent state: mu must be in [0, lambda-alpha-1], got " +
            std::to_string(mu) + " (no normalizable solution outside this range)");
}

/// Natural logs of c'_0..c'_kmax by the recursion, accumulated in long
/// double.  This is the precision-critical path: downstream moment and
/// weight checks take differences of these logs at magnitudes of order 10³.
inline std::vector<long double> cs_log_coefficients(const AlgebraParams& p, int mu,
                                                    int alpha, int kmax) {
    check_cs_labels(p, mu, alpha);
    if (kmax < 0) throw std::invalid_argument("cs_log_coefficients: kmax must be >= 0");
    std::vector<long double> logc(static_cast<std::size_t>(kmax) + 1, 0.0L);
    long double acc = 0.0L;
    for (int k = 0; k < kmax; ++k) {
        const long long base = static_cast<long long>(k) * p.lambda + mu;
        for (int j = 1; j <= alpha; ++j)
            acc += 0.5L * std::log(static_cast<long double>(structure_function(p, base + j)));
        const long long top = (static_cast<long long>(k) + 1) * p.lambda + mu;
        for (int i = 0; i <= p.lambda - alpha - 1; ++i)
            acc -= 0.5L * std::log(static_cast<long double>(structure_function(p, top - i)));
        logc[static_cast<std::size_t>(k) + 1] = acc;
    }
    return logc;
}

/// c'_0..c'_kmax as plain doubles.  Values decay superexponentially; for
/// very deep truncations at large λ they underflow, so log-space consumers
/// use cs_log_coefficients instead.
inline std::vector<double> cs_coefficients(const AlgebraParams& p, int mu, int alpha,
                                           int kmax) {
    const std::vector<long double> logc = cs_log_coefficients(p, mu, alpha, kmax);
    std::vector<double> c(logc.size());
    for (std::size_t i = 0; i < logc.size(); ++i)
        c[i] = static_cast<double>(std::exp(logc[i]));
    return c;
}

/// Closed-form normalization N^{(α)}_μ(|z|) via the generalized
/// hypergeometric series.  For α = λ/2 (λ even) the series converges only
/// on the unit disc y = |z|² < 1.
inline double cs_norm(const AlgebraParams& p, int mu, int alpha, double absz) {
    check_cs_labels(p, mu, alpha);
    if (!(absz >= 0.0)) throw std::invalid_argument("cs_norm: |z| must be >= 0");
    std::vector<double> a, b;
    for (int nu = mu + 1; nu <= mu + alpha; ++nu) a.push_back(p.betabar[nu]);
    for (int nu = 1; nu <= mu; ++nu) b.push_back(p.betabar[nu] + 1.0);
    for (int nu = mu + alpha + 1; nu <= p.lambda - 1; ++nu) b.push_back(p.betabar[nu]);
    const double y =
        absz * absz / std::pow(static_cast<double>(p.lambda), p.lambda - 2 * alpha);
    if (2 * alpha == p.lambda && y >= 1.0)
        throw std::domain_error(
            "cs_norm: alpha = lambda/2 states are normalizable only on the unit disc "
            "(need |z| < 1)");
    return pfq(a, b, y);
}

/// Σ_k c'²_k |z|^{2k} from the recursion coefficients (long double
/// accumulation): the independent counterpart of cs_norm.
inline double cs_coefficient_norm(const std::vector<long double>& logc, double absz) {
    if (absz == 0.0) return 1.0;
    const long double log_z2 = 2.0L * std::log(static_cast<long double>(absz));
    long double sum = 0.0L;
    for (std::size_t k = 0; k < logc.size(); ++k)
        sum += std::exp(2.0L * logc[k] + static_cast<long double>(k) * log_z2);
    return static_cast<double>(sum);
}

/// Builds a CoherentState with K chosen adaptively from the tail bound
/// (the last retained term must fall below 1e-15 of the running norm twice
/// in a row, comfortably inside the 1e-14 invariant).
inline CoherentState cs_make(const AlgebraParams& p, std::complex<double> z, int mu,
                             int alpha) {
    check_cs_labels(p, mu, alpha);
    const double absz = std::abs(z);
    const double norm = cs_norm(p, mu, alpha, absz);  // also enforces the disc rule

    constexpr int kcap = 2000;
    const long double log_z2 =
        (absz > 0.0) ? 2.0L * std::log(static_cast<long double>(absz)) : 0.0L;
    std::vector<long double> logc(1, 0.0L);
    long double acc = 0.0L, sum = 1.0L;
    int quiet = (absz == 0.0) ? 2 : 0;
    for (int k = 0; quiet < 2 && k < kcap; ++k) {
        const long long base = static_cast<long long>(k) * p.lambda + mu;
        for (int j = 1; j <= alpha; ++j)
            acc += 0.5L * std::log(static_cast<long double>(structure_function(p, base + j)));
        const long long top = (static_cast<long long>(k) + 1) * p.lambda + mu;
        for (int i = 0; i <= p.lambda - alpha - 1; ++i)
            acc -= 0.5L * std::log(static_cast<long double>(structure_function(p, top - i)));
        logc.push_back(acc);
        const long double term =
            std::exp(2.0L * acc + static_cast<long double>(k + 1) * log_z2);
        sum += term;
        quiet = (term < 1e-15L * sum) ? quiet + 1 : 0;
    }
    if (quiet < 2)
        throw std::runtime_error("cs_make: tail bound not reached within " +
                                 std::to_string(kcap) + " terms");

    CoherentState cs;
    cs.z = z;
    cs.mu = mu;
    cs.alpha = alpha;
    cs.kmax = static_cast<int>(logc.size()) - 1;
    cs.cprime.resize(logc.size());
    for (std::size_t i = 0; i < logc.size(); ++i)
        cs.cprime[i] = static_cast<double>(std::exp(logc[i]));
    cs.norm = norm;
    return cs;
}

/// Unit-norm Fock-space vector of |z;μ;α⟩ at truncation dim.  The support is
/// {kλ+μ : 0 ≤ k ≤ K} with K = ⌊(dim−1−μ)/λ⌋; dim must be large enough for
/// the tail bound at that K.
inline Eigen::VectorXcd cs_build(const AlgebraParams& p, std::complex<double> z, int mu,
                                 int alpha, int dim) {
    check_cs_labels(p, mu, alpha);
    if (dim < mu + 1) throw std::invalid_argument("cs_build: dim must exceed mu");
    const int kmax = (dim - 1 - mu) / p.lambda;
    const std::vector<long double> logc = cs_log_coefficients(p, mu, alpha, kmax);
    const double absz = std::abs(z);
    cs_norm(p, mu, alpha, absz);  // enforce the alpha = lambda/2 disc rule

    const double csum = cs_coefficient_norm(logc, absz);
    const double tail = static_cast<double>(std::exp(
        2.0L * logc.back() +
        2.0L * kmax * (absz > 0.0 ? std::log(static_cast<long double>(absz)) : 0.0L)));
    if (absz > 0.0 && !(tail / csum < 1e-14))
        throw std::invalid_argument("cs_build: insufficient dim, truncation tail " +
                                    std::to_string(tail / csum) +
                                    " exceeds 1e-14; enlarge dim");

    Eigen::VectorXcd v = Eigen::VectorXcd::Zero(dim);
    std::complex<double> zpow = 1.0;
    for (int k = 0; k <= kmax; ++k) {
        v[k * p.lambda + mu] = static_cast<double>(std::exp(logc[k])) * zpow;
        zpow *= z;
    }
    v /= v.norm();
    return v;
}

/**
 * Relative residual of the defining equation on the truncated matrices:
 *     ‖(a^{λ-α} − z (a†)^α) v‖ / [(1+|z|) · max(1, ‖a^{λ-α}v‖, ‖z(a†)^α v‖)],
 * with the residual restricted to indices at least one grade below the top
 * of the state's support (above that, cancellation needs the truncated
 * k = K+1 component and the residual measures only the tail).
 */
inline double cs_residual_with(const FockRep& rep, const Eigen::MatrixXcd& lower,
                               const Eigen::MatrixXcd& raise,
                               const Eigen::VectorXcd& v, std::complex<double> z,
                               int mu, int alpha) {
    const AlgebraParams& p = rep.params;
    check_cs_labels(p, mu, alpha);
    if (v.size() != rep.dim)
        throw std::invalid_argument("cs_residual: state/rep dimension mismatch");
    const Eigen::VectorXcd av = lower * v;
    const Eigen::VectorXcd bv = z * (raise * v);
    Eigen::VectorXcd r = av - bv;
    const int ktop = (rep.dim - 1 - mu) / p.lambda;
    const int cut = (ktop - 1) * p.lambda + mu;  // keep indices <= cut
    for (int n = std::max(cut + 1, 0); n < rep.dim; ++n) r[n] = 0.0;
    const double denom =
        (1.0 + std::abs(z)) * std::max({1.0, av.norm(), bv.norm()});
    return r.norm() / denom;
}

/// Convenience wrapper building the matrix powers on the fly.
inline double cs_residual(const FockRep& rep, const Eigen::VectorXcd& v,
                          std::complex<double> z, int mu, int alpha) {
    const AlgebraParams& p = rep.params;
    check_cs_labels(p, mu, alpha);
    const Eigen::MatrixXcd lower = detail::matrix_power(rep.a, p.lambda - alpha);
    const Eigen::MatrixXcd raise = detail::matrix_power(rep.adag, alpha);
    return cs_residual_with(rep, lower, raise, v, z, mu, alpha);
}

/// Normalization 𝒩(|z|) of the a-eigenstate |z⟩, by the λ-term
/// hypergeometric sum with t = |z|²/λ.
inline double eigen_cs_norm(const AlgebraParams& p, double absz) {
    if (!(absz >= 0.0)) throw std::invalid_argument("eigen_cs_norm: |z| must be >= 0");
    const double t = absz * absz / p.lambda;
    const double tlam = std::pow(t, p.lambda);
    double total = 0.0;
    double tpow = 1.0, bbar_prod = 1.0;
    for (int mu = 0; mu < p.lambda; ++mu) {
        if (mu > 0) {
            tpow *= t;
            bbar_prod *= p.betabar[mu];
        }
        std::vector<double> b;
        for (int nu = 1; nu <= mu; ++nu) b.push_back(p.betabar[nu] + 1.0);
        for (int nu = mu + 1; nu <= p.lambda - 1; ++nu) b.push_back(p.betabar[nu]);
        total += pfq({}, b, tlam) * tpow / bbar_prod;
    }
    return total;
}

/// 𝒩(|z|) by the recursion route: Σ_μ t^μ (∏_{ν≤μ} β̄_ν)^{-1} Σ_k c'²_k |z^λ|^{2k}
/// with t = |z|²/λ.  Independent of eigen_cs_norm, which goes through the
/// hypergeometric Pochhammer products.
inline double eigen_cs_component_norm(const AlgebraParams& p, double absz, int kmax) {
    if (!(absz >= 0.0))
        throw std::invalid_argument("eigen_cs_component_norm: |z| must be >= 0");
    const double t = absz * absz / p.lambda;
    const double absomega = std::pow(absz, p.lambda);
    long double total = 0.0L;
    long double tpow = 1.0L, bbar_prod = 1.0L;
    for (int mu = 0; mu < p.lambda; ++mu) {
        if (mu > 0) {
            tpow *= t;
            bbar_prod *= p.betabar[mu];
        }
        const std::vector<long double> logc = cs_log_coefficients(p, mu, 0, kmax);
        total += tpow / bbar_prod *
                 static_cast<long double>(cs_coefficient_norm(logc, absomega));
    }
    return static_cast<double>(total);
}

/// Assembles the EigenCS record: per-grade components at label ω = z^λ,
/// mixing coefficients d'_μ, and the closed-form normalization.
inline EigenCS eigen_cs_make(const AlgebraParams& p, std::complex<double> z) {
    EigenCS e;
    e.z = z;
    std::complex<double> omega = 1.0;  // z^λ by repeated product (exact at z = 0)
    for (int j = 0; j < p.lambda; ++j) omega *= z;
    const double absomega = std::abs(omega);
    e.dprime.resize(p.lambda);
    double bbar_prod = 1.0;
    for (int mu = 0; mu < p.lambda; ++mu) {
        if (mu > 0) bbar_prod *= p.betabar[mu];
        e.dprime[mu] = std::sqrt(cs_norm(p, mu, 0, absomega) / bbar_prod);
        e.components.push_back(cs_make(p, omega, mu, 0));
    }
    e.norm = eigen_cs_norm(p, std::abs(z));
    return e;
}

/// Unit-norm Fock-space vector of the a-eigenstate |z⟩ at truncation dim:
/// amplitude at n = kλ+μ is ∝ z^n λ^{-μ/2} (∏_{ν≤μ} β̄_ν)^{-1/2} c'^{(μ,0)}_k.
inline Eigen::VectorXcd eigen_cs_build(const AlgebraParams& p, std::complex<double> z,
                                       int dim) {
    if (dim < 2 * p.lambda)
        throw std::invalid_argument("eigen_cs_build: dim must be at least 2*lambda");
    const double absz = std::abs(z);

    Eigen::VectorXcd v = Eigen::VectorXcd::Zero(dim);
    double bbar_prod = 1.0;
    long double tail_max = 0.0L;
    for (int mu = 0; mu < p.lambda; ++mu) {
        if (mu > 0) bbar_prod *= p.betabar[mu];
        const int kmax = (dim - 1 - mu) / p.lambda;
        const std::vector<long double> logc = cs_log_coefficients(p, mu, 0, kmax);
        const double wmu =
            1.0 / std::sqrt(std::pow(static_cast<double>(p.lambda), mu) * bbar_prod);
        std::complex<double> zlam = 1.0;
        for (int j = 0; j < p.lambda; ++j) zlam *= z;
        std::complex<double> zpow = 1.0;
        for (int n = 0; n < mu; ++n) zpow *= z;
        for (int k = 0; k <= kmax; ++k) {
            v[k * p.lambda + mu] = wmu * static_cast<double>(std::exp(logc[k])) * zpow;
            zpow *= zlam;
        }
        if (absz > 0.0) {
            const long double logtail =
                2.0L * std::log(static_cast<long double>(wmu)) + 2.0L * logc.back() +
                2.0L * kmax * p.lambda * std::log(static_cast<long double>(absz));
            tail_max = std::max(tail_max, std::exp(logtail));
        }
    }
    const double vnorm2 = v.squaredNorm();
    if (absz > 0.0 && !(static_cast<double>(tail_max) / vnorm2 < 1e-14))
        throw std::invalid_argument(
            "eigen_cs_build: insufficient dim, truncation tail exceeds 1e-14");
    v /= std::sqrt(vnorm2);
    return v;
}

/// Relative eigen-residual ‖a v − z v‖ / (1+|z|), restricted to indices
/// below the top λ rows (where the truncated a cannot see v's tail).
inline double eigen_cs_residual(const FockRep& rep, const Eigen::VectorXcd& v,
                                std::complex<double> z) {
    if (v.size() != rep.dim)
        throw std::invalid_argument("eigen_cs_residual: state/rep dimension mismatch");
    Eigen::VectorXcd r = rep.a * v - z * v;
    for (int n = rep.dim - rep.params.lambda; n < rep.dim; ++n) r[n] = 0.0;
    return r.norm() / ((1.0 + std::abs(z)) * std::max(1.0, v.norm()));
}

/// Standard inner product ⟨u|v⟩.
inline std::complex<double> cs_overlap(const Eigen::VectorXcd& u,
                                       const Eigen::VectorXcd& v) {
    if (u.size() != v.size())
        throw std::invalid_argument("cs_overlap: dimension mismatch");
    return (u.adjoint() * v)(0, 0);
}

}  // namespace clox
