#pragma once

/**
 * @file specfun.hpp
 * @brief Special-function kernels: log-Gamma, generalized hypergeometric
 *        series, and Meijer G^{m,0} machinery.
 *
 * Two complementary views of G^{q,0}_{p,q} are provided:
 *   - mellin_meijer_g: the exact Mellin transform ∏Γ(b_j+s)/∏Γ(a_j+s) in log
 *     space.  This is the analytic engine behind all moment-based
 *     unity-resolution checks and never touches a series.
 *   - meijer_g_residue_series: pointwise values by summing the residues at
 *     s = -b_j - k.  Best effort, generic parameters only (no two b's may
 *     differ by an integer); moment verification never depends on it.
 *
 * All Gamma-product arithmetic is done in log space with explicit sign
 * tracking so that products like ∏(k+β̄) never overflow for k ≤ 1e4.
 */

#include <algorithm>
#include <cmath>
#include <cstddef>
#include <limits>
#include <stdexcept>
#include <string>
#include <vector>

namespace clox {

/// log Γ(x) for x > 0.  Nonpositive or non-finite x is rejected.
inline double log_gamma(double x) {
    if (!(x > 0.0))
        throw std::domain_error("log_gamma: argument must be positive, got " +
                                std::to_string(x));
    return std::lgamma(x);
}

/// A real number in log form: value = sign * exp(log).  sign 0 encodes an
/// exact zero (log is then -inf), which is what 1/Γ(nonpositive integer)
/// produces.
struct SignedLog {
    double log = 0.0;
    int sign = 1;
};

namespace detail {

constexpr double kIntegerGap = 1e-8;  // genericity gap for pole detection

inline bool near_integer(double x, double gap = kIntegerGap) {
    return std::abs(x - std::round(x)) < gap;
}

/// log|Γ(x)| with sign, for any x that is not at a pole.  At a pole of Γ
/// (x a nonpositive integer) returns sign 0, log = +inf, meaning the caller
/// multiplies by 1/Γ = 0.
inline SignedLog log_gamma_signed(double x) {
    SignedLog r;
    if (x > 0.0) {
        r.log = std::lgamma(x);
        r.sign = 1;
        return r;
    }
    if (near_integer(x, 1e-12)) {
        r.log = std::numeric_limits<double>::infinity();
        r.sign = 0;
        return r;
    }
    r.log = std::lgamma(x);  // log|Γ(x)| for negative non-integer x
    // Γ alternates sign on successive intervals (-k-1, -k).
    r.sign = (static_cast<long long>(std::floor(x)) % 2 == 0) ? 1 : -1;
    return r;
}

/// Generalized hypergeometric series Σ_k ∏(A)_k / ∏(B)_k x^k / k! with
/// signed terms.  Terminates when two consecutive terms fall below
/// 1e-16 × |partial sum| (or the series terminates exactly); a ratio-test
/// monitor over 32-term windows aborts on divergence.  cap bounds the
/// number of terms; exceeding it is an error, never a silent truncation.
inline double hyper_series(const std::vector<double>& A, const std::vector<double>& B,
                           double x, std::size_t cap) {
    for (double b : B)
        if (near_integer(b, 1e-12) && b <= 0.5)
            throw std::domain_error(
                "hyper_series: lower parameter at a nonpositive integer");

    // Accumulate in long double: alternating-argument cases (e.g. the e^{-y}
    // reduction at y ~ 10) cancel ~7 digits between partial sums and the
    // result, which exhausts double but leaves long double comfortable.
    long double sum = 1.0L;
    long double term = 1.0L;
    long double window_max = 1.0L;
    long double prev_window_max = std::numeric_limits<long double>::infinity();
    int quiet = 0;
    for (std::size_t k = 0; k < cap; ++k) {
        long double ratio = 1.0L;
        for (double a : A) ratio *= static_cast<long double>(a) + k;
        for (double b : B) ratio /= static_cast<long double>(b) + k;
        ratio *= static_cast<long double>(x) / (k + 1);
        term *= ratio;
        if (term == 0.0L) return static_cast<double>(sum);  // terminating case
        sum += term;

        if (std::abs(term) <= 1e-16L * std::abs(sum)) {
            if (++quiet >= 2) return static_cast<double>(sum);
        } else {
            quiet = 0;
        }

        window_max = std::max(window_max, std::abs(term));
        if ((k + 1) % 32 == 0) {
            if (k > 256 && window_max > prev_window_max)
                throw std::runtime_error("hyper_series: diverging term sequence");
            prev_window_max = window_max;
            window_max = 0.0L;
        }
        if (!std::isfinite(sum))
            throw std::runtime_error("hyper_series: overflow");
    }
    throw std::runtime_error("hyper_series: no convergence within " +
                             std::to_string(cap) + " terms");
}

}  // namespace detail

/// ₚF_q(a; b; y) for b_j > 0 and y ≥ 0, by direct summation until the term
/// falls below 1e-16 × the running sum.  All terms are positive for the
/// parameter sets in scope (a_j > 0), so there is no cancellation and the
/// result is ≥ 1.  The one-past-balanced case p = q+1 converges only on
/// y < 1 and is rejected outside it.
inline double pfq(const std::vector<double>& a, const std::vector<double>& b, double y) {
    for (double bj : b)
        if (!(bj > 0.0))
            throw std::invalid_argument("pfq: lower parameters must be positive");
    if (!(y >= 0.0))
        throw std::invalid_argument("pfq: argument must be nonnegative");
    if (a.size() > b.size() + 1)
        throw std::invalid_argument("pfq: p > q+1 diverges for y > 0");
    if (a.size() == b.size() + 1 && y >= 1.0)
        throw std::domain_error("pfq: p = q+1 series diverges for y >= 1");
    return detail::hyper_series(a, b, y, 100000);
}

/// Parameter rows of a Meijer G^{q,0}_{p,q}: arow the upper row (length p),
/// brow the lower row (length q ≥ 1, q > p ≥ 0 or q = p).
struct MeijerParams {
    std::vector<double> arow;
    std::vector<double> brow;
};

inline void validate_meijer(const MeijerParams& mp) {
    if (mp.brow.empty())
        throw std::invalid_argument("MeijerParams: brow must be nonempty");
    if (mp.arow.size() > mp.brow.size())
        throw std::invalid_argument("MeijerParams: need len(arow) <= len(brow)");
}

/// log of the Mellin transform of G^{q,0}_{p,q}:
///     ∫₀^∞ y^{s-1} G(y) dy = ∏_j Γ(b_j+s) / ∏_j Γ(a_j+s),
/// requiring b_j+s > 0 and a_j+s > 0 (the real-Gamma domain; holds for all
/// moments s = k+1 used by the measure module).
inline double mellin_meijer_g(const MeijerParams& mp, double s) {
    validate_meijer(mp);
    double acc = 0.0;
    for (double bj : mp.brow) {
        if (!(bj + s > 0.0))
            throw std::domain_error("mellin_meijer_g: b_j + s must be positive");
        acc += std::lgamma(bj + s);
    }
    for (double aj : mp.arow) {
        if (!(aj + s > 0.0))
            throw std::domain_error("mellin_meijer_g: a_j + s must be positive");
        acc -= std::lgamma(aj + s);
    }
    return acc;
}

/// Pointwise G^{q,0}_{p,q}(y | arow; brow) by the sum over residues at
/// s = -b_h - k:
///     G(y) = Σ_h [∏_{j≠h} Γ(b_j-b_h) / ∏_j Γ(a_j-b_h)] y^{b_h}
///            × ₚF_{q-1}(1+b_h-a; {1+b_h-b_j}_{j≠h}; (-1)^{p-q} y).
///
/// Generic parameters only: all pairwise b-differences must be non-integer,
/// otherwise the poles are not simple and a specific error is thrown so
/// callers can fall back to moment-only verification.  For p ≥ 1 the
/// evaluation is restricted to y < 1; for p = 0 the series converges for
/// every y > 0.  Each residue branch is capped at 1e4 terms.
inline double meijer_g_residue_series(const MeijerParams& mp, double y) {
    validate_meijer(mp);
    if (!(y > 0.0))
        throw std::invalid_argument("meijer_g_residue_series: y must be positive");
    if (!mp.arow.empty() && y >= 1.0)
        throw std::domain_error(
            "meijer_g_residue_series: restricted to y < 1 for nonempty arow");

    const std::size_t q = mp.brow.size();
    for (std::size_t i = 0; i < q; ++i)
        for (std::size_t j = i + 1; j < q; ++j)
            if (detail::near_integer(mp.brow[i] - mp.brow[j]))
                throw std::invalid_argument(
                    "meijer_g_residue_series: degenerate parameters "
                    "(b-differences integer); pointwise evaluation unavailable, "
                    "use moment-level checks");

    const int arg_sign =
        ((mp.brow.size() - mp.arow.size()) % 2 == 0) ? 1 : -1;  // (-1)^{p-q}
    long double total = 0.0L;
    const double logy = std::log(y);

    for (std::size_t h = 0; h < q; ++h) {
        const double bh = mp.brow[h];
        double logc = 0.0;
        int sign = 1;
        bool zero_branch = false;
        for (std::size_t j = 0; j < q && !zero_branch; ++j) {
            if (j == h) continue;
            const SignedLog g = detail::log_gamma_signed(mp.brow[j] - bh);
            if (g.sign == 0)  // cannot happen under the genericity gate
                throw std::invalid_argument(
                    "meijer_g_residue_series: degenerate parameters");
            logc += g.log;
            sign *= g.sign;
        }
        for (double aj : mp.arow) {
            const SignedLog g = detail::log_gamma_signed(aj - bh);
            if (g.sign == 0) {  // 1/Γ(pole) = 0 kills the whole branch
                zero_branch = true;
                break;
            }
            logc -= g.log;
            sign *= g.sign;
        }
        if (zero_branch) continue;

        std::vector<double> A, B;
        A.reserve(mp.arow.size());
        for (double aj : mp.arow) A.push_back(1.0 + bh - aj);
        B.reserve(q - 1);
        for (std::size_t j = 0; j < q; ++j)
            if (j != h) B.push_back(1.0 + bh - mp.brow[j]);

        const double series = detail::hyper_series(A, B, arg_sign * y, 10000);
        total += static_cast<long double>(sign) *
                 std::exp(static_cast<long double>(logc) + bh * logy) *
                 static_cast<long double>(series);
    }
    return static_cast<double>(total);
}

}  // namespace clox
