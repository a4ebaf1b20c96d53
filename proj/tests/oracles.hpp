#pragma once

/**
 * Independent reference implementations used only by the tests.  Everything
 * here deliberately avoids the library's own code paths: complex log-gamma
 * via Lanczos, densities via direct Mellin-Barnes contour quadrature,
 * hypergeometric sums via lgamma-based term evaluation, moments via
 * Gauss-Legendre quadrature, and operator exponentials via plain series.
 */

#include <array>
#include <cmath>
#include <complex>
#include <cstdio>
#include <functional>
#include <random>
#include <stdexcept>
#include <string>
#include <vector>

#include <Eigen/Dense>

namespace oracle {

inline long double factorial_ld(int n) {
    long double f = 1.0L;
    for (int i = 2; i <= n; ++i) f *= i;
    return f;
}

inline long double double_factorial_ld(int n) {  // n!! with (-1)!! = 0!! = 1
    long double f = 1.0L;
    for (int i = n; i >= 2; i -= 2) f *= i;
    return f;
}

/// Lanczos approximation (g = 7, 9 coefficients), valid on the whole complex
/// plane via reflection; accuracy ~1e-13 relative.
inline std::complex<double> lanczos_log_gamma(std::complex<double> z) {
    static const std::array<double, 9> c = {
        0.99999999999980993, 676.5203681218851, -1259.1392167224028,
        771.32342877765313, -176.61502916214059, 12.507343278686905,
        -0.13857109526572012, 9.9843695780195716e-6, 1.5056327351493116e-7};
    const double pi = 3.14159265358979323846;
    if (z.real() < 0.5) {
        // log Γ(z) = log(π / sin(πz)) − log Γ(1−z)
        return std::log(pi / std::sin(pi * z)) - lanczos_log_gamma(1.0 - z);
    }
    z -= 1.0;
    std::complex<double> x = c[0];
    for (int i = 1; i < 9; ++i) x += c[i] / (z + static_cast<double>(i));
    const std::complex<double> t = z + 7.5;
    return 0.5 * std::log(2.0 * pi) + (z + 0.5) * std::log(t) - t + std::log(x);
}

/// Mellin-Barnes contour quadrature for G^{q,0}_{p,q}(y): the inverse Mellin
/// transform (1/2πi)∫ ∏Γ(b_j+s)/∏Γ(a_j+s) y^{−s} ds along Re s = c,
/// trapezoid rule with step h on |Im s| ≤ T.  The integrand decays like
/// exp(−(q−p)π|t|/2), so modest T suffices.
inline double inverse_mellin_density(const std::vector<double>& arow,
                                     const std::vector<double>& brow, double y,
                                     double c, double T, double h) {
    const std::complex<double> logy(std::log(y), 0.0);
    auto integrand = [&](double t) {
        const std::complex<double> s(c, t);
        std::complex<double> lg = 0.0;
        for (double b : brow) lg += lanczos_log_gamma(b + s);
        for (double a : arow) lg -= lanczos_log_gamma(a + s);
        return std::exp(lg - s * logy);
    };
    std::complex<double> sum = 0.5 * (integrand(-T) + integrand(T));
    const int n = static_cast<int>(2.0 * T / h);
    for (int i = 1; i < n; ++i) sum += integrand(-T + i * h);
    return (sum * h).real() / (2.0 * 3.14159265358979323846);
}

/// Gauss-Legendre nodes/weights on [-1, 1] by Newton iteration.
inline void gauss_legendre(int n, std::vector<double>& x, std::vector<double>& w) {
    x.assign(static_cast<std::size_t>(n), 0.0);
    w.assign(static_cast<std::size_t>(n), 0.0);
    const double pi = 3.14159265358979323846;
    for (int i = 0; i < (n + 1) / 2; ++i) {
        double z = std::cos(pi * (i + 0.75) / (n + 0.5));
        double pp = 0.0;
        for (int it = 0; it < 100; ++it) {
            double p0 = 1.0, p1 = 0.0;
            for (int j = 0; j < n; ++j) {
                const double p2 = p1;
                p1 = p0;
                p0 = ((2.0 * j + 1.0) * z * p1 - j * p2) / (j + 1.0);
            }
            pp = n * (z * p0 - p1) / (z * z - 1.0);
            const double z1 = z;
            z = z1 - p0 / pp;
            if (std::abs(z - z1) < 1e-15) break;
        }
        x[static_cast<std::size_t>(i)] = -z;
        x[static_cast<std::size_t>(n - 1 - i)] = z;
        w[static_cast<std::size_t>(i)] = 2.0 / ((1.0 - z * z) * pp * pp);
        w[static_cast<std::size_t>(n - 1 - i)] = w[static_cast<std::size_t>(i)];
    }
}

/// Composite Gauss-Legendre integral of f over [a, b] with npanel panels of
/// nnode nodes.
inline double integrate(const std::function<double(double)>& f, double a, double b,
                        int npanel, int nnode) {
    std::vector<double> x, w;
    gauss_legendre(nnode, x, w);
    long double total = 0.0L;
    const double dw = (b - a) / npanel;
    for (int p = 0; p < npanel; ++p) {
        const double lo = a + p * dw;
        for (int i = 0; i < nnode; ++i) {
            const double u = lo + 0.5 * dw * (x[static_cast<std::size_t>(i)] + 1.0);
            total += 0.5 * dw * w[static_cast<std::size_t>(i)] * f(u);
        }
    }
    return static_cast<double>(total);
}

/// pFq partial sum with every term built from scratch out of C lgamma calls
/// (no recurrence shared with the library).  Parameters must be positive.
inline double brute_pfq(const std::vector<double>& a, const std::vector<double>& b,
                        double y, int terms) {
    long double sum = 0.0L;
    for (int k = 0; k < terms; ++k) {
        long double lg = -std::lgamma(static_cast<double>(k) + 1.0);
        for (double ai : a) lg += std::lgamma(ai + k) - std::lgamma(ai);
        for (double bi : b) lg -= std::lgamma(bi + k) - std::lgamma(bi);
        long double term = std::exp(lg);
        if (y < 0.0 && (k % 2)) term = -term;
        term *= std::pow(std::abs(static_cast<long double>(y)), k);
        sum += term;
        if (k > 4 && std::abs(term) < 1e-19L * std::abs(sum)) break;
    }
    return static_cast<double>(sum);
}

/// Admissible α vector via the β̄ box, using std::uniform_real_distribution
/// (a different draw path than the library's sampler).
inline std::vector<double> random_admissible(int lambda, std::mt19937_64& gen) {
    std::uniform_real_distribution<double> u(0.1, 3.0);
    std::vector<double> beta(static_cast<std::size_t>(lambda) + 1, 0.0);
    for (int mu = 1; mu < lambda; ++mu)
        beta[static_cast<std::size_t>(mu)] = lambda * u(gen) - mu;
    std::vector<double> alpha(static_cast<std::size_t>(lambda));
    for (int mu = 0; mu < lambda; ++mu)
        alpha[static_cast<std::size_t>(mu)] =
            beta[static_cast<std::size_t>(mu) + 1] - beta[static_cast<std::size_t>(mu)];
    return alpha;
}

/// exp(zM) v by the plain operator series, summed until two consecutive
/// negligible terms.
inline Eigen::VectorXcd matrix_exp_action(const Eigen::MatrixXcd& M,
                                          std::complex<double> z,
                                          const Eigen::VectorXcd& v) {
    Eigen::VectorXcd acc = v;
    Eigen::VectorXcd term = v;
    int quiet = 0;
    for (int k = 1; k <= 500 && quiet < 2; ++k) {
        term = (z / static_cast<double>(k)) * (M * term);
        acc += term;
        quiet = (term.norm() <= 1e-17 * acc.norm()) ? quiet + 1 : 0;
    }
    if (quiet < 2) throw std::runtime_error("matrix_exp_action: no convergence");
    return acc;
}

/// Runs a shell command, returning its exit status and captured stdout.
struct CommandResult {
    int exit_code = -1;
    std::string output;
};

inline CommandResult run_command(const std::string& cmd) {
    CommandResult r;
    FILE* pipe = popen(cmd.c_str(), "r");
    if (!pipe) throw std::runtime_error("popen failed for: " + cmd);
    char buf[4096];
    std::size_t n;
    while ((n = fread(buf, 1, sizeof(buf), pipe)) > 0) r.output.append(buf, n);
    const int status = pclose(pipe);
    r.exit_code = (status >= 0 && WIFEXITED(status)) ? WEXITSTATUS(status) : -1;
    return r;
}

}  // namespace oracle
