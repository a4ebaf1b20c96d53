// Acceptance gate for the library + CLI: nine end-to-end checks, one
// pass/fail line each, exit code = number of failures.  Thresholds are
// pinned here and nowhere else.

#include <chrono>
#include <cmath>
#include <complex>
#include <cstdio>
#include <cstdlib>
#include <sstream>
#include <string>
#include <vector>

#include "clox/bargmann.hpp"
#include "clox/cstates.hpp"
#include "clox/fock.hpp"
#include "clox/measure.hpp"
#include "clox/specfun.hpp"
#include "clox/sweep.hpp"
#include "oracles.hpp"

namespace {

int g_failures = 0;

void report(int idx, bool ok, const std::string& what, const std::string& detail) {
    std::printf("%s criterion %d: %s%s%s%s\n", ok ? "PASS" : "FAIL", idx, what.c_str(),
                detail.empty() ? "" : " [", detail.c_str(), detail.empty() ? "" : "]");
    std::fflush(stdout);
    if (!ok) ++g_failures;
}

template <typename Fn>
void criterion(int idx, const std::string& what, Fn&& body) {
    try {
        std::string detail;
        const bool ok = body(detail);
        report(idx, ok, what, detail);
    } catch (const std::exception& ex) {
        report(idx, false, what, std::string("exception: ") + ex.what());
    }
}

std::string fmt(double v) {
    char buf[40];
    std::snprintf(buf, sizeof buf, "%.3g", v);
    return buf;
}

const std::uint64_t kSamplerSeed = 20260801ull;

// ladder-relation and symmetry-generator deviations on random admissible sets
bool algebra_relations(std::string& detail) {
    const double threshold = 1e-12;
    double worst = 0.0;
    for (int lambda = 2; lambda <= 6; ++lambda) {
        for (const auto& alpha :
             clox::sample_admissible_alphas(lambda, 5, kSamplerSeed + lambda)) {
            const clox::AlgebraParams p = clox::validate_params(lambda, alpha);
            const clox::FockRep rep = clox::build_fock(p, 120);
            for (const auto& d : clox::check_algebra(rep))
                worst = std::max(worst, d.deviation);
        }
    }
    detail = "max deviation " + fmt(worst) + ", threshold " + fmt(threshold);
    return worst < threshold;
}

// exact period-lambda spacing of the linear spectra on dyadic families
bool spectrum_spacing(std::string& detail) {
    const std::vector<std::pair<int, std::vector<double>>> families = {
        {2, {0.0, 0.0}},
        {2, {1.0, -1.0}},
        {3, {1.0, 0.0, -1.0}},
        {4, {0.5, 0.5, -0.5, -0.5}},
    };
    int exact_rows = 0;
    for (const auto& [lambda, alpha] : families) {
        const clox::AlgebraParams p = clox::validate_params(lambda, alpha);
        const std::vector<double> e = clox::spectrum(p, 100 + lambda);
        for (int n = 0; n <= 100; ++n) {
            if (e[static_cast<std::size_t>(n) + static_cast<std::size_t>(lambda)] -
                    e[static_cast<std::size_t>(n)] !=
                static_cast<double>(lambda))
                return false;
            ++exact_rows;
        }
    }
    const clox::AlgebraParams pb = clox::validate_params(2, {1.0, -1.0});
    const std::vector<double> ep = clox::spectrum(pb, 100);
    double worst = 0.0;
    for (int n = 0; n <= 100; ++n)
        worst = std::max(worst, std::abs(ep[static_cast<std::size_t>(n)] - (n + 1.0)));
    detail = std::to_string(exact_rows) + " spacings exact; evenly spaced case off by " +
             fmt(worst);
    return worst <= 1e-14;
}

// coherent-state defining relation and normalization consistency share one
// sweep over labels and families; each criterion reads its own worst entry
struct CsSweepResult {
    double residual = 0.0;
    double norm_dev = 0.0;
    bool done = false;
};

CsSweepResult& cs_sweep() {
    static CsSweepResult r;
    if (r.done) return r;
    for (int lambda = 2; lambda <= 6; ++lambda) {
        const auto alpha_sets =
            clox::sample_admissible_alphas(lambda, 1, kSamplerSeed + 77 + lambda);
        const clox::AlgebraParams p = clox::validate_params(lambda, alpha_sets[0]);
        for (int alpha = 0; 2 * alpha <= lambda; ++alpha) {
            for (int mu = 0; mu + alpha + 1 <= lambda; ++mu) {
                const bool half = 2 * alpha == lambda;
                std::vector<std::complex<double>> zs;
                if (half) {
                    zs = {{0.3, 0.0}, {0.0, 0.5}};
                    zs.emplace_back(lambda == 2 ? 0.85 : 0.6, 0.0);
                } else {
                    zs = {{0.5, 0.0}, {1.2, 0.8}, {2.0, 0.0}};
                }
                for (const std::complex<double> z : zs) {
                    const clox::CoherentState st = clox::cs_make(p, z, mu, alpha);
                    const int dim = (st.kmax + 2) * lambda;
                    const clox::FockRep rep = clox::build_fock(p, dim);
                    const Eigen::VectorXcd v = clox::cs_build(p, z, mu, alpha, dim);
                    r.residual =
                        std::max(r.residual, clox::cs_residual(rep, v, z, mu, alpha));

                    const auto logc =
                        clox::cs_log_coefficients(p, mu, alpha, st.kmax + 15);
                    const double series = clox::cs_coefficient_norm(logc, std::abs(z));
                    r.norm_dev = std::max(
                        r.norm_dev, std::abs(series / clox::cs_norm(p, mu, alpha,
                                                                    std::abs(z)) -
                                             1.0));
                }
            }
        }
    }
    r.done = true;
    return r;
}

bool cs_defining_relation(std::string& detail) {
    const double threshold = 1e-10;
    const CsSweepResult& r = cs_sweep();
    detail = "max residual " + fmt(r.residual) + ", threshold " + fmt(threshold);
    return r.residual < threshold;
}

bool cs_norm_consistency(std::string& detail) {
    const double threshold = 1e-10;
    const CsSweepResult& r = cs_sweep();
    double closed_dev = 0.0;
    const clox::AlgebraParams boson = clox::validate_params(2, {0.0, 0.0});
    const clox::AlgebraParams para = clox::validate_params(2, {1.0, -1.0});
    for (double absz : {0.5, 1.3, 2.0}) {
        closed_dev = std::max(
            closed_dev, std::abs(clox::cs_norm(boson, 0, 0, absz) / std::cosh(absz) - 1.0));
        closed_dev = std::max(
            closed_dev, std::abs(clox::cs_norm(para, 0, 0, absz) /
                                     std::cyl_bessel_i(0.0, absz) -
                                 1.0));
    }
    detail = "recursion-vs-closed-form " + fmt(r.norm_dev) + ", reference forms " +
             fmt(closed_dev);
    return r.norm_dev < threshold && closed_dev < 1e-12;
}

bool resolution_moments(std::string& detail) {
    const double threshold = 1e-10;
    double worst = 0.0;
    for (int lambda = 2; lambda <= 6; ++lambda) {
        const auto alpha_sets =
            clox::sample_admissible_alphas(lambda, 1, kSamplerSeed + 311 + lambda);
        const clox::AlgebraParams p = clox::validate_params(lambda, alpha_sets[0]);
        for (int alpha = 0; 2 * alpha <= lambda; ++alpha)
            for (int mu = 0; mu + alpha + 1 <= lambda; ++mu)
                worst = std::max(worst, clox::verify_resolution(p, mu, alpha, 50));
    }
    // deepest half-family case: lambda = 8, alpha = 4
    const auto a8 = clox::sample_admissible_alphas(8, 1, kSamplerSeed + 311 + 8);
    const clox::AlgebraParams p8 = clox::validate_params(8, a8[0]);
    for (int mu = 0; mu <= 3; ++mu)
        worst = std::max(worst, clox::verify_resolution(p8, mu, 4, 50));
    detail = "max moment mismatch " + fmt(worst) + ", threshold " + fmt(threshold);
    return worst < threshold;
}

bool eigenstate_family(std::string& detail) {
    const double res_threshold = 1e-10;
    double res_worst = 0.0;
    for (int lambda : {2, 3, 4}) {
        const auto alpha_sets =
            clox::sample_admissible_alphas(lambda, 1, kSamplerSeed + 555 + lambda);
        const clox::AlgebraParams p = clox::validate_params(lambda, alpha_sets[0]);
        const clox::FockRep rep = clox::build_fock(p, 120);
        for (const std::complex<double> z :
             {std::complex<double>(0.6, 0.0), std::complex<double>(1.0, 1.2),
              std::complex<double>(-1.4, 0.9), std::complex<double>(2.0, 0.0)}) {
            const Eigen::VectorXcd v = clox::eigen_cs_build(p, z, rep.dim);
            res_worst = std::max(res_worst, clox::eigen_cs_residual(rep, v, z));
        }
    }

    const clox::AlgebraParams boson = clox::validate_params(2, {0.0, 0.0});
    const Eigen::VectorXcd g = clox::eigen_cs_build(boson, 1.0, 60);
    double glauber_dev = 0.0;
    for (int n = 0; n <= 20; ++n) {
        const double ref = static_cast<double>(std::exp(-0.5L) /
                                               std::sqrt(oracle::factorial_ld(n)));
        glauber_dev = std::max(
            glauber_dev, std::abs(g[static_cast<std::size_t>(n)].real() / ref - 1.0));
    }

    double weight_worst = 0.0;
    const clox::AlgebraParams para = clox::validate_params(2, {1.0, -1.0});
    const auto a3 = clox::sample_admissible_alphas(3, 1, kSamplerSeed + 556);
    for (const clox::AlgebraParams& p :
         {boson, para, clox::validate_params(3, a3[0])})
        weight_worst = std::max(weight_worst, clox::verify_nondiagonal(p, 50));

    detail = "residual " + fmt(res_worst) + ", Glauber " + fmt(glauber_dev) +
             ", weight equivalence " + fmt(weight_worst);
    return res_worst < res_threshold && glauber_dev < 1e-12 &&
           weight_worst < res_threshold;
}

bool bargmann_realizations(std::string& detail) {
    const double threshold = 1e-12;
    const int kmax = 40;
    double sga_worst = 0.0, vec_worst = 0.0;
    for (int lambda = 2; lambda <= 6; ++lambda) {
        const auto alpha_sets =
            clox::sample_admissible_alphas(lambda, 1, kSamplerSeed + 901 + lambda);
        const clox::AlgebraParams p = clox::validate_params(lambda, alpha_sets[0]);
        const clox::FockRep rep = clox::build_fock(p, (kmax + 2) * lambda);
        for (int alpha = 0; 2 * alpha <= lambda; ++alpha)
            for (int mu = 0; mu + alpha + 1 <= lambda; ++mu)
                sga_worst = std::max(
                    sga_worst, clox::verify_sga_bargmann(p, mu, alpha, kmax, rep));
        const clox::VectorBargmannDeviations dev =
            clox::verify_vector_bargmann_detail(p, kmax, rep);
        vec_worst = std::max({vec_worst, dev.adag, dev.a, dev.num, dev.comm});
    }

    const clox::AlgebraParams boson = clox::validate_params(2, {0.0, 0.0});
    const clox::FockRep rep = clox::build_fock(boson, 60);
    Eigen::VectorXcd e0 = Eigen::VectorXcd::Zero(rep.dim);
    e0[0] = 1.0;
    Eigen::VectorXcd w = oracle::matrix_exp_action(rep.jplus, {0.5, 0.0}, e0);
    w /= w.norm();
    const Eigen::VectorXcd v = clox::cs_build(boson, {0.5, 0.0}, 0, 1, rep.dim);
    const double fidelity = std::abs(clox::cs_overlap(v, w));

    detail = "graded generators " + fmt(sga_worst) + ", whole-space ops " +
             fmt(vec_worst) + ", displacement fidelity 1-" + fmt(1.0 - fidelity);
    return sga_worst < threshold && vec_worst < threshold && fidelity > 1.0 - 1e-10;
}

bool specfun_references(std::string& detail) {
    double lg_worst = 0.0;
    const long double sqrt_pi_l = 1.77245385090551602729816748334L;
    for (int n = 0; n <= 20; ++n) {
        lg_worst = std::max(
            lg_worst, std::abs(clox::log_gamma(n + 1.0) -
                               static_cast<double>(std::log(oracle::factorial_ld(n)))));
        const long double half = std::log(oracle::double_factorial_ld(2 * n - 1) *
                                          sqrt_pi_l) -
                                 n * 0.69314718055994530941723212145818L;
        lg_worst = std::max(lg_worst, std::abs(clox::log_gamma(n + 0.5) -
                                               static_cast<double>(half)));
    }

    double g_worst = 0.0;
    const double sqrt_pi = 1.7724538509055160273;
    for (double y : {0.05, 0.2, 0.5, 1.0, 2.0, 5.0, 10.0}) {
        const double e = clox::meijer_g_residue_series({{}, {0.0}}, y);
        g_worst = std::max(g_worst, std::abs(e / std::exp(-y) - 1.0));
        const double b = clox::meijer_g_residue_series({{}, {0.0, -0.5}}, y);
        const double bref = sqrt_pi * std::exp(-2.0 * std::sqrt(y)) / std::sqrt(y);
        g_worst = std::max(g_worst, std::abs(b / bref - 1.0));
    }
    detail = "log-gamma " + fmt(lg_worst) + " (threshold 1e-13), kernels " +
             fmt(g_worst) + " (threshold 1e-8)";
    return lg_worst < 1e-13 && g_worst < 1e-8;
}

bool cli_reference_runs(std::string& detail) {
    const char* bin_env = std::getenv("CLOX_BIN");
    const char* dir_env = std::getenv("CONFIG_DIR");
#ifdef CLOX_DEFAULT_BIN
    const std::string bin = bin_env != nullptr ? bin_env : CLOX_DEFAULT_BIN;
#else
    if (bin_env == nullptr) {
        detail = "CLOX_BIN not set";
        return false;
    }
    const std::string bin = bin_env;
#endif
#ifdef CLOX_DEFAULT_CONFIG_DIR
    const std::string dir = dir_env != nullptr ? dir_env : CLOX_DEFAULT_CONFIG_DIR;
#else
    if (dir_env == nullptr) {
        detail = "CONFIG_DIR not set";
        return false;
    }
    const std::string dir = dir_env;
#endif

    const auto t0 = std::chrono::steady_clock::now();
    std::vector<std::pair<std::string, std::string>> runs = {
        {"boson_l2.toml", "all"},       {"paraboson_l2.toml", "all"},
        {"generic_l3.toml", "all"},     {"degenerate_l3.toml", "all"},
        {"generic_l6.toml", "all"},     {"generic_l8.toml", "resolution"},
    };
    for (const auto& [file, suite] : runs) {
        const std::string cmd = "CLOX_LOG=quiet '" + bin + "' verify --suite " +
                                suite + " --config '" + dir + "/" + file +
                                "' >/dev/null 2>&1";
        const auto r = oracle::run_command(cmd);
        if (r.exit_code != 0) {
            detail = file + " exited " + std::to_string(r.exit_code);
            return false;
        }
    }
    const double secs =
        std::chrono::duration<double>(std::chrono::steady_clock::now() - t0).count();
    detail = "6 configurations in " + fmt(secs) + "s, budget 60s";
    return secs < 60.0;
}

}  // namespace

int main() {
    criterion(1, "ladder and symmetry-generator relations hold on truncated Fock spaces",
              algebra_relations);
    criterion(2, "spectra are linear with exact period-lambda spacing on dyadic families",
              spectrum_spacing);
    criterion(3, "coherent states satisfy their defining ladder relation",
              cs_defining_relation);
    criterion(4, "normalization recursion matches closed hypergeometric forms",
              cs_norm_consistency);
    criterion(5, "resolution-of-unity moment systems match the state coefficients",
              resolution_moments);
    criterion(6, "annihilation-operator eigenstates verify against their invariants",
              eigenstate_family);
    criterion(7, "Bargmann differential realizations reproduce Fock matrix elements",
              bargmann_realizations);
    criterion(8, "special-function kernels match reference values", specfun_references);
    criterion(9, "verification CLI passes on all reference configurations in budget",
              cli_reference_runs);
    return g_failures;
}
