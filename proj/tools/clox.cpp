/**
 * clox: verification and table-emission CLI for the C_λ-extended oscillator
 * library.
 *
 * Subcommands
 *   spectrum  energy table (n, E_n, grade)
 *   cs        one coherent state: coefficients, norm, residual diagnostics
 *   density   radial measure density h^{(α)}_μ on a y-grid (CSV)
 *   verify    check suites with machine-readable report
 *   sweep     randomized admissible-parameter algebra scan
 *
 * Exit codes: 0 success, 1 at least one check failed, 2 configuration or
 * validation error.  Reports are byte-deterministic for a fixed config.
 */

#include <algorithm>
#include <atomic>
#include <chrono>
#include <complex>
#include <cstdio>
#include <cstdlib>
#include <exception>
#include <future>
#include <mutex>
#include <optional>
#include <string>
#include <thread>
#include <vector>

#include <CLI11.hpp>

#include "clox/algebra.hpp"
#include "clox/bargmann.hpp"
#include "clox/config.hpp"
#include "clox/cstates.hpp"
#include "clox/fock.hpp"
#include "clox/measure.hpp"
#include "clox/report.hpp"
#include "clox/specfun.hpp"
#include "clox/sweep.hpp"
#include "clox/version.hpp"

namespace {

int g_log_level = 1;  // 0 quiet, 1 info, 2 debug

void log_info(const std::string& msg) {
    if (g_log_level >= 1) std::fprintf(stderr, "[clox] %s\n", msg.c_str());
}

void log_debug(const std::string& msg) {
    if (g_log_level >= 2) std::fprintf(stderr, "[clox:debug] %s\n", msg.c_str());
}

/// Runs body(0..n-1) on a small worker pool; the first captured exception is
/// rethrown after all workers join.  Callers write results into index-owned
/// slots, so scheduling order never affects output.
template <class F>
void run_indexed(std::size_t n, F&& body) {
    const unsigned hw = std::max(1u, std::thread::hardware_concurrency());
    const std::size_t workers = std::min<std::size_t>(hw, n);
    if (workers <= 1) {
        for (std::size_t i = 0; i < n; ++i) body(i);
        return;
    }
    std::atomic<std::size_t> next{0};
    std::exception_ptr err;
    std::mutex err_mu;
    std::vector<std::thread> pool;
    pool.reserve(workers);
    for (std::size_t w = 0; w < workers; ++w) {
        pool.emplace_back([&] {
            for (;;) {
                const std::size_t i = next.fetch_add(1);
                if (i >= n) return;
                try {
                    body(i);
                } catch (...) {
                    std::lock_guard<std::mutex> lk(err_mu);
                    if (!err) err = std::current_exception();
                }
            }
        });
    }
    for (std::thread& t : pool) t.join();
    if (err) std::rethrow_exception(err);
}

std::string json_double_array(const std::vector<double>& v) {
    std::string s = "[";
    for (std::size_t i = 0; i < v.size(); ++i) {
        if (i) s += ", ";
        s += clox::fmt17(v[i]);
    }
    return s + "]";
}

std::string json_int_array(const std::vector<int>& v) {
    std::string s = "[";
    for (std::size_t i = 0; i < v.size(); ++i) {
        if (i) s += ", ";
        s += std::to_string(v[i]);
    }
    return s + "]";
}

std::string json_z_grid(const std::vector<std::complex<double>>& zs) {
    std::string s = "[";
    for (std::size_t i = 0; i < zs.size(); ++i) {
        if (i) s += ", ";
        s += "[" + clox::fmt17(zs[i].real()) + ", " + clox::fmt17(zs[i].imag()) + "]";
    }
    return s + "]";
}

std::vector<std::pair<std::string, std::string>> make_config_echo(
    const clox::RunConfig& cfg, const std::string& command, const std::string& suite) {
    std::vector<std::pair<std::string, std::string>> e;
    e.emplace_back("command", "\"" + clox::json_escape(command) + "\"");
    if (!suite.empty()) e.emplace_back("suite", "\"" + clox::json_escape(suite) + "\"");
    e.emplace_back("lambda", std::to_string(cfg.lambda));
    e.emplace_back("alpha", json_double_array(cfg.alpha));
    e.emplace_back("tol", clox::fmt17(cfg.tol));
    e.emplace_back("dim", std::to_string(cfg.dim));
    e.emplace_back("kmax", std::to_string(cfg.kmax));
    e.emplace_back("seed", std::to_string(cfg.seed));
    e.emplace_back("z_grid", json_z_grid(cfg.z_grid));
    e.emplace_back("mu", std::to_string(cfg.mu));
    e.emplace_back("alpha_cs", std::to_string(cfg.alpha_cs));
    e.emplace_back("y_grid", json_double_array(cfg.y_grid));
    e.emplace_back("sweep_lambdas", json_int_array(cfg.sweep_lambdas));
    e.emplace_back("sweep_count", std::to_string(cfg.sweep_count));
    e.emplace_back("format", "\"" + clox::json_escape(cfg.out_format) + "\"");
    return e;
}

void emit(const clox::RunConfig& cfg, const std::string& content) {
    if (cfg.out_path.empty()) {
        std::fwrite(content.data(), 1, content.size(), stdout);
    } else {
        clox::write_atomic(cfg.out_path, content);
        log_info("wrote " + cfg.out_path);
    }
}

clox::CheckResult make_check(const std::string& name, double dev, double thr) {
    clox::CheckResult c;
    c.name = name;
    c.max_deviation = dev;
    c.threshold = thr;
    c.status = (dev <= thr) ? "pass" : "fail";
    return c;
}

clox::CheckResult make_skipped(const std::string& name, double thr,
                               const std::string& reason) {
    clox::CheckResult c;
    c.name = name;
    c.max_deviation = 0.0;
    c.threshold = thr;
    c.status = "skipped";
    c.reason = reason;
    return c;
}

// valid coherent-state labels: 0 ≤ α ≤ λ/2, 0 ≤ μ ≤ λ-α-1
std::vector<std::pair<int, int>> label_pairs(int lambda) {
    std::vector<std::pair<int, int>> out;
    for (int alpha = 0; 2 * alpha <= lambda; ++alpha)
        for (int mu = 0; mu <= lambda - alpha - 1; ++mu) out.emplace_back(mu, alpha);
    return out;
}

// α = λ/2 states live on the unit disc; pull those labels to |z| ≤ 0.6 so
// the default truncation depth covers the slow algebraic coefficient decay.
std::complex<double> clamp_half_family(std::complex<double> z, int lambda, int alpha) {
    if (2 * alpha != lambda) return z;
    const double az = std::abs(z);
    if (az <= 0.6) return z;
    return z * (0.6 / az);
}

std::vector<clox::CheckResult> suite_algebra(const clox::RunConfig& cfg,
                                             const clox::AlgebraParams& p,
                                             const clox::FockRep& rep) {
    std::vector<clox::CheckResult> out;
    for (const clox::AlgebraDeviation& d : clox::check_algebra(rep))
        out.push_back(make_check(d.name, d.deviation, 1e-12));

    const std::vector<double> en = clox::spectrum(p, rep.dim - 1);
    double hdev = 0.0;
    for (int n = 0; n + 1 < rep.dim; ++n) {
        const double e = en[static_cast<std::size_t>(n)];
        hdev = std::max(hdev, std::abs(rep.h0(n, n) - std::complex<double>(e)) /
                                  std::max(1.0, e));
    }
    out.push_back(make_check("spectrum_h0_diagonal", hdev, 1e-13));

    double sdev = 0.0;
    const int ntop = std::min(100, rep.dim - 1 - p.lambda);
    for (int n = 0; n <= ntop; ++n)
        sdev = std::max(sdev, std::abs(en[static_cast<std::size_t>(n + p.lambda)] -
                                       en[static_cast<std::size_t>(n)] -
                                       static_cast<double>(p.lambda)));
    out.push_back(make_check("spectrum_spacing", sdev, 1e-13));

    out.push_back(make_skipped(
        "sga_jminus_jplus_closure", 1e-12,
        "commutator is polynomial in N at generic parameters (no fixed closed form); "
        "diagonal identity covered by sga_jminus_jplus_diagonal"));
    (void)cfg;
    return out;
}

std::vector<clox::CheckResult> suite_cs(const clox::RunConfig& cfg,
                                        const clox::AlgebraParams& p,
                                        const clox::FockRep& rep) {
    std::vector<Eigen::MatrixXcd> apow(static_cast<std::size_t>(p.lambda) + 1);
    std::vector<Eigen::MatrixXcd> adpow(static_cast<std::size_t>(p.lambda) / 2 + 1);
    apow[0] = Eigen::MatrixXcd::Identity(rep.dim, rep.dim);
    for (int j = 1; j <= p.lambda; ++j) apow[static_cast<std::size_t>(j)] =
        apow[static_cast<std::size_t>(j) - 1] * rep.a;
    adpow[0] = apow[0];
    for (int j = 1; 2 * j <= p.lambda; ++j) adpow[static_cast<std::size_t>(j)] =
        adpow[static_cast<std::size_t>(j) - 1] * rep.adag;

    double worst_res = 0.0, worst_norm = 0.0, worst_support = 0.0;
    for (const auto& [mu, alpha] : label_pairs(p.lambda)) {
        const int kq = (rep.dim - 1 - mu) / p.lambda;
        const std::vector<long double> logc = clox::cs_log_coefficients(p, mu, alpha, kq);
        for (const std::complex<double>& z0 : cfg.z_grid) {
            const std::complex<double> z = clamp_half_family(z0, p.lambda, alpha);
            const Eigen::VectorXcd v = clox::cs_build(p, z, mu, alpha, rep.dim);
            worst_res = std::max(
                worst_res,
                clox::cs_residual_with(rep, apow[static_cast<std::size_t>(p.lambda - alpha)],
                                       adpow[static_cast<std::size_t>(alpha)], v, z, mu,
                                       alpha));
            const double closed = clox::cs_norm(p, mu, alpha, std::abs(z));
            const double recur = clox::cs_coefficient_norm(logc, std::abs(z));
            worst_norm = std::max(worst_norm, std::abs(closed / recur - 1.0));
            for (int n = 0; n < rep.dim; ++n)
                if (n % p.lambda != mu) worst_support = std::max(worst_support, std::abs(v[n]));
        }
    }

    double worst_eres = 0.0, worst_enorm = 0.0;
    const int k0 = (rep.dim - 1) / p.lambda;
    for (const std::complex<double>& z : cfg.z_grid) {
        const Eigen::VectorXcd v = clox::eigen_cs_build(p, z, rep.dim);
        worst_eres = std::max(worst_eres, clox::eigen_cs_residual(rep, v, z));
        const double closed = clox::eigen_cs_norm(p, std::abs(z));
        const double recur = clox::eigen_cs_component_norm(p, std::abs(z), k0);
        worst_enorm = std::max(worst_enorm, std::abs(closed / recur - 1.0));
    }

    return {make_check("cs_defining_residual", worst_res, 1e-10),
            make_check("cs_norm_recursion_vs_closed_form", worst_norm, 1e-10),
            make_check("cs_grading_support", worst_support, 0.0),
            make_check("eigen_cs_residual", worst_eres, 1e-10),
            make_check("eigen_cs_norm_consistency", worst_enorm, 1e-10)};
}

std::vector<clox::CheckResult> suite_resolution(const clox::RunConfig& cfg,
                                                const clox::AlgebraParams& p) {
    const std::vector<std::pair<int, int>> pairs = label_pairs(p.lambda);
    std::vector<clox::CheckResult> out(pairs.size());
    run_indexed(pairs.size(), [&](std::size_t i) {
        const auto [mu, alpha] = pairs[i];
        const double dev = clox::verify_resolution(p, mu, alpha, cfg.kmax);
        out[i] = make_check(
            "resolution_mu" + std::to_string(mu) + "_alpha" + std::to_string(alpha), dev,
            1e-10);
    });
    return out;
}

std::vector<clox::CheckResult> suite_nondiagonal(const clox::RunConfig& cfg,
                                                 const clox::AlgebraParams& p) {
    std::vector<clox::CheckResult> out;
    out.push_back(
        make_check("nondiagonal_moments", clox::verify_nondiagonal(p, cfg.kmax), 1e-10));

    const std::vector<double> tgrid = {0.25, 0.6, 1.0, 1.5};
    try {
        double min_h = std::numeric_limits<double>::infinity();
        double max_h = 0.0;
        double worst_inv = 0.0;
        for (double t : tgrid) {
            const clox::NondiagonalWeights w = clox::nondiagonal_weights(p, t);
            for (double h : w.h) {
                min_h = std::min(min_h, h);
                max_h = std::max(max_h, std::abs(h));
            }
            for (int n = 0; n < p.lambda; ++n) {
                std::complex<double> acc = 0.0;
                for (int mu = 0; mu < p.lambda; ++mu)
                    acc += std::polar(1.0, -clox::detail::kTwoPi * mu * n / p.lambda) *
                           w.g[static_cast<std::size_t>(mu)];
                worst_inv = std::max(
                    worst_inv, std::abs(acc - w.h[static_cast<std::size_t>(n)]) /
                                   std::max(1.0, max_h));
            }
        }
        out.push_back(make_check("nondiagonal_fourier_inversion", worst_inv, 1e-12));
        out.push_back(make_check("nondiagonal_positivity", std::max(0.0, -min_h), 1e-12));
    } catch (const std::invalid_argument& ex) {
        const std::string reason =
            "pointwise weights unavailable (degenerate parameters); covered by "
            "nondiagonal_moments";
        out.push_back(make_skipped("nondiagonal_fourier_inversion", 1e-12, reason));
        out.push_back(make_skipped("nondiagonal_positivity", 1e-12, reason));
    }
    return out;
}

std::vector<clox::CheckResult> suite_bargmann(const clox::RunConfig& cfg,
                                              const clox::AlgebraParams& p,
                                              const clox::FockRep& rep) {
    const std::vector<std::pair<int, int>> pairs = label_pairs(p.lambda);
    std::vector<clox::CheckResult> out(pairs.size());
    run_indexed(pairs.size(), [&](std::size_t i) {
        const auto [mu, alpha] = pairs[i];
        const double dev = clox::verify_sga_bargmann(p, mu, alpha, cfg.kmax, rep);
        out[i] = make_check(
            "bargmann_sga_mu" + std::to_string(mu) + "_alpha" + std::to_string(alpha), dev,
            1e-12);
    });
    return out;
}

std::vector<clox::CheckResult> suite_vector_bargmann(const clox::RunConfig& cfg,
                                                     const clox::AlgebraParams& p,
                                                     const clox::FockRep& rep) {
    (void)cfg;
    const clox::VectorBargmannDeviations d =
        clox::verify_vector_bargmann_detail(p, rep.dim - 2, rep);
    return {make_check("vector_bargmann_adag", d.adag, 1e-12),
            make_check("vector_bargmann_a", d.a, 1e-12),
            make_check("vector_bargmann_num", d.num, 1e-12),
            make_check("vector_bargmann_commutator", d.comm, 1e-12)};
}

int cmd_spectrum(const clox::RunConfig& cfg) {
    const clox::AlgebraParams p = clox::validate_params(cfg.lambda, cfg.alpha, cfg.tol);
    const std::vector<double> en = clox::spectrum(p, cfg.dim - 1);
    std::string content;
    if (cfg.out_format == "csv") {
        content = "n,energy,mu\n";
        for (int n = 0; n < cfg.dim; ++n)
            content += std::to_string(n) + "," + clox::fmt17(en[static_cast<std::size_t>(n)]) +
                       "," + std::to_string(n % p.lambda) + "\n";
    } else {
        content = "{\n  \"config_echo\": {";
        const auto echo = make_config_echo(cfg, "spectrum", "");
        for (std::size_t i = 0; i < echo.size(); ++i) {
            content += (i ? ",\n    " : "\n    ");
            content += "\"" + echo[i].first + "\": " + echo[i].second;
        }
        content += "\n  },\n  \"rows\": [";
        for (int n = 0; n < cfg.dim; ++n) {
            content += (n ? ",\n    " : "\n    ");
            content += "[" + std::to_string(n) + ", " +
                       clox::fmt17(en[static_cast<std::size_t>(n)]) + ", " +
                       std::to_string(n % p.lambda) + "]";
        }
        content += "\n  ],\n  \"version\": \"" CLOX_VERSION "\"\n}\n";
    }
    emit(cfg, content);
    return 0;
}

int cmd_cs(const clox::RunConfig& cfg, std::complex<double> z) {
    const clox::AlgebraParams p = clox::validate_params(cfg.lambda, cfg.alpha, cfg.tol);
    clox::check_cs_labels(p, cfg.mu, cfg.alpha_cs);
    const clox::CoherentState cs = clox::cs_make(p, z, cfg.mu, cfg.alpha_cs);
    const clox::FockRep rep = clox::build_fock(p, cfg.dim);
    const Eigen::VectorXcd v = clox::cs_build(p, z, cfg.mu, cfg.alpha_cs, cfg.dim);
    const double residual = clox::cs_residual(rep, v, z, cfg.mu, cfg.alpha_cs);

    std::string content;
    if (cfg.out_format == "csv") {
        content = "# residual = " + clox::fmt17(residual) + "\n";
        content += "# norm = " + clox::fmt17(cs.norm) + "\n";
        content += "k,cprime\n";
        for (std::size_t k = 0; k < cs.cprime.size(); ++k)
            content += std::to_string(k) + "," + clox::fmt17(cs.cprime[k]) + "\n";
    } else {
        content = "{\n  \"config_echo\": {";
        const auto echo = make_config_echo(cfg, "cs", "");
        for (std::size_t i = 0; i < echo.size(); ++i) {
            content += (i ? ",\n    " : "\n    ");
            content += "\"" + echo[i].first + "\": " + echo[i].second;
        }
        content += "\n  },\n  \"state\": {\n";
        content += "    \"z\": [" + clox::fmt17(z.real()) + ", " + clox::fmt17(z.imag()) +
                   "],\n";
        content += "    \"mu\": " + std::to_string(cs.mu) + ",\n";
        content += "    \"alpha\": " + std::to_string(cs.alpha) + ",\n";
        content += "    \"kmax\": " + std::to_string(cs.kmax) + ",\n";
        content += "    \"norm\": " + clox::fmt17(cs.norm) + ",\n";
        content += "    \"residual\": " + clox::fmt17(residual) + ",\n";
        content += "    \"coefficients\": ";
        content += json_double_array(cs.cprime);
        content += "\n  },\n  \"version\": \"" CLOX_VERSION "\"\n}\n";
    }
    emit(cfg, content);
    log_info("cs residual " + clox::fmt17(residual));
    return 0;
}

int cmd_density(const clox::RunConfig& cfg) {
    const clox::AlgebraParams p = clox::validate_params(cfg.lambda, cfg.alpha, cfg.tol);
    clox::check_cs_labels(p, cfg.mu, cfg.alpha_cs);
    for (double y : cfg.y_grid)
        if (y < 0.0)
            throw std::invalid_argument("density: y_grid entries must be nonnegative");

    std::string content = "y,h\n";
    const clox::RadialMeasure rm = clox::radial_measure(p, cfg.mu, cfg.alpha_cs);
    bool failed_moments = false;
    if (!clox::is_generic_measure(rm)) {
        const double dev = clox::verify_resolution(p, cfg.mu, cfg.alpha_cs, cfg.kmax);
        failed_moments = !(dev <= 1e-10);
        content += "# pointwise evaluation unavailable (degenerate parameters); moments " +
                   std::string(failed_moments ? "FAILED" : "verified") +
                   " (max deviation " + clox::fmt17(dev) + ")\n";
    } else {
        for (double y : cfg.y_grid) {
            if (y == 0.0) {
                content += "# y=0 omitted (possible endpoint singularity)\n";
                continue;
            }
            if (2 * cfg.alpha_cs == p.lambda && y >= 1.0) {
                content += "# y=" + clox::fmt17(y) +
                           " omitted (alpha = lambda/2 measure is supported on y < 1)\n";
                continue;
            }
            content += clox::fmt17(y) + "," + clox::fmt17(clox::density_value(rm, y)) + "\n";
        }
    }
    emit(cfg, content);
    return failed_moments ? 1 : 0;
}

int cmd_verify(const clox::RunConfig& cfg, const std::string& suite, double fudge) {
    const auto t0 = std::chrono::steady_clock::now();
    const clox::AlgebraParams p = clox::validate_params(cfg.lambda, cfg.alpha, cfg.tol);

    const bool all = (suite == "all");
    const bool need_rep = all || suite == "algebra" || suite == "cs" ||
                          suite == "bargmann" || suite == "vector-bargmann";
    std::optional<clox::FockRep> rep;
    if (need_rep) rep.emplace(clox::build_fock(p, cfg.dim));

    // independent suites run concurrently; assembly order below is fixed
    std::vector<std::pair<std::string,
                          std::future<std::vector<clox::CheckResult>>>> futures;
    auto launch = [&](const std::string& name, auto fn) {
        futures.emplace_back(name, std::async(std::launch::async, fn));
    };
    if (all || suite == "algebra")
        launch("algebra", [&] { return suite_algebra(cfg, p, *rep); });
    if (all || suite == "cs") launch("cs", [&] { return suite_cs(cfg, p, *rep); });
    if (all || suite == "resolution")
        launch("resolution", [&] { return suite_resolution(cfg, p); });
    if (all || suite == "nondiagonal")
        launch("nondiagonal", [&] { return suite_nondiagonal(cfg, p); });
    if (all || suite == "bargmann")
        launch("bargmann", [&] { return suite_bargmann(cfg, p, *rep); });
    if (all || suite == "vector-bargmann")
        launch("vector-bargmann", [&] { return suite_vector_bargmann(cfg, p, *rep); });

    clox::Report report;
    report.config_echo = make_config_echo(cfg, "verify", suite);
    for (auto& [name, fut] : futures) {
        std::vector<clox::CheckResult> checks = fut.get();
        log_debug("suite " + name + ": " + std::to_string(checks.size()) + " checks");
        for (clox::CheckResult& c : checks) {
            if (fudge != 0.0 && c.status != "skipped") {
                c.max_deviation += fudge;
                c.status = (c.max_deviation <= c.threshold) ? "pass" : "fail";
            }
            report.checks.push_back(std::move(c));
        }
    }

    for (const clox::CheckResult& c : report.checks)
        log_info((c.status == "pass" ? "PASS " : c.status == "fail" ? "FAIL " : "SKIP ") +
                 c.name + " max_deviation=" + clox::fmt17(c.max_deviation) +
                 " threshold=" + clox::fmt17(c.threshold) +
                 (c.reason.empty() ? "" : " (" + c.reason + ")"));

    emit(cfg, cfg.out_format == "csv" ? clox::to_csv(report) : clox::to_json(report));
    const auto dt = std::chrono::duration_cast<std::chrono::milliseconds>(
        std::chrono::steady_clock::now() - t0);
    log_info("verify " + suite + " finished in " + std::to_string(dt.count()) + " ms");
    return clox::all_pass(report) ? 0 : 1;
}

int cmd_sweep(const clox::RunConfig& cfg) {
    struct Task {
        int lambda;
        int index;
        std::vector<double> alpha;
    };
    std::vector<Task> tasks;
    for (int lambda : cfg.sweep_lambdas) {
        if (lambda < 2) throw std::invalid_argument("sweep: lambda must be at least 2");
        // one decorrelated stream per lambda so adding a lambda never
        // reshuffles the others
        const std::uint64_t seed =
            cfg.seed ^ (0x9E3779B97F4A7C15ull * static_cast<std::uint64_t>(lambda));
        const auto alphas = clox::sample_admissible_alphas(lambda, cfg.sweep_count, seed);
        for (int i = 0; i < cfg.sweep_count; ++i)
            tasks.push_back({lambda, i, alphas[static_cast<std::size_t>(i)]});
    }

    std::vector<clox::CheckResult> checks(tasks.size());
    run_indexed(tasks.size(), [&](std::size_t i) {
        const Task& t = tasks[i];
        const clox::AlgebraParams p = clox::validate_params(t.lambda, t.alpha, cfg.tol);
        const int dim = std::max(120, 2 * t.lambda);
        const clox::FockRep rep = clox::build_fock(p, dim);
        double worst = 0.0;
        for (const clox::AlgebraDeviation& d : clox::check_algebra(rep))
            worst = std::max(worst, d.deviation);
        checks[i] = make_check("sweep_l" + std::to_string(t.lambda) + "_s" +
                                   std::to_string(t.index),
                               worst, 1e-12);
    });

    clox::Report report;
    report.config_echo = make_config_echo(cfg, "sweep", "");
    report.checks = std::move(checks);
    for (const clox::CheckResult& c : report.checks)
        log_info((c.status == "pass" ? "PASS " : "FAIL ") + c.name +
                 " max_deviation=" + clox::fmt17(c.max_deviation));
    emit(cfg, cfg.out_format == "csv" ? clox::to_csv(report) : clox::to_json(report));
    return clox::all_pass(report) ? 0 : 1;
}

}  // namespace

int main(int argc, char** argv) {
    if (const char* lv = std::getenv("CLOX_LOG")) {
        const std::string s = lv;
        if (s == "quiet") g_log_level = 0;
        else if (s == "debug") g_log_level = 2;
        else g_log_level = 1;
    }

    CLI::App app{"C_lambda-extended oscillator verification toolkit"};
    app.require_subcommand(1);

    std::string config_path, out_path, format, suite = "all", zarg;
    int opt_mu = -1, opt_alpha_cs = -1, opt_kmax = -1, opt_dim = -1;
    double fudge = 0.0;

    auto add_common = [&](CLI::App* sub) {
        sub->add_option("--config", config_path, "configuration file path");
        sub->add_option("--out", out_path, "output file (default stdout)");
        sub->add_option("--format", format, "output format")
            ->check(CLI::IsMember({"json", "csv"}));
        sub->add_option("--kmax", opt_kmax, "moment/basis depth override");
        sub->add_option("--dim", opt_dim, "truncation dimension override");
    };

    CLI::App* sp = app.add_subcommand("spectrum", "energy table (n, E_n, grade)");
    add_common(sp);

    CLI::App* sc = app.add_subcommand("cs", "coherent-state coefficients and residuals");
    add_common(sc);
    sc->add_option("--z", zarg, "complex label as RE,IM");
    sc->add_option("--mu", opt_mu, "grade label");
    sc->add_option("--alpha-cs", opt_alpha_cs, "family label");

    CLI::App* sd = app.add_subcommand("density", "radial measure density on the y-grid");
    add_common(sd);
    sd->add_option("--mu", opt_mu, "grade label");
    sd->add_option("--alpha-cs", opt_alpha_cs, "family label");

    CLI::App* sv = app.add_subcommand("verify", "run verification suites");
    add_common(sv);
    sv->add_option("--suite", suite, "suite name")
        ->check(CLI::IsMember({"algebra", "cs", "resolution", "nondiagonal", "bargmann",
                               "vector-bargmann", "all"}));
    sv->add_option("--check-fudge", fudge, "")->group("");  // test hook: shift deviations

    CLI::App* sw = app.add_subcommand("sweep", "randomized admissible-parameter scan");
    add_common(sw);

    try {
        app.parse(argc, argv);
    } catch (const CLI::ParseError& e) {
        const int code = app.exit(e);  // prints help/usage as appropriate
        return code == 0 ? 0 : 2;      // flag misuse is a config error
    }

    try {
        clox::RunConfig cfg =
            config_path.empty() ? clox::RunConfig{} : clox::parse_config_file(config_path);
        if (opt_kmax > 0) cfg.kmax = opt_kmax;
        if (opt_dim > 0) cfg.dim = opt_dim;
        if (opt_mu >= 0) cfg.mu = opt_mu;
        if (opt_alpha_cs >= 0) cfg.alpha_cs = opt_alpha_cs;
        if (!out_path.empty()) cfg.out_path = out_path;
        if (!format.empty()) cfg.out_format = format;
        clox::finalize_run_config(cfg);

        std::complex<double> z = 0.0;
        if (!zarg.empty()) {
            const std::size_t comma = zarg.find(',');
            if (comma == std::string::npos)
                throw std::invalid_argument("--z expects RE,IM");
            char* e1 = nullptr;
            char* e2 = nullptr;
            const std::string re = zarg.substr(0, comma), im = zarg.substr(comma + 1);
            const double zr = std::strtod(re.c_str(), &e1);
            const double zi = std::strtod(im.c_str(), &e2);
            if (e1 != re.c_str() + re.size() || e2 != im.c_str() + im.size())
                throw std::invalid_argument("--z expects RE,IM with numeric parts");
            z = {zr, zi};
        }

        if (app.got_subcommand(sp)) return cmd_spectrum(cfg);
        if (app.got_subcommand(sc)) return cmd_cs(cfg, z);
        if (app.got_subcommand(sd)) return cmd_density(cfg);
        if (app.got_subcommand(sv)) return cmd_verify(cfg, suite, fudge);
        if (app.got_subcommand(sw)) return cmd_sweep(cfg);
        std::fprintf(stderr, "error: no subcommand\n");
        return 2;
    } catch (const std::exception& ex) {
        std::fprintf(stderr, "error: %s\n", ex.what());
        return 2;
    }
}
