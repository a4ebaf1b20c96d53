#pragma once

/**
 * @file fock.hpp
 * @brief Truncated Fock-space matrix representation of the C_λ-extended
 *        oscillator and self-consistency checks of its defining relations.
 *
 * The representation is fixed by the structure function F: a has subdiagonal
 * entries √F(n), a† is its adjoint, N is diagonal, T = exp(2πiN/λ) generates
 * the Z_λ grading, and P_μ projects onto the grade-μ subspace spanned by
 * |kλ+μ⟩.  From these, H₀ = ½{a,a†} and the ladder triple
 * J₊ = (1/λ)(a†)^λ, J₋ = (1/λ)a^λ, J₀ = H₀/λ.
 *
 * Truncation-edge policy: a†a ≠ F(N) on the top rows after truncation, so
 * every operator-identity check runs on an interior block only (the top λ+1
 * rows/cols are excluded; commutators involving J± exclude 2λ).  Deviations
 * are reported relative to the magnitude of the operands entering each
 * identity, so thresholds stay meaningful when J± entries grow like
 * F(D)^{λ/2}.
 */

#include <complex>
#include <stdexcept>
#include <string>
#include <vector>

#include <Eigen/Dense>

#include "clox/algebra.hpp"

namespace clox {

struct FockRep {
    AlgebraParams params;
    int dim = 0;
    Eigen::MatrixXcd a, adag, num, t;
    std::vector<Eigen::MatrixXcd> proj;  // proj[mu], mu = 0..lambda-1
    Eigen::MatrixXcd h0, jplus, jminus, j0;
};

namespace detail {

inline Eigen::MatrixXcd matrix_power(const Eigen::MatrixXcd& m, int p) {
    Eigen::MatrixXcd r = Eigen::MatrixXcd::Identity(m.rows(), m.cols());
    for (int i = 0; i < p; ++i) r = r * m;
    return r;
}

}  // namespace detail

/// Builds all operator matrices at truncation dim.  dim ≥ 2λ so that the
/// interior commutator checks keep at least two grades of headroom.
inline FockRep build_fock(const AlgebraParams& p, int dim) {
    if (dim < 2 * p.lambda)
        throw std::invalid_argument("build_fock: dim must be at least 2*lambda");

    FockRep rep;
    rep.params = p;
    rep.dim = dim;
    const int D = dim;

    rep.a = Eigen::MatrixXcd::Zero(D, D);
    for (int n = 1; n < D; ++n)
        rep.a(n - 1, n) = std::sqrt(structure_function(p, n));
    rep.adag = rep.a.adjoint();

    rep.num = Eigen::MatrixXcd::Zero(D, D);
    rep.t = Eigen::MatrixXcd::Zero(D, D);
    rep.proj.assign(p.lambda, Eigen::MatrixXcd::Zero(D, D));
    for (int n = 0; n < D; ++n) {
        rep.num(n, n) = static_cast<double>(n);
        rep.t(n, n) = std::polar(1.0, detail::kTwoPi * (n % p.lambda) /
                                          static_cast<double>(p.lambda));
        rep.proj[n % p.lambda](n, n) = 1.0;
    }

    rep.h0 = 0.5 * (rep.a * rep.adag + rep.adag * rep.a);
    rep.jplus = detail::matrix_power(rep.adag, p.lambda) / static_cast<double>(p.lambda);
    rep.jminus = detail::matrix_power(rep.a, p.lambda) / static_cast<double>(p.lambda);
    rep.j0 = rep.h0 / static_cast<double>(p.lambda);
    return rep;
}

struct AlgebraDeviation {
    std::string name;
    double deviation;  // scale-normalized max entrywise deviation
};

namespace detail {

inline double block_maxabs(const Eigen::MatrixXcd& m, int rows) {
    if (rows <= 0) return 0.0;
    return m.block(0, 0, rows, rows).cwiseAbs().maxCoeff();
}

}  // namespace detail

/**
 * Verifies the defining relations on the truncated representation:
 *   - [a,a†] = I + Σ_μ α_μ P_μ
 *   - a†T = e^{-2πi/λ} T a†  (grading of the ladder against the C_λ generator)
 *   - a†P_μ = P_{μ+1} a†     (a† raises the grade by one)
 *   - [N,a†] = a†, [N,T] = 0
 *   - [J₀,J±] = ±J±
 *   - [J₋,J₊] is diagonal, with diagonal equal to the structure-function
 *     product difference (1/λ²)[∏_{j=1..λ}F(n+j) − ∏_{j=0..λ-1}F(n−j)]
 *
 * The closed polynomial form of [J₋,J₊] in J₀ and P_μ is not pinned here;
 * only its diagonality and entrywise values are checked.
 */
inline std::vector<AlgebraDeviation> check_algebra(const FockRep& rep) {
    const AlgebraParams& p = rep.params;
    const int D = rep.dim;
    const int interior = D - p.lambda - 1;      // rows/cols 0..D-λ-2
    const int sga_interior = D - 2 * p.lambda;  // J± shift by λ each way

    std::vector<AlgebraDeviation> out;
    const double amax = rep.a.cwiseAbs().maxCoeff();

    {
        Eigen::MatrixXcd m = rep.a * rep.adag - rep.adag * rep.a -
                             Eigen::MatrixXcd::Identity(D, D);
        for (int mu = 0; mu < p.lambda; ++mu) m -= p.alpha[mu] * rep.proj[mu];
        const double scale = std::max(1.0, amax * amax);
        out.push_back({"commutator_a_adag", detail::block_maxabs(m, interior) / scale});
    }
    {
        const std::complex<double> w = std::polar(1.0, -detail::kTwoPi / p.lambda);
        Eigen::MatrixXcd m = rep.adag * rep.t - w * rep.t * rep.adag;
        out.push_back({"grading_t_adag",
                       detail::block_maxabs(m, interior) / std::max(1.0, amax)});
    }
    {
        double dev = 0.0;
        for (int mu = 0; mu < p.lambda; ++mu) {
            Eigen::MatrixXcd m = rep.adag * rep.proj[mu] -
                                 rep.proj[(mu + 1) % p.lambda] * rep.adag;
            dev = std::max(dev, detail::block_maxabs(m, interior));
        }
        out.push_back({"grading_projectors", dev / std::max(1.0, amax)});
    }
    {
        Eigen::MatrixXcd m = rep.num * rep.adag - rep.adag * rep.num - rep.adag;
        const double scale = std::max(1.0, static_cast<double>(D - 1) * amax);
        out.push_back({"number_op_adag", detail::block_maxabs(m, interior) / scale});
    }
    {
        Eigen::MatrixXcd m = rep.num * rep.t - rep.t * rep.num;
        const double scale = std::max(1.0, static_cast<double>(D - 1));
        out.push_back({"number_op_t", detail::block_maxabs(m, interior) / scale});
    }

    const double jpmax = rep.jplus.cwiseAbs().maxCoeff();
    const double j0max = rep.j0.cwiseAbs().maxCoeff();
    {
        Eigen::MatrixXcd m = rep.j0 * rep.jplus - rep.jplus * rep.j0 - rep.jplus;
        const double scale = std::max(1.0, j0max * jpmax);
        out.push_back({"sga_j0_jplus", detail::block_maxabs(m, sga_interior) / scale});
    }
    {
        Eigen::MatrixXcd m = rep.j0 * rep.jminus - rep.jminus * rep.j0 + rep.jminus;
        const double scale = std::max(1.0, j0max * jpmax);
        out.push_back({"sga_j0_jminus", detail::block_maxabs(m, sga_interior) / scale});
    }
    {
        Eigen::MatrixXcd m = rep.jminus * rep.jplus - rep.jplus * rep.jminus;
        const double scale = std::max(1.0, jpmax * jpmax);
        double offdiag = 0.0, diag = 0.0;
        for (int r = 0; r < sga_interior; ++r) {
            for (int c = 0; c < sga_interior; ++c)
                if (r != c) offdiag = std::max(offdiag, std::abs(m(r, c)));
            long double up = 1.0L, down = 1.0L;
            for (int j = 1; j <= p.lambda; ++j)
                up *= structure_function(p, r + j);
            for (int j = 0; j < p.lambda; ++j) {
                const int n = r - j;
                down *= (n >= 1) ? structure_function(p, n) : 0.0L;
            }
            const double expect = static_cast<double>(
                (up - down) / (static_cast<long double>(p.lambda) * p.lambda));
            diag = std::max(diag, std::abs(m(r, r).real() - expect) +
                                      std::abs(m(r, r).imag()));
        }
        out.push_back({"sga_jminus_jplus_offdiag", offdiag / scale});
        out.push_back({"sga_jminus_jplus_diagonal", diag / scale});
    }
    return out;
}

/// Energies E_n = n + s_μ with s_μ = (1 + β_μ + β_{μ+1})/2, n = kλ+μ; equals
/// the diagonal of H₀ = ½{a,a†}.  Level spacing within a grade is
/// E_{n+λ} − E_n = λ.
inline std::vector<double> spectrum(const AlgebraParams& p, int nmax) {
    if (nmax < 0) throw std::invalid_argument("spectrum: nmax must be >= 0");
    std::vector<double> s(p.lambda);
    for (int mu = 0; mu < p.lambda; ++mu)
        s[mu] = 0.5 * (1.0 + p.beta[mu] + p.beta[mu + 1]);
    std::vector<double> e(nmax + 1);
    for (int n = 0; n <= nmax; ++n)
        e[n] = static_cast<double>(n) + s[n % p.lambda];
    return e;
}

}  // namespace clox
