#pragma once

/**
 * @file bargmann.hpp
 * @brief Bargmann-space differential operators and their verification
 *        against Fock matrix elements.
 *
 * A DiffOp is a formal sum of terms  coeff · z^s ∘ ∏_i(z d/dz + c_i) ∘ (d/dz)^t,
 * acting on exact polynomial coefficient lists:
 *     z^n ↦ coeff · [∏_i (n−t+c_i)] · n(n−1)…(n−t+1) · z^{n−t+s}.
 * No sampled function values and no finite differences anywhere; every
 * verification reduces to products of known reals.
 *
 * Per-subspace realization (grade μ, family α), acting on ℬ^{(α)}_μ where
 * the Fock state |kλ+μ⟩ maps to the weighted monomial e_k = c'_k z^k:
 *     𝒥₊ = λ^{α-1} z ∏_{ν=μ+1..μ+α} (z∂ + β̄_ν)
 *     𝒥₋ = λ^{λ-α-1} [∏_{ν=1..μ} (z∂ + β̄_ν + 1)] [∏_{ν=μ+α+1..λ-1} (z∂ + β̄_ν)] ∂
 *     𝒥₀ = z∂ + (β̄_μ + β̄_{μ+1})/2
 *
 * Whole-space realization on λ-vectors of polynomials, where |kλ+μ⟩ lives in
 * component μ as the monomial z^{kλ+μ} with the eigenstate-family weight
 * w_{kλ+μ} = λ^{-μ/2} (∏_{ν≤μ} β̄_ν)^{-1/2} c'^{(μ,0)}_k:
 *     𝒩  = z∂ · ℐ
 *     𝒜† = cyclic subdiagonal of plain z (top-right corner wraps)
 *     𝒜  = superdiagonal of ∂ + β_ν/z (ν = 1..λ-1), plain ∂ in the
 *          bottom-left corner.
 * The entry ∂ + β/z is stored normal-ordered as z^{-1}(z∂ + β), an identical
 * action on every monomial z^n with n ≥ 1; the basis grading guarantees the
 * singular entries never meet a constant term, and a violation raises an
 * error rather than inventing a z^{-1} coefficient.
 */

#include <cmath>
#include <cstddef>
#include <stdexcept>
#include <string>
#include <vector>

#include "clox/algebra.hpp"
#include "clox/cstates.hpp"
#include "clox/fock.hpp"

namespace clox {

struct DiffOpTerm {
    double coeff = 1.0;
    int zshift = 0;             // s in z^s
    std::vector<double> euler;  // c_i in ∏ (z d/dz + c_i)
    int dorder = 0;             // t in (d/dz)^t
};

struct DiffOp {
    std::vector<DiffOpTerm> terms;
};

/// Exact action on a polynomial given as coefficient list (index = degree).
/// Throws when a term would produce a negative exponent with a nonzero
/// coefficient: that signals an operator/subspace mismatch.
inline std::vector<double> apply_diffop(const DiffOp& op, const std::vector<double>& poly) {
    int maxdeg = -1;
    for (const DiffOpTerm& t : op.terms) {
        const int d = static_cast<int>(poly.size()) - 1 - t.dorder + t.zshift;
        maxdeg = std::max(maxdeg, d);
    }
    std::vector<double> out(static_cast<std::size_t>(std::max(maxdeg + 1, 0)), 0.0);
    for (const DiffOpTerm& t : op.terms) {
        for (int n = 0; n < static_cast<int>(poly.size()); ++n) {
            const double pn = poly[static_cast<std::size_t>(n)];
            if (pn == 0.0) continue;
            double factor = t.coeff;
            for (int j = 0; j < t.dorder; ++j) factor *= static_cast<double>(n - j);
            if (factor == 0.0) continue;
            for (double c : t.euler) factor *= static_cast<double>(n - t.dorder) + c;
            const int e = n - t.dorder + t.zshift;
            const double contrib = factor * pn;
            if (e < 0) {
                if (contrib != 0.0)
                    throw std::domain_error(
                        "apply_diffop: negative exponent z^" + std::to_string(e) +
                        " with nonzero coefficient (operator/subspace mismatch)");
                continue;
            }
            out[static_cast<std::size_t>(e)] += contrib;
        }
    }
    while (out.size() > 1 && out.back() == 0.0) out.pop_back();
    return out;
}

/// Human-readable operator string, e.g. "2.5 z^2 (z d/dz + 0.37) (d/dz)^1".
inline std::string diffop_to_string(const DiffOp& op) {
    if (op.terms.empty()) return "0";
    std::string s;
    for (std::size_t i = 0; i < op.terms.size(); ++i) {
        const DiffOpTerm& t = op.terms[i];
        if (i) s += " + ";
        s += std::to_string(t.coeff);
        if (t.zshift != 0) s += " z^" + std::to_string(t.zshift);
        for (double c : t.euler) s += " (z d/dz + " + std::to_string(c) + ")";
        if (t.dorder > 0) s += " (d/dz)^" + std::to_string(t.dorder);
    }
    return s;
}

struct SgaDiffOps {
    DiffOp jplus, jminus, j0;
};

/// The per-subspace SGA generators, transcribed term for term (empty
/// products are the identity).
inline SgaDiffOps sga_diffops(const AlgebraParams& p, int mu, int alpha) {
    check_cs_labels(p, mu, alpha);
    SgaDiffOps ops;

    DiffOpTerm plus;
    plus.coeff = std::pow(static_cast<double>(p.lambda), alpha - 1);
    plus.zshift = 1;
    for (int nu = mu + 1; nu <= mu + alpha; ++nu) plus.euler.push_back(p.betabar[nu]);
    ops.jplus.terms.push_back(plus);

    DiffOpTerm minus;
    minus.coeff = std::pow(static_cast<double>(p.lambda), p.lambda - alpha - 1);
    minus.dorder = 1;
    for (int nu = 1; nu <= mu; ++nu) minus.euler.push_back(p.betabar[nu] + 1.0);
    for (int nu = mu + alpha + 1; nu <= p.lambda - 1; ++nu)
        minus.euler.push_back(p.betabar[nu]);
    ops.jminus.terms.push_back(minus);

    DiffOpTerm zero;
    zero.euler.push_back(0.0);  // z d/dz
    ops.j0.terms.push_back(zero);
    DiffOpTerm shift;
    shift.coeff = 0.5 * (p.betabar[mu] + p.betabar[mu + 1]);
    ops.j0.terms.push_back(shift);
    return ops;
}

struct BargmannBasisElement {
    int degree = 0;
    double weight = 1.0;  // c'_k: the Fock state |kλ+μ⟩ maps to c'_k z^k
};

/// Bargmann image of |kλ+μ⟩ in ℬ^{(α)}_μ: the monomial z^k with weight c'_k.
inline BargmannBasisElement bargmann_basis(const AlgebraParams& p, int mu, int alpha,
                                           int k) {
    BargmannBasisElement e;
    e.degree = k;
    e.weight = cs_coefficients(p, mu, alpha, k).back();
    return e;
}

/// Max relative mismatch between DiffOp matrix elements in the weighted
/// monomial basis and truncated Fock matrix elements of J₊, J₋, J₀, over
/// k = 0..kmax.
inline double verify_sga_bargmann(const AlgebraParams& p, int mu, int alpha, int kmax,
                                  const FockRep& rep) {
    check_cs_labels(p, mu, alpha);
    if (rep.dim < (kmax + 2) * p.lambda)
        throw std::invalid_argument("verify_sga_bargmann: rep.dim too small for kmax");
    const std::vector<long double> logc = cs_log_coefficients(p, mu, alpha, kmax + 1);
    const SgaDiffOps ops = sga_diffops(p, mu, alpha);

    auto rel = [](double a, double b) {
        const double scale = std::max({std::abs(a), std::abs(b), 1e-30});
        return std::abs(a - b) / scale;
    };

    double worst = 0.0;
    std::vector<double> mono(static_cast<std::size_t>(kmax) + 1, 0.0);
    for (int k = 0; k <= kmax; ++k) {
        mono.assign(static_cast<std::size_t>(k) + 1, 0.0);
        mono[static_cast<std::size_t>(k)] = 1.0;
        const long long n = static_cast<long long>(k) * p.lambda + mu;

        {
            const std::vector<double> r = apply_diffop(ops.jplus, mono);
            const double b =
                r[static_cast<std::size_t>(k) + 1] *
                static_cast<double>(std::exp(logc[static_cast<std::size_t>(k)] -
                                             logc[static_cast<std::size_t>(k) + 1]));
            const double f = rep.jplus(n + p.lambda, n).real();
            worst = std::max(worst, rel(b, f));
        }
        {
            const std::vector<double> r = apply_diffop(ops.jminus, mono);
            const double b =
                (k >= 1)
                    ? r[static_cast<std::size_t>(k) - 1] *
                          static_cast<double>(std::exp(logc[static_cast<std::size_t>(k)] -
                                                       logc[static_cast<std::size_t>(k) - 1]))
                    : (r.empty() || r[0] == 0.0 ? 0.0 : r[0]);
            const double f = (n >= p.lambda) ? rep.jminus(n - p.lambda, n).real() : 0.0;
            worst = std::max(worst, (b == 0.0 && f == 0.0) ? 0.0 : rel(b, f));
        }
        {
            const std::vector<double> r = apply_diffop(ops.j0, mono);
            const double b = r[static_cast<std::size_t>(k)];
            const double f = rep.j0(n, n).real();
            worst = std::max(worst, rel(b, f));
        }
    }
    return worst;
}

struct VectorDiffOp {
    int lambda = 0;
    std::vector<std::vector<DiffOp>> entries;  // entries[row][col]; empty = zero
};

/// Componentwise action on a λ-vector of polynomials.
inline std::vector<std::vector<double>> apply_vector_diffop(
    const VectorDiffOp& op, const std::vector<std::vector<double>>& polyvec) {
    if (polyvec.size() != static_cast<std::size_t>(op.lambda))
        throw std::invalid_argument("apply_vector_diffop: component count mismatch");
    std::vector<std::vector<double>> out(polyvec.size());
    for (std::size_t r = 0; r < out.size(); ++r) {
        std::vector<double> acc(1, 0.0);
        for (std::size_t c = 0; c < polyvec.size(); ++c) {
            if (op.entries[r][c].terms.empty()) continue;
            const std::vector<double> part = apply_diffop(op.entries[r][c], polyvec[c]);
            if (part.size() > acc.size()) acc.resize(part.size(), 0.0);
            for (std::size_t d = 0; d < part.size(); ++d) acc[d] += part[d];
        }
        out[r] = std::move(acc);
    }
    return out;
}

struct VectorBargmannOps {
    VectorDiffOp nop, adag, aop;
};

/// The λ×λ operator matrices of N, a†, a on the whole-space Bargmann
/// realization.
inline VectorBargmannOps vector_bargmann_ops(const AlgebraParams& p) {
    VectorBargmannOps ops;
    for (VectorDiffOp* v : {&ops.nop, &ops.adag, &ops.aop}) {
        v->lambda = p.lambda;
        v->entries.assign(p.lambda, std::vector<DiffOp>(p.lambda));
    }
    for (int mu = 0; mu < p.lambda; ++mu) {
        DiffOpTerm euler;
        euler.euler.push_back(0.0);
        ops.nop.entries[mu][mu].terms.push_back(euler);

        DiffOpTerm zmul;
        zmul.zshift = 1;
        ops.adag.entries[mu][(mu + p.lambda - 1) % p.lambda].terms.push_back(zmul);
    }
    for (int mu = 0; mu + 1 < p.lambda; ++mu) {
        DiffOpTerm t;  // z^{-1}(z d/dz + β_{μ+1}), the normal-ordered ∂ + β/z
        t.zshift = -1;
        t.euler.push_back(p.beta[mu + 1]);
        ops.aop.entries[mu][mu + 1].terms.push_back(t);
    }
    DiffOpTerm corner;
    corner.dorder = 1;
    ops.aop.entries[p.lambda - 1][0].terms.push_back(corner);
    return ops;
}

struct VectorBargmannDeviations {
    double adag = 0.0;  // 𝒜† entries vs Fock a†
    double a = 0.0;     // 𝒜 entries vs Fock a
    double num = 0.0;   // 𝒩 eigenvalues vs n
    double comm = 0.0;  // [𝒜,𝒜†] vs diag(1+α_μ)
};

/// Relative mismatches of the whole-space matrices against Fock elements
/// of a†, a, N on monomial-vector basis elements up to degree nmax, plus the
/// commutator identity [𝒜,𝒜†] = diag(1+α_μ) on the same basis.
inline VectorBargmannDeviations verify_vector_bargmann_detail(const AlgebraParams& p,
                                                              int nmax,
                                                              const FockRep& rep) {
    if (rep.dim < nmax + 2)
        throw std::invalid_argument("verify_vector_bargmann: rep.dim too small for nmax");
    const VectorBargmannOps ops = vector_bargmann_ops(p);

    // log weights of the whole-space basis, n = 0..nmax+1
    std::vector<long double> logw(static_cast<std::size_t>(nmax) + 2);
    {
        const int kcap = (nmax + 1) / p.lambda + 1;
        const long double loglam = std::log(static_cast<long double>(p.lambda));
        long double log_bbar = 0.0L;
        for (int mu = 0; mu < p.lambda; ++mu) {
            if (mu > 0) log_bbar += std::log(static_cast<long double>(p.betabar[mu]));
            const std::vector<long double> logc = cs_log_coefficients(p, mu, 0, kcap);
            for (int k = 0;; ++k) {
                const long long n = static_cast<long long>(k) * p.lambda + mu;
                if (n > nmax + 1) break;
                logw[static_cast<std::size_t>(n)] =
                    -0.5L * mu * loglam - 0.5L * log_bbar +
                    logc[static_cast<std::size_t>(k)];
            }
        }
    }

    auto rel = [](double a, double b) {
        const double scale = std::max({std::abs(a), std::abs(b), 1e-30});
        return std::abs(a - b) / scale;
    };

    VectorBargmannDeviations dev;
    for (int n = 0; n <= nmax; ++n) {
        const int mu = n % p.lambda;
        std::vector<std::vector<double>> basis(static_cast<std::size_t>(p.lambda),
                                               std::vector<double>(1, 0.0));
        basis[static_cast<std::size_t>(mu)].assign(static_cast<std::size_t>(n) + 1, 0.0);
        basis[static_cast<std::size_t>(mu)][static_cast<std::size_t>(n)] = 1.0;

        {  // a†: component μ+1, degree n+1, times the weight ratio
            const std::vector<std::vector<double>> r = apply_vector_diffop(ops.adag, basis);
            const double b =
                r[static_cast<std::size_t>((mu + 1) % p.lambda)]
                 [static_cast<std::size_t>(n) + 1] *
                static_cast<double>(std::exp(logw[static_cast<std::size_t>(n)] -
                                             logw[static_cast<std::size_t>(n) + 1]));
            const double f = rep.adag(n + 1, n).real();
            dev.adag = std::max(dev.adag, rel(b, f));
        }
        if (n >= 1) {  // a: component μ-1, degree n-1
            const std::vector<std::vector<double>> r = apply_vector_diffop(ops.aop, basis);
            const double b =
                r[static_cast<std::size_t>((mu + p.lambda - 1) % p.lambda)]
                 [static_cast<std::size_t>(n) - 1] *
                static_cast<double>(std::exp(logw[static_cast<std::size_t>(n)] -
                                             logw[static_cast<std::size_t>(n) - 1]));
            const double f = rep.a(n - 1, n).real();
            dev.a = std::max(dev.a, rel(b, f));
        }
        {  // N: diagonal eigenvalue n
            const std::vector<std::vector<double>> r = apply_vector_diffop(ops.nop, basis);
            const double b = r[static_cast<std::size_t>(mu)][static_cast<std::size_t>(n)];
            dev.num = std::max(dev.num, (n == 0) ? std::abs(b)
                                                 : rel(b, static_cast<double>(n)));
        }
        {  // [𝒜,𝒜†] = diag(1+α_μ): exact term arithmetic, no weights needed
            const std::vector<std::vector<double>> ad = apply_vector_diffop(ops.adag, basis);
            const std::vector<std::vector<double>> ada = apply_vector_diffop(ops.aop, ad);
            const std::vector<std::vector<double>> a = apply_vector_diffop(ops.aop, basis);
            const std::vector<std::vector<double>> aad = apply_vector_diffop(ops.adag, a);
            double comm = 0.0;
            if (ada[static_cast<std::size_t>(mu)].size() > static_cast<std::size_t>(n))
                comm += ada[static_cast<std::size_t>(mu)][static_cast<std::size_t>(n)];
            if (aad[static_cast<std::size_t>(mu)].size() > static_cast<std::size_t>(n))
                comm -= aad[static_cast<std::size_t>(mu)][static_cast<std::size_t>(n)];
            dev.comm =
                std::max(dev.comm, rel(comm, 1.0 + p.alpha[static_cast<std::size_t>(mu)]));
        }
    }
    return dev;
}

/// Worst of the four whole-space mismatches.
inline double verify_vector_bargmann(const AlgebraParams& p, int nmax,
                                     const FockRep& rep) {
    const VectorBargmannDeviations d = verify_vector_bargmann_detail(p, nmax, rep);
    return std::max({d.adag, d.a, d.num, d.comm});
}

}  // namespace clox
