// Builds coherent states for the undeformed oscillator and a deformed
// three-grade algebra, then checks the defining relation a^{lambda-alpha} v =
// z^{lambda-alpha} (a†)^alpha v numerically and prints the leading
// amplitudes.  The boson eigenstate at z = 1 reproduces the Glauber state.

#include <cmath>
#include <complex>
#include <cstdio>

#include "clox/cstates.hpp"

int main() {
    // deformed three-grade family, state in the mu = 1 subspace
    const clox::AlgebraParams p = clox::validate_params(3, {0.7, 0.1, -0.8});
    const std::complex<double> z(1.2, 0.8);
    const clox::FockRep rep = clox::build_fock(p, 60);
    const Eigen::VectorXcd v = clox::cs_build(p, z, 1, 0, rep.dim);

    std::printf("three-grade coherent state at z = %.2f%+.2fi (mu=1):\n", z.real(),
                z.imag());
    std::printf("  defining-relation residual: %.3g\n",
                clox::cs_residual(rep, v, z, 1, 0));
    std::printf("  closed-form normalization:  %.12f\n",
                clox::cs_norm(p, 1, 0, std::abs(z)));
    std::printf("  leading amplitudes |<n|v>|: ");
    for (int n = 1; n <= 13; n += 3) std::printf(" %.5f", std::abs(v[n]));
    std::printf("\n\n");

    // boson eigenstate of a at z = 1: amplitudes e^{-1/2}/sqrt(n!)
    const clox::AlgebraParams boson = clox::validate_params(2, {0.0, 0.0});
    const Eigen::VectorXcd g = clox::eigen_cs_build(boson, 1.0, 40);
    std::printf("boson a-eigenstate at z = 1 vs the Glauber expansion:\n");
    std::printf("  n      amplitude      e^{-1/2}/sqrt(n!)\n");
    double fact = 1.0;
    for (int n = 0; n <= 5; ++n) {
        if (n > 0) fact *= n;
        std::printf("  %d   %.12f   %.12f\n", n, g[n].real(),
                    std::exp(-0.5) / std::sqrt(fact));
    }
    return 0;
}
