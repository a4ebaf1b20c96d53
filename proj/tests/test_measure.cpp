#include <gtest/gtest.h>

#include <cmath>
#include <complex>

#include "clox/measure.hpp"
#include "oracles.hpp"

using clox::AlgebraParams;
using clox::NondiagonalWeights;
using clox::RadialMeasure;

namespace {

const AlgebraParams kBoson = clox::validate_params(2, {0.0, 0.0});
const AlgebraParams kParaboson = clox::validate_params(2, {1.0, -1.0});
const AlgebraParams kGenericL3 = clox::validate_params(3, {0.7, 0.1, -0.8});
const AlgebraParams kDegenerateL3 = clox::validate_params(3, {1.0, 0.0, -1.0});

constexpr double kPi = 3.14159265358979323846;

}  // namespace

TEST(RequiredMoments, BosonFactorialOracle) {
    // (mu=0, alpha=0): c'^2_k = 1/(2k)! so the moment is (2k)!/(pi 4^{k+1})
    const std::vector<double> req = clox::required_log_moments(kBoson, 0, 0, 15);
    for (int k = 0; k <= 15; ++k) {
        const long double ref = std::log(oracle::factorial_ld(2 * k)) -
                                std::log(static_cast<long double>(kPi)) -
                                (k + 1) * std::log(4.0L);
        EXPECT_NEAR(req[k], static_cast<double>(ref), 1e-12) << "k=" << k;
    }
}

TEST(RequiredMoments, BosonHalfFamilyOracle) {
    // (mu=0, alpha=1): lambda-2*alpha = 0 kills the lambda power, so the
    // moment is (2k)!!/(pi (2k-1)!!)
    const std::vector<double> req = clox::required_log_moments(kBoson, 0, 1, 12);
    for (int k = 0; k <= 12; ++k) {
        const long double ref = std::log(oracle::double_factorial_ld(2 * k) /
                                         oracle::double_factorial_ld(2 * k - 1)) -
                                std::log(static_cast<long double>(kPi));
        EXPECT_NEAR(req[k], static_cast<double>(ref), 1e-12) << "k=" << k;
    }
}

TEST(RadialMeasureRows, ParameterTranscription) {
    // lambda=3, (mu=1, alpha=1): arow = (bbar_2 - 1), brow = (0, bbar_1)
    const RadialMeasure rm = clox::radial_measure(kGenericL3, 1, 1);
    ASSERT_EQ(rm.mg.arow.size(), 1u);
    ASSERT_EQ(rm.mg.brow.size(), 2u);
    EXPECT_DOUBLE_EQ(rm.mg.arow[0], kGenericL3.betabar[2] - 1.0);
    EXPECT_DOUBLE_EQ(rm.mg.brow[0], 0.0);
    EXPECT_DOUBLE_EQ(rm.mg.brow[1], kGenericL3.betabar[1]);

    // (mu=0, alpha=0): no arow, brow = (0, bbar_1 - 1, bbar_2 - 1)
    const RadialMeasure rm0 = clox::radial_measure(kGenericL3, 0, 0);
    ASSERT_EQ(rm0.mg.arow.size(), 0u);
    ASSERT_EQ(rm0.mg.brow.size(), 3u);
    EXPECT_DOUBLE_EQ(rm0.mg.brow[1], kGenericL3.betabar[1] - 1.0);
    EXPECT_DOUBLE_EQ(rm0.mg.brow[2], kGenericL3.betabar[2] - 1.0);
}

TEST(RadialMeasureRows, NormalizationFixedByZerothMoment) {
    for (int mu = 0; mu < 3; ++mu) {
        const RadialMeasure rm = clox::radial_measure(kGenericL3, mu, 0);
        const double lhs = rm.logA + clox::mellin_meijer_g(rm.mg, 1.0);
        const double req = clox::required_log_moment(kGenericL3, mu, 0, 0);
        EXPECT_NEAR(lhs, req, 1e-13) << "mu=" << mu;
    }
}

TEST(Resolution, MomentSystemAcrossFamilies) {
    const std::vector<AlgebraParams> sets = {kBoson, kParaboson, kGenericL3,
                                             kDegenerateL3};
    for (const AlgebraParams& p : sets) {
        for (int alpha = 0; 2 * alpha <= p.lambda; ++alpha) {
            for (int mu = 0; mu + alpha + 1 <= p.lambda; ++mu) {
                const double dev = clox::verify_resolution(p, mu, alpha, 50);
                EXPECT_LT(dev, 1e-10) << "lambda=" << p.lambda << " mu=" << mu
                                      << " alpha=" << alpha;
            }
        }
    }
}

TEST(Resolution, QuadratureCrossCheckBosonClosedForm) {
    // boson (mu=0, alpha=0) density is A sqrt(pi) y^{-1/2} e^{-2 sqrt(y)};
    // integrate its moments numerically (u = sqrt(y)) against the Mellin route
    const RadialMeasure rm = clox::radial_measure(kBoson, 0, 0);
    const double amp = std::exp(rm.logA) * std::sqrt(kPi);
    for (int k = 0; k <= 5; ++k) {
        const auto integrand = [&](long double u) -> long double {
            return 2.0L * static_cast<long double>(amp) * std::pow(u, 2.0L * k) *
                   std::exp(-2.0L * u);
        };
        const long double got = oracle::integrate(integrand, 0.0L, 40.0L, 40, 20);
        const double want = std::exp(clox::required_log_moment(kBoson, 0, 0, k));
        EXPECT_NEAR(static_cast<double>(got) / want, 1.0, 1e-10) << "k=" << k;
    }
}

TEST(Resolution, QuadratureCrossCheckGenericContour) {
    // same check for a generic lambda=3 set with the density evaluated by the
    // inverse-Mellin contour oracle; the contour line tracks the saddle at
    // Re s = y^{1/3} so the integrand peak stays of the order of the result,
    // and the substitution y = u^3 flattens the endpoint singularity
    const RadialMeasure rm = clox::radial_measure(kGenericL3, 0, 0);
    ASSERT_TRUE(clox::is_generic_measure(rm));
    const double amp = std::exp(rm.logA);
    for (int k = 0; k <= 2; ++k) {
        const auto integrand = [&](long double u) -> long double {
            if (u <= 0.0L) return 0.0L;
            const double y = static_cast<double>(u * u * u);
            const double c = std::max(1.2, std::cbrt(y));
            const double g =
                oracle::inverse_mellin_density(rm.mg.arow, rm.mg.brow, y, c, 40.0, 0.02);
            return static_cast<long double>(amp * g) * std::pow(u, 3.0L * k) * 3.0L *
                   u * u;
        };
        // the integrand is only C^0 at u = 0 (fractional power u^{3 bbar_1 - 1});
        // a dense mesh on the first unit interval absorbs that
        const long double got = oracle::integrate(integrand, 0.0L, 1.0L, 40, 12) +
                                oracle::integrate(integrand, 1.0L, 15.0L, 28, 12);
        const double want = std::exp(clox::required_log_moment(kGenericL3, 0, 0, k));
        EXPECT_NEAR(static_cast<double>(got) / want, 1.0, 1e-6) << "k=" << k;
    }
}

TEST(Nondiagonal, MomentEquivalenceAcrossFamilies) {
    EXPECT_LT(clox::verify_nondiagonal(kBoson, 50), 1e-10);
    EXPECT_LT(clox::verify_nondiagonal(kParaboson, 50), 1e-10);
    EXPECT_LT(clox::verify_nondiagonal(kGenericL3, 50), 1e-10);
    EXPECT_LT(clox::verify_nondiagonal(kDegenerateL3, 50), 1e-10);
}

TEST(Nondiagonal, BosonClosedFormWeights) {
    for (double t : {0.25, 0.8, 1.6}) {
        const NondiagonalWeights w = clox::nondiagonal_weights(kBoson, t);
        const double ref = std::exp(-2.0 * t) / kPi;
        ASSERT_EQ(w.h.size(), 2u);
        EXPECT_NEAR(w.h[0] / ref, 1.0, 1e-12) << "t=" << t;
        EXPECT_NEAR(w.h[1] / ref, 1.0, 1e-12) << "t=" << t;
        EXPECT_NEAR(std::abs(w.g[0]) / ref, 1.0, 1e-12);
        EXPECT_LT(std::abs(w.g[1]), 1e-14 * ref + 1e-18);
    }
}

TEST(Nondiagonal, FourierInversionAndPositivity) {
    for (double t : {0.25, 0.6, 1.0, 1.5}) {
        const NondiagonalWeights w = clox::nondiagonal_weights(kGenericL3, t);
        double hmax = 1.0;
        for (double hv : w.h) hmax = std::max(hmax, std::abs(hv));
        for (int n = 0; n < 3; ++n) {
            std::complex<double> acc(0.0, 0.0);
            for (int mu = 0; mu < 3; ++mu)
                acc += w.g[mu] *
                       std::polar(1.0, -clox::detail::kTwoPi * mu * n / 3.0);
            EXPECT_NEAR(std::abs(acc - w.h[n]) / hmax, 0.0, 1e-12)
                << "t=" << t << " n=" << n;
        }
        for (int mu = 0; mu < 3; ++mu)
            EXPECT_GT(w.h[mu], -1e-12) << "t=" << t << " mu=" << mu;
    }
}

TEST(Nondiagonal, DegenerateParametersRejectPointwise) {
    // paraboson bbar_1 = 1 collides with the 0 in brow (double pole)
    try {
        clox::nondiagonal_weights(kParaboson, 0.5);
        FAIL() << "expected a throw";
    } catch (const std::invalid_argument& ex) {
        EXPECT_NE(std::string(ex.what()).find("degenerate"), std::string::npos);
    }
    EXPECT_THROW(clox::nondiagonal_weights(kBoson, 0.0), std::invalid_argument);
    EXPECT_THROW(clox::nondiagonal_weights(kBoson, -1.0), std::invalid_argument);
}

TEST(Nondiagonal, GenericityClassification) {
    EXPECT_TRUE(clox::is_generic_measure(clox::radial_measure(kBoson, 0, 0)));
    EXPECT_FALSE(clox::is_generic_measure(clox::radial_measure(kParaboson, 0, 0)));
    EXPECT_TRUE(clox::is_generic_measure(clox::radial_measure(kGenericL3, 0, 0)));
    EXPECT_FALSE(clox::is_generic_measure(clox::radial_measure(kDegenerateL3, 0, 0)));
}
