#include <gtest/gtest.h>

#include <cmath>
#include <complex>
#include <numbers>
#include <random>

#include "thetafay/errors.hpp"
#include "thetafay/group.hpp"
#include "thetafay/theta.hpp"

using namespace thetafay;

namespace {

constexpr double kPi = std::numbers::pi;
constexpr double kTol = 1e-13;

// Plain box summation over p in [-n, n]^g with no truncation logic. Returns the
// value (component < 0) or one gradient component.
Complex naive_series(const Characteristic& m, const SiegelPoint& tau, int n, int component = -1) {
    const int g = m.genus();
    std::vector<int> p(static_cast<std::size_t>(g), -n);
    Complex sum = 0;
    while (true) {
        std::vector<double> x(static_cast<std::size_t>(g));
        for (int i = 0; i < g; ++i) x[i] = p[i] + 0.5 * m.a().get(i);
        Complex q = 0;
        double lin = 0;
        for (int i = 0; i < g; ++i) {
            for (int j = 0; j < g; ++j) q += x[i] * Complex(tau.re()(i, j), tau.im()(i, j)) * x[j];
            lin += x[i] * 0.5 * m.b().get(i);
        }
        Complex term = std::exp(Complex(0, kPi) * q + Complex(0, 2 * kPi * lin));
        if (component >= 0) term *= Complex(0, 2 * kPi * x[component]);
        sum += term;
        int i = g - 1;
        while (i >= 0 && ++p[i] > n) p[i--] = -n;
        if (i < 0) break;
    }
    return sum;
}

}  // namespace

TEST(SiegelPoint, Validation) {
    RealMatrix re = RealMatrix::Zero(2, 2), im = RealMatrix::Identity(2, 2);
    EXPECT_NO_THROW(SiegelPoint(re, im));
    RealMatrix bad = im;
    bad(0, 1) = 1e-9;
    EXPECT_THROW(SiegelPoint(re, bad), NumericalError);
    RealMatrix indefinite = im;
    indefinite(1, 1) = -0.5;
    EXPECT_THROW(SiegelPoint(re, indefinite), NumericalError);
    EXPECT_THROW(SiegelPoint(RealMatrix::Zero(1, 1), im), DimensionError);
}

TEST(SiegelPoint, SamplingRegion) {
    std::mt19937_64 rng(1);
    for (int g = 1; g <= 3; ++g) {
        for (int t = 0; t < 50; ++t) {
            const auto tau = sample_siegel(g, rng);
            EXPECT_GE(tau.lambda_min(), 1.0 - 1e-12);
            EXPECT_LE(tau.re().cwiseAbs().maxCoeff(), 0.5);
        }
    }
    const auto a = sample_siegel_points(2, 3, 42);
    const auto b = sample_siegel_points(2, 3, 42);
    for (std::size_t i = 0; i < 3; ++i) EXPECT_EQ(a[i].tau(), b[i].tau());
}

TEST(Truncation, RadiusAndGuards) {
    EXPECT_LE(truncation_radius(3, 1.0, kTol, false), 7);
    EXPECT_LE(truncation_radius(3, kMinImaginaryEigenvalue, kTol, false), 10);
    EXPECT_LE(truncation_bound(2, 1.0, truncation_radius(2, 1.0, kTol, true), true), kTol);
    EXPECT_THROW(truncation_radius(3, 1e-4, kTol, false), NumericalError);
    const auto low = SiegelPoint::scaled_identity(1, 0.2);
    EXPECT_THROW(theta_nullwert(Characteristic::zero(1), low), NumericalError);
    EXPECT_THROW(theta_nullwert(Characteristic::zero(1), SiegelPoint::scaled_identity(2, 1)), DimensionError);
}

TEST(Nullwert, OddCharacteristicsVanish) {
    const auto tau = SiegelPoint::scaled_identity(1, 1);
    EXPECT_LT(std::abs(theta_nullwert(Characteristic::parse("1|1"), tau).value), 1e-15);
    for (int g = 1; g <= 3; ++g) {
        const Sector odd(g, Parity::Odd), even(g, Parity::Even);
        for (const auto& t : sample_siegel_points(g, 4, 5)) {
            for (const auto& m : odd.elements()) EXPECT_LT(std::abs(theta_nullwert(m, t).value), 1e-14);
            for (const auto& m : even.elements()) EXPECT_GT(std::abs(theta_nullwert(m, t).value), 1e-3);
        }
    }
}

TEST(Nullwert, JacobiAtI) {
    const auto tau = SiegelPoint::scaled_identity(1, 1);
    const Complex t00 = naive_series(Characteristic::parse("0|0"), tau, 30);
    const Complex t01 = naive_series(Characteristic::parse("0|1"), tau, 30);
    const Complex t10 = naive_series(Characteristic::parse("1|0"), tau, 30);
    const double big = std::max({std::abs(t00), std::abs(t01), std::abs(t10)});
    const double bound = 3 * kTol * big * big * big * 4;
    EXPECT_LE(std::abs(std::pow(t00, 4) - std::pow(t01, 4) - std::pow(t10, 4)), bound);
    const auto a = theta_nullwert(Characteristic::parse("0|0"), tau).value;
    const auto b = theta_nullwert(Characteristic::parse("0|1"), tau).value;
    const auto c = theta_nullwert(Characteristic::parse("1|0"), tau).value;
    EXPECT_LE(std::abs(std::pow(a, 4) - std::pow(b, 4) - std::pow(c, 4)), bound);
}

TEST(Nullwert, MatchesOversummedOracle) {
    for (int g = 1; g <= 3; ++g) {
        const Sector even(g, Parity::Even);
        std::vector<SiegelPoint> points{SiegelPoint::scaled_identity(g, 2)};
        for (const auto& t : sample_siegel_points(g, 2, 9)) points.push_back(t);
        for (const auto& tau : points) {
            for (const auto& m : even.elements()) {
                const auto eval = theta_nullwert(m, tau, kTol);
                EXPECT_LE(eval.trunc_bound, kTol);
                const Complex oracle = naive_series(m, tau, eval.radius + 10);
                EXPECT_LE(std::abs(eval.value - oracle), 2 * kTol) << m.to_string();
                const auto wide = theta_nullwert_at_radius(m, tau, eval.radius + 10);
                EXPECT_LE(std::abs(eval.value - wide.value), eval.trunc_bound + 1e-15);
            }
        }
    }
}

TEST(Gradient, GenusOneOddAgainstOracle) {
    const auto tau = SiegelPoint::scaled_identity(1, 1);
    const auto m = Characteristic::parse("1|1");
    const auto grad = theta_gradient(m, tau, kTol);
    ASSERT_EQ(grad.value.size(), 1u);
    EXPECT_GT(std::abs(grad.value[0]), 0.1);
    EXPECT_LE(std::abs(grad.value[0] - naive_series(m, tau, grad.radius + 10, 0)), 2 * kTol);
    EXPECT_THROW(theta_gradient(Characteristic::parse("0|1"), tau), ParityError);
}

TEST(Gradient, ReindexingCancelsEvenSurvivesOdd) {
    // p -> -p - a maps x to -x; the z-derivative term is odd in x and the
    // exponential picks up (-1)^{a'b}, so the sum is (-1)^{a'b+1} times itself.
    const auto tau = sample_siegel_points(2, 1, 3)[0];
    for (std::uint32_t idx = 0; idx < 16; ++idx) {
        const auto m = Characteristic::from_index(2, idx);
        for (int j = 0; j < 2; ++j) {
            const Complex s = naive_series(m, tau, 9, j);
            if (parity(m) == Parity::Even) {
                EXPECT_LT(std::abs(s), 1e-12);
            } else {
                EXPECT_GT(std::abs(s), 1e-3);
                EXPECT_LE(std::abs(s - theta_gradient(m, tau).value[static_cast<std::size_t>(j)]), 2 * kTol);
            }
        }
    }
}

TEST(Gradient, CentralDifferencesInZ) {
    const double h = 1e-5;
    for (int g = 1; g <= 3; ++g) {
        const Sector odd(g, Parity::Odd);
        const auto tau = sample_siegel_points(g, 1, 13)[0];
        for (const auto& m : odd.elements()) {
            const auto grad = theta_gradient(m, tau);
            const int radius = grad.radius + 2;
            double scale = 0;
            for (const auto& c : grad.value) scale = std::max(scale, std::abs(c));
            for (int j = 0; j < g; ++j) {
                ComplexVector z = ComplexVector::Zero(g);
                z(j) = h;
                const Complex fd =
                    (detail::theta_with_z(m, tau, z, radius) - detail::theta_with_z(m, tau, -z, radius)) / (2 * h);
                EXPECT_LE(std::abs(fd - grad.value[static_cast<std::size_t>(j)]), 1e-6 * scale) << m.to_string();
            }
        }
    }
}

TEST(Sym4, Examples) {
    EXPECT_EQ(sym4({Complex(1), Complex(2)}).coefficients,
              (std::vector<Complex>{1, 2, 4, 8, 16}));
    const Complex c(0.3, -1.2);
    const auto single = sym4({c}).coefficients;
    ASSERT_EQ(single.size(), 1u);
    EXPECT_LT(std::abs(single[0] - std::pow(c, 4)), 1e-14);
    for (const auto& x : sym4(std::vector<Complex>(3, 0.0)).coefficients) EXPECT_EQ(x, Complex(0));
    EXPECT_EQ(sym4_multisets(3).size(), 15u);
    EXPECT_EQ(sym4_multisets(4).size(), 35u);
    EXPECT_EQ(sym4_multisets(2)[1], (std::array<int, 4>{0, 0, 0, 1}));
}

TEST(IntegerSymplectic, LiftsAndReduction) {
    for (int g = 1; g <= 3; ++g) {
        EXPECT_EQ(IntegerSymplectic::j_lift(g).reduce_mod2(), SymplecticF2::j(g));
        for (const auto& gen : generators(g).elements) EXPECT_EQ(IntegerSymplectic::lift(gen).reduce_mod2(), gen.element);
    }
    IntegerMatrix bad = IntegerMatrix::Identity(2, 2);
    bad(0, 0) = 2;
    EXPECT_THROW(IntegerSymplectic{bad}, AlgebraError);
    const auto x = IntegerSymplectic::j_lift(2) * IntegerSymplectic::translation(IntegerMatrix::Identity(2, 2));
    EXPECT_TRUE(is_integer_symplectic(x.matrix()));
}

TEST(ModularAction, IdentityTranslationAndJ) {
    const auto tau = sample_siegel_points(2, 1, 8)[0];
    EXPECT_LT((modular_apply(IntegerSymplectic::identity(2), tau).tau() - tau.tau()).cwiseAbs().maxCoeff(), 1e-15);
    IntegerMatrix s(2, 2);
    s << 1, 1, 1, 0;
    const auto moved = modular_apply(IntegerSymplectic::translation(s), tau);
    EXPECT_LT((moved.tau() - tau.tau() - s.cast<double>().cast<Complex>()).cwiseAbs().maxCoeff(), 1e-15);
    const auto i = SiegelPoint::scaled_identity(1, 1);
    const auto ji = modular_apply(IntegerSymplectic::j_lift(1), i);
    EXPECT_LT(std::abs(ji.tau()(0, 0) - Complex(0, 1)), 1e-15);
    EXPECT_LT(std::abs(automorphy_det(IntegerSymplectic::j_lift(1), i) - Complex(0, 1)), 1e-15);
}

TEST(Transformation, FourthPowers) {
    const auto tau = SiegelPoint::from_complex(ComplexMatrix::Constant(1, 1, Complex(0.1, 1)));
    const Sector even1(1, Parity::Even);
    for (const auto& m : even1.elements()) {
        EXPECT_EQ(check_transformation_4th(IntegerSymplectic::identity(1), m, tau), 0.0);
        EXPECT_LT(check_transformation_4th(IntegerSymplectic::j_lift(1), m, tau), 1e-9);
    }
    const Sector even2(2, Parity::Even);
    double worst = 0;
    for (const auto& t : sample_siegel_points(2, 5, 77)) {
        for (const auto& gen : generators(2).elements) {
            for (const auto& m : even2.elements()) {
                worst = std::max(worst, check_transformation_4th(IntegerSymplectic::lift(gen), m, t));
            }
        }
    }
    EXPECT_LT(worst, 1e-9);
    EXPECT_THROW(check_transformation_4th(IntegerSymplectic::j_lift(1), Characteristic::parse("1|1"), tau), ParityError);
}

TEST(Transformation, WrongSignIsDetected) {
    // theta[(0;0)]^4 at -1/tau is -tau^2 theta[(0;0)]^4(tau); a +1 multiplier leaves
    // a residual of order 2.
    const auto tau = SiegelPoint::scaled_identity(1, 1.3);
    const auto m = Characteristic::zero(1);
    const auto j = IntegerSymplectic::j_lift(1);
    const Complex lhs = std::pow(theta_nullwert(m, modular_apply(j, tau)).value, 4);
    const Complex det = automorphy_det(j, tau);
    const Complex th4 = std::pow(theta_nullwert(m, tau).value, 4);
    EXPECT_GT(std::abs(lhs - det * det * th4) / std::max(1.0, std::abs(th4) * std::norm(det)), 1.0);
    EXPECT_EQ(epsilon(j.reduce_mod2(), m), -1);
}

TEST(Dump, ComplexMatrixText) {
    ComplexMatrix m(1, 2);
    m << Complex(1, -2), Complex(0.5, 0);
    EXPECT_EQ(complex_matrix_to_text(m), "1 2\n1-2i 0.5+0i\n");
}
