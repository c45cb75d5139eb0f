#include <gtest/gtest.h>

#include <cmath>

#include "abcov/hodge.hpp"
#include "abcov/hypergeom_oracle.hpp"
#include "support.hpp"

namespace abcov::oracle {
namespace {

using testing::M;

const HgdeParams kM5{4.0 / 5, 3.0 / 5, 6.0 / 5};

TEST(Gauss2F1, GeometricSeries) {
    const HgdeParams p{1, 1, 1};
    EXPECT_NEAR(std::abs(gauss_2f1(p, 0.25) - Complex(4.0 / 3)), 0.0, 1e-12);
    const Complex z{0.2, 0.3};
    EXPECT_NEAR(std::abs(gauss_2f1(p, z) - 1.0 / (1.0 - z)), 0.0, 1e-12);
}

TEST(Gauss2F1, ClosedForms) {
    // F(1,1;2;z) = -log(1-z)/z and F(1/2,1;3/2;z^2) = atanh(z)/z
    const double z = 0.4;
    EXPECT_NEAR(gauss_2f1({1, 1, 2}, z).real(), -std::log(1 - z) / z, 1e-13);
    EXPECT_NEAR(gauss_2f1({0.5, 1, 1.5}, z * z).real(), std::atanh(z) / z, 1e-13);
    // Polynomial case: a = -2 terminates.
    EXPECT_NEAR(gauss_2f1({-2, 1, 1}, 0.3).real(), (1 - 0.3) * (1 - 0.3), 1e-14);
}

TEST(Gauss2F1, Domain) {
    EXPECT_THROW(gauss_2f1({1, 1, 1}, 0.6), DomainError);
    EXPECT_THROW(HgdeParams(1, 1, 0), ParameterError);
    EXPECT_THROW(HgdeParams(1, 1, -2), ParameterError);
    EXPECT_THROW(gauss_2f1({1, 1, 1}, 0.5, SeriesOptions{1e-14, 3}), NonConvergenceError);
}

TEST(LocalBasis, M5Eigenspace) {
    const auto b = local_basis_at_0(kM5, 0.1);
    EXPECT_TRUE(std::isfinite(b.f0.real()) && std::isfinite(b.g0.real()));
    EXPECT_GT(std::abs(b.f0), 0.0);
    EXPECT_GT(std::abs(b.g0), 0.0);
    const double lambda = 1e-4;
    const auto small = local_basis_at_0(kM5, lambda);
    EXPECT_NEAR(std::abs(small.f0 / std::pow(lambda, 1 - kM5.c)), 1.0, 1e-3);
    EXPECT_THROW(local_basis_at_0({0.5, 0.5, 1}, 0.1), LogarithmicCaseError);
}

TEST(LocalBasis, ExactParametersConvert) {
    const HgdeParams p(hgde_params(ResidueVector(5, {2, 2, 2, 4})));
    EXPECT_DOUBLE_EQ(p.a, 0.8);
    EXPECT_DOUBLE_EQ(p.b, 0.6);
    EXPECT_DOUBLE_EQ(p.c, 1.2);
}

TEST(FiniteDifference, Polynomials) {
    const ComplexFn cube = [](Complex z) { return z * z * z; };
    EXPECT_NEAR(std::abs(fd_first_derivative(cube, 0.3, 1e-3) - Complex(3 * 0.09)), 0.0, 1e-10);
    EXPECT_NEAR(std::abs(fd_second_derivative(cube, 0.3, 1e-3) - Complex(6 * 0.3)), 0.0, 1e-7);
}

TEST(Residual, ClosedFormControl) {
    const HgdeParams p{1, 1, 1};
    const ComplexFn exact = [](Complex z) { return 1.0 / (1.0 - z); };
    const auto samples = default_residual_samples();
    EXPECT_LT(hgde_residual(p, exact, samples), 1e-8);
    const ComplexFn wrong = [](Complex z) { return 1.0 / (1.0 - 1.01 * z); };
    EXPECT_GT(hgde_residual(p, wrong, samples), 1e-4);
}

TEST(Residual, M5Eigenspace) {
    const auto samples = default_residual_samples();
    EXPECT_EQ(samples.size(), 20u);
    EXPECT_LT(check_hgde_residual(kM5, samples), 1e-6);
}

TEST(Wronskian, M5Eigenspace) {
    const auto samples = default_wronskian_samples();
    EXPECT_LT(check_wronskian(kM5, samples), 1e-6);
}

TEST(Wronskian, InvariantUnderRescaling) {
    const auto samples = default_wronskian_samples();
    const ComplexFn f = [](Complex z) { return local_basis_at_0(kM5, z).f0; };
    const ComplexFn f2 = [](Complex z) { return 2.0 * local_basis_at_0(kM5, z).f0; };
    const ComplexFn g = [](Complex z) { return local_basis_at_0(kM5, z).g0; };
    EXPECT_NEAR(wronskian_deviation(kM5, f, g, samples), wronskian_deviation(kM5, f2, g, samples), 1e-9);
}

TEST(Wronskian, WrongExponentIsDetected) {
    EXPECT_GE(check_wronskian(kM5, default_wronskian_samples(), {}, 0.1), 1e-2);
}

TEST(AngleAtZero, Examples) {
    EXPECT_NEAR(check_angle_at_zero(kM5), 0.2, 0.02);
    EXPECT_NEAR(check_angle_at_zero({0.5, 1.0 / 3, 0.75}), 0.25, 0.02);
    EXPECT_THROW(check_angle_at_zero({2.0 / 3, 1.0 / 3, 1}), LogarithmicCaseError);
}

TEST(VerifyEigenspace, M5Passes) {
    const auto table = eigen_table(M(5, {{1, 1, 1, 2}}));
    bool seen = false;
    for (const auto& rec : table) {
        if (rec.r != ResidueVector(5, {2, 2, 2, 4})) continue;
        seen = true;
        const auto rep = verify_eigenspace(rec);
        EXPECT_EQ(rep.overall, OverallStatus::Pass);
        for (const char* name : {"angle_kappa", "angle_mu", "angle_nu"}) {
            const auto* c = rep.find(name);
            ASSERT_NE(c, nullptr);
            EXPECT_EQ(c->status, CheckStatus::Pass);
            EXPECT_NEAR(*c->observed, 0.2, 0.02);
        }
        EXPECT_NEAR(*rep.find("area")->observed, 0.4, 0.06);
        EXPECT_LT(*rep.find("hgde_residual")->observed, 1e-6);
        EXPECT_LT(*rep.find("wronskian")->observed, 1e-6);
    }
    EXPECT_TRUE(seen);
}

TEST(VerifyEigenspace, AllLogarithmicIsInconclusive) {
    for (const auto& rec : eigen_table(M(4, {{1, 1, 1, 1}}))) {
        if (!rec.eligible) continue;
        const auto rep = verify_eigenspace(rec);
        EXPECT_EQ(rep.overall, OverallStatus::Inconclusive);
        for (const auto& c : rep.checks) EXPECT_EQ(c.status, CheckStatus::Skipped) << c.name;
        EXPECT_EQ(to_string(rep.overall), "inconclusive (logarithmic)");
    }
}

TEST(VerifyEigenspace, PartiallyLogarithmic) {
    for (const auto& rec : eigen_table(M(3, {{1, 1, 2, 2}}))) {
        if (!rec.eligible) continue;
        const auto rep = verify_eigenspace(rec);
        EXPECT_EQ(rep.overall, OverallStatus::Pass);
        EXPECT_EQ(rep.find("angle_kappa")->status, CheckStatus::Skipped);
        EXPECT_EQ(rep.find("angle_mu")->status, CheckStatus::Skipped);
        const auto* nu = rep.find("angle_nu");
        EXPECT_EQ(nu->status, CheckStatus::Pass);
        EXPECT_NEAR(*nu->observed, 1.0 / 3, 0.02);
    }
}

TEST(VerifyEigenspace, TightToleranceFails) {
    for (const auto& rec : eigen_table(M(5, {{1, 1, 1, 2}}))) {
        if (!rec.eligible) continue;
        OracleSettings s;
        s.residual_tol = 1e-14;
        const auto rep = verify_eigenspace(rec, s);
        EXPECT_EQ(rep.overall, OverallStatus::Fail);
        EXPECT_EQ(rep.find("hgde_residual")->status, CheckStatus::Fail);
    }
}

TEST(VerifyEigenspace, MeasuredAnglesMatchExactOnRandomCovers) {
    for (const auto& p : testing::random_suite(71, 40)) {
        for (const auto& rec : eigen_table(p)) {
            if (!rec.eligible) continue;
            const auto rep = verify_eigenspace(rec);
            EXPECT_NE(rep.overall, OverallStatus::Fail) << p << " r=" << rec.r;
        }
    }
}

TEST(VerifyEigenspace, Deterministic) {
    for (const auto& rec : eigen_table(M(5, {{1, 1, 1, 2}}))) {
        if (rec.eligible) EXPECT_EQ(verify_eigenspace(rec), verify_eigenspace(rec));
    }
}

}  // namespace
}  // namespace abcov::oracle
