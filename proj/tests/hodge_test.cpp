#include <gtest/gtest.h>

#include "abcov/errors.hpp"
#include "abcov/flat_geometry.hpp"
#include "abcov/hodge.hpp"
#include "support.hpp"

namespace abcov {
namespace {

using testing::M;

ResidueVector rv(std::int64_t n, std::vector<std::int64_t> v) { return ResidueVector(n, std::move(v)); }
Rational q(std::int64_t a, std::int64_t b = 1) { return Rational(a, b); }
std::vector<Rational> entries(const Spectrum& s) { return s.entries; }

TEST(TValues, Examples) {
    const auto a = t_values(rv(4, {2, 2, 2, 2}));
    for (const auto& t : a.components) EXPECT_EQ(t, q(1, 2));
    EXPECT_EQ(a.total, q(2));
    EXPECT_EQ(t_values(rv(3, {0, 0, 0, 0})).total, q(0));
    const auto c = t_values(rv(3, {1, 1, 2, 2}));
    EXPECT_EQ(c.components, (std::array<Rational, 4>{q(1, 3), q(1, 3), q(2, 3), q(2, 3)}));
    EXPECT_EQ(c.total, q(2));
}

TEST(EigenDims, Examples) {
    EXPECT_EQ(eigen_dims(rv(4, {1, 1, 1, 1})), (EigenDims{2, 2}));
    EXPECT_EQ(eigen_dims(rv(4, {2, 2, 2, 2})), (EigenDims{1, 2}));
    EXPECT_EQ(eigen_dims(rv(2, {1, 1, 0, 0})), (EigenDims{0, 0}));
    EXPECT_EQ(eigen_dims(rv(4, {3, 3, 3, 3})), (EigenDims{0, 2}));
    EXPECT_THROW(eigen_dims(rv(4, {0, 0, 0, 0})), DomainError);
}

TEST(HgdeParams, Examples) {
    EXPECT_EQ(hgde_params(rv(4, {2, 2, 2, 2})), (HgdeParamsExact{q(1, 2), q(1, 2), q(1)}));
    EXPECT_EQ(hgde_params(rv(5, {2, 2, 2, 4})), (HgdeParamsExact{q(4, 5), q(3, 5), q(6, 5)}));
    EXPECT_EQ(hgde_params(rv(3, {1, 1, 2, 2})), (HgdeParamsExact{q(2, 3), q(1, 3), q(1)}));
    EXPECT_THROW(hgde_params(rv(4, {1, 1, 1, 1})), EligibilityError);
}

TEST(TriangleAngles, Examples) {
    EXPECT_EQ(triangle_angles(rv(4, {2, 2, 2, 2})), (TriangleAngles{q(0), q(0), q(0), q(1)}));
    EXPECT_EQ(triangle_angles(rv(3, {1, 1, 2, 2})), (TriangleAngles{q(0), q(0), q(1, 3), q(2, 3)}));
    EXPECT_EQ(triangle_angles(rv(5, {2, 2, 2, 4})), (TriangleAngles{q(1, 5), q(1, 5), q(1, 5), q(2, 5)}));
}

TEST(Exponent, Examples) {
    EXPECT_EQ(exponent(rv(4, {2, 2, 2, 2})), q(1));
    EXPECT_EQ(exponent(rv(3, {1, 1, 2, 2})), q(2, 3));
    EXPECT_EQ(exponent(rv(5, {2, 2, 2, 4})), q(2, 5));
}

TEST(Eligibility, RequiresFourNonzeroEntriesAndTotalTwo) {
    EXPECT_TRUE(is_eligible(rv(4, {2, 2, 2, 2})));
    EXPECT_FALSE(is_eligible(rv(4, {1, 1, 1, 1})));
    EXPECT_FALSE(is_eligible(rv(2, {1, 1, 0, 0})));
    EXPECT_FALSE(is_eligible(rv(6, {3, 3, 0, 0})));
}

TEST(EigenTable, Examples) {
    const auto t = eigen_table(M(4, {{1, 1, 1, 1}}));
    ASSERT_EQ(t.size(), 3u);
    EXPECT_EQ(t[0].r, rv(4, {1, 1, 1, 1}));
    EXPECT_EQ(t[0].dim_h10, 2);
    EXPECT_EQ(t[0].dim_h1, 2);
    EXPECT_FALSE(t[0].eligible);
    EXPECT_FALSE(t[0].exponent.has_value());
    EXPECT_TRUE(t[1].eligible);
    EXPECT_EQ(t[1].exponent, q(1));
    EXPECT_EQ(t[2].dim_h10, 0);
    EXPECT_EQ(t[2].dim_h1, 2);

    EXPECT_TRUE(eigen_table(M(2, {{0, 0, 0, 0}})).empty());

    const auto u = eigen_table(M(2, {{1, 1, 0, 0}, {0, 1, 1, 0}}));
    ASSERT_EQ(u.size(), 3u);
    for (const auto& rec : u) EXPECT_EQ(rec.dim_h1, 0);
}

TEST(Spectrum, Examples) {
    EXPECT_EQ(entries(spectrum(M(4, {{1, 1, 1, 1}}))), (std::vector<Rational>{q(1), q(0), q(0)}));
    EXPECT_EQ(entries(spectrum(M(2, {{1, 1, 1, 1}}))), (std::vector<Rational>{q(1)}));
    EXPECT_EQ(entries(spectrum(M(3, {{1, 1, 2, 2}}))), (std::vector<Rational>{q(2, 3), q(2, 3)}));
    EXPECT_EQ(entries(spectrum(M(5, {{1, 1, 1, 2}}))), (std::vector<Rational>{q(2, 5), q(2, 5), q(0), q(0)}));
    EXPECT_TRUE(spectrum(M(2, {{1, 1, 0, 0}, {0, 1, 1, 0}})).entries.empty());
    EXPECT_TRUE(spectrum(M(1, {{0, 0, 0, 0}})).entries.empty());
}

TEST(Hodge, StructuralProperties) {
    for (const auto& p : testing::random_suite(51, 200)) {
        const auto g = genus(p);
        const auto table = eigen_table(p);
        std::int64_t total_h1 = 0;
        for (const auto& rec : table) {
            total_h1 += rec.dim_h1;
            EXPECT_EQ(rec.dim_h1, static_cast<std::int64_t>(rec.r.nonzero_count()) - 2) << p << " r=" << rec.r;
            if (!rec.eligible) continue;
            const Rational ell = *rec.exponent;
            EXPECT_EQ(ell, q(1) - rec.angles->kappa - rec.angles->mu - rec.angles->nu);
            EXPECT_EQ(ell, exponent(-rec.r));
            EXPECT_GT(ell, q(0));
            EXPECT_LE(ell, q(1));
            bool all_half = true;
            for (const auto& t : rec.t_components_minus_r) all_half = all_half && t == q(1, 2);
            EXPECT_EQ(ell == q(1), rec.r == -rec.r && all_half);
        }
        EXPECT_EQ(total_h1, 2 * g) << p;
        const auto s = spectrum(p);
        EXPECT_EQ(static_cast<std::int64_t>(s.entries.size()), g) << p;
        EXPECT_EQ(s.genus, g);
        EXPECT_TRUE(std::is_sorted(s.entries.rbegin(), s.entries.rend()));
        for (std::int64_t k = 2; k <= 3; ++k) EXPECT_EQ(spectrum(scale(p, k)), s) << p;
    }
}

TEST(Hodge, IsomorphicPresentationsShareInvariants) {
    const auto p = M(4, {{1, 1, 1, 1}});
    const auto r = M(4, {{3, 3, 3, 3}, {2, 2, 2, 2}});
    ASSERT_TRUE(isomorphic(p, r));
    EXPECT_EQ(degree(p), degree(r));
    EXPECT_EQ(genus(p), genus(r));
    EXPECT_EQ(spectrum(p), spectrum(r));
}

}  // namespace
}  // namespace abcov
