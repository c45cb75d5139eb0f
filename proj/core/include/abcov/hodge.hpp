#pragma once

#include <array>
#include <cstdint>
#include <optional>
#include <vector>

#include "abcov/modular_spans.hpp"
#include "abcov/presentation.hpp"
#include "abcov/rational.hpp"

namespace abcov {

/// Fractional parts t_j(r) = r_j / N and their sum t(r).
struct TValues {
    std::array<Rational, 4> components;
    Rational total;

    friend bool operator==(const TValues&, const TValues&) = default;
};

/// Parameters (a, b, c) of the hypergeometric equation
/// lambda(lambda-1) y'' + [(a+b+1) lambda - c] y' + ab y = 0.
struct HgdeParamsExact {
    Rational a;
    Rational b;
    Rational c;

    friend bool operator==(const HgdeParamsExact&, const HgdeParamsExact&) = default;
};

/// Angles (in units of pi) of the Schwarz triangle at tau(0), tau(1),
/// tau(infinity), and its hyperbolic area divided by pi.
struct TriangleAngles {
    Rational kappa;
    Rational mu;
    Rational nu;
    Rational area_over_pi;

    friend bool operator==(const TriangleAngles&, const TriangleAngles&) = default;
};

struct EigenDims {
    std::int64_t h10 = 0;  ///< dim H^{1,0}(r) = t(-r) - 1
    std::int64_t h1 = 0;   ///< dim H^1(r) = t(r) + t(-r) - 2

    friend bool operator==(const EigenDims&, const EigenDims&) = default;
};

/// Everything known about the eigenspace H^1(r) for one nonzero r in the row
/// span. The analytic fields are set exactly when `eligible`.
struct EigenRecord {
    ResidueVector r;
    Rational t_of_r;
    Rational t_of_minus_r;
    std::array<Rational, 4> t_components_minus_r;
    std::int64_t dim_h10 = 0;
    std::int64_t dim_h1 = 0;
    bool eligible = false;
    std::optional<HgdeParamsExact> hgde;
    std::optional<TriangleAngles> angles;
    std::optional<Rational> exponent;

    friend bool operator==(const EigenRecord&, const EigenRecord&) = default;
};

/// Nonnegative Lyapunov spectrum with multiplicity, sorted descending.
struct Spectrum {
    std::vector<Rational> entries;
    std::int64_t genus = 0;

    friend bool operator==(const Spectrum&, const Spectrum&) = default;
};

TValues t_values(const ResidueVector& r);

/// Both dimensions for nonzero r; throws DomainError for r = 0.
EigenDims eigen_dims(const ResidueVector& r);

/// t(r) = t(-r) = 2, equivalently r has four nonzero entries and t(r) = 2.
bool is_eligible(const ResidueVector& r);

/// a = t_1+t_2+t_3-1, b = t_3, c = t_1+t_3 with t_i = t_i(-r).
/// Throws EligibilityError unless is_eligible(r).
HgdeParamsExact hgde_params(const ResidueVector& r);

/// The same formula applied to an arbitrary ordering of fractional parts.
HgdeParamsExact hgde_params_from_t(const std::array<Rational, 4>& t);

/// kappa = |1-t_1-t_3|, mu = |1-t_2-t_3|, nu = |1-t_1-t_2| with t_i = t_i(-r),
/// and area/pi = 1 - kappa - mu - nu.
TriangleAngles triangle_angles(const ResidueVector& r);

/// 2 min_j min(t_j(-r), 1 - t_j(-r)); checked against the triangle area.
Rational exponent(const ResidueVector& r);

/// One record per nonzero element of the row span, in lexicographic order.
std::vector<EigenRecord> eigen_table(const Presentation& p, std::size_t cap = kDefaultSpanCap);

/// Nonnegative Lyapunov spectrum of the Hodge bundle.
///
/// Each pair {r, -r} of nonzero row-span elements spans a symplectic block of
/// dimension D (= dim H^1(r) + dim H^1(-r), or dim H^1(r) when r = -r) and
/// contributes D/2 copies of its exponent: the triangle area over pi when r
/// is eligible, zero otherwise. The total count is checked to equal the
/// genus.
Spectrum spectrum(const Presentation& p, std::size_t cap = kDefaultSpanCap);

}  // namespace abcov
