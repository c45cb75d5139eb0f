#include "abcov/hodge.hpp"

#include <algorithm>
#include <functional>

#include "abcov/errors.hpp"
#include "abcov/flat_geometry.hpp"

namespace abcov {

namespace {

std::int64_t as_integer(const Rational& x) {
    if (!x.is_integer()) throw InternalError("expected an integer, got " + x.to_string());
    return x.num();
}

void require_eligible(const ResidueVector& r) {
    if (!is_eligible(r)) {
        throw EligibilityError("eigenspace " + r.to_string() + " does not have t(r) = t(-r) = 2");
    }
}

}  // namespace

TValues t_values(const ResidueVector& r) {
    if (r.dimension() != 4) throw DomainError("t-values need a vector in Z_N^4");
    TValues t;
    for (std::size_t j = 0; j < 4; ++j) {
        t.components[j] = Rational(r[j], r.modulus());
        t.total += t.components[j];
    }
    return t;
}

EigenDims eigen_dims(const ResidueVector& r) {
    if (r.is_zero()) throw DomainError("eigenspace dimensions are defined for nonzero r only");
    const std::int64_t t_plus = as_integer(t_values(r).total);
    const std::int64_t t_minus = as_integer(t_values(-r).total);
    return {t_minus - 1, t_plus + t_minus - 2};
}

bool is_eligible(const ResidueVector& r) {
    return r.dimension() == 4 && r.nonzero_count() == 4 && t_values(r).total == Rational(2);
}

HgdeParamsExact hgde_params_from_t(const std::array<Rational, 4>& t) {
    return {t[0] + t[1] + t[2] - 1, t[2], t[0] + t[2]};
}

HgdeParamsExact hgde_params(const ResidueVector& r) {
    require_eligible(r);
    return hgde_params_from_t(t_values(-r).components);
}

TriangleAngles triangle_angles(const ResidueVector& r) {
    require_eligible(r);
    const auto t = t_values(-r).components;
    TriangleAngles out;
    out.kappa = abs(Rational(1) - t[0] - t[2]);
    out.mu = abs(Rational(1) - t[1] - t[2]);
    out.nu = abs(Rational(1) - t[0] - t[1]);
    out.area_over_pi = Rational(1) - out.kappa - out.mu - out.nu;
    if (out.area_over_pi <= Rational(0)) {
        throw InternalError("degenerate triangle for eligible r = " + r.to_string());
    }
    return out;
}

Rational exponent(const ResidueVector& r) {
    require_eligible(r);
    const auto t = t_values(-r).components;
    Rational smallest(1);
    for (const auto& tj : t) smallest = min(smallest, min(tj, Rational(1) - tj));
    const Rational ell = Rational(2) * smallest;
    if (ell != triangle_angles(r).area_over_pi) {
        throw InternalError("exponent " + ell.to_string() + " disagrees with triangle area for r = " + r.to_string());
    }
    return ell;
}

std::vector<EigenRecord> eigen_table(const Presentation& p, std::size_t cap) {
    const Subgroup span = row_span(p, cap);
    std::vector<EigenRecord> table;
    table.reserve(span.size());
    for (const auto& r : span.elements()) {
        if (r.is_zero()) continue;
        const TValues plus = t_values(r);
        const TValues minus = t_values(-r);
        const EigenDims dims = eigen_dims(r);
        EigenRecord rec{.r = r,
                        .t_of_r = plus.total,
                        .t_of_minus_r = minus.total,
                        .t_components_minus_r = minus.components,
                        .dim_h10 = dims.h10,
                        .dim_h1 = dims.h1,
                        .eligible = is_eligible(r),
                        .hgde = std::nullopt,
                        .angles = std::nullopt,
                        .exponent = std::nullopt};
        if (rec.eligible) {
            rec.hgde = hgde_params(r);
            rec.angles = triangle_angles(r);
            rec.exponent = exponent(r);
        }
        table.push_back(std::move(rec));
    }
    return table;
}

Spectrum spectrum(const Presentation& p, std::size_t cap) {
    const auto table = eigen_table(p, cap);
    const Subgroup span = row_span(p, cap);

    Spectrum out;
    out.genus = genus(p, cap);
    std::vector<bool> done(span.size(), false);
    for (const auto& rec : table) {
        const std::size_t i = span.index_of(rec.r);
        if (done[i]) continue;
        const ResidueVector neg = -rec.r;
        const std::size_t j = span.index_of(neg);
        done[i] = done[j] = true;

        // dim H^1(-r) = dim H^1(r): both equal #nonzero(r) - 2.
        const std::int64_t block = (i == j) ? rec.dim_h1 : 2 * rec.dim_h1;
        if (block % 2 != 0) throw InternalError("odd-dimensional symplectic block at r = " + rec.r.to_string());
        const Rational value = rec.eligible ? *rec.exponent : Rational(0);
        out.entries.insert(out.entries.end(), static_cast<std::size_t>(block / 2), value);
    }
    std::sort(out.entries.begin(), out.entries.end(), std::greater<>());

    if (static_cast<std::int64_t>(out.entries.size()) != out.genus) {
        throw InternalError("spectrum has " + std::to_string(out.entries.size()) + " entries but genus is " +
                            std::to_string(out.genus) + " for " + p.to_string());
    }
    return out;
}

}  // namespace abcov
