#include "abcov/flat_geometry.hpp"

#include <numeric>

#include "abcov/errors.hpp"
#include "abcov/rational.hpp"

namespace abcov {

std::array<std::int64_t, 4> ramification_orders(const Presentation& p) {
    std::array<std::int64_t, 4> m{};
    for (std::size_t j = 0; j < 4; ++j) m[j] = element_order(p.column(j));
    return m;
}

std::int64_t genus(const Presentation& p, std::size_t cap) {
    const std::int64_t n = p.modulus();
    const std::int64_t d = degree(p, cap);
    std::int64_t gcd_sum = 0;
    for (std::size_t j = 0; j < 4; ++j) {
        std::int64_t g = n;
        for (std::size_t i = 0; i < p.row_count(); ++i) g = std::gcd(g, p.entry(i, j));
        gcd_sum += g;
    }
    const Rational g = Rational(1) + Rational(d) * (Rational(1) - Rational(gcd_sum, 2 * n));
    if (!g.is_integer() || g.num() < 0) {
        throw InternalError("Riemann-Hurwitz gave genus " + g.to_string() + " for " + p.to_string());
    }
    return g.num();
}

StratumReport stratum(const Presentation& p, std::size_t cap) {
    StratumReport report;
    report.degree = degree(p, cap);
    report.genus = genus(p, cap);
    report.trivial_holonomy = has_trivial_holonomy(p, cap);

    const auto m = ramification_orders(p);
    std::int64_t degree_count = 0;
    for (std::size_t j = 0; j < 4; ++j) {
        BranchPointStratum& b = report.branch_points[j];
        b.ramification = m[j];
        if (report.degree % m[j] != 0) throw InternalError("ramification order does not divide degree");
        b.point_count = report.degree / m[j];
        b.cone_angle_over_pi = m[j];
        b.quadratic_order = m[j] - 2;
        if (report.trivial_holonomy) {
            if (m[j] % 2 != 0) throw InternalError("odd cone angle on a cover with trivial holonomy");
            b.abelian_order = m[j] / 2 - 1;
        }
        if (m[j] == 1) report.marked_points += b.point_count;
        degree_count += b.point_count * b.quadratic_order;
    }
    if (degree_count != 4 * report.genus - 4) {
        throw InternalError("quadratic differential has degree " + std::to_string(degree_count) +
                            ", expected 4g-4 = " + std::to_string(4 * report.genus - 4));
    }
    return report;
}

Presentation holonomy_cover(const Presentation& p) {
    const std::int64_t n = p.modulus();
    std::vector<RawRow> rows(p.matrix().begin(), p.matrix().end());
    if (n % 2 == 0) {
        rows.push_back({n / 2, n / 2, n / 2, n / 2});
        return Presentation::validate(n, rows);
    }
    for (auto& r : rows) {
        for (auto& e : r) e *= 2;
    }
    rows.push_back({n, n, n, n});
    return Presentation::validate(2 * n, rows);
}

Presentation square_root_torus() {
    return Presentation::validate(2, {RawRow{1, 1, 1, 1}});
}

bool has_trivial_holonomy(const Presentation& p, std::size_t cap) {
    return covers(p, square_root_torus(), cap);
}

}  // namespace abcov
