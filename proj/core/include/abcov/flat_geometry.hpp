#pragma once

#include <array>
#include <cstdint>
#include <optional>

#include "abcov/presentation.hpp"

namespace abcov {

/// What lies over one branch point z_j.
struct BranchPointStratum {
    std::int64_t ramification = 1;      ///< m_j
    std::int64_t point_count = 0;       ///< d / m_j
    std::int64_t cone_angle_over_pi = 1;  ///< cone angle is m_j * pi
    std::int64_t quadratic_order = -1;  ///< m_j - 2; -1 is a simple pole
    /// m_j/2 - 1, only when the quadratic differential is a global square.
    std::optional<std::int64_t> abelian_order;

    friend bool operator==(const BranchPointStratum&, const BranchPointStratum&) = default;
};

struct StratumReport {
    std::int64_t degree = 1;
    std::int64_t genus = 0;
    std::array<BranchPointStratum, 4> branch_points;
    /// Points of cone angle pi (simple poles of q); these are marked.
    std::int64_t marked_points = 0;
    bool trivial_holonomy = false;

    friend bool operator==(const StratumReport&, const StratumReport&) = default;
};

/// m_j = N / gcd(N, a_1j, ..., a_mj), the order of column j.
std::array<std::int64_t, 4> ramification_orders(const Presentation& p);

/// Riemann-Hurwitz: g = 1 + d(1 - (1/2N) sum_j gcd(N, a_1j, ..., a_mj)),
/// evaluated exactly and checked to be a nonnegative integer.
std::int64_t genus(const Presentation& p, std::size_t cap = kDefaultSpanCap);

StratumReport stratum(const Presentation& p, std::size_t cap = kDefaultSpanCap);

/// The smallest cover on which the lifted quadratic differential is a square:
/// for even N append a row of N/2; for odd N pass to (2N, 2A) and append a
/// row of N.
Presentation holonomy_cover(const Presentation& p);

/// The base torus M_2([[1,1,1,1]]).
Presentation square_root_torus();

/// True iff q is the square of an abelian differential, i.e. the cover
/// factors through M_2([[1,1,1,1]]).
///
/// Note: a literal reading of "non-trivial holonomy iff N even and
/// (N/2,N/2,N/2,N/2) is in the row span" has the polarity reversed; that
/// membership condition characterizes *trivial* holonomy.
bool has_trivial_holonomy(const Presentation& p, std::size_t cap = kDefaultSpanCap);

}  // namespace abcov
