#pragma once

#include <array>
#include <cstddef>
#include <cstdint>
#include <initializer_list>
#include <iosfwd>
#include <span>
#include <string>
#include <vector>

#include "abcov/modular_spans.hpp"

namespace abcov {

using RawRow = std::array<std::int64_t, 4>;

/// A pair (N, A): modulus N and an m x 4 matrix over Z_N whose rows sum to
/// zero. Names the abelian cover of the sphere branched over z_1..z_4 with
/// function field C(z)[w_1..w_m], w_i^N = prod_j (z - z_j)^{a_ij}.
///
/// Presentations are never canonicalized; two different presentations can
/// describe the same cover (see isomorphic()).
class Presentation {
public:
    /// Reduces entries mod N and checks every row sum. Throws
    /// InvalidModulusError (N < 1), DomainError (no rows) or ValidationError
    /// naming the first bad row.
    static Presentation validate(std::int64_t modulus, std::span<const RawRow> rows);
    static Presentation validate(std::int64_t modulus, std::initializer_list<RawRow> rows) {
        return validate(modulus, std::span<const RawRow>(rows.begin(), rows.size()));
    }

    std::int64_t modulus() const noexcept { return modulus_; }
    std::size_t row_count() const noexcept { return rows_.size(); }
    std::span<const RawRow> matrix() const noexcept { return rows_; }
    std::int64_t entry(std::size_t i, std::size_t j) const { return rows_.at(i).at(j); }

    /// Row i as an element of Z_N^4.
    ResidueVector row(std::size_t i) const;
    /// Column j (0-based, branch point z_{j+1}) as an element of Z_N^m.
    ResidueVector column(std::size_t j) const;
    std::vector<ResidueVector> rows() const;
    std::array<ResidueVector, 4> columns() const;

    std::string to_string() const;

    friend bool operator==(const Presentation&, const Presentation&) = default;

private:
    Presentation(std::int64_t modulus, std::vector<RawRow> rows) : modulus_(modulus), rows_(std::move(rows)) {}

    std::int64_t modulus_;
    std::vector<RawRow> rows_;
};

std::ostream& operator<<(std::ostream& os, const Presentation& p);

/// Span of the rows in Z_N^4. Its nonzero elements index the eigenspaces.
Subgroup row_span(const Presentation& p, std::size_t cap = kDefaultSpanCap);

/// Span of the four columns in Z_N^m, isomorphic to the deck group.
Subgroup column_span(const Presentation& p, std::size_t cap = kDefaultSpanCap);

/// Degree of the cover. Computed from both spans, which must agree.
std::int64_t degree(const Presentation& p, std::size_t cap = kDefaultSpanCap);

/// True iff the cover named by `p` covers the one named by `q` compatibly
/// with the maps to the sphere: at L = lcm(N_p, N_q) the embedded row span
/// of q lies inside the embedded row span of p.
bool covers(const Presentation& p, const Presentation& q, std::size_t cap = kDefaultSpanCap);

bool isomorphic(const Presentation& p, const Presentation& q, std::size_t cap = kDefaultSpanCap);

/// The presentation (kN, kA).
Presentation scale(const Presentation& p, std::int64_t factor);

}  // namespace abcov
