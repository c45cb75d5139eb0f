#pragma once

#include <compare>
#include <cstddef>
#include <cstdint>
#include <initializer_list>
#include <iosfwd>
#include <span>
#include <string>
#include <vector>

namespace abcov {

using Residue = std::int64_t;

/// Default bound on the number of elements a subgroup enumeration may reach.
inline constexpr std::size_t kDefaultSpanCap = 1'000'000;

/// A vector in Z_N^k with every entry reduced to [0, N).
class ResidueVector {
public:
    /// Reduces `raw` modulo `modulus`. Throws InvalidModulusError when
    /// modulus < 1 and DomainError when `raw` is empty.
    ResidueVector(std::int64_t modulus, std::vector<std::int64_t> raw);
    ResidueVector(std::int64_t modulus, std::initializer_list<std::int64_t> raw)
        : ResidueVector(modulus, std::vector<std::int64_t>(raw)) {}

    static ResidueVector zero(std::int64_t modulus, std::size_t dimension);

    std::int64_t modulus() const noexcept { return modulus_; }
    std::size_t dimension() const noexcept { return entries_.size(); }
    std::span<const Residue> entries() const noexcept { return entries_; }
    Residue operator[](std::size_t i) const { return entries_[i]; }

    bool is_zero() const noexcept;
    std::size_t nonzero_count() const noexcept;

    ResidueVector operator-() const;
    ResidueVector& operator+=(const ResidueVector& rhs);
    friend ResidueVector operator+(ResidueVector lhs, const ResidueVector& rhs) { return lhs += rhs; }
    friend ResidueVector operator-(ResidueVector lhs, const ResidueVector& rhs) { return lhs += -rhs; }
    ResidueVector scaled(std::int64_t factor) const;

    /// Comma-joined residues, e.g. "1,0,3".
    std::string to_string() const;

    friend bool operator==(const ResidueVector&, const ResidueVector&) = default;
    /// Lexicographic on entries; vectors of different modulus or dimension
    /// compare by (modulus, dimension) first.
    friend std::strong_ordering operator<=>(const ResidueVector& lhs, const ResidueVector& rhs);

private:
    std::int64_t modulus_;
    std::vector<Residue> entries_;
};

std::ostream& operator<<(std::ostream& os, const ResidueVector& v);

struct ResidueVectorHash {
    std::size_t operator()(const ResidueVector& v) const noexcept;
};

/// A finite subgroup of Z_N^k, stored as its strictly sorted element list.
class Subgroup {
public:
    /// Trusted constructor: `sorted_elements` must already be a closed,
    /// strictly sorted set containing zero.
    Subgroup(std::int64_t modulus, std::size_t dimension, std::vector<ResidueVector> sorted_elements);

    std::int64_t modulus() const noexcept { return modulus_; }
    std::size_t dimension() const noexcept { return dimension_; }
    std::size_t size() const noexcept { return elements_.size(); }
    std::span<const ResidueVector> elements() const noexcept { return elements_; }
    const ResidueVector& operator[](std::size_t i) const { return elements_[i]; }

    bool contains(const ResidueVector& v) const;
    /// Position of `v` in the canonical order; throws DomainError if absent.
    std::size_t index_of(const ResidueVector& v) const;
    bool is_subset_of(const Subgroup& other) const;

    friend bool operator==(const Subgroup&, const Subgroup&) = default;

private:
    std::int64_t modulus_;
    std::size_t dimension_;
    std::vector<ResidueVector> elements_;
};

/// Reduces each entry of `raw` to its representative in [0, N).
ResidueVector reduce_vector(std::span<const std::int64_t> raw, std::int64_t modulus);

/// Smallest addition-closed subset of Z_N^k containing zero and `generators`,
/// in lexicographic order. Throws SizeCapError once more than `cap` elements
/// have been found.
Subgroup span_closure(std::span<const ResidueVector> generators, std::int64_t modulus,
                      std::size_t dimension, std::size_t cap = kDefaultSpanCap);

/// Least n >= 1 with n*g = 0, i.e. N / gcd(N, g_1, ..., g_k).
std::int64_t element_order(const ResidueVector& g);

/// The injection Z_N^k -> Z_{kN}^k, x -> factor*x.
ResidueVector scale_embed(const ResidueVector& g, std::int64_t factor);
Subgroup scale_embed(const Subgroup& s, std::int64_t factor);

}  // namespace abcov
