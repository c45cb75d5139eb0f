#pragma once

// Shared fixtures and brute-force reference computations for the tests.
// Nothing here calls the closure or genus code under test.

#include <algorithm>
#include <cstdint>
#include <numeric>
#include <random>
#include <set>
#include <vector>

#include "abcov/presentation.hpp"

namespace abcov::testing {

inline Presentation M(std::int64_t n, std::initializer_list<RawRow> rows) {
    return Presentation::validate(n, rows);
}

/// All sums c_1 g_1 + ... + c_k g_k with 0 <= c_i < N, reduced mod N.
inline std::set<std::vector<std::int64_t>> enumerate_span(const std::vector<std::vector<std::int64_t>>& gens,
                                                          std::int64_t n, std::size_t dim) {
    std::set<std::vector<std::int64_t>> out;
    std::vector<std::int64_t> coeff(gens.size(), 0);
    while (true) {
        std::vector<std::int64_t> v(dim, 0);
        for (std::size_t i = 0; i < gens.size(); ++i) {
            for (std::size_t j = 0; j < dim; ++j) v[j] = (v[j] + coeff[i] * gens[i][j]) % n;
        }
        for (auto& x : v) x = ((x % n) + n) % n;
        out.insert(v);
        std::size_t k = 0;
        while (k < coeff.size() && ++coeff[k] == n) coeff[k++] = 0;
        if (k == coeff.size()) break;
    }
    return out;
}

inline std::set<std::vector<std::int64_t>> brute_row_span(const Presentation& p) {
    std::vector<std::vector<std::int64_t>> gens;
    for (const auto& row : p.matrix()) gens.emplace_back(row.begin(), row.end());
    return enumerate_span(gens, p.modulus(), 4);
}

inline std::set<std::vector<std::int64_t>> brute_column_span(const Presentation& p) {
    std::vector<std::vector<std::int64_t>> gens(4, std::vector<std::int64_t>(p.row_count()));
    for (std::size_t i = 0; i < p.row_count(); ++i) {
        for (std::size_t j = 0; j < 4; ++j) gens[j][i] = p.entry(i, j);
    }
    return enumerate_span(gens, p.modulus(), p.row_count());
}

/// Riemann-Hurwitz over the sphere: 2g - 2 = -2d + sum_j (d - d/m_j),
/// with m_j read off as the order of column j in the brute-force deck group.
inline std::int64_t brute_genus(const Presentation& p) {
    const auto deck = brute_column_span(p);
    const auto d = static_cast<std::int64_t>(deck.size());
    std::int64_t twice = -2 * d;
    for (std::size_t j = 0; j < 4; ++j) {
        std::int64_t order = 1;
        std::vector<std::int64_t> acc(p.row_count());
        for (std::size_t i = 0; i < p.row_count(); ++i) acc[i] = p.entry(i, j);
        auto is_zero = [](const std::vector<std::int64_t>& v) {
            return std::all_of(v.begin(), v.end(), [](std::int64_t x) { return x == 0; });
        };
        while (!is_zero(acc)) {
            for (std::size_t i = 0; i < p.row_count(); ++i) acc[i] = (acc[i] + p.entry(i, j)) % p.modulus();
            ++order;
        }
        twice += d - d / order;
    }
    return twice / 2 + 1;
}

/// Random valid presentation with 1 <= N <= max_n and 1 <= m <= max_rows.
inline Presentation random_presentation(std::mt19937_64& rng, std::int64_t max_n = 10, std::size_t max_rows = 3) {
    std::uniform_int_distribution<std::int64_t> pick_n(1, max_n);
    std::uniform_int_distribution<std::size_t> pick_m(1, max_rows);
    const std::int64_t n = pick_n(rng);
    const std::size_t m = pick_m(rng);
    std::uniform_int_distribution<std::int64_t> entry(0, n - 1);
    std::vector<RawRow> rows(m);
    for (auto& row : rows) {
        row = {entry(rng), entry(rng), entry(rng), 0};
        row[3] = ((-(row[0] + row[1] + row[2])) % n + n) % n;
    }
    return Presentation::validate(n, rows);
}

inline std::vector<Presentation> random_suite(std::uint64_t seed, std::size_t count, std::int64_t max_n = 10,
                                              std::size_t max_rows = 3) {
    std::mt19937_64 rng(seed);
    std::vector<Presentation> out;
    out.reserve(count);
    for (std::size_t i = 0; i < count; ++i) out.push_back(random_presentation(rng, max_n, max_rows));
    return out;
}

inline std::vector<std::int64_t> as_vector(const ResidueVector& v) {
    return {v.entries().begin(), v.entries().end()};
}

}  // namespace abcov::testing
