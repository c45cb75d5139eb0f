#include "abcov/presentation.hpp"

#include <numeric>
#include <ostream>

#include "abcov/errors.hpp"

namespace abcov {

Presentation Presentation::validate(std::int64_t modulus, std::span<const RawRow> rows) {
    if (modulus < 1) throw InvalidModulusError("modulus must be >= 1, got " + std::to_string(modulus));
    if (rows.empty()) throw DomainError("presentation matrix has no rows");

    std::vector<RawRow> reduced;
    reduced.reserve(rows.size());
    for (std::size_t i = 0; i < rows.size(); ++i) {
        RawRow r{};
        std::int64_t sum = 0;
        for (std::size_t j = 0; j < 4; ++j) {
            r[j] = ((rows[i][j] % modulus) + modulus) % modulus;
            sum += r[j];
        }
        if (sum % modulus != 0) {
            throw ValidationError(i, "row " + std::to_string(i) + " sums to " + std::to_string(sum % modulus) +
                                         " mod " + std::to_string(modulus));
        }
        reduced.push_back(r);
    }
    return Presentation(modulus, std::move(reduced));
}

ResidueVector Presentation::row(std::size_t i) const {
    const RawRow& r = rows_.at(i);
    return ResidueVector(modulus_, std::vector<std::int64_t>(r.begin(), r.end()));
}

ResidueVector Presentation::column(std::size_t j) const {
    std::vector<std::int64_t> c;
    c.reserve(rows_.size());
    for (const auto& r : rows_) c.push_back(r.at(j));
    return ResidueVector(modulus_, std::move(c));
}

std::vector<ResidueVector> Presentation::rows() const {
    std::vector<ResidueVector> out;
    for (std::size_t i = 0; i < rows_.size(); ++i) out.push_back(row(i));
    return out;
}

std::array<ResidueVector, 4> Presentation::columns() const {
    return {column(0), column(1), column(2), column(3)};
}

std::string Presentation::to_string() const {
    std::string out = "M_" + std::to_string(modulus_) + "([";
    for (std::size_t i = 0; i < rows_.size(); ++i) {
        if (i) out += ',';
        out += '[';
        for (std::size_t j = 0; j < 4; ++j) {
            if (j) out += ',';
            out += std::to_string(rows_[i][j]);
        }
        out += ']';
    }
    return out + "])";
}

std::ostream& operator<<(std::ostream& os, const Presentation& p) {
    return os << p.to_string();
}

Subgroup row_span(const Presentation& p, std::size_t cap) {
    const auto gens = p.rows();
    return span_closure(gens, p.modulus(), 4, cap);
}

Subgroup column_span(const Presentation& p, std::size_t cap) {
    const auto gens = p.columns();
    return span_closure(gens, p.modulus(), p.row_count(), cap);
}

std::int64_t degree(const Presentation& p, std::size_t cap) {
    const std::size_t by_rows = row_span(p, cap).size();
    const std::size_t by_columns = column_span(p, cap).size();
    if (by_rows != by_columns) {
        throw InternalError("row span (" + std::to_string(by_rows) + ") and column span (" +
                            std::to_string(by_columns) + ") sizes differ for " + p.to_string());
    }
    return static_cast<std::int64_t>(by_columns);
}

bool covers(const Presentation& p, const Presentation& q, std::size_t cap) {
    // Containment at any common multiple M = tL is equivalent to containment
    // at L because x -> t*x is injective, so L = lcm suffices.
    const std::int64_t l = std::lcm(p.modulus(), q.modulus());
    const Subgroup p_span = scale_embed(row_span(p, cap), l / p.modulus());
    // A subgroup lies inside another iff its generators do.
    for (const auto& r : q.rows()) {
        if (!p_span.contains(scale_embed(r, l / q.modulus()))) return false;
    }
    return true;
}

bool isomorphic(const Presentation& p, const Presentation& q, std::size_t cap) {
    return covers(p, q, cap) && covers(q, p, cap);
}

Presentation scale(const Presentation& p, std::int64_t factor) {
    if (factor < 1) throw DomainError("scale factor must be >= 1");
    std::vector<RawRow> rows(p.matrix().begin(), p.matrix().end());
    for (auto& r : rows) {
        for (auto& e : r) e *= factor;
    }
    return Presentation::validate(p.modulus() * factor, rows);
}

}  // namespace abcov
