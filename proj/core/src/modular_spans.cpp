#include "abcov/modular_spans.hpp"

#include <algorithm>
#include <deque>
#include <numeric>
#include <ostream>
#include <unordered_set>

#include "abcov/errors.hpp"

namespace abcov {

namespace {

std::int64_t reduce(std::int64_t x, std::int64_t n) {
    const std::int64_t r = x % n;
    return r < 0 ? r + n : r;
}

void check_modulus(std::int64_t modulus) {
    if (modulus < 1) throw InvalidModulusError("modulus must be >= 1, got " + std::to_string(modulus));
}

}  // namespace

ResidueVector::ResidueVector(std::int64_t modulus, std::vector<std::int64_t> raw)
    : modulus_(modulus), entries_(std::move(raw)) {
    check_modulus(modulus_);
    if (entries_.empty()) throw DomainError("residue vector must have at least one entry");
    for (auto& e : entries_) e = reduce(e, modulus_);
}

ResidueVector ResidueVector::zero(std::int64_t modulus, std::size_t dimension) {
    return ResidueVector(modulus, std::vector<std::int64_t>(dimension, 0));
}

bool ResidueVector::is_zero() const noexcept {
    return std::all_of(entries_.begin(), entries_.end(), [](Residue e) { return e == 0; });
}

std::size_t ResidueVector::nonzero_count() const noexcept {
    return static_cast<std::size_t>(
        std::count_if(entries_.begin(), entries_.end(), [](Residue e) { return e != 0; }));
}

ResidueVector ResidueVector::operator-() const {
    ResidueVector out = *this;
    for (auto& e : out.entries_) e = e == 0 ? 0 : modulus_ - e;
    return out;
}

ResidueVector& ResidueVector::operator+=(const ResidueVector& rhs) {
    if (rhs.modulus_ != modulus_ || rhs.entries_.size() != entries_.size()) {
        throw DomainError("adding residue vectors of different shape");
    }
    for (std::size_t i = 0; i < entries_.size(); ++i) {
        Residue s = entries_[i] + rhs.entries_[i];
        entries_[i] = s >= modulus_ ? s - modulus_ : s;
    }
    return *this;
}

ResidueVector ResidueVector::scaled(std::int64_t factor) const {
    std::vector<std::int64_t> raw(entries_.begin(), entries_.end());
    for (auto& e : raw) e = reduce(e * reduce(factor, modulus_), modulus_);
    return ResidueVector(modulus_, std::move(raw));
}

std::string ResidueVector::to_string() const {
    std::string out;
    for (std::size_t i = 0; i < entries_.size(); ++i) {
        if (i) out += ',';
        out += std::to_string(entries_[i]);
    }
    return out;
}

std::strong_ordering operator<=>(const ResidueVector& lhs, const ResidueVector& rhs) {
    if (auto c = lhs.modulus_ <=> rhs.modulus_; c != 0) return c;
    if (auto c = lhs.entries_.size() <=> rhs.entries_.size(); c != 0) return c;
    return std::lexicographical_compare_three_way(lhs.entries_.begin(), lhs.entries_.end(),
                                                  rhs.entries_.begin(), rhs.entries_.end());
}

std::ostream& operator<<(std::ostream& os, const ResidueVector& v) {
    return os << '(' << v.to_string() << ") mod " << v.modulus();
}

std::size_t ResidueVectorHash::operator()(const ResidueVector& v) const noexcept {
    std::size_t h = static_cast<std::size_t>(v.modulus());
    for (Residue e : v.entries()) h = h * 1000003u ^ static_cast<std::size_t>(e);
    return h;
}

Subgroup::Subgroup(std::int64_t modulus, std::size_t dimension, std::vector<ResidueVector> sorted_elements)
    : modulus_(modulus), dimension_(dimension), elements_(std::move(sorted_elements)) {}

bool Subgroup::contains(const ResidueVector& v) const {
    return std::binary_search(elements_.begin(), elements_.end(), v);
}

std::size_t Subgroup::index_of(const ResidueVector& v) const {
    auto it = std::lower_bound(elements_.begin(), elements_.end(), v);
    if (it == elements_.end() || *it != v) throw DomainError("element not in subgroup: " + v.to_string());
    return static_cast<std::size_t>(it - elements_.begin());
}

bool Subgroup::is_subset_of(const Subgroup& other) const {
    return std::includes(other.elements_.begin(), other.elements_.end(), elements_.begin(), elements_.end());
}

ResidueVector reduce_vector(std::span<const std::int64_t> raw, std::int64_t modulus) {
    return ResidueVector(modulus, std::vector<std::int64_t>(raw.begin(), raw.end()));
}

Subgroup span_closure(std::span<const ResidueVector> generators, std::int64_t modulus,
                      std::size_t dimension, std::size_t cap) {
    check_modulus(modulus);
    for (const auto& g : generators) {
        if (g.modulus() != modulus || g.dimension() != dimension) {
            throw DomainError("generator " + g.to_string() + " does not live in Z_" + std::to_string(modulus) +
                              "^" + std::to_string(dimension));
        }
    }

    // Breadth-first: every element is a sum of generators, so adding each
    // generator to each reached element until nothing new appears closes the
    // set. Negatives come for free since every element has finite order.
    std::unordered_set<ResidueVector, ResidueVectorHash> seen;
    std::vector<ResidueVector> elements;
    std::deque<ResidueVector> frontier;

    auto visit = [&](ResidueVector v) {
        if (seen.contains(v)) return;
        if (elements.size() >= cap) throw SizeCapError(cap, elements.size() + 1);
        seen.insert(v);
        elements.push_back(v);
        frontier.push_back(std::move(v));
    };

    visit(ResidueVector::zero(modulus, dimension));
    while (!frontier.empty()) {
        ResidueVector current = std::move(frontier.front());
        frontier.pop_front();
        for (const auto& g : generators) visit(current + g);
    }

    std::sort(elements.begin(), elements.end());
    return Subgroup(modulus, dimension, std::move(elements));
}

std::int64_t element_order(const ResidueVector& g) {
    std::int64_t d = g.modulus();
    for (Residue e : g.entries()) d = std::gcd(d, e);
    return g.modulus() / d;
}

ResidueVector scale_embed(const ResidueVector& g, std::int64_t factor) {
    if (factor < 1) throw DomainError("embedding factor must be >= 1");
    std::vector<std::int64_t> raw(g.entries().begin(), g.entries().end());
    for (auto& e : raw) e *= factor;
    return ResidueVector(g.modulus() * factor, std::move(raw));
}

Subgroup scale_embed(const Subgroup& s, std::int64_t factor) {
    std::vector<ResidueVector> out;
    out.reserve(s.size());
    // Multiplication by a positive factor is monotone on [0, N), so the
    // lexicographic order survives the embedding.
    for (const auto& e : s.elements()) out.push_back(scale_embed(e, factor));
    return Subgroup(s.modulus() * factor, s.dimension(), std::move(out));
}

}  // namespace abcov
