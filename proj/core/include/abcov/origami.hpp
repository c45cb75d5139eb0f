#pragma once

#include <array>
#include <cstddef>
#include <cstdint>
#include <string>
#include <string_view>
#include <vector>

#include "abcov/modular_spans.hpp"
#include "abcov/presentation.hpp"

namespace abcov {

enum class Color { White, Black };
enum class Edge { T, R, B, L };
/// Square corners. On every square the corner between edges B and L lies
/// over z_1, B/R over z_2, T/R over z_3 and T/L over z_4.
enum class Corner { BL, BR, TR, TL };

inline constexpr std::array<Edge, 4> kEdges{Edge::T, Edge::R, Edge::B, Edge::L};
inline constexpr std::array<Corner, 4> kCorners{Corner::BL, Corner::BR, Corner::TR, Corner::TL};

char edge_letter(Edge e);
Edge edge_from_letter(char c);
std::string_view corner_name(Corner c);
Corner corner_from_name(std::string_view name);
/// 1-based branch point under a corner.
int branch_point_of(Corner c);

struct Square {
    ResidueVector label;
    Color color;

    friend bool operator==(const Square&, const Square&) = default;
};

/// White square `white` shares edge `edge` with black square `black`.
/// Squares are indexed 0..d-1 (white, deck order) and d..2d-1 (black).
struct Gluing {
    std::size_t white;
    std::size_t black;
    Edge edge;

    friend bool operator==(const Gluing&, const Gluing&) = default;
    friend auto operator<=>(const Gluing&, const Gluing&) = default;
};

struct CornerRef {
    std::size_t square;
    Corner corner;

    friend bool operator==(const CornerRef&, const CornerRef&) = default;
};

/// One cone point: the cyclic sequence of square corners around it.
struct VertexCycle {
    int branch_point;
    std::vector<CornerRef> corners;

    friend bool operator==(const VertexCycle&, const VertexCycle&) = default;
};

/// Translation offsets g_e: white q is glued to black q + g_e along edge e.
struct GluingOffsets {
    ResidueVector top;
    ResidueVector right;
    ResidueVector bottom;
    ResidueVector left;

    const ResidueVector& operator[](Edge e) const;
};

/// The cover drawn as 2d squares: a white and a black square for each deck
/// element, glued along their edges.
class SquareTiledModel {
public:
    /// Checks that `gluings` is a perfect matching of all 8d edge slots with
    /// each white slot paired to a black slot of the same letter, then walks
    /// the corners to form vertex cycles. Throws DomainError otherwise.
    static SquareTiledModel from_gluings(Subgroup deck, std::vector<Gluing> gluings);

    const Subgroup& deck() const noexcept { return deck_; }
    std::size_t degree() const noexcept { return deck_.size(); }
    std::size_t square_count() const noexcept { return 2 * deck_.size(); }
    Square square(std::size_t index) const;
    std::size_t white_index(const ResidueVector& q) const { return deck_.index_of(q); }
    std::size_t black_index(const ResidueVector& q) const { return deck_.size() + deck_.index_of(q); }

    /// Sorted by (white, edge).
    const std::vector<Gluing>& gluings() const noexcept { return gluings_; }
    const std::vector<VertexCycle>& vertex_cycles() const noexcept { return cycles_; }

    /// Index of the square across edge `e` from `square`.
    std::size_t neighbor(std::size_t square, Edge e) const;

    friend bool operator==(const SquareTiledModel&, const SquareTiledModel&) = default;

private:
    SquareTiledModel(Subgroup deck, std::vector<Gluing> gluings);

    Subgroup deck_;
    std::vector<Gluing> gluings_;
    // neighbor_[square * 4 + edge]
    std::vector<std::size_t> neighbor_;
    std::vector<VertexCycle> cycles_;
};

/// (g_T, g_R, g_B, g_L) = (0, -c_3, -c_2-c_3, c_4) for columns c_j of A.
/// Going once around z_j then translates by exactly c_j.
GluingOffsets gluing_offsets(const Presentation& p);

SquareTiledModel build_model(const Presentation& p, std::size_t cap = kDefaultSpanCap);

/// Vertex cycles grouped by branch point; within a branch point, in order of
/// their first corner.
const std::vector<VertexCycle>& vertex_cycles(const SquareTiledModel& model);

/// The deck translation realized by one loop around z_j, read off the model
/// by walking the corner cycle through white square 0.
ResidueVector loop_monodromy(const SquareTiledModel& model, int branch_point);

/// V - E + F with F = 2d, E = 4d, V = number of vertex cycles.
std::int64_t euler_characteristic(const SquareTiledModel& model);

/// Checked variant: also requires chi = 2 - 2 genus(p).
std::int64_t euler_characteristic(const SquareTiledModel& model, const Presentation& p);

/// "edge-list": one line `w:<q> <e> -- b:<q'> <e>` per gluing.
/// "json": object with keys N, deck, squares, gluings, vertex_cycles.
/// Anything else throws UsageError.
std::string export_model(const SquareTiledModel& model, std::string_view format);

/// Reads the edge-list format back. The modulus is not part of the format.
SquareTiledModel parse_edge_list(std::string_view text, std::int64_t modulus);

/// Reads the json format back.
SquareTiledModel parse_model_json(std::string_view text);

}  // namespace abcov
