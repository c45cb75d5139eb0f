#include "abcov/origami.hpp"

#include <algorithm>
#include <sstream>
#include <tuple>

#include <json.hpp>

#include "abcov/errors.hpp"
#include "abcov/flat_geometry.hpp"

namespace abcov {

namespace {

using nlohmann::json;

constexpr std::size_t kNone = static_cast<std::size_t>(-1);

std::size_t edge_slot(Edge e) { return static_cast<std::size_t>(e); }

/// Edges crossed when turning once around a corner: the first one leaving a
/// white square, the second one leaving a black square.
std::pair<Edge, Edge> corner_walk_edges(Corner c) {
    switch (c) {
        case Corner::BL: return {Edge::B, Edge::L};
        case Corner::BR: return {Edge::R, Edge::B};
        case Corner::TR: return {Edge::T, Edge::R};
        case Corner::TL: return {Edge::L, Edge::T};
    }
    throw DomainError("bad corner");
}

bool gluing_order(const Gluing& a, const Gluing& b) {
    return std::tie(a.white, a.edge, a.black) < std::tie(b.white, b.edge, b.black);
}

ResidueVector label_from_json(const json& j, std::int64_t modulus) {
    return ResidueVector(modulus, j.get<std::vector<std::int64_t>>());
}

ResidueVector label_from_text(std::string_view text, std::int64_t modulus, std::size_t line) {
    std::vector<std::int64_t> raw;
    std::size_t pos = 0;
    while (pos <= text.size()) {
        const std::size_t comma = std::min(text.find(',', pos), text.size());
        const std::string piece(text.substr(pos, comma - pos));
        std::size_t used = 0;
        try {
            raw.push_back(std::stoll(piece, &used));
        } catch (const std::exception&) {
            used = 0;
        }
        if (piece.empty() || used != piece.size()) throw ParseError(line, pos + 1, "bad square label '" + std::string(text) + "'");
        pos = comma + 1;
    }
    return ResidueVector(modulus, std::move(raw));
}

Subgroup deck_from_labels(std::vector<ResidueVector> labels, std::int64_t modulus) {
    if (labels.empty()) throw DomainError("model has no squares");
    std::sort(labels.begin(), labels.end());
    labels.erase(std::unique(labels.begin(), labels.end()), labels.end());
    const std::size_t dim = labels.front().dimension();
    Subgroup closure = span_closure(labels, modulus, dim, labels.size());
    if (closure.size() != labels.size()) throw DomainError("square labels do not form a group");
    return closure;
}

}  // namespace

char edge_letter(Edge e) {
    static constexpr char letters[] = {'T', 'R', 'B', 'L'};
    return letters[edge_slot(e)];
}

Edge edge_from_letter(char c) {
    switch (c) {
        case 'T': return Edge::T;
        case 'R': return Edge::R;
        case 'B': return Edge::B;
        case 'L': return Edge::L;
        default: throw DomainError(std::string("unknown edge letter '") + c + "'");
    }
}

std::string_view corner_name(Corner c) {
    static constexpr std::string_view names[] = {"BL", "BR", "TR", "TL"};
    return names[static_cast<std::size_t>(c)];
}

Corner corner_from_name(std::string_view name) {
    for (Corner c : kCorners) {
        if (corner_name(c) == name) return c;
    }
    throw DomainError("unknown corner '" + std::string(name) + "'");
}

int branch_point_of(Corner c) { return static_cast<int>(c) + 1; }

const ResidueVector& GluingOffsets::operator[](Edge e) const {
    switch (e) {
        case Edge::T: return top;
        case Edge::R: return right;
        case Edge::B: return bottom;
        case Edge::L: return left;
    }
    throw DomainError("bad edge");
}

SquareTiledModel::SquareTiledModel(Subgroup deck, std::vector<Gluing> gluings)
    : deck_(std::move(deck)), gluings_(std::move(gluings)) {}

SquareTiledModel SquareTiledModel::from_gluings(Subgroup deck, std::vector<Gluing> gluings) {
    const std::size_t d = deck.size();
    SquareTiledModel model(std::move(deck), std::move(gluings));
    std::sort(model.gluings_.begin(), model.gluings_.end(), gluing_order);

    model.neighbor_.assign(8 * d, kNone);
    for (const Gluing& g : model.gluings_) {
        if (g.white >= d || g.black < d || g.black >= 2 * d) {
            throw DomainError("gluing must join a white square to a black square");
        }
        std::size_t& from_white = model.neighbor_[g.white * 4 + edge_slot(g.edge)];
        std::size_t& from_black = model.neighbor_[g.black * 4 + edge_slot(g.edge)];
        if (from_white != kNone || from_black != kNone) {
            throw DomainError(std::string("edge slot glued twice at edge ") + edge_letter(g.edge));
        }
        from_white = g.black;
        from_black = g.white;
    }
    if (std::find(model.neighbor_.begin(), model.neighbor_.end(), kNone) != model.neighbor_.end()) {
        throw DomainError("gluings do not cover every edge slot");
    }

    // Turning around a corner alternates white and black squares; every
    // corner lies on exactly one such orbit.
    std::vector<bool> visited(8 * d, false);
    for (Corner c : kCorners) {
        const auto [white_edge, black_edge] = corner_walk_edges(c);
        for (std::size_t start = 0; start < 2 * d; ++start) {
            if (visited[start * 4 + static_cast<std::size_t>(c)]) continue;
            VertexCycle cycle{branch_point_of(c), {}};
            std::size_t s = start;
            do {
                visited[s * 4 + static_cast<std::size_t>(c)] = true;
                cycle.corners.push_back({s, c});
                s = model.neighbor(s, s < d ? white_edge : black_edge);
            } while (s != start);
            model.cycles_.push_back(std::move(cycle));
        }
    }
    return model;
}

Square SquareTiledModel::square(std::size_t index) const {
    const std::size_t d = deck_.size();
    if (index >= 2 * d) throw DomainError("square index out of range");
    return index < d ? Square{deck_[index], Color::White} : Square{deck_[index - d], Color::Black};
}

std::size_t SquareTiledModel::neighbor(std::size_t square, Edge e) const {
    return neighbor_.at(square * 4 + edge_slot(e));
}

GluingOffsets gluing_offsets(const Presentation& p) {
    const auto c = p.columns();
    const ResidueVector zero = ResidueVector::zero(p.modulus(), p.row_count());
    GluingOffsets g{zero, -c[2], -c[1] - c[2], c[3]};

    // One loop around z_j = white -> black across the first edge, then back
    // across the second; the net translation must be column j.
    const std::array<std::pair<Edge, Edge>, 4> loops{
        corner_walk_edges(Corner::BL), corner_walk_edges(Corner::BR),
        corner_walk_edges(Corner::TR), corner_walk_edges(Corner::TL)};
    for (std::size_t j = 0; j < 4; ++j) {
        if (g[loops[j].first] - g[loops[j].second] != c[j]) {
            throw InternalError("gluing offsets do not realize column " + std::to_string(j + 1));
        }
    }
    return g;
}

SquareTiledModel build_model(const Presentation& p, std::size_t cap) {
    Subgroup deck = column_span(p, cap);
    const GluingOffsets offsets = gluing_offsets(p);
    const std::size_t d = deck.size();

    std::vector<Gluing> gluings;
    gluings.reserve(4 * d);
    for (std::size_t i = 0; i < d; ++i) {
        for (Edge e : kEdges) {
            gluings.push_back({i, d + deck.index_of(deck[i] + offsets[e]), e});
        }
    }
    return SquareTiledModel::from_gluings(std::move(deck), std::move(gluings));
}

const std::vector<VertexCycle>& vertex_cycles(const SquareTiledModel& model) {
    return model.vertex_cycles();
}

ResidueVector loop_monodromy(const SquareTiledModel& model, int branch_point) {
    if (branch_point < 1 || branch_point > 4) throw DomainError("branch point must be 1..4");
    const Corner c = kCorners[static_cast<std::size_t>(branch_point - 1)];
    const auto [white_edge, black_edge] = corner_walk_edges(c);
    const std::size_t start = model.white_index(ResidueVector::zero(model.deck().modulus(), model.deck().dimension()));
    const std::size_t black = model.neighbor(start, white_edge);
    const std::size_t back = model.neighbor(black, black_edge);
    return model.square(back).label - model.square(start).label;
}

std::int64_t euler_characteristic(const SquareTiledModel& model) {
    const auto d = static_cast<std::int64_t>(model.degree());
    const auto v = static_cast<std::int64_t>(model.vertex_cycles().size());
    return v - 4 * d + 2 * d;
}

std::int64_t euler_characteristic(const SquareTiledModel& model, const Presentation& p) {
    const std::int64_t chi = euler_characteristic(model);
    const std::int64_t g = genus(p);
    if (chi != 2 - 2 * g) {
        throw InternalError("square-tiled model has chi = " + std::to_string(chi) + " but genus formula gives " +
                            std::to_string(g));
    }
    return chi;
}

std::string export_model(const SquareTiledModel& model, std::string_view format) {
    if (format == "edge-list") {
        std::ostringstream out;
        for (const Gluing& g : model.gluings()) {
            const char e = edge_letter(g.edge);
            out << "w:" << model.square(g.white).label.to_string() << ' ' << e << " -- b:"
                << model.square(g.black).label.to_string() << ' ' << e << '\n';
        }
        return out.str();
    }
    if (format == "json") {
        json j;
        j["N"] = model.deck().modulus();
        json deck = json::array();
        for (const auto& q : model.deck().elements()) {
            deck.push_back(std::vector<std::int64_t>(q.entries().begin(), q.entries().end()));
        }
        j["deck"] = deck;
        json squares = json::array();
        for (std::size_t s = 0; s < model.square_count(); ++s) {
            const Square sq = model.square(s);
            squares.push_back({{"label", std::vector<std::int64_t>(sq.label.entries().begin(), sq.label.entries().end())},
                               {"color", sq.color == Color::White ? "white" : "black"}});
        }
        j["squares"] = squares;
        json gluings = json::array();
        for (const Gluing& g : model.gluings()) {
            gluings.push_back({{"white", g.white}, {"black", g.black}, {"edge", std::string(1, edge_letter(g.edge))}});
        }
        j["gluings"] = gluings;
        json cycles = json::array();
        for (const VertexCycle& c : model.vertex_cycles()) {
            json corners = json::array();
            for (const CornerRef& r : c.corners) {
                corners.push_back({{"square", r.square}, {"corner", std::string(corner_name(r.corner))}});
            }
            cycles.push_back({{"branch_point", c.branch_point}, {"corners", corners}});
        }
        j["vertex_cycles"] = cycles;
        return j.dump(2) + "\n";
    }
    throw UsageError("unknown export format '" + std::string(format) + "' (expected edge-list or json)");
}

SquareTiledModel parse_edge_list(std::string_view text, std::int64_t modulus) {
    struct Line {
        ResidueVector white;
        ResidueVector black;
        Edge edge;
    };
    std::vector<Line> lines;
    std::istringstream in{std::string(text)};
    std::string raw;
    std::size_t line_no = 0;
    while (std::getline(in, raw)) {
        ++line_no;
        if (!raw.empty() && raw.back() == '\r') raw.pop_back();
        if (raw.find_first_not_of(" \t") == std::string::npos) continue;
        std::istringstream fields(raw);
        std::string w, e1, sep, b, e2, extra;
        if (!(fields >> w >> e1 >> sep >> b >> e2) || (fields >> extra)) {
            throw ParseError(line_no, 1, "expected 'w:<q> <e> -- b:<q> <e>'");
        }
        if (w.rfind("w:", 0) != 0 || b.rfind("b:", 0) != 0 || sep != "--" || e1.size() != 1 || e1 != e2) {
            throw ParseError(line_no, 1, "expected 'w:<q> <e> -- b:<q> <e>'");
        }
        Edge edge{};
        try {
            edge = edge_from_letter(e1[0]);
        } catch (const DomainError& err) {
            throw ParseError(line_no, raw.find(e1) + 1, err.what());
        }
        lines.push_back({label_from_text(std::string_view(w).substr(2), modulus, line_no),
                         label_from_text(std::string_view(b).substr(2), modulus, line_no), edge});
    }

    std::vector<ResidueVector> labels;
    for (const Line& l : lines) labels.push_back(l.white);
    Subgroup deck = deck_from_labels(std::move(labels), modulus);
    const std::size_t d = deck.size();
    std::vector<Gluing> gluings;
    for (const Line& l : lines) gluings.push_back({deck.index_of(l.white), d + deck.index_of(l.black), l.edge});
    return SquareTiledModel::from_gluings(std::move(deck), std::move(gluings));
}

SquareTiledModel parse_model_json(std::string_view text) {
    json j;
    try {
        j = json::parse(text);
    } catch (const json::parse_error& e) {
        throw ParseError(1, e.byte, e.what());
    }
    try {
        const auto modulus = j.at("N").get<std::int64_t>();
        std::vector<ResidueVector> labels;
        for (const auto& q : j.at("deck")) labels.push_back(label_from_json(q, modulus));
        Subgroup deck = deck_from_labels(labels, modulus);
        if (deck.size() != labels.size() || !std::equal(labels.begin(), labels.end(), deck.elements().begin())) {
            throw DomainError("deck must be listed in canonical order without repeats");
        }
        std::vector<Gluing> gluings;
        for (const auto& g : j.at("gluings")) {
            const auto letter = g.at("edge").get<std::string>();
            if (letter.size() != 1) throw DomainError("bad edge '" + letter + "'");
            gluings.push_back({g.at("white").get<std::size_t>(), g.at("black").get<std::size_t>(),
                               edge_from_letter(letter[0])});
        }
        SquareTiledModel model = SquareTiledModel::from_gluings(std::move(deck), std::move(gluings));

        // Squares and cycles are derived data; reject files where they disagree.
        const auto& squares = j.at("squares");
        if (squares.size() != model.square_count()) throw DomainError("square list has the wrong length");
        for (std::size_t s = 0; s < squares.size(); ++s) {
            const Square expect = model.square(s);
            const bool white = squares[s].at("color").get<std::string>() == "white";
            if (label_from_json(squares[s].at("label"), modulus) != expect.label ||
                white != (expect.color == Color::White)) {
                throw DomainError("square " + std::to_string(s) + " does not match the deck order");
            }
        }
        std::vector<VertexCycle> cycles;
        for (const auto& c : j.at("vertex_cycles")) {
            VertexCycle cycle{c.at("branch_point").get<int>(), {}};
            for (const auto& r : c.at("corners")) {
                cycle.corners.push_back({r.at("square").get<std::size_t>(),
                                         corner_from_name(r.at("corner").get<std::string>())});
            }
            cycles.push_back(std::move(cycle));
        }
        if (cycles != model.vertex_cycles()) throw DomainError("vertex cycles do not match the gluings");
        return model;
    } catch (const json::exception& e) {
        throw DomainError(std::string("malformed model json: ") + e.what());
    }
}

}  // namespace abcov
