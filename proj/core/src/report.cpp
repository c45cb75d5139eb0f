#include "abcov/report.hpp"

#include <cctype>
#include <cstdio>
#include <fstream>
#include <sstream>

#include <json.hpp>

#include "abcov/errors.hpp"

namespace abcov {

namespace {

using nlohmann::json;

// ---------------------------------------------------------------------------
// Presentation file grammar

struct Token {
    enum class Kind { Key, Equals, Integer, Open, Close, Comma, End } kind;
    std::string text;
    std::size_t line;
    std::size_t column;
};

class Lexer {
public:
    explicit Lexer(std::string_view text) : text_(text) {}

    Token next() {
        skip_blank();
        const std::size_t line = line_, column = column_;
        if (pos_ >= text_.size()) return {Token::Kind::End, "", line, column};
        const char c = text_[pos_];
        auto single = [&](Token::Kind k) {
            advance();
            return Token{k, std::string(1, c), line, column};
        };
        switch (c) {
            case '=': return single(Token::Kind::Equals);
            case '[': return single(Token::Kind::Open);
            case ']': return single(Token::Kind::Close);
            case ',': return single(Token::Kind::Comma);
            default: break;
        }
        if (c == '-' || c == '+' || std::isdigit(static_cast<unsigned char>(c))) {
            std::string digits(1, c);
            advance();
            while (pos_ < text_.size() && std::isdigit(static_cast<unsigned char>(text_[pos_]))) {
                digits += text_[pos_];
                advance();
            }
            if (digits == "-" || digits == "+") throw ParseError(line, column, "sign without digits");
            return {Token::Kind::Integer, digits, line, column};
        }
        if (std::isalpha(static_cast<unsigned char>(c))) {
            std::string word;
            while (pos_ < text_.size() && std::isalnum(static_cast<unsigned char>(text_[pos_]))) {
                word += text_[pos_];
                advance();
            }
            return {Token::Kind::Key, word, line, column};
        }
        throw ParseError(line, column, std::string("unexpected character '") + c + "'");
    }

private:
    void advance() {
        if (text_[pos_] == '\n') {
            ++line_;
            column_ = 1;
        } else {
            ++column_;
        }
        ++pos_;
    }

    void skip_blank() {
        while (pos_ < text_.size()) {
            const char c = text_[pos_];
            if (c == '#') {
                while (pos_ < text_.size() && text_[pos_] != '\n') advance();
            } else if (std::isspace(static_cast<unsigned char>(c))) {
                advance();
            } else {
                break;
            }
        }
    }

    std::string_view text_;
    std::size_t pos_ = 0;
    std::size_t line_ = 1;
    std::size_t column_ = 1;
};

class Parser {
public:
    explicit Parser(std::string_view text) : lexer_(text) { shift(); }

    PresentationFile parse(std::string path) {
        PresentationFile out;
        out.path = std::move(path);
        bool have_n = false, have_a = false;
        while (current_.kind != Token::Kind::End) {
            const Token key = expect(Token::Kind::Key, "'N' or 'A'");
            expect(Token::Kind::Equals, "'='");
            if (key.text == "N") {
                if (have_n) throw ParseError(key.line, key.column, "N given twice");
                out.modulus = integer();
                have_n = true;
            } else if (key.text == "A") {
                if (have_a) throw ParseError(key.line, key.column, "A given twice");
                out.rows = matrix();
                have_a = true;
            } else {
                throw ParseError(key.line, key.column, "unknown key '" + key.text + "'");
            }
        }
        if (!have_n) throw ParseError(current_.line, current_.column, "missing 'N = <integer>'");
        if (!have_a) throw ParseError(current_.line, current_.column, "missing 'A = [[...], ...]'");
        return out;
    }

private:
    void shift() { current_ = lexer_.next(); }

    Token expect(Token::Kind kind, const char* what) {
        if (current_.kind != kind) {
            const std::string found = current_.kind == Token::Kind::End ? "end of input" : "'" + current_.text + "'";
            throw ParseError(current_.line, current_.column, std::string("expected ") + what + ", found " + found);
        }
        Token t = current_;
        shift();
        return t;
    }

    std::int64_t integer() {
        const Token t = expect(Token::Kind::Integer, "an integer");
        try {
            return std::stoll(t.text);
        } catch (const std::out_of_range&) {
            throw ParseError(t.line, t.column, "integer out of range");
        }
    }

    RawRow row() {
        RawRow r{};
        const Token open = expect(Token::Kind::Open, "'['");
        for (std::size_t j = 0; j < 4; ++j) {
            if (j) expect(Token::Kind::Comma, "',' (rows have exactly 4 entries)");
            r[j] = integer();
        }
        if (current_.kind != Token::Kind::Close) {
            throw ParseError(open.line, open.column, "row does not have exactly 4 entries");
        }
        shift();
        return r;
    }

    std::vector<RawRow> matrix() {
        std::vector<RawRow> rows;
        expect(Token::Kind::Open, "'['");
        if (current_.kind == Token::Kind::Close) {
            throw ParseError(current_.line, current_.column, "matrix needs at least one row");
        }
        rows.push_back(row());
        while (current_.kind == Token::Kind::Comma) {
            shift();
            rows.push_back(row());
        }
        expect(Token::Kind::Close, "']'");
        return rows;
    }

    Lexer lexer_;
    Token current_{Token::Kind::End, "", 1, 1};
};

// ---------------------------------------------------------------------------
// JSON

json rational_list(std::span<const Rational> xs) {
    json out = json::array();
    for (const auto& x : xs) out.push_back(x.to_string());
    return out;
}

std::vector<Rational> rationals_from(const json& j) {
    std::vector<Rational> out;
    for (const auto& x : j) out.push_back(Rational::parse(x.get<std::string>()));
    return out;
}

json vector_json(const ResidueVector& v) {
    return std::vector<std::int64_t>(v.entries().begin(), v.entries().end());
}

json presentation_json(const Presentation& p) {
    json rows = json::array();
    for (const auto& r : p.matrix()) rows.push_back(r);
    return {{"N", p.modulus()}, {"A", rows}};
}

Presentation presentation_from(const json& j) {
    return Presentation::validate(j.at("N").get<std::int64_t>(), j.at("A").get<std::vector<RawRow>>());
}

json eigen_json(const EigenRecord& e) {
    json j;
    j["r"] = vector_json(e.r);
    j["t_r"] = e.t_of_r.to_string();
    j["t_minus_r"] = e.t_of_minus_r.to_string();
    j["t_components_minus_r"] = rational_list(e.t_components_minus_r);
    j["dim_h10"] = e.dim_h10;
    j["dim_h1"] = e.dim_h1;
    j["eligible"] = e.eligible;
    j["hgde"] = e.hgde ? json{{"a", e.hgde->a.to_string()}, {"b", e.hgde->b.to_string()}, {"c", e.hgde->c.to_string()}}
                       : json(nullptr);
    j["angles"] = e.angles ? json{{"kappa", e.angles->kappa.to_string()},
                                  {"mu", e.angles->mu.to_string()},
                                  {"nu", e.angles->nu.to_string()},
                                  {"area_over_pi", e.angles->area_over_pi.to_string()}}
                           : json(nullptr);
    j["exponent"] = e.exponent ? json(e.exponent->to_string()) : json(nullptr);
    return j;
}

EigenRecord eigen_from(const json& j, std::int64_t modulus) {
    EigenRecord e{.r = ResidueVector(modulus, j.at("r").get<std::vector<std::int64_t>>()),
                  .t_of_r = Rational::parse(j.at("t_r").get<std::string>()),
                  .t_of_minus_r = Rational::parse(j.at("t_minus_r").get<std::string>()),
                  .t_components_minus_r = {},
                  .dim_h10 = j.at("dim_h10").get<std::int64_t>(),
                  .dim_h1 = j.at("dim_h1").get<std::int64_t>(),
                  .eligible = j.at("eligible").get<bool>(),
                  .hgde = std::nullopt,
                  .angles = std::nullopt,
                  .exponent = std::nullopt};
    const auto t = rationals_from(j.at("t_components_minus_r"));
    if (t.size() != 4) throw DomainError("t_components_minus_r must have 4 entries");
    std::copy(t.begin(), t.end(), e.t_components_minus_r.begin());
    auto rat = [](const json& x) { return Rational::parse(x.get<std::string>()); };
    if (!j.at("hgde").is_null()) {
        const auto& h = j.at("hgde");
        e.hgde = HgdeParamsExact{rat(h.at("a")), rat(h.at("b")), rat(h.at("c"))};
    }
    if (!j.at("angles").is_null()) {
        const auto& a = j.at("angles");
        e.angles = TriangleAngles{rat(a.at("kappa")), rat(a.at("mu")), rat(a.at("nu")), rat(a.at("area_over_pi"))};
    }
    if (!j.at("exponent").is_null()) e.exponent = rat(j.at("exponent"));
    return e;
}

json optional_double(const std::optional<double>& x) {
    return x ? json(*x) : json(nullptr);
}

std::optional<double> optional_double_from(const json& j) {
    if (j.is_null()) return std::nullopt;
    return j.get<double>();
}

json verification_json(const std::vector<oracle::VerificationReport>& reports) {
    json out = json::array();
    for (const auto& rep : reports) {
        json checks = json::array();
        for (const auto& c : rep.checks) {
            json samples = json::array();
            for (const auto& s : c.samples) samples.push_back({s.real(), s.imag()});
            checks.push_back({{"name", c.name},
                              {"status", oracle::to_string(c.status)},
                              {"observed", optional_double(c.observed)},
                              {"expected", optional_double(c.expected)},
                              {"tolerance", c.tolerance},
                              {"note", c.note},
                              {"samples", samples}});
        }
        out.push_back({{"r", vector_json(rep.r)}, {"overall", oracle::to_string(rep.overall)}, {"checks", checks}});
    }
    return out;
}

oracle::CheckStatus check_status_from(const std::string& s) {
    for (auto st : {oracle::CheckStatus::Pass, oracle::CheckStatus::Fail, oracle::CheckStatus::Skipped}) {
        if (oracle::to_string(st) == s) return st;
    }
    throw DomainError("unknown check status '" + s + "'");
}

oracle::OverallStatus overall_status_from(const std::string& s) {
    for (auto st : {oracle::OverallStatus::Pass, oracle::OverallStatus::Fail, oracle::OverallStatus::Inconclusive}) {
        if (oracle::to_string(st) == s) return st;
    }
    throw DomainError("unknown overall status '" + s + "'");
}

std::vector<oracle::VerificationReport> verification_from(const json& j, std::int64_t modulus) {
    std::vector<oracle::VerificationReport> out;
    for (const auto& rep : j) {
        oracle::VerificationReport r{ResidueVector(modulus, rep.at("r").get<std::vector<std::int64_t>>()), {},
                                     overall_status_from(rep.at("overall").get<std::string>())};
        for (const auto& c : rep.at("checks")) {
            oracle::CheckOutcome o;
            o.name = c.at("name").get<std::string>();
            o.status = check_status_from(c.at("status").get<std::string>());
            o.observed = optional_double_from(c.at("observed"));
            o.expected = optional_double_from(c.at("expected"));
            o.tolerance = c.at("tolerance").get<double>();
            o.note = c.at("note").get<std::string>();
            for (const auto& s : c.at("samples")) o.samples.emplace_back(s.at(0).get<double>(), s.at(1).get<double>());
            r.checks.push_back(std::move(o));
        }
        out.push_back(std::move(r));
    }
    return out;
}

std::string fixed6(double x) {
    char buf[64];
    std::snprintf(buf, sizeof buf, "%.6f", x);
    return buf;
}

}  // namespace

PresentationFile parse_presentation_text(std::string_view text, std::string path) {
    return Parser(text).parse(std::move(path));
}

PresentationFile read_presentation_file(const std::filesystem::path& path) {
    std::ifstream in(path, std::ios::binary);
    if (!in) throw ParseError(0, 0, "cannot read " + path.string());
    std::ostringstream buf;
    buf << in.rdbuf();
    return parse_presentation_text(buf.str(), path.string());
}

AnalysisReport analyze(const Presentation& p, std::size_t cap) {
    StratumReport strat = stratum(p, cap);
    return AnalysisReport{.presentation = p,
                          .degree = strat.degree,
                          .genus = strat.genus,
                          .ramification = ramification_orders(p),
                          .stratum = strat,
                          .holonomy_cover = holonomy_cover(p),
                          .eigenspaces = eigen_table(p, cap),
                          .spectrum = spectrum(p, cap),
                          .verification = std::nullopt};
}

std::vector<oracle::VerificationReport> verify_all(const std::vector<EigenRecord>& table,
                                                   const oracle::OracleSettings& settings) {
    std::vector<oracle::VerificationReport> out;
    for (const auto& rec : table) {
        if (rec.eligible) out.push_back(oracle::verify_eigenspace(rec, settings));
    }
    return out;
}

std::string report_to_json(const AnalysisReport& report) {
    json j;
    j["presentation"] = presentation_json(report.presentation);
    j["degree"] = report.degree;
    j["genus"] = report.genus;
    j["ramification"] = report.ramification;

    json angles = json::array();
    for (std::size_t i = 0; i < 4; ++i) {
        const auto& b = report.stratum.branch_points[i];
        angles.push_back({{"branch_point", i + 1},
                          {"ramification", b.ramification},
                          {"points", b.point_count},
                          {"cone_angle_over_pi", b.cone_angle_over_pi},
                          {"quadratic_order", b.quadratic_order},
                          {"abelian_order", b.abelian_order ? json(*b.abelian_order) : json(nullptr)}});
    }
    j["stratum"] = {{"angles", angles},
                    {"marked_points", report.stratum.marked_points},
                    {"trivial_holonomy", report.stratum.trivial_holonomy},
                    {"holonomy_cover", presentation_json(report.holonomy_cover)}};

    json eigen = json::array();
    for (const auto& e : report.eigenspaces) eigen.push_back(eigen_json(e));
    j["eigenspaces"] = eigen;
    j["spectrum"] = rational_list(report.spectrum.entries);
    if (report.verification) j["verification"] = verification_json(*report.verification);
    return j.dump(2) + "\n";
}

AnalysisReport report_from_json(std::string_view text) {
    try {
        const json j = json::parse(text);
        const Presentation p = presentation_from(j.at("presentation"));
        AnalysisReport r{.presentation = p,
                         .degree = j.at("degree").get<std::int64_t>(),
                         .genus = j.at("genus").get<std::int64_t>(),
                         .ramification = j.at("ramification").get<std::array<std::int64_t, 4>>(),
                         .stratum = {},
                         .holonomy_cover = presentation_from(j.at("stratum").at("holonomy_cover")),
                         .eigenspaces = {},
                         .spectrum = {},
                         .verification = std::nullopt};
        const auto& s = j.at("stratum");
        r.stratum.degree = r.degree;
        r.stratum.genus = r.genus;
        r.stratum.marked_points = s.at("marked_points").get<std::int64_t>();
        r.stratum.trivial_holonomy = s.at("trivial_holonomy").get<bool>();
        const auto& angles = s.at("angles");
        if (angles.size() != 4) throw DomainError("stratum must list 4 branch points");
        for (std::size_t i = 0; i < 4; ++i) {
            auto& b = r.stratum.branch_points[i];
            b.ramification = angles[i].at("ramification").get<std::int64_t>();
            b.point_count = angles[i].at("points").get<std::int64_t>();
            b.cone_angle_over_pi = angles[i].at("cone_angle_over_pi").get<std::int64_t>();
            b.quadratic_order = angles[i].at("quadratic_order").get<std::int64_t>();
            if (!angles[i].at("abelian_order").is_null()) b.abelian_order = angles[i].at("abelian_order").get<std::int64_t>();
        }
        for (const auto& e : j.at("eigenspaces")) r.eigenspaces.push_back(eigen_from(e, p.modulus()));
        r.spectrum.entries = rationals_from(j.at("spectrum"));
        r.spectrum.genus = r.genus;
        if (j.contains("verification")) r.verification = verification_from(j.at("verification"), p.modulus());
        return r;
    } catch (const json::parse_error& e) {
        throw ParseError(1, e.byte, e.what());
    } catch (const json::exception& e) {
        throw DomainError(std::string("malformed report json: ") + e.what());
    }
}

std::string spectrum_to_json(const Spectrum& s) {
    return json{{"genus", s.genus}, {"spectrum", rational_list(s.entries)}}.dump(2) + "\n";
}

std::string verification_to_json(const std::vector<oracle::VerificationReport>& reports) {
    return verification_json(reports).dump(2) + "\n";
}

std::string format_spectrum(const Spectrum& s) {
    std::string out;
    for (std::size_t i = 0; i < s.entries.size(); ++i) {
        if (i) out += ", ";
        out += s.entries[i].to_string();
    }
    return out;
}

std::string format_report(const AnalysisReport& r) {
    std::ostringstream out;
    out << "presentation    " << r.presentation << '\n';
    out << "degree          " << r.degree << '\n';
    out << "genus           " << r.genus << '\n';
    out << "ramification    (" << r.ramification[0] << ", " << r.ramification[1] << ", " << r.ramification[2] << ", "
        << r.ramification[3] << ")\n";
    out << "stratum\n";
    for (std::size_t i = 0; i < 4; ++i) {
        const auto& b = r.stratum.branch_points[i];
        out << "  z" << i + 1 << ": " << b.point_count << " point(s) of cone angle " << b.cone_angle_over_pi << "pi";
        if (b.ramification == 1) {
            out << " (simple pole, marked)";
        } else if (b.ramification == 2) {
            out << " (regular)";
        } else {
            out << " (zero of order " << b.quadratic_order << ")";
        }
        if (b.abelian_order) out << ", abelian order " << *b.abelian_order;
        out << '\n';
    }
    out << "  marked points: " << r.stratum.marked_points << '\n';
    out << "holonomy        " << (r.stratum.trivial_holonomy ? "trivial" : "non-trivial") << '\n';
    out << "holonomy cover  " << r.holonomy_cover << '\n';
    out << "eigenspaces     " << r.eigenspaces.size() << '\n';
    for (const auto& e : r.eigenspaces) {
        out << "  r=(" << e.r.to_string() << ")  t(r)=" << e.t_of_r << "  t(-r)=" << e.t_of_minus_r
            << "  dim H10=" << e.dim_h10 << "  dim H1=" << e.dim_h1;
        if (e.eligible) {
            out << "  angles=(" << e.angles->kappa << ", " << e.angles->mu << ", " << e.angles->nu << ")"
                << "  exponent=" << *e.exponent << " (" << fixed6(e.exponent->to_double()) << ")";
        }
        out << '\n';
    }
    out << "spectrum        ";
    for (std::size_t i = 0; i < r.spectrum.entries.size(); ++i) {
        if (i) out << ", ";
        out << r.spectrum.entries[i] << " (" << fixed6(r.spectrum.entries[i].to_double()) << ")";
    }
    out << '\n';
    if (r.verification) out << format_verification(*r.verification);
    return out.str();
}

std::string format_verification(const std::vector<oracle::VerificationReport>& reports) {
    std::ostringstream out;
    if (reports.empty()) out << "verification: no eligible eigenspaces\n";
    for (const auto& rep : reports) {
        out << "verify r=(" << rep.r.to_string() << "): " << oracle::to_string(rep.overall) << '\n';
        for (const auto& c : rep.checks) {
            out << "  " << c.name << ": " << oracle::to_string(c.status);
            if (c.observed) out << "  observed=" << *c.observed;
            if (c.expected) out << "  expected=" << *c.expected;
            out << "  tol=" << c.tolerance;
            if (!c.note.empty()) out << "  (" << c.note << ")";
            out << '\n';
        }
    }
    return out.str();
}

}  // namespace abcov
