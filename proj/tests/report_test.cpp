#include <gtest/gtest.h>

#include <fstream>

#include <json.hpp>

#include "abcov/errors.hpp"
#include "abcov/report.hpp"
#include "support.hpp"

namespace abcov {
namespace {

using testing::M;

TEST(Parser, Basic) {
    const auto f = parse_presentation_text("# four-fold\nN = 4\nA = [ [1,1,1,1],\n      [2,2,2,2] ]\n");
    EXPECT_EQ(f.modulus, 4);
    ASSERT_EQ(f.rows.size(), 2u);
    EXPECT_EQ(f.rows[1], (RawRow{2, 2, 2, 2}));
    EXPECT_EQ(f.validate().to_string(), "M_4([[1,1,1,1],[2,2,2,2]])");
}

TEST(Parser, OrderWhitespaceAndCrlf) {
    const auto f = parse_presentation_text("A=[[1,-1,0,0]]\r\n  N=3 # trailing\r\n");
    EXPECT_EQ(f.modulus, 3);
    EXPECT_EQ(f.rows[0], (RawRow{1, -1, 0, 0}));
}

void expect_parse_error(const std::string& text, std::size_t line, std::size_t column) {
    try {
        parse_presentation_text(text);
        FAIL() << "no error for: " << text;
    } catch (const ParseError& e) {
        EXPECT_EQ(e.line(), line) << e.what();
        EXPECT_EQ(e.column(), column) << e.what();
    }
}

TEST(Parser, Errors) {
    expect_parse_error("N = 4\n", 2, 1);                          // missing A
    expect_parse_error("A = [[1,1,1,1]]\n", 2, 1);                // missing N
    expect_parse_error("N = 4\nN = 4\nA = [[1,1,1,1]]", 2, 1);    // duplicate
    expect_parse_error("N = 4\nA = [[1,1,1]]", 2, 12);            // short row
    expect_parse_error("N = 4\nA = [[1,1,1,1,1]]", 2, 6);         // long row, reported at the row
    expect_parse_error("N = x\nA = [[1,1,1,1]]", 1, 5);
    expect_parse_error("N = 4\nB = [[1,1,1,1]]", 2, 1);
    expect_parse_error("N = 4\nA = []", 2, 6);                    // no rows
}

TEST(Parser, UnreadableFile) {
    EXPECT_THROW(read_presentation_file("/nonexistent/p.txt"), ParseError);
}

TEST(Analyze, FourFoldCover) {
    const auto r = analyze(M(4, {{1, 1, 1, 1}}));
    EXPECT_EQ(r.degree, 4);
    EXPECT_EQ(r.genus, 3);
    EXPECT_EQ(r.spectrum.entries, (std::vector<Rational>{1, 0, 0}));
    EXPECT_EQ(r.eigenspaces.size(), 3u);
    EXPECT_FALSE(r.verification.has_value());
    const auto text = format_report(r);
    EXPECT_NE(text.find("genus           3"), std::string::npos);
    EXPECT_NE(text.find("1 (1.000000)"), std::string::npos);
}

TEST(Analyze, TrivialCover) {
    const auto r = analyze(M(2, {{0, 0, 0, 0}}));
    EXPECT_EQ(r.degree, 1);
    EXPECT_EQ(r.genus, 0);
    EXPECT_TRUE(r.spectrum.entries.empty());
    EXPECT_EQ(format_spectrum(r.spectrum), "");
}

TEST(FormatSpectrum, Examples) {
    EXPECT_EQ(format_spectrum(analyze(M(3, {{1, 1, 2, 2}})).spectrum), "2/3, 2/3");
    EXPECT_EQ(format_spectrum(analyze(M(2, {{1, 1, 1, 1}})).spectrum), "1");
    EXPECT_EQ(format_spectrum(analyze(M(5, {{1, 1, 1, 2}})).spectrum), "2/5, 2/5, 0, 0");
}

TEST(Json, SchemaKeys) {
    auto r = analyze(M(3, {{1, 1, 2, 2}}));
    r.verification = verify_all(r.eigenspaces);
    const auto j = nlohmann::json::parse(report_to_json(r));
    for (const char* key : {"presentation", "degree", "genus", "ramification", "stratum", "eigenspaces", "spectrum",
                            "verification"}) {
        EXPECT_TRUE(j.contains(key)) << key;
    }
    EXPECT_EQ(j["presentation"]["N"], 3);
    for (const char* key : {"angles", "marked_points", "trivial_holonomy", "holonomy_cover"}) {
        EXPECT_TRUE(j["stratum"].contains(key)) << key;
    }
    for (const char* key : {"r", "t_r", "t_minus_r", "dim_h10", "dim_h1", "eligible", "hgde", "angles", "exponent"}) {
        EXPECT_TRUE(j["eigenspaces"][0].contains(key)) << key;
    }
    EXPECT_EQ(j["spectrum"][0], "2/3");
}

TEST(Json, RoundTripIsLossless) {
    for (const auto& p : testing::random_suite(81, 60)) {
        auto r = analyze(p);
        EXPECT_EQ(report_from_json(report_to_json(r)), r) << p;
    }
    auto r = analyze(M(5, {{1, 1, 1, 2}}));
    r.verification = verify_all(r.eigenspaces);
    const auto text = report_to_json(r);
    EXPECT_EQ(report_from_json(text), r);
    EXPECT_EQ(report_to_json(report_from_json(text)), text);
}

TEST(Json, SpectrumOnly) {
    const auto j = nlohmann::json::parse(spectrum_to_json(analyze(M(4, {{1, 1, 1, 1}})).spectrum));
    EXPECT_EQ(j["genus"], 3);
    EXPECT_EQ(j["spectrum"], nlohmann::json::array({"1", "0", "0"}));
}

}  // namespace
}  // namespace abcov
