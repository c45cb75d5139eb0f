#pragma once

#include <array>
#include <cstdint>
#include <filesystem>
#include <optional>
#include <string>
#include <string_view>
#include <vector>

#include "abcov/flat_geometry.hpp"
#include "abcov/hodge.hpp"
#include "abcov/hypergeom_oracle.hpp"
#include "abcov/presentation.hpp"

namespace abcov {

/// A parsed (not yet validated) presentation file:
///
///     # comment
///     N = 4
///     A = [ [1,1,1,1], [2,2,2,2] ]
///
/// Both keys are required exactly once; whitespace, including newlines
/// inside the matrix, is insignificant.
struct PresentationFile {
    std::string path;
    std::int64_t modulus = 0;
    std::vector<RawRow> rows;

    Presentation validate() const { return Presentation::validate(modulus, rows); }
};

/// Throws ParseError with the 1-based line and column of the problem.
PresentationFile parse_presentation_text(std::string_view text, std::string path = "<input>");

/// Reads and parses a file; an unreadable file is a ParseError at 0:0.
PresentationFile read_presentation_file(const std::filesystem::path& path);

/// Everything the library knows about one cover.
struct AnalysisReport {
    Presentation presentation;
    std::int64_t degree = 1;
    std::int64_t genus = 0;
    std::array<std::int64_t, 4> ramification{};
    StratumReport stratum;
    Presentation holonomy_cover;
    std::vector<EigenRecord> eigenspaces;
    Spectrum spectrum;
    std::optional<std::vector<oracle::VerificationReport>> verification;

    friend bool operator==(const AnalysisReport&, const AnalysisReport&) = default;
};

AnalysisReport analyze(const Presentation& p, std::size_t cap = kDefaultSpanCap);

/// One verification report per eligible eigenspace, in eigen-table order.
std::vector<oracle::VerificationReport> verify_all(const std::vector<EigenRecord>& table,
                                                   const oracle::OracleSettings& settings = {});

/// Lossless JSON; every rational is a "p/q" (or "k") string.
std::string report_to_json(const AnalysisReport& report);
AnalysisReport report_from_json(std::string_view text);

std::string spectrum_to_json(const Spectrum& s);
std::string verification_to_json(const std::vector<oracle::VerificationReport>& reports);

/// Multi-line human-readable summary.
std::string format_report(const AnalysisReport& report);
/// "2/3, 2/3"; empty string for genus 0.
std::string format_spectrum(const Spectrum& s);
std::string format_verification(const std::vector<oracle::VerificationReport>& reports);

}  // namespace abcov
