#pragma once

#include <complex>
#include <cstddef>
#include <functional>
#include <optional>
#include <span>
#include <string>
#include <string_view>
#include <vector>

#include "abcov/errors.hpp"
#include "abcov/hodge.hpp"

// Floating-point checks of the analytic layer. Nothing here feeds back into
// the exact results; these functions only confirm them.
namespace abcov::oracle {

using Complex = std::complex<double>;
using ComplexFn = std::function<Complex(Complex)>;

/// Series did not reach the cutoff within the term cap.
class NonConvergenceError : public Error {
public:
    using Error::Error;
};

/// c is zero or a negative integer.
class ParameterError : public Error {
public:
    using Error::Error;
};

/// c = 1: the second local solution at 0 involves log(lambda).
class LogarithmicCaseError : public Error {
public:
    using Error::Error;
};

struct HgdeParams {
    double a = 0.0;
    double b = 0.0;
    double c = 1.0;

    HgdeParams() = default;
    HgdeParams(double a_, double b_, double c_);
    explicit HgdeParams(const HgdeParamsExact& exact);
};

struct SeriesOptions {
    double relative_cutoff = 1e-14;
    std::size_t max_terms = 100'000;
};

/// Tolerances and stencil settings shared by all checks.
struct OracleSettings {
    SeriesOptions series;
    double residual_tol = 1e-6;
    double wronskian_tol = 1e-6;
    double angle_tol = 0.02;
    double area_tol = 0.06;
    /// Central-difference step relative to |lambda|.
    double fd_relative_step = 5e-3;
    /// |c - 1| at or below this is treated as the logarithmic case.
    double log_case_eps = 1e-9;
};

/// Sum of (a)_n (b)_n / (c)_n * lambda^n / n! for |lambda| <= 0.5, stopped
/// once a term falls below relative_cutoff times the running sum.
Complex gauss_2f1(const HgdeParams& p, Complex lambda, const SeriesOptions& opts = {});

struct LocalBasis {
    Complex f0;  ///< lambda^{1-c} F(a+1-c, b+1-c; 2-c; lambda), principal branch
    Complex g0;  ///< F(a, b; c; lambda)
};

/// Throws LogarithmicCaseError when |c - 1| <= settings.log_case_eps.
LocalBasis local_basis_at_0(const HgdeParams& p, Complex lambda, const OracleSettings& settings = {});

/// Central finite differences (fourth-order stencil).
Complex fd_first_derivative(const ComplexFn& f, Complex lambda, double h);
Complex fd_second_derivative(const ComplexFn& f, Complex lambda, double h);

/// |lambda(lambda-1) y'' + [(a+b+1)lambda - c] y' + ab y| divided by the
/// largest of the three term magnitudes, maximized over `samples`.
double hgde_residual(const HgdeParams& p, const ComplexFn& y, std::span<const Complex> samples,
                     const OracleSettings& settings = {});

/// hgde_residual over both local solutions f0 and g0.
double check_hgde_residual(const HgdeParams& p, std::span<const Complex> samples,
                           const OracleSettings& settings = {});

/// Max pairwise relative deviation of W(f, g) * lambda^{c'} * (1-lambda)^{a+b+1-c}
/// across samples, with c' = c + exponent_shift. Abel's identity makes this
/// constant for any two solutions when exponent_shift = 0.
double wronskian_deviation(const HgdeParams& p, const ComplexFn& f, const ComplexFn& g,
                           std::span<const Complex> samples, const OracleSettings& settings = {},
                           double exponent_shift = 0.0);

double check_wronskian(const HgdeParams& p, std::span<const Complex> samples,
                       const OracleSettings& settings = {}, double exponent_shift = 0.0);

/// |slope| of log|D0| against log|lambda| for D0 = f0/g0 near 0, which
/// should approach kappa = |1 - c|.
double check_angle_at_zero(const HgdeParams& p, const OracleSettings& settings = {});

/// Fixed sample sets used by verify_eigenspace.
std::vector<Complex> default_residual_samples();
std::vector<Complex> default_wronskian_samples();
std::vector<double> default_angle_radii();

enum class CheckStatus { Pass, Fail, Skipped };
enum class OverallStatus { Pass, Fail, Inconclusive };

std::string to_string(CheckStatus s);
std::string to_string(OverallStatus s);

struct CheckOutcome {
    std::string name;
    CheckStatus status = CheckStatus::Skipped;
    std::optional<double> observed;
    std::optional<double> expected;
    double tolerance = 0.0;
    std::string note;
    std::vector<Complex> samples;

    friend bool operator==(const CheckOutcome&, const CheckOutcome&) = default;
};

struct VerificationReport {
    ResidueVector r;
    std::vector<CheckOutcome> checks;
    OverallStatus overall = OverallStatus::Inconclusive;

    const CheckOutcome* find(std::string_view name) const;

    friend bool operator==(const VerificationReport&, const VerificationReport&) = default;
};

/// Runs the residual, Wronskian and three angle checks for an eligible
/// eigenspace, plus the Gauss-Bonnet area check when all angles were
/// measured. The angles at 1 and infinity are measured at 0 after permuting
/// the fractional parts (t_1 <-> t_2 gives mu, t_2 <-> t_3 gives nu).
VerificationReport verify_eigenspace(const EigenRecord& record, const OracleSettings& settings = {});

}  // namespace abcov::oracle
