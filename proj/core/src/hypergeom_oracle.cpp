#include "abcov/hypergeom_oracle.hpp"

#include <algorithm>
#include <cmath>
#include <numbers>

namespace abcov::oracle {

namespace {

bool is_nonpositive_integer(double x) {
    return x <= 0.0 && std::nearbyint(x) == x;
}

double relative_gap(Complex x, Complex y) {
    const double scale = std::max(std::abs(x), std::abs(y));
    return scale == 0.0 ? 0.0 : std::abs(x - y) / scale;
}

/// Least-squares slope of ys against xs.
double fit_slope(std::span<const double> xs, std::span<const double> ys) {
    const auto n = static_cast<double>(xs.size());
    double sx = 0, sy = 0;
    for (std::size_t i = 0; i < xs.size(); ++i) {
        sx += xs[i];
        sy += ys[i];
    }
    const double mx = sx / n, my = sy / n;
    double sxy = 0, sxx = 0;
    for (std::size_t i = 0; i < xs.size(); ++i) {
        sxy += (xs[i] - mx) * (ys[i] - my);
        sxx += (xs[i] - mx) * (xs[i] - mx);
    }
    return sxy / sxx;
}

bool is_logarithmic(const HgdeParams& p, const OracleSettings& settings) {
    return std::abs(p.c - 1.0) <= settings.log_case_eps;
}

HgdeParams shifted_params(const HgdeParams& p) {
    return HgdeParams(p.a + 1.0 - p.c, p.b + 1.0 - p.c, 2.0 - p.c);
}

}  // namespace

HgdeParams::HgdeParams(double a_, double b_, double c_) : a(a_), b(b_), c(c_) {
    if (!std::isfinite(a) || !std::isfinite(b) || !std::isfinite(c)) {
        throw ParameterError("hypergeometric parameters must be finite");
    }
    if (is_nonpositive_integer(c)) {
        throw ParameterError("c = " + std::to_string(c) + " is zero or a negative integer");
    }
}

HgdeParams::HgdeParams(const HgdeParamsExact& exact)
    : HgdeParams(exact.a.to_double(), exact.b.to_double(), exact.c.to_double()) {}

Complex gauss_2f1(const HgdeParams& p, Complex lambda, const SeriesOptions& opts) {
    if (is_nonpositive_integer(p.c)) throw ParameterError("c is zero or a negative integer");
    if (std::abs(lambda) > 0.5) throw DomainError("series evaluation is limited to |lambda| <= 0.5");

    Complex sum = 1.0;
    Complex term = 1.0;
    for (std::size_t n = 0; n < opts.max_terms; ++n) {
        const double k = static_cast<double>(n);
        term *= (p.a + k) * (p.b + k) / ((p.c + k) * (k + 1.0)) * lambda;
        sum += term;
        if (term == 0.0 || std::abs(term) < opts.relative_cutoff * std::abs(sum)) return sum;
    }
    throw NonConvergenceError("2F1 series did not converge within " + std::to_string(opts.max_terms) + " terms");
}

LocalBasis local_basis_at_0(const HgdeParams& p, Complex lambda, const OracleSettings& settings) {
    if (is_logarithmic(p, settings)) {
        throw LogarithmicCaseError("c = 1: local solutions at 0 involve a logarithm");
    }
    if (lambda == 0.0) throw DomainError("local basis is evaluated away from lambda = 0");
    const Complex power = std::pow(lambda, Complex(1.0 - p.c));
    return {power * gauss_2f1(shifted_params(p), lambda, settings.series), gauss_2f1(p, lambda, settings.series)};
}

Complex fd_first_derivative(const ComplexFn& f, Complex lambda, double h) {
    return (-f(lambda + 2.0 * h) + 8.0 * f(lambda + h) - 8.0 * f(lambda - h) + f(lambda - 2.0 * h)) / (12.0 * h);
}

Complex fd_second_derivative(const ComplexFn& f, Complex lambda, double h) {
    return (-f(lambda + 2.0 * h) + 16.0 * f(lambda + h) - 30.0 * f(lambda) + 16.0 * f(lambda - h) -
            f(lambda - 2.0 * h)) /
           (12.0 * h * h);
}

double hgde_residual(const HgdeParams& p, const ComplexFn& y, std::span<const Complex> samples,
                     const OracleSettings& settings) {
    double worst = 0.0;
    for (const Complex lambda : samples) {
        const double h = settings.fd_relative_step * std::abs(lambda);
        const Complex y0 = y(lambda);
        const Complex y1 = fd_first_derivative(y, lambda, h);
        const Complex y2 = fd_second_derivative(y, lambda, h);
        const Complex t2 = lambda * (lambda - 1.0) * y2;
        const Complex t1 = ((p.a + p.b + 1.0) * lambda - p.c) * y1;
        const Complex t0 = p.a * p.b * y0;
        const double scale = std::max({std::abs(t2), std::abs(t1), std::abs(t0)});
        if (scale == 0.0) continue;
        worst = std::max(worst, std::abs(t2 + t1 + t0) / scale);
    }
    return worst;
}

double check_hgde_residual(const HgdeParams& p, std::span<const Complex> samples, const OracleSettings& settings) {
    auto f0 = [&](Complex z) { return local_basis_at_0(p, z, settings).f0; };
    auto g0 = [&](Complex z) { return gauss_2f1(p, z, settings.series); };
    if (is_logarithmic(p, settings)) throw LogarithmicCaseError("c = 1: f0 is not a power series solution");
    return std::max(hgde_residual(p, f0, samples, settings), hgde_residual(p, g0, samples, settings));
}

double wronskian_deviation(const HgdeParams& p, const ComplexFn& f, const ComplexFn& g,
                           std::span<const Complex> samples, const OracleSettings& settings, double exponent_shift) {
    // (1 - lambda) instead of (lambda - 1) keeps the branch cut off [0, 1);
    // the two differ by a constant factor.
    std::vector<Complex> normalized;
    for (const Complex lambda : samples) {
        const double h = settings.fd_relative_step * std::abs(lambda);
        const Complex w = f(lambda) * fd_first_derivative(g, lambda, h) - fd_first_derivative(f, lambda, h) * g(lambda);
        normalized.push_back(w * std::pow(lambda, Complex(p.c + exponent_shift)) *
                             std::pow(1.0 - lambda, Complex(p.a + p.b + 1.0 - p.c)));
    }
    double worst = 0.0;
    for (std::size_t i = 0; i < normalized.size(); ++i) {
        for (std::size_t j = i + 1; j < normalized.size(); ++j) {
            worst = std::max(worst, relative_gap(normalized[i], normalized[j]));
        }
    }
    return worst;
}

double check_wronskian(const HgdeParams& p, std::span<const Complex> samples, const OracleSettings& settings,
                       double exponent_shift) {
    if (is_logarithmic(p, settings)) throw LogarithmicCaseError("c = 1: no power-series basis at 0");
    auto f0 = [&](Complex z) { return local_basis_at_0(p, z, settings).f0; };
    auto g0 = [&](Complex z) { return gauss_2f1(p, z, settings.series); };
    return wronskian_deviation(p, f0, g0, samples, settings, exponent_shift);
}

double check_angle_at_zero(const HgdeParams& p, const OracleSettings& settings) {
    if (is_logarithmic(p, settings)) throw LogarithmicCaseError("c = 1: corner at 0 is a cusp");
    const bool invert = (1.0 - p.c) < 0.0;
    std::vector<double> xs, ys;
    for (const double radius : default_angle_radii()) {
        const LocalBasis basis = local_basis_at_0(p, Complex(radius, 0.0), settings);
        if (basis.g0 == 0.0 || basis.f0 == 0.0) throw DomainError("sample-failure: a local solution vanishes");
        const Complex ratio = invert ? basis.g0 / basis.f0 : basis.f0 / basis.g0;
        xs.push_back(std::log(radius));
        ys.push_back(std::log(std::abs(ratio)));
    }
    return std::abs(fit_slope(xs, ys));
}

std::vector<Complex> default_residual_samples() {
    std::vector<Complex> out;
    const Complex ray = std::polar(1.0, std::numbers::pi / 3.0);
    for (int k = 1; k <= 10; ++k) out.emplace_back(0.04 * k, 0.0);
    for (int k = 1; k <= 10; ++k) out.push_back(0.04 * k * ray);
    return out;
}

std::vector<Complex> default_wronskian_samples() {
    return {Complex(0.1, 0.0), Complex(0.2, 0.0), Complex(0.3, 0.0)};
}

std::vector<double> default_angle_radii() {
    return {1e-3, std::pow(10.0, -3.5), 1e-4, std::pow(10.0, -4.5), 1e-5};
}

std::string to_string(CheckStatus s) {
    switch (s) {
        case CheckStatus::Pass: return "pass";
        case CheckStatus::Fail: return "fail";
        case CheckStatus::Skipped: return "skipped";
    }
    return "?";
}

std::string to_string(OverallStatus s) {
    switch (s) {
        case OverallStatus::Pass: return "pass";
        case OverallStatus::Fail: return "fail";
        case OverallStatus::Inconclusive: return "inconclusive (logarithmic)";
    }
    return "?";
}

const CheckOutcome* VerificationReport::find(std::string_view name) const {
    for (const auto& c : checks) {
        if (c.name == name) return &c;
    }
    return nullptr;
}

namespace {

std::vector<Complex> radii_as_samples() {
    std::vector<Complex> out;
    for (double r : default_angle_radii()) out.emplace_back(r, 0.0);
    return out;
}

/// Runs `measure` and classifies it against `tolerance`. A logarithmic case
/// is skipped; any other library error is a failed sample.
template <typename Measure>
CheckOutcome run_check(std::string name, double tolerance, std::optional<double> expected,
                       std::vector<Complex> samples, Measure&& measure) {
    CheckOutcome out;
    out.name = std::move(name);
    out.tolerance = tolerance;
    out.expected = expected;
    out.samples = std::move(samples);
    try {
        const double value = measure();
        out.observed = value;
        const double error = expected ? std::abs(value - *expected) : value;
        out.status = error <= tolerance ? CheckStatus::Pass : CheckStatus::Fail;
    } catch (const LogarithmicCaseError& e) {
        out.status = CheckStatus::Skipped;
        out.note = e.what();
    } catch (const Error& e) {
        out.status = CheckStatus::Fail;
        out.note = e.what();
    }
    return out;
}

}  // namespace

VerificationReport verify_eigenspace(const EigenRecord& record, const OracleSettings& settings) {
    if (!record.eligible || !record.angles || !record.exponent) {
        throw EligibilityError("verification needs an eligible eigenspace, got r = " + record.r.to_string());
    }
    const auto& t = record.t_components_minus_r;
    const HgdeParams main(hgde_params_from_t(t));
    const HgdeParams at_one(hgde_params_from_t({t[1], t[0], t[2], t[3]}));
    const HgdeParams at_infinity(hgde_params_from_t({t[0], t[2], t[1], t[3]}));
    const TriangleAngles& exact = *record.angles;

    VerificationReport report{record.r, {}, OverallStatus::Inconclusive};
    const auto residual_samples = default_residual_samples();
    const auto wronskian_samples = default_wronskian_samples();

    report.checks.push_back(run_check("hgde_residual", settings.residual_tol, std::nullopt, residual_samples,
                                      [&] { return check_hgde_residual(main, residual_samples, settings); }));
    report.checks.push_back(run_check("wronskian", settings.wronskian_tol, std::nullopt, wronskian_samples,
                                      [&] { return check_wronskian(main, wronskian_samples, settings); }));
    report.checks.push_back(run_check("angle_kappa", settings.angle_tol, exact.kappa.to_double(), radii_as_samples(),
                                      [&] { return check_angle_at_zero(main, settings); }));
    report.checks.push_back(run_check("angle_mu", settings.angle_tol, exact.mu.to_double(), radii_as_samples(),
                                      [&] { return check_angle_at_zero(at_one, settings); }));
    report.checks.push_back(run_check("angle_nu", settings.angle_tol, exact.nu.to_double(), radii_as_samples(),
                                      [&] { return check_angle_at_zero(at_infinity, settings); }));

    // Gauss-Bonnet: area/pi = 1 - (sum of angles/pi), which must equal the
    // exponent.
    const auto* kappa = report.find("angle_kappa");
    const auto* mu = report.find("angle_mu");
    const auto* nu = report.find("angle_nu");
    CheckOutcome area;
    area.name = "area";
    area.tolerance = settings.area_tol;
    area.expected = record.exponent->to_double();
    if (kappa->observed && mu->observed && nu->observed) {
        area.observed = 1.0 - (*kappa->observed + *mu->observed + *nu->observed);
        area.status = std::abs(*area.observed - *area.expected) <= area.tolerance ? CheckStatus::Pass : CheckStatus::Fail;
    } else {
        area.status = CheckStatus::Skipped;
        area.note = "needs all three angles";
    }
    report.checks.push_back(std::move(area));

    bool any_fail = false, any_pass = false;
    for (const auto& c : report.checks) {
        any_fail |= c.status == CheckStatus::Fail;
        any_pass |= c.status == CheckStatus::Pass;
    }
    report.overall = any_fail ? OverallStatus::Fail : any_pass ? OverallStatus::Pass : OverallStatus::Inconclusive;
    return report;
}

}  // namespace abcov::oracle
