#include "wigner/spectral.hpp"

#include "wigner/error.hpp"

#include <Eigen/Eigenvalues>

#include <algorithm>
#include <cmath>
#include <functional>

namespace wigner {

SpectralSummary eigenvalues_sym(const WignerSample& matrix) {
    const auto n = static_cast<Eigen::Index>(matrix.n);
    if (n == 0 || matrix.entries.size() != matrix.n * matrix.n)
        fail(ErrorKind::invalid_dimension, "eigenvalues_sym: malformed matrix");
    for (double v : matrix.entries)
        if (!std::isfinite(v)) fail(ErrorKind::numeric_input, "eigenvalues_sym: non-finite entry");

    const Eigen::Map<const Eigen::MatrixXd> a(matrix.entries.data(), n, n);
    Eigen::SelfAdjointEigenSolver<Eigen::MatrixXd> solver(a, Eigen::EigenvaluesOnly);
    if (solver.info() != Eigen::Success)
        fail(ErrorKind::numeric_input, "eigenvalues_sym: QR iteration did not converge");

    SpectralSummary out{matrix.n, {}, matrix.seed, matrix.ensemble};
    const auto& values = solver.eigenvalues(); // ascending
    out.eigenvalues.assign(values.data(), values.data() + n);
    std::reverse(out.eigenvalues.begin(), out.eigenvalues.end());
    return out;
}

double horner(std::span<const double> coefficients, double x) noexcept {
    if (coefficients.empty()) return 0.0;
    double acc = coefficients.back();
    for (std::size_t i = coefficients.size() - 1; i-- > 0;) acc = acc * x + coefficients[i];
    return acc;
}

double repeated_power(double x, unsigned k) noexcept {
    if (k == 0) return 1.0;
    double acc = x;
    for (unsigned i = 1; i < k; ++i) acc *= x;
    return acc;
}

namespace {

struct AnalyticSpec {
    std::string_view name;
    std::function<double(double)> value;
    std::function<double(unsigned)> coefficient;
    unsigned default_order;
    const char* growth;
};

double inverse_factorial(unsigned i) {
    double v = 1.0;
    for (unsigned j = 2; j <= i; ++j) v /= static_cast<double>(j);
    return v;
}

const AnalyticSpec* find_analytic(std::string_view name) {
    static const AnalyticSpec specs[] = {
        {"exp", [](double x) { return std::exp(x); }, inverse_factorial, 14, "entire"},
        {"cosh", [](double x) { return std::cosh(x); },
         [](unsigned i) { return i % 2 == 0 ? inverse_factorial(i) : 0.0; }, 14, "entire"},
        {"inv_shift", [](double x) { return 1.0 / (2.0 - x); },
         [](unsigned i) { return std::ldexp(1.0, -static_cast<int>(i) - 1); }, 34, "radius=2"},
    };
    for (const auto& s : specs)
        if (s.name == name) return &s;
    return nullptr;
}

// n^{2/3}, snapped to the integer when n is a perfect cube so that floors
// such as [t n^{2/3}] are not off by one.
double n_two_thirds(std::size_t n) {
    const double nd = static_cast<double>(n);
    const double v = std::cbrt(nd * nd);
    const double r = std::round(v);
    return std::abs(v - r) < 1e-9 * r ? r : v;
}

} // namespace

TestFunction TestFunction::polynomial(std::vector<double> coefficients) {
    if (coefficients.empty()) fail(ErrorKind::input, "polynomial needs at least one coefficient");
    TestFunction g;
    g.kind_ = Kind::polynomial;
    g.name_ = "poly" + std::to_string(coefficients.size() - 1);
    g.coefficients_ = std::move(coefficients);
    return g;
}

TestFunction TestFunction::monomial(unsigned degree) {
    std::vector<double> c(degree + 1, 0.0);
    c.back() = 1.0;
    auto g = polynomial(std::move(c));
    g.name_ = "x" + std::to_string(degree);
    return g;
}

TestFunction TestFunction::analytic(std::string_view name, unsigned order) {
    const auto* spec = find_analytic(name);
    if (spec == nullptr) fail(ErrorKind::config, "unknown analytic function '" + std::string(name) + "'");
    TestFunction g;
    g.kind_ = Kind::analytic;
    g.name_ = std::string(name);
    g.order_ = order == 0 ? spec->default_order : order;
    g.coefficients_.resize(g.order_ + 1);
    for (unsigned i = 0; i <= g.order_; ++i) g.coefficients_[i] = spec->coefficient(i);
    return g;
}

unsigned TestFunction::degree() const noexcept {
    return static_cast<unsigned>(coefficients_.size() - 1);
}

double TestFunction::operator()(double x) const {
    if (kind_ == Kind::analytic) return find_analytic(name_)->value(x);
    return horner(coefficients_, x);
}

double TestFunction::coefficient(unsigned i) const {
    if (kind_ == Kind::analytic) return find_analytic(name_)->coefficient(i);
    return i < coefficients_.size() ? coefficients_[i] : 0.0;
}

TestFunction TestFunction::truncated(unsigned m) const {
    std::vector<double> c;
    if (kind_ == Kind::polynomial) {
        c.assign(coefficients_.begin(),
                 coefficients_.begin() + std::min<std::size_t>(m + 1, coefficients_.size()));
    } else {
        c.resize(m + 1);
        for (unsigned i = 0; i <= m; ++i) c[i] = coefficient(i);
    }
    auto g = polynomial(std::move(c));
    g.name_ = name_ + "@" + std::to_string(m);
    return g;
}

std::string TestFunction::growth() const {
    if (kind_ == Kind::polynomial) return "polynomial";
    return find_analytic(name_)->growth;
}

double lss(const SpectralSummary& summary, const TestFunction& g) {
    double sum = 0.0;
    for (double lambda : summary.eigenvalues) sum += g(lambda);
    return sum;
}

double trace_power(const SpectralSummary& summary, unsigned k) {
    double sum = 0.0;
    for (double lambda : summary.eigenvalues) sum += repeated_power(lambda, k);
    return sum;
}

std::vector<double> edge_statistics(const SpectralSummary& summary, std::size_t count) {
    if (count == 0 || count > summary.n || count > summary.eigenvalues.size())
        fail(ErrorKind::range, "edge_statistics: count must lie in [1, n]");
    const double scale = 2.0 * n_two_thirds(summary.n);
    std::vector<double> s(count);
    for (std::size_t i = 0; i < count; ++i) s[i] = scale * (summary.eigenvalues[i] - 1.0);
    return s;
}

SpectralSummary reflected(const SpectralSummary& summary) {
    SpectralSummary out = summary;
    std::reverse(out.eigenvalues.begin(), out.eigenvalues.end());
    for (double& v : out.eigenvalues) v = -v;
    return out;
}

unsigned edge_trace_exponent(std::size_t n, double t) {
    if (n == 0) fail(ErrorKind::invalid_dimension, "edge_trace_exponent: n must be at least 1");
    if (!(t > 0.0) || !std::isfinite(t)) fail(ErrorKind::domain, "edge_trace_exponent: t must be positive");
    const double k = std::floor(t * n_two_thirds(n));
    if (k > 4.0e9) fail(ErrorKind::capacity, "edge_trace_exponent: exponent overflow");
    return std::max(1u, static_cast<unsigned>(k));
}

double semicircle_kolmogorov_distance(std::span<const double> eigenvalues) {
    std::vector<double> sorted(eigenvalues.begin(), eigenvalues.end());
    std::sort(sorted.begin(), sorted.end());
    const double m = static_cast<double>(sorted.size());
    double d = 0.0;
    for (std::size_t i = 0; i < sorted.size(); ++i) {
        const double f = semicircle_cdf(sorted[i]);
        d = std::max({d, std::abs(f - static_cast<double>(i) / m),
                      std::abs(static_cast<double>(i + 1) / m - f)});
    }
    return d;
}

} // namespace wigner
