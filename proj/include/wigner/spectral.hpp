#pragma once

#include "wigner/ensemble.hpp"

#include <cstddef>
#include <cstdint>
#include <functional>
#include <span>
#include <string>
#include <vector>

namespace wigner {

/// Eigenvalues of one sample, sorted descending (lambda_1 >= ... >= lambda_n).
struct SpectralSummary {
    std::size_t n = 0;
    std::vector<double> eigenvalues;
    std::uint64_t seed = 0;
    std::string ensemble;
};

/// Dense symmetric eigenvalues (Householder tridiagonalisation + implicit QR).
/// Throws numeric_input on non-finite entries.
SpectralSummary eigenvalues_sym(const WignerSample& matrix);

/// Test function g for linear spectral statistics: either a polynomial
/// sum_i g_i x^i, or a named analytic function with a coefficient generator
/// and a truncation order used by truncated().
class TestFunction {
public:
    enum class Kind { polynomial, analytic };

    static TestFunction polynomial(std::vector<double> coefficients);
    static TestFunction monomial(unsigned degree);
    /// Named analytic functions: "exp", "cosh", "inv_shift" (1/(2-x)).
    /// order = 0 selects the default order, which reproduces the function on
    /// [-1.1, 1.1] to 1e-8.
    static TestFunction analytic(std::string_view name, unsigned order = 0);

    Kind kind() const noexcept { return kind_; }
    const std::string& name() const noexcept { return name_; }
    unsigned truncation_order() const noexcept { return order_; }
    /// Polynomial degree for polynomials, truncation order for analytic ones.
    unsigned degree() const noexcept;

    double operator()(double x) const;
    /// g_i; for polynomials zero beyond the degree.
    double coefficient(unsigned i) const;
    /// g^{(m)}(x) = sum_{i<=m} g_i x^i as a polynomial.
    TestFunction truncated(unsigned m) const;
    /// Growth tag: "polynomial" or "entire" / "radius=<r>" for analytic ones.
    std::string growth() const;

private:
    Kind kind_ = Kind::polynomial;
    std::string name_;
    std::vector<double> coefficients_;
    unsigned order_ = 0;
};

/// Horner evaluation of sum_i c_i x^i.
double horner(std::span<const double> coefficients, double x) noexcept;
/// x^k by k left-to-right multiplications; bit-identical to horner() on a monomial.
double repeated_power(double x, unsigned k) noexcept;

/// Tr g(W) = sum_i g(lambda_i).
double lss(const SpectralSummary& summary, const TestFunction& g);
/// Tr W^k from the eigenvalues.
double trace_power(const SpectralSummary& summary, unsigned k);
/// (2 n^{2/3} (lambda_i - 1))_{i <= count}; nonincreasing. Throws range if count
/// is 0 or exceeds n.
std::vector<double> edge_statistics(const SpectralSummary& summary, std::size_t count);
/// Spectrum of -W, sorted descending; its edge statistics describe the lower
/// edge of W.
SpectralSummary reflected(const SpectralSummary& summary);
/// floor(t n^{2/3}), at least 1. Throws domain for t <= 0.
unsigned edge_trace_exponent(std::size_t n, double t);

/// sup |F_n - F_sc| of the sample's ESD against the semicircle CDF.
double semicircle_kolmogorov_distance(std::span<const double> eigenvalues);

} // namespace wigner
