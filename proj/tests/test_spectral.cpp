#include "support.hpp"

#include "wigner/ensemble.hpp"
#include "wigner/spectral.hpp"

#include <algorithm>
#include <limits>

using namespace wigner;
using testing::close;

namespace {

SpectralSummary summary_of(std::vector<double> eigenvalues) {
    SpectralSummary s;
    s.n = eigenvalues.size();
    std::sort(eigenvalues.rbegin(), eigenvalues.rend());
    s.eigenvalues = std::move(eigenvalues);
    return s;
}

// Q diag(lambda) Q^T with Q a product of three Householder reflections.
WignerSample with_spectrum(const std::vector<double>& lambda, std::uint64_t seed) {
    const std::size_t n = lambda.size();
    std::vector<double> a(n * n, 0.0);
    for (std::size_t i = 0; i < n; ++i) a[i * n + i] = lambda[i];
    PhiloxStream rng(seed, 0);
    for (int r = 0; r < 3; ++r) {
        const auto v = testing::standard_normals(rng, n);
        double vv = 0.0;
        for (double x : v) vv += x * x;
        // A <- H A H with H = I - 2 v v^T / v^T v
        std::vector<double> av(n, 0.0);
        for (std::size_t i = 0; i < n; ++i)
            for (std::size_t j = 0; j < n; ++j) av[i] += a[i * n + j] * v[j];
        double vav = 0.0;
        for (std::size_t i = 0; i < n; ++i) vav += v[i] * av[i];
        const double c = 2.0 / vv;
        for (std::size_t i = 0; i < n; ++i)
            for (std::size_t j = 0; j < n; ++j)
                a[i * n + j] += -c * av[i] * v[j] - c * v[i] * av[j] + c * c * vav * v[i] * v[j];
    }
    for (std::size_t i = 0; i < n; ++i)
        for (std::size_t j = i + 1; j < n; ++j) a[j * n + i] = a[i * n + j];
    return WignerSample::from_entries(n, std::move(a));
}

} // namespace

TEST_SUITE("spectral") {

TEST_CASE("closed-form spectra") {
    const double a = 0.3, b = -0.7;
    const auto s = eigenvalues_sym(WignerSample::from_entries(2, {a, b, b, a}));
    CHECK(close(s.eigenvalues[0], a + std::abs(b), 1e-15));
    CHECK(close(s.eigenvalues[1], a - std::abs(b), 1e-15));
    CHECK(close(trace_power(s, 2), 2 * a * a + 2 * b * b, 1e-15));

    const auto d = eigenvalues_sym(WignerSample::from_entries(3, {3, 0, 0, 0, 1, 0, 0, 0, 2}));
    CHECK(d.eigenvalues == std::vector<double>{3, 2, 1});
    CHECK(lss(d, TestFunction::monomial(1)) == 6.0);
}

TEST_CASE("recovers a known spectral decomposition") {
    PhiloxStream rng(8, 8);
    for (std::size_t n : {5, 20, 60}) {
        std::vector<double> lambda(n);
        for (auto& l : lambda) l = 20.0 * rng.uniform() - 10.0;
        lambda[1] = lambda[0]; // a repeated eigenvalue
        const auto s = eigenvalues_sym(with_spectrum(lambda, n));
        std::sort(lambda.rbegin(), lambda.rend());
        for (std::size_t i = 0; i < n; ++i)
            CHECK(std::abs(s.eigenvalues[i] - lambda[i]) <= 1e-10 * std::max(1.0, std::abs(lambda[i])));
    }
}

TEST_CASE("eigenvalue sum matches the trace") {
    const auto dist = EntryDistribution::from_name("gaussian");
    for (std::uint64_t seed = 0; seed < 10; ++seed) {
        const auto w = sample_wigner(10, dist, seed);
        double trace = 0.0, frob = 0.0;
        for (std::size_t i = 0; i < 10; ++i) trace += w(i, i);
        for (double e : w.entries) frob += e * e;
        const auto s = eigenvalues_sym(w);
        CHECK(s.eigenvalues.size() == 10);
        CHECK(std::is_sorted(s.eigenvalues.rbegin(), s.eigenvalues.rend()));
        CHECK(close(trace_power(s, 1), trace, 1e-9));
        CHECK(close(trace_power(s, 2), frob, 1e-8 * 10));
    }
}

TEST_CASE("non-finite entries are rejected") {
    const double nan = std::numeric_limits<double>::quiet_NaN();
    CHECK_ERROR_KIND(eigenvalues_sym(WignerSample::from_entries(2, {1, nan, nan, 1})), ErrorKind::numeric_input);
}

TEST_CASE("linear spectral statistics") {
    const auto s = eigenvalues_sym(sample_wigner(7, EntryDistribution::from_name("uniform"), 3));
    CHECK(lss(s, TestFunction::polynomial({1.0})) == 7.0);
    CHECK(trace_power(s, 0) == 7.0);
    const auto big = eigenvalues_sym(sample_wigner(80, EntryDistribution::from_name("gaussian"), 3));
    for (unsigned k = 0; k <= 10; ++k) CHECK(lss(big, TestFunction::monomial(k)) == trace_power(big, k));
}

TEST_CASE("polynomial evaluation matches Horner recomputation") {
    const std::vector<double> c{0.5, -1.25, 3.0, 0.0, 2.5};
    const auto g = TestFunction::polynomial(c);
    for (double x : {-1.1, -0.2, 0.0, 0.7, 1.3}) {
        double h = 0.0;
        for (auto it = c.rbegin(); it != c.rend(); ++it) h = h * x + *it;
        CHECK(g(x) == h);
    }
    CHECK(g.degree() == 4);
    const auto t = g.truncated(2);
    CHECK(t(2.0) == 0.5 - 2.5 + 12.0);
}

TEST_CASE("analytic functions are reproduced by their coefficients") {
    for (const char* name : {"exp", "cosh", "inv_shift"}) {
        const auto g = TestFunction::analytic(name);
        const auto poly = g.truncated(g.truncation_order());
        for (int i = 0; i <= 220; ++i) {
            const double x = -1.1 + 0.01 * i;
            CAPTURE(name);
            CAPTURE(x);
            CHECK(std::abs(g(x) - poly(x)) <= 1e-8);
        }
    }
    CHECK(TestFunction::analytic("exp").growth() == "entire");
    CHECK(TestFunction::monomial(3).growth() == "polynomial");
    CHECK_ERROR_KIND(TestFunction::analytic("gamma"), ErrorKind::config);
}

TEST_CASE("mean of Tr W^2 is n/4") {
    const auto dist = EntryDistribution::from_name("gaussian");
    std::vector<double> v;
    for (std::uint64_t r = 0; r < 500; ++r) v.push_back(trace_power(eigenvalues_sym(sample_wigner(40, dist, r)), 2));
    double m = 0.0, m2 = 0.0;
    for (double x : v) m += x;
    m /= v.size();
    for (double x : v) m2 += (x - m) * (x - m);
    const double se = std::sqrt(m2 / (v.size() - 1) / v.size());
    CHECK(std::abs(m - 10.0) <= 5.0 * se);
}

TEST_CASE("edge statistics") {
    std::vector<double> e(64, 0.0);
    e[0] = 1.0;
    CHECK(edge_statistics(summary_of(e), 1)[0] == 0.0);
    e[0] = 1.05;
    CHECK(close(edge_statistics(summary_of(e), 1)[0], 1.6, 1e-12));
    CHECK_ERROR_KIND(edge_statistics(summary_of(e), 65), ErrorKind::range);
    CHECK_ERROR_KIND(edge_statistics(summary_of(e), 0), ErrorKind::range);

    const auto s = eigenvalues_sym(sample_wigner(100, EntryDistribution::from_name("rademacher"), 5));
    const auto top = edge_statistics(s, 10);
    CHECK(std::is_sorted(top.rbegin(), top.rend()));
    const auto low = edge_statistics(reflected(s), 1);
    CHECK(close(low[0], 2.0 * std::cbrt(100.0 * 100.0) * (-s.eigenvalues.back() - 1.0), 1e-12));
}

TEST_CASE("edge trace exponent") {
    CHECK(edge_trace_exponent(64, 1.0) == 16);
    CHECK(edge_trace_exponent(1000, 0.5) == 50);
    CHECK(edge_trace_exponent(1, 0.1) == 1);
    CHECK(edge_trace_exponent(400, 1.0) == 54);
    CHECK_ERROR_KIND(edge_trace_exponent(64, 0.0), ErrorKind::domain);
    CHECK_ERROR_KIND(edge_trace_exponent(64, -1.0), ErrorKind::domain);
}

TEST_CASE("n = 1000 spectra: semicircle fit and edge location") {
    for (const char* name : {"gaussian", "rademacher", "uniform"}) {
        const auto s = eigenvalues_sym(sample_wigner(1000, EntryDistribution::from_name(name), 11));
        CAPTURE(name);
        CHECK(s.eigenvalues.front() >= 0.9);
        CHECK(s.eigenvalues.front() <= 1.2);
        if (std::string(name) == "gaussian") CHECK(semicircle_kolmogorov_distance(s.eigenvalues) <= 0.05);
    }
}

}
