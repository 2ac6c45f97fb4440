#include "support.hpp"

#include "wigner/harness.hpp"
#include "wigner/stats.hpp"

#include <algorithm>
#include <numeric>

using namespace wigner;
using testing::close;

TEST_SUITE("stats") {

TEST_CASE("basic moments") {
    const std::vector<double> x{1, 2, 3, 4};
    CHECK(stats::mean(x) == 2.5);
    CHECK(stats::variance(x) == doctest::Approx(5.0 / 3.0));
    CHECK(stats::central_moment(x, 2) == 1.25);
    CHECK(stats::central_moment(x, 3) == 0.0);
    CHECK(stats::centered(x) == std::vector<double>{-1.5, -0.5, 0.5, 1.5});
    CHECK_ERROR_KIND(stats::mean(std::vector<double>{}), ErrorKind::sample_size);
    CHECK_ERROR_KIND(stats::variance(std::vector<double>{1.0}), ErrorKind::sample_size);
}

TEST_CASE("pearson") {
    const std::vector<double> x{1, 2, 3, 5}, y{2, 4, 6, 10}, z{-1, -2, -3, -5};
    CHECK(stats::pearson(x, y) == doctest::Approx(1.0));
    CHECK(stats::pearson(x, z) == doctest::Approx(-1.0));
    CHECK_ERROR_KIND(stats::pearson(x, std::vector<double>{1, 1, 1, 1}), ErrorKind::undefined_variance);
    CHECK_ERROR_KIND(stats::pearson(x, std::vector<double>{1, 2}), ErrorKind::input);
}

TEST_CASE("distance covariance from raw samples equals the matrix form") {
    PhiloxStream rng(4, 4);
    const auto x = testing::standard_normals(rng, 300);
    auto y = testing::standard_normals(rng, 300);
    for (std::size_t i = 0; i < y.size(); ++i) y[i] += 0.5 * x[i] * x[i];
    const stats::DistanceMatrix a(x), b(y);
    CHECK(close(stats::distance_covariance(a, b), stats::distance_covariance(a, y), 1e-12));
    CHECK(stats::distance_correlation(x, x) == doctest::Approx(1.0));
    const double dep = stats::distance_correlation(x, y);
    const auto w = testing::standard_normals(rng, 300);
    CHECK(dep > stats::distance_correlation(x, w));
}

TEST_CASE("two-sample KS") {
    const std::vector<double> a{1, 2, 3}, b{4, 5, 6};
    CHECK(stats::ks_two_sample(a, a) == 0.0);
    CHECK(stats::ks_two_sample(a, b) == 1.0);
    CHECK(stats::ks_two_sample(std::vector<double>{1, 2, 3, 4}, std::vector<double>{3, 4}) == 0.5);
}

TEST_CASE("seeded permutations") {
    const auto p = stats::permutation(100, 9, 3);
    auto sorted = p;
    std::sort(sorted.begin(), sorted.end());
    std::vector<std::size_t> iota(100);
    std::iota(iota.begin(), iota.end(), 0);
    CHECK(sorted == iota);
    CHECK(p == stats::permutation(100, 9, 3));
    CHECK(p != stats::permutation(100, 9, 4));
}

TEST_CASE("bootstrap standard error of a mean") {
    PhiloxStream rng(5, 5);
    const auto x = testing::standard_normals(rng, 1000);
    const double se = stats::bootstrap_stderr(x.size(), 400, 1, [&](std::span<const std::size_t> idx) {
        double s = 0.0;
        for (auto i : idx) s += x[i];
        return s / idx.size();
    });
    CHECK(std::abs(se - stats::standard_error(x)) <= 0.15 * stats::standard_error(x));
}

TEST_CASE("independence test: perfect dependence and errors") {
    PhiloxStream rng(6, 6);
    const auto x = testing::standard_normals(rng, 200);
    const auto r = independence_test(x, x);
    CHECK(r.pearson == doctest::Approx(1.0));
    CHECK(r.p_value <= 1.0 / 501.0);
    CHECK_ERROR_KIND(independence_test(x, std::vector<double>(199, 1.0)), ErrorKind::input);
    const std::vector<double> small(50, 1.0);
    CHECK_ERROR_KIND(independence_test(small, small), ErrorKind::sample_size);
}

TEST_CASE("sample correlation of independent normals") {
    int outside = 0;
    for (std::uint64_t trial = 0; trial < 200; ++trial) {
        PhiloxStream rng(trial, 7);
        const auto x = testing::standard_normals(rng, 2000), y = testing::standard_normals(rng, 2000);
        outside += std::abs(stats::pearson(x, y)) > 3.0 / std::sqrt(2000.0);
    }
    CHECK(outside <= 2); // at least 99% within
}

TEST_CASE("independence p-values are uniform under the null") {
    int below = 0;
    const int trials = 1000;
    for (int trial = 0; trial < trials; ++trial) {
        PhiloxStream rng(static_cast<std::uint64_t>(trial), 8);
        const auto x = testing::standard_normals(rng, 100), y = testing::standard_normals(rng, 100);
        below += independence_test(x, y, {500, static_cast<std::uint64_t>(trial)}).p_value < 0.05;
    }
    const double fraction = static_cast<double>(below) / trials;
    CHECK(std::abs(fraction - 0.05) <= 0.02);
}

TEST_CASE("gaussianity of exact normal samples") {
    PhiloxStream rng(9, 9);
    const auto z = testing::standard_normals(rng, 5000);
    const auto g = gaussianity_check({z});
    CHECK(std::abs(g.skewness[0]) <= 0.15);
    CHECK(std::abs(g.excess_kurtosis[0]) <= 0.3);

    const auto a = testing::standard_normals(rng, 5000), b = testing::standard_normals(rng, 5000);
    std::vector<double> c(5000);
    for (std::size_t i = 0; i < c.size(); ++i) c[i] = 0.6 * a[i] + 0.8 * b[i];
    const auto v = gaussianity_check({a, b, c});
    CHECK(v.wick_gap <= 4.0 * v.wick_stderr);

    // a skewed input fails the moment checks
    std::vector<double> e(5000);
    for (std::size_t i = 0; i < e.size(); ++i) e[i] = z[i] * z[i];
    CHECK(gaussianity_check({e}).skewness[0] > 1.0);

    CHECK_ERROR_KIND(gaussianity_check({std::vector<double>(600, 2.0)}), ErrorKind::undefined_variance);
    CHECK_ERROR_KIND(gaussianity_check({std::vector<double>(100, 2.0)}), ErrorKind::sample_size);
}

}
