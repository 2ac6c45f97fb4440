#include "wigner/stats.hpp"

#include "wigner/error.hpp"
#include "wigner/philox.hpp"

#include <algorithm>
#include <cmath>
#include <exception>
#include <numeric>

namespace wigner::stats {

namespace {

constexpr std::uint64_t kPermutationStream = 0x5045524D55544531ULL;
constexpr std::uint64_t kBootstrapStream = 0x424F4F5453545250ULL;

void require_nonempty(std::span<const double> x) {
    if (x.empty()) fail(ErrorKind::sample_size, "statistic of an empty sample");
}

} // namespace

double mean(std::span<const double> x) {
    require_nonempty(x);
    double s = 0.0;
    for (double v : x) s += v;
    return s / static_cast<double>(x.size());
}

double central_moment(std::span<const double> x, unsigned p) {
    const double m = mean(x);
    double s = 0.0;
    for (double v : x) {
        double d = 1.0;
        for (unsigned i = 0; i < p; ++i) d *= v - m;
        s += d;
    }
    return s / static_cast<double>(x.size());
}

double variance(std::span<const double> x) {
    if (x.size() < 2) fail(ErrorKind::sample_size, "variance needs at least two samples");
    const double m = mean(x);
    double s = 0.0;
    for (double v : x) s += (v - m) * (v - m);
    return s / static_cast<double>(x.size() - 1);
}

double standard_error(std::span<const double> x) {
    return std::sqrt(variance(x) / static_cast<double>(x.size()));
}

std::vector<double> centered(std::span<const double> x) {
    const double m = mean(x);
    std::vector<double> out(x.size());
    for (std::size_t i = 0; i < x.size(); ++i) out[i] = x[i] - m;
    return out;
}

double pearson(std::span<const double> x, std::span<const double> y) {
    if (x.size() != y.size()) fail(ErrorKind::input, "pearson: length mismatch");
    const double mx = mean(x), my = mean(y);
    double sxy = 0.0, sxx = 0.0, syy = 0.0;
    for (std::size_t i = 0; i < x.size(); ++i) {
        sxy += (x[i] - mx) * (y[i] - my);
        sxx += (x[i] - mx) * (x[i] - mx);
        syy += (y[i] - my) * (y[i] - my);
    }
    if (sxx == 0.0 || syy == 0.0) fail(ErrorKind::undefined_variance, "pearson: constant sample");
    return sxy / std::sqrt(sxx * syy);
}

DistanceMatrix::DistanceMatrix(std::span<const double> x) : n_(x.size()), a_(n_ * n_) {
    require_nonempty(x);
    std::vector<double> row_mean(n_, 0.0);
    double grand = 0.0;
    for (std::size_t i = 0; i < n_; ++i) {
        for (std::size_t j = 0; j < n_; ++j) {
            const double d = std::abs(x[i] - x[j]);
            a_[i * n_ + j] = d;
            row_mean[i] += d;
        }
        grand += row_mean[i];
        row_mean[i] /= static_cast<double>(n_);
    }
    grand /= static_cast<double>(n_) * static_cast<double>(n_);
    for (std::size_t i = 0; i < n_; ++i)
        for (std::size_t j = 0; j < n_; ++j) a_[i * n_ + j] += grand - row_mean[i] - row_mean[j];
}

double DistanceMatrix::self_covariance() const noexcept {
    double s = 0.0;
    for (double v : a_) s += v * v;
    return s / (static_cast<double>(n_) * static_cast<double>(n_));
}

double distance_covariance(const DistanceMatrix& a, const DistanceMatrix& b) {
    const std::size_t n = a.size();
    if (b.size() != n) fail(ErrorKind::input, "distance_covariance: size mismatch");
    double s = 0.0;
    for (std::size_t i = 0; i < n; ++i) {
        double row = 0.0;
        for (std::size_t j = 0; j < n; ++j) row += a(i, j) * b(i, j);
        s += row;
    }
    return s / (static_cast<double>(n) * static_cast<double>(n));
}

double distance_covariance(const DistanceMatrix& a, std::span<const double> y) {
    const std::size_t n = a.size();
    if (y.size() != n) fail(ErrorKind::input, "distance_covariance: size mismatch");
    double s = 0.0;
    for (std::size_t i = 0; i < n; ++i) {
        double row = 0.0;
        const double yi = y[i];
        for (std::size_t j = 0; j < n; ++j) row += a(i, j) * std::abs(yi - y[j]);
        s += row;
    }
    return s / (static_cast<double>(n) * static_cast<double>(n));
}

double distance_correlation(std::span<const double> x, std::span<const double> y) {
    if (x.size() != y.size()) fail(ErrorKind::input, "distance_correlation: length mismatch");
    const DistanceMatrix a(x), b(y);
    const double vx = a.self_covariance(), vy = b.self_covariance();
    if (vx == 0.0 || vy == 0.0) fail(ErrorKind::undefined_variance, "distance_correlation: constant sample");
    return std::sqrt(std::max(0.0, distance_covariance(a, b)) / std::sqrt(vx * vy));
}

double ks_two_sample(std::span<const double> x, std::span<const double> y) {
    require_nonempty(x);
    require_nonempty(y);
    std::vector<double> a(x.begin(), x.end()), b(y.begin(), y.end());
    std::sort(a.begin(), a.end());
    std::sort(b.begin(), b.end());
    const double na = static_cast<double>(a.size()), nb = static_cast<double>(b.size());
    std::size_t i = 0, j = 0;
    double d = 0.0;
    while (i < a.size() && j < b.size()) {
        const double v = std::min(a[i], b[j]);
        while (i < a.size() && a[i] == v) ++i;
        while (j < b.size() && b[j] == v) ++j;
        d = std::max(d, std::abs(static_cast<double>(i) / na - static_cast<double>(j) / nb));
    }
    return d;
}

std::vector<std::size_t> permutation(std::size_t n, std::uint64_t seed, std::uint64_t index) {
    std::vector<std::size_t> p(n);
    std::iota(p.begin(), p.end(), std::size_t{0});
    PhiloxStream rng(seed, kPermutationStream, index);
    for (std::size_t i = n; i > 1; --i) std::swap(p[i - 1], p[rng.below(i)]);
    return p;
}

double bootstrap_stderr(std::size_t n, std::size_t resamples, std::uint64_t seed,
                        const std::function<double(std::span<const std::size_t>)>& statistic) {
    if (n == 0 || resamples < 2) fail(ErrorKind::sample_size, "bootstrap needs data and two resamples");
    std::vector<double> values(resamples);
    std::exception_ptr error;
#pragma omp parallel for schedule(dynamic, 1)
    for (std::int64_t b = 0; b < static_cast<std::int64_t>(resamples); ++b) {
        try {
            PhiloxStream rng(seed, kBootstrapStream, static_cast<std::uint64_t>(b));
            std::vector<std::size_t> idx(n);
            for (auto& i : idx) i = rng.below(n);
            values[static_cast<std::size_t>(b)] = statistic(idx);
        } catch (...) {
#pragma omp critical(wigner_bootstrap_error)
            if (!error) error = std::current_exception();
        }
    }
    if (error) std::rethrow_exception(error);
    return std::sqrt(variance(values));
}

} // namespace wigner::stats
