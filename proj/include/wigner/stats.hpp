#pragma once

#include <cstddef>
#include <cstdint>
#include <functional>
#include <span>
#include <vector>

namespace wigner::stats {

double mean(std::span<const double> x);
/// Population (1/N) central moment of order p.
double central_moment(std::span<const double> x, unsigned p);
/// Unbiased (1/(N-1)) sample variance.
double variance(std::span<const double> x);
double standard_error(std::span<const double> x);

/// x_i - mean(x).
std::vector<double> centered(std::span<const double> x);

double pearson(std::span<const double> x, std::span<const double> y);

/// Squared-distance-covariance V-statistic (Szekely, Rizzo & Bakirov 2007)
/// reduced to its double-centred distance matrix.
class DistanceMatrix {
public:
    explicit DistanceMatrix(std::span<const double> x);
    std::size_t size() const noexcept { return n_; }
    double operator()(std::size_t i, std::size_t j) const noexcept { return a_[i * n_ + j]; }
    /// (1/N^2) sum_ij A_ij A_ij.
    double self_covariance() const noexcept;

private:
    std::size_t n_;
    std::vector<double> a_;
};

/// (1/N^2) sum_ij A_ij B_ij.
double distance_covariance(const DistanceMatrix& a, const DistanceMatrix& b);
/// Same value with B built from y: rows and columns of A sum to zero, so the
/// centring of B drops out and (1/N^2) sum_ij A_ij |y_i - y_j| suffices.
double distance_covariance(const DistanceMatrix& a, std::span<const double> y);
double distance_correlation(std::span<const double> x, std::span<const double> y);

/// Two-sample Kolmogorov-Smirnov statistic sup |F_x - F_y|.
double ks_two_sample(std::span<const double> x, std::span<const double> y);

/// Fisher-Yates permutation of 0..n-1 from a seeded Philox stream.
std::vector<std::size_t> permutation(std::size_t n, std::uint64_t seed, std::uint64_t index);

/// Bootstrap standard deviation of statistic(indices) over `resamples`
/// resamples of 0..n-1 with replacement; resample b uses Philox stream
/// (seed, b). Parallel over resamples; reduction in resample order.
double bootstrap_stderr(std::size_t n, std::size_t resamples, std::uint64_t seed,
                        const std::function<double(std::span<const std::size_t>)>& statistic);

} // namespace wigner::stats
