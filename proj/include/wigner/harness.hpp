#pragma once

#include "wigner/moments.hpp"
#include "wigner/spectral.hpp"

#include <array>
#include <cstddef>
#include <cstdint>
#include <map>
#include <optional>
#include <span>
#include <string>
#include <string_view>
#include <vector>

namespace wigner {

/// A test function recorded per replica. For every truncation order i the
/// record also carries Tr g^{(i)}(W) under "<name>@<i>".
struct FunctionSpec {
    std::string name;
    TestFunction g;
    std::vector<unsigned> orders;
};

struct ExperimentConfig {
    std::string ensemble = "gaussian";
    std::vector<std::size_t> dimensions;
    std::size_t replicas = 0;
    std::uint64_t seed = 0;
    std::vector<FunctionSpec> functions;
    std::vector<unsigned> powers;
    std::vector<double> edge_times;
    std::size_t edge_count = 1;
    std::vector<std::string> checks;
    /// 0 uses the OpenMP default team size.
    int workers = 0;
    /// Keep eigenvalues in memory (never serialised); needed by the ESD check.
    bool keep_eigenvalues = false;

    /// Throws config naming the offending key.
    void validate() const;
    /// Exponents recorded per replica at dimension n: the powers plus
    /// k, 2k, 2k+1 for every k = [t n^{2/3}].
    std::vector<unsigned> recorded_exponents(std::size_t n) const;
};

/// Check names accepted in ExperimentConfig::checks.
inline constexpr std::array<std::string_view, 7> kKnownChecks = {
    "semicircle", "moments", "edge_boundedness", "factorization",
    "independence", "gaussianity", "truncation"};

inline constexpr std::size_t kMaxDimension = 4096;
inline constexpr std::size_t kMaxReplicas = 1'000'000;
inline constexpr std::size_t kMaxKeptEigenvalues = 50'000'000;

struct RunRecord {
    std::size_t replica = 0;
    std::size_t n = 0;
    std::uint64_t seed = 0;
    /// FNV-1a 64 over the IEEE-754 bytes of the sorted eigenvalues.
    std::string eigen_digest;
    std::map<std::string, double> lss;
    std::map<unsigned, double> trace_powers;
    std::vector<double> edge;
    std::vector<double> eigenvalues;

    double trace(unsigned k) const;
    double statistic(const std::string& name) const;
};

std::string eigen_digest(std::span<const double> eigenvalues);

/// Fills every recorded statistic of one replica from its spectrum.
RunRecord summarize_replica(const ExperimentConfig& config, std::size_t replica,
                            const SpectralSummary& summary);

/// One replica: seed = replica_seed(config.seed, n, replica).
RunRecord run_replica(const ExperimentConfig& config, const EntryDistribution& dist,
                      std::size_t n, std::size_t replica);

/// All replicas for one dimension, parallel over replicas, returned in
/// replica order.
std::vector<RunRecord> run_dimension(const ExperimentConfig& config, std::size_t n);

/// Every dimension in config order. Throws capacity before any work when a
/// resource cap would be exceeded.
std::vector<RunRecord> run_monte_carlo(const ExperimentConfig& config);

void check_capacity(const ExperimentConfig& config);

/// Records with the given n, in their original order.
std::vector<RunRecord> records_for(std::span<const RunRecord> records, std::size_t n);

// ---------------------------------------------------------------------------
// Estimators

struct FactorizationOptions {
    std::size_t bootstrap = 200;
    std::uint64_t seed = 0;
    /// Used for exact centring when n <= 4 and the oracle budget allows.
    std::optional<MomentTable> exact_table;
};

struct Factorization {
    double joint = 0.0;
    double product = 0.0;
    double gap = 0.0;
    double std_error = 0.0;
    bool exact_centering = false;
};

inline constexpr std::size_t kMinFactorizationRecords = 100;

/// joint   = mean_r prod_i (Tr W^{m_i} - c_i) prod_j (Tr W^{k_j} - c'_j),
/// product = mean_r prod_i (...) * mean_r prod_j (...), k_j = [t_j n^{2/3}],
/// gap = joint - product, stderr from a bootstrap over replicas. Centring c
/// is the replica mean, or the exact expectation when exact centring applies.
/// All records must share n.
Factorization estimate_joint_factorization(std::span<const RunRecord> records,
                                           std::span<const unsigned> m_list,
                                           std::span<const double> t_list,
                                           const FactorizationOptions& options = {});

/// Joint from the first half of the records, product from the second half.
Factorization estimate_joint_factorization_split(std::span<const RunRecord> records,
                                                 std::span<const unsigned> m_list,
                                                 std::span<const double> t_list,
                                                 const FactorizationOptions& options = {});

struct IndependenceOptions {
    std::size_t permutations = 500;
    std::uint64_t seed = 0;
};

struct Independence {
    double pearson = 0.0;
    double dcor = 0.0;
    /// (1 + #{perm : dCov >= observed}) / (1 + permutations)
    double p_value = 1.0;
};

inline constexpr std::size_t kMinIndependenceSamples = 100;

Independence independence_test(std::span<const double> x, std::span<const double> y,
                               const IndependenceOptions& options = {});

struct GaussianityOptions {
    std::size_t bootstrap = 200;
    std::uint64_t seed = 0;
};

struct Gaussianity {
    std::vector<double> skewness;
    std::vector<double> excess_kurtosis;
    /// max over a <= b <= c <= d of |E Z_aZ_bZ_cZ_d - (C_ab C_cd + C_ac C_bd + C_ad C_bc)|
    double wick_gap = 0.0;
    /// Bootstrap SD of the signed gap at the maximising 4-tuple.
    double wick_stderr = 0.0;
    std::array<std::size_t, 4> wick_tuple{};
};

inline constexpr std::size_t kMinGaussianitySamples = 500;

/// `components` holds one sample vector per coordinate (all equal length).
Gaussianity gaussianity_check(const std::vector<std::vector<double>>& components,
                              const GaussianityOptions& options = {});

struct TruncationPoint {
    unsigned order = 0;
    double variance = 0.0;
    double std_error = 0.0;
};

/// Var[Tr g(W) - Tr g^{(i)}(W)] from records carrying "<name>" and "<name>@i".
std::vector<TruncationPoint> truncation_variance(std::span<const RunRecord> records,
                                                 const std::string& name,
                                                 std::span<const unsigned> orders,
                                                 std::size_t bootstrap = 200,
                                                 std::uint64_t seed = 0);

std::vector<TruncationPoint> truncation_variance_scan(const TestFunction& g,
                                                      std::span<const unsigned> orders,
                                                      std::size_t n, std::size_t replicas,
                                                      const std::string& ensemble = "gaussian",
                                                      std::uint64_t seed = 1, int workers = 0);

struct EdgeBoundednessRow {
    std::size_t n = 0;
    unsigned k = 0;
    double even_mean = 0.0;
    double even_stderr = 0.0;
    double odd_mean = 0.0;
    double odd_stderr = 0.0;
};

/// Means of Tr W^{2k} and Tr W^{2k+1}, k = [t n^{2/3}], over records sharing n.
EdgeBoundednessRow edge_boundedness(std::span<const RunRecord> records, double t);

std::vector<EdgeBoundednessRow> edge_boundedness_scan(double t, std::span<const std::size_t> n_list,
                                                      std::size_t replicas,
                                                      const std::string& ensemble = "gaussian",
                                                      std::uint64_t seed = 1, int workers = 0);

/// Two-sample KS distance between the s_1 samples of two record sets.
double edge_distribution_distance(std::span<const RunRecord> a, std::span<const RunRecord> b);

inline constexpr std::size_t kMinEdgeCompareReplicas = 500;

double edge_distribution_compare(const std::string& ensemble_a, const std::string& ensemble_b,
                                 std::size_t n, std::size_t replicas, std::uint64_t seed_a,
                                 std::uint64_t seed_b, int workers = 0);

/// Kolmogorov distance of the pooled ESD of all kept eigenvalues.
double pooled_semicircle_distance(std::span<const RunRecord> records);

} // namespace wigner
