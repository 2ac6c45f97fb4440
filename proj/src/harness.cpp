#include "wigner/harness.hpp"

#include "wigner/error.hpp"
#include "wigner/philox.hpp"
#include "wigner/stats.hpp"

#include <omp.h>

#include <algorithm>
#include <bit>
#include <cmath>
#include <cstring>
#include <exception>
#include <set>

namespace wigner {

namespace {

constexpr std::uint64_t kFactorizationPurpose = 0x4641435400000001ULL;
constexpr std::uint64_t kSplitPurpose = 0x4641435400000002ULL;
constexpr std::uint64_t kPermutationPurpose = 0x494E444500000001ULL;
constexpr std::uint64_t kGaussianityPurpose = 0x4741555300000001ULL;
constexpr std::uint64_t kTruncationPurpose = 0x5452554E00000001ULL;

int team_size(int workers) { return workers > 0 ? workers : omp_get_max_threads(); }

std::vector<double> column(std::span<const RunRecord> records, unsigned exponent) {
    std::vector<double> out;
    out.reserve(records.size());
    for (const auto& r : records) out.push_back(r.trace(exponent));
    return out;
}

std::size_t common_n(std::span<const RunRecord> records) {
    if (records.empty()) fail(ErrorKind::sample_size, "no records");
    const std::size_t n = records.front().n;
    for (const auto& r : records)
        if (r.n != n) fail(ErrorKind::input, "records mix several dimensions");
    return n;
}

} // namespace

void ExperimentConfig::validate() const {
    (void)EntryDistribution::from_name(ensemble);
    if (dimensions.empty()) fail(ErrorKind::config, "dimensions: at least one dimension required");
    for (auto n : dimensions)
        if (n == 0) fail(ErrorKind::config, "dimensions: every n must be >= 1");
    if (replicas < 2) fail(ErrorKind::config, "replicas: need at least 2");
    for (auto m : powers)
        if (m == 0) fail(ErrorKind::config, "powers: every m must be >= 1");
    for (double t : edge_times)
        if (!(t > 0.0) || !std::isfinite(t)) fail(ErrorKind::config, "edge_times: every t must be > 0");
    if (edge_count == 0) fail(ErrorKind::config, "edge_count: must be >= 1");
    if (edge_count > *std::min_element(dimensions.begin(), dimensions.end()))
        fail(ErrorKind::config, "edge_count: exceeds the smallest dimension");
    for (const auto& c : checks)
        if (std::find(kKnownChecks.begin(), kKnownChecks.end(), c) == kKnownChecks.end())
            fail(ErrorKind::config, "checks: unknown check '" + c + "'");
    std::set<std::string> names;
    for (const auto& f : functions) {
        if (f.name.empty() || f.name.find('@') != std::string::npos)
            fail(ErrorKind::config, "functions: names must be nonempty and contain no '@'");
        if (!names.insert(f.name).second) fail(ErrorKind::config, "functions: duplicate name '" + f.name + "'");
    }
    if (workers < 0) fail(ErrorKind::config, "workers: must be >= 0");
}

std::vector<unsigned> ExperimentConfig::recorded_exponents(std::size_t n) const {
    std::set<unsigned> out(powers.begin(), powers.end());
    for (double t : edge_times) {
        const unsigned k = edge_trace_exponent(n, t);
        out.insert({k, 2 * k, 2 * k + 1});
    }
    return {out.begin(), out.end()};
}

double RunRecord::trace(unsigned k) const {
    const auto it = trace_powers.find(k);
    if (it == trace_powers.end())
        fail(ErrorKind::input, "record lacks Tr W^" + std::to_string(k));
    return it->second;
}

double RunRecord::statistic(const std::string& name) const {
    const auto it = lss.find(name);
    if (it == lss.end()) fail(ErrorKind::input, "record lacks statistic '" + name + "'");
    return it->second;
}

std::string eigen_digest(std::span<const double> eigenvalues) {
    std::uint64_t h = 0xcbf29ce484222325ULL;
    for (double v : eigenvalues) {
        const auto bits = std::bit_cast<std::uint64_t>(v);
        for (int b = 0; b < 8; ++b) {
            h ^= (bits >> (8 * b)) & 0xFFu;
            h *= 0x100000001b3ULL;
        }
    }
    char buf[17];
    static constexpr char hex[] = "0123456789abcdef";
    for (int i = 0; i < 16; ++i) buf[i] = hex[(h >> (60 - 4 * i)) & 0xF];
    buf[16] = '\0';
    return buf;
}

RunRecord summarize_replica(const ExperimentConfig& config, std::size_t replica,
                            const SpectralSummary& summary) {
    RunRecord r;
    r.replica = replica;
    r.n = summary.n;
    r.seed = summary.seed;
    r.eigen_digest = eigen_digest(summary.eigenvalues);
    for (const auto& f : config.functions) {
        r.lss[f.name] = lss(summary, f.g);
        for (unsigned order : f.orders)
            r.lss[f.name + "@" + std::to_string(order)] = lss(summary, f.g.truncated(order));
    }
    for (unsigned k : config.recorded_exponents(summary.n)) r.trace_powers[k] = trace_power(summary, k);
    r.edge = edge_statistics(summary, std::min(config.edge_count, summary.n));
    if (config.keep_eigenvalues) r.eigenvalues = summary.eigenvalues;
    return r;
}

RunRecord run_replica(const ExperimentConfig& config, const EntryDistribution& dist,
                      std::size_t n, std::size_t replica) {
    const auto seed = replica_seed(config.seed, n, replica);
    return summarize_replica(config, replica, eigenvalues_sym(sample_wigner(n, dist, seed)));
}

std::vector<RunRecord> run_dimension(const ExperimentConfig& config, std::size_t n) {
    const auto dist = EntryDistribution::from_name(config.ensemble);
    std::vector<RunRecord> out(config.replicas);
    std::exception_ptr error;
#pragma omp parallel for schedule(dynamic, 1) num_threads(team_size(config.workers))
    for (std::int64_t i = 0; i < static_cast<std::int64_t>(config.replicas); ++i) {
        try {
            out[static_cast<std::size_t>(i)] = run_replica(config, dist, n, static_cast<std::size_t>(i));
        } catch (...) {
#pragma omp critical(wigner_run_error)
            if (!error) error = std::current_exception();
        }
    }
    if (error) std::rethrow_exception(error);
    return out;
}

void check_capacity(const ExperimentConfig& config) {
    if (config.replicas > kMaxReplicas) fail(ErrorKind::capacity, "replicas above the 10^6 cap");
    for (auto n : config.dimensions) {
        if (n > kMaxDimension) fail(ErrorKind::capacity, "dimension above the 4096 cap");
        if (config.keep_eigenvalues && n * config.replicas > kMaxKeptEigenvalues)
            fail(ErrorKind::capacity, "kept eigenvalues above the 5e7 cap");
    }
}

std::vector<RunRecord> run_monte_carlo(const ExperimentConfig& config) {
    config.validate();
    check_capacity(config);
    std::vector<RunRecord> all;
    all.reserve(config.replicas * config.dimensions.size());
    for (auto n : config.dimensions) {
        auto batch = run_dimension(config, n);
        std::move(batch.begin(), batch.end(), std::back_inserter(all));
    }
    return all;
}

std::vector<RunRecord> records_for(std::span<const RunRecord> records, std::size_t n) {
    std::vector<RunRecord> out;
    for (const auto& r : records)
        if (r.n == n) out.push_back(r);
    return out;
}

// ---------------------------------------------------------------------------

namespace {

// Per-replica trace columns for the two factor groups, plus their centring.
struct FactorColumns {
    std::vector<std::vector<double>> lss_side;
    std::vector<std::vector<double>> edge_side;
    std::vector<double> lss_exact;
    std::vector<double> edge_exact;
    bool exact = false;
};

FactorColumns factor_columns(std::span<const RunRecord> records, std::span<const unsigned> m_list,
                             std::span<const double> t_list, const FactorizationOptions& options) {
    const std::size_t n = common_n(records);
    FactorColumns c;
    std::vector<unsigned> edge_exponents;
    for (double t : t_list) edge_exponents.push_back(edge_trace_exponent(n, t));
    for (unsigned m : m_list) c.lss_side.push_back(column(records, m));
    for (unsigned k : edge_exponents) c.edge_side.push_back(column(records, k));
    if (options.exact_table && n <= 4) {
        try {
            for (unsigned m : m_list) c.lss_exact.push_back(trace_moment_direct(n, m, *options.exact_table));
            for (unsigned k : edge_exponents)
                c.edge_exact.push_back(trace_moment_direct(n, k, *options.exact_table));
            c.exact = true;
        } catch (const Error& e) {
            if (e.kind() != ErrorKind::capacity) throw;
            c.lss_exact.clear();
            c.edge_exact.clear();
        }
    }
    return c;
}

// mean over idx of prod_f (col_f[i] - centre_f); centre is the mean over idx
// unless exact centres are given.
double centered_product_mean(const std::vector<std::vector<double>>& cols,
                             const std::vector<double>& exact, std::span<const std::size_t> idx) {
    std::vector<double> centre(cols.size());
    for (std::size_t f = 0; f < cols.size(); ++f) {
        if (!exact.empty()) {
            centre[f] = exact[f];
            continue;
        }
        double s = 0.0;
        for (auto i : idx) s += cols[f][i];
        centre[f] = s / static_cast<double>(idx.size());
    }
    double total = 0.0;
    for (auto i : idx) {
        double p = 1.0;
        for (std::size_t f = 0; f < cols.size(); ++f) p *= cols[f][i] - centre[f];
        total += p;
    }
    return total / static_cast<double>(idx.size());
}

double joint_mean(const FactorColumns& c, std::span<const std::size_t> idx) {
    std::vector<std::vector<double>> all = c.lss_side;
    all.insert(all.end(), c.edge_side.begin(), c.edge_side.end());
    std::vector<double> exact;
    if (c.exact) {
        exact = c.lss_exact;
        exact.insert(exact.end(), c.edge_exact.begin(), c.edge_exact.end());
    }
    return centered_product_mean(all, exact, idx);
}

double product_of_marginals(const FactorColumns& c, std::span<const std::size_t> idx) {
    return centered_product_mean(c.lss_side, c.exact ? c.lss_exact : std::vector<double>{}, idx) *
           centered_product_mean(c.edge_side, c.exact ? c.edge_exact : std::vector<double>{}, idx);
}

std::vector<std::size_t> iota_indices(std::size_t begin, std::size_t end) {
    std::vector<std::size_t> idx(end - begin);
    for (std::size_t i = begin; i < end; ++i) idx[i - begin] = i;
    return idx;
}

} // namespace

Factorization estimate_joint_factorization(std::span<const RunRecord> records,
                                           std::span<const unsigned> m_list,
                                           std::span<const double> t_list,
                                           const FactorizationOptions& options) {
    if (records.size() < kMinFactorizationRecords)
        fail(ErrorKind::sample_size, "estimate_joint_factorization: need at least 100 records");
    const auto cols = factor_columns(records, m_list, t_list, options);
    const auto all = iota_indices(0, records.size());
    Factorization out;
    out.exact_centering = cols.exact;
    out.joint = joint_mean(cols, all);
    out.product = product_of_marginals(cols, all);
    out.gap = out.joint - out.product;
    out.std_error = stats::bootstrap_stderr(
        records.size(), options.bootstrap, derive_seed(options.seed, kFactorizationPurpose),
        [&](std::span<const std::size_t> idx) { return joint_mean(cols, idx) - product_of_marginals(cols, idx); });
    return out;
}

Factorization estimate_joint_factorization_split(std::span<const RunRecord> records,
                                                 std::span<const unsigned> m_list,
                                                 std::span<const double> t_list,
                                                 const FactorizationOptions& options) {
    if (records.size() < 2 * kMinFactorizationRecords)
        fail(ErrorKind::sample_size, "estimate_joint_factorization_split: need at least 200 records");
    const std::size_t half = records.size() / 2;
    const auto first = records.first(half);
    const auto second = records.subspan(half);
    const auto cols_a = factor_columns(first, m_list, t_list, options);
    const auto cols_b = factor_columns(second, m_list, t_list, options);
    Factorization out;
    out.exact_centering = cols_a.exact;
    out.joint = joint_mean(cols_a, iota_indices(0, first.size()));
    out.product = product_of_marginals(cols_b, iota_indices(0, second.size()));
    out.gap = out.joint - out.product;
    const auto seed = derive_seed(options.seed, kSplitPurpose);
    const double se_a = stats::bootstrap_stderr(first.size(), options.bootstrap, seed,
                                                [&](auto idx) { return joint_mean(cols_a, idx); });
    const double se_b = stats::bootstrap_stderr(second.size(), options.bootstrap, seed + 1,
                                                [&](auto idx) { return product_of_marginals(cols_b, idx); });
    out.std_error = std::hypot(se_a, se_b);
    return out;
}

Independence independence_test(std::span<const double> x, std::span<const double> y,
                               const IndependenceOptions& options) {
    if (x.size() != y.size()) fail(ErrorKind::input, "independence_test: length mismatch");
    if (x.size() < kMinIndependenceSamples)
        fail(ErrorKind::sample_size, "independence_test: need at least 100 samples");
    Independence out;
    out.pearson = stats::pearson(x, y);
    const stats::DistanceMatrix a(x), b(y);
    const double vx = a.self_covariance(), vy = b.self_covariance();
    if (vx == 0.0 || vy == 0.0) fail(ErrorKind::undefined_variance, "independence_test: constant sample");
    const double observed = stats::distance_covariance(a, y);
    out.dcor = std::sqrt(std::max(0.0, observed) / std::sqrt(vx * vy));

    const auto seed = derive_seed(options.seed, kPermutationPurpose);
    std::vector<unsigned char> exceeds(options.permutations, 0);
#pragma omp parallel for schedule(dynamic, 4)
    for (std::int64_t p = 0; p < static_cast<std::int64_t>(options.permutations); ++p) {
        const auto perm = stats::permutation(y.size(), seed, static_cast<std::uint64_t>(p));
        std::vector<double> shuffled(y.size());
        for (std::size_t i = 0; i < y.size(); ++i) shuffled[i] = y[perm[i]];
        exceeds[static_cast<std::size_t>(p)] = stats::distance_covariance(a, shuffled) >= observed;
    }
    std::size_t count = 0;
    for (auto e : exceeds) count += e;
    out.p_value = static_cast<double>(1 + count) / static_cast<double>(1 + options.permutations);
    return out;
}

namespace {

struct WickStat {
    double value = 0.0;
    std::array<std::size_t, 4> tuple{};
};

// Signed Wick gap of one tuple over the rows idx, with empirical centring.
double wick_signed(const std::vector<std::vector<double>>& z, const std::array<std::size_t, 4>& t,
                   std::span<const std::size_t> idx) {
    const double m = static_cast<double>(idx.size());
    std::array<double, 4> centre{};
    for (int c = 0; c < 4; ++c) {
        double s = 0.0;
        for (auto i : idx) s += z[t[c]][i];
        centre[c] = s / m;
    }
    double c01 = 0, c23 = 0, c02 = 0, c13 = 0, c03 = 0, c12 = 0, m4 = 0;
    for (auto i : idx) {
        const double a = z[t[0]][i] - centre[0], b = z[t[1]][i] - centre[1];
        const double c = z[t[2]][i] - centre[2], d = z[t[3]][i] - centre[3];
        c01 += a * b;
        c23 += c * d;
        c02 += a * c;
        c13 += b * d;
        c03 += a * d;
        c12 += b * c;
        m4 += a * b * c * d;
    }
    c01 /= m, c23 /= m, c02 /= m, c13 /= m, c03 /= m, c12 /= m, m4 /= m;
    return m4 - (c01 * c23 + c02 * c13 + c03 * c12);
}

} // namespace

Gaussianity gaussianity_check(const std::vector<std::vector<double>>& components,
                              const GaussianityOptions& options) {
    if (components.empty()) fail(ErrorKind::input, "gaussianity_check: no components");
    const std::size_t m = components.front().size();
    for (const auto& c : components)
        if (c.size() != m) fail(ErrorKind::input, "gaussianity_check: ragged components");
    if (m < kMinGaussianitySamples) fail(ErrorKind::sample_size, "gaussianity_check: need at least 500 samples");

    Gaussianity out;
    for (const auto& c : components) {
        const double var = stats::central_moment(c, 2);
        if (!(var > 0.0)) fail(ErrorKind::undefined_variance, "gaussianity_check: constant component");
        out.skewness.push_back(stats::central_moment(c, 3) / std::pow(var, 1.5));
        out.excess_kurtosis.push_back(stats::central_moment(c, 4) / (var * var) - 3.0);
    }
    const std::size_t d = components.size();
    const auto all = iota_indices(0, m);
    WickStat best;
    bool first = true;
    for (std::size_t a = 0; a < d; ++a)
        for (std::size_t b = a; b < d; ++b)
            for (std::size_t c = b; c < d; ++c)
                for (std::size_t e = c; e < d; ++e) {
                    const std::array<std::size_t, 4> t{a, b, c, e};
                    const double g = std::abs(wick_signed(components, t, all));
                    if (first || g > best.value) best = {g, t};
                    first = false;
                }
    out.wick_gap = best.value;
    out.wick_tuple = best.tuple;
    out.wick_stderr = stats::bootstrap_stderr(
        m, options.bootstrap, derive_seed(options.seed, kGaussianityPurpose),
        [&](std::span<const std::size_t> idx) { return wick_signed(components, best.tuple, idx); });
    return out;
}

std::vector<TruncationPoint> truncation_variance(std::span<const RunRecord> records,
                                                 const std::string& name,
                                                 std::span<const unsigned> orders,
                                                 std::size_t bootstrap, std::uint64_t seed) {
    if (records.size() < 2) fail(ErrorKind::sample_size, "truncation_variance: need at least 2 records");
    std::vector<TruncationPoint> out;
    for (unsigned order : orders) {
        const std::string truncated = name + "@" + std::to_string(order);
        std::vector<double> diff;
        diff.reserve(records.size());
        for (const auto& r : records) diff.push_back(r.statistic(name) - r.statistic(truncated));
        TruncationPoint p;
        p.order = order;
        p.variance = stats::variance(diff);
        p.std_error = stats::bootstrap_stderr(
            diff.size(), bootstrap, derive_seed(seed, kTruncationPurpose + order),
            [&](std::span<const std::size_t> idx) {
                std::vector<double> sample;
                sample.reserve(idx.size());
                for (auto i : idx) sample.push_back(diff[i]);
                return stats::variance(sample);
            });
        out.push_back(p);
    }
    return out;
}

std::vector<TruncationPoint> truncation_variance_scan(const TestFunction& g,
                                                      std::span<const unsigned> orders,
                                                      std::size_t n, std::size_t replicas,
                                                      const std::string& ensemble,
                                                      std::uint64_t seed, int workers) {
    ExperimentConfig config;
    config.ensemble = ensemble;
    config.dimensions = {n};
    config.replicas = replicas;
    config.seed = seed;
    config.functions = {FunctionSpec{g.name(), g, {orders.begin(), orders.end()}}};
    config.workers = workers;
    const auto records = run_monte_carlo(config);
    return truncation_variance(records, g.name(), orders, 200, seed);
}

EdgeBoundednessRow edge_boundedness(std::span<const RunRecord> records, double t) {
    const std::size_t n = common_n(records);
    if (records.size() < 2) fail(ErrorKind::sample_size, "edge_boundedness: need at least 2 records");
    EdgeBoundednessRow row;
    row.n = n;
    row.k = edge_trace_exponent(n, t);
    const auto even = column(records, 2 * row.k);
    const auto odd = column(records, 2 * row.k + 1);
    row.even_mean = stats::mean(even);
    row.even_stderr = stats::standard_error(even);
    row.odd_mean = stats::mean(odd);
    row.odd_stderr = stats::standard_error(odd);
    return row;
}

std::vector<EdgeBoundednessRow> edge_boundedness_scan(double t, std::span<const std::size_t> n_list,
                                                      std::size_t replicas,
                                                      const std::string& ensemble,
                                                      std::uint64_t seed, int workers) {
    (void)edge_trace_exponent(1, t); // domain check before any sampling
    ExperimentConfig config;
    config.ensemble = ensemble;
    config.dimensions = {n_list.begin(), n_list.end()};
    config.replicas = replicas;
    config.seed = seed;
    config.edge_times = {t};
    config.workers = workers;
    const auto records = run_monte_carlo(config);
    std::vector<EdgeBoundednessRow> rows;
    for (auto n : n_list) rows.push_back(edge_boundedness(records_for(records, n), t));
    return rows;
}

double edge_distribution_distance(std::span<const RunRecord> a, std::span<const RunRecord> b) {
    std::vector<double> sa, sb;
    for (const auto& r : a) sa.push_back(r.edge.at(0));
    for (const auto& r : b) sb.push_back(r.edge.at(0));
    return stats::ks_two_sample(sa, sb);
}

double edge_distribution_compare(const std::string& ensemble_a, const std::string& ensemble_b,
                                 std::size_t n, std::size_t replicas, std::uint64_t seed_a,
                                 std::uint64_t seed_b, int workers) {
    if (replicas < kMinEdgeCompareReplicas)
        fail(ErrorKind::sample_size, "edge_distribution_compare: need at least 500 replicas");
    ExperimentConfig config;
    config.dimensions = {n};
    config.replicas = replicas;
    config.workers = workers;
    config.ensemble = ensemble_a;
    config.seed = seed_a;
    const auto a = run_monte_carlo(config);
    config.ensemble = ensemble_b;
    config.seed = seed_b;
    const auto b = run_monte_carlo(config);
    return edge_distribution_distance(a, b);
}

double pooled_semicircle_distance(std::span<const RunRecord> records) {
    std::vector<double> pooled;
    for (const auto& r : records) pooled.insert(pooled.end(), r.eigenvalues.begin(), r.eigenvalues.end());
    if (pooled.empty()) fail(ErrorKind::input, "pooled_semicircle_distance: records carry no eigenvalues");
    return semicircle_kolmogorov_distance(pooled);
}

} // namespace wigner
