#include "wigner/checks.hpp"

#include "wigner/error.hpp"
#include "wigner/moments.hpp"
#include "wigner/philox.hpp"
#include "wigner/stats.hpp"

#include <algorithm>
#include <cmath>

namespace wigner {

namespace {

constexpr std::uint64_t kCheckPurpose = 0x434845434B000000ULL;

bool enabled(const ExperimentConfig& c, std::string_view name) {
    return std::find(c.checks.begin(), c.checks.end(), name) != c.checks.end();
}

std::uint64_t check_seed(const ExperimentConfig& c, std::size_t n, std::uint64_t salt) {
    return derive_seed(c.seed, kCheckPurpose ^ (salt << 40) ^ n);
}

SummaryRow at_most(std::string check, std::size_t n, std::string statistic, double value, double tolerance,
                   std::optional<double> se = std::nullopt) {
    return {std::move(check), n, std::move(statistic), value, tolerance, se, value <= tolerance};
}

void require_replicas(const ExperimentConfig& c, std::size_t minimum, std::string_view check) {
    if (c.replicas < minimum)
        fail(ErrorKind::config, "replicas: check '" + std::string(check) + "' needs at least " +
                                    std::to_string(minimum));
}

void semicircle_rows(const ExperimentConfig&, std::size_t n, std::span<const RunRecord> rs,
                     std::vector<SummaryRow>& out) {
    out.push_back(at_most("semicircle", n, "KS", pooled_semicircle_distance(rs), 0.05));
}

void moment_rows(const ExperimentConfig&, std::size_t n, std::span<const RunRecord> rs,
                 std::vector<SummaryRow>& out) {
    for (unsigned k = 1; k <= 4; ++k) {
        std::vector<double> v;
        for (const auto& r : rs) v.push_back(r.trace(2 * k) / static_cast<double>(n));
        const double se = stats::standard_error(v);
        out.push_back(at_most("moments", n, "abs_dev_m" + std::to_string(2 * k),
                              std::abs(stats::mean(v) - semicircle_moment(2 * k)), 3 * se + 0.01, se));
    }
}

void edge_rows(const ExperimentConfig& c, std::span<const RunRecord> all, std::vector<SummaryRow>& out) {
    for (double t : c.edge_times) {
        std::vector<EdgeBoundednessRow> rows;
        for (auto n : c.dimensions) rows.push_back(edge_boundedness(records_for(all, n), t));
        double lo = rows.front().even_mean, hi = lo;
        for (const auto& r : rows) {
            lo = std::min(lo, r.even_mean);
            hi = std::max(hi, r.even_mean);
        }
        char tag[32];
        std::snprintf(tag, sizeof tag, "_t%g", t);
        out.push_back(at_most("edge_boundedness", 0, std::string("even_band_ratio") + tag,
                              lo > 0.0 ? hi / lo : INFINITY, 3.0));
        for (std::size_t i = 1; i < rows.size(); ++i) {
            const double se = std::hypot(rows[i].odd_stderr, rows[i - 1].odd_stderr);
            out.push_back(at_most("edge_boundedness", rows[i].n, std::string("odd_increase") + tag,
                                  std::abs(rows[i].odd_mean) - std::abs(rows[i - 1].odd_mean), 2 * se, se));
        }
    }
}

Factorization factorization_at(const ExperimentConfig& c, std::size_t n, std::span<const RunRecord> rs) {
    FactorizationOptions options;
    options.seed = check_seed(c, n, 1);
    if (n <= 4) options.exact_table = MomentTable(EntryDistribution::from_name(c.ensemble));
    return estimate_joint_factorization(rs, c.powers, c.edge_times, options);
}

void factorization_rows(const ExperimentConfig& c, std::span<const RunRecord> all,
                        std::vector<SummaryRow>& out) {
    std::vector<Factorization> fs;
    for (auto n : c.dimensions) {
        fs.push_back(factorization_at(c, n, records_for(all, n)));
        const auto& f = fs.back();
        out.push_back(at_most("factorization", n, f.exact_centering ? "abs_gap_exact" : "abs_gap",
                              std::abs(f.gap), std::max(0.1, 4 * f.std_error), f.std_error));
    }
    if (fs.size() > 1) {
        const double se = std::hypot(fs.front().std_error, fs.back().std_error);
        out.push_back(at_most("factorization", c.dimensions.back(), "gap_growth",
                              std::abs(fs.back().gap) - std::abs(fs.front().gap), 2 * se, se));
    }
}

void independence_rows(const ExperimentConfig& c, std::size_t n, std::span<const RunRecord> rs,
                       std::vector<SummaryRow>& out) {
    std::vector<double> s1;
    for (const auto& r : rs) s1.push_back(r.edge.at(0));
    std::uint64_t salt = 2;
    for (const auto& f : c.functions) {
        std::vector<double> x;
        for (const auto& r : rs) x.push_back(r.statistic(f.name));
        const auto result = independence_test(stats::centered(x), s1, {500, check_seed(c, n, salt++)});
        out.push_back(at_most("independence", n, "abs_pearson_" + f.name, std::abs(result.pearson), 0.1));
        out.push_back({"independence", n, "dcor_p_value_" + f.name, result.p_value, 0.01, std::nullopt,
                       result.p_value > 0.01});
    }
}

void gaussianity_rows(const ExperimentConfig& c, std::size_t n, std::span<const RunRecord> rs,
                      std::vector<SummaryRow>& out) {
    std::vector<std::vector<double>> z;
    for (unsigned m : c.powers) {
        std::vector<double> v;
        for (const auto& r : rs) v.push_back(r.trace(m));
        z.push_back(stats::centered(v));
    }
    const auto g = gaussianity_check(z, {200, check_seed(c, n, 1000)});
    const std::string m0 = std::to_string(c.powers.front());
    out.push_back(at_most("gaussianity", n, "abs_skewness_m" + m0, std::abs(g.skewness.front()), 0.15));
    out.push_back(at_most("gaussianity", n, "abs_excess_kurtosis_m" + m0, std::abs(g.excess_kurtosis.front()), 0.3));
    if (z.size() > 1)
        out.push_back(at_most("gaussianity", n, "wick_gap", g.wick_gap, 4 * g.wick_stderr, g.wick_stderr));
}

void truncation_rows(const ExperimentConfig& c, std::size_t n, std::span<const RunRecord> rs,
                     std::vector<SummaryRow>& out) {
    std::uint64_t salt = 2000;
    for (const auto& f : c.functions) {
        auto orders = f.orders;
        std::sort(orders.begin(), orders.end());
        const auto points = truncation_variance(rs, f.name, orders, 200, check_seed(c, n, salt++));
        for (std::size_t i = 1; i < points.size(); ++i) {
            const double se = std::hypot(points[i].std_error, points[i - 1].std_error);
            out.push_back(at_most("truncation", n,
                                  "var_increase_" + f.name + "@" + std::to_string(points[i].order),
                                  points[i].variance - points[i - 1].variance, 2 * se, se));
        }
    }
}

} // namespace

ExperimentConfig prepare_for_checks(ExperimentConfig c) {
    if (enabled(c, "semicircle")) c.keep_eigenvalues = true;
    if (enabled(c, "moments"))
        for (unsigned m : {2u, 4u, 6u, 8u})
            if (std::find(c.powers.begin(), c.powers.end(), m) == c.powers.end()) c.powers.push_back(m);
    if (enabled(c, "edge_boundedness") && c.edge_times.empty())
        fail(ErrorKind::config, "edge_times: check 'edge_boundedness' needs at least one edge time");
    if (enabled(c, "factorization")) {
        if (c.powers.empty() || c.edge_times.empty())
            fail(ErrorKind::config, "powers: check 'factorization' needs powers and edge_times");
        require_replicas(c, kMinFactorizationRecords, "factorization");
    }
    if (enabled(c, "independence")) {
        if (c.functions.empty())
            fail(ErrorKind::config, "functions: check 'independence' needs at least one function");
        require_replicas(c, kMinIndependenceSamples, "independence");
    }
    if (enabled(c, "gaussianity")) {
        if (c.powers.empty()) fail(ErrorKind::config, "powers: check 'gaussianity' needs at least one power");
        require_replicas(c, kMinGaussianitySamples, "gaussianity");
    }
    if (enabled(c, "truncation")) {
        const bool any = std::any_of(c.functions.begin(), c.functions.end(),
                                     [](const FunctionSpec& f) { return f.orders.size() > 1; });
        if (!any) fail(ErrorKind::config, "functions: check 'truncation' needs a function with two or more orders");
    }
    c.validate();
    return c;
}

std::vector<SummaryRow> run_checks(const ExperimentConfig& c, std::span<const RunRecord> all) {
    std::vector<SummaryRow> out;
    using PerDimension = void (*)(const ExperimentConfig&, std::size_t, std::span<const RunRecord>,
                                  std::vector<SummaryRow>&);
    const std::pair<std::string_view, PerDimension> per_dimension[] = {
        {"semicircle", semicircle_rows},   {"moments", moment_rows},
        {"independence", independence_rows}, {"gaussianity", gaussianity_rows},
        {"truncation", truncation_rows}};
    for (const auto& check : kKnownChecks) {
        if (!enabled(c, check)) continue;
        if (check == "edge_boundedness") {
            edge_rows(c, all, out);
            continue;
        }
        if (check == "factorization") {
            factorization_rows(c, all, out);
            continue;
        }
        for (const auto& [name, fn] : per_dimension)
            if (name == check)
                for (auto n : c.dimensions) fn(c, n, records_for(all, n), out);
    }
    return out;
}

} // namespace wigner
