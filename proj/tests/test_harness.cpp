#include "support.hpp"

#include "wigner/harness.hpp"
#include "wigner/reference.hpp"
#include "wigner/stats.hpp"

using namespace wigner;

namespace {

ExperimentConfig basic_config() {
    ExperimentConfig c;
    c.ensemble = "gaussian";
    c.dimensions = {4};
    c.replicas = 2;
    c.seed = 12345;
    return c;
}

// Synthetic records at n = 8 (so t = 1 maps to k = 4) with small-integer traces.
std::vector<RunRecord> integer_records(std::size_t count, double shift) {
    std::vector<RunRecord> out(count);
    PhiloxStream rng(21, 21);
    for (std::size_t i = 0; i < count; ++i) {
        out[i].n = 8;
        out[i].replica = i;
        const double a = static_cast<double>(rng.below(17)) - 8.0;
        const double b = static_cast<double>(rng.below(17)) - 8.0 + 0.5 * a;
        out[i].trace_powers[2] = a + shift;
        out[i].trace_powers[4] = b + shift;
    }
    return out;
}

} // namespace

TEST_SUITE("harness") {

TEST_CASE("config validation") {
    auto c = basic_config();
    CHECK_NOTHROW(c.validate());
    c.edge_times = {-1.0};
    CHECK_ERROR_KIND(c.validate(), ErrorKind::config);
    c = basic_config();
    c.replicas = 1;
    CHECK_ERROR_KIND(c.validate(), ErrorKind::config);
    c = basic_config();
    c.powers = {0};
    CHECK_ERROR_KIND(c.validate(), ErrorKind::config);
    c = basic_config();
    c.checks = {"bogus"};
    CHECK_ERROR_KIND(c.validate(), ErrorKind::config);
    c = basic_config();
    c.ensemble = "cauchy";
    CHECK_ERROR_KIND(c.validate(), ErrorKind::config);
    c = basic_config();
    c.edge_times = {1.0};
    c.powers = {3};
    CHECK(c.recorded_exponents(64) == std::vector<unsigned>{3, 16, 32, 33});
}

TEST_CASE("small runs are reproducible and seeds are distinct") {
    auto c = basic_config();
    c.powers = {2};
    const auto a = run_monte_carlo(c), b = run_monte_carlo(c);
    REQUIRE(a.size() == 2);
    for (std::size_t i = 0; i < 2; ++i) {
        CHECK(a[i].eigen_digest == b[i].eigen_digest);
        CHECK(a[i].trace(2) == b[i].trace(2));
        CHECK(a[i].seed == replica_seed(c.seed, 4, i));
    }
    CHECK(a[0].seed != a[1].seed);
    CHECK(a[0].eigen_digest != a[1].eigen_digest);
}

TEST_CASE("mean Tr W^2 at n = 40") {
    auto c = basic_config();
    c.dimensions = {40};
    c.replicas = 500;
    c.powers = {2};
    std::vector<double> v;
    for (const auto& r : run_monte_carlo(c)) v.push_back(r.trace(2));
    CHECK(std::abs(stats::mean(v) - 10.0) <= 5.0 * stats::standard_error(v));
}

TEST_CASE("records do not depend on the worker count") {
    auto c = basic_config();
    c.dimensions = {5, 30};
    c.replicas = 40;
    c.powers = {2, 3};
    c.edge_times = {0.5, 1.0};
    c.edge_count = 3;
    c.functions = {FunctionSpec{"exp", TestFunction::analytic("exp"), {4, 8}}};
    const auto serial = reference::run_monte_carlo(c);
    for (int workers : {1, 4, 8}) {
        c.workers = workers;
        const auto par = run_monte_carlo(c);
        REQUIRE(par.size() == serial.size());
        for (std::size_t i = 0; i < par.size(); ++i) {
            CHECK(par[i].eigen_digest == serial[i].eigen_digest);
            CHECK(par[i].lss == serial[i].lss);
            CHECK(par[i].trace_powers == serial[i].trace_powers);
            CHECK(par[i].edge == serial[i].edge);
        }
    }
}

TEST_CASE("capacity caps reject work up front") {
    auto c = basic_config();
    c.dimensions = {5000};
    CHECK_ERROR_KIND(run_monte_carlo(c), ErrorKind::capacity);
    c = basic_config();
    c.replicas = 2'000'000;
    CHECK_ERROR_KIND(run_monte_carlo(c), ErrorKind::capacity);
    c = basic_config();
    c.dimensions = {4000};
    c.replicas = 20000;
    c.keep_eigenvalues = true;
    CHECK_ERROR_KIND(run_monte_carlo(c), ErrorKind::capacity);
}

TEST_CASE("factorization estimator") {
    const auto rs = integer_records(256, 0.0);
    const std::vector<unsigned> m{2};
    const std::vector<double> t{1.0}, none{};
    const auto f = estimate_joint_factorization(rs, m, t);
    CHECK(f.gap == f.joint - f.product);
    CHECK(f.std_error > 0.0);

    const auto alone = estimate_joint_factorization(rs, m, none);
    CHECK(alone.gap == 0.0);
    CHECK(alone.joint == alone.product);

    // shifting every sample leaves the centred estimators unchanged
    const auto shifted = estimate_joint_factorization(integer_records(256, 1024.0), m, t);
    CHECK(shifted.joint == f.joint);
    CHECK(shifted.product == f.product);
    CHECK(shifted.std_error == f.std_error);

    CHECK_ERROR_KIND(estimate_joint_factorization(integer_records(99, 0.0), m, t), ErrorKind::sample_size);
}

TEST_CASE("exact centring at tiny n") {
    auto c = basic_config();
    c.dimensions = {2};
    c.replicas = 400;
    c.powers = {2};
    c.edge_times = {1.0};
    const auto rs = run_monte_carlo(c);
    FactorizationOptions o;
    o.exact_table = MomentTable(EntryDistribution::from_name("gaussian"));
    const std::vector<unsigned> m{2};
    const std::vector<double> t{1.0};
    const auto f = estimate_joint_factorization(rs, m, t, o);
    CHECK(f.exact_centering);
    CHECK(!estimate_joint_factorization(rs, m, t).exact_centering);
}

TEST_CASE("split-sample factorization agrees with the full-sample gap") {
    auto c = basic_config();
    c.dimensions = {40};
    c.replicas = 600;
    c.powers = {2};
    c.edge_times = {1.0};
    const auto rs = run_monte_carlo(c);
    const std::vector<unsigned> m{2};
    const std::vector<double> t{1.0};
    const auto full = estimate_joint_factorization(rs, m, t);
    const auto split = estimate_joint_factorization_split(rs, m, t);
    CHECK(std::abs(full.gap - split.gap) <= 3.0 * std::hypot(full.std_error, split.std_error));
}

TEST_CASE("truncation of a polynomial beyond its degree is exact") {
    auto c = basic_config();
    c.dimensions = {30};
    c.replicas = 50;
    c.functions = {FunctionSpec{"p", TestFunction::polynomial({1.0, -2.0, 0.5, 3.0}), {3, 5}}};
    const auto rs = run_monte_carlo(c);
    const std::vector<unsigned> orders{3, 5};
    for (const auto& p : truncation_variance(rs, "p", orders)) CHECK(p.variance == 0.0);
}

TEST_CASE("edge boundedness rows") {
    const std::vector<std::size_t> ns{20, 40};
    const auto rows = edge_boundedness_scan(1.0, ns, 50);
    REQUIRE(rows.size() == 2);
    CHECK(rows[0].k == edge_trace_exponent(20, 1.0));
    CHECK(rows[1].k == edge_trace_exponent(40, 1.0));
    CHECK(rows[0].even_mean > 0.0);
    CHECK(rows[0].even_stderr > 0.0);
    CHECK_ERROR_KIND(edge_boundedness_scan(0.0, ns, 50), ErrorKind::domain);
}

TEST_CASE("edge distribution comparison") {
    CHECK(edge_distribution_compare("gaussian", "gaussian", 20, 500, 5, 5) == 0.0);
    CHECK_ERROR_KIND(edge_distribution_compare("gaussian", "gaussian", 20, 499, 5, 5), ErrorKind::sample_size);
    int within = 0;
    const int reruns = 20;
    for (int r = 0; r < reruns; ++r)
        within += edge_distribution_compare("gaussian", "gaussian", 20, 2000, 100 + r, 900 + r) <= 0.08;
    CHECK(within >= 19); // at least 95%
}

}
