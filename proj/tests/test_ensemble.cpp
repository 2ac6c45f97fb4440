#include "support.hpp"

#include "wigner/ensemble.hpp"
#include "wigner/philox.hpp"
#include "wigner/reference.hpp"

#include <boost/math/quadrature/gauss_kronrod.hpp>
#include <boost/math/quadrature/tanh_sinh.hpp>

#include <omp.h>

#include <cstring>
#include <numbers>
#include <set>

using namespace wigner;
using testing::close;

namespace {

constexpr EntryLaw kLaws[] = {EntryLaw::gaussian, EntryLaw::rademacher, EntryLaw::uniform};

// E[x^p] by numerical integration against each law's density.
double integrated_moment(EntryLaw law, unsigned p) {
    switch (law) {
    case EntryLaw::gaussian: {
        auto f = [p](double x) { return std::pow(x, p) * std::exp(-2.0 * x * x) * std::sqrt(2.0 / std::numbers::pi); };
        return boost::math::quadrature::gauss_kronrod<double, 61>::integrate(f, -12.0, 12.0, 15, 1e-14);
    }
    case EntryLaw::rademacher:
        return 0.5 * (std::pow(0.5, p) + std::pow(-0.5, p));
    case EntryLaw::uniform: {
        const double a = std::sqrt(3.0) / 2.0;
        auto f = [p, a](double x) { return std::pow(x, p) / (2.0 * a); };
        return boost::math::quadrature::gauss_kronrod<double, 61>::integrate(f, -a, a);
    }
    }
    return 0.0;
}

} // namespace

TEST_SUITE("ensemble") {

TEST_CASE("philox known-answer vectors") {
    using P = Philox4x64;
    CHECK(P::generate({0, 0, 0, 0}, {0, 0}) ==
          P::Block{0x16554d9eca36314cULL, 0xdb20fe9d672d0fdcULL, 0xd7e772cee186176bULL, 0x7e68b68aec7ba23bULL});
    const std::uint64_t ones = ~0ULL;
    CHECK(P::generate({ones, ones, ones, ones}, {ones, ones}) ==
          P::Block{0x87b092c3013fe90bULL, 0x438c3c67be8d0224ULL, 0x9cc7d7c69cd777b6ULL, 0xa09caebf594f0ba0ULL});
    CHECK(P::generate({0x243f6a8885a308d3ULL, 0x13198a2e03707344ULL, 0xa4093822299f31d0ULL, 0x082efa98ec4e6c89ULL},
                      {0x452821e638d01377ULL, 0xbe5466cf34e90c6cULL}) ==
          P::Block{0xa528f45403e61d95ULL, 0x38c72dbd566e9788ULL, 0xa5a1610e72fd18b5ULL, 0x57bd43b5e52b7fe6ULL});
    CHECK(P::generate({7, 11, 0, 0}, {12345, 0x57474e52}) ==
          P::Block{0x2cf28dd6782b57a6ULL, 0x6fc35bf660fdec17ULL, 0x40abb5c26d50babdULL, 0x5c4364f5a3b3d43ULL});
}

TEST_CASE("philox stream is reproducible and bounded") {
    PhiloxStream a(99, 1), b(99, 1), c(99, 2);
    bool differs = false;
    for (int i = 0; i < 100; ++i) {
        const auto x = a.next_u64();
        CHECK(x == b.next_u64());
        differs |= x != c.next_u64();
    }
    CHECK(differs);
    PhiloxStream r(5, 5);
    for (int i = 0; i < 10000; ++i) {
        CHECK(r.below(7) < 7);
        const double u = r.uniform();
        CHECK((u >= 0.0 && u < 1.0));
    }
}

TEST_CASE("replica seeds are distinct") {
    std::set<std::uint64_t> seeds;
    for (std::uint64_t n : {4, 40, 400})
        for (std::uint64_t r = 0; r < 10000; ++r) seeds.insert(replica_seed(2024, n, r));
    CHECK(seeds.size() == 30000);
}

TEST_CASE("moment tables: low-order values are exact") {
    for (auto law : kLaws) {
        CAPTURE(to_string(law));
        CHECK(law_moment(law, 0) == 1.0);
        CHECK(law_moment(law, 1) == 0.0);
        CHECK(law_moment(law, 2) == 0.25);
        CHECK(law_moment(law, 3) == 0.0);
    }
    CHECK(law_moment(EntryLaw::gaussian, 4) == 3.0 / 16.0);
    CHECK(law_moment(EntryLaw::gaussian, 6) == 15.0 / 64.0);
    CHECK(law_moment(EntryLaw::rademacher, 4) == 1.0 / 16.0);
    CHECK(close(law_moment(EntryLaw::uniform, 4), 9.0 / 80.0, 1e-16));
}

TEST_CASE("moment tables agree with numerical integration") {
    for (auto law : kLaws)
        for (unsigned p = 0; p <= 16; ++p) {
            CAPTURE(to_string(law));
            CAPTURE(p);
            const double exact = integrated_moment(law, p);
            CHECK(close(law_moment(law, p), exact, 1e-12 * std::max(1.0, std::abs(exact))));
        }
}

TEST_CASE("sub-gaussian moment bound holds with the documented constants") {
    for (auto law : kLaws) {
        const double c = subgaussian_constant(law);
        for (unsigned k = 1; k <= 8; ++k) {
            CAPTURE(to_string(law));
            CAPTURE(k);
            CHECK(law_moment(law, 2 * k) <= std::pow(c * k, k));
        }
    }
}

TEST_CASE("sampled moments match the tables") {
    for (auto law : kLaws) {
        const EntryDistribution dist(law);
        PhiloxStream rng(17, static_cast<std::uint64_t>(law));
        const std::size_t draws = 1'000'000;
        std::vector<double> x(draws);
        for (auto& v : x) v = dist.sample(rng);
        for (unsigned p = 1; p <= 12; ++p) {
            double s = 0.0, s2 = 0.0;
            for (double v : x) {
                const double t = std::pow(v, p);
                s += t;
                s2 += t * t;
            }
            const double mean = s / draws;
            const double se = std::sqrt((s2 / draws - mean * mean) / draws);
            CAPTURE(to_string(law));
            CAPTURE(p);
            CHECK(std::abs(mean - dist.moment(p)) <= 5.0 * se + 1e-15);
        }
    }
}

TEST_CASE("distribution names") {
    CHECK(EntryDistribution::from_name("gaussian").name() == "gaussian");
    const auto mixed = EntryDistribution::from_name("gaussian/rademacher");
    CHECK(mixed.has_distinct_diagonal());
    CHECK(mixed.moment(4) == 3.0 / 16.0);
    CHECK(mixed.diagonal_moment(4) == 1.0 / 16.0);
    CHECK_ERROR_KIND(EntryDistribution::from_name("cauchy"), ErrorKind::config);
}

TEST_CASE("sample_wigner basics") {
    const auto gauss = EntryDistribution::from_name("gaussian");
    const auto w1 = sample_wigner(1, gauss, 42);
    CHECK(w1(0, 0) == raw_entry(gauss, 42, 0, 0));

    const auto rad = EntryDistribution::from_name("rademacher");
    const double v = 1.0 / (2.0 * std::sqrt(2.0));
    for (std::uint64_t seed = 0; seed < 20; ++seed) {
        const auto w = sample_wigner(2, rad, seed);
        for (double e : w.entries) CHECK((e == v || e == -v));
    }
    CHECK_ERROR_KIND(sample_wigner(0, gauss, 1), ErrorKind::invalid_dimension);
}

TEST_CASE("sample_wigner is symmetric and independent of thread count") {
    const auto dist = EntryDistribution::from_name("uniform");
    const auto serial = reference::sample_wigner(57, dist, 9);
    for (int threads : {1, 2, 4, 8}) {
        omp_set_num_threads(threads);
        const auto w = sample_wigner(57, dist, 9);
        CHECK(std::memcmp(w.entries.data(), serial.entries.data(), w.entries.size() * sizeof(double)) == 0);
    }
    omp_set_num_threads(omp_get_num_procs());
    for (std::size_t i = 0; i < 57; ++i)
        for (std::size_t j = 0; j < 57; ++j) CHECK(serial(i, j) == serial(j, i));
}

TEST_CASE("scaled entries have variance 1/4") {
    const auto dist = EntryDistribution::from_name("gaussian");
    const std::size_t n = 50;
    double s = 0.0, s2 = 0.0, s4 = 0.0;
    std::size_t count = 0;
    for (std::uint64_t r = 0; r < 10000; ++r) {
        const auto w = sample_wigner(n, dist, replica_seed(3, n, r));
        for (std::size_t i = 0; i < n; ++i)
            for (std::size_t j = i; j < n; ++j) {
                const double x = w(i, j) * std::sqrt(double(n));
                s += x;
                s2 += x * x;
                s4 += x * x * x * x;
                ++count;
            }
    }
    const double var = s2 / count - (s / count) * (s / count);
    const double se = std::sqrt((s4 / count - (s2 / count) * (s2 / count)) / count);
    CHECK(std::abs(var - 0.25) <= 5.0 * se);
}

TEST_CASE("semicircle density") {
    CHECK(semicircle_density(0.0) == doctest::Approx(2.0 / std::numbers::pi).epsilon(1e-15));
    CHECK(semicircle_density(1.0) == 0.0);
    CHECK(semicircle_density(1.5) == 0.0);
    boost::math::quadrature::tanh_sinh<double> q;
    CHECK(close(q.integrate(semicircle_density, -1.0, 1.0), 1.0, 1e-8));
    for (double x : {-0.9, -0.3, 0.0, 0.4, 0.95})
        CHECK(close(semicircle_cdf(x), q.integrate(semicircle_density, -1.0, x), 1e-10));
}

TEST_CASE("semicircle moments agree with quadrature") {
    boost::math::quadrature::tanh_sinh<double> q;
    for (unsigned k = 0; k <= 12; ++k) {
        const double numeric = q.integrate([k](double x) { return std::pow(x, k) * semicircle_density(x); }, -1.0, 1.0);
        CAPTURE(k);
        CHECK(close(semicircle_moment(k), numeric, 1e-8));
    }
    CHECK(semicircle_moment(1) == 0.0);
    CHECK(semicircle_moment(2) == 0.25);
    CHECK(semicircle_moment(6) == 5.0 / 64.0);
}

TEST_CASE("catalan numbers") {
    const std::uint64_t first[] = {1, 1, 2, 5, 14, 42, 132, 429, 1430};
    for (unsigned k = 0; k < 9; ++k) CHECK(catalan(k) == first[k]);
    CHECK(catalan(35) == 3116285494907301262ULL);
    CHECK_ERROR_KIND(catalan(36), ErrorKind::capacity);
}

}
