#include "wigner/ensemble.hpp"

#include "wigner/error.hpp"

#include <bit>
#include <cmath>
#include <numbers>

namespace wigner {

namespace {

double unit_open(std::uint64_t bits) noexcept {
    // (0, 1]
    return static_cast<double>((bits >> 11) + 1) * 0x1.0p-53;
}

double unit_half_open(std::uint64_t bits) noexcept {
    // [0, 1)
    return static_cast<double>(bits >> 11) * 0x1.0p-53;
}

} // namespace

std::string_view to_string(EntryLaw law) noexcept {
    switch (law) {
    case EntryLaw::gaussian: return "gaussian";
    case EntryLaw::rademacher: return "rademacher";
    case EntryLaw::uniform: return "uniform";
    }
    return "unknown";
}

std::optional<EntryLaw> parse_entry_law(std::string_view name) noexcept {
    if (name == "gaussian") return EntryLaw::gaussian;
    if (name == "rademacher") return EntryLaw::rademacher;
    if (name == "uniform") return EntryLaw::uniform;
    return std::nullopt;
}

double draw(EntryLaw law, const Philox4x64::Block& bits) noexcept {
    switch (law) {
    case EntryLaw::gaussian: {
        // Box-Muller, cosine branch only.
        const double radius = std::sqrt(-2.0 * std::log(unit_open(bits[0])));
        const double angle = 2.0 * std::numbers::pi * unit_half_open(bits[1]);
        return 0.5 * radius * std::cos(angle);
    }
    case EntryLaw::rademacher:
        return (bits[0] >> 63) != 0 ? 0.5 : -0.5;
    case EntryLaw::uniform: {
        constexpr double half_width = 0.8660254037844386; // sqrt(3)/2
        return half_width * (2.0 * unit_half_open(bits[0]) - 1.0);
    }
    }
    return 0.0;
}

double law_moment(EntryLaw law, unsigned p) noexcept {
    if (p % 2 == 1) return 0.0;
    const unsigned k = p / 2;
    switch (law) {
    case EntryLaw::gaussian: {
        double value = 1.0;
        for (unsigned j = 1; j <= k; ++j) value *= static_cast<double>(2 * j - 1) * 0.25;
        return value;
    }
    case EntryLaw::rademacher:
        return std::ldexp(1.0, -2 * static_cast<int>(k));
    case EntryLaw::uniform:
        return std::pow(0.75, static_cast<double>(k)) / static_cast<double>(2 * k + 1);
    }
    return 0.0;
}

double subgaussian_constant(EntryLaw law) noexcept {
    switch (law) {
    case EntryLaw::gaussian: return 0.5;    // (2k-1)!!/4^k <= (2k)^k/4^k
    case EntryLaw::rademacher: return 0.25; // 4^{-k} <= (k/4)^k
    case EntryLaw::uniform: return 0.25;    // (3/4)^k/(2k+1) <= (k/4)^k
    }
    return 0.0;
}

EntryDistribution EntryDistribution::from_name(std::string_view name) {
    const auto slash = name.find('/');
    const auto offdiag = parse_entry_law(name.substr(0, slash));
    if (!offdiag) fail(ErrorKind::config, "unknown ensemble '" + std::string(name) + "'");
    if (slash == std::string_view::npos) return EntryDistribution(*offdiag);
    const auto diagonal = parse_entry_law(name.substr(slash + 1));
    if (!diagonal) fail(ErrorKind::config, "unknown diagonal law in '" + std::string(name) + "'");
    return EntryDistribution(*offdiag, *diagonal);
}

std::string EntryDistribution::name() const {
    std::string out(to_string(offdiag_));
    if (diagonal_) {
        out += '/';
        out += to_string(*diagonal_);
    }
    return out;
}

WignerSample WignerSample::from_entries(std::size_t n, std::vector<double> entries) {
    if (n == 0 || entries.size() != n * n)
        fail(ErrorKind::invalid_dimension, "matrix entries do not form a nonempty square");
    for (std::size_t i = 0; i < n; ++i)
        for (std::size_t j = i + 1; j < n; ++j)
            if (std::bit_cast<std::uint64_t>(entries[i * n + j]) != std::bit_cast<std::uint64_t>(entries[j * n + i]))
                fail(ErrorKind::precondition, "matrix is not symmetric");
    return WignerSample{n, std::move(entries), "custom", 0};
}

double raw_entry(const EntryDistribution& dist, std::uint64_t seed, std::size_t i,
                 std::size_t j) noexcept {
    const auto bits = Philox4x64::generate({i, j, 0, 0}, {seed, kEntryStream});
    return i == j ? dist.sample_diagonal(bits) : dist.sample(bits);
}

WignerSample sample_wigner(std::size_t n, const EntryDistribution& dist, std::uint64_t seed) {
    if (n == 0) fail(ErrorKind::invalid_dimension, "dimension must be at least 1");
    WignerSample out{n, std::vector<double>(n * n), dist.name(), seed};
    const double scale = 1.0 / std::sqrt(static_cast<double>(n));
    double* a = out.entries.data();
    const auto rows = static_cast<std::int64_t>(n);
#pragma omp parallel for schedule(static)
    for (std::int64_t si = 0; si < rows; ++si) {
        const auto i = static_cast<std::size_t>(si);
        for (std::size_t j = i; j < n; ++j) a[i * n + j] = raw_entry(dist, seed, i, j) * scale;
    }
    for (std::size_t i = 0; i < n; ++i)
        for (std::size_t j = i + 1; j < n; ++j) a[j * n + i] = a[i * n + j];
    return out;
}

double semicircle_density(double x) noexcept {
    if (!(std::abs(x) <= 1.0)) return 0.0;
    return 2.0 / std::numbers::pi * std::sqrt(1.0 - x * x);
}

double semicircle_cdf(double x) noexcept {
    if (x <= -1.0) return 0.0;
    if (x >= 1.0) return 1.0;
    return 0.5 + (x * std::sqrt(1.0 - x * x) + std::asin(x)) / std::numbers::pi;
}

std::uint64_t catalan(unsigned k) {
    if (k > 35) fail(ErrorKind::capacity, "Catalan number exceeds 64-bit range");
    // C_{j+1} = C_j * 2(2j+1) / (j+2); the product is exact in 128 bits.
    unsigned __int128 c = 1;
    for (unsigned j = 0; j < k; ++j) c = c * (2 * (2 * j + 1)) / (j + 2);
    return static_cast<std::uint64_t>(c);
}

double semicircle_moment(unsigned k) {
    if (k % 2 == 1) return 0.0;
    return std::ldexp(static_cast<double>(catalan(k / 2)), -static_cast<int>(k));
}

} // namespace wigner
