#pragma once

#include "wigner/philox.hpp"

#include <cstddef>
#include <cstdint>
#include <optional>
#include <span>
#include <string>
#include <string_view>
#include <vector>

namespace wigner {

/// Centered laws with variance 1/4.
///
///   gaussian   N(0, 1/4)                      E x^{2k} = (2k-1)!! / 4^k
///   rademacher +-1/2 with probability 1/2     E x^{2k} = 4^{-k}
///   uniform    U[-sqrt(3)/2, sqrt(3)/2]        E x^{2k} = (3/4)^k / (2k+1)
///
/// Each satisfies E x^{2k} <= (C k)^k with C = subgaussian_constant().
enum class EntryLaw { gaussian, rademacher, uniform };

std::string_view to_string(EntryLaw law) noexcept;
std::optional<EntryLaw> parse_entry_law(std::string_view name) noexcept;

/// Draw from `law` using the bits of one Philox block.
double draw(EntryLaw law, const Philox4x64::Block& bits) noexcept;
/// Exact E[x^p].
double law_moment(EntryLaw law, unsigned p) noexcept;
double subgaussian_constant(EntryLaw law) noexcept;

/// Entry distribution for the off-diagonal x_{ij}, i < j, with an optional
/// distinct law for the diagonal. Without one the diagonal is i.i.d. from the
/// off-diagonal law.
class EntryDistribution {
public:
    explicit EntryDistribution(EntryLaw offdiag, std::optional<EntryLaw> diagonal = std::nullopt)
        : offdiag_(offdiag), diagonal_(diagonal) {}

    /// "gaussian", "rademacher", "uniform", or "<offdiag>/<diagonal>" such as
    /// "gaussian/rademacher". Throws ErrorKind::config on unknown names.
    static EntryDistribution from_name(std::string_view name);

    std::string name() const;

    EntryLaw offdiag_law() const noexcept { return offdiag_; }
    EntryLaw diagonal_law() const noexcept { return diagonal_.value_or(offdiag_); }
    bool has_distinct_diagonal() const noexcept { return diagonal_.has_value(); }

    double sample(const Philox4x64::Block& bits) const noexcept { return draw(offdiag_, bits); }
    double sample(PhiloxStream& stream) const noexcept { return sample(stream.next_block()); }
    double sample_diagonal(const Philox4x64::Block& bits) const noexcept {
        return draw(diagonal_law(), bits);
    }

    double moment(unsigned p) const noexcept { return law_moment(offdiag_, p); }
    double diagonal_moment(unsigned p) const noexcept { return law_moment(diagonal_law(), p); }

    friend bool operator==(const EntryDistribution&, const EntryDistribution&) = default;

private:
    EntryLaw offdiag_;
    std::optional<EntryLaw> diagonal_;
};

/// Symmetric n x n matrix W = (x_{ij} / sqrt(n)), row-major.
struct WignerSample {
    std::size_t n = 0;
    std::vector<double> entries;
    std::string ensemble;
    std::uint64_t seed = 0;

    double operator()(std::size_t i, std::size_t j) const noexcept { return entries[i * n + j]; }

    /// Wraps an arbitrary (bitwise) symmetric matrix (ensemble "custom"). Throws
    /// precondition if asymmetric, invalid_dimension if the size is wrong.
    static WignerSample from_entries(std::size_t n, std::vector<double> entries);
};

/// Key-stream tag for matrix entries; entry (i, j), i <= j, uses the block at
/// counter (i, j, 0, 0) under key (seed, kEntryStream).
inline constexpr std::uint64_t kEntryStream = 0x5749474E45520001ULL;

/// Raw (unscaled) x_{ij} for i <= j. Fill order never affects the value.
double raw_entry(const EntryDistribution& dist, std::uint64_t seed, std::size_t i,
                 std::size_t j) noexcept;

/// OpenMP-parallel over rows; output is independent of the thread count.
WignerSample sample_wigner(std::size_t n, const EntryDistribution& dist, std::uint64_t seed);

double semicircle_density(double x) noexcept;
double semicircle_cdf(double x) noexcept;
/// Zero for odd k, Catalan(k/2) / 4^{k/2} for even k.
double semicircle_moment(unsigned k);
/// Exact Catalan number; throws capacity past C_35 (uint64 range).
std::uint64_t catalan(unsigned k);

} // namespace wigner
