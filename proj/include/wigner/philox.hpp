#pragma once

#include <array>
#include <cstdint>

namespace wigner {

/// Philox4x64-10 counter-based generator (Salmon et al., SC'11; the
/// Random123 reference). A block is a pure function of (counter, key), so any
/// value can be regenerated from its coordinates without replaying a stream.
class Philox4x64 {
public:
    using Counter = std::array<std::uint64_t, 4>;
    using Key = std::array<std::uint64_t, 2>;
    using Block = std::array<std::uint64_t, 4>;

    static constexpr Block generate(Counter ctr, Key key) noexcept {
        for (int round = 0; round < 10; ++round) {
            if (round > 0) {
                key[0] += kWeyl0;
                key[1] += kWeyl1;
            }
            ctr = single_round(ctr, key);
        }
        return ctr;
    }

private:
    static constexpr std::uint64_t kMul0 = 0xD2E7470EE14C6C93ULL;
    static constexpr std::uint64_t kMul1 = 0xCA5A826395121157ULL;
    static constexpr std::uint64_t kWeyl0 = 0x9E3779B97F4A7C15ULL;
    static constexpr std::uint64_t kWeyl1 = 0xBB67AE8584CAA73BULL;

    static constexpr void mulhilo(std::uint64_t a, std::uint64_t b, std::uint64_t& hi,
                                  std::uint64_t& lo) noexcept {
        const unsigned __int128 product = static_cast<unsigned __int128>(a) * b;
        hi = static_cast<std::uint64_t>(product >> 64);
        lo = static_cast<std::uint64_t>(product);
    }

    static constexpr Counter single_round(const Counter& ctr, const Key& key) noexcept {
        std::uint64_t hi0 = 0, lo0 = 0, hi1 = 0, lo1 = 0;
        mulhilo(kMul0, ctr[0], hi0, lo0);
        mulhilo(kMul1, ctr[2], hi1, lo1);
        return {hi1 ^ ctr[1] ^ key[0], lo1, hi0 ^ ctr[3] ^ key[1], lo0};
    }
};

/// Sequential view over Philox blocks: counter (c0, c1, c2, i) for i = 0, 1, ...
/// Used wherever a plain stream is wanted (bootstrap, permutations, tests).
class PhiloxStream {
public:
    PhiloxStream(std::uint64_t seed, std::uint64_t stream, std::uint64_t c0 = 0,
                 std::uint64_t c1 = 0) noexcept
        : key_{seed, stream}, c0_(c0), c1_(c1) {}

    std::uint64_t next_u64() noexcept {
        if (pos_ == 4) {
            block_ = Philox4x64::generate({c0_, c1_, hi_, index_++}, key_);
            if (index_ == 0) ++hi_;
            pos_ = 0;
        }
        return block_[pos_++];
    }

    /// Uniform on [0, 1) with 53 random bits.
    double uniform() noexcept { return static_cast<double>(next_u64() >> 11) * 0x1.0p-53; }

    /// Unbiased integer in [0, bound) (Lemire's multiply-and-reject).
    std::uint64_t below(std::uint64_t bound) noexcept {
        unsigned __int128 m = static_cast<unsigned __int128>(next_u64()) * bound;
        auto low = static_cast<std::uint64_t>(m);
        if (low < bound) {
            const std::uint64_t threshold = (0 - bound) % bound;
            while (low < threshold) {
                m = static_cast<unsigned __int128>(next_u64()) * bound;
                low = static_cast<std::uint64_t>(m);
            }
        }
        return static_cast<std::uint64_t>(m >> 64);
    }

    Philox4x64::Block next_block() noexcept {
        return {next_u64(), next_u64(), next_u64(), next_u64()};
    }

private:
    Philox4x64::Key key_;
    std::uint64_t c0_;
    std::uint64_t c1_;
    std::uint64_t hi_ = 0;
    std::uint64_t index_ = 0;
    Philox4x64::Block block_{};
    int pos_ = 4;
};

/// SplitMix64 output function; a bijection on 64-bit words.
constexpr std::uint64_t mix64(std::uint64_t x) noexcept {
    x += 0x9E3779B97F4A7C15ULL;
    x = (x ^ (x >> 30)) * 0xBF58476D1CE4E5B9ULL;
    x = (x ^ (x >> 27)) * 0x94D049BB133111EBULL;
    return x ^ (x >> 31);
}

/// Seed for replica `replica` of dimension `n`:
///   mix64(mix64(mix64(master) ^ n) ^ replica).
/// Injective in `replica` for fixed (master, n) because mix64 is a bijection.
constexpr std::uint64_t replica_seed(std::uint64_t master, std::uint64_t n,
                                     std::uint64_t replica) noexcept {
    return mix64(mix64(mix64(master) ^ n) ^ replica);
}

/// Independent sub-seed for a named purpose (bootstrap, permutation, ...).
constexpr std::uint64_t derive_seed(std::uint64_t master, std::uint64_t purpose) noexcept {
    return mix64(mix64(master) ^ mix64(purpose ^ 0xA5A5A5A5A5A5A5A5ULL));
}

} // namespace wigner
