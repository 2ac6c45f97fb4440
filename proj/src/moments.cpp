#include "wigner/moments.hpp"

#include "wigner/error.hpp"

#include <algorithm>
#include <cmath>
#include <exception>
#include <limits>

namespace wigner {

MomentTable::MomentTable(std::vector<double> offdiag, std::vector<double> diag)
    : offdiag_(std::move(offdiag)), diag_(std::move(diag)) {
    if (offdiag_.size() < 3 || offdiag_.size() != diag_.size())
        fail(ErrorKind::input, "moment tables must cover p = 0..cap with cap >= 2");
}

MomentTable::MomentTable(const EntryDistribution& dist, unsigned cap)
    : offdiag_(cap + 1), diag_(cap + 1) {
    if (cap < 2) fail(ErrorKind::input, "moment table cap must be at least 2");
    for (unsigned p = 0; p <= cap; ++p) {
        offdiag_[p] = dist.moment(p);
        diag_[p] = dist.diagonal_moment(p);
    }
}

double MomentTable::offdiag(unsigned p) const {
    if (p >= offdiag_.size()) fail(ErrorKind::capacity, "edge multiplicity above moment table cap");
    return offdiag_[p];
}

double MomentTable::diag(unsigned p) const {
    if (p >= diag_.size()) fail(ErrorKind::capacity, "edge multiplicity above moment table cap");
    return diag_[p];
}

namespace {

using PackedEdge = std::uint64_t;

PackedEdge pack(std::uint64_t a, std::uint64_t b) noexcept {
    return a <= b ? (a << 32) | b : (b << 32) | a;
}

// Product over distinct edges of the table moment at their multiplicity.
// Sorts `edges` in place. Any edge seen once contributes E[x] = 0.
double edge_expectation(std::vector<PackedEdge>& edges, const MomentTable& table) {
    std::sort(edges.begin(), edges.end());
    for (std::size_t i = 0; i < edges.size();) {
        std::size_t j = i;
        while (j < edges.size() && edges[j] == edges[i]) ++j;
        if (j - i == 1) return 0.0;
        i = j;
    }
    double product = 1.0;
    for (std::size_t i = 0; i < edges.size();) {
        std::size_t j = i;
        while (j < edges.size() && edges[j] == edges[i]) ++j;
        const auto mult = static_cast<unsigned>(j - i);
        const bool loop = (edges[i] >> 32) == (edges[i] & 0xFFFFFFFFULL);
        product *= loop ? table.diag(mult) : table.offdiag(mult);
        i = j;
    }
    return product;
}

std::uint64_t checked_power(std::size_t n, unsigned k) {
    std::uint64_t total = 1;
    for (unsigned i = 0; i < k; ++i) {
        if (total > kTupleBudget / std::max<std::size_t>(n, 1))
            fail(ErrorKind::capacity, "index-tuple enumeration exceeds the 10^7 budget");
        total *= n;
    }
    if (total > kTupleBudget) fail(ErrorKind::capacity, "index-tuple enumeration exceeds the 10^7 budget");
    return total;
}

constexpr std::uint64_t kChunk = 4096;

// Sums f(t) for t in [0, total) over fixed chunks; partial sums are added in
// chunk order, so the result is independent of scheduling.
template <class F>
double chunked_sum(std::uint64_t total, F&& f) {
    const std::uint64_t chunks = (total + kChunk - 1) / kChunk;
    std::vector<double> partial(chunks, 0.0);
    std::exception_ptr error;
#pragma omp parallel for schedule(dynamic, 1)
    for (std::int64_t c = 0; c < static_cast<std::int64_t>(chunks); ++c) {
        try {
            double s = 0.0;
            const std::uint64_t begin = static_cast<std::uint64_t>(c) * kChunk;
            const std::uint64_t end = std::min(total, begin + kChunk);
            for (std::uint64_t t = begin; t < end; ++t) s += f(t);
            partial[static_cast<std::size_t>(c)] = s;
        } catch (...) {
#pragma omp critical(wigner_chunked_sum_error)
            if (!error) error = std::current_exception();
        }
    }
    if (error) std::rethrow_exception(error);
    double sum = 0.0;
    for (double s : partial) sum += s;
    return sum;
}

void decode(std::uint64_t t, std::size_t n, std::vector<std::uint64_t>& digits) {
    for (auto& d : digits) {
        d = t % n;
        t /= n;
    }
}

} // namespace

double expected_X_w(const Word& w, const MomentTable& table) {
    if (!w.closed()) fail(ErrorKind::precondition, "expected_X_w: word must be closed");
    std::vector<PackedEdge> edges;
    edges.reserve(w.length());
    for (std::size_t i = 0; i + 1 < w.length(); ++i) edges.push_back(pack(w[i], w[i + 1]));
    return edge_expectation(edges, table);
}

double expected_X_sentence(const Sentence& a, const MomentTable& table) {
    std::vector<PackedEdge> edges;
    for (const auto& w : a.words) {
        if (!w.closed()) fail(ErrorKind::precondition, "expected_X_sentence: words must be closed");
        for (std::size_t i = 0; i + 1 < w.length(); ++i) edges.push_back(pack(w[i], w[i + 1]));
    }
    return edge_expectation(edges, table);
}

double scale_by_root_n(double sum, std::size_t n, unsigned k) noexcept {
    const double nd = static_cast<double>(n);
    double denominator = std::pow(nd, k / 2);
    if (k % 2 == 1) denominator *= std::sqrt(nd);
    return sum / denominator;
}

double falling_factorial(std::size_t n, std::size_t w) noexcept {
    double v = 1.0;
    for (std::size_t i = 0; i < w; ++i) {
        if (i >= n) return 0.0;
        v *= static_cast<double>(n - i);
    }
    return v;
}

double trace_moment_direct(std::size_t n, unsigned k, const MomentTable& table) {
    if (n == 0) fail(ErrorKind::invalid_dimension, "trace_moment_direct: n must be at least 1");
    if (k == 0) fail(ErrorKind::input, "trace_moment_direct: k must be positive");
    const std::uint64_t total = checked_power(n, k);
    const double sum = chunked_sum(total, [&](std::uint64_t t) {
        thread_local std::vector<std::uint64_t> digits;
        thread_local std::vector<PackedEdge> edges;
        digits.resize(k);
        decode(t, n, digits);
        edges.clear();
        for (unsigned j = 0; j < k; ++j) edges.push_back(pack(digits[j], digits[(j + 1) % k]));
        return edge_expectation(edges, table);
    });
    return scale_by_root_n(sum, n, k);
}

double trace_moment_by_classes(std::size_t n, unsigned k, const MomentTable& table,
                               std::size_t word_cap) {
    if (n == 0) fail(ErrorKind::invalid_dimension, "trace_moment_by_classes: n must be at least 1");
    if (k == 0) fail(ErrorKind::input, "trace_moment_by_classes: k must be positive");
    double sum = 0.0;
    for (const auto& w : enumerate_closed_classes(k + 1, word_cap)) {
        const double count = falling_factorial(n, w.weight());
        if (count == 0.0) continue;
        sum += count * expected_X_w(w, table);
    }
    return scale_by_root_n(sum, n, k);
}

double exact_joint_centered(std::size_t n, std::span<const unsigned> powers,
                            const MomentTable& table) {
    if (n == 0) fail(ErrorKind::invalid_dimension, "exact_joint_centered: n must be at least 1");
    if (powers.empty()) fail(ErrorKind::input, "exact_joint_centered: no powers given");
    if (powers.size() > 16) fail(ErrorKind::capacity, "exact_joint_centered: too many factors");
    unsigned total_power = 0;
    for (unsigned m : powers) {
        if (m == 0) fail(ErrorKind::input, "exact_joint_centered: powers must be positive");
        total_power += m;
    }
    const std::uint64_t total = checked_power(n, total_power);
    const std::size_t l = powers.size();
    const std::uint32_t subsets = 1u << l;

    const double sum = chunked_sum(total, [&](std::uint64_t t) {
        thread_local std::vector<std::uint64_t> digits;
        thread_local std::vector<std::vector<PackedEdge>> word_edges;
        thread_local std::vector<PackedEdge> pooled;
        thread_local std::vector<double> means;
        digits.resize(total_power);
        decode(t, n, digits);
        word_edges.resize(l);
        means.resize(l);
        std::size_t offset = 0;
        for (std::size_t i = 0; i < l; ++i) {
            auto& e = word_edges[i];
            e.clear();
            const unsigned m = powers[i];
            for (unsigned j = 0; j < m; ++j)
                e.push_back(pack(digits[offset + j], digits[offset + (j + 1) % m]));
            offset += m;
            pooled = e;
            means[i] = edge_expectation(pooled, table);
        }
        // E[prod_i (X_i - mu_i)] = sum_S E[prod_{i in S} X_i] prod_{i not in S} (-mu_i)
        double value = 0.0;
        for (std::uint32_t s = 0; s < subsets; ++s) {
            double outside = 1.0;
            pooled.clear();
            for (std::size_t i = 0; i < l; ++i) {
                if (s & (1u << i)) {
                    pooled.insert(pooled.end(), word_edges[i].begin(), word_edges[i].end());
                } else {
                    outside *= -means[i];
                }
            }
            if (outside == 0.0) continue;
            value += outside * (pooled.empty() ? 1.0 : edge_expectation(pooled, table));
        }
        return value;
    });
    return scale_by_root_n(sum, n, total_power);
}

} // namespace wigner
