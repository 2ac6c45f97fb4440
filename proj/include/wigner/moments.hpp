#pragma once

#include "wigner/ensemble.hpp"
#include "wigner/words.hpp"

#include <cstddef>
#include <cstdint>
#include <span>
#include <vector>

namespace wigner {

inline constexpr unsigned kDefaultMomentCap = 16;
inline constexpr std::uint64_t kTupleBudget = 10'000'000;

/// Exact E[x^p] for off-diagonal and diagonal entries, p <= cap.
class MomentTable {
public:
    MomentTable(std::vector<double> offdiag, std::vector<double> diag);
    explicit MomentTable(const EntryDistribution& dist, unsigned cap = kDefaultMomentCap);

    unsigned cap() const noexcept { return static_cast<unsigned>(offdiag_.size() - 1); }
    /// Throws capacity for p > cap().
    double offdiag(unsigned p) const;
    double diag(unsigned p) const;

private:
    std::vector<double> offdiag_;
    std::vector<double> diag_;
};

/// E[prod_j x_{i_j, i_{j+1}}] = prod over distinct edges of table(multiplicity),
/// diag() for self-loops. Throws precondition if w is not closed.
double expected_X_w(const Word& w, const MomentTable& table);
/// Same for a sentence: multiplicities are pooled across words, so words with
/// disjoint edge sets factor.
double expected_X_sentence(const Sentence& a, const MomentTable& table);

/// Exact E[Tr W^k] by enumerating all n^k index tuples (i_0, ..., i_{k-1}).
/// Parallel over fixed chunks of tuples; partial sums combined in chunk order,
/// so the value does not depend on the thread count.
/// Throws capacity when n^k exceeds kTupleBudget.
double trace_moment_direct(std::size_t n, unsigned k, const MomentTable& table);

/// Exact E[Tr W^k] summed over canonical closed classes of length k + 1,
/// each weighted by n (n-1) ... (n - wt + 1). Throws capacity when k + 1
/// exceeds the word enumeration cap.
double trace_moment_by_classes(std::size_t n, unsigned k, const MomentTable& table,
                               std::size_t word_cap = kDefaultWordLengthCap);

/// Exact E[prod_i (Tr W^{m_i} - E Tr W^{m_i})] by multilinear expansion over
/// index tuples. Throws capacity when n^{sum m_i} exceeds kTupleBudget.
double exact_joint_centered(std::size_t n, std::span<const unsigned> powers,
                            const MomentTable& table);

/// sum / n^{k/2}; for even k a single correctly rounded division by an
/// exact integer power.
double scale_by_root_n(double sum, std::size_t n, unsigned k) noexcept;

/// n (n-1) ... (n - w + 1) as a double.
double falling_factorial(std::size_t n, std::size_t w) noexcept;

} // namespace wigner
