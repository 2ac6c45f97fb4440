#pragma once

#include "wigner/words.hpp"

#include <cstddef>
#include <map>
#include <optional>

namespace wigner {

/// Location of the splice edge {alpha, beta}: alpha = outer[outer_pos],
/// beta = outer[outer_pos + 1], and inner[inner_pos], inner[inner_pos + 1] is
/// the first traversal of the same edge in the inner word.
struct SharedEdge {
    Edge edge;
    Letter alpha = 0;
    Letter beta = 0;
    std::size_t outer_pos = 0;
    std::size_t inner_pos = 0;
    /// true when the inner word traverses it as (alpha, beta), false for (beta, alpha).
    bool same_orientation = true;
};

/// Scans `outer` (w2) left to right for the first edge that `inner` (w1)
/// also traverses. Throws precondition if either word is not closed.
std::optional<SharedEdge> find_shared_edge(const Word& inner, const Word& outer);

/// Splices closed `inner` (w1) into closed `outer` (w2) at their first shared
/// edge. The result starts and ends at outer's first letter, has length
/// l(inner) + l(outer) - 1, and its undirected step multiset is the disjoint
/// union of the inputs'. A reversed shared edge walks inner's body backwards.
/// Throws no_shared_edge when the edge sets are disjoint.
Word merge_words(const Word& inner, const Word& outer);

/// Undirected step multiset {s_i, s_{i+1}} with multiplicities.
std::map<Edge, std::size_t> step_multiset(const Word& w);

struct MergeReport {
    bool closed = false;
    bool length = false;
    bool multiset = false;
    bool support = false;

    bool ok() const noexcept { return closed && length && multiset && support; }
};

/// Checks the merge postconditions against the inputs.
MergeReport check_merge(const Word& inner, const Word& outer, const Word& merged);

} // namespace wigner
