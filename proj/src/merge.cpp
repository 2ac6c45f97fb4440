#include "wigner/merge.hpp"

#include "wigner/error.hpp"

namespace wigner {

std::optional<SharedEdge> find_shared_edge(const Word& inner, const Word& outer) {
    if (!inner.closed() || !outer.closed())
        fail(ErrorKind::precondition, "find_shared_edge: both words must be closed");
    const auto inner_edges = step_multiset(inner);
    for (std::size_t p = 0; p + 1 < outer.length(); ++p) {
        const Edge e = make_edge(outer[p], outer[p + 1]);
        if (!inner_edges.contains(e)) continue;
        SharedEdge out;
        out.edge = e;
        out.alpha = outer[p];
        out.beta = outer[p + 1];
        out.outer_pos = p;
        for (std::size_t q = 0; q + 1 < inner.length(); ++q) {
            if (make_edge(inner[q], inner[q + 1]) != e) continue;
            out.inner_pos = q;
            out.same_orientation = inner[q] == out.alpha;
            break;
        }
        return out;
    }
    return std::nullopt;
}

Word merge_words(const Word& inner, const Word& outer) {
    const auto shared = find_shared_edge(inner, outer);
    if (!shared) fail(ErrorKind::no_shared_edge, "merge_words: edge sets are disjoint");

    // inner as a cyclic walk of period l1 - 1 (its last letter repeats the first)
    const std::size_t period = inner.length() - 1;
    const std::size_t q = shared->inner_pos;
    const auto at = [&](std::size_t i) { return inner[i % period]; };

    std::vector<Letter> out(outer.letters().begin(),
                            outer.letters().begin() + static_cast<std::ptrdiff_t>(shared->outer_pos) + 1);
    out.reserve(inner.length() + outer.length() - 1);
    // Walk every inner step except the shared traversal, from beta back to alpha.
    if (shared->same_orientation) {
        for (std::size_t s = 0; s < period; ++s) out.push_back(at(q + 1 + s));
    } else {
        for (std::size_t s = 0; s < period; ++s) out.push_back(at(q + period - s));
    }
    out.insert(out.end(),
               outer.letters().begin() + static_cast<std::ptrdiff_t>(shared->outer_pos) + 1,
               outer.letters().end());
    return Word(std::move(out));
}

std::map<Edge, std::size_t> step_multiset(const Word& w) {
    std::map<Edge, std::size_t> steps;
    for (std::size_t i = 0; i + 1 < w.length(); ++i) ++steps[make_edge(w[i], w[i + 1])];
    return steps;
}

MergeReport check_merge(const Word& inner, const Word& outer, const Word& merged) {
    MergeReport r;
    r.closed = merged.closed() && merged[0] == outer[0];
    r.length = merged.length() == inner.length() + outer.length() - 1;
    auto expected = step_multiset(inner);
    for (const auto& [edge, count] : step_multiset(outer)) expected[edge] += count;
    r.multiset = expected == step_multiset(merged);
    auto support = inner.support();
    const auto outer_support = outer.support();
    support.insert(outer_support.begin(), outer_support.end());
    r.support = support == merged.support();
    return r;
}

} // namespace wigner
