#pragma once

#include <cstddef>
#include <cstdint>
#include <initializer_list>
#include <map>
#include <set>
#include <string>
#include <string_view>
#include <utility>
#include <vector>

namespace wigner {

using Letter = std::uint32_t;

/// Finite sequence of positive letters, at least one long.
class Word {
public:
    Word() = default;
    /// Throws input on an empty sequence or a zero letter.
    explicit Word(std::vector<Letter> letters);
    Word(std::initializer_list<Letter> letters) : Word(std::vector<Letter>(letters)) {}

    /// Parses "3,1,2,3". Throws input on malformed literals.
    static Word parse(std::string_view text);

    const std::vector<Letter>& letters() const noexcept { return letters_; }
    std::size_t length() const noexcept { return letters_.size(); }
    Letter operator[](std::size_t i) const noexcept { return letters_[i]; }

    bool closed() const noexcept { return !letters_.empty() && letters_.front() == letters_.back(); }
    std::size_t weight() const;
    std::set<Letter> support() const;

    std::string to_string() const;

    friend auto operator<=>(const Word&, const Word&) = default;

private:
    std::vector<Letter> letters_;
};

/// Undirected edge {a, b} stored with a <= b; a == b is a self-loop.
using Edge = std::pair<Letter, Letter>;

inline Edge make_edge(Letter a, Letter b) noexcept {
    return a <= b ? Edge{a, b} : Edge{b, a};
}

struct WordGraph {
    std::set<Letter> vertices;
    std::map<Edge, std::size_t> traversals;

    std::size_t edge_count() const noexcept { return traversals.size(); }
    std::size_t total_traversals() const noexcept;
    bool connected() const;
};

/// G_w: vertices supp(w), one traversal per consecutive pair (self-loops kept).
WordGraph word_graph(const Word& w);

/// Ordered collection of words with the union graph G_a.
struct Sentence {
    std::vector<Word> words;

    /// Union vertex set; edge traversal counts are summed across words.
    WordGraph graph() const;
};

/// Relabel by order of first appearance: first distinct letter -> 1, ...
Word canonical_form(const Word& w);
bool equivalent(const Word& a, const Word& b);

enum class WordClass { general, weak_wigner, wigner, critical_weak_wigner };

std::string_view to_string(WordClass c) noexcept;
WordClass classify(const Word& w);

/// +1 / -1 lattice path.
struct DyckPath {
    std::vector<int> steps;

    bool valid() const noexcept;
    std::size_t semilength() const noexcept { return steps.size() / 2; }
    std::string to_string() const;

    friend auto operator<=>(const DyckPath&, const DyckPath&) = default;
};

inline constexpr std::size_t kDefaultWordLengthCap = 11;
inline constexpr unsigned kDyckCap = 12;

/// Canonical forms of closed words of `length`, lexicographic, each once.
/// Throws capacity above `cap`.
std::vector<Word> enumerate_closed_classes(std::size_t length,
                                           std::size_t cap = kDefaultWordLengthCap);

/// Step i is +1 on the first traversal of edge {s_i, s_{i+1}} and -1 on the
/// second. Throws classification if w is not a Wigner word.
DyckPath wigner_to_dyck(const Word& w);
/// Inverse of wigner_to_dyck; returns the canonical Wigner word. Throws input
/// on an invalid path.
Word dyck_to_wigner(const DyckPath& path);

/// All Dyck paths of semilength k in ascending lexicographic order of steps.
/// Throws capacity for k > 12.
std::vector<DyckPath> enumerate_dyck(unsigned k);

} // namespace wigner
