#include "wigner/words.hpp"

#include "wigner/error.hpp"

#include <charconv>
#include <unordered_map>

namespace wigner {

Word::Word(std::vector<Letter> letters) : letters_(std::move(letters)) {
    if (letters_.empty()) fail(ErrorKind::input, "a word is at least one letter long");
    for (Letter l : letters_)
        if (l == 0) fail(ErrorKind::input, "letters are positive integers");
}

Word Word::parse(std::string_view text) {
    std::vector<Letter> letters;
    std::size_t pos = 0;
    while (pos <= text.size()) {
        const auto comma = text.find(',', pos);
        auto token = text.substr(pos, comma == std::string_view::npos ? text.npos : comma - pos);
        while (!token.empty() && token.front() == ' ') token.remove_prefix(1);
        while (!token.empty() && token.back() == ' ') token.remove_suffix(1);
        Letter value = 0;
        const auto [end, ec] = std::from_chars(token.data(), token.data() + token.size(), value);
        if (token.empty() || ec != std::errc{} || end != token.data() + token.size())
            fail(ErrorKind::input, "malformed word literal '" + std::string(text) + "'");
        letters.push_back(value);
        if (comma == std::string_view::npos) break;
        pos = comma + 1;
    }
    return Word(std::move(letters));
}

std::size_t Word::weight() const { return support().size(); }

std::set<Letter> Word::support() const { return {letters_.begin(), letters_.end()}; }

std::string Word::to_string() const {
    std::string out;
    for (std::size_t i = 0; i < letters_.size(); ++i) {
        if (i > 0) out += ',';
        out += std::to_string(letters_[i]);
    }
    return out;
}

std::size_t WordGraph::total_traversals() const noexcept {
    std::size_t total = 0;
    for (const auto& [edge, count] : traversals) total += count;
    return total;
}

bool WordGraph::connected() const {
    if (vertices.empty()) return true;
    std::map<Letter, std::vector<Letter>> adjacency;
    for (const auto& [edge, count] : traversals) {
        adjacency[edge.first].push_back(edge.second);
        adjacency[edge.second].push_back(edge.first);
    }
    std::set<Letter> seen{*vertices.begin()};
    std::vector<Letter> frontier{*vertices.begin()};
    while (!frontier.empty()) {
        const Letter v = frontier.back();
        frontier.pop_back();
        for (Letter u : adjacency[v])
            if (seen.insert(u).second) frontier.push_back(u);
    }
    return seen.size() == vertices.size();
}

WordGraph word_graph(const Word& w) {
    WordGraph g;
    g.vertices = w.support();
    for (std::size_t i = 0; i + 1 < w.length(); ++i) ++g.traversals[make_edge(w[i], w[i + 1])];
    return g;
}

WordGraph Sentence::graph() const {
    WordGraph g;
    for (const auto& w : words) {
        const auto part = word_graph(w);
        g.vertices.insert(part.vertices.begin(), part.vertices.end());
        for (const auto& [edge, count] : part.traversals) g.traversals[edge] += count;
    }
    return g;
}

Word canonical_form(const Word& w) {
    std::unordered_map<Letter, Letter> relabel;
    std::vector<Letter> out;
    out.reserve(w.length());
    for (Letter l : w.letters()) {
        auto [it, inserted] = relabel.try_emplace(l, static_cast<Letter>(relabel.size() + 1));
        out.push_back(it->second);
    }
    return Word(std::move(out));
}

bool equivalent(const Word& a, const Word& b) { return canonical_form(a) == canonical_form(b); }

std::string_view to_string(WordClass c) noexcept {
    switch (c) {
    case WordClass::general: return "general";
    case WordClass::weak_wigner: return "weak_wigner";
    case WordClass::wigner: return "wigner";
    case WordClass::critical_weak_wigner: return "critical_weak_wigner";
    }
    return "unknown";
}

WordClass classify(const Word& w) {
    if (!w.closed()) return WordClass::general;
    const auto g = word_graph(w);
    for (const auto& [edge, count] : g.traversals)
        if (count < 2) return WordClass::general;
    const std::size_t twice_weight = 2 * g.vertices.size();
    if (twice_weight == w.length() + 1) return WordClass::wigner;
    if (twice_weight + 1 == w.length()) return WordClass::critical_weak_wigner;
    return WordClass::weak_wigner;
}

bool DyckPath::valid() const noexcept {
    long height = 0;
    for (int s : steps) {
        if (s != 1 && s != -1) return false;
        height += s;
        if (height < 0) return false;
    }
    return height == 0;
}

std::string DyckPath::to_string() const {
    std::string out;
    for (std::size_t i = 0; i < steps.size(); ++i) {
        if (i > 0) out += ',';
        out += steps[i] > 0 ? "+1" : "-1";
    }
    return out;
}

namespace {

// Restricted growth strings r_0 = 1, r_i <= 1 + max(r_0..r_{i-1}), visited in
// lexicographic order.
void grow(std::vector<Letter>& prefix, Letter max_letter, std::size_t body_length,
          std::vector<Word>& out) {
    if (prefix.size() == body_length) {
        auto letters = prefix;
        letters.push_back(1);
        out.emplace_back(std::move(letters));
        return;
    }
    for (Letter next = 1; next <= max_letter + 1; ++next) {
        prefix.push_back(next);
        grow(prefix, std::max(max_letter, next), body_length, out);
        prefix.pop_back();
    }
}

void extend_dyck(std::vector<int>& steps, int height, std::size_t length,
                 std::vector<DyckPath>& out) {
    if (steps.size() == length) {
        out.push_back(DyckPath{steps});
        return;
    }
    const auto remaining = static_cast<int>(length - steps.size());
    if (height > 0) {
        steps.push_back(-1);
        extend_dyck(steps, height - 1, length, out);
        steps.pop_back();
    }
    if (height + 1 <= remaining - 1) {
        steps.push_back(1);
        extend_dyck(steps, height + 1, length, out);
        steps.pop_back();
    }
}

} // namespace

std::vector<Word> enumerate_closed_classes(std::size_t length, std::size_t cap) {
    if (length == 0) fail(ErrorKind::input, "word length must be positive");
    if (length > cap) fail(ErrorKind::capacity, "word length above enumeration cap");
    std::vector<Word> out;
    if (length == 1) {
        out.push_back(Word{1});
        return out;
    }
    std::vector<Letter> prefix{1};
    grow(prefix, 1, length - 1, out);
    return out;
}

DyckPath wigner_to_dyck(const Word& w) {
    if (classify(w) != WordClass::wigner)
        fail(ErrorKind::classification, "wigner_to_dyck: '" + w.to_string() + "' is not a Wigner word");
    DyckPath path;
    std::set<Edge> seen;
    for (std::size_t i = 0; i + 1 < w.length(); ++i)
        path.steps.push_back(seen.insert(make_edge(w[i], w[i + 1])).second ? 1 : -1);
    return path;
}

Word dyck_to_wigner(const DyckPath& path) {
    if (!path.valid()) fail(ErrorKind::input, "dyck_to_wigner: not a Dyck path");
    std::vector<Letter> letters{1};
    std::vector<Letter> stack{1};
    Letter next = 2;
    for (int s : path.steps) {
        if (s > 0) {
            stack.push_back(next++);
        } else {
            stack.pop_back();
        }
        letters.push_back(stack.back());
    }
    return Word(std::move(letters));
}

std::vector<DyckPath> enumerate_dyck(unsigned k) {
    if (k > kDyckCap) fail(ErrorKind::capacity, "Dyck enumeration cap is k <= 12");
    std::vector<DyckPath> out;
    std::vector<int> steps;
    extend_dyck(steps, 0, 2 * static_cast<std::size_t>(k), out);
    return out;
}

} // namespace wigner
