#include "wigner/reference.hpp"

#include "wigner/error.hpp"
#include "wigner/philox.hpp"

#include <algorithm>
#include <cmath>

namespace wigner::reference {

WignerSample sample_wigner(std::size_t n, const EntryDistribution& dist, std::uint64_t seed) {
    if (n == 0) fail(ErrorKind::invalid_dimension, "dimension must be at least 1");
    WignerSample out{n, std::vector<double>(n * n), dist.name(), seed};
    const double scale = 1.0 / std::sqrt(static_cast<double>(n));
    for (std::size_t i = 0; i < n; ++i)
        for (std::size_t j = i; j < n; ++j) {
            const double v = raw_entry(dist, seed, i, j) * scale;
            out.entries[i * n + j] = v;
            out.entries[j * n + i] = v;
        }
    return out;
}

double trace_moment_direct(std::size_t n, unsigned k, const MomentTable& table) {
    if (n == 0) fail(ErrorKind::invalid_dimension, "trace_moment_direct: n must be at least 1");
    if (k == 0) fail(ErrorKind::input, "trace_moment_direct: k must be positive");
    if (std::pow(static_cast<double>(n), k) > static_cast<double>(kTupleBudget))
        fail(ErrorKind::capacity, "index-tuple enumeration exceeds the 10^7 budget");

    std::vector<std::size_t> idx(k, 0);
    std::vector<std::pair<std::size_t, std::size_t>> edges(k);
    double sum = 0.0;
    while (true) {
        for (unsigned j = 0; j < k; ++j) edges[j] = std::minmax(idx[j], idx[(j + 1) % k]);
        std::sort(edges.begin(), edges.end());
        std::vector<std::pair<std::size_t, unsigned>> groups; // (first index, multiplicity)
        for (std::size_t a = 0; a < k;) {
            std::size_t b = a;
            while (b < k && edges[b] == edges[a]) ++b;
            groups.emplace_back(a, static_cast<unsigned>(b - a));
            a = b;
        }
        double term = 1.0;
        if (std::any_of(groups.begin(), groups.end(), [](const auto& g) { return g.second == 1; })) {
            term = 0.0;
        } else {
            for (const auto& [a, mult] : groups)
                term *= edges[a].first == edges[a].second ? table.diag(mult) : table.offdiag(mult);
        }
        sum += term;

        unsigned pos = 0;
        while (pos < k && ++idx[pos] == n) idx[pos++] = 0;
        if (pos == k) break;
    }
    return scale_by_root_n(sum, n, k);
}

std::vector<RunRecord> run_monte_carlo(const ExperimentConfig& config) {
    config.validate();
    check_capacity(config);
    const auto dist = EntryDistribution::from_name(config.ensemble);
    std::vector<RunRecord> out;
    for (auto n : config.dimensions)
        for (std::size_t r = 0; r < config.replicas; ++r) {
            const auto seed = replica_seed(config.seed, n, r);
            out.push_back(summarize_replica(config, r, eigenvalues_sym(reference::sample_wigner(n, dist, seed))));
        }
    return out;
}

} // namespace wigner::reference
