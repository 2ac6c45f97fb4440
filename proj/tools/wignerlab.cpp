#include "wigner/checks.hpp"
#include "wigner/config.hpp"
#include "wigner/error.hpp"
#include "wigner/harness.hpp"
#include "wigner/merge.hpp"
#include "wigner/moments.hpp"
#include "wigner/records.hpp"
#include "wigner/words.hpp"

#include <CLI11.hpp>

#include <cstdio>
#include <iostream>
#include <map>
#include <optional>

namespace {

using namespace wigner;

constexpr int kOk = 0;
constexpr int kChecksFailed = 1;
constexpr int kUsage = 2;
constexpr int kCapacity = 3;

int exit_code(const Error& e) {
    switch (e.kind()) {
    case ErrorKind::capacity: return kCapacity;
    case ErrorKind::config:
    case ErrorKind::input:
    case ErrorKind::classification:
    case ErrorKind::precondition:
    case ErrorKind::no_shared_edge:
    case ErrorKind::domain:
    case ErrorKind::range:
    case ErrorKind::invalid_dimension: return kUsage;
    default: return kChecksFailed;
    }
}

int cmd_run(const std::string& path, std::optional<int> workers) {
    const auto config = load_config(path);
    auto experiment = prepare_for_checks(config.experiment);
    if (workers) experiment.workers = *workers;
    check_capacity(experiment);

    RecordWriter writer(config.records_path, config);
    std::vector<RunRecord> all;
    for (auto n : experiment.dimensions) {
        auto batch = run_dimension(experiment, n);
        writer.append(batch);
        std::move(batch.begin(), batch.end(), std::back_inserter(all));
        std::fprintf(stderr, "n=%zu: %zu replicas\n", n, experiment.replicas);
    }
    const auto rows = run_checks(experiment, all);
    write_summary(config.summary_path, rows);
    std::cout << summary_csv(rows);
    const bool ok = std::all_of(rows.begin(), rows.end(), [](const SummaryRow& r) { return r.pass; });
    return ok ? kOk : kChecksFailed;
}

int cmd_enumerate(std::size_t length, std::size_t cap, bool counts) {
    if (counts) {
        std::map<std::string_view, std::size_t> tally;
        for (const auto& w : enumerate_closed_classes(length, cap)) ++tally[to_string(classify(w))];
        std::cout << "length,class,count\n";
        for (auto c : {WordClass::general, WordClass::weak_wigner, WordClass::wigner,
                       WordClass::critical_weak_wigner})
            std::cout << length << ',' << to_string(c) << ',' << tally[to_string(c)] << '\n';
        return kOk;
    }
    std::cout << "word,class,weight\n";
    for (const auto& w : enumerate_closed_classes(length, cap))
        std::cout << '"' << w.to_string() << "\"," << to_string(classify(w)) << ',' << w.weight() << '\n';
    return kOk;
}

int cmd_classify(const std::string& text) {
    std::cout << to_string(classify(Word::parse(text))) << '\n';
    return kOk;
}

int cmd_merge(const std::string& a, const std::string& b) {
    const auto inner = Word::parse(a), outer = Word::parse(b);
    const auto merged = merge_words(inner, outer);
    const auto report = check_merge(inner, outer, merged);
    auto verdict = [](bool v) { return v ? "ok" : "FAILED"; };
    std::cout << merged.to_string() << '\n'
              << "closed: " << verdict(report.closed) << '\n'
              << "length: " << verdict(report.length) << '\n'
              << "multiset: " << verdict(report.multiset) << '\n'
              << "support: " << verdict(report.support) << '\n';
    return report.ok() ? kOk : kChecksFailed;
}

int cmd_dyck(unsigned k) {
    for (const auto& p : enumerate_dyck(k)) std::cout << p.to_string() << '\n';
    return kOk;
}

int cmd_oracle(std::size_t n, unsigned k, const std::string& dist_name, const std::string& method) {
    const MomentTable table(EntryDistribution::from_name(dist_name));
    std::printf("n,k,dist,method,value\n");
    std::optional<double> direct, classes;
    if (method != "classes") {
        direct = trace_moment_direct(n, k, table);
        std::printf("%zu,%u,%s,direct,%.17g\n", n, k, dist_name.c_str(), *direct);
    }
    if (method != "direct") {
        classes = trace_moment_by_classes(n, k, table);
        std::printf("%zu,%u,%s,classes,%.17g\n", n, k, dist_name.c_str(), *classes);
    }
    if (direct && classes)
        std::printf("%zu,%u,%s,difference,%.17g\n", n, k, dist_name.c_str(), *direct - *classes);
    return kOk;
}

} // namespace

int main(int argc, char** argv) {
    CLI::App app{"Wigner-matrix laboratory: moment oracles, word combinatorics, Monte Carlo checks"};
    app.require_subcommand(1);

    std::string config_path;
    std::optional<int> workers;
    auto* run = app.add_subcommand("run", "run the experiment and checks described by a JSON config");
    run->add_option("config", config_path, "config file")->required();
    run->add_option("--workers", workers, "override the worker count (0 = OpenMP default)")
        ->check(CLI::NonNegativeNumber);

    auto* words = app.add_subcommand("words", "word and Dyck-path utilities");
    words->require_subcommand(1);
    std::size_t length = 0, cap = kDefaultWordLengthCap;
    auto* enumerate = words->add_subcommand("enumerate", "canonical closed word classes of a length");
    enumerate->add_option("--length", length, "word length")->required();
    enumerate->add_option("--cap", cap, "length cap")->capture_default_str();
    bool counts = false;
    enumerate->add_flag("--counts", counts, "print class counts instead of the words");
    std::string word_a, word_b;
    auto* classify_cmd = words->add_subcommand("classify", "class of a closed word");
    classify_cmd->add_option("word", word_a, "comma-separated letters, e.g. 1,2,1")->required();
    auto* merge = words->add_subcommand("merge", "merge two closed words sharing an edge");
    merge->add_option("inner", word_a, "w1")->required();
    merge->add_option("outer", word_b, "w2")->required();
    unsigned dyck_k = 0;
    auto* dyck = words->add_subcommand("dyck", "Dyck paths of semilength k");
    dyck->add_option("--k", dyck_k, "semilength")->required();

    std::size_t n = 0;
    unsigned k = 0;
    std::string dist = "gaussian", method = "both";
    auto* oracle = app.add_subcommand("oracle", "exact E[Tr W^k] for small n");
    oracle->add_option("--n", n, "dimension")->required();
    oracle->add_option("--k", k, "power")->required();
    oracle->add_option("--dist", dist, "entry distribution")->capture_default_str();
    oracle->add_option("--method", method, "direct, classes or both")
        ->check(CLI::IsMember({"direct", "classes", "both"}))
        ->capture_default_str();

    try {
        app.parse(argc, argv);
    } catch (const CLI::ParseError& e) {
        const int code = app.exit(e);
        return code == 0 ? kOk : kUsage;
    }

    try {
        if (*run) return cmd_run(config_path, workers);
        if (*enumerate) return cmd_enumerate(length, cap, counts);
        if (*classify_cmd) return cmd_classify(word_a);
        if (*merge) return cmd_merge(word_a, word_b);
        if (*dyck) return cmd_dyck(dyck_k);
        if (*oracle) return cmd_oracle(n, k, dist, method);
    } catch (const Error& e) {
        std::cerr << "error (" << to_string(e.kind()) << "): " << e.what() << '\n';
        return exit_code(e);
    }
    return kUsage;
}
