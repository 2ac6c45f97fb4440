#include "wigner/records.hpp"

#include "wigner/error.hpp"

#include <json.hpp>

#include <charconv>

namespace wigner {

namespace {

using nlohmann::json;

std::string format_double(double v) {
    char buf[32];
    const auto end = std::to_chars(buf, buf + sizeof buf, v).ptr;
    return {buf, end};
}

} // namespace

std::string record_line(const RunRecord& r) {
    json traces = json::object();
    for (const auto& [k, v] : r.trace_powers) traces[std::to_string(k)] = v;
    json j = {{"type", "record"},
              {"replica", r.replica},
              {"n", r.n},
              {"seed", r.seed},
              {"eigen_digest", r.eigen_digest},
              {"lss", r.lss},
              {"trace_powers", traces},
              {"edge", r.edge}};
    return j.dump();
}

std::string header_line(const RunConfig& config) {
    json j = {{"type", "header"},
              {"version", std::string(kArtifactVersion)},
              {"config_digest", config.digest},
              {"config", json::parse(config.canonical)}};
    return j.dump();
}

RecordWriter::RecordWriter(const std::filesystem::path& path, const RunConfig& config)
    : out_(path, std::ios::binary | std::ios::trunc), path_(path) {
    if (!out_) fail(ErrorKind::input, "cannot open record file '" + path.string() + "'");
    out_ << header_line(config) << '\n';
    out_.flush();
}

void RecordWriter::append(std::span<const RunRecord> records) {
    for (const auto& r : records) out_ << record_line(r) << '\n';
    out_.flush();
    if (!out_) fail(ErrorKind::input, "write failed on '" + path_.string() + "'");
}

std::string summary_csv(std::span<const SummaryRow> rows) {
    std::string out(kSummaryHeader);
    out += '\n';
    for (const auto& r : rows) {
        out += r.check + ',' + std::to_string(r.n) + ',' + r.statistic + ',' + format_double(r.value) + ',' +
               format_double(r.tolerance) + ',' + (r.std_error ? format_double(*r.std_error) : "") + ',' +
               (r.pass ? "pass" : "fail") + '\n';
    }
    return out;
}

void write_summary(const std::filesystem::path& path, std::span<const SummaryRow> rows) {
    std::ofstream out(path, std::ios::binary | std::ios::trunc);
    if (!out) fail(ErrorKind::input, "cannot open summary file '" + path.string() + "'");
    out << summary_csv(rows);
    if (!out) fail(ErrorKind::input, "write failed on '" + path.string() + "'");
}

} // namespace wigner
