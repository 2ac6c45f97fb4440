#pragma once

#include "wigner/config.hpp"
#include "wigner/harness.hpp"

#include <filesystem>
#include <fstream>
#include <optional>
#include <span>
#include <string>
#include <vector>

namespace wigner {

/// One JSON object per line, keys sorted.
std::string record_line(const RunRecord& record);
/// {"type":"header","version":...,"config_digest":...,"config":{...}}
std::string header_line(const RunConfig& config);

/// Record file writer: truncates on open, writes the header, then appends
/// batches of records, flushing after each batch.
class RecordWriter {
public:
    RecordWriter(const std::filesystem::path& path, const RunConfig& config);
    void append(std::span<const RunRecord> records);

private:
    std::ofstream out_;
    std::filesystem::path path_;
};

struct SummaryRow {
    std::string check;
    /// 0 for rows that span every dimension.
    std::size_t n = 0;
    std::string statistic;
    double value = 0.0;
    double tolerance = 0.0;
    std::optional<double> std_error;
    bool pass = false;
};

inline constexpr std::string_view kSummaryHeader = "check,n,statistic,value,tolerance,stderr,pass";

std::string summary_csv(std::span<const SummaryRow> rows);
void write_summary(const std::filesystem::path& path, std::span<const SummaryRow> rows);

} // namespace wigner
