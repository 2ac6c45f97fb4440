#pragma once

#include "wigner/harness.hpp"

#include <filesystem>
#include <string>
#include <string_view>

namespace wigner {

inline constexpr std::string_view kArtifactVersion = "wignerlab-1.0.0";
inline constexpr std::string_view kOutputDirVariable = "WIGNERLAB_OUTPUT_DIR";

struct RunConfig {
    ExperimentConfig experiment;
    std::filesystem::path records_path;
    std::filesystem::path summary_path;
    /// Config re-serialised with sorted keys; embedded in record headers.
    std::string canonical;
    /// FNV-1a 64 of `canonical`, hex.
    std::string digest;
};

/// Parses a JSON config document. Every failure is a config error whose
/// message starts with the offending key. Relative output paths resolve
/// against `base`, or against $WIGNERLAB_OUTPUT_DIR when it is set.
RunConfig parse_config(std::string_view text, const std::filesystem::path& base = ".");
RunConfig load_config(const std::filesystem::path& path);

std::string fnv1a_hex(std::string_view bytes);

} // namespace wigner
