#pragma once

#include <filesystem>
#include <span>
#include <string>
#include <string_view>

#include "awgshuffle/analysis.hpp"
#include "awgshuffle/topology.hpp"

namespace awgshuffle {

inline constexpr std::string_view kSchemaVersion = "1";
inline constexpr std::string_view kGeneratorName = "awgshuffle";
inline constexpr std::string_view kGeneratorVersion = "1.0.0";
inline constexpr std::string_view kCsvHeader =
    "n,m,wavelengths,awg_inputs,awg_outputs,cables,channels";

enum class ExportFormat { json, dot };

/// "json" or "dot"; anything else is a UsageError.
ExportFormat parse_format(std::string_view name);

std::string serialize_topology(const Topology& topology, ExportFormat format);

/// Reads a schema-version-1 topology document. Structural faults raise
/// ParseError with the JSON path; content that contradicts the stated
/// parameters raises IntegrityError.
Topology parse_topology(std::string_view text);

std::string report_to_json(const VerificationReport& report);
std::string trace_to_json(const RouteTrace& trace);
std::string tradeoff_to_csv(std::span<const TradeoffRow> rows);

/// Writes to a sibling temporary and renames it over `path`.
void write_file_atomic(const std::filesystem::path& path, std::string_view contents);

}  // namespace awgshuffle
