#ifndef TUMOR_IO_HPP
#define TUMOR_IO_HPP

#include <string>
#include <vector>

#include "tumor/diagnostics.hpp"
#include "tumor/state.hpp"

namespace tumor {

/// Fixed CSV header matching DiagnosticsRecord field order.
extern const char* const kDiagnosticsHeader;

/// Serialize records to CSV text (full-precision %.17g floats).
std::string diagnostics_csv(const std::vector<DiagnosticsRecord>& records);

/// Write the CSV atomically (temp file + rename): on failure the target is
/// never left partially written.
void write_diagnostics(const std::vector<DiagnosticsRecord>& records, const std::string& path);

/// Self-describing text snapshot of all fields. grid-csv is canonical and
/// round-trippable; vtk-legacy is viewer convenience only.
void write_field_snapshot(const State& s, const std::string& path, const std::string& format);

std::string field_snapshot_grid_csv(const State& s);

/// Reload a grid-csv snapshot; fields are bit-identical to what was written.
State read_field_snapshot(const std::string& path);

/// Atomic text-file write helper used by all writers.
void atomic_write(const std::string& path, const std::string& content);

} // namespace tumor

#endif
