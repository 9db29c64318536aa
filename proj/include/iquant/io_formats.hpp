#pragma once

#include <string>
#include <vector>

#include "iquant/doubleslit.hpp"
#include "iquant/interference2.hpp"
#include "iquant/interference3.hpp"
#include "iquant/qstate.hpp"

namespace iquant {

// Versioned state-file format (JSON):
//
//   {
//     "format_version": "1.0",
//     "dim": 4,
//     "matrix": [ [[re, im], ...], ... ]
//   }
//
// matrix is dim x dim, row-major, rows/columns in the documented basis order
// (1-based index 1 = first row). Unknown keys are rejected. Numbers are
// written with 17 significant digits so read -> write -> read is bit-exact.

// Parses and validates a state file. A Hermiticity deviation found in the raw
// entries is repaired by symmetrization and reported through `warnings`.
// Throws ParseError (with line/column), DimUnsupported, IoError, or a
// validation error (TraceDeviation / NegativeEigenvalue).
DensityMatrix read_state(const std::string& path,
                         std::vector<std::string>* warnings = nullptr,
                         const ValidationTolerances& tol = {});

// Same parser on in-memory text.
DensityMatrix parse_state_text(const std::string& text,
                               std::vector<std::string>* warnings = nullptr,
                               const ValidationTolerances& tol = {});

std::string state_to_text(const DensityMatrix& m);
void write_state(const DensityMatrix& m, const std::string& path);

// Report rendering. Text is human-readable with 12 significant digits;
// structured is JSON with 17 significant digits (lossless round-trip).
std::string report_text(const I2Result& r);
std::string report_text(const I3Result& r);
std::string report_text(const OracleReport& r);
std::string report_structured(const I2Result& r);
std::string report_structured(const I3Result& r);
std::string report_structured(const OracleReport& r);

// CSV with 17-significant-digit values; header is written as given.
std::string csv_table(const std::string& header,
                      const std::vector<std::vector<double>>& rows);

// Grid density as CSV: header `zA,zB[,zC],density`, row-major over the axes.
std::string grid_csv(const GridDensity& g);

// Writes text to a file; throws IoError on failure.
void write_text_file(const std::string& content, const std::string& path);
std::string read_text_file(const std::string& path);

}  // namespace iquant
