#pragma once

#include <optional>
#include <ostream>
#include <string>

#include "gmecert/bounds.hpp"
#include "gmecert/statespec.hpp"

namespace gmecert::cli {

// Locale-independent "%.9f" (nine decimal places); all report and CSV
// numbers go through this so output is byte-stable.
std::string format_number(double value);

// Detection report: input echo, per-cut table, aggregated bound, threshold,
// verdict and classification, optional exact pure-state value, timing.
std::string format_detect_report(const StateSpec& spec, const BoundReport& report,
                                 std::optional<double> pure_value, double elapsed_seconds);

// Scan CSV, one row per grid sample:
//   x,lc_n,threshold,margin,verdict
// LF line endings, '.' decimal separator.
void write_scan_csv(std::ostream& os, const ScanResult& scan);

// One-line scan outcome; the detection threshold prints with six decimals.
std::string format_scan_summary(const ScanResult& scan);

// Comparison-curve CSV: x,zhao,gao,lc_n
void write_comparison_csv(std::ostream& os, const ComparisonCurve& curve);

std::string threshold_line(const ThresholdValue& threshold);

} // namespace gmecert::cli
