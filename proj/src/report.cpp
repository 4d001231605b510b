#include "gmecert/report.hpp"

#include <cstdio>
#include <sstream>

namespace gmecert::cli {

std::string format_number(double value) {
    char buf[64];
    std::snprintf(buf, sizeof(buf), "%.9f", value);
    return buf;
}

namespace {

std::string pad(std::string s, std::size_t width) {
    if (s.size() < width) s.append(width - s.size(), ' ');
    return s;
}

} // namespace

std::string format_detect_report(const StateSpec& spec, const BoundReport& report,
                                 std::optional<double> pure_value, double elapsed_seconds) {
    std::ostringstream out;
    out << "input         : " << spec.descriptor << "\n";
    out << "per-cut bounds:\n";
    out << "  " << pad("cut", 16) << pad("pt-norm", 15) << pad("realign-norm", 15)
        << "bound\n";
    for (const auto& cut : report.cuts) {
        out << "  " << pad(cut.cut.cut_label(), 16)
            << pad(format_number(cut.ppt_trace_norm), 15)
            << pad(format_number(cut.realignment_trace_norm), 15)
            << format_number(cut.lower_bound) << "\n";
    }
    out << "lc_n          = " << format_number(report.lc_n) << "\n";
    if (pure_value) {
        out << "pure C_N      = " << format_number(*pure_value) << "  (exact, input is pure)\n";
    }
    if (report.threshold) {
        out << "threshold     = " << threshold_line(*report.threshold) << "\n";
    } else {
        out << "threshold     = unavailable (needs N >= 3 and equal local dimensions)\n";
    }
    out << "verdict       = "
        << (report.verdict ? verdict_name(*report.verdict) : "unavailable") << "\n";
    out << "classification= " << verdict_name(report.classification()) << "\n";
    char timing[64];
    std::snprintf(timing, sizeof(timing), "%.3f", elapsed_seconds);
    out << "time          : " << timing << " s\n";
    return out.str();
}

void write_scan_csv(std::ostream& os, const ScanResult& scan) {
    os << "x,lc_n,threshold,margin,verdict\n";
    for (const auto& [x, lc] : scan.samples) {
        const bool certified = lc > scan.threshold;
        os << format_number(x) << ',' << format_number(lc) << ','
           << format_number(scan.threshold) << ',' << format_number(lc - scan.threshold)
           << ',' << (certified ? "GME-certified" : "undecided") << "\n";
    }
}

std::string format_scan_summary(const ScanResult& scan) {
    std::ostringstream out;
    out << "family " << scan.family_id << ": ";
    if (scan.detection_threshold) {
        char buf[64];
        std::snprintf(buf, sizeof(buf), "%.6f", *scan.detection_threshold);
        out << "detection threshold x* = " << buf;
    } else {
        out << "no detection (lc_n(0) = " << format_number(scan.lc_at_0)
            << ", lc_n(1) = " << format_number(scan.lc_at_1) << ", threshold = "
            << format_number(scan.threshold) << ", no sign change on [0,1])";
    }
    return out.str();
}

void write_comparison_csv(std::ostream& os, const ComparisonCurve& curve) {
    os << "x,zhao,gao,lc_n\n";
    for (const auto& row : curve.rows) {
        os << format_number(row.x) << ',' << format_number(row.zhao) << ','
           << format_number(row.gao) << ',' << format_number(row.lc) << "\n";
    }
}

std::string threshold_line(const ThresholdValue& threshold) {
    std::ostringstream out;
    out << format_number(threshold.value) << "  (N=" << threshold.n << ", d=" << threshold.d
        << ", " << (threshold.even_branch ? "even" : "odd") << " branch)";
    return out.str();
}

} // namespace gmecert::cli
