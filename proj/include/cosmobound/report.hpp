#pragma once

#include <string>
#include <vector>

#include "cosmobound/config.hpp"

namespace cosmobound {

enum class RowCheck {
    Log10Tolerance,  // |log10(computed / reference)| <= tol_log10
    Range,           // computed in [range_lo, range_hi]
    ExactInt,        // computed == expected integer
    Informational,   // never fails; flagged discrepancies land here
};

std::string to_string(RowCheck c);

struct ReportRow {
    std::string quantity;
    double reference_value = 0.0;  // the figure under reproduction; NaN if none
    double computed_value = 0.0;
    double log10_ratio = 0.0;  // log10(computed) - log10(reference); NaN if no ref
    std::string provenance;
    RowCheck check = RowCheck::Informational;
    double tol_log10 = 0.0;
    double range_lo = 0.0;
    double range_hi = 0.0;
    bool passed = true;
    std::string note;
};

struct Report {
    std::vector<ReportRow> rows;
    bool all_passed = true;  // informational rows never count against this
};

/// Recomputes every headline figure from the configured cosmology, constants
/// and dark-energy density, comparing each against its documented target.
Report build_report(const RunConfig& config);

std::string render_report_text(const Report& report);
std::string render_report_json(const Report& report);

}  // namespace cosmobound
