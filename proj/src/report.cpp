#include "cosmobound/report.hpp"

#include <charconv>
#include <cmath>
#include <limits>
#include <numbers>
#include <sstream>

#include <json.hpp>

#include "cosmobound/bounds.hpp"
#include "cosmobound/cosmology.hpp"
#include "cosmobound/predictability.hpp"
#include "cosmobound/vacuum.hpp"

namespace cosmobound {

namespace {

constexpr double kNaN = std::numeric_limits<double>::quiet_NaN();

std::string fmt_double(double v) {
    if (std::isnan(v)) return "-";
    char buf[64];
    const auto res = std::to_chars(buf, buf + sizeof buf, v);
    return std::string(buf, res.ptr);
}

double ratio_log10(double computed, double reference) {
    if (std::isnan(reference)) return kNaN;
    return std::log10(computed) - std::log10(reference);
}

ReportRow log10_row(std::string quantity, double reference, double computed,
                    double tol, std::string provenance, std::string note = "") {
    ReportRow row;
    row.quantity = std::move(quantity);
    row.reference_value = reference;
    row.computed_value = computed;
    row.log10_ratio = ratio_log10(computed, reference);
    row.provenance = std::move(provenance);
    row.check = RowCheck::Log10Tolerance;
    row.tol_log10 = tol;
    row.passed = std::abs(row.log10_ratio) <= tol;
    row.note = std::move(note);
    return row;
}

ReportRow range_row(std::string quantity, double reference, double computed,
                    double lo, double hi, std::string provenance,
                    std::string note = "") {
    ReportRow row;
    row.quantity = std::move(quantity);
    row.reference_value = reference;
    row.computed_value = computed;
    row.log10_ratio = ratio_log10(computed, reference);
    row.provenance = std::move(provenance);
    row.check = RowCheck::Range;
    row.range_lo = lo;
    row.range_hi = hi;
    row.passed = computed >= lo && computed <= hi;
    row.note = std::move(note);
    return row;
}

ReportRow exact_row(std::string quantity, double reference, int computed,
                    int expected, std::string provenance,
                    std::string note = "") {
    ReportRow row;
    row.quantity = std::move(quantity);
    row.reference_value = reference;
    row.computed_value = computed;
    row.log10_ratio = ratio_log10(computed, reference);
    row.provenance = std::move(provenance);
    row.check = RowCheck::ExactInt;
    row.range_lo = expected;
    row.range_hi = expected;
    row.passed = computed == expected;
    row.note = std::move(note);
    return row;
}

ReportRow info_row(std::string quantity, double reference, double computed,
                   std::string provenance, std::string note = "") {
    ReportRow row;
    row.quantity = std::move(quantity);
    row.reference_value = reference;
    row.computed_value = computed;
    row.log10_ratio = ratio_log10(computed, reference);
    row.provenance = std::move(provenance);
    row.check = RowCheck::Informational;
    row.passed = true;
    row.note = std::move(note);
    return row;
}

}  // namespace

std::string to_string(RowCheck c) {
    switch (c) {
        case RowCheck::Log10Tolerance: return "log10-tolerance";
        case RowCheck::Range: return "range";
        case RowCheck::ExactInt: return "exact-int";
        case RowCheck::Informational: return "informational";
    }
    throw RangeViolation("unknown RowCheck tag");
}

Report build_report(const RunConfig& config) {
    config.validate();
    const ConstantsSet& k = config.constants;
    Report report;

    // Horizon geometry implied by the configured dark-energy density.
    const double r_ds =
        desitter_radius_from_density(config.dark_energy_density_J_m3, k);
    const double area_ds = horizon_area(r_ds);
    const InfoBound holo =
        holographic_bound(area_ds, BoundMethod::HolographicEvent, k);
    report.rows.push_back(log10_row(
        "holographic bound (bits)", 1e122, holo.bits, 1.0,
        "de Sitter horizon from configured dark-energy density; A/(4 L_P^2)"));

    // Quadratic time scaling of the reference budget down to the
    // inflation epoch, cross-checked against the area route.
    const FrwModel model(config.cosmology, k);
    const double t0 = model.cosmic_time(1.0);
    const InfoBound lloyd_inflation = lloyd_bound(1e-34, 1e122, t0);
    report.rows.push_back(log10_row(
        "time-scaled bound at t=1e-34 s (bits)", 1e19, lloyd_inflation.bits,
        1.0, "quadratic scaling of 1e122 bits from t0=" + fmt_double(t0) +
                 " s; same order as the area route"));

    // Vacuum energy density under each cutoff scheme.
    const double t_p = k.planck_time().value_in(Dimension::time());
    const VacuumEstimate planck_a = continuum_cutoff_density(1.0 / t_p, k);
    const VacuumEstimate planck_b =
        continuum_cutoff_density(2.0 * std::numbers::pi / t_p, k);
    report.rows.push_back(
        log10_row("vacuum density, cutoff omega_c=1/t_P (J/m^3)", 1e113,
                  planck_a.rho_J_m3, 2.0, "continuum zero-point integral"));
    report.rows.push_back(
        log10_row("vacuum density, cutoff omega_c=2pi/t_P (J/m^3)", 1e113,
                  planck_b.rho_J_m3, 2.0,
                  "continuum zero-point integral, angular convention"));

    const double r_h =
        k.speed_of_light().value_in(Dimension{1, 0, -1, 0}) /
        config.cosmology.H0_si();
    const VacuumEstimate holo_vac = holographic_cutoff_density(r_h, 1e122, k);
    const VacuumEstimate collapse = collapse_bound_density(r_h, k);
    const double rho_p =
        k.planck_energy_density().value_in(joules_per_m3(1).dims());
    const double rho_h = hubble_scale_quantum_density(r_h, k);
    const VacuumEstimate geomean = geometric_mean_bound(rho_p, rho_h);
    report.rows.push_back(log10_row(
        "dark energy, mode-budget cutoff (J/m^3)", 1e-9, holo_vac.rho_J_m3, 1.5,
        "hbar c x 1e122 / R_H^4 at R_H=" + fmt_double(r_h) + " m"));
    report.rows.push_back(
        log10_row("dark energy, collapse bound (J/m^3)", 1e-9,
                  collapse.rho_J_m3, 1.5, "c^4/(G R_H^2) at the Hubble radius"));
    report.rows.push_back(log10_row(
        "dark energy, geometric mean (J/m^3)", 1e-9, geomean.rho_J_m3, 1.5,
        "sqrt(rho_Planck x rho of one Hubble-scale quantum)"));

    const double spread =
        std::max({std::abs(ratio_log10(holo_vac.rho_J_m3, collapse.rho_J_m3)),
                  std::abs(ratio_log10(holo_vac.rho_J_m3, geomean.rho_J_m3)),
                  std::abs(ratio_log10(collapse.rho_J_m3, geomean.rho_J_m3))});
    report.rows.push_back(range_row(
        "Hubble-scale schemes, mutual spread (orders)", kNaN, spread, 0.0, 3.0,
        "max pairwise |log10 ratio| of the three estimates above"));

    // Qubit specifiability.
    const InfoBound round_bound = InfoBound::from_bits(1e122, holo.method);
    report.rows.push_back(
        exact_row("specifiability limit (qubits, 1e122-bit budget)", 400.0,
                  specifiability_limit(round_bound), 405,
                  "floor(log2 of the bit budget); target figure is approximate"));
    report.rows.push_back(info_row(
        "specifiability limit (qubits, computed budget)", kNaN,
        specifiability_limit(holo),
        "floor(log2 bits) for the configured-density bound"));

    // Inflation cap.
    const InflationCap cap = inflation_expansion_limit(3e-26, k);
    report.rows.push_back(
        log10_row("inflation expansion cap (factor)", 1e19,
                  cap.max_expansion_factor, 1.0,
                  "surface bits of a 3e-26 m pre-inflation horizon",
                  "max e-folds " + fmt_double(cap.max_efolds)));
    report.rows.push_back(range_row(
        "inflation cap vs. required 1e20 (factor)", kGuthRequiredExpansion,
        cap.max_expansion_factor, 0.0, kGuthRequiredExpansion,
        "original inflation proposal needs 1e20",
        "marginal: bound below requirement"));

    // Predictability horizons.
    const RecurrenceCap rec_time =
        recurrence_cap(round_bound, RecurrenceReading::MaxRepresentableTime, k);
    const RecurrenceCap rec_exp =
        recurrence_cap(round_bound, RecurrenceReading::MaxExponentArgument, k);
    report.rows.push_back(info_row(
        "recurrence reliability cap, tick reading (years)", 1e60,
        rec_time.cap_years, "1e122 Planck times",
        "flagged: stated 1e60-year figure not recovered by either reading"));
    report.rows.push_back(info_row(
        "recurrence reliability cap, exponent reading (years)", 1e60,
        rec_exp.cap_years, "exponent capped at ln(1e122)",
        "flagged: stated 1e60-year figure not recovered by either reading"));

    const double redshift = redshift_cutoff_s(1e-6, round_bound);
    report.rows.push_back(info_row(
        "redshift predictability cutoff (s)", kNaN, redshift,
        "ln(1e122) e-folds at 1 microsecond each",
        "e-fold factor treated as pure number; units of the factor unstated"));

    const CollisionPredictability collisions =
        collision_predictability(GasParams{}, k);
    report.rows.push_back(range_row(
        "collisions to order-unity deflection", 12.0,
        collisions.collisions_to_order_unity, 10.0, 60.0,
        "air defaults, single electron perturber at 4.4e26 m",
        "target 12 is the order figure; count is parameter-sensitive"));

    report.all_passed = true;
    for (const auto& row : report.rows)
        if (!row.passed) report.all_passed = false;
    return report;
}

std::string render_report_text(const Report& report) {
    std::ostringstream out;
    out << "quantity | reference | computed | log10_ratio | check | status | "
           "provenance\n";
    for (const auto& row : report.rows) {
        const char* status = row.check == RowCheck::Informational
                                 ? "INFO"
                                 : (row.passed ? "PASS" : "FAIL");
        out << row.quantity << " | " << fmt_double(row.reference_value)
            << " | " << fmt_double(row.computed_value) << " | "
            << fmt_double(row.log10_ratio) << " | " << to_string(row.check)
            << " | " << status << " | " << row.provenance;
        if (!row.note.empty()) out << " [" << row.note << ']';
        out << '\n';
    }
    out << (report.all_passed ? "all checks passed\n"
                              : "one or more checks FAILED\n");
    return out.str();
}

std::string render_report_json(const Report& report) {
    nlohmann::ordered_json rows = nlohmann::ordered_json::array();
    for (const auto& row : report.rows) {
        nlohmann::ordered_json j;
        j["quantity"] = row.quantity;
        if (std::isnan(row.reference_value))
            j["reference_value"] = nullptr;
        else
            j["reference_value"] = row.reference_value;
        j["computed_value"] = row.computed_value;
        if (std::isnan(row.log10_ratio))
            j["log10_ratio"] = nullptr;
        else
            j["log10_ratio"] = row.log10_ratio;
        j["check"] = to_string(row.check);
        switch (row.check) {
            case RowCheck::Log10Tolerance:
                j["tol_log10"] = row.tol_log10;
                break;
            case RowCheck::Range:
            case RowCheck::ExactInt:
                j["range"] = {row.range_lo, row.range_hi};
                break;
            case RowCheck::Informational: break;
        }
        j["passed"] = row.passed;
        j["provenance"] = row.provenance;
        if (!row.note.empty()) j["note"] = row.note;
        rows.push_back(std::move(j));
    }
    nlohmann::ordered_json doc;
    doc["rows"] = std::move(rows);
    doc["all_passed"] = report.all_passed;
    return doc.dump(2) + "\n";
}

}  // namespace cosmobound
