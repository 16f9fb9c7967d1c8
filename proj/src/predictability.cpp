#include "cosmobound/predictability.hpp"

#include <cmath>
#include <numbers>

namespace cosmobound {

void GasParams::validate() const {
    if (!(mean_free_path_m > 0.0) || !(molecule_radius_m > 0.0) ||
        !(mean_speed_m_s > 0.0) || !(perturber_mass_kg > 0.0) ||
        !(perturber_distance_m > 0.0))
        throw RangeViolation("all gas parameters must be > 0");
    if (!(mean_free_path_m > molecule_radius_m))
        throw AmplificationNotAboveOne(
            "mean free path must exceed the molecule radius");
}

int collisions_to_order_unity(double initial_angle_uncertainty,
                              double amplification_per_collision) {
    if (!(amplification_per_collision > 1.0))
        throw AmplificationNotAboveOne(
            "per-collision amplification must exceed 1");
    if (!(initial_angle_uncertainty > 0.0) || initial_angle_uncertainty >= 1.0)
        throw RangeViolation("initial angle uncertainty must lie in (0, 1) rad");
    const double ratio = std::log(1.0 / initial_angle_uncertainty) /
                         std::log(amplification_per_collision);
    // Snap: keep mathematically exact integer ratios exact despite rounding.
    return static_cast<int>(std::ceil(ratio - 1e-9));
}

CollisionPredictability collision_predictability(const GasParams& params,
                                                 const ConstantsSet& constants) {
    params.validate();
    constants.validate();
    const Quantity l = meters(params.mean_free_path_m);
    const Quantity r = meters(params.molecule_radius_m);
    const Quantity v{params.mean_speed_m_s, Dimension{1, 0, -1, 0}};
    const Quantity m = kilograms(params.perturber_mass_kg);
    const Quantity d = meters(params.perturber_distance_m);

    const Quantity accel = constants.gravitational_constant() * m / pow(d, 2);
    const Quantity flight_time = l / v;
    const Quantity deflection = 0.5 * accel * pow(flight_time, 2);
    const double delta0 = (deflection / l).value_in(Dimension::none());
    const double f = (l / r).value_in(Dimension::none());

    CollisionPredictability out;
    out.initial_angle_uncertainty_rad = delta0;
    out.amplification_per_collision = f;
    out.collisions_to_order_unity = collisions_to_order_unity(delta0, f);
    return out;
}

std::string to_string(RecurrenceReading r) {
    switch (r) {
        case RecurrenceReading::MaxRepresentableTime:
            return "max-representable-time";
        case RecurrenceReading::MaxExponentArgument:
            return "max-exponent-argument";
    }
    throw RangeViolation("unknown RecurrenceReading tag");
}

RecurrenceCap recurrence_cap(const InfoBound& bound,
                             RecurrenceReading interpretation,
                             const ConstantsSet& constants) {
    if (!(bound.bits >= 1.0))
        throw BoundBelowOneBit("recurrence cap needs a bound of at least 1 bit");
    constants.validate();
    const double t_p = constants.planck_time().value_in(Dimension::time());
    RecurrenceCap cap;
    cap.interpretation = interpretation;
    switch (interpretation) {
        case RecurrenceReading::MaxRepresentableTime:
            cap.cap_seconds = bound.bits * t_p;
            break;
        case RecurrenceReading::MaxExponentArgument: {
            // exp(10^N) Planck times with 10^N = bits; the trustable exponent
            // is capped at ln(bits), collapsing back to bits Planck times.
            const double exponent = std::min(bound.bits, std::log(bound.bits));
            cap.cap_seconds = std::exp(exponent) * t_p;
            break;
        }
    }
    cap.cap_years = cap.cap_seconds / constants.year_seconds;
    return cap;
}

double lyapunov_horizon_s(double lambda_per_s, double initial_uncertainty_bits,
                          double budget_bits) {
    if (!(lambda_per_s > 0.0))
        throw NonPositiveLyapunov("Lyapunov rate must be > 0 s^-1");
    if (!(initial_uncertainty_bits >= 0.0))
        throw RangeViolation("initial uncertainty must be >= 0 bits");
    if (!(budget_bits > initial_uncertainty_bits))
        throw RangeViolation(
            "information budget must exceed the initial uncertainty margin");
    return budget_bits * std::numbers::ln2 / lambda_per_s;
}

double redshift_cutoff_s(double efold_time_s, const InfoBound& bound) {
    if (!(efold_time_s > 0.0))
        throw RangeViolation("e-fold time must be > 0 s");
    if (!(bound.bits > 1.0))
        throw BoundBelowOneBit("redshift cutoff needs a bound above 1 bit");
    return efold_time_s * std::log(bound.bits);
}

}  // namespace cosmobound
