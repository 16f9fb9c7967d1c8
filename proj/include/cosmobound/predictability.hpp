#pragma once

#include <string>

#include "cosmobound/bounds.hpp"
#include "cosmobound/errors.hpp"
#include "cosmobound/units.hpp"

namespace cosmobound {

/// Hard-sphere gas with one distant gravitational perturber. Defaults model
/// air at room conditions perturbed by a single electron at the edge of the
/// observable universe.
struct GasParams {
    double mean_free_path_m = 1e-7;
    double molecule_radius_m = 1.5e-10;
    double mean_speed_m_s = 500.0;
    double perturber_mass_kg = 9.1e-31;
    double perturber_distance_m = 4.4e26;

    void validate() const;
};

struct CollisionPredictability {
    double initial_angle_uncertainty_rad = 0.0;  // delta-theta_0
    double amplification_per_collision = 0.0;    // f = l / r_molecule
    int collisions_to_order_unity = 0;
};

/// Number of collisions for the angular deflection sourced by the perturber
/// to amplify to order unity: delta-theta_0 = (G m / d^2)(l / v)^2 / (2 l),
/// amplified by f = l/r per collision; n = ceil(ln(1/delta-theta_0) / ln f).
CollisionPredictability collision_predictability(
    const GasParams& params, const ConstantsSet& constants = {});

/// ceil of log_f(1/delta0), snapped so exact integer ratios (e.g. f = 10,
/// delta0 = 1e-12 -> 12) survive floating-point noise.
int collisions_to_order_unity(double initial_angle_uncertainty,
                              double amplification_per_collision);

enum class RecurrenceReading { MaxRepresentableTime, MaxExponentArgument };

std::string to_string(RecurrenceReading r);

struct RecurrenceCap {
    double cap_seconds = 0.0;
    double cap_years = 0.0;
    RecurrenceReading interpretation = RecurrenceReading::MaxRepresentableTime;
};

/// Longest recurrence time the information budget can certify.
/// MaxRepresentableTime counts bits as clock ticks: cap = bits * t_P.
/// MaxExponentArgument caps the exponent of exp(10^N t_P) at ln(bits), which
/// resolves to the same bits * t_P once the exponential exceeds the budget.
RecurrenceCap recurrence_cap(const InfoBound& bound,
                             RecurrenceReading interpretation,
                             const ConstantsSet& constants = {});

/// Time for exponential error growth at Lyapunov rate lambda to consume the
/// information budget: t = budget_bits * ln 2 / lambda.
double lyapunov_horizon_s(double lambda_per_s, double initial_uncertainty_bits,
                          double budget_bits);

/// Time at which exponential redshift (e-fold time tau) accumulates a factor
/// equal to the bound: t_cut = tau * ln(bits).
double redshift_cutoff_s(double efold_time_s, const InfoBound& bound);

}  // namespace cosmobound
