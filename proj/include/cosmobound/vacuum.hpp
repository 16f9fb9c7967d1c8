#pragma once

#include <optional>
#include <string>
#include <vector>

#include "cosmobound/errors.hpp"
#include "cosmobound/units.hpp"

namespace cosmobound {

enum class VacuumScheme {
    DiscreteSum,
    PlanckCutoff,
    HolographicCutoff,
    CollapseBound,
    GeometricMean,
};

std::string to_string(VacuumScheme s);

/// A dark-energy density estimate under one cutoff scheme. The vacuum
/// equation of state fixes pressure = -rho for every scheme.
struct VacuumEstimate {
    VacuumScheme scheme = VacuumScheme::PlanckCutoff;
    double rho_J_m3 = 0.0;
    double pressure_J_m3 = 0.0;
    std::string cutoff_descriptor;
    std::optional<double> box_scale_L_m;

    static VacuumEstimate make(VacuumScheme scheme, double rho,
                               std::string cutoff_descriptor,
                               std::optional<double> box_scale_L_m = std::nullopt);
};

/// Zero-point energy density of a massless scalar in a periodic box of side
/// L: rho = (1/L^3) sum over integer triples 0 < |n| <= n_max of hbar*omega/2
/// with omega = (2 pi c / L) |n|. The sum runs over the Euclidean ball, is
/// evaluated exactly, and reduces pairwise in a fixed order so the result is
/// bit-identical for any thread count. threads = 0 picks the hardware count.
VacuumEstimate discrete_mode_sum(double box_L_m, int n_max,
                                 const ConstantsSet& constants = {},
                                 int threads = 0);

/// Continuum limit of the box sum under a frequency cutoff:
/// rho = hbar omega_c^4 / (16 pi^2 c^3) for one scalar polarization.
VacuumEstimate continuum_cutoff_density(double omega_c_rad_s,
                                        const ConstantsSet& constants = {});

/// Mode-budget form: rho = hbar c * budget / L^4.
VacuumEstimate holographic_cutoff_density(double box_L_m,
                                          double mode_budget_bits,
                                          const ConstantsSet& constants = {});

/// Density at which a region of size L undergoes gravitational collapse:
/// rho = c^4 / (G L^2). Callers treat it as an upper bound.
VacuumEstimate collapse_bound_density(double box_L_m,
                                      const ConstantsSet& constants = {});

/// Energy density of a single quantum of wavelength R_H spread over a Hubble
/// volume: (hbar c 2 pi / R_H) / ((4 pi / 3) R_H^3).
double hubble_scale_quantum_density(double hubble_radius_m,
                                    const ConstantsSet& constants = {});

/// Geometric mean sqrt(rho_P * rho_H).
VacuumEstimate geometric_mean_bound(double rho_planck_J_m3,
                                    double rho_hubble_J_m3);

/// Vacuum equation of state: p = -rho.
double vacuum_pressure(double rho_J_m3);

/// Sampled check of p da^3 + d(rho a^3) = 0 for the vacuum equation of
/// state. residual(t) = [p d(a^3)/dt + d(rho a^3)/dt] / a^3, which reduces
/// analytically to d(rho)/dt; zero residual means conservation holds.
struct ConservationSeries {
    std::vector<double> times_s;
    std::vector<double> rho_J_m3;
    std::vector<double> scale_factor;
    std::vector<double> residual;  // J/m^3 per second
};

ConservationSeries conservation_residual(const std::vector<double>& times_s,
                                         const std::vector<double>& rho_J_m3,
                                         const std::vector<double>& scale_factor);

}  // namespace cosmobound
