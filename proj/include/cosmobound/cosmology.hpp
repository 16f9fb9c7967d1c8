#pragma once

#include "cosmobound/errors.hpp"
#include "cosmobound/units.hpp"

namespace cosmobound {

/// Interface convention for the Hubble constant (km/s/Mpc).
inline constexpr double kMetersPerMpc = 3.0857e22;

/// FRW background parameters. Density fractions are today's values; the
/// curvature fraction is derived, never stored.
struct CosmologyParams {
    double hubble0_km_s_mpc = 67.7;
    double omega_m = 0.31;
    double omega_r = 9e-5;
    double omega_lambda = 0.69;

    double omega_k() const { return 1.0 - (omega_r + omega_m + omega_lambda); }
    double H0_si() const { return hubble0_km_s_mpc * 1000.0 / kMetersPerMpc; }

    void validate() const;  // throws RangeViolation naming the field
};

/// A horizon distance that may legitimately be infinite (divergent integral).
/// Never a sentinel float: the flag is explicit.
struct HorizonDistance {
    bool is_infinite = false;
    double meters = 0.0;  // meaningful only when !is_infinite

    static HorizonDistance infinite() { return {true, 0.0}; }
    static HorizonDistance finite(double m) { return {false, m}; }
};

struct HorizonSet {
    double epoch_a = 1.0;
    HorizonDistance particle_horizon;
    HorizonDistance event_horizon;
    double hubble_radius_m = 0.0;  // c / H(epoch_a) by construction
};

/// FRW background engine: expansion rate, cosmic time, and horizons for a
/// fixed parameter set. Horizon integrals run in u = ln a to tame the steep
/// early-epoch integrand; endpoint tails are bounded analytically and folded
/// into the error estimate.
class FrwModel {
  public:
    explicit FrwModel(CosmologyParams params, ConstantsSet constants = {});

    const CosmologyParams& params() const { return params_; }
    const ConstantsSet& constants() const { return constants_; }

    /// H(a) = H0 sqrt(omega_r a^-4 + omega_m a^-3 + omega_k a^-2 + omega_lambda), s^-1.
    double hubble_rate(double a) const;

    /// t(a) = integral_0^a da' / (a' H(a')), seconds.
    /// Throws DivergentIntegral for parameter sets with an infinite past
    /// (pure dark energy).
    double cosmic_time(double a) const;

    /// d_p(a) = a c integral_0^a da' / (a'^2 H(a')), meters.
    /// Throws DivergentIntegral when no matter or radiation component makes
    /// the early-time integral converge.
    double particle_horizon(double a) const;

    /// d_e(a) = a c integral_a^inf da' / (a'^2 H(a')). Divergence
    /// (omega_lambda = 0) is a legal flagged result, not an error.
    HorizonDistance event_horizon(double a) const;

    HorizonSet horizons(double a) const;

    double rel_tol() const { return rel_tol_; }
    void set_rel_tol(double t) { rel_tol_ = t; }

  private:
    double integrand_h2(double a) const;  // H^2 / H0^2, validates radicand

    CosmologyParams params_;
    ConstantsSet constants_;
    double rel_tol_ = 1e-9;
};

/// R = c / H_lambda with H_lambda = sqrt(8 pi G rho / (3 c^2)): the de Sitter
/// horizon radius implied by a dark-energy density, meters.
double desitter_radius_from_density(double rho_lambda_J_m3,
                                    const ConstantsSet& constants = {});

/// 4 pi R^2, m^2.
double horizon_area(double radius_m);

}  // namespace cosmobound
