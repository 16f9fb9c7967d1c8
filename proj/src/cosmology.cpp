#include "cosmobound/cosmology.hpp"

#include <cmath>

#include "cosmobound/quadrature.hpp"

namespace cosmobound {

void CosmologyParams::validate() const {
    if (!(hubble0_km_s_mpc > 0.0)) {
        throw RangeViolation("hubble0_km_s_mpc must be > 0");
    }
    if (omega_r < 0.0) throw RangeViolation("omega_r must be >= 0");
    if (omega_m < 0.0) throw RangeViolation("omega_m must be >= 0");
    if (omega_lambda < 0.0) throw RangeViolation("omega_lambda must be >= 0");
}

FrwModel::FrwModel(CosmologyParams params, ConstantsSet constants)
    : params_(params), constants_(constants) {
    params_.validate();
    constants_.validate();
}

double FrwModel::integrand_h2(double a) const {
    const double inv_a = 1.0 / a;
    const double h2 = params_.omega_r * inv_a * inv_a * inv_a * inv_a +
                      params_.omega_m * inv_a * inv_a * inv_a +
                      params_.omega_k() * inv_a * inv_a + params_.omega_lambda;
    if (!(h2 > 0.0)) {
        throw NegativeRadicand("H^2(a) <= 0 at a = " + std::to_string(a));
    }
    return h2;
}

double FrwModel::hubble_rate(double a) const {
    if (!(a > 0.0)) {
        throw NonPositiveScaleFactor("scale factor must be > 0");
    }
    return params_.H0_si() * std::sqrt(integrand_h2(a));
}

// Early-time tail of integral_{-inf}^{u_min} e^{m u} / H(e^u) du, bounded by
// the dominant small-a component of H. Returns the analytic bound, or a
// negative value when the tail diverges.
namespace {

struct TailBound {
    bool divergent;
    double bound;
};

// Integrand e^{m u} / H(e^u) with H >= H0 sqrt(omega) e^{-p u} for the
// dominant early component gives a tail <= e^{(m+p) u_min} / ((m+p) H0 sqrt(omega)).
TailBound early_tail(double u_min, double m, double H0,
                     const CosmologyParams& p) {
    struct Component {
        double omega;
        double pexp;
    };
    const Component comps[] = {
        {p.omega_r, 2.0}, {p.omega_m, 1.5}, {std::max(p.omega_k(), 0.0), 1.0}};
    for (const auto& comp : comps) {
        if (comp.omega > 0.0) {
            const double beta = m + comp.pexp;
            if (beta <= 0.0) return {true, 0.0};
            return {false, std::exp(beta * u_min) /
                               (beta * H0 * std::sqrt(comp.omega))};
        }
    }
    return {true, 0.0};  // only dark energy survives at early times
}

}  // namespace

double FrwModel::cosmic_time(double a) const {
    if (!(a > 0.0)) {
        throw NonPositiveScaleFactor("scale factor must be > 0");
    }
    const double H0 = params_.H0_si();
    const double u_end = std::log(a);
    const double u_min = u_end - 60.0;

    // du / H(e^u): exponent m = 0 in the tail bound.
    const TailBound tail = early_tail(u_min, 0.0, H0, params_);
    if (tail.divergent) {
        throw DivergentIntegral(
            "cosmic time diverges: no component dominates dark energy at "
            "early epochs");
    }
    const auto f = [this](double u) { return 1.0 / hubble_rate(std::exp(u)); };
    const Integral result = integrate_adaptive(f, u_min, u_end, rel_tol_);
    return result.value + tail.bound;  // tail bound is also a good estimate
}

double FrwModel::particle_horizon(double a) const {
    if (!(a > 0.0)) {
        throw NonPositiveScaleFactor("scale factor must be > 0");
    }
    const double H0 = params_.H0_si();
    const double u_end = std::log(a);
    const double u_min = u_end - 60.0;

    // e^{-u} du / H(e^u): exponent m = -1. Curvature alone (p = 1) gives
    // beta = 0: logarithmically divergent.
    const TailBound tail = early_tail(u_min, -1.0, H0, params_);
    if (tail.divergent) {
        throw DivergentIntegral(
            "particle horizon diverges: needs a matter or radiation "
            "component");
    }
    const auto f = [this](double u) {
        return std::exp(-u) / hubble_rate(std::exp(u));
    };
    const Integral result = integrate_adaptive(f, u_min, u_end, rel_tol_);
    return a * constants_.c * (result.value + tail.bound);
}

HorizonDistance FrwModel::event_horizon(double a) const {
    if (!(a > 0.0)) {
        throw NonPositiveScaleFactor("scale factor must be > 0");
    }
    const double ol = params_.omega_lambda;
    if (!(ol > 0.0)) {
        return HorizonDistance::infinite();
    }
    const double H0 = params_.H0_si();
    const double u_start = std::log(a);
    // Late-time tail: H^2 >= omega_lambda - |omega_k| e^{-2u} once matter and
    // radiation are negligible, so integral_{u_max}^{inf} e^{-u}/H du is
    // bounded by the de Sitter tail.
    double u_max = std::max(u_start, 0.0) + 35.0;
    const double ok_neg = std::max(-params_.omega_k(), 0.0);
    const double h2_floor = ol - ok_neg * std::exp(-2.0 * u_max);
    if (!(h2_floor > 0.0)) {
        throw NegativeRadicand("H^2 floor not positive at integration cutoff");
    }
    const double tail = std::exp(-u_max) / (H0 * std::sqrt(h2_floor));

    const auto f = [this](double u) {
        return std::exp(-u) / hubble_rate(std::exp(u));
    };
    const Integral result = integrate_adaptive(f, u_start, u_max, rel_tol_);
    return HorizonDistance::finite(a * constants_.c * (result.value + tail));
}

HorizonSet FrwModel::horizons(double a) const {
    HorizonSet set;
    set.epoch_a = a;
    set.particle_horizon = HorizonDistance::finite(particle_horizon(a));
    set.event_horizon = event_horizon(a);
    set.hubble_radius_m = constants_.c / hubble_rate(a);
    return set;
}

double desitter_radius_from_density(double rho_lambda_J_m3,
                                    const ConstantsSet& constants) {
    if (!(rho_lambda_J_m3 > 0.0)) {
        throw NonPositiveDensity("dark-energy density must be > 0");
    }
    const double H_lambda =
        std::sqrt(8.0 * M_PI * constants.G * rho_lambda_J_m3 /
                  (3.0 * constants.c * constants.c));
    return constants.c / H_lambda;
}

double horizon_area(double radius_m) {
    if (!(radius_m > 0.0)) {
        throw NonPositiveRadius("horizon radius must be > 0");
    }
    return 4.0 * M_PI * radius_m * radius_m;
}

}  // namespace cosmobound
