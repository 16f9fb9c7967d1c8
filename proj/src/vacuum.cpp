#include "cosmobound/vacuum.hpp"

#include <atomic>
#include <cmath>
#include <cstdio>
#include <numbers>
#include <thread>

#include "cosmobound/finite_diff.hpp"

namespace cosmobound {

namespace {

std::string fmt_g(double v) {
    char buf[48];
    std::snprintf(buf, sizeof buf, "%.6g", v);
    return buf;
}

// Fixed-order pairwise reduction; independent of how the entries were filled.
double pairwise_sum(const std::vector<double>& v, std::size_t lo,
                    std::size_t hi) {
    if (hi - lo == 1) return v[lo];
    const std::size_t mid = lo + (hi - lo) / 2;
    return pairwise_sum(v, lo, mid) + pairwise_sum(v, mid, hi);
}

// Sum of |n| over the slice n1 = const of the ball |n| <= n_max, innermost
// loops in fixed ascending order.
double slice_norm_sum(int n1, int n_max) {
    const double r2 = static_cast<double>(n_max) * n_max;
    const double n1sq = static_cast<double>(n1) * n1;
    double sum = 0.0;
    const int m2 = static_cast<int>(std::floor(std::sqrt(r2 - n1sq)));
    for (int n2 = -m2; n2 <= m2; ++n2) {
        const double n12 = n1sq + static_cast<double>(n2) * n2;
        const int m3 = static_cast<int>(std::floor(std::sqrt(r2 - n12)));
        for (int n3 = -m3; n3 <= m3; ++n3) {
            if (n1 == 0 && n2 == 0 && n3 == 0) continue;
            sum += std::sqrt(n12 + static_cast<double>(n3) * n3);
        }
    }
    return sum;
}

}  // namespace

std::string to_string(VacuumScheme s) {
    switch (s) {
        case VacuumScheme::DiscreteSum: return "discrete-sum";
        case VacuumScheme::PlanckCutoff: return "planck-cutoff";
        case VacuumScheme::HolographicCutoff: return "holographic-cutoff";
        case VacuumScheme::CollapseBound: return "collapse-bound";
        case VacuumScheme::GeometricMean: return "geometric-mean";
    }
    throw RangeViolation("unknown VacuumScheme tag");
}

VacuumEstimate VacuumEstimate::make(VacuumScheme scheme, double rho,
                                    std::string cutoff_descriptor,
                                    std::optional<double> box_scale_L_m) {
    if (!(rho > 0.0) || !std::isfinite(rho))
        throw NonPositiveDensity("vacuum energy density must be finite and > 0");
    VacuumEstimate e;
    e.scheme = scheme;
    e.rho_J_m3 = rho;
    e.pressure_J_m3 = vacuum_pressure(rho);
    e.cutoff_descriptor = std::move(cutoff_descriptor);
    e.box_scale_L_m = box_scale_L_m;
    return e;
}

VacuumEstimate discrete_mode_sum(double box_L_m, int n_max,
                                 const ConstantsSet& constants, int threads) {
    if (!(box_L_m > 0.0)) throw NonPositiveLength("box side must be > 0 m");
    if (n_max < 1 || n_max > 200)
        throw ModeBudgetTooLarge(
            "n_max must lie in [1, 200]; the exact triple sum is O(n_max^3)");
    constants.validate();

    const int n_slices = 2 * n_max + 1;
    std::vector<double> slices(static_cast<std::size_t>(n_slices), 0.0);
    int want = threads > 0 ? threads
                           : static_cast<int>(std::thread::hardware_concurrency());
    if (want < 1) want = 1;
    if (want > n_slices) want = n_slices;

    if (want == 1) {
        for (int i = 0; i < n_slices; ++i)
            slices[static_cast<std::size_t>(i)] = slice_norm_sum(i - n_max, n_max);
    } else {
        std::atomic<int> next{0};
        auto worker = [&] {
            for (int i; (i = next.fetch_add(1)) < n_slices;)
                slices[static_cast<std::size_t>(i)] =
                    slice_norm_sum(i - n_max, n_max);
        };
        std::vector<std::thread> pool;
        pool.reserve(static_cast<std::size_t>(want));
        for (int t = 0; t < want; ++t) pool.emplace_back(worker);
        for (auto& th : pool) th.join();
    }
    const double norm_sum = pairwise_sum(slices, 0, slices.size());

    const Quantity L = meters(box_L_m);
    const Quantity rho = std::numbers::pi * constants.reduced_planck() *
                         constants.speed_of_light() / pow(L, 4) * norm_sum;
    return VacuumEstimate::make(VacuumScheme::DiscreteSum,
                                rho.value_in(joules_per_m3(1).dims()),
                                "n_max=" + std::to_string(n_max), box_L_m);
}

VacuumEstimate continuum_cutoff_density(double omega_c_rad_s,
                                        const ConstantsSet& constants) {
    if (!(omega_c_rad_s > 0.0))
        throw NonPositiveCutoff("cutoff frequency must be > 0 rad/s");
    constants.validate();
    const Quantity omega_c{omega_c_rad_s, Dimension{0, 0, -1, 0}};
    const Quantity rho =
        constants.reduced_planck() * pow(omega_c, 4) /
        (16.0 * std::numbers::pi * std::numbers::pi *
         pow(constants.speed_of_light(), 3));
    return VacuumEstimate::make(VacuumScheme::PlanckCutoff,
                                rho.value_in(joules_per_m3(1).dims()),
                                "omega_c=" + fmt_g(omega_c_rad_s) + " rad/s");
}

VacuumEstimate holographic_cutoff_density(double box_L_m,
                                          double mode_budget_bits,
                                          const ConstantsSet& constants) {
    if (!(box_L_m > 0.0) || !(mode_budget_bits > 0.0))
        throw NonPositiveInputs("box scale and mode budget must both be > 0");
    constants.validate();
    const Quantity L = meters(box_L_m);
    const Quantity rho = constants.reduced_planck() * constants.speed_of_light() *
                         mode_budget_bits / pow(L, 4);
    return VacuumEstimate::make(VacuumScheme::HolographicCutoff,
                                rho.value_in(joules_per_m3(1).dims()),
                                "budget=" + fmt_g(mode_budget_bits) + " bits",
                                box_L_m);
}

VacuumEstimate collapse_bound_density(double box_L_m,
                                      const ConstantsSet& constants) {
    if (!(box_L_m > 0.0)) throw NonPositiveLength("region size must be > 0 m");
    constants.validate();
    const Quantity L = meters(box_L_m);
    const Quantity rho = pow(constants.speed_of_light(), 4) /
                         (constants.gravitational_constant() * pow(L, 2));
    return VacuumEstimate::make(VacuumScheme::CollapseBound,
                                rho.value_in(joules_per_m3(1).dims()),
                                "L=" + fmt_g(box_L_m) + " m", box_L_m);
}

double hubble_scale_quantum_density(double hubble_radius_m,
                                    const ConstantsSet& constants) {
    if (!(hubble_radius_m > 0.0))
        throw NonPositiveRadius("Hubble radius must be > 0 m");
    constants.validate();
    const Quantity R = meters(hubble_radius_m);
    const Quantity quantum_energy = constants.reduced_planck() * 2.0 *
                                    std::numbers::pi *
                                    constants.speed_of_light() / R;
    const Quantity volume = (4.0 * std::numbers::pi / 3.0) * pow(R, 3);
    return (quantum_energy / volume).value_in(joules_per_m3(1).dims());
}

VacuumEstimate geometric_mean_bound(double rho_planck_J_m3,
                                    double rho_hubble_J_m3) {
    if (!(rho_planck_J_m3 > 0.0) || !(rho_hubble_J_m3 > 0.0))
        throw NonPositiveDensity("geometric mean requires both densities > 0");
    const double rho = std::sqrt(rho_planck_J_m3) * std::sqrt(rho_hubble_J_m3);
    return VacuumEstimate::make(
        VacuumScheme::GeometricMean, rho,
        "rho_P=" + fmt_g(rho_planck_J_m3) + " J/m^3, rho_H=" +
            fmt_g(rho_hubble_J_m3) + " J/m^3");
}

double vacuum_pressure(double rho_J_m3) {
    if (!std::isfinite(rho_J_m3))
        throw NonFiniteValue("vacuum pressure requires a finite density");
    return -rho_J_m3;
}

ConservationSeries conservation_residual(const std::vector<double>& times_s,
                                         const std::vector<double>& rho_J_m3,
                                         const std::vector<double>& scale_factor) {
    const std::size_t n = times_s.size();
    if (n < 3 || rho_J_m3.size() != n || scale_factor.size() != n)
        throw InsufficientSamples(
            "conservation_residual needs >= 3 equal-length samples");
    for (std::size_t i = 1; i < n; ++i)
        if (!(times_s[i] > times_s[i - 1]))
            throw NonMonotoneTimes("sample times must be strictly increasing");
    for (std::size_t i = 0; i < n; ++i)
        if (!(rho_J_m3[i] > 0.0) || !(scale_factor[i] > 0.0))
            throw NonPositiveInputs(
                "density and scale factor samples must be > 0");

    std::vector<double> a3(n), rho_a3(n);
    for (std::size_t i = 0; i < n; ++i) {
        a3[i] = scale_factor[i] * scale_factor[i] * scale_factor[i];
        rho_a3[i] = rho_J_m3[i] * a3[i];
    }
    const std::vector<double> da3 = derivative(times_s, a3);
    const std::vector<double> drho_a3 = derivative(times_s, rho_a3);

    ConservationSeries out;
    out.times_s = times_s;
    out.rho_J_m3 = rho_J_m3;
    out.scale_factor = scale_factor;
    out.residual.resize(n);
    for (std::size_t i = 0; i < n; ++i) {
        const double p = vacuum_pressure(rho_J_m3[i]);
        out.residual[i] = (p * da3[i] + drho_a3[i]) / a3[i];
    }
    return out;
}

}  // namespace cosmobound
