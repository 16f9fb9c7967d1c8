#include "cosmobound/bounds.hpp"

#include <cmath>
#include <limits>
#include <numbers>

namespace cosmobound {

std::string to_string(BoundMethod m) {
    switch (m) {
        case BoundMethod::HolographicEvent: return "holographic-event";
        case BoundMethod::HolographicParticle: return "holographic-particle";
        case BoundMethod::LloydScaled: return "lloyd-scaled";
        case BoundMethod::BlackHole: return "black-hole";
    }
    throw RangeViolation("unknown BoundMethod tag");
}

InfoBound InfoBound::from_bits(double bits, BoundMethod method,
                               std::optional<double> epoch_t_s) {
    if (!(bits >= 0.0)) throw RangeViolation("InfoBound requires bits >= 0");
    InfoBound b;
    b.bits = bits;
    b.log10_bits = bits > 0.0 ? std::log10(bits)
                              : -std::numeric_limits<double>::infinity();
    b.method = method;
    b.epoch_t_s = epoch_t_s;
    return b;
}

InfoBound InfoBound::from_log10(double log10_bits, BoundMethod method,
                                std::optional<double> epoch_t_s) {
    if (!std::isfinite(log10_bits))
        throw RangeViolation("InfoBound requires finite log10 bits");
    InfoBound b;
    b.bits = std::pow(10.0, log10_bits);  // may overflow to inf; log form stays exact
    b.log10_bits = log10_bits;
    b.method = method;
    b.epoch_t_s = epoch_t_s;
    return b;
}

BlackHoleRecord bh_entropy(double mass_kg, const ConstantsSet& constants) {
    if (!(mass_kg > 0.0)) throw NonPositiveMass("black hole mass must be > 0 kg");
    constants.validate();
    const Quantity M = kilograms(mass_kg);
    const Quantity r_s = 2.0 * constants.gravitational_constant() * M /
                         pow(constants.speed_of_light(), 2);
    const Quantity area = 4.0 * std::numbers::pi * pow(r_s, 2);
    // 4 pi G M^2 / (hbar c); dimensionless by construction.
    const Quantity s_over_k = 4.0 * std::numbers::pi *
                              constants.gravitational_constant() * pow(M, 2) /
                              (constants.reduced_planck() * constants.speed_of_light());
    BlackHoleRecord rec;
    rec.mass_kg = mass_kg;
    rec.schwarzschild_radius_m = r_s.value_in(Dimension::length());
    rec.area_m2 = area.value_in(Dimension::length().pow(2));
    rec.entropy_over_k = s_over_k.value_in(Dimension::none());
    rec.bits = entropy_to_bits(rec.entropy_over_k);
    return rec;
}

double entropy_to_bits(double entropy_over_k) {
    if (!(entropy_over_k >= 0.0))
        throw NegativeEntropy("entropy/k must be >= 0");
    return entropy_over_k / std::numbers::ln2;
}

ExponentialInformationReading entropy_as_exponential_information(
    double entropy_over_k) {
    if (!(entropy_over_k >= 0.0))
        throw NegativeEntropy("entropy/k must be >= 0");
    return {entropy_over_k, entropy_over_k * std::log10(2.0)};
}

InfoBound holographic_bound(double area_m2, BoundMethod method,
                            const ConstantsSet& constants) {
    if (!(area_m2 > 0.0)) throw NonPositiveArea("horizon area must be > 0 m^2");
    if (method != BoundMethod::HolographicEvent &&
        method != BoundMethod::HolographicParticle)
        throw RangeViolation("holographic_bound expects a holographic method tag");
    const double lp = constants.planck_length().value_in(Dimension::length());
    return InfoBound::from_bits(area_m2 / (4.0 * lp * lp), method);
}

InfoBound lloyd_bound(double t_s, double ref_bits, double ref_t_s) {
    if (!(t_s > 0.0) || !(ref_t_s > 0.0))
        throw NonPositiveTime("lloyd_bound requires t > 0 and ref_t > 0");
    if (!(ref_bits > 0.0))
        throw RangeViolation("lloyd_bound requires ref_bits > 0");
    // (t/ref_t)^2 spans ~1e-104 around the fiducial epoch; keep the product in
    // the log domain so extreme epochs cannot underflow the intermediate.
    const double log10_bits =
        std::log10(ref_bits) + 2.0 * (std::log10(t_s) - std::log10(ref_t_s));
    return InfoBound::from_log10(log10_bits, BoundMethod::LloydScaled, t_s);
}

int specifiability_limit(const InfoBound& bound) {
    if (!(bound.bits >= 1.0))
        throw BoundBelowOneBit("specifiability needs a bound of at least 1 bit");
    const double log2_bits = std::isfinite(bound.bits)
                                 ? std::log2(bound.bits)
                                 : bound.log10_bits / std::log10(2.0);
    return static_cast<int>(std::floor(log2_bits));
}

InflationCap inflation_expansion_limit(double pre_inflation_horizon_radius_m,
                                       const ConstantsSet& constants) {
    if (!(pre_inflation_horizon_radius_m > 0.0))
        throw NonPositiveRadius("pre-inflation horizon radius must be > 0 m");
    const double area = 4.0 * std::numbers::pi * pre_inflation_horizon_radius_m *
                        pre_inflation_horizon_radius_m;
    const InfoBound surface =
        holographic_bound(area, BoundMethod::HolographicParticle, constants);
    InflationCap cap;
    cap.surface_bits = surface.bits;
    cap.max_expansion_factor = surface.bits;
    cap.max_efolds = std::log(surface.bits);
    return cap;
}

}  // namespace cosmobound
