#pragma once

#include <cstdint>
#include <optional>
#include <string>

#include "cosmobound/errors.hpp"
#include "cosmobound/units.hpp"

namespace cosmobound {

enum class BoundMethod {
    HolographicEvent,
    HolographicParticle,
    LloydScaled,
    BlackHole,
};

std::string to_string(BoundMethod m);

/// A bit count with provenance. Magnitudes reach 1e122, so products are
/// formed in the log domain; both bits and log10_bits are carried.
struct InfoBound {
    double bits = 0.0;
    double log10_bits = 0.0;
    BoundMethod method = BoundMethod::HolographicEvent;
    std::optional<double> epoch_t_s;  // set whenever time scaling applied

    static InfoBound from_bits(double bits, BoundMethod method,
                               std::optional<double> epoch_t_s = std::nullopt);
    static InfoBound from_log10(double log10_bits, BoundMethod method,
                                std::optional<double> epoch_t_s = std::nullopt);
};

struct BlackHoleRecord {
    double mass_kg = 0.0;
    double schwarzschild_radius_m = 0.0;  // 2 G M / c^2
    double area_m2 = 0.0;                 // 4 pi r^2
    double entropy_over_k = 0.0;          // A / (4 L_P^2) = 4 pi G M^2 / (hbar c)
    double bits = 0.0;                    // entropy_over_k / ln 2
};

/// Bekenstein-Hawking entropy of an uncharged, non-rotating black hole.
BlackHoleRecord bh_entropy(double mass_kg, const ConstantsSet& constants = {});

/// bits = (S/k) / ln 2.
double entropy_to_bits(double entropy_over_k);

/// Alternative literal reading in which entropy is the base-2 logarithm of
/// the information count, i.e. I = 2^(S/k). The count itself overflows any
/// float for astrophysical entropies, so only its logarithms are returned.
/// Diagnostic only; the main pipeline uses entropy_to_bits.
struct ExponentialInformationReading {
    double log2_information;   // = S/k
    double log10_information;  // = (S/k) * log10(2)
};
ExponentialInformationReading entropy_as_exponential_information(
    double entropy_over_k);

/// bits = area / (4 L_P^2); the method tag records which horizon the caller
/// derived the area from.
InfoBound holographic_bound(double area_m2,
                            BoundMethod method = BoundMethod::HolographicEvent,
                            const ConstantsSet& constants = {});

/// Quadratic time scaling of a reference bound: bits = ref_bits (t/ref_t)^2.
InfoBound lloyd_bound(double t_s, double ref_bits, double ref_t_s);

/// floor(log2 bits): the largest qubit count whose state-component count
/// stays within the bound.
int specifiability_limit(const InfoBound& bound);

/// Holographic cap on the inflationary scale-factor change for a given
/// pre-inflation horizon radius. The cap equals the bit count of the horizon
/// surface; the log of the cap is the e-fold budget.
struct InflationCap {
    double max_expansion_factor = 0.0;
    double max_efolds = 0.0;
    double surface_bits = 0.0;  // identical to max_expansion_factor
};
InflationCap inflation_expansion_limit(double pre_inflation_horizon_radius_m,
                                       const ConstantsSet& constants = {});

/// Inflation factor required by Guth's original proposal, used as the
/// comparison point when reporting the cap.
inline constexpr double kGuthRequiredExpansion = 1e20;

}  // namespace cosmobound
