#include <doctest.h>

#include <cmath>
#include <numbers>

#include "cosmobound/bounds.hpp"
#include "cosmobound/errors.hpp"
#include "cosmobound/predictability.hpp"
#include "cosmobound/units.hpp"

#include "oracles.hpp"

using namespace cosmobound;

TEST_CASE("default gas parameters give 38 collisions") {
    const CollisionPredictability out =
        collision_predictability(GasParams{}, ConstantsSet{});
    CHECK(out.collisions_to_order_unity == 38);
    // delta_theta_0 = G m l / (2 d^2 v^2) ~ 6.27e-107 rad for an
    // electron-mass perturber at the observable-universe scale.
    CHECK(std::log10(out.initial_angle_uncertainty_rad) ==
          doctest::Approx(-106.2025).epsilon(1e-4));
    CHECK(out.amplification_per_collision ==
          doctest::Approx(1e-7 / 1.5e-10).epsilon(1e-12));
    // The count must stay in the tens regardless of reasonable parameter
    // jitter; the headline claim is its order, not its exact value.
    CHECK(out.collisions_to_order_unity >= 10);
    CHECK(out.collisions_to_order_unity <= 60);
}

TEST_CASE("an exactly representable case pins the collision count") {
    // f = 10 and delta_theta_0 = 1e-12 give n = ceil(12) = 12 on the nose.
    GasParams g;
    g.mean_free_path_m = 1e-6;
    g.molecule_radius_m = 1e-7;
    g.mean_speed_m_s = 1.0;
    g.perturber_mass_kg = 1e-6;
    g.perturber_distance_m = 1.0;
    ConstantsSet k;
    k.G = 2.0;  // synthetic constant chosen to make delta_theta_0 = 1e-12
    const CollisionPredictability out = collision_predictability(g, k);
    CHECK(out.amplification_per_collision == doctest::Approx(10.0).epsilon(1e-12));
    CHECK(out.initial_angle_uncertainty_rad ==
          doctest::Approx(1e-12).epsilon(1e-12));
    CHECK(out.collisions_to_order_unity == 12);
}

TEST_CASE("initial uncertainty falls with the inverse square of distance") {
    GasParams near = GasParams{};
    GasParams far = GasParams{};
    far.perturber_distance_m = 10.0 * near.perturber_distance_m;
    const double u_near =
        collision_predictability(near).initial_angle_uncertainty_rad;
    const double u_far =
        collision_predictability(far).initial_angle_uncertainty_rad;
    CHECK(u_near / u_far == doctest::Approx(100.0).epsilon(1e-12));
}

TEST_CASE("collision parameter validation") {
    GasParams g;
    g.molecule_radius_m = g.mean_free_path_m;  // amplification factor 1
    CHECK_THROWS_AS(collision_predictability(g), AmplificationNotAboveOne);
    g = GasParams{};
    g.mean_speed_m_s = 0.0;
    CHECK_THROWS_AS(collision_predictability(g), RangeViolation);
    CHECK_THROWS_AS(collisions_to_order_unity(2.0, 10.0), RangeViolation);
    CHECK_THROWS_AS(collisions_to_order_unity(1e-5, 1.0),
                    AmplificationNotAboveOne);
}

TEST_CASE("recurrence caps saturate at the budget in planck ticks") {
    const ConstantsSet k;
    const InfoBound bound =
        InfoBound::from_bits(1e122, BoundMethod::HolographicEvent);

    const RecurrenceCap tick =
        recurrence_cap(bound, RecurrenceReading::MaxRepresentableTime, k);
    CHECK(tick.cap_seconds == doctest::Approx(5.39124644666194e78).epsilon(1e-10));
    CHECK(tick.cap_years == doctest::Approx(1.70838e71).epsilon(1e-4));
    CHECK(to_string(tick.interpretation) == "max-representable-time");

    // The exponent reading clamps exp's argument to ln(bits), which lands on
    // the same number: exp(ln(bits)) * t_P. Both readings agree by design,
    // and neither reaches anywhere near 1e60 years times 10^60.
    const RecurrenceCap expo =
        recurrence_cap(bound, RecurrenceReading::MaxExponentArgument, k);
    CHECK(expo.cap_seconds == doctest::Approx(tick.cap_seconds).epsilon(1e-9));
    CHECK(to_string(expo.interpretation) == "max-exponent-argument");

    CHECK_THROWS_AS(
        recurrence_cap(InfoBound::from_bits(0.5, BoundMethod::HolographicEvent),
                       RecurrenceReading::MaxRepresentableTime, k),
        BoundBelowOneBit);
}

TEST_CASE("recurrence cap is linear in the budget") {
    const ConstantsSet k;
    const double one = recurrence_cap(InfoBound::from_bits(
                                          1e10, BoundMethod::HolographicEvent),
                                      RecurrenceReading::MaxRepresentableTime, k)
                           .cap_seconds;
    const double ten = recurrence_cap(InfoBound::from_bits(
                                          1e11, BoundMethod::HolographicEvent),
                                      RecurrenceReading::MaxRepresentableTime, k)
                           .cap_seconds;
    CHECK(ten / one == doctest::Approx(10.0).epsilon(1e-12));
    CHECK(one == doctest::Approx(1e10 * oracles::kFrozenPlanckTimeS).epsilon(1e-12));
}

TEST_CASE("lyapunov horizon converts the budget to e-folding time") {
    CHECK(lyapunov_horizon_s(1.0, 0.0, 10.0) ==
          doctest::Approx(10.0 * std::numbers::ln2).epsilon(1e-14));
    CHECK(lyapunov_horizon_s(2.0, 0.0, 10.0) ==
          doctest::Approx(5.0 * std::numbers::ln2).epsilon(1e-14));
    // The cosmological budget with a 1/s rate: ~6.93e121 s.
    CHECK(lyapunov_horizon_s(1.0, 0.0, 1e122) ==
          doctest::Approx(6.9314718e121).epsilon(1e-6));
    CHECK_THROWS_AS(lyapunov_horizon_s(0.0, 0.0, 10.0), NonPositiveLyapunov);
    CHECK_THROWS_AS(lyapunov_horizon_s(1.0, 20.0, 10.0), RangeViolation);
    CHECK_THROWS_AS(lyapunov_horizon_s(1.0, -1.0, 10.0), RangeViolation);
}

TEST_CASE("redshift cutoff is logarithmic in the bound") {
    const InfoBound bound =
        InfoBound::from_bits(1e122, BoundMethod::HolographicEvent);
    // tau ln(1e122) = tau * 122 ln(10).
    CHECK(redshift_cutoff_s(1e-6, bound) ==
          doctest::Approx(2.8091538134527357e-4).epsilon(1e-12));
    // e-fold linearity and bound logarithm behaviour.
    CHECK(redshift_cutoff_s(2e-6, bound) ==
          doctest::Approx(2.0 * redshift_cutoff_s(1e-6, bound)).epsilon(1e-14));
    const InfoBound e1 = InfoBound::from_bits(std::exp(1.0),
                                              BoundMethod::HolographicEvent);
    CHECK(redshift_cutoff_s(1.0, e1) == doctest::Approx(1.0).epsilon(1e-14));
    const InfoBound dbl = InfoBound::from_bits(
        1e122 * 1e122, BoundMethod::HolographicEvent);
    CHECK(redshift_cutoff_s(1e-6, dbl) ==
          doctest::Approx(2.0 * redshift_cutoff_s(1e-6, bound)).epsilon(1e-12));

    CHECK_THROWS_AS(redshift_cutoff_s(0.0, bound), RangeViolation);
    CHECK_THROWS_AS(
        redshift_cutoff_s(1.0, InfoBound::from_bits(
                                   1.0, BoundMethod::HolographicEvent)),
        BoundBelowOneBit);
}
