#pragma once

#include <array>
#include <string>

#include "cosmobound/errors.hpp"

namespace cosmobound {

/// Exponent vector over the base dimensions (length, mass, time, temperature).
/// Exponents are exact integers; equality is component-wise.
class Dimension {
  public:
    constexpr Dimension() = default;
    constexpr Dimension(int length, int mass, int time, int temperature)
        : exp_{length, mass, time, temperature} {}

    static constexpr Dimension none() { return {}; }
    static constexpr Dimension length() { return {1, 0, 0, 0}; }
    static constexpr Dimension mass() { return {0, 1, 0, 0}; }
    static constexpr Dimension time() { return {0, 0, 1, 0}; }
    static constexpr Dimension temperature() { return {0, 0, 0, 1}; }

    constexpr int length_exp() const { return exp_[0]; }
    constexpr int mass_exp() const { return exp_[1]; }
    constexpr int time_exp() const { return exp_[2]; }
    constexpr int temperature_exp() const { return exp_[3]; }

    constexpr bool dimensionless() const {
        return exp_[0] == 0 && exp_[1] == 0 && exp_[2] == 0 && exp_[3] == 0;
    }

    constexpr Dimension pow(int k) const {
        return {exp_[0] * k, exp_[1] * k, exp_[2] * k, exp_[3] * k};
    }

    constexpr bool even_exponents() const {
        return exp_[0] % 2 == 0 && exp_[1] % 2 == 0 && exp_[2] % 2 == 0 &&
               exp_[3] % 2 == 0;
    }

    constexpr Dimension half() const {
        return {exp_[0] / 2, exp_[1] / 2, exp_[2] / 2, exp_[3] / 2};
    }

    friend constexpr Dimension operator*(Dimension a, Dimension b) {
        return {a.exp_[0] + b.exp_[0], a.exp_[1] + b.exp_[1],
                a.exp_[2] + b.exp_[2], a.exp_[3] + b.exp_[3]};
    }
    friend constexpr Dimension operator/(Dimension a, Dimension b) {
        return {a.exp_[0] - b.exp_[0], a.exp_[1] - b.exp_[1],
                a.exp_[2] - b.exp_[2], a.exp_[3] - b.exp_[3]};
    }
    friend constexpr bool operator==(Dimension a, Dimension b) {
        return a.exp_ == b.exp_;
    }
    friend constexpr bool operator!=(Dimension a, Dimension b) {
        return !(a == b);
    }

    /// "m^2 kg s^-1" style rendering, "1" when dimensionless.
    std::string str() const;

  private:
    std::array<int, 4> exp_{0, 0, 0, 0};
};

/// A finite real value with a runtime-checked dimension. Arithmetic between
/// quantities enforces dimensional algebra; any violation is a hard error.
class Quantity {
  public:
    Quantity() = default;
    Quantity(double value, Dimension dims);  // throws NonFiniteValue

    static Quantity dimensionless(double v) { return {v, Dimension::none()}; }

    double value() const { return value_; }
    Dimension dims() const { return dims_; }

    /// Value extraction with a dimension assertion.
    double value_in(Dimension expected) const;

    Quantity operator-() const { return {-value_, dims_}; }

    friend Quantity operator+(const Quantity& a, const Quantity& b);
    friend Quantity operator-(const Quantity& a, const Quantity& b);
    friend Quantity operator*(const Quantity& a, const Quantity& b);
    friend Quantity operator/(const Quantity& a, const Quantity& b);
    friend Quantity operator*(double a, const Quantity& b) {
        return Quantity(a * b.value_, b.dims_);
    }
    friend Quantity operator*(const Quantity& a, double b) { return b * a; }
    friend Quantity operator/(const Quantity& a, double b);

  private:
    double value_ = 0.0;
    Dimension dims_{};
};

/// Integer power; dims exponents multiply.
Quantity pow(const Quantity& q, int k);
/// Real power; only legal for dimensionless quantities.
Quantity pow(const Quantity& q, double x);
/// Square root; requires all dimension exponents even.
Quantity sqrt(const Quantity& q);

inline Quantity meters(double v) { return {v, Dimension::length()}; }
inline Quantity kilograms(double v) { return {v, Dimension::mass()}; }
inline Quantity seconds(double v) { return {v, Dimension::time()}; }
inline Quantity kelvin(double v) { return {v, Dimension::temperature()}; }
/// J/m^3 = kg m^-1 s^-2
inline Quantity joules_per_m3(double v) { return {v, Dimension{-1, 1, -2, 0}}; }

/// Fundamental constants in SI, CODATA-2018 defaults. Overridable through the
/// config file; all values must stay strictly positive.
struct ConstantsSet {
    double c = 299792458.0;         // speed of light, m/s
    double G = 6.67430e-11;         // gravitational constant, m^3 kg^-1 s^-2
    double hbar = 1.054571817e-34;  // reduced Planck constant, J s
    double k_B = 1.380649e-23;      // Boltzmann constant, J/K
    double year_seconds = 31557600.0;  // Julian year

    void validate() const;  // throws RangeViolation naming the constant

    Quantity speed_of_light() const { return {c, Dimension{1, 0, -1, 0}}; }
    Quantity gravitational_constant() const {
        return {G, Dimension{3, -1, -2, 0}};
    }
    Quantity reduced_planck() const { return {hbar, Dimension{2, 1, -1, 0}}; }
    Quantity boltzmann() const { return {k_B, Dimension{2, 1, -2, -1}}; }

    /// sqrt(hbar G / c^3), meters.
    Quantity planck_length() const;
    /// sqrt(hbar G / c^5), seconds.
    Quantity planck_time() const;
    /// sqrt(hbar c / G), kilograms.
    Quantity planck_mass() const;
    /// c^7 / (hbar G^2), J/m^3. Equal to c^4/(G L_P^2).
    Quantity planck_energy_density() const;
};

}  // namespace cosmobound
