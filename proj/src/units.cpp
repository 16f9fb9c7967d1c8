#include "cosmobound/units.hpp"

#include <cmath>
#include <cstdio>

namespace cosmobound {

namespace {

void append_power(std::string& out, const char* symbol, int exp) {
    if (exp == 0) return;
    if (!out.empty()) out += ' ';
    out += symbol;
    if (exp != 1) {
        char buf[16];
        std::snprintf(buf, sizeof buf, "^%d", exp);
        out += buf;
    }
}

}  // namespace

std::string Dimension::str() const {
    std::string out;
    append_power(out, "m", exp_[0]);
    append_power(out, "kg", exp_[1]);
    append_power(out, "s", exp_[2]);
    append_power(out, "K", exp_[3]);
    return out.empty() ? "1" : out;
}

Quantity::Quantity(double value, Dimension dims) : value_(value), dims_(dims) {
    if (!std::isfinite(value)) {
        throw NonFiniteValue("quantity value is not finite (dims " +
                             dims.str() + ")");
    }
}

double Quantity::value_in(Dimension expected) const {
    if (dims_ != expected) {
        throw DimensionMismatch("expected dims " + expected.str() + ", got " +
                                dims_.str());
    }
    return value_;
}

Quantity operator+(const Quantity& a, const Quantity& b) {
    if (a.dims_ != b.dims_) {
        throw DimensionMismatch("cannot add " + a.dims_.str() + " and " +
                                b.dims_.str());
    }
    return {a.value_ + b.value_, a.dims_};
}

Quantity operator-(const Quantity& a, const Quantity& b) {
    if (a.dims_ != b.dims_) {
        throw DimensionMismatch("cannot subtract " + b.dims_.str() + " from " +
                                a.dims_.str());
    }
    return {a.value_ - b.value_, a.dims_};
}

Quantity operator*(const Quantity& a, const Quantity& b) {
    return {a.value_ * b.value_, a.dims_ * b.dims_};
}

Quantity operator/(const Quantity& a, const Quantity& b) {
    if (b.value_ == 0.0) {
        throw DivisionByZero("division by zero quantity (" + b.dims_.str() +
                             ")");
    }
    return {a.value_ / b.value_, a.dims_ / b.dims_};
}

Quantity operator/(const Quantity& a, double b) {
    if (b == 0.0) throw DivisionByZero("division by zero scalar");
    return {a.value_ / b, a.dims_};
}

Quantity pow(const Quantity& q, int k) {
    return {std::pow(q.value(), k), q.dims().pow(k)};
}

Quantity pow(const Quantity& q, double x) {
    double rounded = std::round(x);
    if (rounded == x && std::abs(x) < 64.0) {
        return pow(q, static_cast<int>(rounded));
    }
    if (!q.dims().dimensionless()) {
        throw NonIntegerPowerOfDimensioned(
            "non-integer power " + std::to_string(x) +
            " of dimensioned quantity (" + q.dims().str() + ")");
    }
    return Quantity::dimensionless(std::pow(q.value(), x));
}

Quantity sqrt(const Quantity& q) {
    if (!q.dims().even_exponents()) {
        throw NonIntegerPowerOfDimensioned("sqrt of quantity with odd dims (" +
                                           q.dims().str() + ")");
    }
    if (q.value() < 0.0) {
        throw NegativeRadicand("sqrt of negative quantity");
    }
    return {std::sqrt(q.value()), q.dims().half()};
}

void ConstantsSet::validate() const {
    auto check = [](double v, const char* name) {
        if (!(v > 0.0) || !std::isfinite(v)) {
            throw RangeViolation(std::string("constant ") + name +
                                 " must be strictly positive and finite");
        }
    };
    check(c, "c");
    check(G, "G");
    check(hbar, "hbar");
    check(k_B, "k_B");
    check(year_seconds, "year_seconds");
}

Quantity ConstantsSet::planck_length() const {
    return cosmobound::sqrt(reduced_planck() * gravitational_constant() /
                            pow(speed_of_light(), 3));
}

Quantity ConstantsSet::planck_time() const {
    return cosmobound::sqrt(reduced_planck() * gravitational_constant() /
                            pow(speed_of_light(), 5));
}

Quantity ConstantsSet::planck_mass() const {
    return cosmobound::sqrt(reduced_planck() * speed_of_light() /
                            gravitational_constant());
}

Quantity ConstantsSet::planck_energy_density() const {
    return pow(speed_of_light(), 7) /
           (reduced_planck() * pow(gravitational_constant(), 2));
}

}  // namespace cosmobound
