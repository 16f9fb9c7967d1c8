#pragma once

#include <array>
#include <complex>
#include <cstdint>
#include <optional>
#include <random>
#include <string>
#include <vector>

#include "cosmobound/errors.hpp"
#include "cosmobound/units.hpp"

namespace cosmobound {

inline constexpr int kDefaultQubitCap = 14;

/// Immutable n-qubit state vector. Qubit 0 is the least significant bit of
/// the amplitude index. Factories produce normalized registers; gate
/// application preserves the norm to 1e-12 per step.
struct QubitRegister {
    int n = 0;
    std::vector<std::complex<double>> amplitudes;

    double norm_sq() const;
    /// |norm_sq - 1|, the quantity tracked as norm_error in experiment output.
    double norm_error() const;
};

enum class StateKind { Basis, Uniform, SeededRandom, PiDigit };

struct StateSpec {
    StateKind kind = StateKind::Basis;
    std::uint64_t basis_index = 0;  // Basis only
    std::uint64_t seed = 0;        // SeededRandom only

    /// Accepts "basis:K", "uniform", "random" (seed supplied separately),
    /// "pi". Throws ParseError on anything else.
    static StateSpec parse(const std::string& text);
    std::string str() const;
};

QubitRegister init_state(int n, const StateSpec& spec,
                         int cap = kDefaultQubitCap);

QubitRegister basis_state(int n, std::uint64_t k, int cap = kDefaultQubitCap);
QubitRegister uniform_state(int n, int cap = kDefaultQubitCap);
QubitRegister seeded_random_state(int n, std::uint64_t seed,
                                  int cap = kDefaultQubitCap);
/// Real parts proportional to successive base-10 digits of pi (3,1,4,...),
/// imaginary parts zero, then normalized. Algorithmically simple by
/// construction, though no generic compressor will detect that.
QubitRegister pi_digit_state(int n, int cap = kDefaultQubitCap);

/// First `count` decimal digits of pi (3, 1, 4, ...), exact spigot
/// evaluation, memoized across calls.
std::vector<std::uint8_t> pi_digits(std::size_t count);

enum class Gate { X, H, CNOT, T, General1Q };

using Unitary1Q = std::array<std::complex<double>, 4>;  // row-major 2x2

QubitRegister apply_x(const QubitRegister& reg, int target);
QubitRegister apply_h(const QubitRegister& reg, int target);
QubitRegister apply_t(const QubitRegister& reg, int target);
QubitRegister apply_cnot(const QubitRegister& reg, int control, int target);
/// Checked against U†U = I to 1e-10.
QubitRegister apply_unitary1q(const QubitRegister& reg, int target,
                              const Unitary1Q& u);

QubitRegister apply_gate(const QubitRegister& reg, Gate gate,
                         const std::vector<int>& targets,
                         const std::optional<Unitary1Q>& unitary = std::nullopt);

enum class NoiseKind { PhaseJitter, SmallRotation, DepolarizingApprox };

std::string to_string(NoiseKind k);
NoiseKind parse_noise_kind(const std::string& text);

struct NoiseModel {
    NoiseKind kind = NoiseKind::SmallRotation;
    double rate = 0.0;   // probability per qubit per step
    double sigma = 0.0;  // radians
    std::uint64_t seed = 0;

    void validate() const;
};

/// Deterministic random stream for noise injection. The mt19937_64 engine is
/// bit-exact across platforms by the standard; the uniform and normal
/// transforms are pinned here (fixed bit mapping, Box-Muller) because the
/// standard distributions are implementation-defined.
class NoiseStream {
  public:
    explicit NoiseStream(std::uint64_t seed) : mt_(seed) {}
    double uniform01();  // [0, 1)
    double normal(double sigma);
    std::uint64_t raw() { return mt_(); }

  private:
    std::mt19937_64 mt_;
};

/// Perturbs each qubit independently with probability model.rate by a small
/// random unitary of the model's kind (angle ~ N(0, sigma)), then
/// renormalizes. The stream advances by a fixed number of draws per qubit.
QubitRegister inject_error(const QubitRegister& reg, const NoiseModel& model,
                           NoiseStream& stream);
/// Single-shot form: fresh stream from model.seed.
QubitRegister inject_error(const QubitRegister& reg, const NoiseModel& model);

/// Canonical fixed-point serialization. Header stores n, precision and the
/// quantization scale; payload packs each real component (index order, real
/// then imaginary) as a precision_bits-wide code, MSB first. Round-trip
/// error is below 2^-precision_bits per component.
std::vector<std::uint8_t> serialize(const QubitRegister& reg,
                                    int precision_bits);
/// Reconstruction from serialize() output. Not renormalized: quantization
/// noise is part of the round-trip contract.
QubitRegister deserialize(const std::vector<std::uint8_t>& bytes);

struct ComplexityEstimate {
    std::int64_t raw_bits = 0;         // exactly 2 * 2^n * precision_bits
    std::int64_t compressed_bits = 0;  // upper bound on H of the serialization
    int precision_bits = 0;
    std::string compressor_id;
};

/// Upper bound on the algorithmic information of the amplitude set, by
/// lossless compression of the canonical serialization. Never a value of H
/// itself: true algorithmic content (e.g. of pi-digit amplitudes) is
/// invisible to a generic compressor.
ComplexityEstimate complexity_upper_bound(const QubitRegister& reg,
                                          int precision_bits);

struct SpecifiabilityVerdict {
    bool exceeds_printed = false;   // against area / L_P^2
    bool exceeds_quarter = false;   // against area / (4 L_P^2)
    double bound_printed_bits = 0.0;
    double bound_quarter_bits = 0.0;
    double log10_margin_printed = 0.0;  // log10(bound) - log10(compressed)
    double log10_margin_quarter = 0.0;
};

/// Compares compressed_bits against the holographic budget of an area, both
/// with the bare L_P^2 divisor and with the conventional extra 1/4. The
/// bound is exceeded only on strict inequality.
SpecifiabilityVerdict check_specifiability(const ComplexityEstimate& est,
                                           double holo_area_m2,
                                           const ConstantsSet& constants = {});

struct ExperimentConfig {
    int n = 10;
    int depth = 50;
    NoiseModel model;
    int trials = 30;
    int precision_bits = 16;
    StateSpec initial{StateKind::PiDigit, 0, 0};
    int qubit_cap = kDefaultQubitCap;
    int threads = 0;  // 0 = hardware count
};

struct StepStats {
    int step = 0;  // 0 = initial state, before any layer
    std::int64_t raw_bits = 0;
    std::int64_t control_compressed_bits = 0;
    double control_norm_error = 0.0;
    double mean_compressed_bits = 0.0;
    std::int64_t min_compressed_bits = 0;
    std::int64_t max_compressed_bits = 0;
    double mean_norm_error = 0.0;
};

struct DegradationResult {
    ExperimentConfig config;
    std::vector<StepStats> steps;  // depth + 1 entries
};

/// Repeatedly applies a fixed, algorithmically simple circuit layer, injects
/// noise per the model, and tracks compressed-size statistics across trials
/// against a noiseless control. Trial t uses seed model.seed + t; trials may
/// run in parallel and are merged by index, so output is deterministic.
DegradationResult run_degradation_experiment(const ExperimentConfig& config);

/// CSV emission (columns: step, trial_stat, raw_bits, compressed_bits,
/// norm_error) with rows control/mean/min/max per step. Byte-deterministic.
std::string experiment_csv(const DegradationResult& result);

}  // namespace cosmobound
