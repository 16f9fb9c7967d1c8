#include "cosmobound/quantum.hpp"

#include <algorithm>
#include <atomic>
#include <charconv>
#include <cmath>
#include <cstring>
#include <mutex>
#include <numbers>
#include <sstream>
#include <thread>

#include "cosmobound/compression.hpp"

namespace cosmobound {

namespace {

void check_qubit_count(int n, int cap) {
    if (cap < 1) throw QubitCountOutOfRange("qubit cap must be >= 1");
    if (n < 1 || n > cap)
        throw QubitCountOutOfRange("qubit count " + std::to_string(n) +
                                   " outside [1, " + std::to_string(cap) + "]");
}

void check_target(const QubitRegister& reg, int target) {
    if (target < 0 || target >= reg.n)
        throw InvalidTargets("target qubit " + std::to_string(target) +
                             " outside [0, " + std::to_string(reg.n - 1) + "]");
}

QubitRegister normalized(QubitRegister reg) {
    const double norm = std::sqrt(reg.norm_sq());
    if (!(norm > 0.0))
        throw RangeViolation("cannot normalize a zero state vector");
    for (auto& amp : reg.amplitudes) amp /= norm;
    return reg;
}

// Rabinowitz-Wagon spigot: exact integer arithmetic, digits emitted with the
// usual predigit hold-back for carries through runs of nines.
std::vector<std::uint8_t> compute_pi_digits(std::size_t count) {
    std::vector<std::uint8_t> digits;
    digits.reserve(count);
    // A few guard digits so held-back predigits at the tail get flushed.
    const std::size_t want = count + 4;
    const std::size_t len = want * 10 / 3 + 2;
    std::vector<std::uint64_t> a(len, 2);
    std::uint64_t predigit = 0;
    std::size_t nines = 0;
    bool first = true;
    for (std::size_t j = 0; j < want && digits.size() < count; ++j) {
        std::uint64_t q = 0;
        for (std::size_t i = len; i-- > 0;) {
            const std::uint64_t x = 10 * a[i] + q * (i + 1);
            a[i] = x % (2 * i + 1);
            q = x / (2 * i + 1);
        }
        a[0] = q % 10;
        q /= 10;
        if (q == 9) {
            ++nines;
        } else if (q == 10) {
            if (!first) digits.push_back(static_cast<std::uint8_t>(predigit + 1));
            for (; nines > 0 && digits.size() < count; --nines)
                digits.push_back(0);
            nines = 0;
            predigit = 0;
            first = false;
        } else {
            if (!first && digits.size() < count)
                digits.push_back(static_cast<std::uint8_t>(predigit));
            for (; nines > 0 && digits.size() < count; --nines)
                digits.push_back(9);
            predigit = q;
            first = false;
        }
    }
    // Flush anything still held back (predigit first, then its run of nines).
    if (!first && digits.size() < count)
        digits.push_back(static_cast<std::uint8_t>(predigit));
    for (; nines > 0 && digits.size() < count; --nines) digits.push_back(9);
    digits.resize(count);
    return digits;
}

constexpr std::size_t kSerializedHeaderBytes = 12;

void append_u64_be(std::vector<std::uint8_t>& out, std::uint64_t v) {
    for (int shift = 56; shift >= 0; shift -= 8)
        out.push_back(static_cast<std::uint8_t>((v >> shift) & 0xff));
}

std::uint64_t read_u64_be(const std::vector<std::uint8_t>& in,
                          std::size_t offset) {
    std::uint64_t v = 0;
    for (std::size_t i = 0; i < 8; ++i) v = (v << 8) | in[offset + i];
    return v;
}

// MSB-first bit packer for fixed-width codes.
class BitWriter {
  public:
    explicit BitWriter(std::vector<std::uint8_t>& out) : out_(out) {}
    void put(std::uint64_t code, int bits) {
        for (int b = bits - 1; b >= 0; --b) {
            acc_ = (acc_ << 1) | ((code >> b) & 1u);
            if (++filled_ == 8) {
                out_.push_back(static_cast<std::uint8_t>(acc_));
                acc_ = 0;
                filled_ = 0;
            }
        }
    }
    void flush() {
        if (filled_ > 0) {
            out_.push_back(static_cast<std::uint8_t>(acc_ << (8 - filled_)));
            acc_ = 0;
            filled_ = 0;
        }
    }

  private:
    std::vector<std::uint8_t>& out_;
    std::uint64_t acc_ = 0;
    int filled_ = 0;
};

class BitReader {
  public:
    BitReader(const std::vector<std::uint8_t>& in, std::size_t offset)
        : in_(in), byte_(offset) {}
    std::uint64_t get(int bits) {
        std::uint64_t code = 0;
        for (int b = 0; b < bits; ++b) {
            code = (code << 1) |
                   ((in_[byte_] >> (7 - bit_)) & 1u);
            if (++bit_ == 8) {
                bit_ = 0;
                ++byte_;
            }
        }
        return code;
    }

  private:
    const std::vector<std::uint8_t>& in_;
    std::size_t byte_;
    int bit_ = 0;
};

// Mid-rise quantizer over [-scale, scale]: 2^p cells, reconstruction at cell
// centers, so the round-trip error is at most scale / 2^p per component.
std::uint64_t quantize(double x, double scale, int p) {
    const double cells = std::ldexp(1.0, p);
    double idx = std::floor((x + scale) / (2.0 * scale) * cells);
    if (idx < 0.0) idx = 0.0;
    if (idx > cells - 1.0) idx = cells - 1.0;
    return static_cast<std::uint64_t>(idx);
}

double dequantize(std::uint64_t code, double scale, int p) {
    const double cells = std::ldexp(1.0, p);
    return -scale + (static_cast<double>(code) + 0.5) * (2.0 * scale) / cells;
}

std::string fmt_double(double v) {
    char buf[64];
    const auto res = std::to_chars(buf, buf + sizeof buf, v);
    return std::string(buf, res.ptr);
}

}  // namespace

double QubitRegister::norm_sq() const {
    double s = 0.0;
    for (const auto& amp : amplitudes) s += std::norm(amp);
    return s;
}

double QubitRegister::norm_error() const { return std::abs(norm_sq() - 1.0); }

StateSpec StateSpec::parse(const std::string& text) {
    StateSpec spec;
    if (text == "uniform") {
        spec.kind = StateKind::Uniform;
    } else if (text == "random") {
        spec.kind = StateKind::SeededRandom;
    } else if (text == "pi") {
        spec.kind = StateKind::PiDigit;
    } else if (text.rfind("basis:", 0) == 0) {
        spec.kind = StateKind::Basis;
        const std::string idx = text.substr(6);
        auto first = idx.data();
        auto last = idx.data() + idx.size();
        const auto res = std::from_chars(first, last, spec.basis_index);
        if (res.ec != std::errc{} || res.ptr != last)
            throw ParseError("bad basis index in state spec '" + text + "'");
    } else {
        throw ParseError("unknown state spec '" + text +
                         "' (expected basis:K, uniform, random, pi)");
    }
    return spec;
}

std::string StateSpec::str() const {
    switch (kind) {
        case StateKind::Basis: return "basis:" + std::to_string(basis_index);
        case StateKind::Uniform: return "uniform";
        case StateKind::SeededRandom: return "random";
        case StateKind::PiDigit: return "pi";
    }
    throw RangeViolation("unknown StateKind tag");
}

QubitRegister init_state(int n, const StateSpec& spec, int cap) {
    switch (spec.kind) {
        case StateKind::Basis: return basis_state(n, spec.basis_index, cap);
        case StateKind::Uniform: return uniform_state(n, cap);
        case StateKind::SeededRandom:
            return seeded_random_state(n, spec.seed, cap);
        case StateKind::PiDigit: return pi_digit_state(n, cap);
    }
    throw RangeViolation("unknown StateKind tag");
}

QubitRegister basis_state(int n, std::uint64_t k, int cap) {
    check_qubit_count(n, cap);
    const std::uint64_t dim = std::uint64_t{1} << n;
    if (k >= dim)
        throw BasisIndexOutOfRange("basis index " + std::to_string(k) +
                                   " outside [0, 2^" + std::to_string(n) + ")");
    QubitRegister reg;
    reg.n = n;
    reg.amplitudes.assign(dim, {0.0, 0.0});
    reg.amplitudes[k] = {1.0, 0.0};
    return reg;
}

QubitRegister uniform_state(int n, int cap) {
    check_qubit_count(n, cap);
    const std::size_t dim = std::size_t{1} << n;
    QubitRegister reg;
    reg.n = n;
    reg.amplitudes.assign(dim, {1.0 / std::sqrt(static_cast<double>(dim)), 0.0});
    return reg;
}

QubitRegister seeded_random_state(int n, std::uint64_t seed, int cap) {
    check_qubit_count(n, cap);
    const std::size_t dim = std::size_t{1} << n;
    NoiseStream stream(seed);
    QubitRegister reg;
    reg.n = n;
    reg.amplitudes.resize(dim);
    for (auto& amp : reg.amplitudes) {
        const double re = stream.normal(1.0);
        const double im = stream.normal(1.0);
        amp = {re, im};
    }
    return normalized(std::move(reg));
}

QubitRegister pi_digit_state(int n, int cap) {
    check_qubit_count(n, cap);
    const std::size_t dim = std::size_t{1} << n;
    const auto& digits = pi_digits(dim);
    QubitRegister reg;
    reg.n = n;
    reg.amplitudes.resize(dim);
    for (std::size_t i = 0; i < dim; ++i)
        reg.amplitudes[i] = {static_cast<double>(digits[i]) / 9.0, 0.0};
    return normalized(std::move(reg));
}

std::vector<std::uint8_t> pi_digits(std::size_t count) {
    static std::mutex mu;
    static std::vector<std::uint8_t> cache;
    std::lock_guard<std::mutex> lock(mu);
    if (cache.size() < count)
        cache = compute_pi_digits(std::max<std::size_t>(count, 64));
    return {cache.begin(), cache.begin() + static_cast<std::ptrdiff_t>(count)};
}

QubitRegister apply_unitary1q(const QubitRegister& reg, int target,
                              const Unitary1Q& u) {
    check_target(reg, target);
    // U†U = I to 1e-10.
    const auto& [a, b, c, d] = u;
    const double e00 = std::abs(std::norm(a) + std::norm(c) - 1.0);
    const double e11 = std::abs(std::norm(b) + std::norm(d) - 1.0);
    const double e01 = std::abs(std::conj(a) * b + std::conj(c) * d);
    if (e00 > 1e-10 || e11 > 1e-10 || e01 > 1e-10)
        throw NonUnitaryMatrix("2x2 matrix fails the unitarity check at 1e-10");

    QubitRegister out = reg;
    const std::size_t stride = std::size_t{1} << target;
    const std::size_t dim = reg.amplitudes.size();
    for (std::size_t base = 0; base < dim; base += 2 * stride) {
        for (std::size_t i = base; i < base + stride; ++i) {
            const auto lo = reg.amplitudes[i];
            const auto hi = reg.amplitudes[i + stride];
            out.amplitudes[i] = a * lo + b * hi;
            out.amplitudes[i + stride] = c * lo + d * hi;
        }
    }
    return out;
}

QubitRegister apply_x(const QubitRegister& reg, int target) {
    check_target(reg, target);
    QubitRegister out = reg;
    const std::size_t stride = std::size_t{1} << target;
    const std::size_t dim = reg.amplitudes.size();
    for (std::size_t base = 0; base < dim; base += 2 * stride)
        for (std::size_t i = base; i < base + stride; ++i)
            std::swap(out.amplitudes[i], out.amplitudes[i + stride]);
    return out;
}

QubitRegister apply_h(const QubitRegister& reg, int target) {
    const double s = 1.0 / std::numbers::sqrt2;
    return apply_unitary1q(reg, target, Unitary1Q{{{s, 0}, {s, 0}, {s, 0}, {-s, 0}}});
}

QubitRegister apply_t(const QubitRegister& reg, int target) {
    const std::complex<double> phase =
        std::polar(1.0, std::numbers::pi / 4.0);
    return apply_unitary1q(reg, target,
                           Unitary1Q{{{1, 0}, {0, 0}, {0, 0}, phase}});
}

QubitRegister apply_cnot(const QubitRegister& reg, int control, int target) {
    check_target(reg, control);
    check_target(reg, target);
    if (control == target)
        throw InvalidTargets("CNOT control and target must be distinct");
    QubitRegister out = reg;
    const std::size_t cbit = std::size_t{1} << control;
    const std::size_t tbit = std::size_t{1} << target;
    const std::size_t dim = reg.amplitudes.size();
    for (std::size_t i = 0; i < dim; ++i)
        if ((i & cbit) && !(i & tbit))
            std::swap(out.amplitudes[i], out.amplitudes[i | tbit]);
    return out;
}

QubitRegister apply_gate(const QubitRegister& reg, Gate gate,
                         const std::vector<int>& targets,
                         const std::optional<Unitary1Q>& unitary) {
    const auto expect = [&](std::size_t k) {
        if (targets.size() != k)
            throw InvalidTargets("gate expects " + std::to_string(k) +
                                 " target(s), got " +
                                 std::to_string(targets.size()));
    };
    switch (gate) {
        case Gate::X: expect(1); return apply_x(reg, targets[0]);
        case Gate::H: expect(1); return apply_h(reg, targets[0]);
        case Gate::T: expect(1); return apply_t(reg, targets[0]);
        case Gate::CNOT: expect(2); return apply_cnot(reg, targets[0], targets[1]);
        case Gate::General1Q:
            expect(1);
            if (!unitary)
                throw InvalidTargets("general 1q gate requires a matrix");
            return apply_unitary1q(reg, targets[0], *unitary);
    }
    throw RangeViolation("unknown Gate tag");
}

std::string to_string(NoiseKind k) {
    switch (k) {
        case NoiseKind::PhaseJitter: return "phase-jitter";
        case NoiseKind::SmallRotation: return "small-rotation";
        case NoiseKind::DepolarizingApprox: return "depolarizing-approx";
    }
    throw RangeViolation("unknown NoiseKind tag");
}

NoiseKind parse_noise_kind(const std::string& text) {
    if (text == "phase-jitter") return NoiseKind::PhaseJitter;
    if (text == "small-rotation") return NoiseKind::SmallRotation;
    if (text == "depolarizing-approx") return NoiseKind::DepolarizingApprox;
    throw ParseError("unknown noise kind '" + text + "'");
}

void NoiseModel::validate() const {
    if (!(rate >= 0.0 && rate <= 1.0))
        throw RangeViolation("noise rate must lie in [0, 1]");
    if (!(sigma > 0.0))
        throw RangeViolation("noise sigma must be > 0 rad");
}

double NoiseStream::uniform01() {
    return static_cast<double>(mt_() >> 11) * 0x1.0p-53;
}

double NoiseStream::normal(double sigma) {
    // Box-Muller, cosine branch only: exactly two engine draws per call.
    const double u1 = (static_cast<double>(mt_() >> 11) + 0.5) * 0x1.0p-53;
    const double u2 = static_cast<double>(mt_() >> 11) * 0x1.0p-53;
    return sigma * std::sqrt(-2.0 * std::log(u1)) *
           std::cos(2.0 * std::numbers::pi * u2);
}

QubitRegister inject_error(const QubitRegister& reg, const NoiseModel& model,
                           NoiseStream& stream) {
    model.validate();
    QubitRegister out = reg;
    int applied = 0;
    for (int q = 0; q < reg.n; ++q) {
        // Fixed draw order per qubit: gate coin, axis pick, angle. All three
        // are always consumed so the stream position never depends on the
        // outcomes, keeping parallel trial schedules reproducible.
        const double coin = stream.uniform01();
        const double axis_pick = stream.uniform01();
        const double theta = stream.normal(model.sigma);
        if (coin >= model.rate) continue;

        Unitary1Q u;
        const double ch = std::cos(theta / 2.0), sh = std::sin(theta / 2.0);
        switch (model.kind) {
            case NoiseKind::PhaseJitter:
                u = {{{1, 0}, {0, 0}, {0, 0}, std::polar(1.0, theta)}};
                break;
            case NoiseKind::SmallRotation:
                u = {{{ch, 0}, {-sh, 0}, {sh, 0}, {ch, 0}}};
                break;
            case NoiseKind::DepolarizingApprox: {
                // Axis-uniform small rotation: exp(-i theta sigma_axis / 2).
                const int axis = std::min(2, static_cast<int>(axis_pick * 3.0));
                if (axis == 0) {
                    u = {{{ch, 0}, {0, -sh}, {0, -sh}, {ch, 0}}};
                } else if (axis == 1) {
                    u = {{{ch, 0}, {-sh, 0}, {sh, 0}, {ch, 0}}};
                } else {
                    u = {{{ch, -sh}, {0, 0}, {0, 0}, {ch, sh}}};
                }
                break;
            }
        }
        out = apply_unitary1q(out, q, u);
        ++applied;
    }
    // No perturbation drawn: the register passes through bit-exactly.
    if (applied == 0) return out;
    return normalized(std::move(out));
}

QubitRegister inject_error(const QubitRegister& reg, const NoiseModel& model) {
    NoiseStream stream(model.seed);
    return inject_error(reg, model, stream);
}

std::vector<std::uint8_t> serialize(const QubitRegister& reg,
                                    int precision_bits) {
    if (precision_bits < 4 || precision_bits > 64)
        throw PrecisionOutOfRange("precision_bits must lie in [4, 64]");
    double scale = 0.0;
    for (const auto& amp : reg.amplitudes)
        scale = std::max({scale, std::abs(amp.real()), std::abs(amp.imag())});
    if (!(scale > 0.0)) scale = 1.0;

    std::vector<std::uint8_t> out;
    const std::size_t dim = reg.amplitudes.size();
    out.reserve(kSerializedHeaderBytes + (2 * dim * precision_bits + 7) / 8);
    out.push_back('Q');
    out.push_back('S');
    out.push_back(static_cast<std::uint8_t>(reg.n));
    out.push_back(static_cast<std::uint8_t>(precision_bits));
    std::uint64_t scale_bits;
    static_assert(sizeof scale_bits == sizeof scale);
    std::memcpy(&scale_bits, &scale, sizeof scale);
    append_u64_be(out, scale_bits);

    BitWriter writer(out);
    for (const auto& amp : reg.amplitudes) {
        writer.put(quantize(amp.real(), scale, precision_bits), precision_bits);
        writer.put(quantize(amp.imag(), scale, precision_bits), precision_bits);
    }
    writer.flush();
    return out;
}

QubitRegister deserialize(const std::vector<std::uint8_t>& bytes) {
    if (bytes.size() < kSerializedHeaderBytes || bytes[0] != 'Q' ||
        bytes[1] != 'S')
        throw ParseError("not a serialized register (bad header)");
    const int n = bytes[2];
    const int p = bytes[3];
    if (n < 1 || n > 24) throw ParseError("serialized qubit count out of range");
    if (p < 4 || p > 64) throw PrecisionOutOfRange("serialized precision out of range");
    const std::uint64_t scale_bits = read_u64_be(bytes, 4);
    double scale;
    std::memcpy(&scale, &scale_bits, sizeof scale);
    if (!(scale > 0.0) || !std::isfinite(scale))
        throw ParseError("serialized scale must be finite and > 0");

    const std::size_t dim = std::size_t{1} << n;
    const std::size_t need =
        kSerializedHeaderBytes + (2 * dim * static_cast<std::size_t>(p) + 7) / 8;
    if (bytes.size() < need)
        throw ParseError("serialized register truncated");

    QubitRegister reg;
    reg.n = n;
    reg.amplitudes.resize(dim);
    BitReader reader(bytes, kSerializedHeaderBytes);
    for (auto& amp : reg.amplitudes) {
        const double re = dequantize(reader.get(p), scale, p);
        const double im = dequantize(reader.get(p), scale, p);
        amp = {re, im};
    }
    return reg;
}

ComplexityEstimate complexity_upper_bound(const QubitRegister& reg,
                                          int precision_bits) {
    const auto bytes = serialize(reg, precision_bits);
    const auto packed = compress_bytes(bytes);
    ComplexityEstimate est;
    est.raw_bits = 2 * static_cast<std::int64_t>(reg.amplitudes.size()) *
                   precision_bits;
    est.compressed_bits = 8 * static_cast<std::int64_t>(packed.size());
    est.precision_bits = precision_bits;
    est.compressor_id = kCompressorId;
    return est;
}

SpecifiabilityVerdict check_specifiability(const ComplexityEstimate& est,
                                           double holo_area_m2,
                                           const ConstantsSet& constants) {
    if (!(holo_area_m2 > 0.0))
        throw NonPositiveArea("holographic area must be > 0 m^2");
    const double lp2 =
        pow(constants.planck_length(), 2).value_in(Dimension::length().pow(2));
    SpecifiabilityVerdict v;
    v.bound_printed_bits = holo_area_m2 / lp2;
    v.bound_quarter_bits = holo_area_m2 / (4.0 * lp2);
    const double compressed = static_cast<double>(est.compressed_bits);
    v.exceeds_printed = compressed > v.bound_printed_bits;
    v.exceeds_quarter = compressed > v.bound_quarter_bits;
    v.log10_margin_printed =
        std::log10(v.bound_printed_bits) - std::log10(compressed);
    v.log10_margin_quarter =
        std::log10(v.bound_quarter_bits) - std::log10(compressed);
    return v;
}

namespace {

// One algorithmically simple layer: a qubit flip plus a neighbor CNOT,
// walking around the register with the step index. Permutations only, so a
// noiseless run permutes the initial amplitude multiset and its serialized
// size stays put while noise is free to grow it.
QubitRegister apply_simple_layer(const QubitRegister& reg, int step) {
    const int a = (step - 1) % reg.n;
    QubitRegister out = apply_x(reg, a);
    if (reg.n > 1) out = apply_cnot(out, a, (a + 1) % reg.n);
    return out;
}

}  // namespace

DegradationResult run_degradation_experiment(const ExperimentConfig& config) {
    if (config.depth < 0)
        throw RangeViolation("experiment depth must be >= 0");
    if (config.trials < 1)
        throw RangeViolation("experiment needs at least one trial");
    config.model.validate();
    StateSpec init = config.initial;
    if (init.kind == StateKind::SeededRandom) init.seed = config.model.seed;
    const QubitRegister start = init_state(config.n, init, config.qubit_cap);

    const int steps = config.depth + 1;
    const std::size_t n_trials = static_cast<std::size_t>(config.trials);

    // Per-trial compressed sizes and norm errors for every step, indexed
    // [trial][step]; filled in parallel, merged by index afterwards.
    std::vector<std::vector<std::int64_t>> sizes(
        n_trials, std::vector<std::int64_t>(static_cast<std::size_t>(steps)));
    std::vector<std::vector<double>> norms(
        n_trials, std::vector<double>(static_cast<std::size_t>(steps)));

    auto run_trial = [&](std::size_t trial) {
        NoiseStream stream(config.model.seed + trial);
        QubitRegister reg = start;
        for (int step = 0; step < steps; ++step) {
            if (step > 0) {
                reg = apply_simple_layer(reg, step);
                reg = inject_error(reg, config.model, stream);
            }
            const auto est = complexity_upper_bound(reg, config.precision_bits);
            sizes[trial][static_cast<std::size_t>(step)] = est.compressed_bits;
            norms[trial][static_cast<std::size_t>(step)] = reg.norm_error();
        }
    };

    int want = config.threads > 0
                   ? config.threads
                   : static_cast<int>(std::thread::hardware_concurrency());
    if (want < 1) want = 1;
    if (want > config.trials) want = config.trials;
    if (want == 1) {
        for (std::size_t t = 0; t < n_trials; ++t) run_trial(t);
    } else {
        std::atomic<std::size_t> next{0};
        auto worker = [&] {
            for (std::size_t t; (t = next.fetch_add(1)) < n_trials;) run_trial(t);
        };
        std::vector<std::thread> pool;
        pool.reserve(static_cast<std::size_t>(want));
        for (int i = 0; i < want; ++i) pool.emplace_back(worker);
        for (auto& th : pool) th.join();
    }

    DegradationResult result;
    result.config = config;
    result.steps.resize(static_cast<std::size_t>(steps));
    QubitRegister control = start;
    for (int step = 0; step < steps; ++step) {
        if (step > 0) control = apply_simple_layer(control, step);
        const auto control_est =
            complexity_upper_bound(control, config.precision_bits);
        StepStats& s = result.steps[static_cast<std::size_t>(step)];
        s.step = step;
        s.raw_bits = control_est.raw_bits;
        s.control_compressed_bits = control_est.compressed_bits;
        s.control_norm_error = control.norm_error();
        std::int64_t lo = sizes[0][static_cast<std::size_t>(step)];
        std::int64_t hi = lo;
        double sum = 0.0, norm_sum = 0.0;
        for (std::size_t t = 0; t < n_trials; ++t) {
            const std::int64_t v = sizes[t][static_cast<std::size_t>(step)];
            lo = std::min(lo, v);
            hi = std::max(hi, v);
            sum += static_cast<double>(v);
            norm_sum += norms[t][static_cast<std::size_t>(step)];
        }
        s.min_compressed_bits = lo;
        s.max_compressed_bits = hi;
        s.mean_compressed_bits = sum / static_cast<double>(n_trials);
        s.mean_norm_error = norm_sum / static_cast<double>(n_trials);
    }
    return result;
}

std::string experiment_csv(const DegradationResult& result) {
    std::ostringstream out;
    out << "step,trial_stat,raw_bits,compressed_bits,norm_error\n";
    for (const auto& s : result.steps) {
        out << s.step << ",control," << s.raw_bits << ','
            << s.control_compressed_bits << ','
            << fmt_double(s.control_norm_error) << '\n';
        out << s.step << ",mean," << s.raw_bits << ','
            << fmt_double(s.mean_compressed_bits) << ','
            << fmt_double(s.mean_norm_error) << '\n';
        out << s.step << ",min," << s.raw_bits << ',' << s.min_compressed_bits
            << ",\n";
        out << s.step << ",max," << s.raw_bits << ',' << s.max_compressed_bits
            << ",\n";
    }
    return out.str();
}

}  // namespace cosmobound
