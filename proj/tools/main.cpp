#include <CLI11.hpp>

#include <charconv>
#include <cmath>
#include <cstdint>
#include <fstream>
#include <iostream>
#include <numbers>
#include <optional>
#include <sstream>
#include <string>

#include <json.hpp>

#include "cosmobound/bounds.hpp"
#include "cosmobound/compression.hpp"
#include "cosmobound/config.hpp"
#include "cosmobound/cosmology.hpp"
#include "cosmobound/errors.hpp"
#include "cosmobound/predictability.hpp"
#include "cosmobound/quantum.hpp"
#include "cosmobound/report.hpp"
#include "cosmobound/vacuum.hpp"

namespace cb = cosmobound;
using nlohmann::ordered_json;

namespace {

std::string fmt(double v) {
    char buf[64];
    const auto res = std::to_chars(buf, buf + sizeof buf, v);
    return std::string(buf, res.ptr);
}

void write_output(const std::string& text, const std::string& out_path) {
    if (out_path.empty()) {
        std::cout << text;
        return;
    }
    std::ofstream out(out_path, std::ios::binary);
    if (!out) throw cb::Error("cannot open output file '" + out_path + "'");
    out << text;
}

struct GlobalOptions {
    std::string config_path;
    std::string format;  // overrides config when set
    std::optional<std::uint64_t> seed;
    bool print_config = false;
};

cb::RunConfig effective_config(const GlobalOptions& opts) {
    cb::RunConfig config;
    if (!opts.config_path.empty()) config = cb::load_config(opts.config_path);
    if (!opts.format.empty()) {
        config.format = opts.format;
        config.validate();
    }
    if (opts.seed) config.seed = *opts.seed;
    return config;
}

int run_cosmo(const cb::RunConfig& config, double a) {
    const cb::FrwModel model(config.cosmology, config.constants);
    const cb::HorizonSet horizons = model.horizons(a);
    if (config.format == "json") {
        ordered_json j;
        j["a"] = horizons.epoch_a;
        j["particle_horizon_m"] = horizons.particle_horizon.meters;
        if (horizons.event_horizon.is_infinite)
            j["event_horizon_m"] = "infinite";
        else
            j["event_horizon_m"] = horizons.event_horizon.meters;
        j["hubble_radius_m"] = horizons.hubble_radius_m;
        std::cout << j.dump(2) << '\n';
    } else {
        std::cout << "a = " << fmt(horizons.epoch_a) << '\n'
                  << "particle_horizon_m = "
                  << fmt(horizons.particle_horizon.meters) << '\n'
                  << "event_horizon_m = "
                  << (horizons.event_horizon.is_infinite
                          ? std::string("infinite")
                          : fmt(horizons.event_horizon.meters))
                  << '\n'
                  << "hubble_radius_m = " << fmt(horizons.hubble_radius_m)
                  << '\n';
    }
    return 0;
}

int run_bound(const cb::RunConfig& config, const std::string& method,
              std::optional<double> epoch_s, std::optional<double> area_m2,
              std::optional<double> mass_kg) {
    const cb::ConstantsSet& k = config.constants;
    cb::InfoBound bound;
    if (mass_kg) {
        const cb::BlackHoleRecord bh = cb::bh_entropy(*mass_kg, k);
        bound = cb::InfoBound::from_bits(bh.bits, cb::BoundMethod::BlackHole);
    } else if (method == "lloyd") {
        if (!epoch_s)
            throw cb::RangeViolation("method 'lloyd' requires --epoch-seconds");
        const cb::FrwModel model(config.cosmology, k);
        const double t0 = model.cosmic_time(1.0);
        const double r_ds = cb::desitter_radius_from_density(
            config.dark_energy_density_J_m3, k);
        const cb::InfoBound ref = cb::holographic_bound(
            cb::horizon_area(r_ds), cb::BoundMethod::HolographicEvent, k);
        bound = cb::lloyd_bound(*epoch_s, ref.bits, t0);
    } else {
        double area = 0.0;
        cb::BoundMethod tag = cb::BoundMethod::HolographicEvent;
        if (area_m2) {
            area = *area_m2;
            tag = method == "particle" ? cb::BoundMethod::HolographicParticle
                                       : cb::BoundMethod::HolographicEvent;
        } else if (method == "particle") {
            const cb::FrwModel model(config.cosmology, k);
            area = cb::horizon_area(model.particle_horizon(1.0));
            tag = cb::BoundMethod::HolographicParticle;
        } else {
            const double r_ds = cb::desitter_radius_from_density(
                config.dark_energy_density_J_m3, k);
            area = cb::horizon_area(r_ds);
        }
        bound = cb::holographic_bound(area, tag, k);
    }

    if (config.format == "json") {
        ordered_json j;
        j["bits"] = bound.bits;
        j["log10_bits"] = bound.log10_bits;
        j["method"] = cb::to_string(bound.method);
        if (bound.epoch_t_s)
            j["epoch_t"] = *bound.epoch_t_s;
        else
            j["epoch_t"] = nullptr;
        std::cout << j.dump(2) << '\n';
    } else {
        std::cout << "bits = " << fmt(bound.bits) << '\n'
                  << "log10_bits = " << fmt(bound.log10_bits) << '\n'
                  << "method = " << cb::to_string(bound.method) << '\n'
                  << "epoch_t = "
                  << (bound.epoch_t_s ? fmt(*bound.epoch_t_s)
                                      : std::string("-"))
                  << '\n';
    }
    return 0;
}

int run_vacuum(const cb::RunConfig& config, std::optional<double> box_L,
               int n_max, double budget_bits, bool series,
               const std::string& out_path) {
    const cb::ConstantsSet& k = config.constants;
    const double c = k.c;
    const double L = box_L ? *box_L : c / config.cosmology.H0_si();

    if (series) {
        // Time-dependent holographic density, L = c t, budget scaled
        // quadratically from its value at the present epoch.
        const cb::FrwModel model(config.cosmology, k);
        const double t0 = model.cosmic_time(1.0);
        const int samples = 25;
        std::vector<double> times, rho, scale;
        times.reserve(samples);
        for (int i = 0; i < samples; ++i) {
            const double frac = static_cast<double>(i) / (samples - 1);
            const double t = t0 * std::pow(10.0, -1.0 + 2.0 * frac);
            const double budget = budget_bits * (t / t0) * (t / t0);
            times.push_back(t);
            rho.push_back(
                cb::holographic_cutoff_density(c * t, budget, k).rho_J_m3);
            scale.push_back(std::pow(t / t0, 2.0 / 3.0));
        }
        const cb::ConservationSeries out =
            cb::conservation_residual(times, rho, scale);
        std::ostringstream csv;
        csv << "t_s,a,rho_J_m3,residual\n";
        for (std::size_t i = 0; i < out.times_s.size(); ++i)
            csv << fmt(out.times_s[i]) << ',' << fmt(out.scale_factor[i]) << ','
                << fmt(out.rho_J_m3[i]) << ',' << fmt(out.residual[i]) << '\n';
        write_output(csv.str(), out_path);
        return 0;
    }

    const double t_p = k.planck_time().value_in(cb::Dimension::time());
    const double rho_p =
        k.planck_energy_density().value_in(cb::joules_per_m3(1).dims());
    const std::vector<cb::VacuumEstimate> estimates = {
        cb::discrete_mode_sum(L, n_max, k),
        cb::continuum_cutoff_density(1.0 / t_p, k),
        cb::continuum_cutoff_density(2.0 * std::numbers::pi / t_p, k),
        cb::holographic_cutoff_density(L, budget_bits, k),
        cb::collapse_bound_density(L, k),
        cb::geometric_mean_bound(rho_p, cb::hubble_scale_quantum_density(L, k)),
    };

    if (config.format == "json") {
        ordered_json rows = ordered_json::array();
        for (const auto& e : estimates) {
            ordered_json j;
            j["scheme"] = cb::to_string(e.scheme);
            j["rho_J_m3"] = e.rho_J_m3;
            j["log10_rho"] = std::log10(e.rho_J_m3);
            j["pressure_J_m3"] = e.pressure_J_m3;
            j["cutoff"] = e.cutoff_descriptor;
            if (e.box_scale_L_m)
                j["box_scale_L_m"] = *e.box_scale_L_m;
            else
                j["box_scale_L_m"] = nullptr;
            rows.push_back(std::move(j));
        }
        write_output(rows.dump(2) + "\n", out_path);
    } else {
        std::ostringstream out;
        out << "scheme | rho_J_m3 | log10_rho | pressure_J_m3 | cutoff\n";
        for (const auto& e : estimates)
            out << cb::to_string(e.scheme) << " | " << fmt(e.rho_J_m3) << " | "
                << fmt(std::log10(e.rho_J_m3)) << " | " << fmt(e.pressure_J_m3)
                << " | " << e.cutoff_descriptor << '\n';
        write_output(out.str(), out_path);
    }
    return 0;
}

int run_qubit(const cb::RunConfig& config, int n, const std::string& spec_text,
              int depth, const std::string& noise_kind, double rate,
              double sigma, int trials, int precision_bits,
              const std::string& out_path) {
    cb::ExperimentConfig exp;
    exp.n = n;
    exp.depth = depth;
    exp.model.kind = cb::parse_noise_kind(noise_kind);
    exp.model.rate = rate;
    exp.model.sigma = sigma;
    exp.model.seed = config.seed;
    exp.trials = trials;
    exp.precision_bits = precision_bits;
    exp.initial = cb::StateSpec::parse(spec_text);
    exp.initial.seed = config.seed;
    exp.qubit_cap = config.qubit_cap;
    if (n > cb::kDefaultQubitCap)
        std::cerr << "warning: " << n << " qubits needs "
                  << (std::size_t{1} << n) * sizeof(std::complex<double>)
                  << " bytes per register\n";

    const cb::DegradationResult result = cb::run_degradation_experiment(exp);
    const std::string csv = cb::experiment_csv(result);
    if (!out_path.empty()) write_output(csv, out_path);

    const cb::StepStats& last = result.steps.back();
    const double area_ds = cb::horizon_area(cb::desitter_radius_from_density(
        config.dark_energy_density_J_m3, config.constants));
    cb::ComplexityEstimate final_est;
    final_est.raw_bits = last.raw_bits;
    final_est.compressed_bits = last.max_compressed_bits;
    final_est.precision_bits = precision_bits;
    final_est.compressor_id = cb::kCompressorId;
    const cb::SpecifiabilityVerdict verdict =
        cb::check_specifiability(final_est, area_ds, config.constants);

    const std::string note =
        "compressed_bits is an upper bound on algorithmic information; "
        "algorithmically simple amplitude sets (e.g. pi digits) are not "
        "detected as simple by a generic compressor";
    if (config.format == "json") {
        ordered_json j;
        j["n"] = exp.n;
        j["depth"] = exp.depth;
        j["trials"] = exp.trials;
        j["noise"] = cb::to_string(exp.model.kind);
        j["rate"] = exp.model.rate;
        j["sigma"] = exp.model.sigma;
        j["seed"] = exp.model.seed;
        j["initial"] = exp.initial.str();
        j["precision_bits"] = exp.precision_bits;
        j["compressor"] = cb::kCompressorId;
        j["raw_bits"] = last.raw_bits;
        j["final_control_compressed_bits"] = last.control_compressed_bits;
        j["final_mean_compressed_bits"] = last.mean_compressed_bits;
        j["final_min_compressed_bits"] = last.min_compressed_bits;
        j["final_max_compressed_bits"] = last.max_compressed_bits;
        j["within_bound_printed"] = !verdict.exceeds_printed;
        j["within_bound_quarter"] = !verdict.exceeds_quarter;
        j["log10_margin_printed"] = verdict.log10_margin_printed;
        j["log10_margin_quarter"] = verdict.log10_margin_quarter;
        j["note"] = note;
        if (!out_path.empty()) j["csv"] = out_path;
        std::cout << j.dump(2) << '\n';
    } else {
        std::cout << "experiment: n=" << exp.n << " depth=" << exp.depth
                  << " trials=" << exp.trials << " noise="
                  << cb::to_string(exp.model.kind) << " rate="
                  << fmt(exp.model.rate) << " sigma=" << fmt(exp.model.sigma)
                  << " seed=" << exp.model.seed << " initial="
                  << exp.initial.str() << '\n'
                  << "raw_bits = " << last.raw_bits << " (" << cb::kCompressorId
                  << ", " << exp.precision_bits << "-bit components)\n"
                  << "final compressed_bits: control = "
                  << last.control_compressed_bits << ", mean = "
                  << fmt(last.mean_compressed_bits) << ", min = "
                  << last.min_compressed_bits << ", max = "
                  << last.max_compressed_bits << '\n'
                  << "specifiability vs cosmological surface: "
                  << (verdict.exceeds_printed ? "exceeds-bound" : "within-bound")
                  << " (A/L_P^2 margin " << fmt(verdict.log10_margin_printed)
                  << " orders), "
                  << (verdict.exceeds_quarter ? "exceeds-bound" : "within-bound")
                  << " (A/4L_P^2 margin " << fmt(verdict.log10_margin_quarter)
                  << " orders)\n"
                  << "note: " << note << '\n';
        if (!out_path.empty())
            std::cout << "wrote " << out_path << '\n';
    }
    return 0;
}

int run_predict_collisions(const cb::RunConfig& config, const cb::GasParams& g) {
    const cb::CollisionPredictability out =
        cb::collision_predictability(g, config.constants);
    if (config.format == "json") {
        ordered_json j;
        j["initial_angle_uncertainty_rad"] = out.initial_angle_uncertainty_rad;
        j["amplification_per_collision"] = out.amplification_per_collision;
        j["collisions_to_order_unity"] = out.collisions_to_order_unity;
        j["mean_free_path_m"] = g.mean_free_path_m;
        j["molecule_radius_m"] = g.molecule_radius_m;
        j["mean_speed_m_s"] = g.mean_speed_m_s;
        j["perturber_mass_kg"] = g.perturber_mass_kg;
        j["perturber_distance_m"] = g.perturber_distance_m;
        std::cout << j.dump(2) << '\n';
    } else {
        std::cout << "initial_angle_uncertainty_rad = "
                  << fmt(out.initial_angle_uncertainty_rad) << '\n'
                  << "amplification_per_collision = "
                  << fmt(out.amplification_per_collision) << '\n'
                  << "collisions_to_order_unity = "
                  << out.collisions_to_order_unity << '\n'
                  << "params: mean_free_path=" << fmt(g.mean_free_path_m)
                  << " m, molecule_radius=" << fmt(g.molecule_radius_m)
                  << " m, mean_speed=" << fmt(g.mean_speed_m_s)
                  << " m/s, perturber_mass=" << fmt(g.perturber_mass_kg)
                  << " kg, perturber_distance=" << fmt(g.perturber_distance_m)
                  << " m\n";
    }
    return 0;
}

int run_predict_recurrence(const cb::RunConfig& config, double bits) {
    const cb::InfoBound bound =
        cb::InfoBound::from_bits(bits, cb::BoundMethod::HolographicEvent);
    const cb::RecurrenceCap t = cb::recurrence_cap(
        bound, cb::RecurrenceReading::MaxRepresentableTime, config.constants);
    const cb::RecurrenceCap e = cb::recurrence_cap(
        bound, cb::RecurrenceReading::MaxExponentArgument, config.constants);
    if (config.format == "json") {
        ordered_json j;
        j["bits"] = bits;
        j[cb::to_string(t.interpretation)] = {{"cap_seconds", t.cap_seconds},
                                              {"cap_years", t.cap_years}};
        j[cb::to_string(e.interpretation)] = {{"cap_seconds", e.cap_seconds},
                                              {"cap_years", e.cap_years}};
        std::cout << j.dump(2) << '\n';
    } else {
        std::cout << cb::to_string(t.interpretation) << ": cap_seconds = "
                  << fmt(t.cap_seconds) << ", cap_years = " << fmt(t.cap_years)
                  << '\n'
                  << cb::to_string(e.interpretation) << ": cap_seconds = "
                  << fmt(e.cap_seconds) << ", cap_years = " << fmt(e.cap_years)
                  << '\n';
    }
    return 0;
}

int run_predict_lyapunov(const cb::RunConfig& config, double lambda,
                         double initial_bits, double budget_bits) {
    const double t = cb::lyapunov_horizon_s(lambda, initial_bits, budget_bits);
    if (config.format == "json") {
        ordered_json j;
        j["lambda_per_s"] = lambda;
        j["initial_bits"] = initial_bits;
        j["budget_bits"] = budget_bits;
        j["horizon_s"] = t;
        std::cout << j.dump(2) << '\n';
    } else {
        std::cout << "horizon_s = " << fmt(t) << '\n';
    }
    return 0;
}

int run_predict_redshift(const cb::RunConfig& config, double efold_s,
                         double bits) {
    const cb::InfoBound bound =
        cb::InfoBound::from_bits(bits, cb::BoundMethod::HolographicEvent);
    const double t = cb::redshift_cutoff_s(efold_s, bound);
    if (config.format == "json") {
        ordered_json j;
        j["efold_time_s"] = efold_s;
        j["bits"] = bits;
        j["cutoff_s"] = t;
        std::cout << j.dump(2) << '\n';
    } else {
        std::cout << "cutoff_s = " << fmt(t) << '\n';
    }
    return 0;
}

int run_report(const cb::RunConfig& config) {
    const cb::Report report = cb::build_report(config);
    if (config.format == "json")
        std::cout << cb::render_report_json(report);
    else
        std::cout << cb::render_report_text(report);
    return report.all_passed ? 0 : 3;
}

}  // namespace

int main(int argc, char** argv) {
    CLI::App app{
        "Unit-safe toolkit for the cosmological information bound and its "
        "consequences: horizon geometry, holographic entropy budgets, vacuum "
        "energy cutoff schemes, qubit specifiability, and predictability "
        "horizons."};
    app.require_subcommand(0, 1);

    GlobalOptions opts;
    app.add_option("--config", opts.config_path, "Config file (key = value)");
    app.add_option("--format", opts.format, "Output format: text or json")
        ->check(CLI::IsMember({"text", "json"}));
    std::uint64_t seed_value = 0;
    auto* seed_opt =
        app.add_option("--seed", seed_value, "Seed for randomized operations");
    app.add_flag("--print-config", opts.print_config,
                 "Echo the effective configuration");

    auto* cosmo = app.add_subcommand("cosmo", "FRW horizons at an epoch");
    double a = 1.0;
    cosmo->add_option("--a", a, "Scale factor (default 1)");

    auto* bound = app.add_subcommand("bound", "Information bounds");
    std::string bound_method = "event";
    std::optional<double> epoch_s, area_m2, mass_kg;
    bound->add_option("--method", bound_method, "event, particle, or lloyd")
        ->check(CLI::IsMember({"event", "particle", "lloyd"}));
    bound->add_option("--epoch-seconds", epoch_s, "Epoch for lloyd scaling");
    bound->add_option("--area-m2", area_m2, "Explicit horizon area");
    bound->add_option("--mass-kg", mass_kg, "Black-hole mass");

    auto* vacuum = app.add_subcommand("vacuum", "Vacuum energy estimates");
    std::optional<double> box_L;
    int n_max = 50;
    double budget_bits = 1e122;
    bool series = false;
    std::string vacuum_out;
    vacuum->add_option("--box-scale-L", box_L,
                       "Box/region scale in m (default c/H0)");
    vacuum->add_option("--n-max", n_max, "Discrete mode cutoff (<= 200)");
    vacuum->add_option("--budget-bits", budget_bits, "Mode budget");
    vacuum->add_flag("--series", series,
                     "Emit the conservation-residual time series as CSV");
    vacuum->add_option("--out", vacuum_out, "Write output to a file");

    auto* qubit = app.add_subcommand("qubit", "Complexity-degradation experiment");
    int n = 10, depth = 50, trials = 30, precision_bits = 16;
    std::string spec_text = "pi";
    std::string noise_kind = "small-rotation";
    double rate = 0.1, sigma = 0.05;
    std::string qubit_out;
    qubit->add_option("--n", n, "Qubit count");
    qubit->add_option("--spec", spec_text,
                      "Initial state: basis:K, uniform, random, pi");
    qubit->add_option("--depth", depth, "Circuit depth");
    qubit->add_option("--noise", noise_kind,
                      "phase-jitter, small-rotation, depolarizing-approx");
    qubit->add_option("--rate", rate, "Error probability per qubit per step");
    qubit->add_option("--sigma", sigma, "Error rotation scale, radians");
    qubit->add_option("--trials", trials, "Trial count");
    qubit->add_option("--precision-bits", precision_bits,
                      "Bits per serialized real component");
    qubit->add_option("--out", qubit_out, "Write the experiment CSV here");

    auto* predict = app.add_subcommand("predict", "Predictability horizons");
    predict->require_subcommand(1);
    auto* collisions = predict->add_subcommand(
        "collisions", "Collision count to order-unity deflection");
    cb::GasParams gas;
    collisions->add_option("--mean-free-path", gas.mean_free_path_m, "m");
    collisions->add_option("--molecule-radius", gas.molecule_radius_m, "m");
    collisions->add_option("--mean-speed", gas.mean_speed_m_s, "m/s");
    collisions->add_option("--perturber-mass", gas.perturber_mass_kg, "kg");
    collisions->add_option("--perturber-distance", gas.perturber_distance_m,
                           "m");
    auto* recurrence =
        predict->add_subcommand("recurrence", "Recurrence reliability caps");
    double rec_bits = 1e122;
    recurrence->add_option("--bits", rec_bits, "Information budget");
    auto* lyapunov =
        predict->add_subcommand("lyapunov", "Chaotic prediction horizon");
    double lambda = 1.0, initial_bits = 0.0, lyap_budget = 1e122;
    lyapunov->add_option("--lambda", lambda, "Lyapunov rate, s^-1");
    lyapunov->add_option("--initial-bits", initial_bits,
                         "Initial uncertainty margin");
    lyapunov->add_option("--budget-bits", lyap_budget, "Information budget");
    auto* redshift =
        predict->add_subcommand("redshift", "Exponential-redshift cutoff");
    double efold_s = 1e-6, red_bits = 1e122;
    redshift->add_option("--efold-seconds", efold_s, "E-fold time");
    redshift->add_option("--bits", red_bits, "Cutoff factor as a bound");

    auto* report =
        app.add_subcommand("report", "Recompute every headline figure");

    // Let the global flags (--config, --format, --seed) appear after the
    // subcommand name as well as before it.
    for (CLI::App* sub : {cosmo, bound, vacuum, qubit, predict, report,
                          collisions, recurrence, lyapunov, redshift}) {
        sub->fallthrough();
    }

    try {
        app.parse(argc, argv);
    } catch (const CLI::CallForHelp& e) {
        return app.exit(e);
    } catch (const CLI::ParseError& e) {
        app.exit(e);
        return 1;
    }

    try {
        GlobalOptions effective = opts;
        if (seed_opt->count() > 0) effective.seed = seed_value;
        const cb::RunConfig config = effective_config(effective);
        if (opts.print_config) std::cout << cb::serialize_config(config);

        if (cosmo->parsed()) return run_cosmo(config, a);
        if (bound->parsed())
            return run_bound(config, bound_method, epoch_s, area_m2, mass_kg);
        if (vacuum->parsed())
            return run_vacuum(config, box_L, n_max, budget_bits, series,
                              vacuum_out);
        if (qubit->parsed())
            return run_qubit(config, n, spec_text, depth, noise_kind, rate,
                             sigma, trials, precision_bits, qubit_out);
        if (predict->parsed()) {
            if (collisions->parsed()) return run_predict_collisions(config, gas);
            if (recurrence->parsed())
                return run_predict_recurrence(config, rec_bits);
            if (lyapunov->parsed())
                return run_predict_lyapunov(config, lambda, initial_bits,
                                            lyap_budget);
            if (redshift->parsed())
                return run_predict_redshift(config, efold_s, red_bits);
        }
        if (report->parsed()) return run_report(config);
        if (!opts.print_config) {
            std::cerr << "error: a subcommand is required (see --help)\n";
            return 1;
        }
        return 0;
    } catch (const cb::DivergentIntegral& e) {
        std::cerr << "numeric error: " << e.what() << '\n';
        return 2;
    } catch (const cb::QuadratureError& e) {
        std::cerr << "numeric error: " << e.what() << '\n';
        return 2;
    } catch (const cb::NegativeRadicand& e) {
        std::cerr << "numeric error: " << e.what() << '\n';
        return 2;
    } catch (const cb::NonFiniteValue& e) {
        std::cerr << "numeric error: " << e.what() << '\n';
        return 2;
    } catch (const std::exception& e) {
        std::cerr << "error: " << e.what() << '\n';
        return 1;
    }
}
