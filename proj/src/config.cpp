#include "cosmobound/config.hpp"

#include <charconv>
#include <fstream>
#include <sstream>

namespace cosmobound {

namespace {

std::string trim(const std::string& s) {
    const auto begin = s.find_first_not_of(" \t\r");
    if (begin == std::string::npos) return "";
    const auto end = s.find_last_not_of(" \t\r");
    return s.substr(begin, end - begin + 1);
}

[[noreturn]] void fail(int line, std::size_t column, const std::string& what) {
    throw ParseError("line " + std::to_string(line) + ", column " +
                     std::to_string(column + 1) + ": " + what);
}

double parse_double(const std::string& value, const std::string& key, int line,
                    std::size_t column) {
    double out = 0.0;
    const char* first = value.data();
    const char* last = value.data() + value.size();
    const auto res = std::from_chars(first, last, out);
    if (res.ec != std::errc{} || res.ptr != last)
        fail(line, column, "value for '" + key + "' is not a number");
    return out;
}

std::uint64_t parse_u64(const std::string& value, const std::string& key,
                        int line, std::size_t column) {
    std::uint64_t out = 0;
    const char* first = value.data();
    const char* last = value.data() + value.size();
    const auto res = std::from_chars(first, last, out);
    if (res.ec != std::errc{} || res.ptr != last)
        fail(line, column, "value for '" + key + "' is not an unsigned integer");
    return out;
}

int parse_int(const std::string& value, const std::string& key, int line,
              std::size_t column) {
    int out = 0;
    const char* first = value.data();
    const char* last = value.data() + value.size();
    const auto res = std::from_chars(first, last, out);
    if (res.ec != std::errc{} || res.ptr != last)
        fail(line, column, "value for '" + key + "' is not an integer");
    return out;
}

std::string fmt_double(double v) {
    char buf[64];
    const auto res = std::to_chars(buf, buf + sizeof buf, v);
    return std::string(buf, res.ptr);
}

}  // namespace

void RunConfig::validate() const {
    cosmology.validate();
    constants.validate();
    if (!(dark_energy_density_J_m3 > 0.0))
        throw RangeViolation("dark_energy_density must be > 0 J/m^3");
    if (qubit_cap < 1 || qubit_cap > 24)
        throw RangeViolation("qubit_cap must lie in [1, 24]");
    if (format != "text" && format != "json")
        throw RangeViolation("format must be 'text' or 'json'");
}

RunConfig parse_config(const std::string& text) {
    RunConfig config;
    std::istringstream in(text);
    std::string raw;
    int line_no = 0;
    while (std::getline(in, raw)) {
        ++line_no;
        std::string line = raw;
        if (const auto hash = line.find('#'); hash != std::string::npos)
            line = line.substr(0, hash);
        if (trim(line).empty()) continue;

        const auto eq = line.find('=');
        if (eq == std::string::npos)
            fail(line_no, line.size(), "expected 'key = value'");
        const std::string key = trim(line.substr(0, eq));
        const std::string value = trim(line.substr(eq + 1));
        if (key.empty()) fail(line_no, 0, "missing key before '='");
        if (value.empty()) fail(line_no, eq + 1, "missing value after '='");
        const std::size_t vcol = line.find(value, eq);

        if (key == "hubble0_km_s_mpc") {
            config.cosmology.hubble0_km_s_mpc =
                parse_double(value, key, line_no, vcol);
        } else if (key == "omega_m") {
            config.cosmology.omega_m = parse_double(value, key, line_no, vcol);
        } else if (key == "omega_r") {
            config.cosmology.omega_r = parse_double(value, key, line_no, vcol);
        } else if (key == "omega_lambda") {
            config.cosmology.omega_lambda =
                parse_double(value, key, line_no, vcol);
        } else if (key == "c") {
            config.constants.c = parse_double(value, key, line_no, vcol);
        } else if (key == "G") {
            config.constants.G = parse_double(value, key, line_no, vcol);
        } else if (key == "hbar") {
            config.constants.hbar = parse_double(value, key, line_no, vcol);
        } else if (key == "k_B") {
            config.constants.k_B = parse_double(value, key, line_no, vcol);
        } else if (key == "dark_energy_density") {
            config.dark_energy_density_J_m3 =
                parse_double(value, key, line_no, vcol);
        } else if (key == "qubit_cap") {
            config.qubit_cap = parse_int(value, key, line_no, vcol);
        } else if (key == "format") {
            config.format = value;
        } else if (key == "seed") {
            config.seed = parse_u64(value, key, line_no, vcol);
        } else {
            throw UnknownKey("unknown config key '" + key + "' at line " +
                             std::to_string(line_no));
        }
    }
    config.validate();
    return config;
}

RunConfig load_config(const std::string& path) {
    std::ifstream in(path, std::ios::binary);
    if (!in) throw ParseError("cannot open config file '" + path + "'");
    std::ostringstream buf;
    buf << in.rdbuf();
    return parse_config(buf.str());
}

std::string serialize_config(const RunConfig& config) {
    std::ostringstream out;
    out << "hubble0_km_s_mpc = " << fmt_double(config.cosmology.hubble0_km_s_mpc)
        << '\n'
        << "omega_m = " << fmt_double(config.cosmology.omega_m) << '\n'
        << "omega_r = " << fmt_double(config.cosmology.omega_r) << '\n'
        << "omega_lambda = " << fmt_double(config.cosmology.omega_lambda)
        << '\n'
        << "c = " << fmt_double(config.constants.c) << '\n'
        << "G = " << fmt_double(config.constants.G) << '\n'
        << "hbar = " << fmt_double(config.constants.hbar) << '\n'
        << "k_B = " << fmt_double(config.constants.k_B) << '\n'
        << "dark_energy_density = " << fmt_double(config.dark_energy_density_J_m3)
        << '\n'
        << "qubit_cap = " << config.qubit_cap << '\n'
        << "format = " << config.format << '\n'
        << "seed = " << config.seed << '\n';
    return out.str();
}

}  // namespace cosmobound
