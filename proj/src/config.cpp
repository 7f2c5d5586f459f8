#include "lightframe/config.hpp"

#include <array>
#include <charconv>
#include <cmath>
#include <cstddef>
#include <map>

namespace lightframe {

namespace {

constexpr std::array<std::string_view, 8> kKnownKeys = {
    "mode",    "eps_lab", "mass_amu",   "photon_energy_ev",
    "beta_u",  "tau_hat", "lifetime_s", "plate_separation_m"};

bool is_space(char c) { return c == ' ' || c == '\t' || c == '\r'; }

bool is_key_char(char c) {
    return (c >= 'a' && c <= 'z') || (c >= 'A' && c <= 'Z') ||
           (c >= '0' && c <= '9') || c == '_';
}

std::string_view trim(std::string_view s) {
    while (!s.empty() && is_space(s.front())) s.remove_prefix(1);
    while (!s.empty() && is_space(s.back())) s.remove_suffix(1);
    return s;
}

double parse_number(std::string_view token, int line, std::string_view key) {
    std::string_view body = token;
    if (!body.empty() && body.front() == '+') body.remove_prefix(1);
    double value = 0.0;
    const auto [ptr, ec] =
        std::from_chars(body.data(), body.data() + body.size(), value);
    // Only decimal literals are part of the grammar; from_chars would also
    // take inf/nan.
    if (ec != std::errc{} || ptr != body.data() + body.size() ||
        !std::isfinite(value)) {
        throw ParseError(line, "malformed number '" + std::string(token) +
                                   "' for key '" + std::string(key) + "'");
    }
    return value;
}

struct RawConfig {
    bool has_mode = false;
    ConfigMode mode = ConfigMode::Dimensionless;
    std::map<std::string, double> numbers;
    std::map<std::string, int> seen_lines;

    bool contains(std::string_view key) const {
        return seen_lines.contains(std::string(key));
    }
};

RawConfig scan(std::string_view text, std::ostream* diagnostics) {
    RawConfig raw;
    int line_no = 0;
    std::size_t pos = 0;
    while (pos <= text.size()) {
        const std::size_t eol = text.find('\n', pos);
        std::string_view line = text.substr(
            pos, eol == std::string_view::npos ? text.size() - pos : eol - pos);
        ++line_no;
        pos = eol == std::string_view::npos ? text.size() + 1 : eol + 1;

        std::string_view rest = line;
        while (!rest.empty() && is_space(rest.front())) rest.remove_prefix(1);
        if (rest.empty() || rest.front() == '#') continue;

        std::size_t key_len = 0;
        while (key_len < rest.size() && is_key_char(rest[key_len])) ++key_len;
        if (key_len == 0) {
            throw ParseError(line_no, "expected a key, found '" +
                                          std::string(rest.substr(0, 1)) + "'");
        }
        const std::string key(rest.substr(0, key_len));
        rest.remove_prefix(key_len);

        rest = trim(rest);
        if (rest.empty() || rest.front() != '=') {
            throw ParseError(line_no, "expected '=' after key '" + key + "'");
        }
        rest.remove_prefix(1);

        // Value runs until a comment or end of line.
        const std::size_t hash = rest.find('#');
        if (hash != std::string_view::npos) rest = rest.substr(0, hash);
        const std::string_view value = trim(rest);
        if (value.empty()) {
            throw ParseError(line_no, "missing value for key '" + key + "'");
        }
        if (value.find(' ') != std::string_view::npos ||
            value.find('\t') != std::string_view::npos) {
            throw ParseError(line_no, "unexpected text after value for key '" +
                                          key + "'");
        }

        bool known = false;
        for (const auto k : kKnownKeys) known = known || (k == key);
        if (!known) {
            throw ParseError(line_no, "unknown key '" + key + "'");
        }

        // Values are validated here so that a bad literal is reported with
        // its line even when the document is otherwise incomplete.
        if (key == "mode") {
            if (value == "dimensionless") {
                raw.mode = ConfigMode::Dimensionless;
            } else if (value == "si") {
                raw.mode = ConfigMode::Si;
            } else {
                throw ParseError(line_no,
                                 "invalid mode '" + std::string(value) +
                                     "' (expected 'dimensionless' or 'si')");
            }
            raw.has_mode = true;
        } else {
            raw.numbers[key] = parse_number(value, line_no, key);
        }

        const auto [it, inserted] = raw.seen_lines.insert_or_assign(key, line_no);
        if (!inserted && diagnostics != nullptr) {
            *diagnostics << "warning: line " << line_no << ": duplicate key '"
                         << key << "' overrides an earlier value\n";
        }
    }
    return raw;
}

void check_invariants(const RawConfig& raw) {
    std::vector<std::string> missing;
    std::vector<std::string> conflicting;

    std::vector<std::string_view> required = {"beta_u"};
    std::vector<std::string_view> forbidden;
    if (!raw.has_mode) {
        missing.emplace_back("mode");
    } else if (raw.mode == ConfigMode::Dimensionless) {
        required.insert(required.end(), {"eps_lab", "tau_hat"});
        forbidden = {"mass_amu", "photon_energy_ev", "lifetime_s",
                     "plate_separation_m"};
    } else {
        required.insert(required.end(), {"mass_amu", "photon_energy_ev",
                                         "lifetime_s", "plate_separation_m"});
        forbidden = {"eps_lab", "tau_hat"};
    }

    for (const auto key : required) {
        if (!raw.contains(key)) missing.emplace_back(key);
    }
    for (const auto key : forbidden) {
        if (raw.contains(key)) conflicting.emplace_back(key);
    }

    if (missing.empty() && conflicting.empty()) return;

    std::string msg;
    if (!missing.empty()) {
        msg += "missing keys:";
        for (const auto& k : missing) msg += " " + k;
    }
    if (!conflicting.empty()) {
        if (!msg.empty()) msg += "; ";
        msg += "keys not allowed in this mode:";
        for (const auto& k : conflicting) msg += " " + k;
    }
    throw ConfigError(msg);
}

}  // namespace

ScenarioConfig parse_config(std::string_view text, std::ostream* diagnostics) {
    const RawConfig raw = scan(text, diagnostics);
    check_invariants(raw);

    ScenarioConfig config;
    config.mode = raw.mode;
    const auto number = [&raw](std::string_view key) -> std::optional<double> {
        const auto it = raw.numbers.find(std::string(key));
        if (it == raw.numbers.end()) return std::nullopt;
        return it->second;
    };
    config.eps_lab = number("eps_lab");
    config.mass_amu = number("mass_amu");
    config.photon_energy_ev = number("photon_energy_ev");
    config.beta_u = *number("beta_u");
    config.tau_hat = number("tau_hat");
    config.lifetime_s = number("lifetime_s");
    config.plate_separation_m = number("plate_separation_m");
    return config;
}

std::string serialize_config(const ScenarioConfig& config) {
    std::string out = "mode = ";
    out += config.mode == ConfigMode::Dimensionless ? "dimensionless" : "si";
    out += '\n';

    const auto emit = [&out](std::string_view key,
                             const std::optional<double>& value) {
        if (value) {
            out += key;
            out += " = ";
            out += format_number(*value);
            out += '\n';
        }
    };
    emit("eps_lab", config.eps_lab);
    emit("mass_amu", config.mass_amu);
    emit("photon_energy_ev", config.photon_energy_ev);
    out += "beta_u = " + format_number(config.beta_u) + '\n';
    emit("tau_hat", config.tau_hat);
    emit("lifetime_s", config.lifetime_s);
    emit("plate_separation_m", config.plate_separation_m);
    return out;
}

DimensionlessParams params_from_config(const ScenarioConfig& config) {
    if (config.mode == ConfigMode::Dimensionless) {
        if (!config.eps_lab || !config.tau_hat) {
            throw ConfigError("dimensionless mode needs eps_lab and tau_hat");
        }
        return DimensionlessParams(Epsilon::lab_defined(*config.eps_lab),
                                   Beta(config.beta_u), *config.tau_hat);
    }
    if (!config.mass_amu || !config.photon_energy_ev || !config.lifetime_s ||
        !config.plate_separation_m) {
        throw ConfigError(
            "si mode needs mass_amu, photon_energy_ev, lifetime_s and "
            "plate_separation_m");
    }
    return to_dimensionless(PhysicalInputs{*config.mass_amu,
                                           *config.photon_energy_ev,
                                           *config.plate_separation_m,
                                           Beta(config.beta_u),
                                           *config.lifetime_s});
}

std::string format_number(double value) {
    std::array<char, 32> buf{};
    const auto result = std::to_chars(buf.data(), buf.data() + buf.size(),
                                      value, std::chars_format::scientific, 16);
    return std::string(buf.data(), result.ptr);
}

}  // namespace lightframe
