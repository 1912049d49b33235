#include "mlab/config.hpp"

#include <charconv>
#include <fstream>
#include <sstream>

#include "mlab/errors.hpp"

namespace mlab {

namespace {

std::string trim(const std::string& s) {
    const auto b = s.find_first_not_of(" \t\r");
    if (b == std::string::npos) return "";
    const auto e = s.find_last_not_of(" \t\r");
    return s.substr(b, e - b + 1);
}

double parse_double(const std::string& key, const std::string& v) {
    double x = 0.0;
    const auto res = std::from_chars(v.data(), v.data() + v.size(), x);
    if (res.ec != std::errc() || res.ptr != v.data() + v.size())
        throw ConfigError("'" + key + "' expects a number, got '" + v + "'");
    return x;
}

std::vector<std::string> split(const std::string& v) {
    std::vector<std::string> out;
    std::stringstream ss(v);
    std::string item;
    while (std::getline(ss, item, ',')) {
        item = trim(item);
        if (!item.empty()) out.push_back(item);
    }
    return out;
}

}  // namespace

const std::map<std::string, std::string>& Config::defaults() {
    static const std::map<std::string, std::string> d = {
        {"data.family", "gaussian"},
        {"data.amplitude", "0.01"},
        {"data.width", "1"},
        {"data.wavenumber", "1"},
        {"data.drift", "0"},
        {"data.velocity_amplitude", "0"},
        {"evolve.T", "10"},
        {"evolve.cfl", "0.4"},
        {"evolve.R", "20"},
        {"evolve.N", "400"},
        {"evolve.save_stride", "10"},
        {"evolve.delta_min", "1e-06"},
        {"diagnostics.laws", "PH1,PH2,PH3,PH5,PH6,PH7"},
        {"diagnostics.functionals", "true"},
        {"diagnostics.pairings", "true"},
        {"diagnostics.axis_ref_radius", "0.1"},
        {"diagnostics.axis_window", "0.5"},
        {"divcurl.inner_radius", "0.5"},
        {"seed", "12345"},
        {"convergence.amplitude", "0.0001"},
        {"convergence.wavenumber", "2"},
        {"convergence.R", "20"},
        {"convergence.T", "5"},
        {"convergence.N", "400,800,1600"},
        {"convergence.cfls", "0.4,0.2,0.1"},
        {"identity.N", "320,640,1280"},
        {"identity.R", "8"},
        {"identity.t0", "0.7"},
        {"detcheck.random_bundles", "1000"},
        {"stability.amplitude_b", "0.0055"},
        {"homotopy.n_lambda", "5"},
        {"homotopy.tol_fd", "0.2"},
        {"sweep.amplitudes", "0.005,0.01,0.02"},
        {"blowup.amplitudes", "0.1,0.2,0.4,0.8"},
    };
    return d;
}

Config::Config() : values_(defaults()) {}

void Config::set(const std::string& key, const std::string& value) {
    if (!defaults().count(key)) throw ConfigError("unknown configuration key '" + key + "'");
    values_[key] = value;
}

void Config::apply_override(const std::string& kv) {
    const auto eq = kv.find('=');
    if (eq == std::string::npos) throw ConfigError("override must be key=value, got '" + kv + "'");
    set(trim(kv.substr(0, eq)), trim(kv.substr(eq + 1)));
}

void Config::load_file(const std::filesystem::path& path) {
    std::ifstream in(path);
    if (!in) throw ConfigError("cannot read config file " + path.string());
    std::string line;
    int no = 0;
    while (std::getline(in, line)) {
        ++no;
        const auto hash = line.find('#');
        if (hash != std::string::npos) line.erase(hash);
        line = trim(line);
        if (line.empty()) continue;
        if (line.find('=') == std::string::npos)
            throw ConfigError(path.string() + ":" + std::to_string(no) + ": expected key = value");
        apply_override(line);
    }
}

const std::string& Config::str(const std::string& key) const {
    const auto it = values_.find(key);
    if (it == values_.end()) throw ConfigError("unknown configuration key '" + key + "'");
    return it->second;
}

double Config::num(const std::string& key) const { return parse_double(key, str(key)); }

int Config::integer(const std::string& key) const {
    const double x = num(key);
    if (x != static_cast<double>(static_cast<int>(x))) throw ConfigError("'" + key + "' expects an integer");
    return static_cast<int>(x);
}

bool Config::flag(const std::string& key) const {
    const std::string& v = str(key);
    if (v == "true" || v == "1" || v == "yes") return true;
    if (v == "false" || v == "0" || v == "no") return false;
    throw ConfigError("'" + key + "' expects true or false");
}

std::vector<double> Config::nums(const std::string& key) const {
    std::vector<double> out;
    for (const auto& s : split(str(key))) out.push_back(parse_double(key, s));
    return out;
}

std::vector<int> Config::integers(const std::string& key) const {
    std::vector<int> out;
    for (double x : nums(key)) {
        if (x != static_cast<double>(static_cast<int>(x))) throw ConfigError("'" + key + "' expects integers");
        out.push_back(static_cast<int>(x));
    }
    return out;
}

DataSpec Config::data() const {
    DataSpec s;
    s.family = parse_family(str("data.family"));
    s.amplitude = num("data.amplitude");
    s.width = num("data.width");
    s.wavenumber = num("data.wavenumber");
    s.drift = num("data.drift");
    s.velocity_amplitude = num("data.velocity_amplitude");
    if (!(s.width > 0.0)) throw ConfigError("data.width must be positive");
    return s;
}

EvolveConfig Config::evolve() const {
    EvolveConfig c;
    c.T_final = num("evolve.T");
    c.cfl = num("evolve.cfl");
    c.R = num("evolve.R");
    c.N = integer("evolve.N");
    c.save_stride = integer("evolve.save_stride");
    c.delta_min = num("evolve.delta_min");
    check_containment(c, support_radius(data()));
    return c;
}

AxisOptions Config::axis() const {
    AxisOptions a;
    a.ref_radius = num("diagnostics.axis_ref_radius");
    return a;
}

std::string Config::manifest() const {
    std::ostringstream o;
    for (const auto& [k, v] : values_) o << k << " = " << v << '\n';
    return o.str();
}

void Config::write_manifest(const std::filesystem::path& path) const {
    std::ofstream out(path);
    if (!out) throw ConfigError("cannot write " + path.string());
    out << manifest();
}

}  // namespace mlab
