#include <functional>
#include <iostream>
#include <map>

#include <CLI11.hpp>

#include "commands.hpp"
#include "mlab/errors.hpp"

namespace fs = std::filesystem;
using namespace mlab;

int main(int argc, char** argv) {
    CLI::App app{"membrane-lab: radial membrane evolution and diagnostics"};
    app.require_subcommand(1);

    std::string config_path;
    std::string out_dir = "out";
    std::vector<std::string> overrides;

    using Command = std::function<int(const Config&, const fs::path&)>;
    const std::map<std::string, std::pair<Command, std::string>> commands = {
        {"simulate", {cli::simulate, "evolve one configuration and write all diagnostics"}},
        {"convergence", {cli::convergence, "space-time refinement on the Bessel oracle"}},
        {"identity-check", {cli::identity_check, "multiplier identities on manufactured fields"}},
        {"det-check", {cli::det_check, "determinant signs, printed expansions and cross-check"}},
        {"divcurl", {cli::divcurl, "pairing identity gaps at N and 2N"}},
        {"stability", {cli::stability, "difference of two nearby runs"}},
        {"homotopy", {cli::homotopy, "straight-line homotopy between two data"}},
        {"sweep", {cli::sweep, "concurrent simulate runs over sweep.amplitudes"}},
        {"blowup-probe", {cli::blowup_probe, "amplitude ladder until breakdown"}},
    };
    for (const auto& [name, cmd] : commands) {
        CLI::App* sub = app.add_subcommand(name, cmd.second);
        sub->add_option("--config", config_path, "flat key = value config file");
        sub->add_option("--out", out_dir, "output directory");
        sub->add_option("--override", overrides, "key=value, repeatable")->allow_extra_args(false);
    }

    try {
        app.parse(argc, argv);
    } catch (const CLI::CallForHelp& e) {
        return app.exit(e);
    } catch (const CLI::ParseError& e) {
        app.exit(e);
        return cli::kUsage;
    }

    const std::string name = app.get_subcommands().front()->get_name();
    try {
        Config c;
        if (!config_path.empty()) c.load_file(config_path);
        for (const auto& kv : overrides) c.apply_override(kv);
        return commands.at(name).first(c, fs::path(out_dir));
    } catch (const ConfigError& e) {
        std::cerr << "config error: " << e.what() << '\n';
        return cli::kConfig;
    } catch (const InvariantViolation& e) {
        std::cerr << "invariant violated: " << e.what() << '\n';
        return cli::kInvariant;
    } catch (const std::exception& e) {
        std::cerr << "error: " << e.what() << '\n';
        return cli::kInvariant;
    }
}
