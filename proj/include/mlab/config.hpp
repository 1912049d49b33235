#pragma once

#include <filesystem>
#include <map>
#include <string>
#include <vector>

#include "mlab/evolution.hpp"
#include "mlab/functionals.hpp"
#include "mlab/initial_data.hpp"

namespace mlab {

// Flat "section.key = value" configuration. Every key has a registered
// default; unknown keys are rejected so manifests stay complete.
class Config {
public:
    Config();

    void load_file(const std::filesystem::path& path);
    // "key=value"
    void apply_override(const std::string& kv);
    void set(const std::string& key, const std::string& value);

    const std::string& str(const std::string& key) const;
    double num(const std::string& key) const;
    int integer(const std::string& key) const;
    bool flag(const std::string& key) const;
    std::vector<double> nums(const std::string& key) const;  // comma separated
    std::vector<int> integers(const std::string& key) const;

    DataSpec data() const;
    EvolveConfig evolve() const;  // containment is checked against data()
    AxisOptions axis() const;

    // Sorted "key = value" lines of the fully resolved configuration.
    std::string manifest() const;
    void write_manifest(const std::filesystem::path& path) const;

    static const std::map<std::string, std::string>& defaults();

private:
    std::map<std::string, std::string> values_;
};

}  // namespace mlab
