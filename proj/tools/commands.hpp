#pragma once

#include <filesystem>
#include <string>

#include "mlab/config.hpp"

namespace mlab::cli {

enum ExitCode : int {
    kOk = 0,
    kBreakdown = 2,
    kInvariant = 3,
    kConfig = 4,
    kUsage = 64,
};

// Each command writes manifest.txt and report.txt into out, plus its CSVs.
int simulate(const Config& c, const std::filesystem::path& out);
int convergence(const Config& c, const std::filesystem::path& out);
int identity_check(const Config& c, const std::filesystem::path& out);
int det_check(const Config& c, const std::filesystem::path& out);
int divcurl(const Config& c, const std::filesystem::path& out);
int stability(const Config& c, const std::filesystem::path& out);
int homotopy(const Config& c, const std::filesystem::path& out);
int sweep(const Config& c, const std::filesystem::path& out);
int blowup_probe(const Config& c, const std::filesystem::path& out);

// MEMBRANE_LAB_THREADS if set and positive, else the hardware concurrency.
unsigned sweep_threads();

}  // namespace mlab::cli
