#include <doctest.h>

#include <sys/wait.h>

#include <cstdlib>
#include <filesystem>
#include <fstream>
#include <sstream>

#include "mlab/config.hpp"
#include "mlab/csv.hpp"
#include "mlab/errors.hpp"

namespace fs = std::filesystem;
using namespace mlab;

namespace {
const std::string kFast = " --override evolve.T=2 --override evolve.R=10 --override evolve.N=200";

fs::path scratch(const std::string& name) {
    const fs::path p = fs::temp_directory_path() / ("mlab_cli_test_" + std::to_string(::getpid())) / name;
    fs::remove_all(p);
    return p;
}

int cli(const std::string& args, const std::string& env = "") {
    const std::string cmd = env + " \"" + std::string(MLAB_CLI_PATH) + "\" " + args + " > /dev/null 2>&1";
    const int st = std::system(cmd.c_str());
    return WIFEXITED(st) ? WEXITSTATUS(st) : -1;
}

std::string slurp(const fs::path& p) {
    std::ifstream in(p);
    std::stringstream ss;
    ss << in.rdbuf();
    return ss.str();
}
}  // namespace

TEST_CASE("config defaults, overrides and errors") {
    Config c;
    CHECK(c.num("evolve.N") == 400);
    c.apply_override("evolve.N = 800");
    CHECK(c.integer("evolve.N") == 800);
    CHECK_THROWS_AS(c.apply_override("evolve.bogus=1"), ConfigError);
    CHECK_THROWS_AS(c.apply_override("no-equals"), ConfigError);
    c.set("evolve.N", "eight");
    CHECK_THROWS_AS(c.num("evolve.N"), ConfigError);
    c.set("evolve.N", "400");
    c.set("evolve.R", "10");
    CHECK_THROWS_AS(c.evolve(), ConfigError);  // containment
    CHECK(c.nums("sweep.amplitudes").size() == 3);
}

TEST_CASE("config file and manifest round trip") {
    const fs::path dir = scratch("cfg");
    fs::create_directories(dir);
    {
        std::ofstream f(dir / "run.cfg");
        f << "# comment\ndata.amplitude = 0.02\n\nevolve.T = 3   # trailing\n";
    }
    Config c;
    c.load_file(dir / "run.cfg");
    CHECK(c.num("data.amplitude") == 0.02);
    CHECK(c.num("evolve.T") == 3.0);
    c.write_manifest(dir / "manifest.txt");
    Config back;
    back.load_file(dir / "manifest.txt");
    CHECK(back.manifest() == c.manifest());
    for (const auto& [k, v] : Config::defaults()) CHECK(c.manifest().find(k + " = ") != std::string::npos);
}

TEST_CASE("csv numbers round-trip") {
    for (double x : {0.1, 1.0 / 3.0, -2.5e-300, 1e22, 0.0}) CHECK(std::stod(csv::num(x)) == x);
}

TEST_CASE("simulate with zero amplitude exits 0 with all-zero diagnostics") {
    const fs::path out = scratch("zero");
    REQUIRE(cli("simulate --out " + out.string() + " --override data.amplitude=0" + kFast) == 0);
    const csv::Table t = csv::read(out / "functionals.csv");
    REQUIRE(!t.rows.empty());
    const std::size_t area = t.column("area"), tc = t.column("t");
    for (const auto& row : t.rows)
        for (std::size_t j = 0; j < row.size(); ++j)
            if (j != area && j != tc) CHECK(row[j] == "0");
    const csv::Table res = csv::read(out / "residuals.csv");
    CHECK(res.header == std::vector<std::string>{"t", "law", "sup", "L1"});
    for (const auto& row : res.rows) CHECK(row[2] == "0");
    const csv::Table p = csv::read(out / "pairing.csv");
    CHECK(p.header.size() >= 7);
    CHECK(p.rows.size() == 4);
    CHECK(fs::exists(out / "manifest.txt"));
}

TEST_CASE("simulate with amplitude 2 exits 2 and records the breakdown") {
    const fs::path out = scratch("big");
    CHECK(cli("simulate --out " + out.string() + " --override data.amplitude=2.0") == 2);
    const std::string rep = slurp(out / "report.txt");
    CHECK(rep.find("status breakdown") != std::string::npos);
    CHECK(rep.find("breakdown t ") != std::string::npos);
}

TEST_CASE("reruns from the manifest are byte-identical") {
    const fs::path a = scratch("rerun_a"), b = scratch("rerun_b");
    REQUIRE(cli("simulate --out " + a.string() + " --override data.amplitude=0.05" + kFast) == 0);
    REQUIRE(cli("simulate --out " + b.string() + " --config " + (a / "manifest.txt").string()) == 0);
    for (const char* f : {"functionals.csv", "residuals.csv", "pairing.csv", "monitors.csv"})
        CHECK(slurp(a / f) == slurp(b / f));
}

TEST_CASE("usage and config errors") {
    CHECK(cli("") == 64);
    CHECK(cli("transmogrify") == 64);
    CHECK(cli("simulate --frobnicate") == 64);
    CHECK(cli("simulate --out " + scratch("e1").string() + " --override data.nope=1") == 4);
    CHECK(cli("simulate --out " + scratch("e2").string() + " --override evolve.R=5") == 4);
    CHECK(cli("simulate --config /nonexistent/run.cfg") == 4);
}

TEST_CASE("identity-check exits 0") {
    CHECK(cli("identity-check --out " + scratch("ident").string()) == 0);
}

TEST_CASE("sweep isolates member outputs") {
    const fs::path out = scratch("sweep");
    CHECK(cli("sweep --out " + out.string() + " --override sweep.amplitudes=0,0.01,0.02" + kFast,
              "MEMBRANE_LAB_THREADS=2") == 0);
    for (int k = 0; k < 3; ++k) CHECK(fs::exists(out / ("member_" + std::to_string(k)) / "functionals.csv"));
    const csv::Table t = csv::read(out / "sweep.csv");
    CHECK(t.rows.size() == 3);
}
