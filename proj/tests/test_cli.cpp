// SPDX-License-Identifier: Apache-2.0
//
// End-to-end smoke tests driving the installed binary exactly the way a
// user would. The binary path and a scratch directory are baked in by the
// build system.
#include <cstdlib>
#include <filesystem>
#include <fstream>
#include <string>

#include <sys/wait.h>

#include "doctest.h"

#ifndef ZETAPRIME_CLI_PATH
#error "build must define ZETAPRIME_CLI_PATH"
#endif
#ifndef ZETAPRIME_SMOKE_DIR
#error "build must define ZETAPRIME_SMOKE_DIR"
#endif

namespace {

namespace fs = std::filesystem;

std::string cli_path() { return ZETAPRIME_CLI_PATH; }

fs::path smoke_dir() {
    fs::create_directories(ZETAPRIME_SMOKE_DIR);
    return ZETAPRIME_SMOKE_DIR;
}

struct RunResult {
    int exit_code = -1;
    std::string out;
    std::string err;
};

std::string slurp(const fs::path& p) {
    std::ifstream in(p, std::ios::binary);
    std::string s;
    std::getline(in, s, '\0');
    return s;
}

RunResult run(const std::string& args) {
    const fs::path dir = smoke_dir();
    const std::string cmd = "cd \"" + dir.string() + "\" && \"" + cli_path() +
                            "\" " + args + " > cmd_stdout.txt 2> cmd_stderr.txt";
    const int status = std::system(cmd.c_str());
    RunResult r;
    r.exit_code = WIFEXITED(status) ? WEXITSTATUS(status) : -1;
    r.out = slurp(dir / "cmd_stdout.txt");
    r.err = slurp(dir / "cmd_stderr.txt");
    return r;
}

} // namespace

TEST_CASE("eval: anchor values through the real interface") {
    const RunResult z0 = run("eval --fn zeta --s 0+0i");
    CHECK(z0.exit_code == 0);
    CHECK(z0.out.find("-5.00000000000000000e-01") != std::string::npos);

    const RunResult zp0 = run("eval --fn zetap --s 0+0i");
    CHECK(zp0.exit_code == 0);
    CHECK(zp0.out.find("-9.189385332046727") != std::string::npos);

    const RunResult z2 = run("eval --fn zeta --s 2");
    CHECK(z2.exit_code == 0);
    CHECK(z2.out.find("1.64493406684822") != std::string::npos);

    // the same invocation twice produces byte-identical output
    const RunResult again = run("eval --fn zeta --s 0+0i");
    CHECK(again.out == z0.out);
}

TEST_CASE("eval: input and numerical failures map to distinct exit codes") {
    CHECK(run("eval --fn zeta --s what").exit_code == 2);
    CHECK(run("eval --fn nosuch --s 2+0i").exit_code == 2);
    CHECK(run("nosuchcommand").exit_code == 2);
    CHECK(run("").exit_code == 2); // a subcommand is required

    const RunResult pole = run("eval --fn zeta --s 1+0i");
    CHECK(pole.exit_code == 4);
    CHECK(pole.out.find("PoleProximity") != std::string::npos);

    const RunResult version = run("--version");
    CHECK(version.exit_code == 0);
}

TEST_CASE("zeros: computes, persists, and reruns from cache byte-identically") {
    const fs::path dir = smoke_dir();
    fs::remove_all(dir / "out");
    fs::remove_all(dir / "cache");

    const RunResult first = run("zeros --fn zeta --T 30");
    CHECK(first.exit_code == 0);
    const fs::path csv = dir / "out" / "zeros" / "default" / "zeta.csv";
    REQUIRE(fs::exists(csv));
    const std::string body = slurp(csv);
    CHECK(body.find("1.4134725141735") != std::string::npos);
    CHECK(body.rfind("#", 0) == 0); // provenance header leads the file

    const RunResult second = run("zeros --fn zeta --T 30");
    CHECK(second.exit_code == 0);
    CHECK(second.out == first.out);
    CHECK(slurp(csv) == body);
}

TEST_CASE("dist: a small run produces the ecdf table and the summary") {
    const fs::path dir = smoke_dir();
    const RunResult r = run("dist --T 50 --n 120 --label smoke");
    CHECK(r.exit_code == 0);
    const fs::path ecdf = dir / "out" / "dist" / "smoke" / "ecdf.csv";
    const fs::path summary = dir / "out" / "dist" / "smoke" / "summary.json";
    REQUIRE(fs::exists(ecdf));
    REQUIRE(fs::exists(summary));
    const std::string js = slurp(summary);
    CHECK(js.find("\"sup_gap\"") != std::string::npos);
    CHECK(js.find("\"V\"") != std::string::npos);
    CHECK(js.find("\"in_stated_range\"") != std::string::npos);
}

TEST_CASE("rmt: ensemble sweep writes the three tables") {
    const fs::path dir = smoke_dir();
    const RunResult r = run("rmt --Ns 8 --xs 2 --nus 0.1 --n 40 --label smoke");
    CHECK(r.exit_code == 0);
    for (const char* name : {"radial.csv", "small_x.csv", "discards.csv"}) {
        const fs::path p = dir / "out" / "rmt" / "smoke" / name;
        REQUIRE(fs::exists(p));
        CHECK(slurp(p).rfind("#", 0) == 0);
    }
    const std::string radial = slurp(dir / "out" / "rmt" / "smoke" /
                                     "radial.csv");
    CHECK(radial.find("mean_fraction") != std::string::npos);
}

TEST_CASE("report: refuses to aggregate from missing inputs") {
    const fs::path dir = smoke_dir();
    fs::remove_all(dir / "out" / "counts");
    const RunResult r = run("report --label nothing_here");
    CHECK(r.exit_code == 3);
    CHECK((r.out + r.err).find("berndt.csv") != std::string::npos);
}

TEST_CASE("config file layer: bad files fail loudly") {
    const fs::path dir = smoke_dir();
    {
        std::ofstream bad(dir / "bad.json");
        bad << "{\"T_mx\": 10}";
    }
    CHECK(run("--config bad.json eval --fn zeta --s 2").exit_code != 0);
    CHECK(run("--config missing.json eval --fn zeta --s 2").exit_code != 0);
}
