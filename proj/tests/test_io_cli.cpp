#include "gkp/commands.hpp"
#include "gkp/config.hpp"
#include "gkp/field_io.hpp"
#include "oracles.hpp"

#include <doctest.h>
#include <json.hpp>

#include <cstring>
#include <filesystem>
#include <fstream>

using namespace gkp;
namespace fs = std::filesystem;

namespace {

fs::path scratch() {
    static fs::path dir = [] {
        fs::path d = fs::current_path() / "io_cli_scratch";
        fs::remove_all(d);
        fs::create_directories(d);
        return d;
    }();
    return dir;
}

std::string slurp(const fs::path& p) {
    std::ifstream in(p, std::ios::binary);
    REQUIRE(in.good());
    return std::string((std::istreambuf_iterator<char>(in)), std::istreambuf_iterator<char>());
}

fs::path write_config(const std::string& name, const std::string& body) {
    fs::path p = scratch() / name;
    std::ofstream out(p);
    out << body;
    return p;
}

// small, fast solver setup shared by the command tests
const char* kSolveConfig = R"({
  "grid": {"Lx": 20, "Ly": 20, "Nx": 48, "Ny": 48},
  "model": {"p": 2},
  "potential": {"type": "bump", "base": 1, "height": 1, "sigma": 2},
  "eps": 1.0,
  "solver": {"tol": 1e-10, "max_iter": 2000, "seeds": 1},
  "seed": 7
})";

} // namespace

TEST_CASE("GKP1 files roundtrip bit-exactly") {
    auto g = make_grid(7.5, 3.25, 12, 10);
    Field f = oracle::random_field(g, 2024);
    const fs::path p = scratch() / "roundtrip.gkp1";
    write_field(p.string(), f);
    Field back = read_field(p.string());
    CHECK(back.grid->Nx == 12);
    CHECK(back.grid->Ny == 10);
    CHECK(back.grid->Lx == 7.5);
    CHECK(back.grid->Ly == 3.25);
    REQUIRE(back.values.size() == f.values.size());
    CHECK(std::memcmp(back.values.data(), f.values.data(), f.values.size() * 8) == 0);

    // writing the same field twice produces identical bytes
    const fs::path p2 = scratch() / "roundtrip2.gkp1";
    write_field(p2.string(), f);
    CHECK(slurp(p) == slurp(p2));
}

TEST_CASE("GKP1 reader names the failure") {
    const fs::path bad = scratch() / "bad.gkp1";
    {
        std::ofstream out(bad, std::ios::binary);
        out << "NOPE then some garbage";
    }
    CHECK_THROWS_WITH_AS(read_field(bad.string()),
                         doctest::Contains("bad magic at offset 0"), IoError);

    auto g = make_grid(4.0, 4.0, 8, 8);
    Field f(g);
    const fs::path trunc = scratch() / "trunc.gkp1";
    write_field(trunc.string(), f);
    fs::resize_file(trunc, 100);
    CHECK_THROWS_WITH_AS(read_field(trunc.string()), doctest::Contains("expected"), IoError);

    // dimension overflow in the header
    const fs::path huge = scratch() / "huge.gkp1";
    {
        std::string buf = slurp(trunc).substr(0, 28);
        buf[4] = buf[5] = buf[6] = buf[7] = char(0xff);
        std::ofstream out(huge, std::ios::binary);
        out << buf;
    }
    CHECK_THROWS_WITH_AS(read_field(huge.string()), doctest::Contains("dimension overflow"),
                         IoError);
}

TEST_CASE("config parsing diagnoses the offending key") {
    CHECK_THROWS_WITH_AS(parse_config_text(R"({"grid": {"Nx": 47}})"),
                         doctest::Contains("grid.Nx"), ConfigError);
    CHECK_THROWS_WITH_AS(parse_config_text(R"({"model": {"p": 5}})"),
                         doctest::Contains("model.p"), ConfigError);
    CHECK_THROWS_WITH_AS(parse_config_text(R"({"potential": {"type": "volcano"}})"),
                         doctest::Contains("potential.type"), ConfigError);
    CHECK_THROWS_WITH_AS(parse_config_text(R"({"sweep": {"eps_list": [0.5, 1.0]}})"),
                         doctest::Contains("sweep.eps_list"), ConfigError);
    CHECK_THROWS_WITH_AS(parse_config_text(R"({"solver": {"seed_kind": "banana"}})"),
                         doctest::Contains("solver.seed_kind"), ConfigError);
    CHECK_THROWS_WITH_AS(parse_config_text("{nonsense"), doctest::Contains("invalid JSON"),
                         ConfigError);
    CHECK_THROWS_WITH_AS(parse_config_text(R"({"grid": 5})"), doctest::Contains("grid"),
                         ConfigError);
    CHECK_THROWS_WITH_AS(parse_config_text(R"({"potential": {"center": [1, 2, 3]}})"),
                         doctest::Contains("potential.center"), ConfigError);
    CHECK_THROWS_WITH_AS(parse_config_text(R"({"sweep": {"eps_list": [1.0, "x"]}})"),
                         doctest::Contains("sweep.eps_list"), ConfigError);
    CHECK_THROWS_WITH_AS(parse_config_text(R"({"solver": {"tol": "tiny"}})"),
                         doctest::Contains("solver.tol"), ConfigError);
    CHECK_THROWS_WITH_AS(parse_config_text(R"({"seed": -3})"), doctest::Contains("seed"),
                         ConfigError);
    CHECK_THROWS_WITH_AS(parse_config_text("[1,2,3]"), doctest::Contains("top level"),
                         ConfigError);

    RunConfig ok = parse_config_text(kSolveConfig);
    CHECK(ok.Nx == 48);
    CHECK(ok.p == 2.0);
    CHECK(ok.solver.seeds == 1);
    CHECK(ok.seed == 7);
    CHECK(ok.solver.rng_seed == 7);
}

TEST_CASE("solve command writes its artifacts and reports exit codes") {
    const fs::path cfg = write_config("solve.json", kSolveConfig);
    CommandOptions opts;
    opts.out_override = (scratch() / "out_solve").string();
    CHECK(cmd_solve(cfg.string(), opts) == 0);
    CHECK(fs::exists(scratch() / "out_solve" / "solution.gkp1"));
    CHECK(fs::exists(scratch() / "out_solve" / "summary.json"));
    CHECK(fs::exists(scratch() / "out_solve" / "regularity.json"));

    auto summary = nlohmann::json::parse(slurp(scratch() / "out_solve" / "summary.json"));
    CHECK(summary["converged"] == true);
    CHECK(summary["c_eps"].get<double>() > 0.0);
    CHECK(summary["residual"].get<double>() < 1e-10);

    // determinism: a second identical run reproduces the bytes
    CommandOptions opts2;
    opts2.out_override = (scratch() / "out_solve2").string();
    CHECK(cmd_solve(cfg.string(), opts2) == 0);
    CHECK(slurp(scratch() / "out_solve" / "solution.gkp1") ==
          slurp(scratch() / "out_solve2" / "solution.gkp1"));
    CHECK(slurp(scratch() / "out_solve" / "summary.json") ==
          slurp(scratch() / "out_solve2" / "summary.json"));

    // config error: odd Nx (exit 1)
    const fs::path bad = write_config("solve_bad.json", R"({"grid": {"Nx": 47}})");
    CHECK(cmd_solve(bad.string(), opts) == 1);
    CHECK(cmd_solve((scratch() / "missing.json").string(), opts) == 1);

    // forced non-convergence (exit 2)
    const fs::path hard = write_config("solve_hard.json", R"({
      "grid": {"Lx": 20, "Ly": 20, "Nx": 48, "Ny": 48},
      "model": {"p": 2},
      "potential": {"type": "constant", "base": 1},
      "solver": {"tol": 1e-30, "max_iter": 5, "seeds": 1}
    })");
    CommandOptions opts3;
    opts3.out_override = (scratch() / "out_hard").string();
    CHECK(cmd_solve(hard.string(), opts3) == 2);
}

TEST_CASE("sweep command: verdict flow and determinism") {
    const fs::path cfg = write_config("sweep.json", R"({
      "grid": {"Lx": 30, "Ly": 30, "Nx": 64, "Ny": 64},
      "model": {"p": 1},
      "potential": {"type": "bump", "base": 1, "height": 1, "sigma": 2},
      "solver": {"seeds": 1},
      "sweep": {"eps_list": [1.0, 0.5, 0.25], "tol_level": 0.2, "tol_V": 0.1},
      "seed": 11
    })");
    CommandOptions opts;
    opts.out_override = (scratch() / "out_sweep").string();
    CHECK(cmd_sweep(cfg.string(), opts) == 0);
    CHECK(fs::exists(scratch() / "out_sweep" / "sweep.csv"));
    CHECK(fs::exists(scratch() / "out_sweep" / "verdict.json"));
    CHECK(fs::exists(scratch() / "out_sweep" / "regularity_sweep.json"));
    auto verdict = nlohmann::json::parse(slurp(scratch() / "out_sweep" / "verdict.json"));
    CHECK(verdict["pass"] == true);

    CommandOptions opts2;
    opts2.out_override = (scratch() / "out_sweep2").string();
    CHECK(cmd_sweep(cfg.string(), opts2) == 0);
    CHECK(slurp(scratch() / "out_sweep" / "sweep.csv") ==
          slurp(scratch() / "out_sweep2" / "sweep.csv"));

    // constant potential: verdict fails with the regime message (exit 3)
    const fs::path flat = write_config("sweep_flat.json", R"({
      "grid": {"Lx": 20, "Ly": 20, "Nx": 48, "Ny": 48},
      "model": {"p": 2},
      "potential": {"type": "constant", "base": 1},
      "solver": {"seeds": 1},
      "sweep": {"eps_list": [1.0, 0.5, 0.25]}
    })");
    CommandOptions opts3;
    opts3.out_override = (scratch() / "out_flat").string();
    CHECK(cmd_sweep(flat.string(), opts3) == 3);
    auto flat_verdict = nlohmann::json::parse(slurp(scratch() / "out_flat" / "verdict.json"));
    CHECK(flat_verdict["pass"] == false);
    CHECK(flat_verdict["detail"].get<std::string>().find("no concentration regime") !=
          std::string::npos);

    // nonmonotone eps list is a config error (exit 1)
    const fs::path bad = write_config("sweep_bad.json", R"({
      "sweep": {"eps_list": [0.25, 0.5]}
    })");
    CHECK(cmd_sweep(bad.string(), opts) == 1);
    // missing eps list too
    const fs::path none = write_config("sweep_none.json", R"({"model": {"p": 2}})");
    CHECK(cmd_sweep(none.string(), opts) == 1);

    // a hopeless tolerance aborts the sweep with the partial CSV (exit 2)
    const fs::path hopeless = write_config("sweep_hopeless.json", R"({
      "grid": {"Lx": 20, "Ly": 20, "Nx": 48, "Ny": 48},
      "model": {"p": 2},
      "potential": {"type": "bump", "base": 1, "height": 1, "sigma": 2},
      "solver": {"tol": 1e-30, "max_iter": 5, "seeds": 1},
      "sweep": {"eps_list": [1.0, 0.5]}
    })");
    CommandOptions opts4;
    opts4.out_override = (scratch() / "out_hopeless").string();
    CHECK(cmd_sweep(hopeless.string(), opts4) == 2);
    CHECK(fs::exists(scratch() / "out_hopeless" / "sweep.csv"));
}

TEST_CASE("check command validates hypotheses") {
    const fs::path cfg = write_config("check.json", kSolveConfig);
    CHECK(cmd_check(cfg.string(), {}) == 0);

    // p in the existence-only band still passes (warning only)
    const fs::path lowp = write_config("check_lowp.json", R"({
      "model": {"p": 0.5},
      "potential": {"type": "bump", "base": 1, "height": 1, "sigma": 2}
    })");
    CHECK(cmd_check(lowp.string(), {}) == 0);

    // negative bump pulls Vinf >= V0: (V2) fails (exit 4)
    const fs::path sag = write_config("check_sag.json", R"({
      "potential": {"type": "bump", "base": 1, "height": -0.5, "sigma": 2}
    })");
    CHECK(cmd_check(sag.string(), {}) == 4);
}

TEST_CASE("export command emits plottable CSV") {
    auto g = make_grid(4.0, 4.0, 8, 8);
    Field f = oracle::random_field(g, 5);
    const fs::path field_path = scratch() / "export_me.gkp1";
    write_field(field_path.string(), f);
    const fs::path out = scratch() / "out_export";
    CHECK(cmd_export(field_path.string(), out.string()) == 0);
    const std::string csv = slurp(out / "field.csv");
    CHECK(csv.rfind("x,y,u\n", 0) == 0);
    CHECK(std::count(csv.begin(), csv.end(), '\n') == 1 + 64);

    CHECK(cmd_export((scratch() / "no_such.gkp1").string(), out.string()) == 1);
}
