#include "gkp/commands.hpp"

#include <CLI11.hpp>

int main(int argc, char** argv) {
    CLI::App app{"Ground states of the generalized KP equation with variable potential"};
    app.require_subcommand(1);

    gkp::CommandOptions opts;
    std::string config_path;
    std::string field_path;
    std::string export_out = "out";
    std::uint64_t seed_flag = 0;

    auto add_common = [&](CLI::App* sub) {
        sub->add_option("--config", config_path, "JSON config path")->required();
        sub->add_option("--out", opts.out_override, "output directory (overrides output.dir)");
        sub->add_option("--threads", opts.threads, "worker threads for independent solves");
        sub->add_option("--seed", seed_flag, "RNG seed (overrides config seed)")
            ->each([&](const std::string&) { opts.seed_override = seed_flag; });
    };

    CLI::App* solve = app.add_subcommand("solve", "compute one ground state at fixed eps");
    add_common(solve);
    CLI::App* sweep = app.add_subcommand("sweep", "eps-continuation sweep with concentration verdict");
    add_common(sweep);
    CLI::App* check = app.add_subcommand("check", "validate model hypotheses and the gradient");
    add_common(check);

    CLI::App* exp = app.add_subcommand("export", "convert a GKP1 field file to CSV");
    exp->add_option("--field", field_path, "GKP1 field file")->required();
    exp->add_option("--out", export_out, "output directory");

    CLI11_PARSE(app, argc, argv);

    if (solve->parsed()) return gkp::cmd_solve(config_path, opts);
    if (sweep->parsed()) return gkp::cmd_sweep(config_path, opts);
    if (check->parsed()) return gkp::cmd_check(config_path, opts);
    if (exp->parsed()) return gkp::cmd_export(field_path, export_out);
    return 1;
}
