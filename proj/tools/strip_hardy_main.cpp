#include <cstdio>
#include <string>
#include <vector>

#include "CLI11.hpp"
#include "striphardy/striphardy.h"

int main(int argc, char** argv) {
    CLI::App app{"strip-hardy: boundary-symbol analysis on the strip Hardy space"};
    app.require_subcommand(1);

    std::string spec_path;
    double grid_L = 16.0;
    unsigned grid_N = 2048;
    double tol = 1e-5;
    std::uint64_t seed = 42;
    std::string out_dir = ".";
    std::string input_path;
    std::string function_spec = "identity";
    std::string approach = "ray:theta=-5";
    std::string n_list = "0,1,2";
    std::string k_list = "0";

    auto add_common = [&](CLI::App* cmd) {
        cmd->add_option("spec", spec_path, "symbol spec (JSON)")->required();
        cmd->add_option("--grid-L", grid_L, "grid half-width (default 16)");
        cmd->add_option("--grid-N", grid_N, "grid size, power of two (default 2048)");
        cmd->add_option("--tol", tol, "audit tolerance (default 1e-5)");
        cmd->add_option("--seed", seed, "audit RNG seed (default 42)");
        cmd->add_option("--out", out_dir, "output directory (default .)");
    };

    CLI::App* analyze = app.add_subcommand("analyze", "classification, indices and audits");
    add_common(analyze);
    CLI::App* deficiency = app.add_subcommand("deficiency", "deficiency basis and residuals");
    add_common(deficiency);
    deficiency->add_option("--n-list", n_list, "atomic mollifier indices (default 0,1,2)");
    deficiency->add_option("--k-list", k_list, "truncated midline indices (default 0)");
    CLI::App* split = app.add_subcommand("split", "outer half-line split f = f_plus f_minus");
    add_common(split);
    CLI::App* extend = app.add_subcommand("extend", "canonical extension for f = h^2");
    add_common(extend);
    extend->add_option("--input", input_path, "input vector CSV aligned to the grid");
    extend->add_option("--function", function_spec,
                       "identity | square | indicator:a,b | exp:-s (default identity)");
    CLI::App* profile = app.add_subcommand("profile", "radial modulus profile");
    add_common(profile);
    profile->add_option("--approach", approach,
                        "ray:theta=<v> | atom:<s> | ray:lambda=<v>,dir=<+|-> (default ray:theta=-5)");

    CLI11_PARSE(app, argc, argv);

    sh_run_options opts;
    opts.grid_half_width = grid_L;
    opts.grid_size = grid_N;
    opts.tol = tol;
    opts.seed = seed;
    opts.out_dir = out_dir.c_str();
    opts.input_path = input_path.empty() ? nullptr : input_path.c_str();
    opts.function_spec = function_spec.c_str();
    opts.approach = approach.c_str();
    opts.n_list = n_list.c_str();
    opts.k_list = k_list.c_str();

    const std::string command = app.get_subcommands().front()->get_name();
    const int code = sh_run_command(command.c_str(), spec_path.c_str(), &opts);
    if (code != 0) std::fprintf(stderr, "strip-hardy %s: %s\n", command.c_str(), sh_last_error());
    return code;
}
