// Command-line driver: drc <subcommand> [--config PATH] [--seed U64] [--method dro|sp|ro] [--out DIR]

#include <drc/app.hpp>
#include <drc/config.hpp>
#include <drc/error.hpp>

#include <CLI11.hpp>

#include <cstdint>
#include <iostream>
#include <optional>
#include <string>

int main(int argc, char** argv)
{
    CLI::App app{"Distributionally robust contract design for edge AIGC task offloading"};
    app.require_subcommand(1, 1);

    std::string config_path;
    std::optional<std::uint64_t> seed;
    std::optional<std::string> method;
    std::optional<std::string> out_dir;
    std::optional<std::string> train_path;
    std::optional<std::string> eval_path;
    std::optional<std::string> menu_path;

    const auto add_common = [&](CLI::App* sub) {
        sub->add_option("--config", config_path, "flat key = value config file");
        sub->add_option("--seed", seed, "top-level seed");
        sub->add_option("--method", method, "dro, sp or ro");
        sub->add_option("--out", out_dir, "output directory");
        sub->add_option("--train", train_path, "training samples CSV (header xi)");
        sub->add_option("--eval", eval_path, "evaluation samples CSV (header xi)");
        sub->add_option("--menu", menu_path, "menu CSV (header type_index,L,R)");
    };
    add_common(app.add_subcommand("gen-data", "write synthetic training/evaluation samples"));
    add_common(app.add_subcommand("solve", "train one method and write its menu and trace"));
    add_common(app.add_subcommand("evaluate", "score an existing menu under distribution shift"));
    add_common(app.add_subcommand("bench", "run every method over the shift and contamination grid"));
    add_common(app.add_subcommand("oracle", "compare BCD against brute-force search on a small instance"));
    add_common(app.add_subcommand("trace", "write the convergence trace of one method"));

    try {
        app.parse(argc, argv);
    } catch (const CLI::ParseError& e) {
        const int code = app.exit(e);
        return code == 0 ? 0 : drc::kExitConfigError;
    }
    const std::string subcommand = app.get_subcommands().front()->get_name();

    drc::RunConfig cfg;
    try {
        cfg = config_path.empty() ? drc::parse_config("") : drc::load_config(config_path);
        if (seed) cfg.seed = *seed;
        if (method) cfg.method = drc::parse_method(*method);
        if (out_dir) cfg.out_dir = *out_dir;
        if (train_path) cfg.train_path = *train_path;
        if (eval_path) cfg.eval_path = *eval_path;
        if (menu_path) cfg.menu_path = *menu_path;
    } catch (const drc::Error& e) {
        std::cerr << "error: " << e.what() << '\n';
        return drc::kExitConfigError;
    }
    return drc::dispatch(subcommand, cfg, std::cout, std::cerr);
}
