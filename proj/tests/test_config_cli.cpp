#include <drc/app.hpp>
#include <drc/config.hpp>
#include <drc/csv.hpp>
#include <drc/error.hpp>

#include <doctest.h>

#include <cmath>
#include <filesystem>
#include <fstream>
#include <numeric>
#include <sstream>

using namespace drc;
namespace fs = std::filesystem;

namespace {

fs::path scratch(const std::string& name)
{
    const auto dir = fs::temp_directory_path() / ("drc_test_" + name);
    fs::remove_all(dir);
    fs::create_directories(dir);
    return dir;
}

std::string slurp(const fs::path& p)
{
    std::ifstream in(p, std::ios::binary);
    std::stringstream ss;
    ss << in.rdbuf();
    return ss.str();
}

std::size_t data_rows(const fs::path& p)
{
    const auto text = slurp(p);
    return static_cast<std::size_t>(std::count(text.begin(), text.end(), '\n')) - 1;
}

ErrorKind parse_error_kind(std::string_view text, std::optional<std::size_t>* line = nullptr)
{
    try {
        parse_config(text);
    } catch (const Error& e) {
        if (line) *line = e.index();
        return e.kind();
    }
    FAIL("expected an error");
    return ErrorKind::InvalidArgument;
}

int run(std::string_view sub, const RunConfig& cfg, std::string* out_text = nullptr)
{
    std::ostringstream out, err;
    const int code = dispatch(sub, cfg, out, err);
    if (out_text) *out_text = out.str();
    return code;
}

} // namespace

TEST_CASE("empty config gives the reference defaults")
{
    const auto cfg = parse_config("");
    CHECK(cfg.thetas == std::vector<double>{110, 140, 175, 200, 220, 235, 245, 250});
    CHECK(cfg.params.gamma1 == 1.0);
    CHECK(cfg.params.gamma2 == 1.0);
    CHECK(cfg.params.gamma3 == 1.0);
    CHECK(cfg.tau == 0.99);
    CHECK(cfg.n_samples == 200);
    CHECK(cfg.support_lo == 60.0);
    CHECK(cfg.support_hi == 100.0);
    CHECK(cfg.bcd.max_iters == 1500);
    CHECK(cfg.bcd.conv_tol == 1e-3);
    CHECK(cfg.bcd.lambda_init == 6.0);
    CHECK(cfg.bcd.eta_lambda == 1e-3);
    CHECK(cfg.bcd.eta_L == 1e4);
    CHECK(cfg.bcd.initial_latencies(8) == std::vector<double>(8, 0.0));
    CHECK_FALSE(cfg.alphas.has_value());
    CHECK(parse_config("# only a comment\n\n   \n").thetas.size() == 8);
}

TEST_CASE("config values and errors")
{
    const auto cfg = parse_config("thetas = 110, 140\nalphas = 0.25, 0.75  # tail comment\nseed = 7\nmethod = sp\n");
    CHECK(cfg.thetas == std::vector<double>{110, 140});
    CHECK(*cfg.alphas == std::vector<double>{0.25, 0.75});
    CHECK(cfg.seed == 7);
    CHECK(cfg.method == Method::StochasticProgramming);

    CHECK(parse_error_kind("tau = 1.5") == ErrorKind::ValidationError);
    try {
        parse_config("tau = 1.5");
    } catch (const Error& e) {
        CHECK(std::string(e.what()).find("InvalidConfidence") != std::string::npos);
    }
    CHECK(parse_error_kind("thetas = 110, 140\nalphas = 0.5, 0.6") == ErrorKind::ValidationError);
    CHECK(parse_error_kind("thetas = 140, 110") == ErrorKind::ValidationError);
    CHECK(parse_error_kind("extreme_count = 500") == ErrorKind::ValidationError);

    std::optional<std::size_t> line;
    CHECK(parse_error_kind("seed = 1\n\nbogus = 3\n", &line) == ErrorKind::ParseError);
    CHECK(line == std::optional<std::size_t>(3));
    CHECK(parse_error_kind("tau = abc", &line) == ErrorKind::ParseError);
    CHECK(line == std::optional<std::size_t>(1));
    CHECK(parse_error_kind("seed 4", &line) == ErrorKind::ParseError);
    CHECK(parse_error_kind("oracle_exhaustive_lambda = maybe") == ErrorKind::ParseError);
}

TEST_CASE("generate_alphas")
{
    CHECK(generate_alphas(1, 0) == std::vector<double>{1.0});
    CHECK(generate_alphas(8, 3) == generate_alphas(8, 3));
    CHECK(generate_alphas(8, 3) != generate_alphas(8, 4));

    const auto a = generate_alphas(8, 0);
    CHECK(std::abs(std::accumulate(a.begin(), a.end(), 0.0) - 1.0) <= 1e-12);
    for (double x : a) CHECK(x > 0.0);

    std::ifstream golden(fs::path(DRC_GOLDEN_DIR) / "alphas_seed0_I8.txt");
    REQUIRE(golden);
    std::vector<std::string> want;
    for (std::string s; std::getline(golden, s);) want.push_back(s);
    REQUIRE(want.size() == 8);
    for (std::size_t i = 0; i < 8; ++i) CHECK(csv::format_double(a[i]) == want[i]);
}

TEST_CASE("subcommand names")
{
    for (auto s : {"gen-data", "solve", "evaluate", "bench", "oracle", "trace"}) CHECK(is_subcommand(s));
    CHECK_FALSE(is_subcommand("plot"));
    std::ostringstream out, err;
    CHECK(dispatch("plot", RunConfig{}, out, err) == kExitConfigError);
}

TEST_CASE("artifacts round-trip between subcommands")
{
    const auto dir = scratch("roundtrip");
    RunConfig cfg;
    cfg.out_dir = dir / "data";
    REQUIRE(run("gen-data", cfg) == kExitOk);
    CHECK(data_rows(cfg.out_dir / "train.csv") == 200);
    CHECK(data_rows(cfg.out_dir / "eval.csv") == 50);

    RunConfig solve_cfg;
    solve_cfg.train_path = cfg.out_dir / "train.csv";
    solve_cfg.eval_path = cfg.out_dir / "eval.csv";
    solve_cfg.profile_path = cfg.out_dir / "profile.csv";
    solve_cfg.out_dir = dir / "solve";
    std::string text;
    REQUIRE(run("solve", solve_cfg, &text) == kExitOk);
    CHECK(text.find("feasible=true") != std::string::npos);

    const auto menu = csv::read_menu(solve_cfg.out_dir / "menu.csv");
    CHECK(menu.size() == 8);
    CHECK(is_nondecreasing(menu.latencies));
    CHECK(is_nondecreasing(menu.rewards));
    CHECK(data_rows(solve_cfg.out_dir / "trace.csv") >= 1);

    // Data files must reproduce what the in-memory generator gives.
    RunConfig direct;
    direct.out_dir = dir / "direct";
    REQUIRE(run("solve", direct) == kExitOk);
    CHECK(slurp(direct.out_dir / "menu.csv") == slurp(solve_cfg.out_dir / "menu.csv"));

    RunConfig eval_cfg = solve_cfg;
    eval_cfg.menu_path = solve_cfg.out_dir / "menu.csv";
    REQUIRE(run("evaluate", eval_cfg) == kExitOk);
    CHECK(data_rows(solve_cfg.out_dir / "evaluation.csv") == 7);
    CHECK(data_rows(solve_cfg.out_dir / "evaluation_asp.csv") == 8);

    RunConfig sp = solve_cfg;
    sp.method = Method::StochasticProgramming;
    sp.out_dir = dir / "trace";
    REQUIRE(run("trace", sp) == kExitOk);
    CHECK(slurp(sp.out_dir / "trace.csv").rfind("method,iter,objective,lambda,L_1", 0) == 0);
    CHECK_FALSE(fs::exists(sp.out_dir / "menu.csv"));
}

TEST_CASE("bench output")
{
    const auto dir = scratch("bench");
    RunConfig cfg = parse_config("extreme_counts = 0\n");
    cfg.out_dir = dir / "a";
    REQUIRE(run("bench", cfg) == kExitOk);
    CHECK(data_rows(cfg.out_dir / "metrics.csv") == 21);
    CHECK(data_rows(cfg.out_dir / "asp_utility.csv") == 24);
    CHECK(slurp(cfg.out_dir / "metrics.csv").rfind("method,extreme_count,shift,mean_teleop_utility\n", 0) == 0);

    RunConfig again = cfg;
    again.out_dir = dir / "b";
    REQUIRE(run("bench", again) == kExitOk);
    CHECK(slurp(cfg.out_dir / "metrics.csv") == slurp(again.out_dir / "metrics.csv"));
    CHECK(slurp(cfg.out_dir / "asp_utility.csv") == slurp(again.out_dir / "asp_utility.csv"));
}

TEST_CASE("oracle subcommand on a two-type instance")
{
    auto cfg = parse_config("thetas = 110, 140\nn_samples = 20\nextreme_counts = 0\noracle_latency_step = 0.5\n");
    cfg.out_dir = scratch("oracle");
    std::string text;
    CHECK(run("oracle", cfg, &text) == kExitOk);
    CHECK(text.find("PASS") != std::string::npos);
    CHECK(data_rows(cfg.out_dir / "oracle.csv") == 1);
}

TEST_CASE("exit codes")
{
    const auto dir = scratch("exit");
    RunConfig bad;
    bad.tau = 1.5;
    bad.out_dir = dir;
    CHECK(run("solve", bad) == kExitConfigError);

    RunConfig missing;
    missing.train_path = dir / "nope.csv";
    missing.out_dir = dir;
    CHECK(run("solve", missing) == kExitDataError);

    {
        std::ofstream(dir / "garbled.csv") << "xi\n70\nseventy\n";
    }
    RunConfig garbled;
    garbled.train_path = dir / "garbled.csv";
    garbled.out_dir = dir;
    CHECK(run("solve", garbled) == kExitConfigError);

    {
        std::ofstream(dir / "neg.csv") << "xi\n70\n-500\n";
        std::ofstream(dir / "zero_menu.csv") << "type_index,L,R\n1,0,0\n";
    }
    RunConfig numeric = parse_config("thetas = 110\n");
    numeric.eval_path = dir / "neg.csv";
    numeric.menu_path = dir / "zero_menu.csv";
    numeric.out_dir = dir;
    CHECK(run("evaluate", numeric) == kExitNumericFailure);

    RunConfig tight = parse_config("thetas = 110, 140\nn_samples = 20\nextreme_counts = 0\noracle_latency_step = 5\noracle_tolerance = 1e-12\n");
    tight.out_dir = dir;
    std::string text;
    CHECK(run("oracle", tight, &text) == kExitNumericFailure);
    CHECK(text.find("FAIL") != std::string::npos);
}
