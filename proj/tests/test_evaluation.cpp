#include <drc/bcd.hpp>
#include <drc/baselines.hpp>
#include <drc/error.hpp>
#include <drc/evaluation.hpp>
#include <drc/random.hpp>

#include <doctest.h>

#include <algorithm>
#include <cmath>

using namespace drc;

namespace {

DroProblem small_problem(std::vector<double> thetas, std::vector<double> alphas, std::size_t n, double eps = -1)
{
    SyntheticQualityConfig data;
    data.n_train = n;
    data.n_eval = 0;
    const auto train = generate_quality_samples(data, 0).train;
    const auto amb = eps < 0 ? AmbiguityConfig::derived({60, 100}, 0.99, n)
                             : AmbiguityConfig::with_radius({60, 100}, eps, n);
    return DroProblem{train, AspTypeProfile(std::move(thetas), std::move(alphas)), UtilityParams{}, amb,
                      InnerSolverConfig{}};
}

} // namespace

TEST_CASE("synthetic quality samples")
{
    const auto a = generate_quality_samples(SyntheticQualityConfig{}, 0);
    CHECK(a.train.size() == 200);
    CHECK(a.eval.size() == 50);
    for (const auto* set : {&a.train, &a.eval}) {
        for (double x : set->values) CHECK((x >= 60 && x <= 100));
    }
    const auto b = generate_quality_samples(SyntheticQualityConfig{}, 0);
    CHECK(a.train.values == b.train.values);
    CHECK(a.eval.values == b.eval.values);
    CHECK(generate_quality_samples(SyntheticQualityConfig{}, 1).train.values != a.train.values);

    double mean = 0;
    for (double x : a.train.values) mean += x / 200.0;
    CHECK(std::abs(mean - 85) <= 2.0);
}

TEST_CASE("eval_teleop_utility examples")
{
    const AspTypeProfile one({1}, {1});
    const ContractMenu zero{{0}, {0}};
    const QualitySampleSet pair{{60, 100}, "t"};
    CHECK(eval_teleop_utility(zero, pair, one, UtilityParams{}) == doctest::Approx(4.349757).epsilon(1e-7));
    CHECK(eval_teleop_utility(zero, pair, one, UtilityParams{}) ==
          doctest::Approx(0.5 * (std::log(60.0) + std::log(100.0))).epsilon(1e-15));

    const ContractMenu m{{7}, {0.3}};
    const QualitySampleSet single{{77}, "t"}, twice{{77, 77}, "t"};
    CHECK(eval_teleop_utility(m, single, one, UtilityParams{}) == doctest::Approx(teleop_utility(77, m.bundle(0), UtilityParams{})));
    CHECK(eval_teleop_utility(m, twice, one, UtilityParams{}) == doctest::Approx(eval_teleop_utility(m, single, one, UtilityParams{})));

    const QualitySampleSet bad{{70, 80, -10, 90}, "t"};
    try {
        eval_teleop_utility(zero, bad, one, UtilityParams{});
        FAIL("expected NonPositiveLogArgument");
    } catch (const Error& e) {
        CHECK(e.kind() == ErrorKind::NonPositiveLogArgument);
        REQUIRE(e.index().has_value());
        CHECK(*e.index() == 2);
    }
}

TEST_CASE("property: teleoperator utility falls as the shift grows")
{
    Rng rng(6);
    const auto eval = generate_quality_samples(SyntheticQualityConfig{}, 4).eval;
    for (int k = 0; k < 50; ++k) {
        const std::size_t n = 1 + rng.below(8);
        std::vector<double> L(n), th(n);
        double l = 0, t = 100;
        for (std::size_t i = 0; i < n; ++i) {
            L[i] = (l += 10 * rng.uniform());
            th[i] = (t += 20 * rng.uniform());
        }
        const AspTypeProfile profile(th, dirichlet_symmetric(n, rng));
        const auto menu = make_menu(L, profile, 1.0);
        double prev = std::numeric_limits<double>::infinity();
        for (double m = 0; m <= 60; m += 10) {
            const double u = eval_teleop_utility(menu, shift_samples(eval, m), profile, UtilityParams{});
            CHECK(u <= prev);
            prev = u;
        }
    }
}

TEST_CASE("eval_asp_utilities")
{
    const AspTypeProfile p({110, 140, 175}, {0.2, 0.3, 0.5});
    const auto u = eval_asp_utilities(make_menu(std::vector<double>{2, 5, 9}, p, 1.0), p, 1.0);
    CHECK(std::abs(u[0]) <= 1e-12);
    CHECK(u[0] < u[1]);
    CHECK(u[1] < u[2]);
    const auto z = eval_asp_utilities(ContractMenu{{0, 0, 0}, {0, 0, 0}}, p, 1.0);
    CHECK(z == std::vector<double>{0, 0, 0});

    Rng rng(1);
    for (int k = 0; k < 200; ++k) {
        const std::size_t n = 1 + rng.below(8);
        std::vector<double> L(n), th(n);
        double l = 0, t = 60;
        for (std::size_t i = 0; i < n; ++i) {
            L[i] = (l += 20 * rng.uniform());
            th[i] = (t += 30 * rng.uniform());
        }
        const AspTypeProfile prof(th, dirichlet_symmetric(n, rng));
        const auto v = eval_asp_utilities(make_menu(L, prof, 1.0), prof, 1.0);
        CHECK(std::abs(v[0]) <= 1e-9);
        CHECK(std::is_sorted(v.begin(), v.end()));
    }
}

TEST_CASE("oracle: I = 1 with a zero radius matches the stationary point")
{
    const auto p = small_problem({100}, {1}, 20, 0.0);
    OracleGrid grid;
    const auto r = oracle_menu_search(p, grid);

    // mean 1/(xi + L) = 1/100, solved by bisection
    double lo = 0, hi = 50;
    for (int k = 0; k < 100; ++k) {
        const double mid = 0.5 * (lo + hi);
        double m = 0;
        for (double x : p.samples.values) m += 1.0 / (x + mid) / 20.0;
        (m > 0.01 ? lo : hi) = mid;
    }
    CHECK(std::abs(r.best_latencies[0] - lo) <= grid.latency_step);
}

TEST_CASE("oracle dominates any on-grid point")
{
    const auto p = small_problem({100}, {1}, 20);
    const auto bcd = solve(p, BcdConfig{});
    const double L = bcd.menu.latencies[0];
    const double lambda = bcd.final_lambda;
    REQUIRE(L > 0);

    OracleGrid grid;
    grid.latency_step = L / 200;
    grid.latency_max = 300 * grid.latency_step;
    grid.lambda_step = lambda > 0 ? lambda / 50 : 1e-3;
    grid.lambda_max = 100 * grid.lambda_step;
    grid.exhaustive_lambda = true;
    const auto r = oracle_menu_search(p, grid);
    const std::vector<double> on_grid{200 * grid.latency_step};
    const double at_bcd = objective_serial(p, on_grid, lambda > 0 ? 50 * grid.lambda_step : 0.0).omega;
    CHECK(r.best_objective >= at_bcd - 1e-9);
    CHECK(r.best_objective >= bcd.objective_trace.back() - 1e-9);
}

TEST_CASE("oracle refinement and lambda search agreement")
{
    const auto p = small_problem({110, 140}, {0.6, 0.4}, 10);
    OracleGrid coarse;
    coarse.latency_max = 20;
    coarse.latency_step = 1.0;
    coarse.lambda_max = 0.2;
    coarse.lambda_step = 0.002;
    OracleGrid fine = coarse;
    fine.latency_step = 0.5;
    const auto a = oracle_menu_search(p, coarse);
    const auto b = oracle_menu_search(p, fine);
    CHECK(b.best_objective >= a.best_objective);

    auto exhaustive = fine;
    exhaustive.exhaustive_lambda = true;
    const auto c = oracle_menu_search(p, exhaustive);
    CHECK(c.best_objective == b.best_objective);
    CHECK(c.best_latencies == b.best_latencies);
    CHECK(c.evaluations > b.evaluations);
    CHECK(static_cast<double>(c.evaluations) == projected_oracle_evaluations(2, exhaustive));
    CHECK(static_cast<double>(b.evaluations) <= projected_oracle_evaluations(2, fine));
}

TEST_CASE("oracle limits")
{
    const auto p3 = small_problem({110, 140, 175}, {0.3, 0.3, 0.4}, 5);
    try {
        oracle_menu_search(p3, OracleGrid{});
        FAIL("expected GridTooLarge");
    } catch (const Error& e) {
        CHECK(e.kind() == ErrorKind::GridTooLarge);
    }
    OracleGrid full;
    full.exhaustive_lambda = true;
    CHECK(projected_oracle_evaluations(2, full) == 1001.0 * 1002.0 / 2.0 * 201.0);
    CHECK(projected_oracle_evaluations(2, OracleGrid{}) < kOracleEvaluationLimit);

    const auto p4 = small_problem({110, 140, 175, 200}, {0.25, 0.25, 0.25, 0.25}, 5);
    CHECK_THROWS_AS(oracle_menu_search(p4, OracleGrid{}), Error);
}

TEST_CASE("run_benchmark shape and determinism")
{
    const auto split = generate_quality_samples(SyntheticQualityConfig{}, 0);
    Rng rng(0);
    BenchmarkSetup setup{AspTypeProfile({110, 140, 175}, dirichlet_symmetric(3, rng)), UtilityParams{},
                         {60, 100}, 0.99, BcdConfig{}, InnerSolverConfig{}};
    setup.bcd.max_iters = 50;
    EvaluationScenario sc;
    sc.extreme_counts = {0, 50};
    const std::vector<Method> methods{Method::Dro, Method::StochasticProgramming, Method::RobustOptimization};
    const auto t = run_benchmark(sc, methods, split.train, split.eval, setup);
    CHECK(t.teleop.size() == 2 * 3 * 7);
    CHECK(t.asp.size() == 2 * 3 * 3);
    CHECK(t.menus.size() == 6);
    for (const auto& row : t.asp) CHECK(row.type_index >= 1);
    const auto again = run_benchmark(sc, methods, split.train, split.eval, setup);
    for (std::size_t i = 0; i < t.teleop.size(); ++i) {
        CHECK(t.teleop[i].mean_teleop_utility == again.teleop[i].mean_teleop_utility);
    }
    CHECK(t.teleop_utility(Method::Dro, 0, 0) == t.teleop.front().mean_teleop_utility);
    CHECK_THROWS_AS(t.teleop_utility(Method::Dro, 100, 0), Error);

    EvaluationScenario unsorted;
    unsorted.shift_magnitudes = {10, 0};
    CHECK_THROWS_AS(unsorted.validate(), Error);
}
