#include <drc/config.hpp>
#include <drc/csv.hpp>
#include <drc/error.hpp>
#include <drc/random.hpp>

#include <charconv>
#include <cmath>
#include <fstream>
#include <functional>
#include <map>
#include <sstream>

namespace drc {

std::vector<double> generate_alphas(std::size_t n_types, std::uint64_t seed)
{
    Rng rng(derive_seed(seed, "alphas"));
    return dirichlet_symmetric(n_types, rng);
}

namespace {

[[noreturn]] void invalid(const std::string& what)
{
    throw Error(ErrorKind::ValidationError, what);
}

} // namespace

void RunConfig::validate() const
{
    if (thetas.empty()) invalid("thetas: need at least one type");
    if (alphas && alphas->size() != thetas.size()) invalid("alphas: length differs from thetas");
    try {
        (void)profile();
        params.validate();
        (void)support();
    } catch (const Error& e) {
        invalid(e.what());
    }
    if (!(tau > 0.0 && tau < 1.0)) invalid("InvalidConfidence: tau must lie in (0, 1)");
    if (n_samples < 1) invalid("n_samples must be >= 1");
    if (n_eval < 1) invalid("n_eval must be >= 1");
    if (!(quality_sd > 0.0)) invalid("quality_sd must be > 0");
    if (threads < 0) invalid("threads must be >= 0");
    if (!(oracle_tolerance > 0.0)) invalid("oracle_tolerance must be > 0");
    if (extreme_count > n_samples) invalid("CountExceedsN: extreme_count exceeds n_samples");
    for (auto c : extreme_counts) {
        if (c > n_samples) invalid("CountExceedsN: extreme_counts entry exceeds n_samples");
    }
    try {
        bcd.validate(thetas.size());
        inner.validate(support_hi - support_lo);
        scenario().validate();
    } catch (const Error& e) {
        invalid(e.what());
    }
}

AspTypeProfile RunConfig::profile() const
{
    if (profile_path) return csv::read_profile(*profile_path);
    return AspTypeProfile(thetas, alphas ? *alphas : generate_alphas(thetas.size(), seed));
}

SyntheticQualityConfig RunConfig::synthetic() const
{
    return {quality_mean, quality_sd, support_lo, support_hi, n_samples, n_eval};
}

EvaluationScenario RunConfig::scenario() const
{
    return {shift_magnitudes, extreme_counts, extreme_value, seed};
}

BenchmarkSetup RunConfig::benchmark_setup() const
{
    return {profile(), params, support(), tau, bcd, inner};
}

namespace {

std::string_view trim(std::string_view s)
{
    while (!s.empty() && std::isspace(static_cast<unsigned char>(s.front()))) s.remove_prefix(1);
    while (!s.empty() && std::isspace(static_cast<unsigned char>(s.back()))) s.remove_suffix(1);
    return s;
}

struct LineError {
    std::string what;
};

double to_double(std::string_view v)
{
    double out = 0.0;
    const auto [ptr, ec] = std::from_chars(v.data(), v.data() + v.size(), out);
    if (ec != std::errc{} || ptr != v.data() + v.size() || !std::isfinite(out)) {
        throw LineError{"expected a number, got '" + std::string(v) + "'"};
    }
    return out;
}

template <class Int>
Int to_integer(std::string_view v)
{
    Int out{};
    const auto [ptr, ec] = std::from_chars(v.data(), v.data() + v.size(), out);
    if (ec != std::errc{} || ptr != v.data() + v.size()) {
        throw LineError{"expected an integer, got '" + std::string(v) + "'"};
    }
    return out;
}

template <class T, class F>
std::vector<T> to_list(std::string_view v, F convert)
{
    std::vector<T> out;
    if (trim(v).empty()) return out;
    std::size_t start = 0;
    while (true) {
        const auto comma = v.find(',', start);
        const auto item = trim(v.substr(start, comma == std::string_view::npos ? comma : comma - start));
        out.push_back(convert(item));
        if (comma == std::string_view::npos) break;
        start = comma + 1;
    }
    return out;
}

bool to_bool(std::string_view v)
{
    if (v == "true" || v == "1") return true;
    if (v == "false" || v == "0") return false;
    throw LineError{"expected true or false, got '" + std::string(v) + "'"};
}

using Setter = std::function<void(RunConfig&, std::string_view)>;

const std::map<std::string, Setter, std::less<>>& setters()
{
    static const std::map<std::string, Setter, std::less<>> table{
        {"thetas", [](RunConfig& c, std::string_view v) { c.thetas = to_list<double>(v, to_double); }},
        {"alphas", [](RunConfig& c, std::string_view v) { c.alphas = to_list<double>(v, to_double); }},
        {"gamma1", [](RunConfig& c, std::string_view v) { c.params.gamma1 = to_double(v); }},
        {"gamma2", [](RunConfig& c, std::string_view v) { c.params.gamma2 = to_double(v); }},
        {"gamma3", [](RunConfig& c, std::string_view v) { c.params.gamma3 = to_double(v); }},
        {"tau", [](RunConfig& c, std::string_view v) { c.tau = to_double(v); }},
        {"support_lo", [](RunConfig& c, std::string_view v) { c.support_lo = to_double(v); }},
        {"support_hi", [](RunConfig& c, std::string_view v) { c.support_hi = to_double(v); }},
        {"n_samples", [](RunConfig& c, std::string_view v) { c.n_samples = to_integer<std::size_t>(v); }},
        {"n_eval", [](RunConfig& c, std::string_view v) { c.n_eval = to_integer<std::size_t>(v); }},
        {"quality_mean", [](RunConfig& c, std::string_view v) { c.quality_mean = to_double(v); }},
        {"quality_sd", [](RunConfig& c, std::string_view v) { c.quality_sd = to_double(v); }},
        {"max_iters", [](RunConfig& c, std::string_view v) { c.bcd.max_iters = to_integer<int>(v); }},
        {"conv_tol", [](RunConfig& c, std::string_view v) { c.bcd.conv_tol = to_double(v); }},
        {"eta_L", [](RunConfig& c, std::string_view v) { c.bcd.eta_L = to_double(v); }},
        {"eta_lambda", [](RunConfig& c, std::string_view v) { c.bcd.eta_lambda = to_double(v); }},
        {"lambda_init", [](RunConfig& c, std::string_view v) { c.bcd.lambda_init = to_double(v); }},
        {"L_init", [](RunConfig& c, std::string_view v) { c.bcd.L_init = to_list<double>(v, to_double); }},
        {"bisect_tol", [](RunConfig& c, std::string_view v) { c.inner.bisect_tol = to_double(v); }},
        {"max_bisect_iters", [](RunConfig& c, std::string_view v) { c.inner.max_bisect_iters = to_integer<int>(v); }},
        {"method", [](RunConfig& c, std::string_view v) {
             try {
                 c.method = parse_method(v);
             } catch (const Error& e) {
                 throw LineError{e.what()};
             }
         }},
        {"threads", [](RunConfig& c, std::string_view v) { c.threads = to_integer<int>(v); }},
        {"shift_magnitudes", [](RunConfig& c, std::string_view v) { c.shift_magnitudes = to_list<double>(v, to_double); }},
        {"extreme_counts", [](RunConfig& c, std::string_view v) {
             c.extreme_counts = to_list<std::size_t>(v, to_integer<std::size_t>);
         }},
        {"extreme_count", [](RunConfig& c, std::string_view v) { c.extreme_count = to_integer<std::size_t>(v); }},
        {"extreme_value", [](RunConfig& c, std::string_view v) { c.extreme_value = to_double(v); }},
        {"oracle_latency_max", [](RunConfig& c, std::string_view v) { c.oracle.latency_max = to_double(v); }},
        {"oracle_latency_step", [](RunConfig& c, std::string_view v) { c.oracle.latency_step = to_double(v); }},
        {"oracle_lambda_max", [](RunConfig& c, std::string_view v) { c.oracle.lambda_max = to_double(v); }},
        {"oracle_lambda_step", [](RunConfig& c, std::string_view v) { c.oracle.lambda_step = to_double(v); }},
        {"oracle_exhaustive_lambda", [](RunConfig& c, std::string_view v) { c.oracle.exhaustive_lambda = to_bool(v); }},
        {"oracle_tolerance", [](RunConfig& c, std::string_view v) { c.oracle_tolerance = to_double(v); }},
        {"seed", [](RunConfig& c, std::string_view v) { c.seed = to_integer<std::uint64_t>(v); }},
        {"train_path", [](RunConfig& c, std::string_view v) { c.train_path = std::string(v); }},
        {"eval_path", [](RunConfig& c, std::string_view v) { c.eval_path = std::string(v); }},
        {"profile_path", [](RunConfig& c, std::string_view v) { c.profile_path = std::string(v); }},
        {"menu_path", [](RunConfig& c, std::string_view v) { c.menu_path = std::string(v); }},
        {"out_dir", [](RunConfig& c, std::string_view v) { c.out_dir = std::string(v); }},
    };
    return table;
}

} // namespace

RunConfig parse_config(std::string_view text)
{
    RunConfig cfg;
    std::size_t line_no = 0;
    std::size_t start = 0;
    while (start <= text.size()) {
        const auto nl = text.find('\n', start);
        std::string_view line = text.substr(start, nl == std::string_view::npos ? nl : nl - start);
        start = nl == std::string_view::npos ? text.size() + 1 : nl + 1;
        ++line_no;

        if (const auto hash = line.find('#'); hash != std::string_view::npos) line = line.substr(0, hash);
        line = trim(line);
        if (line.empty()) continue;

        const auto eq = line.find('=');
        if (eq == std::string_view::npos) {
            throw Error(ErrorKind::ParseError, "line " + std::to_string(line_no) + ": expected 'key = value'", line_no);
        }
        const auto key = trim(line.substr(0, eq));
        const auto value = trim(line.substr(eq + 1));
        const auto it = setters().find(key);
        if (it == setters().end()) {
            throw Error(ErrorKind::ParseError, "line " + std::to_string(line_no) + ": unknown key '" + std::string(key) + "'",
                        line_no);
        }
        try {
            it->second(cfg, value);
        } catch (const LineError& e) {
            throw Error(ErrorKind::ParseError,
                        "line " + std::to_string(line_no) + ": " + std::string(key) + ": " + e.what, line_no);
        }
    }
    cfg.validate();
    return cfg;
}

RunConfig load_config(const std::filesystem::path& path)
{
    std::ifstream in(path);
    if (!in) throw Error(ErrorKind::IoError, "cannot open config '" + path.string() + "'");
    std::stringstream buffer;
    buffer << in.rdbuf();
    return parse_config(buffer.str());
}

} // namespace drc
