#include <drc/csv.hpp>
#include <drc/error.hpp>

#include <charconv>
#include <cmath>
#include <fstream>
#include <sstream>
#include <system_error>
#include <vector>

namespace drc::csv {

namespace {

std::ifstream open_in(const std::filesystem::path& path)
{
    std::ifstream in(path);
    if (!in) throw Error(ErrorKind::IoError, "cannot open '" + path.string() + "' for reading");
    return in;
}

std::ofstream open_out(const std::filesystem::path& path)
{
    if (path.has_parent_path()) {
        std::error_code ec;
        std::filesystem::create_directories(path.parent_path(), ec);
    }
    std::ofstream out(path, std::ios::binary);
    if (!out) throw Error(ErrorKind::IoError, "cannot open '" + path.string() + "' for writing");
    return out;
}

std::string_view trim(std::string_view s)
{
    while (!s.empty() && (s.front() == ' ' || s.front() == '\t')) s.remove_prefix(1);
    while (!s.empty() && (s.back() == ' ' || s.back() == '\t' || s.back() == '\r')) s.remove_suffix(1);
    return s;
}

std::vector<std::string_view> split(std::string_view line)
{
    std::vector<std::string_view> fields;
    std::size_t start = 0;
    while (true) {
        const auto comma = line.find(',', start);
        fields.push_back(trim(line.substr(start, comma == std::string_view::npos ? comma : comma - start)));
        if (comma == std::string_view::npos) break;
        start = comma + 1;
    }
    return fields;
}

double parse_double(std::string_view text, const std::filesystem::path& path, std::size_t line_no)
{
    double value = 0.0;
    const auto* end = text.data() + text.size();
    const auto [ptr, ec] = std::from_chars(text.data(), end, value);
    if (ec != std::errc{} || ptr != end || !std::isfinite(value)) {
        throw Error(ErrorKind::ParseError,
                    path.string() + ":" + std::to_string(line_no) + ": bad number '" + std::string(text) + "'",
                    line_no);
    }
    return value;
}

std::size_t parse_index(std::string_view text, const std::filesystem::path& path, std::size_t line_no)
{
    std::size_t value = 0;
    const auto* end = text.data() + text.size();
    const auto [ptr, ec] = std::from_chars(text.data(), end, value);
    if (ec != std::errc{} || ptr != end) {
        throw Error(ErrorKind::ParseError,
                    path.string() + ":" + std::to_string(line_no) + ": bad index '" + std::string(text) + "'",
                    line_no);
    }
    return value;
}

/// Reads a file with an exact expected header; returns the data rows with their line numbers.
std::vector<std::pair<std::size_t, std::vector<std::string_view>>>
read_table(const std::filesystem::path& path, std::string_view header, std::size_t columns,
           std::vector<std::string>& storage)
{
    auto in = open_in(path);
    std::string line;
    std::size_t line_no = 0;
    bool seen_header = false;
    std::vector<std::pair<std::size_t, std::size_t>> rows; // (line_no, storage index)
    while (std::getline(in, line)) {
        ++line_no;
        if (trim(line).empty()) continue;
        if (!seen_header) {
            if (trim(line) != header) {
                throw Error(ErrorKind::ParseError,
                            path.string() + ":" + std::to_string(line_no) + ": expected header '" +
                                std::string(header) + "'",
                            line_no);
            }
            seen_header = true;
            continue;
        }
        storage.push_back(line);
        rows.emplace_back(line_no, storage.size() - 1);
    }
    if (!seen_header) throw Error(ErrorKind::ParseError, path.string() + ": missing header", line_no);

    std::vector<std::pair<std::size_t, std::vector<std::string_view>>> out;
    out.reserve(rows.size());
    for (const auto& [no, idx] : rows) {
        auto fields = split(storage[idx]);
        if (fields.size() != columns) {
            throw Error(ErrorKind::ParseError,
                        path.string() + ":" + std::to_string(no) + ": expected " + std::to_string(columns) +
                            " fields",
                        no);
        }
        out.emplace_back(no, std::move(fields));
    }
    return out;
}

void check_type_index(std::size_t got, std::size_t expected, const std::filesystem::path& path, std::size_t no)
{
    if (got != expected) {
        throw Error(ErrorKind::ParseError,
                    path.string() + ":" + std::to_string(no) + ": type_index " + std::to_string(got) +
                        " out of order (expected " + std::to_string(expected) + ")",
                    no);
    }
}

} // namespace

std::string format_double(double value)
{
    char buf[64];
    const auto [ptr, ec] = std::to_chars(buf, buf + sizeof buf, value);
    if (ec != std::errc{}) throw Error(ErrorKind::IoError, "number formatting failed");
    return {buf, ptr};
}

QualitySampleSet read_samples(const std::filesystem::path& path)
{
    std::vector<std::string> storage;
    const auto rows = read_table(path, "xi", 1, storage);
    QualitySampleSet out;
    out.provenance = path.string();
    out.values.reserve(rows.size());
    for (const auto& [no, fields] : rows) out.values.push_back(parse_double(fields[0], path, no));
    if (out.values.empty()) throw Error(ErrorKind::EmptySampleSet, path.string() + ": no samples");
    return out;
}

void write_samples(const std::filesystem::path& path, const QualitySampleSet& samples)
{
    auto out = open_out(path);
    out << "xi\n";
    for (double x : samples.values) out << format_double(x) << '\n';
}

AspTypeProfile read_profile(const std::filesystem::path& path)
{
    std::vector<std::string> storage;
    const auto rows = read_table(path, "type_index,theta,alpha", 3, storage);
    std::vector<double> thetas;
    std::vector<double> alphas;
    for (const auto& [no, fields] : rows) {
        check_type_index(parse_index(fields[0], path, no), thetas.size() + 1, path, no);
        thetas.push_back(parse_double(fields[1], path, no));
        alphas.push_back(parse_double(fields[2], path, no));
    }
    return AspTypeProfile(std::move(thetas), std::move(alphas));
}

void write_profile(const std::filesystem::path& path, const AspTypeProfile& profile)
{
    auto out = open_out(path);
    out << "type_index,theta,alpha\n";
    for (std::size_t i = 0; i < profile.size(); ++i) {
        out << i + 1 << ',' << format_double(profile.thetas()[i]) << ',' << format_double(profile.alphas()[i]) << '\n';
    }
}

ContractMenu read_menu(const std::filesystem::path& path)
{
    std::vector<std::string> storage;
    const auto rows = read_table(path, "type_index,L,R", 3, storage);
    ContractMenu menu;
    for (const auto& [no, fields] : rows) {
        check_type_index(parse_index(fields[0], path, no), menu.latencies.size() + 1, path, no);
        menu.latencies.push_back(parse_double(fields[1], path, no));
        menu.rewards.push_back(parse_double(fields[2], path, no));
    }
    if (menu.latencies.empty()) throw Error(ErrorKind::ParseError, path.string() + ": empty menu");
    return menu;
}

void write_menu(const std::filesystem::path& path, const ContractMenu& menu)
{
    auto out = open_out(path);
    out << "type_index,L,R\n";
    for (std::size_t i = 0; i < menu.size(); ++i) {
        out << i + 1 << ',' << format_double(menu.latencies[i]) << ',' << format_double(menu.rewards[i]) << '\n';
    }
}

void write_trace(const std::filesystem::path& path, const SolveReport& report, std::optional<std::string_view> method)
{
    auto out = open_out(path);
    const std::size_t n_types = report.menu.size();
    if (method) out << "method,";
    out << "iter,objective,lambda";
    for (std::size_t i = 0; i < n_types; ++i) out << ",L_" << i + 1;
    out << '\n';
    for (std::size_t t = 0; t < report.objective_trace.size(); ++t) {
        if (method) out << *method << ',';
        out << t + 1 << ',' << format_double(report.objective_trace[t]) << ','
            << format_double(report.lambda_trace[t]);
        for (double l : report.latency_trace[t]) out << ',' << format_double(l);
        out << '\n';
    }
}

void write_metrics(const std::filesystem::path& path, const MetricsTable& table)
{
    auto out = open_out(path);
    out << "method,extreme_count,shift,mean_teleop_utility\n";
    for (const auto& row : table.teleop) {
        out << to_string(row.method) << ',' << row.extreme_count << ',' << format_double(row.shift) << ','
            << format_double(row.mean_teleop_utility) << '\n';
    }
}

void write_asp_utilities(const std::filesystem::path& path, const MetricsTable& table)
{
    auto out = open_out(path);
    out << "method,extreme_count,type_index,asp_utility\n";
    for (const auto& row : table.asp) {
        out << to_string(row.method) << ',' << row.extreme_count << ',' << row.type_index << ','
            << format_double(row.asp_utility) << '\n';
    }
}

} // namespace drc::csv
