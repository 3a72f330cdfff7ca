#pragma once

#include <drc/ambiguity.hpp>
#include <drc/bcd.hpp>
#include <drc/contract.hpp>
#include <drc/evaluation.hpp>

#include <filesystem>
#include <optional>
#include <string>
#include <string_view>

namespace drc::csv {

/// Shortest decimal text that round-trips to the same double.
std::string format_double(double value);

/// Header `xi`, one value per line.
QualitySampleSet read_samples(const std::filesystem::path& path);
void write_samples(const std::filesystem::path& path, const QualitySampleSet& samples);

/// Header `type_index,theta,alpha`, 1-based indices in ascending order.
AspTypeProfile read_profile(const std::filesystem::path& path);
void write_profile(const std::filesystem::path& path, const AspTypeProfile& profile);

/// Header `type_index,L,R`.
ContractMenu read_menu(const std::filesystem::path& path);
void write_menu(const std::filesystem::path& path, const ContractMenu& menu);

/// Header `iter,objective,lambda,L_1..L_I`, prefixed by a `method` column when one is given.
void write_trace(const std::filesystem::path& path, const SolveReport& report,
                 std::optional<std::string_view> method = std::nullopt);

/// Header `method,extreme_count,shift,mean_teleop_utility`.
void write_metrics(const std::filesystem::path& path, const MetricsTable& table);

/// Header `method,extreme_count,type_index,asp_utility`.
void write_asp_utilities(const std::filesystem::path& path, const MetricsTable& table);

} // namespace drc::csv
