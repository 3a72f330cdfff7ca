#pragma once

#include <drc/config.hpp>

#include <ostream>
#include <string_view>

namespace drc {

enum ExitStatus : int {
    kExitOk = 0,
    kExitConfigError = 2,
    kExitDataError = 3,
    kExitNumericFailure = 4,
};

/// gen-data, solve, evaluate, bench, oracle, trace
bool is_subcommand(std::string_view name) noexcept;

/*
 * Runs one subcommand against a validated config and writes its artifacts under
 * cfg.out_dir. Errors are reported on `err` and mapped to an exit status; this
 * never throws.
 */
int dispatch(std::string_view subcommand, const RunConfig& cfg, std::ostream& out, std::ostream& err);

} // namespace drc
