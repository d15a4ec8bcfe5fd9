#pragma once

#include <filesystem>
#include <functional>
#include <optional>
#include <string>

#include "bergman/fta.hpp"

namespace bergman {

enum class OutputFormat { Json, Csv };

/// Defaults for the command-line tool. Sources, lowest precedence first:
/// built-in values, the --config file, BERGMAN_* environment variables,
/// explicit flags.
struct RunConfig {
    QuadratureGrid default_grid{512, 512};
    /// Unset: JSON for single reports, CSV for sweeps.
    std::optional<OutputFormat> output_format;
    int float_digits = 15;
    std::optional<std::filesystem::path> sieve_cache_path;

    /// Throws std::invalid_argument unless float_digits is in [1, 30] and
    /// both grid dimensions are at least 8.
    void validate() const;

    /// Keys: default_grid, output_format, float_digits, sieve_cache_path.
    /// Throws std::invalid_argument for unknown keys or bad values.
    void set(const std::string& key, const std::string& value);
};

OutputFormat parse_output_format(const std::string& text);

/// "key = value" lines; blank lines and lines starting with '#' are ignored.
void apply_config_file(RunConfig& config, const std::filesystem::path& path);

using EnvLookup = std::function<std::optional<std::string>(const std::string&)>;
EnvLookup process_environment();

/// BERGMAN_DEFAULT_GRID, BERGMAN_OUTPUT_FORMAT, BERGMAN_FLOAT_DIGITS,
/// BERGMAN_SIEVE_CACHE_PATH.
void apply_environment(RunConfig& config, const EnvLookup& env);

} // namespace bergman
