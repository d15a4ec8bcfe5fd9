#include "bergman/run_config.hpp"

#include <cctype>
#include <cstdlib>
#include <fstream>
#include <stdexcept>

namespace bergman {

namespace {

std::string trim(const std::string& s)
{
    const auto first = s.find_first_not_of(" \t\r");
    if (first == std::string::npos) {
        return {};
    }
    return s.substr(first, s.find_last_not_of(" \t\r") - first + 1);
}

} // namespace

void RunConfig::validate() const
{
    if (float_digits < 1 || float_digits > 30) {
        throw std::invalid_argument("float_digits must be in [1, 30]");
    }
    if (default_grid.radial < 8 || default_grid.angular < 8) {
        throw std::invalid_argument("grid dimensions must be at least 8");
    }
}

OutputFormat parse_output_format(const std::string& text)
{
    if (text == "json") {
        return OutputFormat::Json;
    }
    if (text == "csv") {
        return OutputFormat::Csv;
    }
    throw std::invalid_argument("output format must be json or csv, got '" + text + "'");
}

void RunConfig::set(const std::string& key, const std::string& value)
{
    if (key == "default_grid") {
        default_grid = QuadratureGrid::parse(value);
    } else if (key == "output_format") {
        output_format = parse_output_format(value);
    } else if (key == "float_digits") {
        std::size_t used = 0;
        int digits = 0;
        try {
            digits = std::stoi(value, &used);
        } catch (const std::exception&) {
            used = 0;
        }
        if (used == 0 || used != value.size()) {
            throw std::invalid_argument("float_digits must be an integer, got '" + value + "'");
        }
        float_digits = digits;
    } else if (key == "sieve_cache_path") {
        if (value.empty()) {
            sieve_cache_path.reset();
        } else {
            sieve_cache_path = value;
        }
    } else {
        throw std::invalid_argument("unknown config key '" + key + "'");
    }
}

void apply_config_file(RunConfig& config, const std::filesystem::path& path)
{
    std::ifstream in(path);
    if (!in) {
        throw std::invalid_argument("cannot read config file " + path.string());
    }
    std::string line;
    int number = 0;
    while (std::getline(in, line)) {
        ++number;
        line = trim(line);
        if (line.empty() || line.front() == '#') {
            continue;
        }
        const auto eq = line.find('=');
        if (eq == std::string::npos) {
            throw std::invalid_argument(path.string() + ":" + std::to_string(number) + ": expected key = value");
        }
        config.set(trim(line.substr(0, eq)), trim(line.substr(eq + 1)));
    }
}

EnvLookup process_environment()
{
    return [](const std::string& name) -> std::optional<std::string> {
        if (const char* v = std::getenv(name.c_str())) {
            return std::string(v);
        }
        return std::nullopt;
    };
}

void apply_environment(RunConfig& config, const EnvLookup& env)
{
    for (const char* key : {"default_grid", "output_format", "float_digits", "sieve_cache_path"}) {
        std::string name = "BERGMAN_";
        for (const char* c = key; *c; ++c) {
            name += static_cast<char>(std::toupper(static_cast<unsigned char>(*c)));
        }
        if (auto value = env(name)) {
            config.set(key, trim(*value));
        }
    }
}

} // namespace bergman
