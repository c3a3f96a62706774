#pragma once

#include <stdexcept>
#include <string>

namespace biblioscope {

// Bad or missing configuration (lexicons, rule files, basemaps, run config).
// The CLI maps this to exit code 3.
struct ConfigError : std::runtime_error {
    explicit ConfigError(const std::string& what) : std::runtime_error(what) {}
};

// Unreadable or unusable input / store data. The CLI maps this to exit code 2.
struct InputError : std::runtime_error {
    explicit InputError(const std::string& what) : std::runtime_error(what) {}
};

// Command misuse (bad report name, missing second store, ...). Exit code 1.
struct UsageError : std::runtime_error {
    explicit UsageError(const std::string& what) : std::runtime_error(what) {}
};

} // namespace biblioscope
