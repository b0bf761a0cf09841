#pragma once

#include <stdexcept>
#include <string>

namespace spanex {

// Exit codes used by the CLI: 0 success, 2 usage/config error,
// 3 data/method incompatibility, 4 numerical failure.
inline constexpr int kExitOk = 0;
inline constexpr int kExitConfig = 2;
inline constexpr int kExitData = 3;
inline constexpr int kExitNumeric = 4;

// Bad configuration, bad flags, missing files.
class ConfigError : public std::runtime_error {
public:
    explicit ConfigError(const std::string& msg) : std::runtime_error(msg) {}
};

// Malformed data or a method applied to data it cannot handle.
class DataError : public std::runtime_error {
public:
    explicit DataError(const std::string& msg) : std::runtime_error(msg) {}
};

// Non-finite values, solver blow-ups.
class NumericError : public std::runtime_error {
public:
    explicit NumericError(const std::string& msg) : std::runtime_error(msg) {}
};

} // namespace spanex
