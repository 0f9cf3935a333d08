// include/fonorico/util.h
#pragma once

#include <cstdint>
#include <stdexcept>
#include <string>
#include <string_view>
#include <vector>

namespace fonorico {

// Configuration problems: bad flags, malformed config files, invalid
// inventories or rulesets. CLI exit code 2.
class ConfigError : public std::runtime_error {
 public:
  explicit ConfigError(const std::string& msg) : std::runtime_error(msg) {}
};

// Filesystem problems: missing or unreadable paths. CLI exit code 3.
class IoError : public std::runtime_error {
 public:
  explicit IoError(const std::string& msg) : std::runtime_error(msg) {}
};

// Malformed data records in a stage input. Carries the 1-based line
// number of the offending record. CLI exit code 4.
class SchemaError : public std::runtime_error {
 public:
  SchemaError(const std::string& msg, std::size_t line)
      : std::runtime_error(msg + " (line " + std::to_string(line) + ")"),
        line_(line) {}
  std::size_t line() const { return line_; }

 private:
  std::size_t line_;
};

// A phoneme symbol that the active inventory does not know.
class UnknownSymbolError : public std::runtime_error {
 public:
  explicit UnknownSymbolError(const std::string& symbol,
                              const std::string& context = "")
      : std::runtime_error("unknown phoneme symbol '" + symbol + "'" +
                           (context.empty() ? "" : " " + context)),
        symbol_(symbol) {}
  const std::string& symbol() const { return symbol_; }

 private:
  std::string symbol_;
};

inline constexpr std::uint64_t kFnvOffset = 1469598103934665603ull;
inline constexpr std::uint64_t kFnvPrime = 1099511628211ull;

inline std::uint64_t fnv1a(std::string_view data,
                           std::uint64_t seed = kFnvOffset) {
  std::uint64_t h = seed;
  for (unsigned char c : data) {
    h ^= c;
    h *= kFnvPrime;
  }
  return h;
}

std::string to_hex(std::uint64_t value);

std::string_view trim(std::string_view s);

std::vector<std::string_view> split(std::string_view s, char sep);

}  // namespace fonorico
