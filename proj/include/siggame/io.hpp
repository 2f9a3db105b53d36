#pragma once

#include <iosfwd>
#include <stdexcept>
#include <string>

#include "siggame/types.hpp"

namespace siggame::io {

/// Config-file problem; what() carries "<file>:<line>: message".
class ConfigError : public std::runtime_error {
 public:
  using std::runtime_error::runtime_error;
};

/// Parse the flat key-value game config. Keys (all required, no repeats):
///   mu_e, var_e, mu_d, var_d, noise_var : numbers
///   constraint                          : "soft" | "hard"
///   constraint_value                    : lambda (soft) or p_bar (hard)
/// '#' starts a comment; blank lines are ignored.
GameParams parse_config(std::istream& in, const std::string& filename);

/// Load and parse a config file; ConfigError if unreadable or invalid.
GameParams load_config(const std::string& path);

/// Fixed 17-significant-digit scientific rendering used in every CSV cell so
/// identical inputs produce byte-identical files.
std::string csv_number(double value);

}  // namespace siggame::io
