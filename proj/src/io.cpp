#include "siggame/io.hpp"

#include <charconv>
#include <cstdio>
#include <fstream>
#include <map>
#include <set>
#include <sstream>
#include <string_view>

namespace siggame::io {

namespace {

const std::set<std::string> kKnownKeys = {
    "mu_e", "var_e", "mu_d", "var_d", "noise_var", "constraint",
    "constraint_value"};

std::string_view trim(std::string_view text) {
  const auto begin = text.find_first_not_of(" \t\r");
  if (begin == std::string_view::npos) {
    return {};
  }
  const auto end = text.find_last_not_of(" \t\r");
  return text.substr(begin, end - begin + 1);
}

[[noreturn]] void fail(const std::string& filename, int line,
                       const std::string& message) {
  std::ostringstream out;
  out << filename << ":" << line << ": " << message;
  throw ConfigError(out.str());
}

struct Entry {
  std::string value;
  int line = 0;
};

double parse_number(const std::string& filename, const Entry& entry,
                    const std::string& key) {
  const std::string_view text = entry.value;
  double value = 0.0;
  const auto [ptr, ec] =
      std::from_chars(text.data(), text.data() + text.size(), value);
  if (ec != std::errc() || ptr != text.data() + text.size()) {
    fail(filename, entry.line, "value of '" + key + "' is not a number: '" +
                                   entry.value + "'");
  }
  return value;
}

}  // namespace

GameParams parse_config(std::istream& in, const std::string& filename) {
  std::map<std::string, Entry> entries;
  std::string line;
  int line_no = 0;
  while (std::getline(in, line)) {
    ++line_no;
    std::string_view text = line;
    if (const auto hash = text.find('#'); hash != std::string_view::npos) {
      text = text.substr(0, hash);
    }
    text = trim(text);
    if (text.empty()) {
      continue;
    }
    const auto eq = text.find('=');
    if (eq == std::string_view::npos) {
      fail(filename, line_no, "expected 'key = value'");
    }
    const std::string key(trim(text.substr(0, eq)));
    const std::string value(trim(text.substr(eq + 1)));
    if (key.empty() || value.empty()) {
      fail(filename, line_no, "expected 'key = value'");
    }
    if (!kKnownKeys.contains(key)) {
      fail(filename, line_no, "unknown key '" + key + "'");
    }
    if (entries.contains(key)) {
      fail(filename, line_no, "duplicate key '" + key + "'");
    }
    entries[key] = Entry{value, line_no};
  }

  for (const auto& key : kKnownKeys) {
    if (!entries.contains(key)) {
      throw ConfigError(filename + ": missing required key '" + key + "'");
    }
  }

  const double mu_e = parse_number(filename, entries["mu_e"], "mu_e");
  const double var_e = parse_number(filename, entries["var_e"], "var_e");
  const double mu_d = parse_number(filename, entries["mu_d"], "mu_d");
  const double var_d = parse_number(filename, entries["var_d"], "var_d");
  const double noise_var =
      parse_number(filename, entries["noise_var"], "noise_var");
  const double constraint_value =
      parse_number(filename, entries["constraint_value"], "constraint_value");
  const std::string& mode = entries["constraint"].value;

  try {
    PowerConstraint constraint = [&] {
      if (mode == "soft") {
        return PowerConstraint::soft(constraint_value);
      }
      if (mode == "hard") {
        return PowerConstraint::hard(constraint_value);
      }
      fail(filename, entries["constraint"].line,
           "constraint must be \"soft\" or \"hard\", got '" + mode + "'");
    }();
    return GameParams(GaussianPrior(mu_e, var_e), GaussianPrior(mu_d, var_d),
                      noise_var, constraint);
  } catch (const std::invalid_argument& e) {
    throw ConfigError(filename + ": " + e.what());
  }
}

GameParams load_config(const std::string& path) {
  std::ifstream in(path);
  if (!in) {
    throw ConfigError(path + ": cannot open config file");
  }
  return parse_config(in, path);
}

std::string csv_number(double value) {
  char buffer[40];
  std::snprintf(buffer, sizeof buffer, "%.16e", value);
  return buffer;
}

}  // namespace siggame::io
