#pragma once

#include <cstdint>
#include <ostream>
#include <string>
#include <utility>
#include <vector>

#include "gwp/alphabet.hpp"

namespace gwpcli {

/// One output line: ordered key=value fields.
class Record {
 public:
  Record& add(std::string key, std::string value);
  Record& add(std::string key, const char* value) { return add(std::move(key), std::string(value)); }
  Record& add(std::string key, bool value) { return add(std::move(key), std::string(value ? "1" : "0")); }
  Record& add(std::string key, std::uint64_t value) { return add(std::move(key), std::to_string(value)); }
  Record& add(std::string key, std::int64_t value) { return add(std::move(key), std::to_string(value)); }
  Record& add(std::string key, int value) { return add(std::move(key), std::to_string(value)); }
  Record& add(std::string key, unsigned value) { return add(std::move(key), std::to_string(value)); }
  Record& add(std::string key, double value);
  /// Words are always quoted.
  Record& word(std::string key, const gwp::Alphabet& alphabet, gwp::WordView w);

  const std::vector<std::pair<std::string, std::string>>& fields() const noexcept { return fields_; }
  const std::string* find(const std::string& key) const;

 private:
  std::vector<std::pair<std::string, std::string>> fields_;
  std::vector<bool> quoted_;
  friend class Reporter;
};

/// Writes records as `key=value` lines, or as indented blocks with --pretty.
class Reporter {
 public:
  Reporter(std::ostream& out, bool pretty) : out_(out), pretty_(pretty) {}
  void emit(const Record& r);
  std::ostream& stream() noexcept { return out_; }

 private:
  std::ostream& out_;
  bool pretty_;
};

/// Quotes a value when it is empty or contains blanks, quotes or '='.
std::string quote(const std::string& value, bool force = false);

}  // namespace gwpcli
