#pragma once

#include <string>
#include <utility>
#include <vector>

#include "weylgb/check.hpp"

namespace weylgb::cli {

enum class Format { Text, Structured };

/// Everything one CLI run prints: run metadata, named results and checks.
struct Report {
  std::vector<std::pair<std::string, std::string>> run;
  std::vector<std::pair<std::string, std::string>> results;
  CheckList checks;

  void meta(std::string key, std::string value) { run.emplace_back(std::move(key), std::move(value)); }
  void result(std::string key, std::string value) { results.emplace_back(std::move(key), std::move(value)); }
  bool passed() const { return checks.all_passed(); }

  std::string render(Format format) const;
};

}  // namespace weylgb::cli
