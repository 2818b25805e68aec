#include "report.hpp"

#include <nlohmann/json.hpp>
#include <sstream>

namespace weylgb::cli {
namespace {

std::string render_text(const Report& r) {
  std::ostringstream os;
  for (const auto& [k, v] : r.run) os << "# " << k << ": " << v << "\n";
  for (const auto& [k, v] : r.results) {
    if (v.find('\n') == std::string::npos) {
      os << k << ": " << v << "\n";
    } else {
      os << k << ":\n";
      std::istringstream lines(v);
      for (std::string line; std::getline(lines, line);) os << "  " << line << "\n";
    }
  }
  std::size_t ok = 0;
  for (const Check& c : r.checks.checks) {
    ok += c.passed;
    os << (c.passed ? "[pass] " : "[FAIL] ") << c.name;
    if (!c.detail.empty()) os << " (" << c.detail << ")";
    os << "\n";
  }
  if (!r.checks.checks.empty()) os << ok << "/" << r.checks.checks.size() << " checks passed\n";
  return os.str();
}

std::string render_structured(const Report& r) {
  nlohmann::ordered_json doc;
  doc["run"] = nlohmann::ordered_json::object();
  for (const auto& [k, v] : r.run) doc["run"][k] = v;
  doc["results"] = nlohmann::ordered_json::object();
  for (const auto& [k, v] : r.results) doc["results"][k] = v;
  doc["checks"] = nlohmann::ordered_json::array();
  for (const Check& c : r.checks.checks)
    doc["checks"].push_back({{"name", c.name}, {"status", c.passed ? "pass" : "fail"}, {"detail", c.detail}});
  doc["status"] = r.passed() ? "pass" : "fail";
  return doc.dump(2) + "\n";
}

}  // namespace

std::string Report::render(Format format) const {
  return format == Format::Text ? render_text(*this) : render_structured(*this);
}

}  // namespace weylgb::cli
