#pragma once

#include <string>
#include <vector>

namespace qec {

// Deterministic check report: one line per assertion, stable ordering.
struct CheckLine {
  std::string id;
  bool ok = false;
  std::string detail;
};

struct Report {
  std::vector<CheckLine> lines;

  bool ok() const {
    for (const auto& l : lines)
      if (!l.ok) return false;
    return true;
  }
  void add(const std::string& id, bool good, const std::string& detail = "") {
    lines.push_back({id, good, detail});
  }
  std::string text() const {
    std::string out;
    for (const auto& l : lines) {
      out += l.ok ? "[pass] " : "[FAIL] ";
      out += l.id;
      if (!l.detail.empty()) out += ": " + l.detail;
      out += "\n";
    }
    return out;
  }
  std::string kv() const {
    std::string out;
    for (const auto& l : lines)
      out += l.id + "=" + (l.ok ? "pass" : "fail") + "\n";
    return out;
  }
  const CheckLine* first_failure() const {
    for (const auto& l : lines)
      if (!l.ok) return &l;
    return nullptr;
  }
};

}  // namespace qec
