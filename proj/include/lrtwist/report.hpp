#pragma once

// Check reports: one item per named condition, each carrying a pass flag,
// the total number of violating basis tuples, and the lexicographically
// first witness rendered as text.

#include <cstdint>
#include <sstream>
#include <string>
#include <vector>

namespace lrtwist {

struct CheckItem {
  std::string label;
  bool pass = true;
  std::int64_t violations = 0;
  std::string witness;  // empty when pass
};

struct Report {
  std::string subject;
  std::vector<CheckItem> items;

  bool ok() const {
    for (const auto& it : items)
      if (!it.pass) return false;
    return true;
  }

  void add(CheckItem item) { items.push_back(std::move(item)); }

  void merge(const Report& other, const std::string& prefix = "") {
    for (CheckItem it : other.items) {
      if (!prefix.empty()) it.label = prefix + it.label;
      items.push_back(std::move(it));
    }
  }

  std::string to_text() const {
    std::size_t w = 0;
    for (const auto& it : items) w = std::max(w, it.label.size());
    std::ostringstream os;
    os << subject << ": " << (ok() ? "PASS" : "FAIL") << " (" << items.size()
       << (items.size() == 1 ? " check)\n" : " checks)\n");
    for (const auto& it : items) {
      os << "  " << (it.pass ? "[pass] " : "[FAIL] ") << it.label
         << std::string(w - it.label.size() + 2, ' ') << "violations=" << it.violations;
      if (!it.pass && !it.witness.empty()) os << "  first: " << it.witness;
      os << "\n";
    }
    return os.str();
  }
};

// Raised by builders handed data that fails its validity checks.
struct build_error : std::runtime_error {
  Report report;
  explicit build_error(Report r)
      : std::runtime_error(r.subject + " failed validation:\n" + r.to_text()),
        report(std::move(r)) {}
};

}  // namespace lrtwist
