#pragma once

#include <cstddef>
#include <string>
#include <utility>
#include <vector>

namespace tzhu {

// Outcome of an identity or invariant suite.
struct CheckReport {
  CheckReport() = default;
  explicit CheckReport(std::string n) : name(std::move(n)) {}

  std::string name;
  std::size_t checked = 0;
  std::size_t skipped = 0;  // cases outside the computable range
  std::size_t failure_count = 0;
  std::vector<std::string> failures;  // first few, for diagnosis
  std::string note;

  bool passed() const { return failure_count == 0; }
  void pass() { ++checked; }
  void fail(std::string what) {
    ++checked;
    ++failure_count;
    if (failures.size() < 10) failures.push_back(std::move(what));
  }
  void expect(bool ok, const std::string& what) { ok ? pass() : fail(what); }
};

}  // namespace tzhu
