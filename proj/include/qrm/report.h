#pragma once

#include <cstddef>
#include <string>
#include <vector>

namespace qrm {

// Outcome of a verification sweep. Failures keep at most kMaxWitnesses messages.
struct CheckReport {
  static constexpr std::size_t kMaxWitnesses = 16;

  std::string label;
  int m = 0;
  std::size_t checks = 0;
  std::size_t failure_count = 0;
  std::vector<std::string> failures;
  double seconds = 0.0;
  std::string note;

  bool passed() const { return failure_count == 0 && checks > 0; }
  void expect(bool ok, const std::string& what) {
    ++checks;
    if (!ok) fail(what);
  }
  void fail(const std::string& what) {
    ++failure_count;
    if (failures.size() < kMaxWitnesses) failures.push_back(what);
  }
  void merge(const CheckReport& other) {
    checks += other.checks;
    failure_count += other.failure_count;
    for (const auto& f : other.failures) {
      if (failures.size() < kMaxWitnesses) failures.push_back(f);
    }
  }
};

}  // namespace qrm
