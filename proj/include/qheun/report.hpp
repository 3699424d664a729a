#ifndef QHEUN_REPORT_HPP
#define QHEUN_REPORT_HPP

#include <string>
#include <utility>
#include <vector>

namespace qheun {

enum class Status { Pass, Fail };

inline const char* to_string(Status s) { return s == Status::Pass ? "pass" : "fail"; }

/// One verification outcome. Inputs are rendered exactly ("p/q").
struct CheckRecord {
  std::string name;
  std::vector<std::pair<std::string, std::string>> inputs;
  Status status = Status::Pass;
  std::string witness;

  [[nodiscard]] bool passed() const { return status == Status::Pass; }
};

/// Ordered list of check records.
struct Report {
  std::vector<CheckRecord> records;

  void add(CheckRecord r) { records.push_back(std::move(r)); }
  void add(std::string name, bool ok, std::string witness = {},
           std::vector<std::pair<std::string, std::string>> inputs = {}) {
    records.push_back({std::move(name), std::move(inputs), ok ? Status::Pass : Status::Fail, std::move(witness)});
  }
  void append(const Report& other) { records.insert(records.end(), other.records.begin(), other.records.end()); }

  [[nodiscard]] std::size_t passed() const {
    std::size_t n = 0;
    for (const auto& r : records) n += r.passed() ? 1 : 0;
    return n;
  }
  [[nodiscard]] std::size_t failed() const { return records.size() - passed(); }
  [[nodiscard]] bool ok() const { return failed() == 0; }

  /// First failing record, or nullptr.
  [[nodiscard]] const CheckRecord* first_failure() const {
    for (const auto& r : records)
      if (!r.passed()) return &r;
    return nullptr;
  }
};

}  // namespace qheun

#endif  // QHEUN_REPORT_HPP
