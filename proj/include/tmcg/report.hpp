// Pass/fail reports produced by the verification suites.
#pragma once

#include <string>
#include <vector>

namespace tmcg {

enum class Status { Pass, Fail, Skip };
std::string to_string(Status s);

struct ReportEntry {
  std::string name;
  Status status = Status::Pass;
  std::string expected;
  std::string actual;
  std::string paper_anchor;  ///< the identity or count being checked
};

class Report {
 public:
  explicit Report(std::string suite) : suite_(std::move(suite)) {}

  const std::string& suite() const { return suite_; }
  /// Entries sorted by name.
  std::vector<ReportEntry> entries() const;
  void add(ReportEntry e) { entries_.push_back(std::move(e)); }
  /// Pass iff actual == expected.
  void check(const std::string& name, const std::string& expected, const std::string& actual, const std::string& anchor);
  void merge(const Report& other);

  int count(Status s) const;
  bool any_fail() const { return count(Status::Fail) > 0; }

  std::string to_json() const;
  std::string to_text() const;

 private:
  std::string suite_;
  std::vector<ReportEntry> entries_;
};

}  // namespace tmcg
