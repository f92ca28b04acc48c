#include "tmcg/report.hpp"

#include <algorithm>
#include <sstream>

#include "json.hpp"

namespace tmcg {

std::string to_string(Status s) {
  switch (s) {
    case Status::Pass:
      return "pass";
    case Status::Fail:
      return "fail";
    case Status::Skip:
      return "skip";
  }
  return {};
}

std::vector<ReportEntry> Report::entries() const {
  std::vector<ReportEntry> out = entries_;
  std::stable_sort(out.begin(), out.end(), [](const ReportEntry& a, const ReportEntry& b) { return a.name < b.name; });
  return out;
}

void Report::check(const std::string& name, const std::string& expected, const std::string& actual, const std::string& anchor) {
  add({name, expected == actual ? Status::Pass : Status::Fail, expected, actual, anchor});
}

void Report::merge(const Report& other) { entries_.insert(entries_.end(), other.entries_.begin(), other.entries_.end()); }

int Report::count(Status s) const {
  return static_cast<int>(std::count_if(entries_.begin(), entries_.end(), [s](const ReportEntry& e) { return e.status == s; }));
}

std::string Report::to_json() const {
  nlohmann::ordered_json doc;
  doc["suite"] = suite_;
  doc["entries"] = nlohmann::ordered_json::array();
  for (const auto& e : entries())
    doc["entries"].push_back({{"name", e.name},
                              {"status", to_string(e.status)},
                              {"expected", e.expected},
                              {"actual", e.actual},
                              {"paper_anchor", e.paper_anchor}});
  doc["summary"] = {{"pass", count(Status::Pass)}, {"fail", count(Status::Fail)}, {"skip", count(Status::Skip)}};
  return doc.dump(2) + "\n";
}

std::string Report::to_text() const {
  std::ostringstream os;
  for (const auto& e : entries()) {
    std::string tag = to_string(e.status);
    std::transform(tag.begin(), tag.end(), tag.begin(), [](unsigned char c) { return static_cast<char>(std::toupper(c)); });
    os << tag << "  " << e.name << "  expected=" << e.expected << " actual=" << e.actual << '\n';
  }
  os << "suite " << suite_ << ": " << count(Status::Pass) << " pass, " << count(Status::Fail) << " fail, " << count(Status::Skip)
     << " skip\n";
  return os.str();
}

}  // namespace tmcg
