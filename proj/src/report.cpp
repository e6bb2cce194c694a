#include "coinv/report.hpp"

namespace coinv {

void Check::fail(const std::string& detail) {
  ++checks_;
  ++failures_;
  if (details_.size() < kMaxDetails) details_.push_back(detail);
}

void Check::merge(const Check& other) {
  checks_ += other.checks_;
  failures_ += other.failures_;
  for (const auto& d : other.details_) {
    if (details_.size() < kMaxDetails) details_.push_back(d);
  }
  seconds += other.seconds;
}

bool Report::ok() const {
  for (const Check& c : checks) {
    if (!c.ok()) return false;
  }
  return true;
}

void Report::append(const Report& other) {
  checks.insert(checks.end(), other.checks.begin(), other.checks.end());
  tables.insert(tables.end(), other.tables.begin(), other.tables.end());
}

}  // namespace coinv
