#pragma once

#include <string>
#include <vector>

namespace coinv {

/// Tally of one family of exact checks. Only the first few failures keep
/// their details.
class Check {
 public:
  Check(std::string name, std::string anchor) : name_(std::move(name)), anchor_(std::move(anchor)) {}

  void pass(long count = 1) { checks_ += count; }
  void fail(const std::string& detail);
  void expect(bool ok, const std::string& detail) { ok ? pass() : fail(detail); }
  void merge(const Check& other);

  const std::string& name() const { return name_; }
  /// Where the checked statement comes from, in words.
  const std::string& anchor() const { return anchor_; }
  long checks() const { return checks_; }
  long failures() const { return failures_; }
  const std::vector<std::string>& details() const { return details_; }
  bool ok() const { return failures_ == 0; }

  double seconds = 0;

 private:
  static constexpr std::size_t kMaxDetails = 10;
  std::string name_;
  std::string anchor_;
  long checks_ = 0;
  long failures_ = 0;
  std::vector<std::string> details_;
};

struct Table {
  std::string title;
  std::vector<std::string> header;
  std::vector<std::vector<std::string>> rows;
};

struct Report {
  std::string suite;
  std::vector<Check> checks;
  std::vector<Table> tables;

  bool ok() const;
  void append(const Report& other);
};

}  // namespace coinv
