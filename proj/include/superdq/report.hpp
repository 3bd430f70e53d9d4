#pragma once
#include <string>
#include <vector>

namespace superdq {

// conflict: a nominal closed form disagrees with an exact computation that is itself verified
enum class Status { Pass, Fail, Conflict };
const char* status_name(Status s);

struct CheckRecord {
  std::string suite;
  std::string name;
  std::string anchor;  // the property being checked
  Status status = Status::Pass;
  std::string measured;
  std::string expected;
  double tolerance = 0;
  double runtime = 0;  // seconds
  std::string detail;
};

struct Report {
  std::vector<CheckRecord> checks;
  void append(const Report& o) { checks.insert(checks.end(), o.checks.begin(), o.checks.end()); }
  int failures() const;
  int conflicts() const;
  int exit_code() const { return failures() ? 1 : 0; }
  std::string json(bool with_runtime = true) const;
  std::string text() const;
};

std::string fmt(double v);
std::string fmt(double re, double im);

}  // namespace superdq
