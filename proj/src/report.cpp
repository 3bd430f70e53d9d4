#include "superdq/report.hpp"

#include <cstdio>
#include <sstream>

#include "json.hpp"

namespace superdq {

const char* status_name(Status s) {
  switch (s) {
    case Status::Pass: return "pass";
    case Status::Fail: return "fail";
    case Status::Conflict: return "conflict";
  }
  return "?";
}

int Report::failures() const {
  int k = 0;
  for (auto& c : checks) k += c.status == Status::Fail;
  return k;
}

int Report::conflicts() const {
  int k = 0;
  for (auto& c : checks) k += c.status == Status::Conflict;
  return k;
}

std::string Report::json(bool with_runtime) const {
  nlohmann::ordered_json j;
  j["checks"] = nlohmann::ordered_json::array();
  for (auto& c : checks) {
    nlohmann::ordered_json r{{"suite", c.suite},       {"name", c.name},         {"anchor", c.anchor},
                             {"status", status_name(c.status)}, {"measured", c.measured}, {"expected", c.expected},
                             {"tolerance", c.tolerance}};
    if (with_runtime) r["runtime"] = c.runtime;
    if (!c.detail.empty()) r["detail"] = c.detail;
    j["checks"].push_back(r);
  }
  j["failures"] = failures();
  j["conflicts"] = conflicts();
  return j.dump(2);
}

std::string Report::text() const {
  std::ostringstream os;
  for (auto& c : checks) {
    os << "[" << status_name(c.status) << "] " << c.suite << "/" << c.name << ": measured " << c.measured
       << ", expected " << c.expected;
    if (c.tolerance > 0) os << " (tol " << fmt(c.tolerance) << ")";
    if (!c.detail.empty()) os << " -- " << c.detail;
    os << "\n";
  }
  os << checks.size() << " checks, " << failures() << " failed, " << conflicts() << " conflicts\n";
  return os.str();
}

std::string fmt(double v) {
  char b[64];
  std::snprintf(b, sizeof b, "%.6g", v);
  return b;
}

std::string fmt(double re, double im) {
  char b[96];
  std::snprintf(b, sizeof b, "%.6g%+.6gi", re, im);
  return b;
}

}  // namespace superdq
