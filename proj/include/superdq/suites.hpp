#pragma once
#include <map>
#include <string>
#include <vector>

#include "superdq/exact.hpp"
#include "superdq/report.hpp"
#include "superdq/structure_constants.hpp"

namespace superdq {

struct RunConfig {
  std::string suite = "all";
  int m = 2;
  int n = 2;
  double a0 = 1.0;
  cplx alpha = 1.0;
  int N = 64;
  double L = 8.0;
  std::map<std::string, double> tol;
  bool exact = false;
  bool parallel = false;
  std::string json_path;

  void validate() const;  // throws std::invalid_argument
  double tolerance(const std::string& key) const;
};

// Keys accepted by --tol-<key>, with defaults.
const std::map<std::string, double>& default_tolerances();
const std::vector<std::string>& suite_names();

// Written-out n = 1, 2 product tables, l = i alpha / (a0 (1+alpha)^2).
StructureConstants<QI> reference_table(int n, const QI& a0, const QI& alpha);

Report run_suite(const std::string& suite, const RunConfig& cfg);
Report run_selected(const RunConfig& cfg);

// Lambda, factor sets and a canonical basis as JSON files in `dir`; returns the written paths.
std::vector<std::string> dump_tables(const RunConfig& cfg, const std::string& dir);

}  // namespace superdq
