#pragma once

#include <string>
#include <vector>

#include <nlohmann/json.hpp>

#include "mould/ratfun.hpp"

namespace mould {

struct Failure {
  std::string where;
  RatFun delta;
};

// One named condition inside a check. Conditions with required == false are
// reported but do not decide the overall verdict.
struct Condition {
  std::string name;
  bool pass = true;
  bool required = true;
  std::vector<Failure> failures;

  void fail(std::string where, RatFun delta);
};

struct CheckReport {
  std::string name;
  nlohmann::json params = nlohmann::json::object();
  bool pass = true;
  std::vector<Failure> failures;
  std::vector<Condition> conditions;
  double duration_seconds = 0;

  Condition& condition(const std::string& cname, bool required = true);
  const Condition* find(const std::string& cname) const;
  // Recomputes pass and the flat failure list from the conditions.
  void finalize();
};

}  // namespace mould
