#pragma once

#include <sstream>
#include <string>

#include <gtest/gtest.h>

#include "mould/checks.hpp"

namespace mould::test_util {

inline std::string param_name(const ::testing::TestParamInfo<std::string>& info) {
  std::string s = info.param;
  for (auto& c : s) {
    if (c == '-') c = '_';
  }
  return s;
}

inline std::string describe(const CheckReport& r) {
  std::ostringstream os;
  os << r.name << (r.pass ? " passed" : " failed");
  for (const auto& f : r.failures) os << "\n  " << f.where << ": " << f.delta.to_string();
  return os.str();
}

inline CheckReport run_named(const std::string& name, int max_length = 0, int trials = 0) {
  CheckSpec spec;
  spec.name = name;
  spec.max_length = max_length;
  spec.trials = trials;
  return run_check(spec);
}

}  // namespace mould::test_util
