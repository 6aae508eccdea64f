#include "mould/report.hpp"

namespace mould {

void Condition::fail(std::string where, RatFun delta) {
  pass = false;
  failures.push_back({std::move(where), std::move(delta)});
}

Condition& CheckReport::condition(const std::string& cname, bool required) {
  for (auto& c : conditions) {
    if (c.name == cname) return c;
  }
  conditions.push_back({cname, true, required, {}});
  return conditions.back();
}

const Condition* CheckReport::find(const std::string& cname) const {
  for (const auto& c : conditions) {
    if (c.name == cname) return &c;
  }
  return nullptr;
}

void CheckReport::finalize() {
  pass = true;
  failures.clear();
  for (const auto& c : conditions) {
    if (!c.required || c.pass) continue;
    pass = false;
    for (const auto& f : c.failures) failures.push_back({c.name + ": " + f.where, f.delta});
  }
}

}  // namespace mould
