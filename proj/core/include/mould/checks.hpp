#pragma once

#include <cstdint>
#include <functional>
#include <string>
#include <vector>

#include "mould/bimould.hpp"
#include "mould/dshuffle.hpp"
#include "mould/report.hpp"

namespace mould {

// Zero for max_length or trials means "use the default of the check".
struct CheckSpec {
  std::string name;
  int max_length = 0;
  int degree = 2;
  int trials = 0;
  std::uint64_t seed = 1;
  HarmonicRule harmonic = HarmonicRule::symmetrized;
  ParityMode parity = ParityMode::homogeneity;
};

// Parameters after defaults are filled in; what a check body receives.
struct CheckParams {
  int max_length;
  int degree;
  int trials;
  std::uint64_t seed;
  HarmonicRule harmonic;
  ParityMode parity;
};

struct CheckInfo {
  std::string name;
  std::string module;
  std::string summary;
  int default_length;
  int default_trials;
  std::function<void(const CheckParams&, CheckReport&)> body;
};

const std::vector<CheckInfo>& check_registry();
const CheckInfo* find_check(const std::string& name);

// Throws Error(Errc::unknown_check) for unregistered names.
CheckReport run_check(const CheckSpec& spec);
// Runs every registered check (or the subset named) with shared parameters.
std::vector<CheckReport> run_checks(const std::vector<std::string>& names, const CheckSpec& base);

// Helpers shared by the check bodies.
namespace checks {

// Records in condition cname the lowest length where a and b differ.
bool expect_equal(CheckReport& report, const std::string& cname, const std::string& label,
                  const Bimould& a, const Bimould& b);
bool expect_equal(CheckReport& report, const std::string& cname, const std::string& label,
                  const RatFun& a, const RatFun& b);
void expect_true(CheckReport& report, const std::string& cname, const std::string& label, bool ok,
                 const RatFun& delta = RatFun(1));
// Copies the conditions of a predicate report under a prefix.
void absorb(CheckReport& report, const std::string& prefix, const CheckReport& sub);

// Per-trial seed derived from the check seed, the check name and the trial.
std::uint64_t trial_seed(const CheckParams& p, const std::string& salt, int trial);

void register_exactalg(std::vector<CheckInfo>& out);
void register_bimould(std::vector<CheckInfo>& out);
void register_flexion(std::vector<CheckInfo>& out);
void register_dshuffle(std::vector<CheckInfo>& out);
void register_constructions(std::vector<CheckInfo>& out);

}  // namespace checks

}  // namespace mould
