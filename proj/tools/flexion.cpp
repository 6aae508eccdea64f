#include <iostream>
#include <optional>
#include <string>

#include <CLI11.hpp>

#include "mould/checks.hpp"
#include "mould/constructions.hpp"
#include "mould/dshuffle.hpp"
#include "mould/error.hpp"
#include "mould/io.hpp"

using namespace mould;

namespace {

constexpr int kPass = 0;
constexpr int kIdentityFailure = 1;
constexpr int kUsage = 2;

void print_report(const CheckReport& r, std::ostream& os) {
  os << (r.pass ? "PASS " : "FAIL ") << r.name << "  (" << r.duration_seconds << " s)\n";
  for (const auto& c : r.conditions) {
    if (c.pass) continue;
    os << "  " << (c.required ? "failed: " : "note:   ") << c.name << "\n";
    for (const auto& f : c.failures) os << "    at " << f.where << ": " << f.delta.to_string() << "\n";
  }
}

Bimould load_lower(const std::string& path) {
  Bimould f = bimould_from_json(read_json_file(path));
  if (!f.satisfies_layer(Layer::u_const)) {
    throw Error(Errc::layer_mismatch, path + ": expected a function of the x = v variables only");
  }
  f.set_layer(Layer::u_const);
  return f;
}

// Components above the input truncation are taken to be zero.
Bimould extended(const Bimould& f, int maxlen) {
  Bimould out(maxlen, f.layer(), f.weight());
  for (int r = 0; r <= std::min(maxlen, f.truncation()); ++r) out.set(r, f[r]);
  return out;
}

}  // namespace

int main(int argc, char** argv) {
  CLI::App app{"Exact verification of flexion identities on bimoulds"};
  app.require_subcommand(1);

  CheckSpec spec;
  std::string target;
  std::string harmonic = "symmetrized";
  std::string parity = "homogeneity";
  bool json = false;
  auto* verify = app.add_subcommand("verify", "Run a named check or all of them");
  verify->add_option("check", target, "Check name, or all")->required();
  verify->add_option("--max-length", spec.max_length, "Truncation length")->check(CLI::Range(1, kMaxLength));
  verify->add_option("--degree", spec.degree, "Degree bound of random numerators")->check(CLI::NonNegativeNumber);
  verify->add_option("--trials", spec.trials, "Number of random trials")->check(CLI::PositiveNumber);
  verify->add_option("--seed", spec.seed, "Random seed");
  verify->add_option("--harmonic", harmonic, "Harmonic contraction rule")
      ->check(CLI::IsMember({"symmetrized", "literal"}));
  verify->add_option("--parity", parity, "Parity reading")->check(CLI::IsMember({"literal", "homogeneity"}));
  verify->add_flag("--json", json, "Print JSON reports");

  auto* list = app.add_subcommand("list", "List the registered checks");

  std::string object;
  int length = 0;
  auto* show = app.add_subcommand("show", "Print a named bimould");
  show->add_option("object", object, "psi0, pic, diripar, darapir or s_d")
      ->required()
      ->check(CLI::IsMember({"psi0", "pic", "diripar", "darapir", "s_d"}));
  show->add_option("--length", length, "Truncation length (the index d for s_d)")
      ->required()
      ->check(CLI::Range(1, kMaxLength));
  show->add_flag("--json", json, "Print JSON");

  std::string input, psi_file, output;
  int target_length = 0;
  auto* lift = app.add_subcommand("lift", "Lift a length-homogeneous f by chi_B or chi_psi");
  lift->add_option("--input", input, "Bimould JSON file")->required();
  lift->add_option("--target-length", target_length, "Length to lift to")->required()->check(CLI::Range(1, kMaxLength));
  lift->add_option("--psi", psi_file, "Bimould JSON replacing psi0");
  lift->add_option("--output", output, "Output file")->required();

  std::string space;
  int member_length = 0;
  auto* membership = app.add_subcommand("check-membership", "Test ls, ds or mantar invariance");
  membership->add_option("space", space, "ls, ds or V")->required()->check(CLI::IsMember({"ls", "ds", "V"}));
  membership->add_option("--input", input, "Bimould JSON file")->required();
  membership->add_option("--max-length", member_length, "Highest length tested")->required()->check(CLI::Range(1, kMaxLength));
  membership->add_option("--harmonic", harmonic, "Harmonic contraction rule")
      ->check(CLI::IsMember({"symmetrized", "literal"}));
  membership->add_option("--parity", parity, "Parity reading")->check(CLI::IsMember({"literal", "homogeneity"}));
  membership->add_flag("--json", json, "Print JSON report");

  try {
    app.parse(argc, argv);
  } catch (const CLI::ParseError& e) {
    int code = app.exit(e);
    return code == 0 ? kPass : kUsage;
  }

  try {
    spec.harmonic = *parse_harmonic_rule(harmonic);
    spec.parity = *parse_parity_mode(parity);

    if (*list) {
      for (const auto& c : check_registry()) {
        std::cout << c.name << "  [" << c.module << "]  " << c.summary << "\n";
      }
      return kPass;
    }

    if (*verify) {
      std::vector<std::string> names;
      if (target != "all") names.push_back(target);
      auto reports = run_checks(names, spec);
      bool pass = true;
      Json out = Json::array();
      for (const auto& r : reports) {
        pass = pass && r.pass;
        if (json) {
          out.push_back(to_json(r));
        } else {
          print_report(r, std::cout);
        }
      }
      if (json) std::cout << (reports.size() == 1 ? out[0] : out).dump(2) << "\n";
      return pass ? kPass : kIdentityFailure;
    }

    if (*show) {
      Bimould m;
      if (object == "psi0") m = psi0(length);
      if (object == "pic") m = pic(length);
      if (object == "diripar") m = diri_par(length);
      if (object == "darapir") m = darapir_closed_form(length);
      if (object == "s_d") m = witt_generator(length, length);
      if (json) {
        std::cout << to_json(m).dump(2) << "\n";
      } else {
        std::cout << m.to_string();
      }
      return kPass;
    }

    if (*lift) {
      Bimould f = extended(load_lower(input), target_length);
      Bimould lifted = psi_file.empty()
                           ? chi_B(f, target_length)
                           : chi_psi(extended(load_lower(psi_file), target_length), f, target_length);
      write_json_file(output, to_json(lifted));
      return kPass;
    }

    if (*membership) {
      Bimould f = bimould_from_json(read_json_file(input));
      if (member_length > f.truncation()) {
        throw Error(Errc::truncation_exceeded, "--max-length exceeds the input truncation");
      }
      CheckReport r;
      if (space == "ls") r = is_ls(load_lower(input), member_length);
      if (space == "ds") r = is_ds(load_lower(input), member_length, spec.parity, spec.harmonic);
      if (space == "V") r = is_mantar_invariant(f, member_length);
      if (json) {
        std::cout << to_json(r).dump(2) << "\n";
      } else {
        print_report(r, std::cout);
      }
      return r.pass ? kPass : kIdentityFailure;
    }
  } catch (const Error& e) {
    std::cerr << "error: " << e.what() << "\n";
    return kUsage;
  }
  return kUsage;
}
