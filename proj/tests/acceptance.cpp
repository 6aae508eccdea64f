// Acceptance run: one PASS/FAIL line per criterion.
//   acceptance                 all ten criteria
//   acceptance --criterion N   only criterion N
#include <cstdlib>
#include <iostream>
#include <string>
#include <vector>

#include "mould/checks.hpp"
#include "mould/error.hpp"

using namespace mould;

namespace {

struct Run {
  std::string check;
  int max_length = 0;
  int trials = 0;
  HarmonicRule harmonic = HarmonicRule::symmetrized;
  bool expect_pass = true;
};

struct Criterion {
  int number;
  std::string title;
  std::vector<Run> runs;
  // Reported alongside the verdict but never part of it.
  std::vector<Run> informational;
};

std::vector<Criterion> criteria() {
  return {
      {1, "chi_B(f) under swap o anti matches adari(par) via the right dilator series, f = x1^2, x1^4, lengths <= 4",
       {{"thm-main", 4}}, {}},
      {2, "chi_B(x1^2), chi_B(x1^4) satisfy sharp-shuffle and the harmonic equations to length 4",
       {{"cor-ds-lift", 4}}, {}},
      {3, "left series, right series and exp(ad ari L) agree: 5 random L x 3 random B, lengths <= 4",
       {{"thm-dilator-series", 4, 5}}, {}},
      {4, "der is a derivation; der commutes with the dilator series and exp(ad ari L) as stated",
       {{"der-derivation", 4}, {"lemma-der-series", 4}, {"lemma-der-adjoint", 4}}, {}},
      {5, "Ihara bracket via axit and ila, Schneps identities, push identity, flat intertwines ari",
       {{"ihara-axit", 4},
        {"ihara-ila", 4},
        {"schneps-amit", 4},
        {"schneps-anit", 4},
        {"push-identity", 4},
        {"ari-flat-ihara", 4}},
       {}},
      {6, "darapir closed form equals anti(psi0)/2 to length 4; pic is push-neutral to length 5",
       {{"darapir", 4}, {"pic-push-neutral", 5}}, {}},
      {7, "psi0 lies in ds to length 4; psi0((x1)*(x2)) = 0, literal rule leaves 1/(x1 x2)",
       {{"ds-psi0", 4}, {"psi0-harmonic-base", 2}}, {}},
      {8, "Witt identity {s_m, s_n} = (m - n) s_{m+n}, 1 <= m, n <= 4",
       {{"witt-identity", 4}}, {{"witt-identity-reversed", 4}}},
      {9, "ari antisymmetry and Jacobi, mu algebra, invmu and dilator round trips, sharp/flat, ls^sharp in V",
       {{"ari-antisymmetry", 3},
        {"ari-jacobi", 3},
        {"mu-algebra", 4},
        {"invmu-roundtrip", 4},
        {"dilator-roundtrip", 4},
        {"sharp-flat", 4},
        {"ls-sharp-in-V", 4}},
       {}},
      {10, "negative controls: x1^3 parity, x1 x2 shuffle witness, literal harmonic rule not commutative",
       {{"ls-negative-controls", 3},
        {"harmonic-commutativity", 3, 0, HarmonicRule::literal, false}},
       {}},
  };
}

std::string describe_run(const Run& run, const CheckReport& r) {
  std::string s = run.check;
  if (run.harmonic == HarmonicRule::literal) s += " [literal]";
  s += r.pass ? " pass" : " fail";
  if (!run.expect_pass) s += " (expected fail)";
  return s;
}

bool run_criterion(const Criterion& c) {
  bool ok = true;
  std::vector<std::string> parts;
  std::vector<std::string> details;
  auto exec = [&](const Run& run) {
    CheckSpec spec;
    spec.name = run.check;
    spec.max_length = run.max_length;
    spec.trials = run.trials;
    spec.harmonic = run.harmonic;
    CheckReport r = run_check(spec);
    for (const auto& f : r.failures) {
      std::string delta = f.delta.to_string();
      if (delta.size() > 160) delta = delta.substr(0, 160) + " ...";
      details.push_back(run.check + ": " + f.where + ": " + delta);
    }
    return std::pair{r, describe_run(run, r)};
  };
  for (const auto& run : c.runs) {
    auto [r, text] = exec(run);
    if (r.pass != run.expect_pass) ok = false;
    parts.push_back(text);
  }
  std::vector<std::string> notes;
  for (const auto& run : c.informational) notes.push_back(exec(run).second);

  std::cout << (ok ? "PASS" : "FAIL") << "  criterion " << c.number << ": " << c.title << "\n";
  std::cout << "      checks:";
  for (const auto& p : parts) std::cout << " " << p << ";";
  std::cout << "\n";
  if (!notes.empty()) {
    std::cout << "      informational:";
    for (const auto& n : notes) std::cout << " " << n << ";";
    std::cout << "\n";
  }
  if (!ok) {
    for (std::size_t i = 0; i < details.size() && i < 3; ++i) std::cout << "      " << details[i] << "\n";
  }
  return ok;
}

}  // namespace

int main(int argc, char** argv) {
  int only = 0;
  for (int i = 1; i < argc; ++i) {
    std::string arg = argv[i];
    if (arg == "--criterion" && i + 1 < argc) {
      only = std::atoi(argv[++i]);
      if (only < 1 || only > 10) {
        std::cerr << "criterion must be 1..10\n";
        return 2;
      }
    } else {
      std::cerr << "usage: acceptance [--criterion N]\n";
      return 2;
    }
  }
  bool all_ok = true;
  try {
    for (const auto& c : criteria()) {
      if (only != 0 && c.number != only) continue;
      all_ok = run_criterion(c) && all_ok;
    }
  } catch (const Error& e) {
    std::cerr << "error: " << e.what() << "\n";
    return 2;
  }
  return all_ok ? 0 : 1;
}
