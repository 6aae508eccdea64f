#include "mould/checks.hpp"

#include <chrono>

#include "mould/error.hpp"
#include "mould/io.hpp"
#include "mould/parallel.hpp"
#include "mould/random.hpp"

namespace mould {

namespace checks {

bool expect_equal(CheckReport& report, const std::string& cname, const std::string& label,
                  const Bimould& a, const Bimould& b) {
  auto& cond = report.condition(cname);
  auto diff = first_difference(a, b);
  if (!diff) return true;
  cond.fail(label + " length " + std::to_string(diff->length), diff->delta);
  return false;
}

bool expect_equal(CheckReport& report, const std::string& cname, const std::string& label,
                  const RatFun& a, const RatFun& b) {
  auto& cond = report.condition(cname);
  if (a == b) return true;
  cond.fail(label, a - b);
  return false;
}

void expect_true(CheckReport& report, const std::string& cname, const std::string& label, bool ok,
                 const RatFun& delta) {
  auto& cond = report.condition(cname);
  if (!ok) cond.fail(label, delta);
}

void absorb(CheckReport& report, const std::string& prefix, const CheckReport& sub) {
  for (const auto& c : sub.conditions) {
    auto& cond = report.condition(prefix + c.name, c.required);
    for (const auto& f : c.failures) cond.fail(f.where, f.delta);
    if (!c.pass) cond.pass = false;
  }
}

std::uint64_t trial_seed(const CheckParams& p, const std::string& salt, int trial) {
  std::uint64_t h = 0xcbf29ce484222325ULL;
  for (unsigned char ch : salt) h = (h ^ ch) * 0x100000001b3ULL;
  Rng rng(p.seed ^ h);
  return rng.fork(static_cast<std::uint64_t>(trial) + 1).next();
}

namespace {

Json report_without_duration(const CheckReport& r) {
  Json j = to_json(r);
  j.erase("duration_seconds");
  return j;
}

void register_harness_checks(std::vector<CheckInfo>& out) {
  out.push_back({"determinism", "harness",
                 "identical check parameters give identical reports, duration aside", 3, 2,
                 [](const CheckParams& p, CheckReport& rep) {
                   for (const char* name : {"schneps-amit", "ls-negative-controls"}) {
                     CheckSpec spec;
                     spec.name = name;
                     spec.max_length = p.max_length;
                     spec.degree = p.degree;
                     spec.trials = p.trials;
                     spec.seed = p.seed;
                     Json a = report_without_duration(run_check(spec));
                     Json b = report_without_duration(run_check(spec));
                     expect_true(rep, "same-report", name, a == b);
                   }
                   RandomShape shape;
                   shape.maxlen = p.max_length;
                   shape.degree = p.degree;
                   for (int t = 0; t < p.trials; ++t) {
                     auto s = trial_seed(p, "determinism", t);
                     expect_equal(rep, "same-input", "trial " + std::to_string(t),
                                  gen_random_bimould(s, shape), gen_random_bimould(s, shape));
                   }
                 }});

  out.push_back({"random-generator", "harness",
                 "seeded generator: reproducible, LU flag honoured, constant at length 0", 4, 4,
                 [](const CheckParams& p, CheckReport& rep) {
                   for (int t = 0; t < p.trials; ++t) {
                     RandomShape shape;
                     shape.maxlen = p.max_length;
                     shape.degree = p.degree;
                     shape.layer = static_cast<Layer>(t % 3);
                     auto s = trial_seed(p, "random-generator", t);
                     Bimould a = gen_random_bimould(s, shape);
                     std::string label = "trial " + std::to_string(t);
                     expect_equal(rep, "reproducible", label, a, gen_random_bimould(s, shape));
                     expect_true(rep, "lu", label, a.is_lu(), a[0]);
                     expect_true(rep, "layer", label, a.satisfies_layer(shape.layer));
                     shape.lu = false;
                     shape.maxlen = 0;
                     Bimould c = gen_random_bimould(s, shape);
                     expect_true(rep, "constant", label,
                                 c.truncation() == 0 && c[0] == RatFun(1), c[0] - RatFun(1));
                   }
                 }});

  out.push_back({"io-roundtrip", "harness",
                 "JSON write/read is the identity on bimoulds, formal sums and reports", 3, 3,
                 [](const CheckParams& p, CheckReport& rep) {
                   for (int t = 0; t < p.trials; ++t) {
                     RandomShape shape;
                     shape.maxlen = p.max_length;
                     shape.degree = p.degree;
                     shape.lu = t % 2 == 0;
                     shape.layer = static_cast<Layer>(t % 3);
                     Bimould a = gen_random_bimould(trial_seed(p, "io-roundtrip", t), shape);
                     std::string label = "trial " + std::to_string(t);
                     Json j = to_json(a);
                     Bimould back = bimould_from_json(j);
                     expect_equal(rep, "bimould", label, back, a);
                     expect_true(rep, "bimould-json", label, to_json(back) == j);

                     FormalSeqSum s = harmonic_expand(seq_range(1, 1 + t % 2), seq_range(3, 3));
                     expect_true(rep, "seqsum", label, seqsum_from_json(to_json(s)) == s);

                     CheckReport r;
                     r.name = "sample";
                     r.params = {{"trial", t}};
                     r.condition("c").fail("here", a[1]);
                     r.finalize();
                     r.duration_seconds = 0.125 * t;
                     Json rj = to_json(r);
                     expect_true(rep, "report", label, to_json(report_from_json(rj)) == rj);
                   }
                   bool rejected = false;
                   try {
                     parse_rat("1/0");
                   } catch (const Error& e) {
                     rejected = e.code() == Errc::schema_error;
                   }
                   expect_true(rep, "rejects-zero-denominator", "\"1/0\"", rejected);
                 }});
}

}  // namespace

}  // namespace checks

const std::vector<CheckInfo>& check_registry() {
  static const std::vector<CheckInfo> registry = [] {
    std::vector<CheckInfo> out;
    checks::register_exactalg(out);
    checks::register_bimould(out);
    checks::register_flexion(out);
    checks::register_dshuffle(out);
    checks::register_constructions(out);
    checks::register_harness_checks(out);
    return out;
  }();
  return registry;
}

const CheckInfo* find_check(const std::string& name) {
  for (const auto& c : check_registry()) {
    if (c.name == name) return &c;
  }
  return nullptr;
}

CheckReport run_check(const CheckSpec& spec) {
  const CheckInfo* info = find_check(spec.name);
  if (!info) throw Error(Errc::unknown_check, "no check named \"" + spec.name + "\"");
  if (spec.max_length < 0 || spec.max_length > kMaxLength) {
    throw Error(Errc::invalid_argument, "max length must lie in [1, " + std::to_string(kMaxLength) + "]");
  }
  if (spec.degree < 0 || spec.trials < 0) {
    throw Error(Errc::invalid_argument, "degree and trials must be non-negative");
  }
  CheckParams p{spec.max_length > 0 ? spec.max_length : info->default_length,
                spec.degree,
                spec.trials > 0 ? spec.trials : info->default_trials,
                spec.seed,
                spec.harmonic,
                spec.parity};
  CheckReport rep;
  rep.name = info->name;
  rep.params = {{"max_length", p.max_length},
                {"degree", p.degree},
                {"trials", p.trials},
                {"seed", p.seed},
                {"harmonic", std::string(harmonic_rule_name(p.harmonic))},
                {"parity", std::string(parity_mode_name(p.parity))}};
  auto start = std::chrono::steady_clock::now();
  info->body(p, rep);
  rep.finalize();
  rep.duration_seconds =
      std::chrono::duration<double>(std::chrono::steady_clock::now() - start).count();
  return rep;
}

std::vector<CheckReport> run_checks(const std::vector<std::string>& names, const CheckSpec& base) {
  std::vector<std::string> todo = names;
  if (todo.empty()) {
    for (const auto& c : check_registry()) todo.push_back(c.name);
  }
  for (const auto& n : todo) {
    if (!find_check(n)) throw Error(Errc::unknown_check, "no check named \"" + n + "\"");
  }
  std::vector<CheckReport> out(todo.size());
  parallel_for(0, static_cast<int>(todo.size()), [&](int i) {
    CheckSpec spec = base;
    spec.name = todo[i];
    out[i] = run_check(spec);
  });
  return out;
}

}  // namespace mould
