#include <gtest/gtest.h>

#include <algorithm>
#include <filesystem>
#include <set>

#include "mould/checks.hpp"
#include "mould/constructions.hpp"
#include "mould/error.hpp"
#include "mould/io.hpp"
#include "mould/parallel.hpp"
#include "mould/random.hpp"
#include "test_util.hpp"

using namespace mould;

namespace {

Errc code_of(const std::function<void()>& fn) {
  try {
    fn();
  } catch (const Error& e) {
    return e.code();
  }
  ADD_FAILURE() << "no error raised";
  return Errc::invalid_argument;
}

Json psi0_json() { return to_json(psi0(3)); }

}  // namespace

TEST(Io, RatParsing) {
  EXPECT_EQ(parse_rat("-6/4"), Rat(-3, 2));
  EXPECT_EQ(parse_rat("+7"), Rat(7));
  EXPECT_EQ(format_rat(Rat(-3, 2)), "-3/2");
  for (const char* bad : {"1/0", "", "1/", "/2", "1.5", "1/-2", "x"}) {
    EXPECT_EQ(code_of([&] { parse_rat(bad); }), Errc::schema_error) << bad;
  }
}

TEST(Io, BimouldRoundTrip) {
  Bimould p = psi0(4);
  Bimould back = bimould_from_json(to_json(p));
  EXPECT_EQ(back, p);
  EXPECT_EQ(back.layer(), Layer::u_const);
  EXPECT_EQ(back.weight(), 0);
  EXPECT_EQ(bimould_from_json(to_json(pic(3))), pic(3));
}

TEST(Io, UnnormalizedDenominatorsAreAccepted) {
  // 1/(2 v1 - 2 v2) written with the sign and factor left in.
  Json f = {{"scalar", "1"},
            {"num", {{{"c", "1"}, {"e", Json::object()}}}},
            {"den", {{{"f", {{"v1", -2}, {"v2", 2}}}, {"m", 1}}}}};
  RatFun got = ratfun_from_json(f);
  RatFun want = RatFun::inverse_linear(lin_var(v_var(1)) - lin_var(v_var(2))).scaled(Rat(-1, 2));
  EXPECT_EQ(got, want);
}

TEST(Io, SchemaErrorsNameTheLocation) {
  Json j = psi0_json();
  j["components"][1]["value"]["num"][0]["c"] = "1/0";
  try {
    bimould_from_json(j);
    FAIL() << "no error raised";
  } catch (const Error& e) {
    EXPECT_EQ(e.code(), Errc::schema_error);
    EXPECT_NE(std::string(e.what()).find("$.components[1].value.num[0].c"), std::string::npos)
        << e.what();
  }
}

TEST(Io, RejectsMalformedBimoulds) {
  auto expect_schema = [](Json j, const char* what) {
    EXPECT_EQ(code_of([&] { bimould_from_json(j); }), Errc::schema_error) << what;
  };
  Json j = psi0_json();
  j.erase("truncation");
  expect_schema(j, "missing truncation");

  j = psi0_json();
  j["truncation"] = 11;
  expect_schema(j, "truncation too large");

  j = psi0_json();
  j["layer"] = "middle";
  expect_schema(j, "bad layer");

  j = psi0_json();
  j["components"].push_back(j["components"][0]);
  expect_schema(j, "duplicate length");

  j = psi0_json();
  j["components"][0]["length"] = 5;
  expect_schema(j, "length beyond truncation");

  j = psi0_json();
  j["components"][0]["value"]["num"][0]["e"] = {{"v3", 1}};
  expect_schema(j, "variable beyond its length");

  j = psi0_json();
  j["components"][0]["value"]["den"][0]["f"] = {{"u1", 1}};
  expect_schema(j, "u variable in a u-const bimould");

  j = psi0_json();
  j["components"][0]["value"]["den"][0]["f"] = {{"w1", 1}};
  expect_schema(j, "unknown variable");

  j = psi0_json();
  j["components"][0]["value"]["den"][0]["m"] = 0;
  expect_schema(j, "zero multiplicity");
}

TEST(Io, FileHelpers) {
  auto path = std::filesystem::temp_directory_path() / "mould_io_test.json";
  write_json_file(path, psi0_json());
  EXPECT_EQ(bimould_from_json(read_json_file(path)), psi0(3));
  std::filesystem::remove(path);
  EXPECT_EQ(code_of([&] { read_json_file(path); }), Errc::schema_error);
}

TEST(Io, SeqSumRejectsRepeats) {
  Json s = {{{"seq", {1, 1}}, {"coef", to_json(RatFun(1))}}};
  EXPECT_EQ(code_of([&] { seqsum_from_json(s); }), Errc::schema_error);
}

TEST(Random, SeededAndShaped) {
  RandomShape shape;
  shape.maxlen = 3;
  shape.layer = Layer::u_const;
  Bimould a = gen_random_bimould(42, shape), b = gen_random_bimould(42, shape);
  EXPECT_EQ(a, b);
  EXPECT_NE(to_json(a), to_json(gen_random_bimould(43, shape)));
  EXPECT_TRUE(a.is_lu());
  EXPECT_TRUE(a.satisfies_layer(Layer::u_const));
  EXPECT_EQ(a.truncation(), 3);
}

TEST(Random, RngForksAreIndependentOfCallOrder) {
  Rng r1(5), r2(5);
  Rng f1 = r1.fork(3);
  Rng f2 = r2.fork(3);
  EXPECT_EQ(f1.next(), f2.next());
  for (int i = 0; i < 100; ++i) {
    int k = r1.between(-3, 4);
    EXPECT_GE(k, -3);
    EXPECT_LE(k, 4);
  }
}

TEST(Registry, UnknownCheckIsReported) {
  CheckSpec spec;
  spec.name = "no-such-check";
  EXPECT_EQ(code_of([&] { run_check(spec); }), Errc::unknown_check);
  EXPECT_EQ(code_of([&] { run_checks({"ari-jacobi", "nope"}, CheckSpec{}); }), Errc::unknown_check);
  spec.name = "ari-jacobi";
  spec.max_length = kMaxLength + 1;
  EXPECT_EQ(code_of([&] { run_check(spec); }), Errc::invalid_argument);
}

TEST(Registry, CoversEveryExpectedCheck) {
  const std::set<std::string> expected = {
      "field-axioms", "substitute-composition", "reduce-idempotent", "rf-equal-equivalence",
      "exactalg-examples", "unary-involutions", "push-order", "push-identity", "mu-algebra",
      "invmu-roundtrip", "sharp-flat", "weight-homogeneity", "bimould-examples", "schneps-amit",
      "schneps-anit", "anti-amit-anit", "ari-antisymmetry", "ari-jacobi", "der-derivation",
      "ihara-axit", "ihara-ila", "ari-flat-ihara", "ari-action-upper", "flexion-examples",
      "shuffle-properties", "harmonic-commutativity", "harmonic-associativity", "eval-on-sum",
      "ls-negative-controls", "ds-psi0", "psi0-harmonic-base", "ls-sharp-in-V",
      "psi0-sharp-in-V", "ls-ds-base-case", "thm-main", "cor-ds-lift", "thm-dilator-series",
      "lemma-der-series", "lemma-der-adjoint", "dilator-roundtrip", "darapir",
      "pic-push-neutral", "witt-identity", "witt-identity-reversed", "weight-grading",
      "chi-forms", "determinism", "random-generator", "io-roundtrip"};
  std::set<std::string> got;
  for (const auto& c : check_registry()) {
    EXPECT_TRUE(got.insert(c.name).second) << "duplicate " << c.name;
    EXPECT_FALSE(c.summary.empty()) << c.name;
    EXPECT_GE(c.default_length, 1) << c.name;
    EXPECT_LE(c.default_length, kMaxLength) << c.name;
  }
  EXPECT_EQ(got, expected);
}

TEST(Registry, ReportsCarryTheirParameters) {
  CheckSpec spec;
  spec.name = "mu-algebra";
  spec.seed = 9;
  spec.trials = 1;
  CheckReport r = run_check(spec);
  EXPECT_EQ(r.name, "mu-algebra");
  EXPECT_EQ(r.params["seed"], 9);
  EXPECT_EQ(r.params["trials"], 1);
  EXPECT_EQ(r.params["harmonic"], "symmetrized");
  EXPECT_GE(r.duration_seconds, 0.0);
}

TEST(Report, RequiredConditionsDecide) {
  CheckReport r;
  r.condition("info", false).fail("x", RatFun(1));
  r.finalize();
  EXPECT_TRUE(r.pass);
  r.condition("must").fail("y", RatFun(2));
  r.finalize();
  EXPECT_FALSE(r.pass);
  ASSERT_EQ(r.failures.size(), 1u);
  EXPECT_EQ(r.failures[0].where, "must: y");
}

TEST(Parallel, CoversTheRangeOnce) {
  std::vector<int> hits(50, 0);
  parallel_for(0, 50, [&](int i) { hits[i] += 1; });
  EXPECT_TRUE(std::all_of(hits.begin(), hits.end(), [](int h) { return h == 1; }));
}

TEST(Parallel, ResultsDoNotDependOnThreadCount) {
  CheckSpec spec;
  spec.trials = 1;
  spec.max_length = 3;
  std::vector<std::string> names = {"mu-algebra", "ari-antisymmetry", "shuffle-properties"};
  auto strip = [](std::vector<CheckReport> rs) {
    Json out = Json::array();
    for (const auto& r : rs) {
      Json j = to_json(r);
      j.erase("duration_seconds");
      out.push_back(j);
    }
    return out;
  };
  Json a = strip(run_checks(names, spec));
  setenv("FLEXION_THREADS", "1", 1);
  Json b = strip(run_checks(names, spec));
  unsetenv("FLEXION_THREADS");
  EXPECT_EQ(a, b);
}

class HarnessChecks : public ::testing::TestWithParam<std::string> {};

TEST_P(HarnessChecks, Pass) {
  auto r = test_util::run_named(GetParam());
  EXPECT_TRUE(r.pass) << test_util::describe(r);
}

INSTANTIATE_TEST_SUITE_P(Registry, HarnessChecks,
                         ::testing::Values("determinism", "random-generator", "io-roundtrip"),
                         test_util::param_name);
