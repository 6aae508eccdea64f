#include <gtest/gtest.h>

#include <sys/wait.h>

#include <cstdlib>
#include <filesystem>
#include <fstream>
#include <sstream>
#include <string>

#include "mould/constructions.hpp"
#include "mould/io.hpp"

using namespace mould;
namespace fs = std::filesystem;

namespace {

struct Outcome {
  int code;
  std::string out;
};

class Cli : public ::testing::Test {
 protected:
  void SetUp() override {
    dir_ = fs::temp_directory_path() /
           ("flexion_cli_" + std::string(::testing::UnitTest::GetInstance()->current_test_info()->name()));
    fs::create_directories(dir_);
  }
  void TearDown() override { fs::remove_all(dir_); }

  Outcome run(const std::string& args) {
    fs::path out = dir_ / "stdout.txt";
    std::string cmd = std::string(FLEXION_BIN) + " " + args + " > " + out.string() + " 2>&1";
    int status = std::system(cmd.c_str());
    std::ifstream in(out);
    std::stringstream ss;
    ss << in.rdbuf();
    return {WIFEXITED(status) ? WEXITSTATUS(status) : -1, ss.str()};
  }

  std::string write(const std::string& name, const Json& j) {
    fs::path p = dir_ / name;
    write_json_file(p, j);
    return p.string();
  }

  fs::path dir_;
};

Bimould x_power(int e, int n) {
  return Bimould::single(1, RatFun::variable(x_var(1)).pow(e), n, Layer::u_const);
}

}  // namespace

TEST_F(Cli, VerifyPassExitsZero) {
  Outcome r = run("verify mu-algebra --trials 1 --max-length 3");
  EXPECT_EQ(r.code, 0) << r.out;
  EXPECT_NE(r.out.find("PASS mu-algebra"), std::string::npos);
}

TEST_F(Cli, VerifyFailureExitsOne) {
  Outcome r = run("verify harmonic-commutativity --harmonic literal --max-length 3");
  EXPECT_EQ(r.code, 1) << r.out;
  EXPECT_NE(r.out.find("FAIL"), std::string::npos);
}

TEST_F(Cli, VerifyJsonIsParseable) {
  Outcome r = run("verify psi0-harmonic-base --json");
  ASSERT_EQ(r.code, 0) << r.out;
  Json j = Json::parse(r.out);
  EXPECT_EQ(j["name"], "psi0-harmonic-base");
  EXPECT_EQ(j["pass"], true);
  EXPECT_TRUE(j.contains("params"));
  EXPECT_TRUE(j.contains("failures"));
}

TEST_F(Cli, UsageErrorsExitTwo) {
  EXPECT_EQ(run("verify no-such-check").code, 2);
  EXPECT_EQ(run("verify ari-jacobi --max-length 11").code, 2);
  EXPECT_EQ(run("verify ari-jacobi --harmonic sideways").code, 2);
  EXPECT_EQ(run("frobnicate").code, 2);
  EXPECT_EQ(run("").code, 2);
  EXPECT_EQ(run("show psi0").code, 2);
}

TEST_F(Cli, SchemaErrorsExitTwo) {
  std::string bad = write("bad.json", Json{{"truncation", 2}, {"components", "oops"}});
  EXPECT_EQ(run("check-membership ls --input " + bad + " --max-length 2").code, 2);
  std::string ok = write("ok.json", to_json(x_power(2, 2)));
  EXPECT_EQ(run("check-membership ls --input " + ok + " --max-length 3").code, 2);
  EXPECT_EQ(run("check-membership ls --input " + (dir_ / "missing.json").string() + " --max-length 2").code, 2);
}

TEST_F(Cli, ShowJsonMatchesLibrary) {
  Outcome r = run("show psi0 --length 3 --json");
  ASSERT_EQ(r.code, 0) << r.out;
  EXPECT_EQ(bimould_from_json(Json::parse(r.out)), psi0(3));
  Outcome s = run("show s_d --length 2 --json");
  ASSERT_EQ(s.code, 0) << s.out;
  EXPECT_EQ(bimould_from_json(Json::parse(s.out)), witt_generator(2, 2));
  for (const char* obj : {"pic", "diripar", "darapir"}) {
    EXPECT_EQ(run(std::string("show ") + obj + " --length 2").code, 0) << obj;
  }
}

TEST_F(Cli, LiftWritesChiB) {
  std::string in = write("f.json", to_json(x_power(2, 1)));
  std::string out = (dir_ / "lifted.json").string();
  Outcome r = run("lift --input " + in + " --target-length 3 --output " + out);
  ASSERT_EQ(r.code, 0) << r.out;
  Bimould lifted = bimould_from_json(read_json_file(out));
  EXPECT_EQ(lifted, chi_B(x_power(2, 3), 3));
}

TEST_F(Cli, LiftAcceptsCustomPsi) {
  std::string in = write("f.json", to_json(x_power(2, 1)));
  std::string psi = write("psi.json", to_json(Bimould(3, Layer::u_const)));
  std::string out = (dir_ / "lifted.json").string();
  Outcome r = run("lift --input " + in + " --target-length 3 --psi " + psi + " --output " + out);
  ASSERT_EQ(r.code, 0) << r.out;
  EXPECT_EQ(bimould_from_json(read_json_file(out)), x_power(2, 3));
}

TEST_F(Cli, MembershipVerdicts) {
  std::string even = write("even.json", to_json(x_power(2, 3)));
  std::string odd = write("odd.json", to_json(x_power(3, 3)));
  std::string p = write("psi0.json", to_json(psi0(3)));
  std::string sp = write("sharp.json", to_json(sharp(psi0(3))));
  EXPECT_EQ(run("check-membership ls --input " + even + " --max-length 3").code, 0);
  EXPECT_EQ(run("check-membership ls --input " + odd + " --max-length 3").code, 1);
  EXPECT_EQ(run("check-membership ds --input " + p + " --max-length 3").code, 0);
  EXPECT_EQ(run("check-membership ds --input " + even + " --max-length 3").code, 1);
  EXPECT_EQ(run("check-membership V --input " + sp + " --max-length 3").code, 0);
  EXPECT_EQ(run("check-membership V --input " + p + " --max-length 3").code, 1);
  Outcome j = run("check-membership ds --input " + p + " --max-length 3 --json");
  EXPECT_EQ(Json::parse(j.out)["pass"], true);
}

TEST_F(Cli, ListNamesEveryCheck) {
  Outcome r = run("list");
  ASSERT_EQ(r.code, 0);
  EXPECT_NE(r.out.find("ari-jacobi"), std::string::npos);
  EXPECT_NE(r.out.find("witt-identity"), std::string::npos);
}
