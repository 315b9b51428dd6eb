#include <gtest/gtest.h>

#include <cstdio>
#include <filesystem>
#include <fstream>
#include <sstream>

#include "hecke/serialize.hpp"
#include "hecke_cli/commands.hpp"
#include "hecke_cli/family_config.hpp"
#include "expect_error.hpp"

using namespace hecke;
using namespace hecke::cli;

namespace {

struct CliRun {
  int code;
  std::string out;
  std::string err;
  Json json() const { return Json::parse(out); }
};

CliRun run(const std::vector<std::string>& args) {
  std::ostringstream out, err;
  int code = run_command(args, out, err);
  return {code, out.str(), err.str()};
}

std::filesystem::path temp_file(const std::string& name, const std::string& content) {
  auto path = std::filesystem::temp_directory_path() / ("hecke_cli_test_" + name);
  std::ofstream(path) << content;
  return path;
}

const std::string kDataDir = HECKE_TEST_DATA_DIR;

}  // namespace

TEST(Cli, LValueExample) {
  CliRun r = run({"lvalue", "--d", "5", "--delta", "3,1,2", "--q", "3", "--chi", "q=3;gens=2:1"});
  ASSERT_EQ(r.code, 0) << r.err;
  Json j = r.json();
  EXPECT_EQ(j["tool"], "hecke-zero");
  EXPECT_EQ(j["subcommand"], "lvalue");
  EXPECT_EQ(j["payload"]["value"], "2/3");
  EXPECT_EQ(j["payload"]["display"]["decimal"], "0.666666666666666666666666666667");
  EXPECT_EQ(j["inputs"]["chi"], "q=3;gens=2:1");
  EXPECT_TRUE(j.contains("elapsed_ms"));
}

TEST(Cli, ConvertExample) {
  CliRun r = run({"cf", "convert", "--plus", "2,3"});
  ASSERT_EQ(r.code, 0) << r.err;
  EXPECT_EQ(r.json()["payload"]["minus"]["period"], Json::array({4, 2, 2}));
}

TEST(Cli, ValidationErrors) {
  CliRun r = run({"lvalue", "--d", "12", "--delta", "3,1,2", "--q", "3", "--chi", "q=3;gens=2:1"});
  EXPECT_EQ(r.code, 2);
  EXPECT_EQ(r.json()["error"]["kind"], "NotSquarefree");

  CliRun unknown = run({"frobnicate"});
  EXPECT_EQ(unknown.code, 2);
  EXPECT_EQ(unknown.json()["error"]["kind"], "UnknownCommand");

  CliRun missing = run({"lvalue", "--d", "5"});
  EXPECT_EQ(missing.code, 2);
  EXPECT_EQ(missing.json()["error"]["kind"], "ValidationError");

  CliRun modulus = run({"lvalue", "--d", "5", "--delta", "3,1,2", "--q", "5", "--chi", "q=3;gens=2:1"});
  EXPECT_EQ(modulus.code, 2);
  EXPECT_EQ(modulus.json()["error"]["kind"], "ValidationError");

  CliRun chi = run({"lvalue", "--d", "5", "--delta", "3,1,2", "--q", "3", "--chi", "nonsense"});
  EXPECT_EQ(chi.code, 2);
  EXPECT_EQ(chi.json()["error"]["kind"], "ParseError");

  CliRun csv = run({"--format", "csv", "field", "--d", "5"});
  EXPECT_EQ(csv.code, 2);
}

TEST(Cli, CsvTables) {
  CliRun r = run({"lvalue", "--d", "2", "--delta", "2,1,1", "--q", "3", "--chi", "q=3;gens=2:1", "--format", "csv"});
  ASSERT_EQ(r.code, 0) << r.err;
  std::istringstream lines(r.out);
  std::string header, first;
  std::getline(lines, header);
  std::getline(lines, first);
  EXPECT_EQ(header, "C,D,norm_residue,chi_value,Z");
  EXPECT_EQ(first.substr(0, 6), "1,1,1,");
  EXPECT_NE(first.find("2/9"), std::string::npos);
}

TEST(Cli, PayloadsIndependentOfThreads) {
  std::vector<std::string> base{"linearity", "verify", "--family", "yokoi", "--q", "5",
                                "--chi", "q=5;gens=2:1", "--r", "3", "--k", "1..10"};
  auto one = base, four = base;
  one.insert(one.end(), {"--threads", "1"});
  four.insert(four.end(), {"--threads", "4"});
  CliRun a = run(one), b = run(four);
  ASSERT_EQ(a.code, 0) << a.err;
  ASSERT_EQ(b.code, 0) << b.err;
  EXPECT_EQ(a.json()["payload"].dump(), b.json()["payload"].dump());
  EXPECT_EQ(a.json()["payload"]["affine_exact"], true);
}

TEST(Cli, OutWritesJsonLines) {
  auto path = std::filesystem::temp_directory_path() / "hecke_cli_test_out.jsonl";
  std::filesystem::remove(path);
  for (int i = 0; i < 2; ++i) ASSERT_EQ(run({"cf", "convert", "--plus", "1", "--out", path.string()}).code, 0);
  std::ifstream in(path);
  std::string line;
  int count = 0;
  while (std::getline(in, line)) {
    Json j = Json::parse(line);
    EXPECT_EQ(j["subcommand"], "cf convert");
    ++count;
  }
  EXPECT_EQ(count, 2);
  std::filesystem::remove(path);
}

TEST(Cli, PayloadValuesRoundTrip) {
  CliRun r = run({"linearity", "closed-form", "--family", "yokoi", "--q", "5", "--chi", "q=5;gens=2:1", "--r", "2"});
  ASSERT_EQ(r.code, 0) << r.err;
  Json p = r.json()["payload"];
  CycloElement A = cyclo_from_json(p["A_chi"]);
  EXPECT_EQ(to_json(A), p["A_chi"]);
  EXPECT_TRUE(A.is_integral());
}

TEST(Cli, OtherSubcommands) {
  EXPECT_EQ(run({"field", "--d", "15"}).json()["payload"]["class_numbers"]["h_plus"], 4);
  EXPECT_EQ(run({"cf", "eval", "--plus", "1"}).json()["payload"]["value"]["d"], "5");
  EXPECT_EQ(run({"cf", "expand", "--d", "2", "--x", "0,1,1"}).json()["payload"]["plus"]["period"], Json::array({2}));
  EXPECT_EQ(run({"linearity", "hypothesis", "--family", "yokoi", "--q", "3", "--r", "1", "--k", "0,2,4"})
                .json()["payload"]["holds"],
            true);
  Json search = run({"biro", "search", "--q-max", "5", "--p-max", "13"}).json();
  EXPECT_EQ(search["payload"]["pairs"].size(), 2u);
  Json res = run({"biro", "residues", "--family", "yokoi", "--q-max", "5", "--p-max", "5", "--r", "2"}).json();
  EXPECT_EQ(res["payload"]["reports"].size(), 2u);
  Json oracle = run({"biro", "oracle", "--family", "yokoi", "--n", "13", "--chi", "q=5;gens=2:1"}).json();
  EXPECT_EQ(oracle["payload"]["equal"], true);
  EXPECT_EQ(run({"biro", "oracle", "--family", "yokoi", "--n", "9", "--chi", "q=5;gens=2:1"}).code, 2);
}

TEST(FamilyConfig, BuiltinsResolve) {
  FamilySpec y = load_family_config("yokoi");
  ASSERT_EQ(y.acf.size(), 1u);
  EXPECT_EQ(y.acf[0].alpha(), 1);
  EXPECT_EQ(y.acf[0].beta(), 0);
  FamilySpec rd = load_family_config("rd-n2p1");
  EXPECT_EQ(rd.acf[0].alpha(), 2);
  EXPECT_EQ(rd.acf[0].beta(), 0);
}

TEST(FamilyConfig, Files) {
  EXPECT_NO_THROW(load_family_config(kDataDir + "/yokoi.json"));
  EXPECT_NO_THROW(load_family_config(kDataDir + "/n2p1-mixed-parity.json"));
  EXPECT_NO_THROW(load_family_config(kDataDir + "/n4p4-quadratic-digit.json"));
  EXPECT_HECKE_ERROR(load_family_config(kDataDir + "/broken-digits.json"), SpecInconsistent);
  auto malformed = temp_file("malformed.json", "{\"name\": \"x\", \"f_coeffs\": [1, 0,");
  EXPECT_HECKE_ERROR(load_family_config(malformed.string()), ParseError);
  auto wrong_type = temp_file("wrong_type.json", R"({"name": 3})");
  EXPECT_HECKE_ERROR(load_family_config(wrong_type.string()), ParseError);
  EXPECT_HECKE_ERROR(load_family_config("/nonexistent/family.json"), ParseError);
  std::filesystem::remove(malformed);
  std::filesystem::remove(wrong_type);
}

TEST(FamilyConfig, NegativeControlsThroughCli) {
  Json mixed = run({"linearity", "hypothesis", "--family", kDataDir + "/n2p1-mixed-parity.json", "--q", "3", "--r",
                    "1", "--k", "0..8"})
                   .json();
  EXPECT_EQ(mixed["payload"]["holds"], false);
  Json quad = run({"linearity", "verify", "--family", kDataDir + "/n4p4-quadratic-digit.json", "--q", "3", "--chi",
                   "q=3;gens=2:1", "--r", "1", "--k", "0..12"})
                  .json();
  EXPECT_EQ(quad["payload"]["affine_exact"], false);
  EXPECT_EQ(quad["inputs"]["family"]["name"], "n4p4-quadratic-digit");
}
