#include <gtest/gtest.h>

#include <filesystem>
#include <fstream>
#include <sstream>

#include <json.hpp>

#include "pstab_tools/cli.hpp"

namespace pstab::cli {
namespace {

namespace fs = std::filesystem;
using nlohmann::json;

struct Result {
  int code;
  std::string out;
  std::string err;
};

Result invoke(std::vector<std::string> args) {
  std::ostringstream out, err;
  const int code = run(args, out, err);
  return {code, out.str(), err.str()};
}

fs::path temp_file(const std::string& name, const std::string& contents) {
  const auto path = fs::temp_directory_path() / ("pstab_cli_" + name);
  std::ofstream(path) << contents;
  return path;
}

const char* kPingPong = R"({"rank":2,"generators":[
  [[3,0],[0,0],[0,0],[0.3333333333333333,0]],
  [[1.6666666666666667,0],[1.3333333333333333,0],[1.3333333333333333,0],[1.6666666666666667,0]]]})";

TEST(Cli, WordOutput) {
  const auto r = invoke({"word", "abAB"});
  EXPECT_EQ(r.code, 0);
  EXPECT_EQ(r.out,
            "{\"word\":\"abAB\",\"rank\":2,\"length\":4,\"cyclically_reduced\":true,\"cyclic\":\"abAB\","
            "\"cyclic_length\":4,\"conjugator\":\"\"}\n");
  const auto conj = json::parse(invoke({"word", "aabAA"}).out);
  EXPECT_EQ(conj["cyclic"], "b");
  EXPECT_EQ(conj["conjugator"], "aa");
  EXPECT_EQ(json::parse(invoke({"word", "aA"}).out)["length"], 0);
}

TEST(Cli, Primitive) {
  EXPECT_EQ(invoke({"primitive", "abAB"}).out, "{\"word\":\"abAB\",\"primitive\":false}\n");
  EXPECT_EQ(invoke({"primitive", "aab"}).out, "{\"word\":\"aab\",\"primitive\":true}\n");
  EXPECT_EQ(json::parse(invoke({"primitive", "c", "--rank", "3"}).out)["primitive"], true);
}

TEST(Cli, Blocking) {
  EXPECT_EQ(invoke({"blocking", "abABabAB"}).out, "{\"certified\":true,\"reason\":\"CONNECTED_NO_CUTPOINT\"}\n");
  EXPECT_EQ(invoke({"blocking", "abAB"}).out, "{\"certified\":false,\"reason\":\"HAS_CUTPOINT\"}\n");
  EXPECT_EQ(json::parse(invoke({"blocking", "a"}).out)["reason"], "DISCONNECTED");
}

TEST(Cli, Enumerate) {
  const auto r = json::parse(invoke({"enumerate", "--rank", "2", "--max-len", "3"}).out);
  EXPECT_EQ(r["count"], 16);
  EXPECT_EQ(r["classes"].size(), 16u);
  EXPECT_EQ(invoke({"enumerate", "--rank", "2", "--max-len", "2"}).out,
            "{\"rank\":2,\"max_len\":2,\"count\":8,\"classes\":[\"a\",\"ab\",\"aB\",\"A\",\"Ab\",\"AB\",\"b\",\"B\"]}\n");
}

TEST(Cli, BqDecide) {
  EXPECT_EQ(invoke({"bq-decide", "--x", "3", "--y", "3", "--z", "3"}).out,
            "{\"kind\":\"BQ_CERTIFIED\",\"nodes_explored\":4,\"depth_max\":1,\"witnesses\":[]}\n");
  const auto w = json::parse(invoke({"bq-decide", "--x", "1", "--y", "3", "--z", "3"}).out);
  EXPECT_EQ(w["kind"], "NOT_BQ_WITNESS");
  EXPECT_EQ(w["witnesses"][0]["p"], 0);
  EXPECT_EQ(w["witnesses"][0]["q"], 1);
  EXPECT_EQ(json::parse(invoke({"bq-decide", "--x", "3", "--y", "3", "--z", "3", "--budget", "0"}).out)["kind"],
            "INCONCLUSIVE");
  const auto c = json::parse(invoke({"bq-decide", "--x=-2.5,0.5", "--y", "3,0", "--z", "3"}).out);
  EXPECT_TRUE(c.contains("kind"));
}

TEST(Cli, RepInfoAndScan) {
  const auto rep = temp_file("pingpong.json", kPingPong);
  const auto info = json::parse(invoke({"rep-info", "--rep", rep.string()}).out);
  EXPECT_EQ(info["rank"], 2);
  EXPECT_EQ(info["generators"][0]["kind"], "LOXODROMIC");
  EXPECT_NEAR(info["generators"][0]["translation_length"].get<double>(), 2.0 * std::log(3.0), 1e-12);
  EXPECT_TRUE(info.contains("fricke"));

  const auto scan = invoke({"ps-scan", "--rep", rep.string(), "--max-len", "6"});
  EXPECT_EQ(scan.code, 0);
  const auto report = json::parse(scan.out);
  EXPECT_EQ(report["verdict"], "NO_OBSTRUCTION");
  EXPECT_GT(report["min_ratio"].get<double>(), 0.0);

  const auto probe = json::parse(invoke({"probe", "--rep", rep.string(), "--word", "ab", "--periods", "20"}).out);
  EXPECT_TRUE(probe.is_object());
}

TEST(Cli, Render) {
  const auto cfg = temp_file("slice.json",
                             R"({"kappa":[-2,0],"fixed_x":[3,0],"window":[[0,-3],[6,3]],"width":8,"height":6,"budget":2000})");
  const auto out1 = fs::temp_directory_path() / "pstab_cli_1.ppm";
  const auto out4 = fs::temp_directory_path() / "pstab_cli_4.ppm";
  const auto r = invoke({"render", "--config", cfg.string(), "--out", out1.string(), "--threads", "1"});
  ASSERT_EQ(r.code, 0) << r.err;
  EXPECT_EQ(json::parse(r.out)["width"], 8);
  ASSERT_EQ(invoke({"render", "--config", cfg.string(), "--out", out4.string(), "--threads", "4"}).code, 0);
  auto slurp = [](const fs::path& p) {
    std::ifstream in(p, std::ios::binary);
    return std::string(std::istreambuf_iterator<char>(in), {});
  };
  EXPECT_EQ(slurp(out1), slurp(out4));
  EXPECT_EQ(fs::file_size(out1), std::string("P6\n8 6\n255\n").size() + 8 * 6 * 3);
}

TEST(Cli, ExitCodes) {
  auto bad_letter = invoke({"word", "ab1"});
  EXPECT_EQ(bad_letter.code, 1);
  EXPECT_EQ(json::parse(bad_letter.err)["error"], "InvalidLetter");
  EXPECT_TRUE(bad_letter.out.empty());

  EXPECT_EQ(invoke({}).code, 2);
  EXPECT_EQ(invoke({"frobnicate"}).code, 2);
  EXPECT_EQ(invoke({"enumerate", "--rank", "two", "--max-len", "3"}).code, 2);
  EXPECT_EQ(invoke({"--help"}).code, 0);

  const auto bad_cfg = temp_file("bad.json", "{\"kappa\":");
  const auto r = invoke({"render", "--config", bad_cfg.string(), "--out", "/tmp/pstab_cli_never.ppm"});
  EXPECT_EQ(r.code, 2);
  EXPECT_EQ(json::parse(r.err)["error"], "ParseError");

  const auto det = temp_file("det.json", R"({"rank":1,"generators":[[[2,0],[0,0],[0,0],[1,0]]]})");
  const auto d = invoke({"rep-info", "--rep", det.string()});
  EXPECT_EQ(d.code, 1);
  EXPECT_EQ(json::parse(d.err)["error"], "DeterminantError");

  EXPECT_EQ(invoke({"primitive", "abcdefghij"}).code, 1);
}

TEST(Cli, Deterministic) {
  for (const std::vector<std::string>& args :
       {std::vector<std::string>{"enumerate", "--rank", "3", "--max-len", "3"},
        std::vector<std::string>{"bq-decide", "--x", "2.5,0.3", "--y", "2.2", "--z", "3,1"}}) {
    EXPECT_EQ(invoke(args).out, invoke(args).out);
  }
}

}  // namespace
}  // namespace pstab::cli
