/*
 Copyright 2026 The tvscone Authors

 Licensed under the Apache License, Version 2.0 (the "License");
 you may not use this file except in compliance with the License.
 You may obtain a copy of the License at

      https://www.apache.org/licenses/LICENSE-2.0

 Unless required by applicable law or agreed to in writing, software
 distributed under the License is distributed on an "AS IS" BASIS,
 WITHOUT WARRANTIES OR CONDITIONS OF ANY KIND, either express or implied.
 See the License for the specific language governing permissions and
 limitations under the License.
*/

#include <gtest/gtest.h>

#include <filesystem>
#include <fstream>
#include <sstream>
#include <string>
#include <vector>

#include "json.hpp"
#include "tvscone/cli.hpp"
#include "tvscone/config.hpp"
#include "tvscone/error.hpp"

namespace tvscone {
namespace {

const std::string kData = TVSCONE_TEST_DATA;

struct Run {
  int code;
  nlohmann::json out;
  std::string err;
};

Run run(std::vector<std::string> args) {
  std::ostringstream out, err;
  const int code = cli_main(args, out, err);
  nlohmann::json j = out.str().empty() ? nlohmann::json() : nlohmann::json::parse(out.str());
  return {code, j, err.str()};
}

std::string config_error(std::string_view text) {
  try {
    parse_config(text);
  } catch (const Error& e) {
    EXPECT_EQ(e.code(), ErrorCode::kConfig);
    return e.what();
  }
  ADD_FAILURE() << "accepted: " << text;
  return {};
}

TEST(Cli, XiExample) {
  const auto r = run({"xi", "--config", kData + "/orthant2.toml", "--point", "3,4"});
  EXPECT_EQ(r.code, kExitOk);
  EXPECT_EQ(r.out["xi"].get<double>(), 3.0);
}

TEST(Cli, SolveBanachExample) {
  const auto trace = (std::filesystem::temp_directory_path() / "tvscone_cli_trace.csv").string();
  const auto r = run({"solve", "banach", "--config", kData + "/affine.toml", "--trace", trace});
  EXPECT_EQ(r.code, kExitOk);
  EXPECT_TRUE(r.out["converged"].get<bool>());
  const auto fp = r.out["final_point"].get<std::vector<double>>();
  ASSERT_EQ(fp.size(), 2u);
  EXPECT_NEAR(fp[0], 2.0, 1e-10);
  EXPECT_NEAR(fp[1], 2.0, 1e-10);
  std::ifstream in(trace);
  std::string header;
  std::getline(in, header);
  EXPECT_EQ(header, "n,residual_dp,residual_dS");
}

TEST(Cli, DemoOmegaExample) {
  const auto r = run({"demo-omega", "--epsilon", "0.1", "--truncate", "20"});
  EXPECT_EQ(r.code, kExitOk);
  EXPECT_NEAR(r.out["h_c"].get<double>(), 0.0454545, 1e-7);
  EXPECT_EQ(r.out["epsilon"].get<double>(), 0.1);
  EXPECT_TRUE(r.out["pass"].get<bool>());
}

TEST(Cli, DistAndValidate) {
  const auto d = run({"dist", "--x", "0,0", "--y", "1,1"});
  EXPECT_EQ(d.code, kExitOk);
  EXPECT_DOUBLE_EQ(d.out["d_S"].get<double>(), 0.375);
  EXPECT_EQ(run({"validate", "--budget", "200"}).code, kExitOk);
}

TEST(Cli, SuiteExitCodes) {
  const auto ok = run({"suite", "omega-example"});
  EXPECT_EQ(ok.code, kExitOk);
  EXPECT_TRUE(ok.out["passed"].get<bool>());
  const auto unknown = run({"suite", "nope"});
  EXPECT_EQ(unknown.code, kExitConfig);
  EXPECT_EQ(unknown.out["error"], "UnknownSuite");
}

TEST(Cli, FailingSolveExitsOne) {
  EXPECT_EQ(run({"solve", "banach", "--config", kData + "/affine.toml", "--max-iter", "3"}).code, kExitFailure);
}

TEST(Cli, MalformedConfigExitsTwo) {
  const auto r = run({"xi", "--config", kData + "/missing.toml", "--point", "1,1"});
  EXPECT_EQ(r.code, kExitConfig);
  EXPECT_FALSE(r.err.empty());
}

TEST(Config, ErrorsNameTheField) {
  EXPECT_NE(config_error("e = [1.0, 0.0]").find("'e'"), std::string::npos);
  EXPECT_NE(config_error("[cone]\nkind = \"cube\"").find("cone.kind"), std::string::npos);
  EXPECT_NE(config_error("[cone]\nkind = \"orthant\"\ndim = 2\nbogus = 1").find("cone.bogus"), std::string::npos);
  EXPECT_NE(config_error("[sample]\ncount = 0").find("sample.count"), std::string::npos);
  EXPECT_NE(config_error("e = [1.0, 1.0, 1.0]\n[cone]\nkind = \"orthant\"\ndim = 2").find("'e'"), std::string::npos);
  EXPECT_NE(config_error("[map]\nkind = \"diagonal_affine\"\na = \"x\"\nb = [1.0]").find("map.a"), std::string::npos);
  EXPECT_FALSE(config_error("e = [1.0,").empty());
}

TEST(Config, DefaultsAndDigest) {
  const auto c = parse_config("e = [1.0, 2.0]\n[cone]\nkind = \"orthant\"\ndim = 2\n");
  EXPECT_EQ(c.e, (Vector{1.0, 2.0}));
  EXPECT_EQ(c.digest.size(), 16u);
  EXPECT_EQ(c.digest, parse_config("e = [1.0, 2.0]\n[cone]\nkind = \"orthant\"\ndim = 2\n").digest);
  EXPECT_EQ(default_config().cone.dim(), 2u);
}

}  // namespace
}  // namespace tvscone
