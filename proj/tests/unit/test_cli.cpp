#include <gtest/gtest.h>

#include <array>
#include <cstdio>
#include <set>
#include <string>
#include <sys/wait.h>

#include "gauge_atlas/cli.hpp"

using namespace gauge_atlas;
using cli::CommandRequest;
using nlohmann::json;

namespace {

const std::string kManifolds = GAUGE_ATLAS_BUNDLED_MANIFOLD_DIR;
const std::string kData = GAUGE_ATLAS_TEST_DATA_DIR;

CommandRequest request(std::string sub, std::optional<std::string> manifold,
                       std::map<std::string, std::string> params) {
  return {std::move(sub), std::move(manifold), std::move(params)};
}

struct RunResult {
  int status;
  std::string out;
};

RunResult run_binary(const std::string& args) {
  const std::string cmd = std::string(GAUGE_ATLAS_CLI_PATH) + " " + args + " 2>/dev/null";
  FILE* pipe = popen(cmd.c_str(), "r");
  if (pipe == nullptr) return {-1, ""};
  std::string out;
  std::array<char, 4096> buf{};
  while (const auto n = std::fread(buf.data(), 1, buf.size(), pipe)) out.append(buf.data(), n);
  const int raw = pclose(pipe);
  return {WIFEXITED(raw) ? WEXITSTATUS(raw) : -1, out};
}

}  // namespace

TEST(Dispatch, ClassifySigma2) {
  const auto rep = cli::dispatch(request("classify", kManifolds + "/sigma2.json", {{"r", "3"}}));
  ASSERT_TRUE(rep.ok) << rep.message;
  EXPECT_EQ(rep.payload["count"], 3);
  EXPECT_EQ(rep.payload["bundles"].size(), 3u);
  EXPECT_EQ(rep.payload["bundles"][2]["t2"]["coefficients"], json::array({2}));
  EXPECT_EQ(rep.provenance["manifold"]["name"], "Sigma2");
  EXPECT_EQ(rep.exit_code(), 0);
}

TEST(Dispatch, ClassifyProductWindow) {
  const auto rep = cli::dispatch(
      request("classify", kManifolds + "/t3.json", {{"r", "2"}, {"product", "true"}, {"q-min", "-2"}, {"q-max", "2"}}));
  ASSERT_TRUE(rep.ok) << rep.message;
  for (const auto& b : rep.payload["bundles"]) EXPECT_TRUE(b["woodward_check"].get<bool>());
  EXPECT_EQ(rep.payload["dimension"], 4);
}

TEST(Dispatch, ExistsDegreeOne) {
  const auto rep = cli::dispatch(request("exists-degree", kManifolds + "/t3.json",
                                         {{"r", "2"}, {"c", "1,0,0"}, {"sigma", "1,0,0"}, {"degree-one", "true"}}));
  ASSERT_TRUE(rep.ok) << rep.message;
  EXPECT_EQ(rep.payload["class"]["deg"]["value"], 1);
  EXPECT_EQ(rep.payload["class"]["eta"]["coefficients"], json::array({1, 0, 0}));
  EXPECT_TRUE(rep.payload["admissible"].get<bool>());
  const auto neg = cli::dispatch(request(
      "exists-degree", kManifolds + "/t3.json",
      {{"r", "2"}, {"c", "1,0,0"}, {"sigma", "1,0,0"}, {"degree-one", "true"}, {"orientation", "-"}}));
  EXPECT_EQ(neg.payload["class"]["deg"]["value"], -1);
}

TEST(Dispatch, LieCheckSuites) {
  const auto rep = cli::dispatch(request("lie-check", std::nullopt, {{"r", "4"}, {"samples", "100"}}));
  EXPECT_TRUE(rep.payload["killing"]["pass"].get<bool>());
  EXPECT_LT(rep.payload["killing"]["max_error"].get<double>(), 1e-9);
  EXPECT_NEAR(rep.payload["coroot"]["norm"].get<double>(), 2.0, 1e-12);
  // exp(xi) = Id, so the spectrum is (1, 1, 1, 1) and sits at distance 2
  // from the target (-1, -1, 1, 1); the suite reports that as a failure.
  for (const auto& ev : rep.payload["coroot"]["exp_eigenvalues"]) EXPECT_NEAR(ev[0].get<double>(), 1.0, 1e-9);
  EXPECT_NEAR(rep.payload["coroot"]["exp_eigenvalue_error"].get<double>(), 2.0, 1e-9);
  EXPECT_FALSE(rep.payload["all_pass"].get<bool>());
  EXPECT_EQ(*rep.error, ErrorCode::invariant_violation);
}

TEST(Dispatch, GaugeComponentsQuery) {
  const auto rep = cli::dispatch(
      request("gauge-components", kManifolds + "/t3.json", {{"r", "2"}, {"t2", "0,0,1"}, {"eta", "0,0,1"}, {"deg", "3"}}));
  ASSERT_TRUE(rep.ok) << rep.message;
  EXPECT_EQ(rep.payload["pi0"]["kind"], "congruence_subset");
  EXPECT_TRUE(rep.payload["query"]["admissible"].get<bool>());
}

TEST(Dispatch, MappingTorusDecodeOddQ4) {
  const auto rep = cli::dispatch(
      request("mapping-torus", kManifolds + "/t3.json", {{"r", "2"}, {"eta", "0,0,0"}, {"q4", "3"}}));
  EXPECT_FALSE(rep.ok);
  EXPECT_EQ(*rep.error, ErrorCode::claim1_violation);
}

TEST(Dispatch, GSigma) {
  const auto rep = cli::dispatch(request(
      "g-sigma", kManifolds + "/s1xsigma1.json",
      {{"r", "3"}, {"sigma", "1,0,0"}, {"gamma", "1,0,0"}, {"d", "1"}, {"eta", "2,0,0"}, {"deg", "2"}}));
  ASSERT_TRUE(rep.ok) << rep.message;
  EXPECT_EQ(rep.payload["k"], 2);
}

TEST(Dispatch, VerifyLatticeConstant) {
  const auto rep = cli::dispatch(request("verify-lattice", std::nullopt,
                                         {{"config", "constant-curvature"}, {"grid", "8"}, {"kappa", "coroot"}}));
  ASSERT_TRUE(rep.ok) << rep.message;
  EXPECT_NEAR(rep.payload["value"].get<double>(), 8.0, 1e-9);
  EXPECT_EQ(rep.payload["nearest_integer"], 8);
  EXPECT_FALSE(rep.payload.contains("runtime"));
  EXPECT_TRUE(rep.timing.contains("runtime_seconds"));
}

TEST(Dispatch, ManifoldByBundledName) {
  const auto rep = cli::dispatch(request("classify", "sigma1", {{"r", "2"}}));
  ASSERT_TRUE(rep.ok) << rep.message;
  EXPECT_EQ(rep.payload["count"], 2);
}

TEST(Dispatch, Determinism) {
  const auto req = request("classify", kManifolds + "/t3.json", {{"r", "3"}});
  EXPECT_EQ(cli::deterministic_text(cli::dispatch(req)), cli::deterministic_text(cli::dispatch(req)));
  const auto lat = request("verify-lattice", std::nullopt, {{"config", "winding"}, {"grid", "6"}, {"s-steps", "4"}});
  EXPECT_EQ(cli::deterministic_text(cli::dispatch(lat)), cli::deterministic_text(cli::dispatch(lat)));
}

TEST(Dispatch, DistinctStableErrorCodes) {
  const std::vector<std::pair<CommandRequest, ErrorCode>> cases = {
      {request("frobnicate", std::nullopt, {}), ErrorCode::unknown_subcommand},
      {request("classify", kData + "/missing.json", {{"r", "2"}}), ErrorCode::io_error},
      {request("classify", kData + "/malformed.json", {{"r", "2"}}), ErrorCode::parse_error},
      {request("classify", kData + "/truncated.json", {{"r", "2"}}), ErrorCode::schema_error},
      {request("classify", kData + "/nonunimodular.json", {{"r", "2"}}), ErrorCode::invariant_violation},
      {request("classify", kManifolds + "/t3.json", {{"r", "1"}}), ErrorCode::invalid_argument},
      {request("classify", kManifolds + "/t3.json", {{"r", "2"}, {"product", "true"}}), ErrorCode::missing_window},
      {request("mapping-torus", kManifolds + "/t3.json", {{"r", "3"}, {"eta", "0,0,0"}, {"deg", "1"}}),
       ErrorCode::woodward_violation},
      {request("mapping-torus", kManifolds + "/t3.json", {{"r", "2"}, {"eta", "0,0,0"}, {"q4", "1"}}),
       ErrorCode::claim1_violation},
      {request("exists-degree", kManifolds + "/t3.json",
               {{"r", "4"}, {"c", "2,0,0"}, {"sigma", "1,0,0"}, {"degree-one", "true"}}),
       ErrorCode::degree_one_not_guaranteed},
      {request("exists-degree", kManifolds + "/sigma1.json", {{"r", "2"}, {"c", "1"}, {"sigma", "1,0"}}),
       ErrorCode::unsupported},
      {request("g-sigma", kManifolds + "/s1xsigma1.json",
               {{"r", "3"}, {"sigma", "1,0,0"}, {"gamma", "1,0,0"}, {"d", "1"}, {"eta", "0,1,0"}, {"deg", "0"}}),
       ErrorCode::not_in_g_sigma},
  };
  for (const auto& [req, code] : cases) {
    const auto rep = cli::dispatch(req);
    ASSERT_FALSE(rep.ok) << req.subcommand;
    EXPECT_EQ(*rep.error, code) << rep.message;
    EXPECT_EQ(rep.exit_code(), static_cast<int>(code));
    EXPECT_EQ(cli::to_json(rep)["error"]["code"], std::string(to_string(code)));
  }
  std::set<int> codes;
  for (const auto& [req, code] : cases) codes.insert(static_cast<int>(code));
  EXPECT_EQ(codes.size(), cases.size());
}

TEST(Dispatch, WindingNeedsRankTwo) {
  const auto rep = cli::dispatch(request("verify-lattice", std::nullopt, {{"config", "winding"}, {"r", "3"}}));
  EXPECT_EQ(*rep.error, ErrorCode::unsupported);
}

TEST(Dispatch, RequestValidation) {
  auto rep = cli::dispatch(request("lie-check", std::nullopt, {{"r", "2"}, {"grid", "8"}}));
  EXPECT_EQ(*rep.error, ErrorCode::invalid_argument);
  rep = cli::dispatch(request("classify", std::nullopt, {{"r", "2"}}));
  EXPECT_EQ(*rep.error, ErrorCode::invalid_argument);
  rep = cli::dispatch(request("exists-degree", kManifolds + "/t3.json", {{"r", "2"}, {"c", "1,x,0"}, {"sigma", "1,0,0"}}));
  EXPECT_EQ(*rep.error, ErrorCode::invalid_argument);
}

TEST(Binary, ClassifyEmitsSingleJsonDocument) {
  const auto res = run_binary("classify --manifold " + kManifolds + "/sigma2.json --r 3");
  ASSERT_EQ(res.status, 0);
  const auto doc = json::parse(res.out);
  EXPECT_EQ(doc["status"], "ok");
  EXPECT_EQ(doc["payload"]["bundles"].size(), 3u);
  // One bundle record per line.
  std::size_t lines = 0;
  for (std::size_t pos = 0; (pos = res.out.find("{\"lift_type\"", pos)) != std::string::npos; ++pos) ++lines;
  EXPECT_EQ(lines, 3u);
}

TEST(Binary, ExistsDegreeOne) {
  const auto res =
      run_binary("exists-degree --manifold " + kManifolds + "/t3.json --r 2 --c 1,0,0 --sigma 1,0,0 --degree-one");
  ASSERT_EQ(res.status, 0);
  EXPECT_EQ(json::parse(res.out)["payload"]["class"]["deg"]["value"], 1);
}

TEST(Binary, ErrorExitCodes) {
  auto res = run_binary("frobnicate");
  EXPECT_EQ(res.status, static_cast<int>(ErrorCode::unknown_subcommand));
  EXPECT_EQ(json::parse(res.out)["error"]["code"], "unknown_subcommand");
  res = run_binary("classify --manifold " + kData + "/nothere.json --r 2");
  EXPECT_EQ(res.status, static_cast<int>(ErrorCode::io_error));
  res = run_binary("classify --r 2");
  EXPECT_EQ(res.status, static_cast<int>(ErrorCode::invalid_argument));
  EXPECT_EQ(json::parse(res.out)["status"], "error");
}

TEST(Binary, PrettyOutput) {
  const auto res = run_binary("classify --manifold " + kManifolds + "/sigma1.json --r 2 --pretty");
  ASSERT_EQ(res.status, 0);
  EXPECT_EQ(res.out.rfind("status", 0), 0u);
  EXPECT_NE(res.out.find("\ncount       2\n"), std::string::npos);
}

TEST(Binary, ManifoldDirectoryFromEnvironment) {
  const auto res = run_binary("classify --manifold pinned --r 2");
  EXPECT_EQ(res.status, static_cast<int>(ErrorCode::io_error));
  const std::string cmd = "GAUGE_ATLAS_MANIFOLD_DIR=" + kManifolds + " " + GAUGE_ATLAS_CLI_PATH +
                          " classify --manifold s1xs2 --r 2 >/dev/null 2>&1";
  EXPECT_EQ(WEXITSTATUS(std::system(cmd.c_str())), 0);
}
