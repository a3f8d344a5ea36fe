#include <gtest/gtest.h>

#include <functional>
#include <string>

#include "gauge_atlas/io.hpp"

using namespace gauge_atlas;

namespace {

const std::string kManifolds = GAUGE_ATLAS_BUNDLED_MANIFOLD_DIR;
const std::string kData = GAUGE_ATLAS_TEST_DATA_DIR;

Error error_of(const std::function<void()>& f) {
  try {
    f();
  } catch (const Error& e) {
    return e;
  }
  return Error(ErrorCode::invalid_argument, "no error raised");
}

}  // namespace

TEST(Sha256, KnownVectors) {
  EXPECT_EQ(io::sha256_hex(""), "e3b0c44298fc1c149afbf4c8996fb92427ae41e4649b934ca495991b7852b855");
  EXPECT_EQ(io::sha256_hex("abc"), "ba7816bf8f01cfea414140de5dae2223b00361a396177a9cb410ff61f20015ad");
}

TEST(ParseManifoldFile, BundledT3) {
  const auto loaded = io::parse_manifold_file(kManifolds + "/t3.json");
  EXPECT_EQ(loaded.model.name(), "T3");
  EXPECT_EQ(loaded.model.dimension(), 3);
  EXPECT_EQ(loaded.model.b1(), 3);
  EXPECT_EQ(loaded.model.pairing(), IntMatrix::identity(3));
  EXPECT_EQ(loaded.digest.rfind("sha256:", 0), 0u);
  EXPECT_EQ(loaded.digest.size(), 7u + 64u);
  EXPECT_EQ(io::parse_manifold_file(kManifolds + "/t3.json").digest, loaded.digest);
}

TEST(ParseManifoldFile, BundledS1xS2) {
  const auto m = io::parse_manifold_file(kManifolds + "/s1xs2.json").model;
  EXPECT_EQ(m.dimension(), 3);
  EXPECT_EQ(m.b1(), 1);
  EXPECT_EQ(m.pairing(), IntMatrix::from_rows({{1}}));
}

TEST(ParseManifoldFile, AllBundledLoad) {
  for (const char* name : {"s3", "s1xsigma1", "s1xsigma2", "sigma1", "sigma2", "sigma3"})
    EXPECT_NO_THROW(io::parse_manifold_file(kManifolds + "/" + name + ".json")) << name;
  EXPECT_EQ(io::parse_manifold_file(kManifolds + "/sigma3.json").model.b1(), 6);
  EXPECT_EQ(io::parse_manifold_file(kManifolds + "/s3.json").model.b1(), 0);
}

TEST(ParseManifoldFile, TruncatedNamesMissingField) {
  const auto e = error_of([] { io::parse_manifold_file(kData + "/truncated.json"); });
  EXPECT_EQ(e.code(), ErrorCode::schema_error);
  EXPECT_NE(std::string(e.what()).find("'b1'"), std::string::npos);
}

TEST(ParseManifoldFile, NonUnimodular) {
  const auto e = error_of([] { io::parse_manifold_file(kData + "/nonunimodular.json"); });
  EXPECT_EQ(e.code(), ErrorCode::invariant_violation);
  EXPECT_NE(std::string(e.what()).find("not unimodular"), std::string::npos);
}

TEST(ParseManifoldFile, MalformedJson) {
  EXPECT_EQ(error_of([] { io::parse_manifold_file(kData + "/malformed.json"); }).code(), ErrorCode::parse_error);
}

TEST(ParseManifoldFile, NonIntegerEntryNamesPath) {
  const auto e = error_of([] { io::parse_manifold_file(kData + "/non_integer.json"); });
  EXPECT_EQ(e.code(), ErrorCode::schema_error);
  EXPECT_NE(std::string(e.what()).find("cup12[1][1]"), std::string::npos);
}

TEST(ParseManifoldFile, MissingFile) {
  EXPECT_EQ(error_of([] { io::parse_manifold_file(kData + "/no_such_file.json"); }).code(), ErrorCode::io_error);
}

TEST(LoadManifold, SchemaErrors) {
  const auto code = [](const std::string& text) {
    return error_of([&] { io::load_manifold_text(text); }).code();
  };
  EXPECT_EQ(code("[1, 2]"), ErrorCode::schema_error);
  EXPECT_EQ(code(R"({"dimension": 3, "b1": 0, "cup12": []})"), ErrorCode::schema_error);
  EXPECT_EQ(code(R"({"name": 5, "dimension": 3, "b1": 0, "cup12": []})"), ErrorCode::schema_error);
  EXPECT_EQ(code(R"({"name": "x", "dimension": 3, "b1": 1, "cup12": []})"), ErrorCode::schema_error);
  EXPECT_EQ(code(R"({"name": "x", "dimension": 3, "b1": -1, "cup12": []})"), ErrorCode::schema_error);
  EXPECT_EQ(code(R"({"name": "x", "dimension": 2, "b1": 2, "cup12": [[0, 1], [-1, 0]]})"), ErrorCode::schema_error);
  EXPECT_EQ(code(R"({"name": "x", "dimension": 4, "b1": 0})"), ErrorCode::invariant_violation);
  EXPECT_EQ(code(R"({"name": "x", "dimension": 2, "b1": 2, "cup11": [[0, 1], [1, 0]]})"),
            ErrorCode::invariant_violation);
  EXPECT_NO_THROW(io::load_manifold_text(R"({"name": "x", "dimension": 2, "b1": 2, "cup11": [[0, 1], [-1, 0]]})"));
}

TEST(Records, ManifoldRoundTrip) {
  const auto m = io::parse_manifold_file(kManifolds + "/sigma2.json").model;
  const auto again = io::load_manifold(io::manifold_record(m));
  EXPECT_EQ(again, m);
}

TEST(Records, BundleAndGauge) {
  const CohomologyModel x("T3", 3, IntMatrix::identity(3));
  const auto p = make_bundle(x, 3, CohClass::integral_class(2, {4, 0, 1}));
  const auto rec = io::bundle_record(p);
  EXPECT_EQ(rec["r"], 3);
  EXPECT_EQ(rec["manifold"], "T3");
  EXPECT_EQ(rec["t2"]["ring"], "Z_3");
  EXPECT_EQ(rec["t2"]["coefficients"], nlohmann::json::array({1, 0, 1}));
  EXPECT_EQ(rec["t2_lift"]["ring"], "Z");
  EXPECT_TRUE(rec["q4"].is_null());
  const auto g = make_gauge_class(x, 3, {1, 0, 0}, 4);
  const auto gr = io::gauge_record(g);
  EXPECT_EQ(gr["eta"]["ring"], "Z_3");
  EXPECT_EQ(gr["deg"]["ring"], "Z");
  EXPECT_EQ(gr["deg"]["value"], 4);
  EXPECT_EQ(io::gauge_record(g, -1)["deg"]["value"], -4);
  EXPECT_EQ(io::q4_record(6)["coefficient"], 6);
}

TEST(Render, OneRecordPerLineAndParsesBack) {
  nlohmann::json doc = {{"status", "ok"},
                        {"payload", {{"count", 2}, {"bundles", {{{"a", 1}}, {{"a", 2}}}}}},
                        {"error", nullptr}};
  const auto text = io::render(doc);
  EXPECT_EQ(nlohmann::json::parse(text), doc);
  EXPECT_NE(text.find("\n      {\"a\":1},\n      {\"a\":2}\n"), std::string::npos);
}
