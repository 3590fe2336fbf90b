// Copyright 2026 The mblkit Authors
// SPDX-License-Identifier: Apache-2.0

#include <gtest/gtest.h>
#include <httplib.h>
#include <unistd.h>

#include <cstdlib>
#include <filesystem>
#include <json.hpp>
#include <thread>

#include "corpus.hpp"
#include "mbl/dsl/check.hpp"
#include "mbl/harness/io.hpp"
#include "mbl/harness/jsonl.hpp"
#include "mbl/harness/layout_json.hpp"
#include "mbl/harness/model_client.hpp"
#include "mbl/harness/svg.hpp"
#include "mbl/harness/synth_config.hpp"
#include "mbl/kernel/execute.hpp"
#include "mbl/metrics/metrics.hpp"
#include "mbl/synth/dataset.hpp"
#include "mbl/topology/relations.hpp"

using namespace mbl;
using nlohmann::json;
namespace fs = std::filesystem;

namespace {

kernel::LayoutDocument run(const std::string& src) {
  const auto r = kernel::execute(dsl::compile(src).parsed.program);
  EXPECT_TRUE(r.ok());
  return r.document;
}

fs::path scratch_dir(const std::string& name) {
  const auto d = fs::temp_directory_path() / ("mbl_harness_" + name + "_" + std::to_string(::getpid()));
  fs::remove_all(d);
  fs::create_directories(d);
  return d;
}

// A chat-completions stand-in on a free local port.
class StubEndpoint {
 public:
  StubEndpoint() {
    server_.Post("/v1/chat/completions", [this](const httplib::Request& req, httplib::Response& res) {
      last_auth = req.get_header_value("Authorization");
      last_body = req.body;
      if (status != 200) {
        res.status = status;
        res.set_header("Retry-After", "7");
        res.set_content("echo " + last_auth, "text/plain");
        return;
      }
      json out = {{"choices", {{{"message", {{"role", "assistant"}, {"content", reply}}}}}}};
      res.set_content(out.dump(), "application/json");
    });
    port_ = server_.bind_to_any_port("127.0.0.1");
    thread_ = std::thread([this] { server_.listen_after_bind(); });
    server_.wait_until_ready();
  }
  ~StubEndpoint() {
    server_.stop();
    thread_.join();
  }
  std::string url() const { return "http://127.0.0.1:" + std::to_string(port_) + "/v1"; }

  int status = 200;
  std::string reply;
  std::string last_auth;
  std::string last_body;

 private:
  httplib::Server server_;
  int port_ = 0;
  std::thread thread_;
};

}  // namespace

TEST(LayoutJson, ByteStableAcrossRoundTrip) {
  for (const auto& [id, src] : testdata::golds()) {
    const auto doc = run(src);
    const auto a = harness::export_layout_json(doc);
    EXPECT_EQ(harness::export_layout_json(run(src)), a) << id;
    EXPECT_EQ(harness::export_layout_json(harness::import_layout_json(a)), a) << id;
    EXPECT_EQ(a.back(), '\n');
  }
}

TEST(LayoutJson, TopologyBlock) {
  const auto doc = run(testdata::read("golds/g03_split_row.mbl"));
  const auto rep = topology::analyze(doc);
  const auto j = json::parse(harness::export_layout_json(doc, &rep));
  EXPECT_EQ(j["schema_version"], harness::kLayoutSchemaVersion);
  ASSERT_TRUE(j.contains("topology"));
  EXPECT_EQ(j["topology"]["room_adjacency"]["names"].size(), doc.rooms.size());
  EXPECT_FALSE(json::parse(harness::export_layout_json(doc)).contains("topology"));
}

TEST(LayoutJson, RejectsOtherSchemas) {
  auto j = json::parse(harness::export_layout_json(run(testdata::read("golds/g01_studio.mbl"))));
  j["schema_version"] = 99;
  EXPECT_THROW(harness::import_layout_json(j.dump()), harness::SchemaError);
  EXPECT_THROW(harness::import_layout_json("[1, 2"), harness::SchemaError);
}

TEST(Svg, DeterministicAndWellFormed) {
  const auto doc = run(testdata::read("golds/g22_mixed.mbl"));
  const auto a = harness::render_svg(doc);
  EXPECT_EQ(harness::render_svg(run(testdata::read("golds/g22_mixed.mbl"))), a);
  EXPECT_EQ(a.rfind("<svg", 0), 0u);
  EXPECT_NE(a.find("</svg>"), std::string::npos);
  harness::SvgOptions o;
  o.labels = false;
  const auto plain = harness::render_svg(doc, o);
  EXPECT_EQ(plain.find(doc.rooms.front().label), std::string::npos);
  EXPECT_NE(a.find(doc.rooms.front().label), std::string::npos);
}

TEST(Jsonl, DatasetRoundTrip) {
  synth::DatasetConfig cfg;
  cfg.descriptions_per_design = 2;
  const auto recs = synth::build_partial(testdata::golds(), cfg);
  const auto text = harness::dataset_jsonl(recs);
  const auto back = harness::read_dataset_jsonl(text);
  ASSERT_EQ(back.size(), recs.size());
  EXPECT_EQ(harness::dataset_jsonl(back), text);
  EXPECT_EQ(harness::dataset_jsonl({}), "");
  auto bare = recs[0];
  EXPECT_TRUE(json::parse(harness::to_jsonl(bare)).contains("skeleton"));
  bare.skeleton.clear();
  const auto first = json::parse(harness::to_jsonl(bare));
  EXPECT_EQ(first["schema_version"], harness::kDatasetSchemaVersion);
  EXPECT_FALSE(first.contains("skeleton"));
}

TEST(Jsonl, CoordinateReportOmitsCodeMetrics) {
  const auto g = metrics::prepare_gold("x", testdata::read("golds/g01_studio.mbl"));
  const auto r = metrics::evaluate(g, g.source);
  EXPECT_TRUE(json::parse(harness::to_jsonl(r)).contains("passed"));
  const auto c = json::parse(harness::to_jsonl(r, true));
  EXPECT_FALSE(c.contains("passed"));
  EXPECT_FALSE(c.contains("compiled"));
  EXPECT_TRUE(c.contains("iou"));
}

TEST(Jsonl, LoadTextsFromDirAndFile) {
  const auto dir = scratch_dir("texts");
  harness::write_file_atomic(dir / "a.mbl", "one");
  harness::write_file_atomic(dir / "b.mbl", "two");
  EXPECT_EQ(harness::load_texts(dir, {"prediction"}), (std::map<std::string, std::string>{{"a", "one"}, {"b", "two"}}));
  const auto file = dir / "p.jsonl";
  fs::remove(dir / "a.mbl");
  fs::remove(dir / "b.mbl");
  harness::write_file_atomic(file, "{\"id\": \"x\", \"code_named\": \"c\"}\n{\"id\": \"y\", \"prediction\": \"p\", \"code_named\": \"c\"}\n");
  EXPECT_EQ(harness::load_texts(file, {"prediction", "code_named"}),
            (std::map<std::string, std::string>{{"x", "c"}, {"y", "p"}}));
  fs::remove_all(dir);
}

TEST(Io, AtomicWriteReplacesAndLeavesNoTemp) {
  const auto dir = scratch_dir("io");
  const auto p = dir / "out.txt";
  harness::write_file_atomic(p, "first");
  harness::write_file_atomic(p, "second");
  EXPECT_EQ(harness::read_file(p), "second");
  EXPECT_EQ(std::distance(fs::directory_iterator(dir), fs::directory_iterator{}), 1);
  EXPECT_THROW(harness::read_file(dir / "missing"), harness::IoError);
  EXPECT_THROW(harness::write_file_atomic(dir / "no" / "such" / "dir.txt", "x"), harness::IoError);
  fs::remove_all(dir);
}

TEST(SynthConfig, ParsesAndValidates) {
  const auto s = harness::synth_settings_from_json(R"({"seed": 9, "module_min": 2000, "room_types": ["Bedroom"]})");
  EXPECT_EQ(s.dataset.seed, 9u);
  EXPECT_DOUBLE_EQ(s.grammar.module_min, 2000);
  EXPECT_EQ(s.grammar.room_types, std::vector<std::string>{"Bedroom"});
  EXPECT_THROW(harness::synth_settings_from_json(R"({"colour": 1})"), std::invalid_argument);
  EXPECT_THROW(harness::synth_settings_from_json(R"({"module_min": 9000, "module_max": 2000})"), std::invalid_argument);
  EXPECT_THROW(harness::synth_settings_from_json(R"({"room_types": ["Garage"]})"), std::invalid_argument);
  EXPECT_THROW(harness::synth_settings_from_json(R"({"split_probability": 1.5})"), std::invalid_argument);
}

TEST(Prompt, Substitution) {
  EXPECT_EQ(harness::build_prompt("Describe: {description}!", "a flat"), "Describe: a flat!");
  const auto appended = harness::build_prompt("Task only.", "a flat");
  EXPECT_NE(appended.find("Input:"), std::string::npos);
  EXPECT_NE(appended.find("a flat"), std::string::npos);
  const auto def = harness::build_prompt(harness::default_prompt_template(), "a flat");
  EXPECT_NE(def.find(harness::kTaskInstruction), std::string::npos);
  EXPECT_EQ(def.find("{description}"), std::string::npos);
}

TEST(Prompt, PayloadAndEndpointConfig) {
  harness::ModelEndpointConfig cfg;
  cfg.base_url = "http://localhost/v1";
  cfg.model = "m";
  cfg.temperature = 0.2;
  const auto j = json::parse(harness::request_payload(cfg, "hi"));
  EXPECT_EQ(j["model"], "m");
  EXPECT_DOUBLE_EQ(j["temperature"].get<double>(), 0.2);
  EXPECT_EQ(j["messages"].back()["content"], "hi");
  cfg.temperature = 3;
  EXPECT_THROW(cfg.validate(), std::invalid_argument);
  EXPECT_THROW(harness::endpoint_from_json(R"({"base_url": "ftp://x", "model": "m"})"), std::invalid_argument);
  EXPECT_EQ(harness::endpoint_from_json(R"({"base_url": "https://x/v1", "model": "m", "max_tokens": 10})").max_tokens, 10);
}

TEST(Prompt, CodeFences) {
  EXPECT_EQ(harness::strip_code_fence("```csharp\nModule m;\n```"), "Module m;\n");
  EXPECT_EQ(harness::strip_code_fence("Module m;"), "Module m;");
  EXPECT_EQ(harness::extract_code(R"({"choices":[{"message":{"content":"```\nx\n```"}}]})"), "x\n");
}

TEST(Replay, LooksUpByDescription) {
  const auto c = harness::ReplayClient::from_jsonl(
      "{\"description\": \"d1\", \"response\": \"r1\"}\n{\"description\": \"d2\", \"response\": \"```\\nr2\\n```\"}\n");
  EXPECT_EQ(c.size(), 2u);
  EXPECT_EQ(c.generate("d1"), "r1");
  EXPECT_EQ(c.generate("d2"), "r2\n");
  EXPECT_THROW(c.generate("d3"), harness::TransportError);
}

TEST(LiveClient, TalksChatCompletions) {
  StubEndpoint stub;
  stub.reply = "```csharp\nModule m = new Module(\"M\", initial_point, 1000, 1000);\n```";
  ::setenv("MBL_TEST_TOKEN", "sekrit", 1);
  harness::ModelEndpointConfig cfg;
  cfg.base_url = stub.url();
  cfg.model = "stub";
  cfg.token_env = "MBL_TEST_TOKEN";
  cfg.timeout_seconds = 5;
  EXPECT_EQ(harness::generate_live(cfg, "prompt text"), "Module m = new Module(\"M\", initial_point, 1000, 1000);\n");
  EXPECT_EQ(stub.last_auth, "Bearer sekrit");
  EXPECT_EQ(json::parse(stub.last_body)["messages"].back()["content"], "prompt text");
}

TEST(LiveClient, ErrorStatusKeepsBodyOut) {
  StubEndpoint stub;
  stub.status = 429;
  ::setenv("MBL_TEST_TOKEN", "sekrit", 1);
  harness::ModelEndpointConfig cfg;
  cfg.base_url = stub.url();
  cfg.model = "stub";
  cfg.token_env = "MBL_TEST_TOKEN";
  cfg.timeout_seconds = 5;
  try {
    harness::generate_live(cfg, "p");
    FAIL() << "no error";
  } catch (const harness::TransportError& e) {
    EXPECT_EQ(e.status, 429);
    EXPECT_EQ(e.retry_after, 7);
    EXPECT_EQ(std::string(e.what()).find("sekrit"), std::string::npos);
  }
}

TEST(LiveClient, UnreachableEndpoint) {
  harness::ModelEndpointConfig cfg;
  cfg.base_url = "http://127.0.0.1:1";
  cfg.model = "m";
  cfg.timeout_seconds = 2;
  try {
    harness::generate_live(cfg, "p");
    FAIL() << "no error";
  } catch (const harness::TransportError& e) {
    EXPECT_FALSE(e.status.has_value());
  }
}
