// Copyright 2026 The mblkit Authors
// SPDX-License-Identifier: Apache-2.0

#include "mbl/harness/model_client.hpp"

#include <cstdlib>
#include <regex>

#include <httplib.h>
#include <json.hpp>

namespace mbl::harness {

namespace {

using json = nlohmann::ordered_json;

struct Url {
  std::string origin;  // scheme://host[:port]
  std::string path;
};

Url split_url(const std::string& url) {
  static const std::regex re(R"(^(https?://[^/]+)(/.*)?$)");
  std::smatch m;
  if (!std::regex_match(url, m, re)) throw std::invalid_argument("base_url must look like http(s)://host[/path]");
  std::string path = m[2].matched ? m[2].str() : "";
  while (!path.empty() && path.back() == '/') path.pop_back();
  return {m[1].str(), path};
}

}  // namespace

void ModelEndpointConfig::validate() const {
  split_url(base_url);
  if (model.empty()) throw std::invalid_argument("model is empty");
  if (!(temperature >= 0.0 && temperature <= 2.0)) throw std::invalid_argument("temperature must lie in [0, 2]");
  if (max_tokens <= 0) throw std::invalid_argument("max_tokens must be positive");
  if (timeout_seconds <= 0) throw std::invalid_argument("timeout_seconds must be positive");
}

ModelEndpointConfig endpoint_from_json(std::string_view text) {
  ModelEndpointConfig c;
  try {
    const auto j = json::parse(text);
    c.base_url = j.value("base_url", c.base_url);
    c.model = j.value("model", c.model);
    c.token_env = j.value("token_env", c.token_env);
    c.temperature = j.value("temperature", c.temperature);
    c.max_tokens = j.value("max_tokens", c.max_tokens);
    c.timeout_seconds = j.value("timeout_seconds", c.timeout_seconds);
  } catch (const json::exception& e) {
    throw std::invalid_argument(std::string("endpoint config: ") + e.what());
  }
  c.validate();
  return c;
}

std::string build_prompt(std::string_view prompt_template, std::string_view description) {
  std::string out(prompt_template);
  const std::string slot = "{description}";
  const auto at = out.find(slot);
  if (at == std::string::npos) {
    if (!out.empty() && out.back() != '\n') out += '\n';
    return out + "Input:\n" + std::string(description) + "\n";
  }
  out.replace(at, slot.size(), description);
  return out;
}

std::string default_prompt_template() {
  std::string t;
  t += "Task:\n";
  t += std::string(kTaskInstruction) + ".\n\n";
  t += "Context:\n";
  t += "Classes Module, Unit and Room are created with `new`. Helper functions live on Utils:\n";
  t += "SplitModule, MergeModules, CreateDoorForRoom, CreateDoorForModule, CreateDoorOnMidpointForRoom,\n";
  t += "CreateDoorOnMidpointForModule, CreateHole. Lengths are millimetres; directions are north, south,\n";
  t += "east and west.\n\n";
  t += "Requirements:\n";
  t += "- Output only code, one statement per line.\n";
  t += "- Declare every entity before it is used.\n";
  t += "- Use named arguments.\n\n";
  t += "Example:\n";
  t += "Module module_1 = new Module(name: \"Module 1\", point: initial_point, length: 3100, width: 5420);\n";
  t += "Unit unit_1 = new Unit(name: \"Unit 1\", modules: new List<Module> { module_1 });\n";
  t += "Room kitchen = new Room(name: \"Kitchen\", module: module_1, unit: unit_1, regular: true);\n\n";
  t += "Input:\n{description}\n";
  return t;
}

std::string request_payload(const ModelEndpointConfig& cfg, std::string_view prompt) {
  json j;
  j["model"] = cfg.model;
  j["messages"] = json::array({json{{"role", "user"}, {"content", std::string(prompt)}}});
  j["temperature"] = cfg.temperature;
  j["max_tokens"] = cfg.max_tokens;
  return j.dump();
}

std::string extract_code(std::string_view response_body) {
  json j;
  try {
    j = json::parse(response_body);
  } catch (const json::parse_error&) {
    throw TransportError("response is not JSON");
  }
  if (!j.contains("choices") || j["choices"].empty()) throw TransportError("response has no choices");
  return strip_code_fence(j["choices"][0]["message"].value("content", ""));
}

std::string strip_code_fence(const std::string& text) {
  static const std::regex fence(R"(^\s*```[A-Za-z#+]*\n([\s\S]*?)\n?```\s*$)");
  std::smatch m;
  if (std::regex_match(text, m, fence)) return m[1].str() + "\n";
  return text;
}

std::string generate_live(const ModelEndpointConfig& cfg, std::string_view prompt) {
  cfg.validate();
  const auto url = split_url(cfg.base_url);
  httplib::Client client(url.origin);
  client.set_connection_timeout(cfg.timeout_seconds, 0);
  client.set_read_timeout(cfg.timeout_seconds, 0);
  httplib::Headers headers;
  if (const char* token = std::getenv(cfg.token_env.c_str()); token && *token) {
    headers.emplace("Authorization", std::string("Bearer ") + token);
  }
  const auto res = client.Post(url.path + "/chat/completions", headers, request_payload(cfg, prompt), "application/json");
  if (!res) throw TransportError("request to " + url.origin + " failed: " + httplib::to_string(res.error()));
  if (res->status != 200) {
    std::optional<int> retry;
    if (res->has_header("Retry-After")) {
      const auto v = res->get_header_value("Retry-After");
      char* end = nullptr;
      const long secs = std::strtol(v.c_str(), &end, 10);
      if (end != v.c_str()) retry = static_cast<int>(secs);
    }
    // the body may echo request headers back; do not surface it
    throw TransportError("endpoint answered HTTP " + std::to_string(res->status), res->status, retry);
  }
  return extract_code(res->body);
}

ReplayClient ReplayClient::from_jsonl(std::string_view text) {
  ReplayClient c;
  while (!text.empty()) {
    const auto nl = text.find('\n');
    const auto line = text.substr(0, nl);
    if (line.find_first_not_of(" \t\r") != std::string_view::npos) {
      const auto j = json::parse(line);
      c.add(j.at("description").get<std::string>(), j.at("response").get<std::string>());
    }
    if (nl == std::string_view::npos) break;
    text.remove_prefix(nl + 1);
  }
  return c;
}

void ReplayClient::add(std::string description, std::string response) {
  responses_.insert_or_assign(std::move(description), std::move(response));
}

std::string ReplayClient::generate(std::string_view description) const {
  const auto it = responses_.find(description);
  if (it == responses_.end()) throw TransportError("no recorded response for this description");
  return strip_code_fence(it->second);
}

}  // namespace mbl::harness
