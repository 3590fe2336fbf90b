// Copyright 2026 The mblkit Authors
// SPDX-License-Identifier: Apache-2.0

#pragma once

#include <map>
#include <optional>
#include <stdexcept>
#include <string>
#include <string_view>

namespace mbl::harness {

inline constexpr std::string_view kTaskInstruction =
    "Please transform the given description into a code-implemented modular building layout";

/// Env var that must be "1" before the CLI talks to a live endpoint.
inline constexpr std::string_view kLiveModeEnv = "MBL_LIVE_MODEL";

struct ModelEndpointConfig {
  std::string base_url;  // e.g. https://host/v1; /chat/completions is appended
  std::string model;
  std::string token_env = "MBL_API_TOKEN";  // the variable's name, never its value
  double temperature = 0.0;
  int max_tokens = 2048;
  int timeout_seconds = 60;

  /// Throws std::invalid_argument on a bad field.
  void validate() const;
};

/// Reads {"base_url", "model", "token_env", "temperature", "max_tokens", "timeout_seconds"}
/// and validates the result.
ModelEndpointConfig endpoint_from_json(std::string_view text);

class TransportError : public std::runtime_error {
 public:
  TransportError(const std::string& what, std::optional<int> http_status = std::nullopt,
                 std::optional<int> retry_after_seconds = std::nullopt)
      : std::runtime_error(what), status(http_status), retry_after(retry_after_seconds) {}
  std::optional<int> status;       // HTTP status when one was received
  std::optional<int> retry_after;  // seconds, from a Retry-After header
};

/// Substitutes {description} in the template. A template without the slot
/// gets the description appended after an "Input:" line.
std::string build_prompt(std::string_view prompt_template, std::string_view description);

/// Default template: task, class and function context, requirements, one example, input.
std::string default_prompt_template();

/// Chat-completions request body.
std::string request_payload(const ModelEndpointConfig& cfg, std::string_view prompt);

/// Drops a ``` fence around the whole text, if there is one.
std::string strip_code_fence(const std::string& text);

/// Takes choices[0].message.content and strips a surrounding code fence.
std::string extract_code(std::string_view response_body);

/// One blocking request against the endpoint.
std::string generate_live(const ModelEndpointConfig& cfg, std::string_view prompt);

/// Recorded responses keyed by description, loaded from JSONL lines of
/// {"description": ..., "response": ...}.
class ReplayClient {
 public:
  static ReplayClient from_jsonl(std::string_view text);
  void add(std::string description, std::string response);
  /// Throws TransportError when nothing was recorded for the description.
  std::string generate(std::string_view description) const;
  std::size_t size() const { return responses_.size(); }

 private:
  std::map<std::string, std::string, std::less<>> responses_;
};

}  // namespace mbl::harness
