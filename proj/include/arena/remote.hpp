#pragma once

#include <functional>
#include <memory>
#include <string>

#include "arena/jsonio.hpp"
#include "arena/policy.hpp"

namespace arena {

// Chat-completion-style endpoint configuration. The bearer token is read
// from the environment variable named by `api_key_env` (sent only when set).
struct RemoteConfig {
  std::string base_url;  // e.g. "http://127.0.0.1:8080"
  std::string path = "/v1/completions";
  std::string api_key_env = "ARENA_API_KEY";
  double temperature = 0.7;
  int timeout_ms = 30000;
  int max_retries = 3;        // retries after the first attempt
  int backoff_base_ms = 200;  // doubled per retry
  int max_in_flight = 4;

  void validate() const;
};

Json remote_config_to_json(const RemoteConfig& config);
RemoteConfig remote_config_from_json(const Json& j, const std::string& path);

// Wire request body: {"messages": [...], "temperature": t, "seed": s,
// "images": [...]}. The system message is the rendered stage prompt and the
// user message carries the serialized scene view.
Json build_request_body(const PolicyRequest& request, double temperature);

// Turns a raw completion into a stage action via boxed-answer parsing.
// Total: parse failures surface as flagged fallbacks, never as throws.
PolicyResponse interpret_completion(const PolicyRequest& request, const std::string& text,
                                    std::optional<double> logprob, std::optional<double> kl);

// HTTP policy with timeout, bounded retries with exponential backoff, and a
// configurable in-flight limit. Persistent failure throws PolicyError, which
// the game engine converts into a flagged fallback.
class RemotePolicy final : public Policy {
 public:
  explicit RemotePolicy(RemoteConfig config);
  ~RemotePolicy() override;

  PolicyResponse act(const PolicyRequest& request) override;
  std::string name() const override { return "remote"; }

 private:
  struct Impl;
  std::unique_ptr<Impl> impl_;
};

// Deterministic in-process stand-in for a remote endpoint: the responder
// maps a request to the raw completion text. Exceptions from the responder
// propagate, exercising the engine's fallback path.
class StubPolicy final : public Policy {
 public:
  using Responder = std::function<std::string(const PolicyRequest&)>;

  explicit StubPolicy(std::string fixed_text);
  explicit StubPolicy(Responder responder);

  PolicyResponse act(const PolicyRequest& request) override;
  std::string name() const override { return "stub"; }

 private:
  Responder responder_;
};

}  // namespace arena
