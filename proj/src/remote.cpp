#include "arena/remote.hpp"

#include <chrono>
#include <condition_variable>
#include <cstdlib>
#include <mutex>
#include <thread>

#include "arena/boxed.hpp"
#include "arena/errors.hpp"
#include "httplib.h"

namespace arena {

void RemoteConfig::validate() const {
  if (base_url.empty()) throw ConfigError("remote: base_url must be set");
  if (timeout_ms <= 0) throw ConfigError("remote: timeout_ms must be > 0");
  if (max_retries < 0) throw ConfigError("remote: max_retries must be >= 0");
  if (max_in_flight < 1) throw ConfigError("remote: max_in_flight must be >= 1");
}

Json remote_config_to_json(const RemoteConfig& c) {
  return Json{{"base_url", c.base_url},
              {"path", c.path},
              {"api_key_env", c.api_key_env},
              {"temperature", c.temperature},
              {"timeout_ms", c.timeout_ms},
              {"max_retries", c.max_retries},
              {"backoff_base_ms", c.backoff_base_ms},
              {"max_in_flight", c.max_in_flight}};
}

RemoteConfig remote_config_from_json(const Json& j, const std::string& path) {
  RemoteConfig c;
  if (j.contains("base_url")) c.base_url = require_string(j, "base_url", path);
  if (j.contains("path")) c.path = require_string(j, "path", path);
  if (j.contains("api_key_env")) c.api_key_env = require_string(j, "api_key_env", path);
  if (j.contains("temperature")) c.temperature = require_number(j, "temperature", path);
  if (j.contains("timeout_ms")) c.timeout_ms = static_cast<int>(require_int(j, "timeout_ms", path));
  if (j.contains("max_retries"))
    c.max_retries = static_cast<int>(require_int(j, "max_retries", path));
  if (j.contains("backoff_base_ms"))
    c.backoff_base_ms = static_cast<int>(require_int(j, "backoff_base_ms", path));
  if (j.contains("max_in_flight"))
    c.max_in_flight = static_cast<int>(require_int(j, "max_in_flight", path));
  return c;
}

Json build_request_body(const PolicyRequest& request, double temperature) {
  Json history = Json::array();
  for (const VisibleClue& c : request.history) {
    history.push_back(
        Json{{"player", c.speaker + 1}, {"round", c.round + 1}, {"text", c.text}});
  }
  Json scene_view = Json{{"scene", request.scene != nullptr ? scene_to_json(*request.scene)
                                                            : Json(nullptr)},
                         {"history", std::move(history)}};
  return Json{{"messages", Json::array({Json{{"role", "system"}, {"content", request.prompt}},
                                        Json{{"role", "user"}, {"content", scene_view.dump()}}})},
              {"temperature", temperature},
              {"seed", request.turn_seed},
              {"images", Json::array()}};
}

PolicyResponse interpret_completion(const PolicyRequest& request, const std::string& text,
                                    std::optional<double> logprob, std::optional<double> kl) {
  PolicyResponse response;
  response.raw_text = text;
  response.logprob = logprob;
  response.kl = kl;
  if (request.stage == Stage::Clue) {
    const ClueParse parsed = parse_clue(text);
    response.private_reasoning = parsed.reasoning;
    response.parse_error = parsed.parse_error;
    response.action = ClueAction{parsed.clue_text, std::nullopt};
  } else {
    const VoteParse parsed = parse_vote(text, request.n_players);
    response.private_reasoning = parsed.reasoning;
    response.parse_error = parsed.parse_error;
    response.action =
        VoteAction{parsed.vote.has_value() ? *parsed.vote : std::optional<int>{}};
  }
  return response;
}

struct RemotePolicy::Impl {
  RemoteConfig config;
  std::string api_key;
  std::mutex gate_mutex;
  std::condition_variable gate_cv;
  int in_flight = 0;

  explicit Impl(RemoteConfig c) : config(std::move(c)) {
    config.validate();
    if (const char* key = std::getenv(config.api_key_env.c_str())) {
      api_key = key;
    }
  }

  std::string post_with_retries(const std::string& body) {
    httplib::Client client(config.base_url);
    client.set_connection_timeout(0, config.timeout_ms * 1000LL);
    client.set_read_timeout(config.timeout_ms / 1000, (config.timeout_ms % 1000) * 1000);
    if (!api_key.empty()) {
      client.set_default_headers({{"Authorization", "Bearer " + api_key}});
    }

    std::string last_error;
    for (int attempt = 0; attempt <= config.max_retries; ++attempt) {
      if (attempt > 0) {
        const auto delay = std::chrono::milliseconds(
            static_cast<long long>(config.backoff_base_ms) * (1LL << (attempt - 1)));
        std::this_thread::sleep_for(delay);
      }
      httplib::Result result = client.Post(config.path, body, "application/json");
      if (!result) {
        last_error = "transport error: " + httplib::to_string(result.error());
        continue;
      }
      if (result->status == 200) {
        return result->body;
      }
      last_error = "http status " + std::to_string(result->status);
      if (result->status >= 400 && result->status < 500 && result->status != 429) {
        break;  // a malformed request will not get better with retries
      }
    }
    throw PolicyError("remote policy: " + config.base_url + config.path + ": " + last_error);
  }
};

RemotePolicy::RemotePolicy(RemoteConfig config) : impl_(std::make_unique<Impl>(std::move(config))) {}

RemotePolicy::~RemotePolicy() = default;

PolicyResponse RemotePolicy::act(const PolicyRequest& request) {
  {
    std::unique_lock lock(impl_->gate_mutex);
    impl_->gate_cv.wait(lock, [&] { return impl_->in_flight < impl_->config.max_in_flight; });
    ++impl_->in_flight;
  }
  struct Release {
    Impl* impl;
    ~Release() {
      {
        std::lock_guard lock(impl->gate_mutex);
        --impl->in_flight;
      }
      impl->gate_cv.notify_one();
    }
  } release{impl_.get()};

  const std::string body = build_request_body(request, impl_->config.temperature).dump();
  const std::string response_body = impl_->post_with_retries(body);

  Json j = parse_json(response_body, "remote response");
  const std::string text = require_string(j, "text", "remote response");
  std::optional<double> logprob;
  std::optional<double> kl;
  if (j.contains("logprob") && !j["logprob"].is_null()) logprob = j["logprob"].get<double>();
  if (j.contains("kl") && !j["kl"].is_null()) kl = j["kl"].get<double>();
  return interpret_completion(request, text, logprob, kl);
}

StubPolicy::StubPolicy(std::string fixed_text)
    : responder_([text = std::move(fixed_text)](const PolicyRequest&) { return text; }) {}

StubPolicy::StubPolicy(Responder responder) : responder_(std::move(responder)) {}

PolicyResponse StubPolicy::act(const PolicyRequest& request) {
  return interpret_completion(request, responder_(request), std::nullopt, std::nullopt);
}

}  // namespace arena
