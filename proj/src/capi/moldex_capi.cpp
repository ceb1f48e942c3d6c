// Copyright 2026 The Moldex Authors
//
// Licensed under the Apache License, Version 2.0 (the "License");
// you may not use this file except in compliance with the License.
// You may obtain a copy of the License at
//
//     http://www.apache.org/licenses/LICENSE-2.0
//
// Unless required by applicable law or agreed to in writing, software
// distributed under the License is distributed on an "AS IS" BASIS,
// WITHOUT WARRANTIES OR CONDITIONS OF ANY KIND, either express or implied.
// See the License for the specific language governing permissions and
// limitations under the License.

#include "moldex/moldex.h"

#include <cstdlib>
#include <cstring>
#include <sstream>
#include <string>

#include "moldex/core/client.hpp"
#include "moldex/core/diff.hpp"
#include "moldex/core/errors.hpp"
#include "moldex/core/server.hpp"
#include "moldex/core/session.hpp"
#include "moldex/core/transformation.hpp"
#include "moldex/packs/packs.hpp"

struct moldex_server {
  moldex::SessionHub hub;
  std::unique_ptr<moldex::DebugServer> server;
};

struct moldex_client {
  std::unique_ptr<moldex::LineClient> client;
};

namespace {

thread_local std::string last_error;

moldex_status fail(moldex_status status, std::string message) {
  last_error = std::move(message);
  return status;
}

moldex_status status_of(moldex::ErrorCode code) {
  using moldex::ErrorCode;
  switch (code) {
    case ErrorCode::invalid_argument: return MOLDEX_E_INVALID_ARGUMENT;
    case ErrorCode::bind_failure: return MOLDEX_E_BIND_FAILURE;
    case ErrorCode::io_error: return MOLDEX_E_IO;
    case ErrorCode::unknown_pack: return MOLDEX_E_UNKNOWN_PACK;
    case ErrorCode::protocol_error: return MOLDEX_E_PROTOCOL;
    default: return MOLDEX_E_FRAMEWORK;
  }
}

char* copy_out(const std::string& text) {
  char* out = static_cast<char*>(std::malloc(text.size() + 1));
  if (out != nullptr) std::memcpy(out, text.c_str(), text.size() + 1);
  return out;
}

/// Runs `body`, translating exceptions into status codes.
template <class F>
moldex_status guarded(F&& body) {
  try {
    last_error.clear();
    body();
    return MOLDEX_OK;
  } catch (const moldex::FrameworkError& e) {
    return fail(status_of(e.code()), e.what());
  } catch (const nlohmann::json::exception& e) {
    return fail(MOLDEX_E_INVALID_ARGUMENT, std::string("invalid JSON: ") + e.what());
  } catch (const std::exception& e) {
    return fail(MOLDEX_E_INTERNAL, e.what());
  } catch (...) {
    return fail(MOLDEX_E_INTERNAL, "unknown failure");
  }
}

bool require(const void* p, const char* what) {
  if (p != nullptr) return true;
  last_error = std::string(what) + " must not be NULL";
  return false;
}

}  // namespace

extern "C" {

const char* moldex_version(void) { return "0.1.0"; }

const char* moldex_status_string(moldex_status status) {
  switch (status) {
    case MOLDEX_OK: return "ok";
    case MOLDEX_E_INVALID_ARGUMENT: return "invalid_argument";
    case MOLDEX_E_BIND_FAILURE: return "bind_failure";
    case MOLDEX_E_IO: return "io_error";
    case MOLDEX_E_UNKNOWN_PACK: return "unknown_pack";
    case MOLDEX_E_PROTOCOL: return "protocol_error";
    case MOLDEX_E_FRAMEWORK: return "framework_error";
    case MOLDEX_E_INTERNAL: return "internal_error";
  }
  return "unknown";
}

const char* moldex_last_error(void) { return last_error.c_str(); }

void moldex_string_free(char* text) { std::free(text); }

moldex_status moldex_server_start(const char* host, int port, int http_port, const char* ui_dir,
                                  moldex_server** out) {
  if (!require(out, "out")) return MOLDEX_E_INVALID_ARGUMENT;
  *out = nullptr;
  return guarded([&] {
    auto handle = std::make_unique<moldex_server>();
    moldex::ServerConfig config;
    if (host != nullptr) config.host = host;
    config.port = port;
    if (http_port >= 0) config.http_port = http_port;
    if (ui_dir != nullptr) config.ui_dir = ui_dir;
    handle->server = std::make_unique<moldex::DebugServer>(handle->hub, std::move(config));
    handle->server->start();
    *out = handle.release();
  });
}

int moldex_server_port(const moldex_server* server) { return server != nullptr ? server->server->port() : -1; }

int moldex_server_http_port(const moldex_server* server) {
  return server != nullptr ? server->server->http_port() : -1;
}

moldex_status moldex_server_handle(moldex_server* server, const char* request_json, char** response_json) {
  if (!require(server, "server") || !require(request_json, "request_json") || !require(response_json, "response_json")) {
    return MOLDEX_E_INVALID_ARGUMENT;
  }
  return guarded([&] { *response_json = copy_out(server->server->handler().handle_line(request_json)); });
}

void moldex_server_stop(moldex_server* server) {
  if (server == nullptr) return;
  server->server->stop();
  delete server;
}

moldex_status moldex_run_pack(moldex_server* server, const char* pack, const char* options_json,
                              moldex_session_callback on_open, void* user_data, char** outcome_json) {
  if (!require(pack, "pack")) return MOLDEX_E_INVALID_ARGUMENT;
  return guarded([&] {
    const auto options = options_json != nullptr && *options_json != '\0' ? nlohmann::json::parse(options_json)
                                                                            : nlohmann::json::object();
    moldex::packs::PackOptions pack_options;
    if (options.contains("data_dir")) pack_options.data_dir = options["data_dir"].get<std::string>();
    pack_options.reset = options.value("reset", false);

    // auto_fix overrides the process setting for this run only.
    moldex::TransformationSettings local(true);
    const auto& global = moldex::TransformationSettings::default_instance();
    local.set_allow_automatic(options.value("auto_fix", global.allows_automatic()));
    local.set_change_log(global.change_log());

    moldex::GuardConfig config;
    config.settings = &local;
    if (server != nullptr) config.hub = &server->hub;
    if (on_open != nullptr) {
      config.on_open = [on_open, user_data](const moldex::DebugSession& session) {
        on_open(session.summary().dump().c_str(), user_data);
      };
    }
    const auto outcome = moldex::packs::run_pack(pack, pack_options, std::move(config));
    if (outcome_json != nullptr) *outcome_json = copy_out(outcome.to_json().dump());
  });
}

moldex_status moldex_pack_names(char** names_json) {
  if (!require(names_json, "names_json")) return MOLDEX_E_INVALID_ARGUMENT;
  return guarded([&] { *names_json = copy_out(nlohmann::json(moldex::packs::pack_names()).dump()); });
}

void moldex_settings_set_auto_transform(int allow) {
  moldex::TransformationSettings::default_instance().set_allow_automatic(allow != 0);
}

int moldex_settings_get_auto_transform(void) {
  return moldex::TransformationSettings::default_instance().allows_automatic() ? 1 : 0;
}

int moldex_settings_load_environment(void) {
  return moldex::TransformationSettings::default_instance().load_environment() ? 1 : 0;
}

moldex_status moldex_settings_load_file(const char* path) {
  if (!require(path, "path")) return MOLDEX_E_INVALID_ARGUMENT;
  return guarded([&] { moldex::TransformationSettings::default_instance().load_file(path); });
}

moldex_status moldex_client_connect(const char* host, int port, moldex_client** out) {
  if (!require(out, "out")) return MOLDEX_E_INVALID_ARGUMENT;
  *out = nullptr;
  return guarded([&] {
    auto handle = std::make_unique<moldex_client>();
    handle->client = std::make_unique<moldex::LineClient>(host != nullptr ? host : "127.0.0.1", port);
    *out = handle.release();
  });
}

moldex_status moldex_client_request(moldex_client* client, const char* request_json, char** response_json) {
  if (!require(client, "client") || !require(request_json, "request_json") || !require(response_json, "response_json")) {
    return MOLDEX_E_INVALID_ARGUMENT;
  }
  return guarded([&] { *response_json = copy_out(client->client->request_line(request_json)); });
}

moldex_status moldex_client_run_script(moldex_client* client, const char* session_id, const char* script,
                                       char** transcript, int* failures) {
  if (!require(client, "client") || !require(script, "script")) return MOLDEX_E_INVALID_ARGUMENT;
  return guarded([&] {
    std::istringstream commands(script);
    std::ostringstream out;
    const int failed = moldex::run_text_client(*client->client, session_id != nullptr ? session_id : "", commands, out);
    if (failures != nullptr) *failures = failed;
    if (transcript != nullptr) *transcript = copy_out(out.str());
  });
}

void moldex_client_close(moldex_client* client) { delete client; }

moldex_status moldex_text_diff(const char* left, const char* right, char** hunks_json) {
  if (!require(left, "left") || !require(right, "right") || !require(hunks_json, "hunks_json")) {
    return MOLDEX_E_INVALID_ARGUMENT;
  }
  return guarded([&] {
    const auto hunks = moldex::compute_text_diff(left, right);
    *hunks_json = copy_out(moldex::hunks_to_json(hunks).dump());
  });
}

}  // extern "C"
