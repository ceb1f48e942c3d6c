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

// moldex command line: serve sessions, run demo packs, drive a session with
// the scripted text client. Uses only the C API.

#include <atomic>
#include <chrono>
#include <csignal>
#include <fstream>
#include <iostream>
#include <iterator>
#include <optional>
#include <sstream>
#include <string>
#include <thread>
#include <vector>

#include <CLI11.hpp>
#include <json.hpp>

#include "moldex/moldex.h"

namespace {

std::atomic<bool> stop_requested{false};

void on_signal(int) { stop_requested = true; }

int report(moldex_status status, const char* what) {
  std::cerr << "moldex: " << what << ": " << moldex_status_string(status) << ": " << moldex_last_error() << "\n";
  return 1;
}

std::string take(char* text) {
  std::string out = text != nullptr ? text : "";
  moldex_string_free(text);
  return out;
}

std::optional<std::string> read_file(const std::string& path) {
  std::ifstream in(path, std::ios::binary);
  if (!in) return std::nullopt;
  return std::string(std::istreambuf_iterator<char>(in), {});
}

struct DemoHook {
  int port = 0;
  std::optional<std::string> script;
  std::vector<std::thread> clients;
  int failures = 0;
};

/// Announces each opened session; with a script, drives it from a client
/// thread while the guard serves.
void on_session_open(const char* session_json, void* user_data) {
  auto& hook = *static_cast<DemoHook*>(user_data);
  const auto session = nlohmann::json::parse(session_json);
  const std::string id = session.value("session_id", "");
  std::cout << "session " << id << " open on port " << hook.port << ": " << session.value("exception_class", "")
            << ": " << session.value("message", "") << std::endl;
  if (!hook.script) return;
  hook.clients.emplace_back([&hook, id] {
    moldex_client* client = nullptr;
    if (const auto status = moldex_client_connect("127.0.0.1", hook.port, &client); status != MOLDEX_OK) {
      report(status, "client");
      return;
    }
    char* transcript = nullptr;
    int failures = 0;
    const auto status = moldex_client_run_script(client, id.c_str(), hook.script->c_str(), &transcript, &failures);
    moldex_client_close(client);
    if (status != MOLDEX_OK) {
      report(status, "client script");
      return;
    }
    std::cout << take(transcript) << std::flush;
    hook.failures += failures;
  });
}

int run_demo(const std::string& pack, moldex_server* server, const nlohmann::json& options, DemoHook& hook) {
  char* outcome = nullptr;
  const auto status = moldex_run_pack(server, pack.c_str(), options.dump().c_str(), on_session_open, &hook, &outcome);
  for (auto& t : hook.clients) t.join();
  hook.clients.clear();
  if (status != MOLDEX_OK) return report(status, ("pack " + pack).c_str());
  std::cout << take(outcome) << std::endl;
  return 0;
}

}  // namespace

int main(int argc, char** argv) {
  moldex_settings_load_environment();

  CLI::App app{"Moldable exception debugger runtime"};
  app.require_subcommand(1);

  // serve
  auto* serve = app.add_subcommand("serve", "Serve debug sessions over the JSON protocol");
  int serve_port = 0;
  std::optional<int> serve_http;
  std::string ui_dir;
  std::vector<std::string> serve_packs;
  std::string serve_data = "moldex-data";
  bool serve_reset = false;
  serve->add_option("--port", serve_port, "Line protocol port (0 picks one)");
  serve->add_option("--http-port", serve_http, "HTTP port for POST /rpc and /ui");
  serve->add_option("--ui-dir", ui_dir, "Static client directory mounted at /ui")->check(CLI::ExistingDirectory);
  serve->add_option("--pack", serve_packs, "Run these packs after startup, serving their sessions");
  serve->add_option("--data-dir", serve_data, "Directory for pack files");
  serve->add_flag("--reset", serve_reset, "Re-seed pack files");

  // demo
  auto* demo = app.add_subcommand("demo", "Run a demo pack under a guard and serve its session");
  std::string demo_pack;
  bool auto_fix = false;
  int demo_port = 0;
  std::optional<int> demo_http;
  std::string demo_data = "moldex-data";
  bool demo_reset = false;
  std::string demo_script;
  demo->add_option("pack", demo_pack, "assertion, ludo, scripter, golden or fixit")->required();
  demo->add_flag("--auto-fix", auto_fix, "Allow automatic transformations");
  demo->add_option("--port", demo_port, "Line protocol port (0 picks one)");
  demo->add_option("--http-port", demo_http, "HTTP port");
  demo->add_option("--data-dir", demo_data, "Directory for pack files");
  demo->add_flag("--reset", demo_reset, "Re-seed pack files");
  demo->add_option("--script", demo_script, "Text-client commands run against the opened session")
      ->check(CLI::ExistingFile);

  // client
  auto* client_cmd = app.add_subcommand("client", "Scripted text client; commands are read from stdin");
  std::string session_id;
  std::string host = "127.0.0.1";
  int client_port = 0;
  std::string client_script;
  client_cmd->add_option("--session", session_id, "Session id (from list_sessions)")->required();
  client_cmd->add_option("--port", client_port, "Server port")->required();
  client_cmd->add_option("--host", host, "Server host");
  client_cmd->add_option("--script", client_script, "Read commands from this file instead of stdin")
      ->check(CLI::ExistingFile);

  // diff
  auto* diff = app.add_subcommand("diff", "Print the hunks between two files as JSON");
  std::string left_path;
  std::string right_path;
  diff->add_option("left", left_path)->required()->check(CLI::ExistingFile);
  diff->add_option("right", right_path)->required()->check(CLI::ExistingFile);

  CLI11_PARSE(app, argc, argv);

  if (*diff) {
    char* hunks = nullptr;
    const auto status = moldex_text_diff(read_file(left_path)->c_str(), read_file(right_path)->c_str(), &hunks);
    if (status != MOLDEX_OK) return report(status, "diff");
    std::cout << take(hunks) << "\n";
    return 0;
  }

  if (*client_cmd) {
    std::string commands;
    if (client_script.empty()) {
      commands.assign(std::istreambuf_iterator<char>(std::cin), {});
    } else {
      commands = *read_file(client_script);
    }
    moldex_client* client = nullptr;
    if (const auto status = moldex_client_connect(host.c_str(), client_port, &client); status != MOLDEX_OK) {
      return report(status, "connect");
    }
    char* transcript = nullptr;
    int failures = 0;
    const auto status = moldex_client_run_script(client, session_id.c_str(), commands.c_str(), &transcript, &failures);
    moldex_client_close(client);
    if (status != MOLDEX_OK) return report(status, "client");
    std::cout << take(transcript);
    return failures == 0 ? 0 : 2;
  }

  const bool is_demo = demo->parsed();
  moldex_server* server = nullptr;
  const int port = is_demo ? demo_port : serve_port;
  const auto http = is_demo ? demo_http : serve_http;
  if (const auto status = moldex_server_start("127.0.0.1", port, http.value_or(-1),
                                              ui_dir.empty() ? nullptr : ui_dir.c_str(), &server);
      status != MOLDEX_OK) {
    return report(status, "serve");
  }
  std::cout << "listening on 127.0.0.1:" << moldex_server_port(server);
  if (moldex_server_http_port(server) > 0) std::cout << " (http " << moldex_server_http_port(server) << ")";
  std::cout << std::endl;

  DemoHook hook;
  hook.port = moldex_server_port(server);
  int rc = 0;
  if (is_demo) {
    if (!demo_script.empty()) hook.script = read_file(demo_script);
    nlohmann::json options = {{"data_dir", demo_data}, {"reset", demo_reset}};
    if (auto_fix) options["auto_fix"] = true;
    rc = run_demo(demo_pack, server, options, hook);
    if (rc == 0 && hook.failures > 0) rc = 2;
  } else {
    std::signal(SIGINT, on_signal);
    std::signal(SIGTERM, on_signal);
    for (const auto& pack : serve_packs) {
      if (run_demo(pack, server, {{"data_dir", serve_data}, {"reset", serve_reset}}, hook) != 0) rc = 1;
    }
    while (!stop_requested) std::this_thread::sleep_for(std::chrono::milliseconds(100));
  }
  moldex_server_stop(server);
  return rc;
}
