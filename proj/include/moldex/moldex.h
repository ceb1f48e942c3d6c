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

#pragma once

/* C interface to the moldex debugger runtime. Strings returned through
 * `char**` out-parameters are owned by the caller and released with
 * moldex_string_free. On failure, moldex_last_error() describes the most
 * recent error on the calling thread. */

#ifdef __cplusplus
extern "C" {
#endif

#if defined(MOLDEX_BUILDING_LIBRARY)
#define MOLDEX_API __attribute__((visibility("default")))
#else
#define MOLDEX_API
#endif

typedef struct moldex_server moldex_server;
typedef struct moldex_client moldex_client;

typedef enum moldex_status {
  MOLDEX_OK = 0,
  MOLDEX_E_INVALID_ARGUMENT = 1,
  MOLDEX_E_BIND_FAILURE = 2,
  MOLDEX_E_IO = 3,
  MOLDEX_E_UNKNOWN_PACK = 4,
  MOLDEX_E_PROTOCOL = 5,
  /* Any other framework error; see moldex_last_error(). */
  MOLDEX_E_FRAMEWORK = 6,
  MOLDEX_E_INTERNAL = 7
} moldex_status;

MOLDEX_API const char* moldex_version(void);
MOLDEX_API const char* moldex_status_string(moldex_status status);
MOLDEX_API const char* moldex_last_error(void);
MOLDEX_API void moldex_string_free(char* text);

/* Debug server. `port` 0 picks a free port; `http_port` < 0 disables HTTP,
 * 0 picks a free one. `ui_dir` may be NULL. */
MOLDEX_API moldex_status moldex_server_start(const char* host, int port, int http_port, const char* ui_dir,
                                             moldex_server** out);
MOLDEX_API int moldex_server_port(const moldex_server* server);
MOLDEX_API int moldex_server_http_port(const moldex_server* server);
/* Handles one request in-process, as if it arrived on a connection. */
MOLDEX_API moldex_status moldex_server_handle(moldex_server* server, const char* request_json, char** response_json);
/* Stops serving and frees the server. */
MOLDEX_API void moldex_server_stop(moldex_server* server);

/* Called on the guard's thread with the session summary JSON right before
 * the session is served. */
typedef void (*moldex_session_callback)(const char* session_json, void* user_data);

/* Runs a demo pack. Sessions are published on `server` and served until a
 * client ends them; with a NULL server they are closed at once. Options:
 * {"data_dir": str, "reset": bool, "auto_fix": bool}. The outcome JSON
 * reports the result, whether the exception escaped, and counters. */
MOLDEX_API moldex_status moldex_run_pack(moldex_server* server, const char* pack, const char* options_json,
                                         moldex_session_callback on_open, void* user_data, char** outcome_json);
/* JSON array of pack names. */
MOLDEX_API moldex_status moldex_pack_names(char** names_json);

/* Process-wide automatic transformation setting. */
MOLDEX_API void moldex_settings_set_auto_transform(int allow);
MOLDEX_API int moldex_settings_get_auto_transform(void);
/* Applies MOLDEX_AUTO_TRANSFORM; returns 1 if the variable was set. */
MOLDEX_API int moldex_settings_load_environment(void);
MOLDEX_API moldex_status moldex_settings_load_file(const char* path);

MOLDEX_API moldex_status moldex_client_connect(const char* host, int port, moldex_client** out);
MOLDEX_API moldex_status moldex_client_request(moldex_client* client, const char* request_json, char** response_json);
/* Runs text-client commands (one per line) against `session_id`; the
 * transcript is returned and `failures` counts error responses. */
MOLDEX_API moldex_status moldex_client_run_script(moldex_client* client, const char* session_id, const char* script,
                                                  char** transcript, int* failures);
MOLDEX_API void moldex_client_close(moldex_client* client);

/* Line and word level diff; hunks as [{"op": "eq"|"ins"|"del", "text": str}]. */
MOLDEX_API moldex_status moldex_text_diff(const char* left, const char* right, char** hunks_json);

#ifdef __cplusplus
}
#endif
