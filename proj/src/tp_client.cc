// src/tp_client.cc

// Copyright 2026 The LAUG Toolkit Authors
//
// Licensed under the Apache License, Version 2.0 (the "License");
// you may not use this file except in compliance with the License.
// You may obtain a copy of the License at
//
//  http://www.apache.org/licenses/LICENSE-2.0
//
// THIS CODE IS PROVIDED *AS IS* BASIS, WITHOUT WARRANTIES OR CONDITIONS OF ANY
// KIND, EITHER EXPRESS OR IMPLIED, INCLUDING WITHOUT LIMITATION ANY IMPLIED
// WARRANTIES OR CONDITIONS OF TITLE, FITNESS FOR A PARTICULAR PURPOSE,
// MERCHANTABLITY OR NON-INFRINGEMENT.
// See the Apache 2 License for the specific language governing permissions and
// limitations under the License.

// HTTP client for an externally hosted paraphrase model. Kept apart from
// aug_tp.cc so only this file pays for the httplib include.

#include <chrono>

#include "httplib.h"
#include "json.hpp"
#include "laug/aug_tp.h"
#include "laug/error.h"
#include "laug/utf8.h"

namespace laug {

HttpParaphraseClient::HttpParaphraseClient(std::string endpoint, double timeout_seconds)
    : endpoint_(std::move(endpoint)), timeout_seconds_(timeout_seconds) {
  if (endpoint_.rfind("http://", 0) != 0)
    throw ValidationError("tp.endpoint must be an http:// URL, got '" + endpoint_ + "'");
  if (!(timeout_seconds_ > 0)) throw ValidationError("tp.timeout must be positive");
}

std::vector<std::string> HttpParaphraseClient::Generate(const ParaphraseRequest& req, Rng&) {
  // http://host[:port][/path]
  const std::size_t path_at = endpoint_.find('/', 7);
  const std::string base = endpoint_.substr(0, path_at);
  const std::string path = path_at == std::string::npos ? "/" : endpoint_.substr(path_at);

  httplib::Client cli(base);
  const auto timeout = std::chrono::duration_cast<std::chrono::microseconds>(
      std::chrono::duration<double>(timeout_seconds_));
  cli.set_connection_timeout(timeout);
  cli.set_read_timeout(timeout);
  cli.set_write_timeout(timeout);

  nlohmann::json body = {{"da", req.da.text}, {"context", req.context}, {"k", req.k}};
  auto res = cli.Post(path, body.dump(), "application/json");
  if (!res)
    throw GeneratorUnavailableError("paraphrase service " + endpoint_ + ": " +
                                    httplib::to_string(res.error()));
  if (res->status != 200)
    throw GeneratorUnavailableError("paraphrase service " + endpoint_ + " answered HTTP " +
                                    std::to_string(res->status));

  std::vector<std::string> out;
  try {
    auto j = nlohmann::json::parse(res->body);
    for (const auto& c : j.at("candidates")) {
      auto s = c.get<std::string>();
      if (!utf8::Trim(s).empty() && out.size() < req.k) out.push_back(std::move(s));
    }
  } catch (const nlohmann::json::exception& e) {
    throw GeneratorUnavailableError("paraphrase service " + endpoint_ +
                                    " sent a malformed reply: " + e.what());
  }
  return out;
}

}  // namespace laug
