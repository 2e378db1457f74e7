#pragma once

// Network side of the HoG fixture store. Requires httplib.h and json.hpp on
// the include path; define CPPHTTPLIB_OPENSSL_SUPPORT for https endpoints.

#include <httplib.h>
#include <json.hpp>

#include <cstdlib>
#include <string>

#include "folkman/graph6.hpp"
#include "folkman/hog.hpp"

namespace folkman::hog {

struct FetchOptions {
  std::filesystem::path fixtures = fixture_directory();
  /// Query the network when the fixture store has no entry.
  bool online = false;
  /// Endpoint prefix; the id is appended.
  std::string base_url = default_base_url();
  int timeout_seconds = 30;

  static std::string default_base_url() {
    if (const char* env = std::getenv("FOLKMAN_HOG_URL"); env && *env) return env;
    return "https://houseofgraphs.org/api/graphs/";
  }
};

class NetworkError : public std::runtime_error {
 public:
  using std::runtime_error::runtime_error;
};

/// Extracts a graph6 string from either a JSON record or a plain text body.
inline std::string graph6_from_body(const std::string& body) {
  const auto first = body.find_first_not_of(" \t\r\n");
  if (first == std::string::npos) throw NetworkError("empty response");
  if (body[first] == '{') {
    auto j = nlohmann::json::parse(body, nullptr, false);
    if (j.is_discarded()) throw NetworkError("malformed JSON response");
    for (const char* key : {"graph6", "canonicalForm", "canonical_form"})
      if (j.contains(key) && j[key].is_string()) return j[key].get<std::string>();
    throw NetworkError("response has no graph6 field");
  }
  const auto end = body.find_first_of("\r\n", first);
  return body.substr(first, end == std::string::npos ? std::string::npos : end - first);
}

inline std::string http_get(const std::string& url, int timeout_seconds) {
  const auto scheme_end = url.find("://");
  if (scheme_end == std::string::npos) throw NetworkError("bad URL: " + url);
  const auto path_start = url.find('/', scheme_end + 3);
  const std::string origin = url.substr(0, path_start);
  const std::string path = path_start == std::string::npos ? "/" : url.substr(path_start);
  httplib::Client cli(origin);
  cli.set_connection_timeout(timeout_seconds);
  cli.set_read_timeout(timeout_seconds);
  cli.set_follow_location(true);
  auto res = cli.Get(path);
  if (!res) throw NetworkError("request to " + origin + " failed: " + httplib::to_string(res.error()));
  if (res->status != 200) throw NetworkError("HTTP " + std::to_string(res->status) + " from " + url);
  return res->body;
}

/// Offline fixture first; the network only when opted in.
inline Graph fetch_hog(int id, const FetchOptions& opt = {}) {
  if (has_fixture(id, opt.fixtures)) return load_fixture(id, opt.fixtures);
  if (!opt.online) throw UnknownId(id);
  return decode_graph6(graph6_from_body(http_get(opt.base_url + std::to_string(id), opt.timeout_seconds)));
}

}  // namespace folkman::hog
