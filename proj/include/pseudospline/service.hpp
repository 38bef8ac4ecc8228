#pragma once

#include <map>
#include <string>

#include "pseudospline/api.hpp"

namespace httplib {
class Server;
}

namespace pseudospline {

inline constexpr int kDefaultPort = 8787;
inline constexpr int kDefaultServiceLevels = 5;
inline constexpr int kMaxServiceLevels = 10;

using QueryParams = std::map<std::string, std::string>;

struct Response {
  int status = 200;
  Json body;
};

/// {spec, regularity}; regularity is null plus "regularity_error" when the
/// derived symbol is not odd symmetric.
Response handle_scheme(const QueryParams& params);
/// Cardinal samples; extra key "levels" (default 5, at most 10).
Response handle_sample(const QueryParams& params);
/// Tension sweep; keys "m" and "steps".
Response handle_sweep(const QueryParams& params);
Response handle_health();

/// Registers the /api routes and CORS headers.
void install_routes(httplib::Server& server);

/// Blocks serving the JSON API on host:port. Returns false if the port cannot be bound.
bool serve(const std::string& host, int port);

}  // namespace pseudospline
