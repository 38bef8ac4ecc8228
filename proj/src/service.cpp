#include "pseudospline/service.hpp"

#include <httplib.h>

#include <iostream>
#include <stdexcept>

namespace pseudospline {

namespace {

Response bad_request(const std::string& reason) { return {400, {{"error", reason}}}; }

// Parameter problems surface as invalid_argument or domain_error from the library.
template <class Fn>
Response guarded(Fn fn) {
  try {
    return fn();
  } catch (const std::invalid_argument& e) {
    return bad_request(e.what());
  } catch (const std::domain_error& e) {
    return bad_request(e.what());
  } catch (const std::out_of_range& e) {
    return bad_request(e.what());
  }
}

QueryParams without(QueryParams p, const std::string& key) {
  p.erase(key);
  return p;
}

QueryParams params_of(const httplib::Request& req) {
  QueryParams out;
  for (const auto& [k, v] : req.params) {
    out[k] = v;
  }
  return out;
}

void send(httplib::Response& res, const Response& r) {
  res.status = r.status;
  res.set_content(r.body.dump(), "application/json");
}

}  // namespace

Response handle_scheme(const QueryParams& params) {
  return guarded([&] {
    const SchemeSpec s = build_scheme(query_from_params(params));
    Json body = {{"spec", to_json(s)}};
    try {
      body["regularity"] = to_json(exact_regularity(s));
    } catch (const std::domain_error& e) {
      body["regularity"] = nullptr;
      body["regularity_error"] = e.what();
    }
    return Response{200, body};
  });
}

Response handle_sample(const QueryParams& params) {
  return guarded([&] {
    int levels = kDefaultServiceLevels;
    if (const auto it = params.find("levels"); it != params.end()) {
      levels = parse_int(it->second, "levels");
    }
    if (levels < 0 || levels > kMaxServiceLevels) {
      throw std::invalid_argument("levels must be in [0, " + std::to_string(kMaxServiceLevels) + "]");
    }
    const SchemeSpec s = build_scheme(query_from_params(without(params, "levels")));
    return Response{200, to_json(cardinal_samples(s, levels))};
  });
}

Response handle_sweep(const QueryParams& params) {
  return guarded([&] {
    const auto m_it = params.find("m");
    const auto steps_it = params.find("steps");
    if (m_it == params.end()) {
      throw std::invalid_argument("missing m");
    }
    if (steps_it == params.end()) {
      throw std::invalid_argument("missing steps");
    }
    const int m = parse_int(m_it->second, "m");
    const int steps = parse_int(steps_it->second, "steps");
    return Response{200, sweep_json(m, tension_sweep(m, steps))};
  });
}

Response handle_health() { return {200, {{"ok", true}}}; }

void install_routes(httplib::Server& server) {
  server.set_default_headers({
      {"Access-Control-Allow-Origin", "*"},
      {"Access-Control-Allow-Methods", "GET, OPTIONS"},
      {"Access-Control-Allow-Headers", "Content-Type"},
  });
  server.Options(R"(/api/.*)", [](const httplib::Request&, httplib::Response& res) { res.status = 204; });
  server.Get("/api/health", [](const httplib::Request&, httplib::Response& res) { send(res, handle_health()); });
  server.Get("/api/scheme", [](const httplib::Request& req, httplib::Response& res) {
    send(res, handle_scheme(params_of(req)));
  });
  server.Get("/api/sample", [](const httplib::Request& req, httplib::Response& res) {
    send(res, handle_sample(params_of(req)));
  });
  server.Get("/api/sweep", [](const httplib::Request& req, httplib::Response& res) {
    send(res, handle_sweep(params_of(req)));
  });
  server.set_exception_handler([](const httplib::Request&, httplib::Response& res, std::exception_ptr ep) {
    std::string what = "internal error";
    try {
      std::rethrow_exception(ep);
    } catch (const std::exception& e) {
      what = e.what();
    } catch (...) {
    }
    send(res, {500, {{"error", what}}});
  });
}

bool serve(const std::string& host, int port) {
  httplib::Server server;
  install_routes(server);
  if (!server.bind_to_port(host, port)) {
    return false;
  }
  std::cerr << "listening on http://" << host << ":" << port << "\n";
  return server.listen_after_bind();
}

}  // namespace pseudospline
