#include "qmut/service.hpp"

#include "httplib.h"
#include "qmut/io.hpp"
#include "qmut/report.hpp"

namespace qmut::service {

using nlohmann::json;

namespace {

struct SchemaError {
  std::string path;
  std::string message;
};

Response error_response(int status, std::string code, const std::string& message, const std::string& path = {}) {
  json err{{"code", std::move(code)}, {"message", message}};
  if (!path.empty()) err["path"] = path;
  return {status, json{{"error", std::move(err)}}};
}

Quiver quiver_field(const json& body) {
  if (!body.contains("quiver")) throw SchemaError{"quiver", "required"};
  try {
    return io::from_json(body["quiver"]);
  } catch (const Error& e) {
    if (e.code() != ErrorCode::Parse) throw;
    // Messages from the quiver reader start with the field path.
    const std::string msg = e.what();
    const auto colon = msg.find(": ");
    if (colon == std::string::npos) throw SchemaError{"quiver", msg};
    throw SchemaError{msg.substr(0, colon), msg.substr(colon + 2)};
  }
}

std::size_t size_field(const json& obj, const char* key, const std::string& path, std::size_t fallback,
                       std::size_t min, std::size_t max) {
  if (!obj.contains(key)) return fallback;
  const auto& v = obj[key];
  if (!v.is_number_integer() || v.get<std::int64_t>() < static_cast<std::int64_t>(min) ||
      v.get<std::int64_t>() > static_cast<std::int64_t>(max)) {
    throw SchemaError{path, "expected an integer in " + std::to_string(min) + ".." + std::to_string(max)};
  }
  return v.get<std::size_t>();
}

EnumerationCaps caps_field(const json& body, std::size_t default_max) {
  EnumerationCaps caps;
  caps.max_size = default_max;
  if (!body.contains("caps") || body["caps"].is_null()) return caps;
  const auto& c = body["caps"];
  if (!c.is_object()) throw SchemaError{"caps", "expected an object"};
  caps.max_size = size_field(c, "max_size", "caps.max_size", default_max, 1, kMaxClassMaxSize);
  caps.threads = static_cast<unsigned>(size_field(c, "threads", "caps.threads", 1, 1, 64));
  return caps;
}

int status_for(ErrorCode code) {
  switch (code) {
    case ErrorCode::Parse: return 400;
    case ErrorCode::Internal: return 500;
    default: return 422;
  }
}

}  // namespace

Response Api::handle(std::string_view method, std::string_view path, std::string_view body,
                     std::string_view content_type) const {
  std::string_view route = path;
  if (route.starts_with("/api/v1/")) {
    route.remove_prefix(8);
  } else if (route.starts_with("/api/")) {
    route.remove_prefix(5);
  } else {
    return error_response(404, "not_found", "no such endpoint");
  }

  const bool is_post = route == "mutate" || route == "analyze" || route == "classify" || route == "class";
  if (!is_post && route != "catalog") return error_response(404, "not_found", "no such endpoint");
  if (method != (is_post ? "POST" : "GET")) {
    return error_response(405, "method_not_allowed", std::string("use ") + (is_post ? "POST" : "GET"));
  }
  if (!is_post) return {200, report::catalog_json(catalog_)};

  const auto semi = content_type.find(';');
  std::string_view media = content_type.substr(0, semi);
  while (!media.empty() && media.back() == ' ') media.remove_suffix(1);
  if (media != "application/json") {
    return error_response(415, "unsupported_media_type", "request body must be application/json");
  }

  try {
    json req;
    try {
      req = json::parse(body);
    } catch (const json::parse_error& e) {
      throw SchemaError{"", std::string("invalid JSON: ") + e.what()};
    }
    if (!req.is_object()) throw SchemaError{"", "expected a JSON object"};
    const Quiver q = quiver_field(req);

    if (route == "mutate") {
      if (!req.contains("k")) throw SchemaError{"k", "required"};
      if (!req["k"].is_number_integer()) throw SchemaError{"k", "expected an integer"};
      const auto k = req["k"].get<std::int64_t>();
      if (k < 1 || static_cast<std::size_t>(k) > q.size()) {
        throw Error(ErrorCode::IndexOutOfRange, "k must lie in 1.." + std::to_string(q.size()));
      }
      return {200, json{{"quiver", io::to_json(mutate(q, static_cast<Vertex>(k - 1)))}}};
    }
    if (route == "analyze") return {200, report::analyze(q)};
    if (route == "classify") {
      return {200, report::classification_json(classify_quiver(q, catalog_, caps_field(req, EnumerationCaps{}.max_size)))};
    }
    const auto caps = caps_field(req, kDefaultClassMaxSize);
    const auto offset = size_field(req, "offset", "offset", 0, 0, kMaxClassMaxSize);
    const auto limit = size_field(req, "limit", "limit", kDefaultPageLimit, 0, kMaxClassMaxSize);
    return {200, report::class_json(enumerate_class(q, caps), offset, limit)};
  } catch (const SchemaError& e) {
    return error_response(400, "schema", e.message, e.path.empty() ? "$" : e.path);
  } catch (const Error& e) {
    return error_response(status_for(e.code()), std::string(to_string(e.code())), e.what());
  }
}

HttpServer::HttpServer(const Api& api) : server_(std::make_unique<httplib::Server>()) {
  server_->set_default_headers({{"Access-Control-Allow-Origin", "*"}});
  auto dispatch = [&api](const httplib::Request& req, httplib::Response& res) {
    const auto r = api.handle(req.method, req.path, req.body, req.get_header_value("Content-Type"));
    res.status = r.status;
    res.set_content(r.body.dump(), "application/json");
  };
  server_->Get(R"(/api/.*)", dispatch);
  server_->Post(R"(/api/.*)", dispatch);
  server_->Put(R"(/api/.*)", dispatch);
  server_->Delete(R"(/api/.*)", dispatch);
  server_->Options(R"(/api/.*)", [](const httplib::Request&, httplib::Response& res) {
    res.status = 204;
    res.set_header("Access-Control-Allow-Methods", "GET, POST, OPTIONS");
    res.set_header("Access-Control-Allow-Headers", "Content-Type");
  });
}

HttpServer::~HttpServer() = default;

int HttpServer::bind(const std::string& host, int port) {
  if (port == 0) return server_->bind_to_any_port(host);
  return server_->bind_to_port(host, port) ? port : -1;
}

bool HttpServer::listen() { return server_->listen_after_bind(); }

void HttpServer::stop() { server_->stop(); }

void HttpServer::wait_until_ready() const { server_->wait_until_ready(); }

}  // namespace qmut::service
