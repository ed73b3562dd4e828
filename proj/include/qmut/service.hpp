#pragma once

#include <memory>
#include <string>
#include <string_view>

#include "json.hpp"
#include "qmut/classify.hpp"

namespace httplib {
class Server;
}

namespace qmut::service {

inline constexpr std::size_t kDefaultClassMaxSize = 10000;
inline constexpr std::size_t kMaxClassMaxSize = 1000000;
inline constexpr std::size_t kDefaultPageLimit = 100;

struct Response {
  int status = 200;
  nlohmann::json body;
};

// Stateless request handling over an immutable catalog. Every request carries
// the whole quiver. Routes live under /api and /api/v1:
//   POST mutate   {quiver, k}               -> {quiver}
//   POST analyze  {quiver}                  -> invariants and patterns
//   POST classify {quiver, caps?}           -> classification with evidence
//   POST class    {quiver, caps?, offset?, limit?} -> {size, status, members}
//   GET  catalog                            -> reference seeds
// Schema violations answer 400 with the offending field path, domain errors
// 422 with a machine-readable code.
class Api {
 public:
  explicit Api(const ReferenceCatalog& catalog) : catalog_(catalog) {}

  Response handle(std::string_view method, std::string_view path, std::string_view body,
                  std::string_view content_type) const;

 private:
  const ReferenceCatalog& catalog_;
};

class HttpServer {
 public:
  explicit HttpServer(const Api& api);
  ~HttpServer();
  HttpServer(const HttpServer&) = delete;
  HttpServer& operator=(const HttpServer&) = delete;

  // Port 0 picks a free port. Returns the bound port, or -1 on failure.
  int bind(const std::string& host, int port);
  // Blocks until stop() is called.
  bool listen();
  void stop();
  void wait_until_ready() const;

 private:
  std::unique_ptr<httplib::Server> server_;
};

}  // namespace qmut::service
