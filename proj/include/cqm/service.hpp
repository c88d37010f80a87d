#pragma once

#include <cstddef>
#include <map>
#include <memory>
#include <mutex>
#include <shared_mutex>
#include <string>
#include <string_view>
#include <utility>
#include <vector>

#include "cqm/enumeration.hpp"
#include "cqm/io.hpp"

namespace httplib {
class Server;
}

namespace cqm {

struct SessionState {
  std::string id;
  ColouredQuiver initial;
  ColouredQuiver current;
  /// Quiver before each step, paired with the step.
  std::vector<std::pair<ColouredQuiver, MutationStep>> history;
};

struct Reply {
  int status = 200;
  Json body;
};

/// Session store and request handlers behind the HTTP service. Each handler
/// maps a request to a status code and JSON body.
class Explorer {
 public:
  explicit Explorer(std::size_t class_limit = kDefaultClassLimit);

  Reply create_session(std::string_view body);
  Reply get_session(const std::string& id) const;
  Reply mutate(const std::string& id, std::string_view body);
  Reply undo(const std::string& id);
  Reply classify(const std::string& id) const;
  Reply zero_part(const std::string& id) const;
  Reply mutation_class(const std::string& n, const std::string& m);

 private:
  struct Session {
    explicit Session(SessionState s) : state(std::move(s)) {}
    mutable std::mutex mutex;
    SessionState state;
  };

  std::shared_ptr<Session> find(const std::string& id) const;
  static Json describe(const SessionState& s);

  std::size_t class_limit_;
  mutable std::shared_mutex sessions_mutex_;
  std::map<std::string, std::shared_ptr<Session>> sessions_;
  std::size_t next_id_ = 1;

  std::shared_mutex classes_mutex_;
  std::map<std::pair<int, int>, Json> classes_;
};

/// cpp-httplib front end for an Explorer.
class HttpService {
 public:
  explicit HttpService(Explorer& explorer);
  ~HttpService();

  HttpService(const HttpService&) = delete;
  HttpService& operator=(const HttpService&) = delete;

  /// Binds host:port (port 0 picks a free one) and returns the bound port, or
  /// -1 on failure.
  int bind(const std::string& host, int port);

  /// Serves until stop() is called.
  bool listen();
  void stop();

 private:
  std::unique_ptr<httplib::Server> server_;
};

}  // namespace cqm
