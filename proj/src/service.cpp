#include "cqm/service.hpp"

#include <charconv>
#include <optional>

#include "httplib.h"

#include "cqm/canonical.hpp"
#include "cqm/classifier.hpp"
#include "cqm/enumeration.hpp"
#include "cqm/error.hpp"

namespace cqm {

namespace {

Reply error(int status, const std::string& message) {
  return {status, Json{{"error", message}}};
}

Reply not_found(const std::string& id) { return error(404, "unknown session " + id); }

std::optional<int> parse_int(const std::string& text) {
  int value = 0;
  const auto* end = text.data() + text.size();
  auto [ptr, ec] = std::from_chars(text.data(), end, value);
  if (ec != std::errc() || ptr != end) return std::nullopt;
  return value;
}

}  // namespace

Explorer::Explorer(std::size_t class_limit) : class_limit_(class_limit) {}

std::shared_ptr<Explorer::Session> Explorer::find(const std::string& id) const {
  std::shared_lock lock(sessions_mutex_);
  auto it = sessions_.find(id);
  return it == sessions_.end() ? nullptr : it->second;
}

Json Explorer::describe(const SessionState& s) {
  Json history = Json::array();
  for (const auto& [before, step] : s.history) history.push_back(to_json(step));
  return {{"id", s.id},
          {"m", s.current.m()},
          {"n", s.current.n()},
          {"quiver", to_json(s.current)},
          {"history", std::move(history)},
          {"member", is_member(s.current).member}};
}

Reply Explorer::create_session(std::string_view body) {
  ColouredQuiver q(1, 1);
  try {
    q = quiver_from_json(parse_json(body));
  } catch (const InvalidInput& e) {
    return error(400, e.what());
  }
  auto report = validate(q);
  if (!report.ok()) return {400, to_json(report)};

  std::shared_ptr<Session> session;
  {
    std::unique_lock lock(sessions_mutex_);
    session = std::make_shared<Session>(SessionState{"s" + std::to_string(next_id_++), q, q, {}});
    sessions_.emplace(session->state.id, session);
  }
  std::lock_guard guard(session->mutex);
  return {201, describe(session->state)};
}

Reply Explorer::get_session(const std::string& id) const {
  auto session = find(id);
  if (!session) return not_found(id);
  std::lock_guard guard(session->mutex);
  return {200, describe(session->state)};
}

Reply Explorer::mutate(const std::string& id, std::string_view body) {
  auto session = find(id);
  if (!session) return not_found(id);
  std::lock_guard guard(session->mutex);
  auto& s = session->state;
  MutationStep step{};
  try {
    auto j = parse_json(body);
    if (!j.is_object() || !j.contains("vertex") || !j.at("vertex").is_number_integer())
      throw InvalidInput("body needs an integer \"vertex\"");
    step.vertex = j.at("vertex").get<int>() - 1;
    step.power = 1;
    if (j.contains("power")) {
      if (!j.at("power").is_number_integer()) throw InvalidInput("\"power\" must be an integer");
      step.power = j.at("power").get<int>();
    }
    auto next = apply_step(s.current, step);
    s.history.emplace_back(s.current, step);
    s.current = std::move(next);
  } catch (const InvalidInput& e) {
    return error(400, e.what());
  }
  return {200, describe(s)};
}

Reply Explorer::undo(const std::string& id) {
  auto session = find(id);
  if (!session) return not_found(id);
  std::lock_guard guard(session->mutex);
  auto& s = session->state;
  if (s.history.empty()) return error(409, "nothing to undo");
  auto [before, step] = s.history.back();
  std::string method = "snapshot";
  ColouredQuiver restored = before;
  if (is_member(before).member) {
    method = "inverse-power";
    const int power = s.current.m() + 1 - step.power;
    restored = mutate_power(s.current, step.vertex, power);
    if (restored != before) return error(500, "inverse mutation did not restore the previous quiver");
  }
  s.current = std::move(restored);
  s.history.pop_back();
  auto body = describe(s);
  body["undo"] = method;
  return {200, std::move(body)};
}

Reply Explorer::classify(const std::string& id) const {
  auto session = find(id);
  if (!session) return not_found(id);
  std::lock_guard guard(session->mutex);
  return {200, to_json(is_member(session->state.current))};
}

Reply Explorer::zero_part(const std::string& id) const {
  auto session = find(id);
  if (!session) return not_found(id);
  std::lock_guard guard(session->mutex);
  const auto& q = session->state.current;
  auto verdict = is_member(q);
  if (!verdict.member) return {409, to_json(verdict)};
  auto body = to_json(check_zero_part(q, MembershipCheck::Skip));
  body["dot"] = zero_part_dot(cqm::zero_part(q));
  return {200, std::move(body)};
}

Reply Explorer::mutation_class(const std::string& n_text, const std::string& m_text) {
  const auto n = parse_int(n_text), m = parse_int(m_text);
  if (!n || !m || *n < 1 || *m < 1) return error(400, "query needs integers n >= 1 and m >= 1");
  {
    std::shared_lock lock(classes_mutex_);
    if (auto it = classes_.find({*n, *m}); it != classes_.end()) return {200, it->second};
  }
  Json body;
  try {
    auto cls = cqm::mutation_class(linear_quiver(*n, *m), {class_limit_, false});
    Json reps = Json::array();
    for (const auto& q : cls.representatives) reps.push_back(to_json(q));
    body = {{"n", *n},
            {"m", *m},
            {"count", cls.size()},
            {"labelled_count", cls.labelled_count},
            {"representatives", std::move(reps)}};
  } catch (const LimitExceeded& e) {
    return {422, Json{{"error", e.what()}, {"reached", e.reached()}}};
  }
  std::unique_lock lock(classes_mutex_);
  classes_.emplace(std::pair{*n, *m}, body);
  return {200, std::move(body)};
}

// ---------------------------------------------------------------------------

HttpService::HttpService(Explorer& explorer) : server_(std::make_unique<httplib::Server>()) {
  auto send = [](httplib::Response& res, const Reply& reply) {
    res.status = reply.status;
    res.set_content(reply.body.dump(), "application/json");
  };
  auto& srv = *server_;
  srv.Post("/session", [&explorer, send](const httplib::Request& req, httplib::Response& res) {
    send(res, explorer.create_session(req.body));
  });
  srv.Get(R"(/session/([^/]+))", [&explorer, send](const httplib::Request& req, httplib::Response& res) {
    send(res, explorer.get_session(req.matches[1]));
  });
  srv.Post(R"(/session/([^/]+)/mutate)",
           [&explorer, send](const httplib::Request& req, httplib::Response& res) {
             send(res, explorer.mutate(req.matches[1], req.body));
           });
  srv.Post(R"(/session/([^/]+)/undo)",
           [&explorer, send](const httplib::Request& req, httplib::Response& res) {
             send(res, explorer.undo(req.matches[1]));
           });
  srv.Get(R"(/session/([^/]+)/classify)",
          [&explorer, send](const httplib::Request& req, httplib::Response& res) {
            send(res, explorer.classify(req.matches[1]));
          });
  srv.Get(R"(/session/([^/]+)/zero-part)",
          [&explorer, send](const httplib::Request& req, httplib::Response& res) {
            send(res, explorer.zero_part(req.matches[1]));
          });
  srv.Get("/class", [&explorer, send](const httplib::Request& req, httplib::Response& res) {
    send(res, explorer.mutation_class(req.get_param_value("n"), req.get_param_value("m")));
  });
  srv.set_exception_handler([send](const httplib::Request&, httplib::Response& res, std::exception_ptr ep) {
    try {
      std::rethrow_exception(ep);
    } catch (const std::exception& e) {
      send(res, error(500, e.what()));
    } catch (...) {
      send(res, error(500, "unknown error"));
    }
  });
}

HttpService::~HttpService() = default;

int HttpService::bind(const std::string& host, int port) {
  if (port == 0) return server_->bind_to_any_port(host);
  return server_->bind_to_port(host, port) ? port : -1;
}

bool HttpService::listen() { return server_->listen_after_bind(); }

void HttpService::stop() { server_->stop(); }

}  // namespace cqm
