#include "cqm/io.hpp"

#include <map>
#include <tuple>

#include "cqm/error.hpp"

namespace cqm {

namespace {

Json vertices_json(const std::vector<Vertex>& vs) {
  Json out = Json::array();
  for (Vertex v : vs) out.push_back(v + 1);
  return out;
}

int get_int(const Json& j, const char* key) {
  if (!j.is_object() || !j.contains(key)) throw InvalidInput(std::string("missing field \"") + key + "\"");
  const auto& v = j.at(key);
  if (!v.is_number_integer()) throw InvalidInput(std::string("field \"") + key + "\" must be an integer");
  return v.get<int>();
}

std::string violation_kind(Violation::Kind kind) {
  switch (kind) {
    case Violation::Kind::Loop: return "Loop";
    case Violation::Kind::Bichromatic: return "Bichromatic";
    case Violation::Kind::SkewSymmetry: return "SkewSymmetry";
  }
  return "Unknown";
}

}  // namespace

Json parse_json(std::string_view text) {
  try {
    return Json::parse(text);
  } catch (const nlohmann::json::parse_error& e) {
    throw InvalidInput(std::string("malformed JSON: ") + e.what());
  }
}

Json to_json(const ColouredQuiver& q) {
  Json arrows = Json::array();
  for (Vertex i = 0; i < q.n(); ++i)
    for (Vertex j = i + 1; j < q.n(); ++j)
      for (Colour c = 0; c <= q.m(); ++c)
        if (int k = q.mult(i, j, c))
          arrows.push_back({{"from", i + 1}, {"to", j + 1}, {"colour", c}, {"mult", k}});
  for (Vertex i = 0; i < q.n(); ++i)
    for (Colour c = 0; c <= q.m(); ++c)
      if (int k = q.mult(i, i, c))
        arrows.push_back({{"from", i + 1}, {"to", i + 1}, {"colour", c}, {"mult", k}});
  return {{"m", q.m()}, {"n", q.n()}, {"arrows", std::move(arrows)}};
}

ColouredQuiver quiver_from_json(const Json& j) {
  const int m = get_int(j, "m");
  const int n = get_int(j, "n");
  if (m < 1) throw InvalidInput("m must be at least 1");
  if (n < 1) throw InvalidInput("n must be at least 1");
  const Json empty = Json::array();
  const Json& arrows = j.contains("arrows") ? j.at("arrows") : empty;
  if (!arrows.is_array()) throw InvalidInput("\"arrows\" must be an array");

  std::map<std::tuple<Vertex, Vertex, Colour>, int> listed;
  for (const auto& a : arrows) {
    const int from = get_int(a, "from");
    const int to = get_int(a, "to");
    const int colour = get_int(a, "colour");
    const int mult = a.contains("mult") ? get_int(a, "mult") : 1;
    if (from < 1 || from > n || to < 1 || to > n)
      throw InvalidInput("arrow endpoint out of range 1.." + std::to_string(n));
    if (colour < 0 || colour > m)
      throw InvalidInput("arrow colour " + std::to_string(colour) + " out of range 0.." + std::to_string(m));
    if (mult < 1) throw InvalidInput("arrow multiplicity must be positive");
    listed[{from - 1, to - 1, colour}] += mult;
  }

  QuiverBuilder b(m, n);
  for (const auto& [key, mult] : listed) {
    const auto [from, to, colour] = key;
    b.add_arrows(from, to, colour, mult);
    if (from != to && !listed.count({to, from, m - colour})) b.add_arrows(to, from, m - colour, mult);
  }
  return b.build();
}

ColouredQuiver read_quiver(std::string_view text) {
  auto q = quiver_from_json(parse_json(text));
  require_valid(q);
  return q;
}

Json to_json(const MutationStep& step) { return {{"vertex", step.vertex + 1}, {"power", step.power}}; }

Json to_json(const MutationSequence& seq) {
  Json steps = Json::array();
  for (const auto& s : seq.steps) steps.push_back(to_json(s));
  return {{"steps", std::move(steps)}};
}

MutationSequence sequence_from_json(const Json& j) {
  if (!j.is_object() || !j.contains("steps") || !j.at("steps").is_array())
    throw InvalidInput("mutation sequence needs a \"steps\" array");
  MutationSequence seq;
  for (const auto& s : j.at("steps")) {
    const int vertex = get_int(s, "vertex");
    const int power = s.contains("power") ? get_int(s, "power") : 1;
    if (vertex < 1) throw InvalidInput("vertex must be at least 1");
    if (power < 1) throw InvalidInput("power must be at least 1");
    seq.steps.push_back({vertex - 1, power});
  }
  return seq;
}

Json to_json(const ValidationReport& report) {
  Json violations = Json::array();
  for (const auto& v : report.violations)
    violations.push_back({{"kind", violation_kind(v.kind)},
                          {"from", v.from + 1},
                          {"to", v.to + 1},
                          {"colours", v.colours}});
  return {{"valid", report.ok()}, {"violations", std::move(violations)}};
}

Json to_json(const MembershipVerdict& verdict) {
  Json failures = Json::array();
  for (const auto& f : verdict.failures) {
    Json item{{"kind", to_string(f.kind)}};
    switch (f.kind) {
      case MembershipFailure::Kind::Hole: item["cycle"] = vertices_json(f.vertices); break;
      case MembershipFailure::Kind::BadVertexSplit: item["vertex"] = f.vertices.front() + 1; break;
      case MembershipFailure::Kind::BadTriangle:
        item["vertices"] = vertices_json(f.vertices);
        item["sums"] = {f.sums.first, f.sums.second};
        break;
      default: break;
    }
    failures.push_back(std::move(item));
  }
  return {{"member", verdict.member}, {"failures", std::move(failures)}};
}

Json to_json(const CliqueDecomposition& split) {
  return {{"vertex", split.v + 1},
          {"partA", vertices_json(split.partA)},
          {"partB", vertices_json(split.partB)},
          {"r", split.r()},
          {"k", split.k()}};
}

Json to_json(const ZeroPart& part) {
  Json arrows = Json::array();
  for (const auto& a : part.arrows)
    arrows.push_back({{"from", a.from + 1}, {"to", a.to + 1}, {"mult", a.mult}});
  return {{"n", part.n}, {"arrows", std::move(arrows)}};
}

Json to_json(const ZeroPartReport& report) {
  Json cycles = Json::array(), bad = Json::array();
  for (const auto& c : report.cycles) cycles.push_back(vertices_json(c));
  for (const auto& c : report.bad_cycles) bad.push_back(vertices_json(c));
  return {{"zero_part", to_json(report.part)},
          {"cycles", std::move(cycles)},
          {"expected_cycle_length", report.expected_cycle_length},
          {"cycles_ok", report.cycles_ok()},
          {"bad_cycles", std::move(bad)},
          {"valency_ok", report.valency_ok()},
          {"bad_valency", vertices_json(report.bad_valency)}};
}

Json to_json(const EnergyReport& report) {
  Json cliques = Json::array();
  for (const auto& c : report.cliques)
    cliques.push_back({{"clique", vertices_json(c.clique)},
                       {"delta", c.delta},
                       {"expected", c.expected},
                       {"stray_weights", c.stray_weights},
                       {"ok", c.ok()}});
  return {{"ok", report.ok()}, {"cliques", std::move(cliques)}};
}

Json to_json(const ExtremalWitness& witness) {
  return {{"clique", vertices_json(witness.clique)},
          {"kind", witness.kind == CliqueKind::Extremal ? "extremal" : "almost-extremal"},
          {"tail", vertices_json(witness.tail)}};
}

}  // namespace cqm
