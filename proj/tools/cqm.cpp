#include <cstdlib>
#include <fstream>
#include <iostream>
#include <iterator>
#include <sstream>
#include <string>
#include <vector>

#include "CLI11.hpp"

#include "cqm/analysis.hpp"
#include "cqm/canonical.hpp"
#include "cqm/classifier.hpp"
#include "cqm/enumeration.hpp"
#include "cqm/error.hpp"
#include "cqm/io.hpp"
#include "cqm/mutation.hpp"
#include "cqm/reduction.hpp"
#include "cqm/service.hpp"
#include "cqm/verify.hpp"

namespace {

using cqm::Json;

std::string read_text(const std::string& path) {
  if (path == "-") {
    return {std::istreambuf_iterator<char>(std::cin), std::istreambuf_iterator<char>()};
  }
  std::ifstream in(path);
  if (!in) throw cqm::InvalidInput("cannot open " + path);
  std::ostringstream os;
  os << in.rdbuf();
  return os.str();
}

// Invalid quivers are reported with the full validation report.
struct InvalidQuiver {
  cqm::ValidationReport report;
};

cqm::ColouredQuiver load_quiver(const std::string& path) {
  auto q = cqm::quiver_from_json(cqm::parse_json(read_text(path)));
  auto report = cqm::validate(q);
  if (!report.ok()) throw InvalidQuiver{std::move(report)};
  return q;
}

std::size_t default_limit() {
  if (const char* env = std::getenv("QML_LIMIT")) {
    try {
      return static_cast<std::size_t>(std::stoull(env));
    } catch (const std::exception&) {
      std::cerr << "ignoring malformed QML_LIMIT=" << env << '\n';
    }
  }
  return cqm::kDefaultClassLimit;
}

void emit(const Json& j) { std::cout << j.dump() << '\n'; }

std::string orbit_dot(const cqm::MutationClass& cls) {
  std::ostringstream os;
  os << "digraph orbit {\n";
  for (std::size_t i = 0; i < cls.size(); ++i) os << "  q" << i << ";\n";
  for (const auto& e : cls.edges)
    os << "  q" << e.from << " -> q" << e.to << " [label=\"" << e.vertex + 1 << "\"];\n";
  os << "}\n";
  return os.str();
}

Json orbit_json(const cqm::MutationClass& cls) {
  Json edges = Json::array();
  for (const auto& e : cls.edges) edges.push_back({{"from", e.from}, {"vertex", e.vertex + 1}, {"to", e.to}});
  return {{"nodes", cls.size()}, {"edges", std::move(edges)}};
}

std::pair<int, int> parse_pair(const std::string& text) {
  const auto comma = text.find(',');
  if (comma == std::string::npos) throw cqm::InvalidInput("pair must look like n,m: " + text);
  try {
    return {std::stoi(text.substr(0, comma)), std::stoi(text.substr(comma + 1))};
  } catch (const std::exception&) {
    throw cqm::InvalidInput("pair must look like n,m: " + text);
  }
}

}  // namespace

int main(int argc, char** argv) {
  CLI::App app{"Coloured quiver mutation toolkit for the A_n mutation class"};
  app.require_subcommand(1);

  std::string input = "-";

  auto* mutate = app.add_subcommand("mutate", "Mutate a quiver read as JSON");
  int vertex = 0, power = 1;
  std::string method = "steps", sequence_path;
  mutate->add_option("--input,-i", input, "Quiver JSON file ('-' for stdin)");
  mutate->add_option("--vertex,-v", vertex, "Vertex to mutate at (1-based)");
  mutate->add_option("--power,-p", power, "Number of times to mutate")->check(CLI::NonNegativeNumber);
  mutate->add_option("--method", method, "steps or formula")->check(CLI::IsMember({"steps", "formula"}));
  mutate->add_option("--sequence", sequence_path, "Apply a MutationSequence JSON file instead");

  auto* classify = app.add_subcommand("classify", "Decide membership in the A_n class");
  classify->add_option("--input,-i", input, "Quiver JSON file ('-' for stdin)");

  auto* enumerate = app.add_subcommand("enumerate", "Enumerate a mutation class");
  int n = 0, m = 0;
  std::size_t limit = default_limit();
  std::string seed_path, orbit_format;
  enumerate->add_option("--n", n, "Vertex count of the linear seed");
  enumerate->add_option("--m", m, "Colour parameter of the linear seed");
  enumerate->add_option("--seed", seed_path, "Seed quiver JSON file instead of the linear quiver");
  enumerate->add_option("--limit", limit, "Maximum number of isomorphism classes");
  enumerate->add_option("--emit-orbit-graph", orbit_format, "dot or json")
      ->check(CLI::IsMember({"dot", "json"}));

  auto* analyze = app.add_subcommand("analyze", "Energy, clique number and 0-part reports");
  bool energy = false, zero = false, omega = false, skip_check = false;
  analyze->add_option("--input,-i", input, "Quiver JSON file ('-' for stdin)");
  analyze->add_flag("--energy", energy, "Clique energies");
  analyze->add_flag("--zero-part", zero, "0-coloured part with its cycle and valency checks");
  analyze->add_flag("--clique-number", omega, "Size of a largest clique");
  analyze->add_flag("--no-membership-check", skip_check, "Analyse non-members too");

  auto* reduce = app.add_subcommand("reduce", "Reduce a class member to a path quiver");
  bool verify_replay = false;
  reduce->add_option("--input,-i", input, "Quiver JSON file ('-' for stdin)");
  reduce->add_flag("--verify", verify_replay, "Replay the sequence forwards and backwards");

  auto* verify = app.add_subcommand("verify", "Run the class-level checks for (n, m) pairs");
  std::vector<std::string> pairs{"2,1", "3,1", "4,1", "2,2", "3,2", "4,2"};
  verify->add_option("--pair", pairs, "n,m pair (repeatable)");
  verify->add_option("--limit", limit, "Maximum mutation class size");

  auto* serve = app.add_subcommand("serve", "Run the local JSON service");
  int port = 8080;
  std::string host = "127.0.0.1";
  serve->add_option("--port", port, "TCP port");
  serve->add_option("--host", host, "Address to bind");

  try {
    app.parse(argc, argv);
  } catch (const CLI::CallForHelp& e) {
    return app.exit(e);
  } catch (const CLI::CallForAllHelp& e) {
    return app.exit(e);
  } catch (const CLI::ParseError& e) {
    app.exit(e);
    return 2;
  }

  try {
    if (*mutate) {
      auto q = load_quiver(input);
      if (!sequence_path.empty()) {
        auto seq = cqm::sequence_from_json(cqm::parse_json(read_text(sequence_path)));
        auto out = cqm::apply_sequence(q, seq);
        emit(cqm::to_json(out));
        std::cerr << "applied " << seq.size() << " step(s)\n";
        return 0;
      }
      if (mutate->count("--vertex") == 0) {
        std::cerr << "mutate: --vertex or --sequence is required\n";
        return 2;
      }
      const cqm::Vertex j = vertex - 1;
      cqm::ColouredQuiver out = q;
      if (method == "formula") {
        if (!q.contains(j)) throw cqm::InvalidInput("vertex out of range");
        for (int t = 0; t < power; ++t) out = cqm::mutate_formula(out, j);
      } else {
        out = cqm::mutate_power(q, j, power);
      }
      emit(cqm::to_json(out));
      std::cerr << "mutated at " << vertex << " (power " << power << ", " << method << ")\n";
      return 0;
    }

    if (*classify) {
      auto q = load_quiver(input);
      auto verdict = cqm::is_member(q);
      emit(cqm::to_json(verdict));
      std::cerr << verdict.summary() << '\n';
      return 0;
    }

    if (*enumerate) {
      cqm::ColouredQuiver seed(1, 1);
      if (!seed_path.empty()) {
        seed = load_quiver(seed_path);
      } else {
        if (n < 1 || m < 1) {
          std::cerr << "enumerate: --n and --m (both >= 1) or --seed are required\n";
          return 2;
        }
        seed = cqm::linear_quiver(n, m);
      }
      auto cls = cqm::mutation_class(seed, {limit, false});
      Json reps = Json::array();
      for (const auto& q : cls.representatives) reps.push_back(cqm::to_json(q));
      Json out{{"n", seed.n()},
               {"m", seed.m()},
               {"count", cls.size()},
               {"labelled_count", cls.labelled_count},
               {"representatives", std::move(reps)}};
      if (orbit_format == "dot") out["orbit_graph"] = orbit_dot(cls);
      if (orbit_format == "json") out["orbit_graph"] = orbit_json(cls);
      emit(out);
      std::cerr << cls.size() << " isomorphism classes, " << cls.labelled_count << " labelled quivers\n";
      return 0;
    }

    if (*analyze) {
      auto q = load_quiver(input);
      const auto check = skip_check ? cqm::MembershipCheck::Skip : cqm::MembershipCheck::Enforce;
      if (!energy && !zero && !omega) energy = zero = omega = true;
      Json out = Json::object();
      if (omega) out["clique_number"] = cqm::clique_number(q);
      if (energy) out["energy"] = cqm::to_json(cqm::verify_energy(q, check));
      if (zero) {
        auto report = cqm::check_zero_part(q, check);
        out["zero_part"] = cqm::to_json(report);
        out["zero_part"]["dot"] = cqm::zero_part_dot(report.part);
      }
      emit(out);
      std::cerr << "analysis complete\n";
      return 0;
    }

    if (*reduce) {
      auto q = load_quiver(input);
      auto r = cqm::reduce_to_line(q);
      Json out{{"line", cqm::to_json(r.quiver)}, {"sequence", cqm::to_json(r.sequence)}};
      bool ok = true;
      if (verify_replay) {
        const bool forward = cqm::apply_sequence(q, r.sequence) == r.quiver;
        const bool backward = cqm::apply_sequence(r.quiver, cqm::inverse_sequence(r.sequence, q.m())) == q;
        out["verified"] = {{"forward", forward}, {"inverse", backward}};
        ok = forward && backward;
      }
      emit(out);
      std::cerr << "reduced with " << r.sequence.size() << " step(s)\n";
      return ok ? 0 : 1;
    }

    if (*verify) {
      Json results = Json::array();
      bool ok = true;
      for (const auto& text : pairs) {
        auto [pn, pm] = parse_pair(text);
        auto check = cqm::verify_pair(pn, pm, limit);
        ok = ok && check.ok();
        std::cerr << "(" << pn << "," << pm << "): " << (check.ok() ? "ok" : "FAILED") << ", "
                  << check.members << " classes, " << check.seconds << " s\n";
        results.push_back(cqm::to_json(check));
      }
      emit({{"ok", ok}, {"pairs", std::move(results)}});
      return ok ? 0 : 1;
    }

    if (*serve) {
      cqm::Explorer explorer(limit);
      cqm::HttpService service(explorer);
      const int bound = service.bind(host, port);
      if (bound < 0) throw cqm::InvalidInput("cannot bind " + host + ":" + std::to_string(port));
      std::cerr << "listening on http://" << host << ":" << bound << '\n';
      return service.listen() ? 0 : 1;
    }
  } catch (const InvalidQuiver& e) {
    emit({{"error", "InvalidInput"}, {"message", e.report.summary()}, {"report", cqm::to_json(e.report)}});
    return 1;
  } catch (const cqm::LimitExceeded& e) {
    emit({{"error", "LimitExceeded"}, {"message", e.what()}, {"reached", e.reached()}});
    return 1;
  } catch (const cqm::InvalidInput& e) {
    emit({{"error", "InvalidInput"}, {"message", e.what()}});
    return 1;
  } catch (const cqm::PreconditionError& e) {
    emit({{"error", "PreconditionError"}, {"message", e.what()}});
    return 1;
  } catch (const cqm::InternalError& e) {
    emit({{"error", "InternalError"}, {"message", e.what()}});
    return 1;
  }
  return 0;
}
