// Command-line front end. JSON results go to stdout, diagnostics to stderr.
// Exit codes: 0 success, 1 domain error or failed verification, 2 bad
// arguments or unreadable input.

#include <CLI11.hpp>

#include <fstream>
#include <iostream>
#include <optional>
#include <sstream>

#include "konig/error.hpp"
#include "konig/experiments.hpp"
#include "konig/io.hpp"
#include "konig/konig.hpp"
#include "konig/oracle.hpp"
#include "konig/path_structure.hpp"
#include "konig/reverse.hpp"
#include "konig/star_studded.hpp"
#include "konig/verify.hpp"

namespace {

using konig::io::Json;

constexpr int kOk = 0;
constexpr int kDomainError = 1;
constexpr int kInputError = 2;

// Anything thrown while reading inputs is an input error.
struct InputError : std::runtime_error {
  using std::runtime_error::runtime_error;
};

template <class F>
auto load(F&& f) {
  try {
    return f();
  } catch (const std::exception& e) {
    throw InputError(e.what());
  }
}

void emit(const Json& j) { std::cout << j.dump(2) << '\n'; }

std::vector<konig::VertexId> parse_order(const konig::BipartiteGraph& g, const std::string& text) {
  std::vector<konig::VertexId> out;
  std::stringstream in(text);
  std::string label;
  while (std::getline(in, label, ',')) {
    const auto v = g.find_label(label);
    if (!v) throw konig::Error(konig::ErrorKind::kUnknownVertex, "no vertex labelled '" + label + "'");
    out.push_back(*v);
  }
  return out;
}

Json suite_json(const konig::SuiteResult& s) {
  Json j;
  j["name"] = s.name;
  j["gating"] = s.gating;
  j["graphs"] = s.graphs;
  j["cases"] = s.cases;
  j["violations"] = s.violations;
  j["passed"] = s.passed();
  j["seconds"] = s.seconds;
  if (!s.passed()) j["first_counterexample"] = s.first_counterexample;
  return j;
}

}  // namespace

int main(int argc, char** argv) {
  CLI::App app{"Matchings, vertex covers and Kőnig's procedure on bipartite graphs"};
  app.require_subcommand(1);

  std::string graph_path;
  std::string matching_path;
  std::string cover_path;
  std::string order_text;
  std::size_t limit = konig::kDefaultPathLimit;

  auto* match = app.add_subcommand("match", "maximum matching, optionally grown from a given matching");
  match->add_option("--graph", graph_path, "graph file (JSON or edge list)")->required();
  match->add_option("--matching", matching_path, "starting matching");
  bool greedy = false;
  match->add_flag("--greedy", greedy, "greedy maximal matching in edge order instead");

  auto* cover = app.add_subcommand("cover", "Kőnig cover of a matching");
  cover->add_option("--graph", graph_path)->required();
  cover->add_option("--matching", matching_path)->required();

  auto* reverse = app.add_subcommand("reverse", "matching whose Kőnig cover is the given minimum cover");
  reverse->add_option("--graph", graph_path)->required();
  reverse->add_option("--cover", cover_path, "JSON list of labels")->required();
  reverse->add_option("--order", order_text, "comma-separated visit order of the uncovered left vertices");

  auto* classify = app.add_subcommand("classify", "augmenting-path test of whether a maximal matching gives a minimum cover");
  classify->add_option("--graph", graph_path)->required();
  classify->add_option("--matching", matching_path)->required();
  classify->add_option("--limit", limit, "augmenting path limit");

  auto* starstud = app.add_subcommand("starstud", "attach a three-leaf star to every vertex");
  starstud->add_option("--graph", graph_path)->required();

  auto* enumerate = app.add_subcommand("enumerate", "exhaustive enumerations");
  enumerate->add_option("--graph", graph_path)->required();
  bool oracle = false;
  enumerate->add_flag("--oracle", oracle, "minimum covers, matchings, maximal matchings and Hall checks");
  enumerate->add_option("--matching", matching_path, "list the augmenting paths of this matching");
  enumerate->add_option("--limit", limit, "augmenting path limit");

  auto* experiment = app.add_subcommand("experiment", "random graphs, random maximal matchings");
  konig::TrialConfig cfg;
  std::string out_path;
  bool serial = false;
  experiment->add_option("--nl", cfg.n_left, "left side size")->required();
  experiment->add_option("--nr", cfg.n_right, "right side size")->required();
  experiment->add_option("--p", cfg.edge_probability, "edge probability")->required();
  experiment->add_option("--trials", cfg.trials, "trial count")->required();
  experiment->add_option("--seed", cfg.rng_seed, "random seed");
  experiment->add_option("--out", out_path, "CSV destination (stdout when omitted)");
  experiment->add_flag("--serial", serial, "run on one thread");

  auto* verify = app.add_subcommand("corpus-verify", "check every property over the small-graph corpus");
  std::size_t max_vertices = 6;
  std::vector<std::string> groups;
  verify->add_option("--max-vertices", max_vertices, "largest graph size");
  verify->add_flag("--serial", serial, "run on one thread");
  verify->add_option("--suite", groups, "restrict to these suite groups")
      ->check(CLI::IsMember(konig::suite_groups()));

  try {
    app.parse(argc, argv);
  } catch (const CLI::ParseError& e) {
    const int code = app.exit(e);
    return code == 0 ? kOk : kInputError;
  }

  try {
    if (*match) {
      const auto g = load([&] { return konig::io::read_graph(graph_path); });
      std::optional<konig::Matching> seed;
      if (!matching_path.empty()) seed = load([&] { return konig::io::read_matching(g, matching_path); });
      konig::Matching m;
      if (greedy) {
        m = konig::greedy_maximal_matching(g, g.edges());
      } else {
        m = seed ? konig::maximum_matching(g, *seed) : konig::maximum_matching(g);
      }
      Json j;
      j["matching"] = konig::io::matching_to_json(g, m);
      j["size"] = m.size();
      j["is_maximal"] = konig::is_maximal(g, m);
      emit(j);
    } else if (*cover) {
      const auto g = load([&] { return konig::io::read_graph(graph_path); });
      const auto m = load([&] { return konig::io::read_matching(g, matching_path); });
      emit(konig::io::cover_to_json(g, konig::konig_cover(g, m).vertices));
    } else if (*reverse) {
      const auto g = load([&] { return konig::io::read_graph(graph_path); });
      const auto c = load([&] { return konig::io::read_cover(g, cover_path); });
      std::optional<std::vector<konig::VertexId>> order;
      if (!order_text.empty()) order = load([&] { return parse_order(g, order_text); });
      const konig::ReverseResult r = konig::reverse_konig(g, c, order);
      Json j;
      j["matching"] = konig::io::matching_to_json(g, r.combined);
      j["upper"] = konig::io::matching_to_json(g, r.m_up);
      j["lower"] = konig::io::matching_to_json(g, r.m_down);
      j["visit_order"] = konig::io::vertices_to_json(g, r.visit_order);
      j["konig_cover"] = konig::io::vertices_to_json(g, konig::konig_cover(g, r.combined).vertices);
      j["round_trip"] = true;
      emit(j);
    } else if (*classify) {
      const auto g = load([&] { return konig::io::read_graph(graph_path); });
      const auto m = load([&] { return konig::io::read_matching(g, matching_path); });
      const auto verdict = konig::classify_matching(g, m, limit);
      Json j;
      j["is_minimum"] = verdict.is_minimum;
      j["witness"] = nullptr;
      if (verdict.witness) {
        j["witness"] = {{"path", konig::io::path_to_json(g, verdict.witness->path)},
                        {"unsaturated_right", konig::io::vertices_to_json(g, verdict.witness->unsaturated_right)}};
      }
      j["cover"] = konig::io::cover_to_json(g, konig::konig_cover(g, m).vertices);
      emit(j);
    } else if (*starstud) {
      const auto h = load([&] { return konig::io::read_graph(graph_path); });
      const auto ssg = konig::star_stud(h);
      Json j = konig::io::graph_to_json(ssg.full);
      j["attachment"] = Json::array();
      for (konig::VertexId v = 0; v < h.vertex_count(); ++v) {
        const auto& star = ssg.attachment[v];
        j["attachment"].push_back({{"vertex", h.label(v)},
                                   {"center", ssg.full.label(star[0])},
                                   {"leaves", {ssg.full.label(star[1]), ssg.full.label(star[2]), ssg.full.label(star[3])}}});
      }
      emit(j);
    } else if (*enumerate) {
      const auto g = load([&] { return konig::io::read_graph(graph_path); });
      Json j;
      if (!matching_path.empty()) {
        const auto m = load([&] { return konig::io::read_matching(g, matching_path); });
        j["augmenting_paths"] = Json::array();
        for (const auto& p : konig::enumerate_augmenting_paths(g, m, limit)) {
          j["augmenting_paths"].push_back(konig::io::path_to_json(g, p));
        }
      }
      if (oracle || matching_path.empty()) {
        j["minimum_covers"] = Json::array();
        for (const auto& c : konig::all_minimum_covers(g)) j["minimum_covers"].push_back(konig::io::vertices_to_json(g, c));
        j["matchings"] = Json::array();
        for (const auto& m : konig::all_matchings(g)) j["matchings"].push_back(konig::io::matching_to_json(g, m));
        j["maximal_matchings"] = Json::array();
        for (const auto& m : konig::all_maximal_matchings(g)) {
          j["maximal_matchings"].push_back(konig::io::matching_to_json(g, m));
        }
        j["hall"] = {{"left", konig::hall_condition(g, konig::Side::kLeft)},
                     {"right", konig::hall_condition(g, konig::Side::kRight)}};
      }
      emit(j);
    } else if (*experiment) {
      const auto report = serial ? konig::run_trials_serial(cfg) : konig::run_trials(cfg);
      if (out_path.empty()) {
        konig::write_trials_csv(std::cout, report);
      } else {
        std::ofstream out(out_path);
        if (!out) throw InputError("cannot write " + out_path);
        konig::write_trials_csv(out, report);
        Json j;
        j["trials_run"] = report.trials_run;
        j["minimum_hits"] = report.minimum_hits;
        j["hit_rate"] = report.hit_rate();
        j["mean_cover_excess"] = report.mean_cover_excess;
        j["by_min_cover_size"] = Json::array();
        for (const auto& row : report.by_min_cover_size) {
          j["by_min_cover_size"].push_back({{"min_cover_size", row.min_cover_size},
                                            {"trials", row.trials},
                                            {"minimum_hits", row.minimum_hits},
                                            {"total_excess", row.total_excess}});
        }
        emit(j);
      }
    } else if (*verify) {
      const auto report = konig::corpus_verify(
          max_vertices, serial ? konig::Execution::kSerial : konig::Execution::kParallel, groups);
      Json j;
      j["max_vertices"] = report.max_vertices;
      j["graphs"] = report.graphs;
      j["ok"] = report.ok();
      j["suites"] = Json::array();
      for (const auto& s : report.suites) {
        j["suites"].push_back(suite_json(s));
        std::cerr << (s.passed() ? "ok   " : s.gating ? "FAIL " : "note ") << s.name << ": " << s.cases << " cases, "
                  << s.violations << " violations\n";
      }
      emit(j);
      return report.ok() ? kOk : kDomainError;
    }
  } catch (const InputError& e) {
    std::cerr << "error: " << e.what() << '\n';
    return kInputError;
  } catch (const konig::Error& e) {
    std::cerr << "error: " << e.what() << '\n';
    return kDomainError;
  }
  return kOk;
}
