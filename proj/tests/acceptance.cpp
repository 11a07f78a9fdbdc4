// Acceptance checks. Prints one PASS/FAIL line per criterion (plus "info"
// lines for measurements that do not gate) and exits 1 if any criterion
// fails. `--criterion N` runs a single one.

#include <CLI11.hpp>

#include <chrono>
#include <filesystem>
#include <fstream>
#include <functional>
#include <iostream>
#include <map>
#include <optional>
#include <set>
#include <sstream>
#include <string>
#include <vector>

#include "konig/error.hpp"
#include "konig/experiments.hpp"
#include "konig/graph.hpp"
#include "konig/konig.hpp"
#include "konig/oracle.hpp"
#include "konig/verify.hpp"

using namespace konig;

namespace {

struct Outcome {
  bool ok = true;
  std::string detail;
};

struct Criterion {
  int number;
  std::string title;
  double limit_seconds;
  std::function<Outcome()> run;
};

const Corpus& corpus8() {
  static const Corpus c = connected_bipartite_corpus(8);
  return c;
}

const Corpus& corpus6() {
  static const Corpus c = connected_bipartite_corpus(6);
  return c;
}

VertexId v(const BipartiteGraph& g, const std::string& label) { return *g.find_label(label); }

VertexSet set_of(const BipartiteGraph& g, std::initializer_list<const char*> labels) {
  std::vector<VertexId> out;
  for (const char* l : labels) out.push_back(v(g, l));
  return make_vertex_set(out);
}

Matching match(const BipartiteGraph& g, std::initializer_list<std::pair<const char*, const char*>> pairs) {
  Matching m(g);
  for (const auto& [a, b] : pairs) m.insert(g, g.orient(v(g, a), v(g, b)));
  return m;
}

// Folds the named sub-checks into one outcome; every other result is printed
// as an info line.
Outcome gate(const std::vector<SuiteResult>& results, const std::set<std::string>& names) {
  Outcome o;
  std::ostringstream detail;
  std::set<std::string> seen;
  for (const auto& r : results) {
    if (!names.count(r.name)) {
      std::cout << "  info " << r.name << ": " << r.violations << " of " << r.cases << " cases violate"
                << (r.first_counterexample.empty() ? "" : "; first: " + r.first_counterexample) << "\n";
      continue;
    }
    seen.insert(r.name);
    if (!detail.str().empty()) detail << "; ";
    detail << r.name << " " << r.violations << "/" << r.cases;
    if (!r.passed()) {
      o.ok = false;
      detail << " (first: " << r.first_counterexample << ")";
    }
  }
  if (seen.size() != names.size()) {
    o.ok = false;
    detail << "; missing sub-checks";
  }
  o.detail = detail.str();
  return o;
}

Outcome p4_example() {
  const std::vector<std::pair<std::size_t, std::size_t>> edges{{0, 0}, {1, 0}, {1, 1}};
  const auto g = build_graph(2, 2, edges, {"1", "3", "2", "4"});
  bool ok = konig_cover(g, match(g, {{"1", "2"}, {"3", "4"}})).vertices == set_of(g, {"1", "3"});
  ok = ok && konig_cover(g, match(g, {{"2", "3"}})).vertices == set_of(g, {"2", "4"});
  ok = ok && konig_cover(g, match(g, {{"3", "4"}})).vertices == set_of(g, {"2", "3"});
  const std::vector<VertexSet> expected{set_of(g, {"1", "3"}), set_of(g, {"2", "3"}), set_of(g, {"2", "4"})};
  ok = ok && all_minimum_covers(g) == expected;
  ok = ok && !is_vertex_cover(g, set_of(g, {"1", "4"}));
  return {ok, "P4 covers {1,3} {2,4} {2,3}; minimum covers {{1,3},{2,3},{2,4}}; {1,4} not a cover"};
}

Outcome fork_example() {
  const auto g = build_graph_from_labels(
      {"a1", "a2", "c1"}, {"b1", "d1", "d2", "d3"},
      {{"a1", "b1"}, {"a2", "b1"}, {"c1", "b1"}, {"c1", "d1"}, {"c1", "d2"}, {"c1", "d3"}});
  const auto k = konig_cover(g, match(g, {{"b1", "c1"}})).vertices;
  const auto covers = all_minimum_covers(g);
  const bool ok = k.size() == 4 && is_vertex_cover(g, k) && is_minimal_cover(g, k) && !is_minimum_cover(g, k) &&
                  !covers.empty() && covers.front().size() == 2;
  return {ok, "cover size " + std::to_string(k.size()) + ", oracle minimum " +
                  std::to_string(covers.empty() ? 0 : covers.front().size())};
}

// Each CSV row has nine fields and agrees with the report it came from.
bool csv_valid(const std::filesystem::path& file, const TrialReport& report) {
  std::ifstream in(file);
  std::string line;
  if (!std::getline(in, line) ||
      line != "seed,n_left,n_right,p,trial_index,matching_size,cover_size,min_cover_size,is_minimum") {
    return false;
  }
  std::size_t row = 0;
  while (std::getline(in, line)) {
    std::vector<std::string> fields;
    std::stringstream ss(line);
    std::string f;
    while (std::getline(ss, f, ',')) fields.push_back(f);
    if (fields.size() != 9 || row >= report.records.size()) return false;
    const auto& r = report.records[row];
    if (std::stoull(fields[4]) != r.trial_index || std::stoull(fields[6]) != r.cover_size ||
        std::stoull(fields[7]) != r.min_cover_size || fields[8] != (r.is_minimum ? "true" : "false")) {
      return false;
    }
    ++row;
  }
  return row == report.records.size();
}

Outcome experiment() {
  Outcome o;
  std::ostringstream detail;
  const auto dir = std::filesystem::temp_directory_path();
  for (double p : {0.1, 0.3, 0.5}) {
    const TrialConfig cfg{20, 20, p, 10000, 2024};
    const auto report = run_trials(cfg);
    const auto file = dir / ("konig_trials_" + std::to_string(static_cast<int>(p * 10)) + ".csv");
    {
      std::ofstream out(file);
      write_trials_csv(out, report);
    }
    const bool valid = csv_valid(file, report);
    const auto tiny = experiment_oracle_agreement(TrialConfig{6, 6, p, 10000, 2024});
    o.ok = o.ok && valid && tiny.passed() && report.trials_run == cfg.trials;
    detail << "p=" << p << " hit rate " << report.hit_rate() << " mean excess " << report.mean_cover_excess
           << (valid ? " csv ok" : " csv BAD") << ", 6x6 oracle " << tiny.violations << "/" << tiny.cases << "; ";
  }
  o.detail = detail.str();
  return o;
}

std::vector<Criterion> criteria() {
  const auto exec = Execution::kParallel;
  return {
      {1, "P4 example", 1.0, p4_example},
      {2, "fork example", 1.0, fork_example},
      {3, "maximum matching size equals minimum cover size (<= 8 vertices)", 600.0,
       [=] {
         return gate(suite_konig_equality(corpus8(), exec),
                     {"konig_equality", "maximum_matching_cover_is_minimum"});
       }},
      {4, "reverse procedure round trip, default order + 5 samples (<= 8 vertices)", 0.0,
       [=] { return gate(suite_reverse(corpus8(), exec, 0, 5), {"reverse_round_trip"}); }},
      {5, "every minimum cover is a Konig cover (<= 8 vertices)", 0.0,
       [=] { return gate(suite_cover_surjectivity(corpus8(), exec), {"cover_surjectivity"}); }},
      {6, "classification agrees with the oracle on maximal matchings (<= 8 vertices)", 0.0,
       [=] { return gate(suite_classification(corpus8(), exec), {"classification_agreement"}); }},
      {7, "matchings differing by disjoint cycles share a cover (<= 8 vertices)", 0.0,
       [=] { return gate(suite_cycle_fibers(corpus8(), exec), {"cycle_fiber_invariance"}); }},
      {8, "maximal matchings: one endpoint per matched edge, minimal cover (<= 8 vertices)", 0.0,
       [=] {
         return gate(suite_maximal_matching_covers(corpus8(), exec),
                     {"matched_edge_one_endpoint", "maximal_gives_minimal_cover"});
       }},
      {9, "star-studded graphs are enumeratively Konig-Egervary (<= 6 vertices)", 900.0,
       [=] {
         return gate(suite_star_studded(corpus6(), exec),
                     {"star_studded_enumerative", "star_studded_restriction_reaches_base_covers"});
       }},
      {10, "path structure: localization, unique-root equality, strict decrease (<= 8 vertices)", 0.0,
       [=] {
         return gate(suite_path_structure(corpus8(), exec),
                     {"localization", "unique_root_equality", "strict_decrease"});
       }},
      {11, "random 20x20 trials, p in {0.1, 0.3, 0.5}, 10^4 each", 120.0, experiment},
  };
}

}  // namespace

int main(int argc, char** argv) {
  CLI::App app{"acceptance checks"};
  std::optional<int> only;
  app.add_option("--criterion", only, "run a single criterion")->check(CLI::Range(1, 11));
  CLI11_PARSE(app, argc, argv);

  bool all_ok = true;
  for (const auto& c : criteria()) {
    if (only && *only != c.number) continue;
    const auto start = std::chrono::steady_clock::now();
    Outcome o;
    try {
      o = c.run();
    } catch (const std::exception& e) {
      o = {false, std::string("threw ") + e.what()};
    }
    const double secs = std::chrono::duration<double>(std::chrono::steady_clock::now() - start).count();
    const bool in_time = c.limit_seconds <= 0.0 || secs < c.limit_seconds;
    const bool ok = o.ok && in_time;
    all_ok = all_ok && ok;
    std::cout << "criterion " << c.number << " " << (ok ? "PASS" : "FAIL") << " [" << c.title << "] " << secs
              << " s";
    if (c.limit_seconds > 0.0) std::cout << " (limit " << c.limit_seconds << " s" << (in_time ? "" : ", EXCEEDED") << ")";
    std::cout << ": " << o.detail << std::endl;
  }
  return all_ok ? 0 : 1;
}
