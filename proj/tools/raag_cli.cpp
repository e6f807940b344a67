#include <omp.h>

#include <CLI11.hpp>
#include <iostream>
#include <json.hpp>
#include <string>

#include "raag/cancellation.hpp"
#include "raag/classify.hpp"
#include "raag/distance_formula.hpp"
#include "raag/errors.hpp"
#include "raag/extension.hpp"
#include "raag/lengths.hpp"
#include "raag/link.hpp"
#include "verify.hpp"

using nlohmann::json;
using namespace raag;

namespace {

constexpr int kOk = 0;
constexpr int kViolation = 1;
constexpr int kUsage = 2;

const char* const kSchema = R"({
  "reduce": {"input": "string", "normal_form": "string", "length": "int"},
  "length": {"element": "string", "word": "int", "syllable": "int", "star": "int", "factors": [{"center": "string", "word": "string"}]},
  "classify": {"element": "string", "kind": "identity|elliptic|loxodromic", "witness": {"support": ["string"], "join": [["string"], ["string"]], "loop": ["string"]}, "series": ["int"]},
  "growth": {"element": "string", "kind": "string", "series": ["int"]},
  "freeness": {"elements": ["string"], "power": "int", "max_len": "int", "relations": ["string"], "free": "bool"},
  "snapshot": {"graph": {"vertices": ["string"], "edges": [["string", "string"]]}, "budget": {"L": "int", "E": "int"}, "vertices": [{"id": "int", "base": "string", "conjugator": "string"}], "edges": [["int", "int"]]},
  "snapshot --girth": {"vertices": "int", "edges": "int", "girth": "int|null"},
  "distance": {"x": "string", "y": "string", "graph_distance": "int|null", "covering_distance": "int|null", "lower": "int", "exact": "bool"},
  "project": {"center": "string", "target": "string", "distance": "int", "entries": ["string"], "diameter": "int", "bound": "int", "exact": "bool"},
  "bgit-scan": {"L": "int", "E": "int", "tree": "bool", "M": ["int"], "max_pair_diameter": "int", "max_segment_diameter": "int", "cases": [{"kind": "string", "center": "string", "target": "string", "distance": "int", "diameter": "int", "bound": "int", "pass": "bool"}], "pass": "bool"},
  "distance-formula": {"syl": "int", "sum": "int", "sum_interval": ["int", "int"], "K": "int", "C": "int", "pass": "bool", "certificate": {"path": ["string"], "markers": ["int"], "terms": ["int"]}},
  "acyl-sample": {"s": "int", "t": "int", "E": "int", "bound": "int", "max_count": "int", "max_untruncated": "int", "min_window_bound": "int", "witnesses": [{"x": "string", "y": "string", "count": "int", "window_bound": "int"}], "pass": "bool"},
  "verify-all": {"seed": "int", "results": [{"tag": "string", "pass": "bool", "samples": "int", "violations": "int", "detail": "string"}], "pass": "bool"}
})";

json labels(const SimplicialGraph& g, VertexSet s) {
  json out = json::array();
  for (Vertex v : s.members()) out.push_back(g.label(v));
  return out;
}

void print(const json& j) { std::cout << j.dump(2) << '\n'; }

ExtVertex parse_vertex(const SimplicialGraph& g, const std::string& base, const std::string& conj) {
  return canonical_vertex(g, g.index(base), GroupElement::parse(g, conj.empty() ? "1" : conj));
}

}  // namespace

int main(int argc, char** argv) {
  CLI::App app{"Exact computation in right-angled Artin groups and their extension graphs"};
  app.require_subcommand(0, 1);
  app.fallthrough();
  bool help_schema = false;
  int workers = 1;
  app.add_flag("--help-schema", help_schema, "Print the JSON output schemas and exit");
  app.add_option("--workers", workers, "Worker threads for parallel kernels")->check(CLI::PositiveNumber);

  std::string graph_file;
  std::string word;
  std::vector<std::string> words;
  int length = 3;
  int exponent = 1;
  int samples = 100;
  int n_max = 6;
  std::uint64_t seed = 1;
  std::string format = "json";
  bool want_girth = false;
  bool tree = false;
  std::string kernel = "neighbours";
  std::string x_base, x_conj, y_base, y_conj;
  int power = 2;
  int max_len = 4;
  int s_param = 1;
  int t_param = 1;
  int trials = 50;

  auto graph_opt = [&](CLI::App* sub) { sub->add_option("--graph", graph_file, "Graph file")->required(); };
  auto budget_opts = [&](CLI::App* sub) {
    sub->add_option("--L", length, "Conjugator length budget");
    sub->add_option("--E", exponent, "Syllable exponent budget");
  };

  auto* reduce = app.add_subcommand("reduce", "Normal form of a word");
  graph_opt(reduce);
  reduce->add_option("--word", word)->required();

  auto* len = app.add_subcommand("length", "Word, syllable and star length");
  graph_opt(len);
  len->add_option("--word", word)->required();

  auto* cls = app.add_subcommand("classify", "Elliptic or loxodromic, with witness");
  graph_opt(cls);
  cls->add_option("--word", word)->required();
  cls->add_option("--n", n_max, "Largest power in the growth series");

  auto* growth = app.add_subcommand("growth", "Star length of powers");
  graph_opt(growth);
  growth->add_option("--word", word)->required();
  growth->add_option("--n", n_max, "Largest power");

  auto* freeness = app.add_subcommand("freeness", "Search for relations among powers");
  graph_opt(freeness);
  freeness->add_option("--word", words, "Element (repeat for each)")->required();
  freeness->add_option("--power", power);
  freeness->add_option("--max-len", max_len);

  auto* snapshot = app.add_subcommand("snapshot", "Finite piece of the extension graph");
  graph_opt(snapshot);
  budget_opts(snapshot);
  snapshot->add_flag("--girth", want_girth, "Report size and girth only");
  snapshot->add_option("--format", format)->check(CLI::IsMember({"json", "dot"}));
  snapshot->add_option("--kernel", kernel)->check(CLI::IsMember({"pairwise", "neighbours"}));

  auto* distance = app.add_subcommand("distance", "Distances between two extension vertices");
  graph_opt(distance);
  budget_opts(distance);
  distance->add_option("--x", x_base)->required();
  distance->add_option("--x-conj", x_conj);
  distance->add_option("--y", y_base)->required();
  distance->add_option("--y-conj", y_conj);

  auto* project_cmd = app.add_subcommand("project", "Projection to a vertex link");
  graph_opt(project_cmd);
  budget_opts(project_cmd);
  project_cmd->add_option("--center", x_base)->required();
  project_cmd->add_option("--center-conj", x_conj);
  project_cmd->add_option("--target", y_base)->required();
  project_cmd->add_option("--target-conj", y_conj);

  auto* bgit = app.add_subcommand("bgit-scan", "Sampled projection diameter bounds");
  graph_opt(bgit);
  budget_opts(bgit);
  bgit->add_option("--samples", samples);
  bgit->add_option("--seed", seed);

  auto* formula = app.add_subcommand("distance-formula", "Distance formula check for one element");
  graph_opt(formula);
  formula->add_option("--word", word)->required();
  formula->add_flag("--tree", tree, "Use the tree formula");

  auto* acyl = app.add_subcommand("acyl-sample", "Cancellation cardinality sampling");
  graph_opt(acyl);
  acyl->add_option("--s", s_param);
  acyl->add_option("--t", t_param);
  acyl->add_option("--E", exponent);
  acyl->add_option("--trials", trials);
  acyl->add_option("--seed", seed);

  auto* verify = app.add_subcommand("verify-all", "Run every property suite");
  verify->add_option("--seed", seed);

  try {
    app.parse(argc, argv);
  } catch (const CLI::CallForHelp& e) {
    return app.exit(e);
  } catch (const CLI::ParseError& e) {
    app.exit(e);
    return kUsage;
  }
  if (help_schema) {
    std::cout << kSchema << '\n';
    return kOk;
  }
  omp_set_num_threads(workers);

  try {
    if (*verify) {
      auto results = cli::verify_all(seed, workers);
      json out{{"seed", seed}, {"results", json::array()}};
      bool pass = true;
      for (const auto& r : results) {
        out["results"].push_back({{"tag", r.tag},
                                  {"pass", r.pass},
                                  {"samples", r.samples},
                                  {"violations", r.violations},
                                  {"detail", r.detail}});
        pass = pass && r.pass;
      }
      out["pass"] = pass;
      print(out);
      return pass ? kOk : kViolation;
    }
    if (app.get_subcommands().empty()) {
      std::cout << app.help();
      return kUsage;
    }

    const auto g = SimplicialGraph::from_file(graph_file);
    if (*reduce) {
      auto e = GroupElement::parse(g, word);
      print({{"input", word}, {"normal_form", e.to_string()}, {"length", e.length()}});
    } else if (*len) {
      auto e = GroupElement::parse(g, word);
      json factors = json::array();
      auto f = star_factorization(e);
      for (auto it = f.factors.rbegin(); it != f.factors.rend(); ++it) {
        factors.push_back({{"center", g.label(it->center)}, {"word", it->word.to_string()}});
      }
      print({{"element", e.to_string()},
             {"word", e.length()},
             {"syllable", syllable_length(e)},
             {"star", star_length(e)},
             {"factors", factors}});
    } else if (*cls || *growth) {
      auto e = GroupElement::parse(g, word);
      auto t = classify(e);
      json out{{"element", e.to_string()}, {"kind", to_string(t.kind)}, {"series", power_star_growth(e, n_max)}};
      if (*cls) {
        json loop = json::array();
        for (Vertex v : t.loop) loop.push_back(g.label(v));
        out["witness"] = {{"support", labels(g, t.support)},
                          {"join", {labels(g, t.join.first), labels(g, t.join.second)}},
                          {"loop", loop}};
      }
      print(out);
    } else if (*freeness) {
      std::vector<GroupElement> lambdas;
      for (const auto& w : words) lambdas.push_back(GroupElement::parse(g, w));
      auto relations = sample_free_relations(lambdas, power, max_len);
      json rel = json::array();
      for (const auto& r : relations) rel.push_back(format_free_word(r));
      json elements = json::array();
      for (const auto& l : lambdas) elements.push_back(l.to_string());
      print({{"elements", elements},
             {"power", power},
             {"max_len", max_len},
             {"relations", rel},
             {"free", relations.empty()}});
      return relations.empty() ? kOk : kViolation;
    } else if (*snapshot) {
      auto s = ExtSnapshot::build(
          g, {length, exponent},
          {.edges = kernel == "pairwise" ? EdgeKernel::pairwise : EdgeKernel::neighbours});
      if (want_girth) {
        const int gi = girth(s.adjacency());
        print({{"vertices", s.size()}, {"edges", s.edge_count()}, {"girth", gi == kInfinity ? json(nullptr) : json(gi)}});
      } else if (format == "dot") {
        std::cout << s.to_dot();
      } else {
        std::cout << s.to_json() << '\n';
      }
    } else if (*distance) {
      auto x = parse_vertex(g, x_base, x_conj);
      auto y = parse_vertex(g, y_base, y_conj);
      auto s = ExtSnapshot::build(g, {length, exponent});
      auto d = graph_distance(s, x, y);
      auto c = covering_distance(s, x, y);
      auto finite = [](int v) { return v == kInfinity ? json(nullptr) : json(v); };
      print({{"x", x.to_string()},
             {"y", y.to_string()},
             {"graph_distance", finite(d.value)},
             {"covering_distance", finite(c.value)},
             {"lower", d.lower},
             {"exact", d.exact}});
    } else if (*project_cmd) {
      auto center = parse_vertex(g, x_base, x_conj);
      auto target = parse_vertex(g, y_base, y_conj);
      auto s = ExtSnapshot::build(g, {length, exponent});
      auto p = project(s, center, target);
      json entries = json::array();
      for (int id : p.entries) entries.push_back(s.vertex(id).to_string());
      const int bound = 3 * build_link_model(g, center.base).diam_z;
      print({{"center", center.to_string()},
             {"target", target.to_string()},
             {"distance", p.distance},
             {"entries", entries},
             {"diameter", p.diameter.exact},
             {"bound", bound},
             {"exact", p.exact}});
    } else if (*bgit) {
      auto r = bgit_scan(g, {length, exponent}, samples, seed);
      json cases = json::array();
      for (const auto& c : r.cases) {
        cases.push_back({{"kind", c.kind},
                         {"center", c.center},
                         {"target", c.target},
                         {"distance", c.distance},
                         {"diameter", c.diameter},
                         {"bound", c.bound},
                         {"pass", c.pass}});
      }
      print({{"L", r.budget_length},
             {"E", r.budget_exponent},
             {"tree", r.tree},
             {"M", r.m},
             {"max_pair_diameter", r.max_pair_diameter},
             {"max_segment_diameter", r.max_segment_diameter},
             {"cases", cases},
             {"pass", r.pass}});
      return r.pass ? kOk : kViolation;
    } else if (*formula) {
      auto e = GroupElement::parse(g, word);
      json certificate;
      json out;
      bool pass = false;
      auto term_values = [](const std::vector<LinkDistance>& terms) {
        json t = json::array();
        for (const auto& d : terms) t.push_back(d.exact);
        return t;
      };
      if (tree) {
        auto r = tree_distance_formula_check(e);
        json path = json::array();
        for (const auto& x : r.geodesic) path.push_back(x.to_string());
        certificate = {{"path", path}, {"markers", r.markers}, {"terms", term_values(r.terms)}};
        out = {{"syl", r.syl}, {"sum", r.sum}, {"sum_interval", {r.sum_lo, r.sum_hi}},
               {"K", 4 * r.diameter}, {"C", 4 * r.diameter}};
        pass = r.pass;
      } else {
        auto cert = build_quasi_geodesic(e);
        auto r = general_distance_formula_check(cert);
        json path = json::array();
        for (const auto& x : cert.path) path.push_back(x.to_string());
        certificate = {{"path", path}, {"markers", cert.markers}, {"terms", term_values(r.terms)}};
        out = {{"syl", r.syl}, {"sum", r.sum}, {"sum_interval", {r.sum_lo, r.sum_hi}},
               {"K", cert.k_const}, {"C", cert.c_const}};
        pass = r.pass;
      }
      out["pass"] = pass;
      out["certificate"] = certificate;
      print(out);
      return pass ? kOk : kViolation;
    } else if (*acyl) {
      auto r = acyl_sample(g, s_param, t_param, exponent, trials, seed);
      json witnesses = json::array();
      for (const auto& c : r.trials) {
        witnesses.push_back({{"x", c.x.to_string()}, {"y", c.y.to_string()}, {"count", c.truncated},
                             {"window_bound", c.window_bound}});
      }
      print({{"s", r.s},
             {"t", r.t},
             {"E", r.max_exp},
             {"bound", r.bound},
             {"max_count", r.max_count},
             {"max_untruncated", r.max_untruncated},
             {"min_window_bound", r.min_window_bound},
             {"witnesses", witnesses},
             {"pass", r.pass}});
      return r.pass ? kOk : kViolation;
    }
  } catch (const ParseError& e) {
    std::cerr << "parse error: " << e.what() << '\n';
    return kUsage;
  } catch (const UnknownVertex& e) {
    std::cerr << "error: " << e.what() << '\n';
    return kUsage;
  } catch (const BudgetExceeded& e) {
    std::cerr << "budget exceeded: " << e.what() << '\n';
    return kUsage;
  } catch (const PreconditionError& e) {
    std::cerr << "precondition: " << e.what() << '\n';
    return kUsage;
  } catch (const Error& e) {
    std::cerr << "error: " << e.what() << '\n';
    return kUsage;
  }
  return kOk;
}
