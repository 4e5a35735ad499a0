// edgering: toric ideals, Betti tables and contraction checks for graphs.
#include <cctype>
#include <fstream>
#include <iostream>
#include <sstream>
#include <string>
#include <vector>

#include <CLI11.hpp>

#include "edgering/betti.hpp"
#include "edgering/binomial.hpp"
#include "edgering/graph.hpp"
#include "edgering/lab.hpp"
#include "edgering/walks.hpp"

using namespace edgering;

namespace {

FieldSpec parse_field(const std::string& s) {
  if (s == "exact" || s == "QQ") return FieldSpec::rationals();
  unsigned long p = std::stoul(s);
  if (p < 2 || p > 65521) throw std::invalid_argument("--field expects a prime below 65536 or 'exact'");
  for (unsigned long d = 2; d * d <= p; ++d)
    if (p % d == 0) throw std::invalid_argument("--field " + s + " is not prime");
  return FieldSpec::gf(static_cast<std::uint32_t>(p));
}

std::string read_file(const std::string& path) {
  std::ifstream in(path);
  if (!in) throw std::runtime_error("cannot read " + path);
  std::stringstream ss;
  ss << in.rdbuf();
  return ss.str();
}

int cmd_walks(const std::string& path) {
  SimpleGraph g = load_graph(path);
  auto walks = enumerate_primitive_walks(g);
  std::cout << walks.size() << " primitive even closed walks\n";
  for (const auto& w : walks) {
    std::cout << "(";
    for (std::size_t i = 0; i < w.vertices().size(); ++i) std::cout << (i ? "," : "") << w.vertices()[i];
    std::cout << ")  " << walk_binomial(g, w).to_string() << "\n";
  }
  return 0;
}

int cmd_ideal(const std::string& path, const std::string& order, const std::vector<std::size_t>& perm) {
  SimpleGraph g = load_graph(path);
  const std::size_t n = g.num_edges();
  std::vector<std::size_t> priority;
  if (perm.empty()) {
    for (std::size_t j = 0; j < n; ++j) priority.push_back(j);
  } else {
    if (perm.size() != n) throw std::invalid_argument("--perm must list every edge index once");
    for (std::size_t j : perm) {
      if (j < 1 || j > n) throw std::invalid_argument("--perm indices are 1-based edge numbers");
      priority.push_back(j - 1);
    }
  }
  TermOrder ord(order == "lex" ? TermOrder::Kind::lex : TermOrder::Kind::degrevlex, priority);
  std::cout << "edges:";
  for (std::size_t j = 0; j < n; ++j)
    std::cout << " e" << j + 1 << "={" << g.edges()[j].a << "," << g.edges()[j].b << "}";
  std::cout << "\norder: " << ord.describe() << "\n";
  BinomialIdeal gb = toric_ideal(g, ord);
  auto mins = minimal_generators(gb);
  std::cout << "minimal generators (" << mins.size() << "):\n";
  for (const auto& b : mins) std::cout << "  " << to_string(b) << "\n";
  std::cout << "reduced Groebner basis (" << gb.generators.size() << "):\n";
  for (const auto& b : gb.generators) std::cout << "  " << to_string(b) << "\n";
  auto in = initial_ideal(gb);
  std::cout << "initial ideal (" << in.size() << "):";
  for (const auto& m : in) std::cout << " " << monomial_to_string(m);
  std::cout << "\n";
  return 0;
}

int cmd_betti(const std::string& path, const std::string& field, const std::string& mode, int max_degree,
              const std::string& json_out, bool no_shortcuts) {
  SimpleGraph g = load_graph(path);
  BettiOptions o;
  o.field = parse_field(field);
  o.shortcuts = !no_shortcuts;
  if (mode == "exhaustive") {
    if (max_degree <= 0) throw std::invalid_argument("exhaustive mode needs --max-degree");
    o.mode = BettiOptions::Mode::exhaustive;
    o.max_degree = max_degree;
  }
  BettiTable t = betti_table(g, o);
  std::cout << t.to_text();
  if (!json_out.empty()) {
    std::ofstream(json_out) << t.to_json() << "\n";
    std::cout << "wrote " << json_out << "\n";
  }
  return 0;
}

int cmd_example(const std::string& id, const std::string& save_dir, bool jsonl, const LabOptions& lab) {
  std::vector<std::string> ids;
  if (id == "all")
    for (const auto& f : fixtures()) ids.push_back(f.id);
  else
    ids.push_back(id);
  int status = 0;
  for (const auto& i : ids) {
    if (!save_dir.empty()) {
      for (const auto& t : fixture(i).tables) {
        std::string label;
        // G'/p' -> Gprime_pprime
        for (char c : t.label) {
          if (c == '\'') label += "prime";
          else if (c == '/' || c == ',') label += '_';
          else if (std::isalnum(static_cast<unsigned char>(c))) label += c;
        }
        save_graph(t.graph, save_dir + "/" + i + "-" + label + ".json");
      }
    }
    CheckReport r = reproduce(i, lab);
    std::cout << (jsonl ? r.to_json_line() + "\n" : r.to_text());
    if (!r.passed()) status = 1;
  }
  return status;
}

int check_status(const CheckReport& r) {
  if (!r.hypotheses_met) return 2;
  return r.conclusion_holds ? 0 : 1;
}

}  // namespace

int main(int argc, char** argv) {
  CLI::App app{"Toric ideals of graphs, Betti numbers of edge rings and contraction checks"};
  app.require_subcommand(1);

  std::string graph_path, field = "32003", mode = "guided", json_out, order = "degrevlex";
  int max_degree = 0;
  bool no_shortcuts = false, jsonl = false;
  std::vector<std::size_t> perm;

  auto* walks = app.add_subcommand("walks", "primitive even closed walks and their binomials");
  walks->add_option("graph", graph_path, "graph JSON file")->required()->check(CLI::ExistingFile);

  auto* ideal = app.add_subcommand("ideal", "generators, reduced Groebner basis and initial ideal of I_G");
  ideal->add_option("graph", graph_path, "graph JSON file")->required()->check(CLI::ExistingFile);
  ideal->add_option("--order", order, "term order")->check(CLI::IsMember({"lex", "degrevlex"}));
  ideal->add_option("--perm", perm, "edge priority, most significant first (1-based)")->delimiter(',');

  auto* betti = app.add_subcommand("betti", "Betti table of K[G]");
  betti->add_option("graph", graph_path, "graph JSON file")->required()->check(CLI::ExistingFile);
  betti->add_option("--field", field, "a prime p or 'exact'");
  betti->add_option("--mode", mode, "guided or exhaustive")->check(CLI::IsMember({"guided", "exhaustive"}));
  betti->add_option("--max-degree", max_degree, "exhaustive mode: largest degree |s|/2");
  betti->add_option("--json", json_out, "write the table as JSON");
  betti->add_flag("--no-shortcuts", no_shortcuts, "build every fiber complex, skipping the acyclicity shortcuts");

  std::string example_id, save_dir;
  auto* example = app.add_subcommand("example", "reproduce a worked example ('all' runs every fixture)");
  example->add_option("id", example_id, "fixture id")->required();
  example->add_option("--save-dir", save_dir, "also write the fixture graphs here")->check(CLI::ExistingDirectory);
  example->add_flag("--jsonl", jsonl, "JSON-lines output");
  example->add_option("--field", field, "a prime p or 'exact'");
  example->add_flag("--no-shortcuts", no_shortcuts, "disable the acyclicity shortcuts");

  std::string check_id;
  std::vector<VertexId> path_arg, q_arg, edge_arg;
  auto* chk = app.add_subcommand("check", "check a statement on one graph");
  chk->add_option("id", check_id, "check id")->required()->check(CLI::IsMember(check_ids()));
  chk->add_option("graph", graph_path, "graph JSON file")->required()->check(CLI::ExistingFile);
  chk->add_option("--path", path_arg, "vertices of p, comma separated")->delimiter(',');
  chk->add_option("--q", q_arg, "vertices of q, comma separated")->delimiter(',');
  chk->add_option("--edge", edge_arg, "the connecting edge x,y")->delimiter(',')->expected(2);
  chk->add_flag("--jsonl", jsonl, "JSON-lines output");
  chk->add_option("--field", field, "a prime p or 'exact'");

  std::string spec_path, out_path;
  std::uint64_t seed = 1;
  int budget = 100;
  auto* search = app.add_subcommand("search", "seeded random search over a graph family");
  search->add_option("spec", spec_path, "family spec JSON")->required()->check(CLI::ExistingFile);
  search->add_option("--seed", seed, "random seed")->required();
  search->add_option("--budget", budget, "number of instances")->required();
  search->add_option("--out", out_path, "append JSON-lines reports here");
  search->add_option("--field", field, "a prime p or 'exact'");

  int tn_n = 2, tn_m = 0;
  auto* tn = app.add_subcommand("tn", "triangle sequences T_n and T_n -e- T_m");
  tn->add_option("--n", tn_n, "number of triangles")->required()->check(CLI::PositiveNumber);
  tn->add_option("--connect", tn_m, "chain with T_m through a bridge")->check(CLI::PositiveNumber);
  tn->add_flag("--jsonl", jsonl, "JSON-lines output");

  CLI11_PARSE(app, argc, argv);

  try {
    LabOptions lab;
    lab.field = parse_field(field);
    lab.shortcuts = !no_shortcuts;
    if (*walks) return cmd_walks(graph_path);
    if (*ideal) return cmd_ideal(graph_path, order, perm);
    if (*betti) return cmd_betti(graph_path, field, mode, max_degree, json_out, no_shortcuts);
    if (*example) return cmd_example(example_id, save_dir, jsonl, lab);
    if (*chk) {
      SurgeryArgs args{path_arg, q_arg, std::nullopt};
      if (!edge_arg.empty()) args.edge = Edge(edge_arg[0], edge_arg[1]);
      CheckReport r = check(check_id, load_graph(graph_path), args, lab);
      std::cout << (jsonl ? r.to_json_line() + "\n" : r.to_text());
      return check_status(r);
    }
    if (*search) {
      FamilySpec spec = FamilySpec::from_json(read_file(spec_path));
      auto reports = random_search(spec, seed, budget, lab);
      std::ofstream out;
      if (!out_path.empty()) out.open(out_path, std::ios::app);
      std::size_t met = 0, violations = 0;
      for (const auto& r : reports) {
        (out_path.empty() ? std::cout : out) << r.to_json_line() << "\n";
        met += r.hypotheses_met;
        violations += r.is_counterexample();
      }
      std::cout << spec.check << ": " << reports.size() << " instances, " << met << " with hypotheses met, "
                << violations << " violations (seed " << seed << ")\n";
      // Exploratory questions have no expected answer.
      return violations && spec.check != "question-4.5" ? 1 : 0;
    }
    if (*tn) {
      CheckReport r = tn_m > 0 ? triangle_study(tn_n, tn_m, lab) : triangle_study(tn_n, std::nullopt, lab);
      std::cout << (jsonl ? r.to_json_line() + "\n" : r.to_text());
      return r.passed() ? 0 : 1;
    }
  } catch (const std::exception& e) {
    std::cerr << "error: " << e.what() << "\n";
    return 3;
  }
  return 0;
}
