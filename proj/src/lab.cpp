#include "edgering/lab.hpp"

#include <algorithm>
#include <filesystem>
#include <fstream>
#include <numeric>
#include <sstream>
#include <stdexcept>

#include <json.hpp>

#include "edgering/binomial.hpp"

namespace edgering {

namespace {

SimpleGraph graph_of(std::initializer_list<std::pair<VertexId, VertexId>> edges) {
  return SimpleGraph::from_edges(std::vector<std::pair<VertexId, VertexId>>(edges));
}

std::string totals_string(const std::vector<std::size_t>& t) {
  std::ostringstream os;
  os << "(";
  for (std::size_t i = 0; i < t.size(); ++i) os << (i ? "," : "") << t[i];
  os << ")";
  return os.str();
}

std::string vertices_string(const std::vector<VertexId>& vs) {
  std::ostringstream os;
  os << "(";
  for (std::size_t i = 0; i < vs.size(); ++i) os << (i ? "," : "") << vs[i];
  os << ")";
  return os.str();
}

std::size_t at(const std::vector<std::size_t>& t, std::size_t i) { return i < t.size() ? t[i] : 0; }

bool same_totals(const std::vector<std::size_t>& a, const std::vector<std::size_t>& b) {
  for (std::size_t i = 0; i < std::max(a.size(), b.size()); ++i)
    if (at(a, i) != at(b, i)) return false;
  return true;
}

bool dominates(const std::vector<std::size_t>& a, const std::vector<std::size_t>& b) {
  for (std::size_t i = 0; i < std::max(a.size(), b.size()); ++i)
    if (at(a, i) < at(b, i)) return false;
  return true;
}

std::string deltas(const std::vector<std::size_t>& a, const std::vector<std::size_t>& b) {
  std::ostringstream os;
  os << "delta (";
  for (std::size_t i = 0; i < std::max(a.size(), b.size()); ++i)
    os << (i ? "," : "") << static_cast<long>(at(a, i)) - static_cast<long>(at(b, i));
  os << ")";
  return os.str();
}

BettiTable table_of(const SimpleGraph& g, const LabOptions& options) {
  BettiOptions o;
  o.field = options.field;
  o.shortcuts = options.shortcuts;
  return betti_table(g, o);
}

// The fixture graphs with their expected totals. For the hand-entered edge
// lists the expected tables double as a checksum.
std::vector<Fixture> build_fixtures() {
  std::vector<Fixture> out;

  {
    SimpleGraph g = graph_of({{1, 2}, {2, 3}, {1, 3}, {3, 4}, {3, 5}, {5, 6}, {4, 6}, {6, 7}, {6, 8}, {7, 8},
                              {4, 9}, {5, 9}, {4, 10}, {10, 11}, {5, 11}});
    SimpleGraph gp = graph_of({{1, 2}, {2, 3}, {1, 3}, {3, 4}, {3, 5}, {5, 6}, {4, 6}, {6, 7}, {6, 8}, {7, 8},
                               {4, 9}, {5, 9}, {4, 10}, {5, 10}});
    out.push_back({"ex-2.8",
                   "odd (single edge) contraction with incomparable totals; G' = G/{10,11}",
                   {{"G", g, {1, 8, 18, 16, 5}, std::nullopt}, {"G'", gp, {1, 9, 19, 9, 1}, std::nullopt}}});
  }
  {
    SimpleGraph g = graph_of({{1, 2}, {2, 3}, {1, 3}, {4, 5}, {5, 6}, {4, 6}, {1, 7}, {7, 8}, {8, 4}, {1, 9},
                              {9, 10}, {10, 4}});
    SimpleGraph gp = contract_path(g, Walk(g, {1, 9, 10})).graph;
    out.push_back({"ex-2.9",
                   "p = (1,9,10) inside q = (1,9,10,4) with |q| = |p| + 1",
                   {{"G", g, {1, 4, 4, 1}, false}, {"G/p", gp, {1, 2, 1}, true}}});
  }
  {
    SimpleGraph g = graph_of({{1, 2}, {2, 3}, {1, 3}, {4, 5}, {5, 6}, {4, 6}, {1, 7}, {7, 8}, {8, 4}, {1, 9},
                              {9, 4}});
    SimpleGraph gp = contract_path(g, Walk(g, {1, 9, 4})).graph;
    out.push_back({"ex-2.10",
                   "p' = (1,9,4) is a maximal even simple path",
                   {{"G'", g, {1, 4, 4, 1}, false}, {"G'/p'", gp, {1, 3, 2}, true}}});
  }
  {
    SimpleGraph g = graph_of({{1, 2}, {2, 3}, {3, 4}, {4, 5}, {5, 6}, {1, 6}, {2, 5}, {1, 7}, {1, 8}, {7, 9},
                              {8, 9}, {9, 10}, {9, 11}, {10, 11}});
    SimpleGraph gp = contract_walk(g, Walk(g, {1, 2, 3})).graph;
    out.push_back({"ex-2.11",
                   "walk contraction G' = G/(1,2,3)",
                   {{"G", g, {1, 3, 3, 1}, std::nullopt}, {"G'", gp, {1, 8, 15, 10, 2}, std::nullopt}}});
  }
  auto edge_family = [&](const std::string& id, const SimpleGraph& g, std::vector<std::size_t> t0,
                         std::vector<std::size_t> t1, std::vector<std::size_t> t2) {
    SimpleGraph ge = contract_edge(g, Edge(3, 4)).graph;
    SimpleGraph gee = contract_path(g, Walk(g, {3, 4, 5})).graph;
    out.push_back({id,
                   "bridge e = {3,4}, then e' = {4,5}",
                   {{"G", g, std::move(t0), std::nullopt},
                    {"G/e", ge, std::move(t1), std::nullopt},
                    {"G/(e,e')", gee, std::move(t2), std::nullopt}}});
  };
  edge_family("fig-10",
              graph_of({{1, 2}, {2, 3}, {3, 4}, {4, 5}, {5, 6}, {1, 8}, {2, 8}, {2, 9}, {3, 9}, {5, 10}, {5, 11},
                        {10, 11}, {5, 12}, {6, 12}}),
              {1, 6, 9, 4}, {1, 6, 9, 4}, {1, 6, 8, 3});
  edge_family("fig-11",
              graph_of({{1, 3}, {2, 3}, {3, 4}, {4, 5}, {5, 6}, {1, 8}, {3, 8}, {2, 9}, {3, 9}, {5, 10}, {5, 11},
                        {10, 11}, {5, 12}, {6, 12}}),
              {1, 6, 9, 4}, {1, 6, 8, 3}, {1, 6, 8, 3});
  edge_family("fig-12",
              graph_of({{1, 2}, {2, 3}, {3, 4}, {4, 5}, {5, 6}, {1, 8}, {2, 8}, {2, 9}, {3, 9}, {6, 10}, {6, 13},
                        {10, 13}, {5, 12}, {6, 12}}),
              {1, 6, 9, 4}, {1, 6, 9, 4}, {1, 6, 9, 4});
  return out;
}

void add_table(CheckReport& r, const std::string& label, const BettiTable& t) {
  r.tables.emplace_back(label, t.totals);
}

Walk walk_arg(const SimpleGraph& g, const std::vector<VertexId>& vs, const char* what) {
  if (vs.size() < 2) throw std::invalid_argument(std::string(what) + " needs at least two vertices");
  try {
    return Walk(g, vs);
  } catch (const std::invalid_argument& e) {
    throw std::invalid_argument(std::string(what) + " " + vertices_string(vs) + " is not a walk: " + e.what());
  }
}

bool contiguous_in(const std::vector<VertexId>& p, const std::vector<VertexId>& q) {
  auto hit = [&](const std::vector<VertexId>& needle) {
    return std::search(q.begin(), q.end(), needle.begin(), needle.end()) != q.end();
  };
  std::vector<VertexId> rev(p.rbegin(), p.rend());
  return hit(p) || hit(rev);
}

// Even, path in the strict sense, and simple when asked.
std::string path_problem(const SimpleGraph& g, const Walk& p, bool need_simple) {
  if (p.length() == 0 || p.length() % 2 != 0) return "p is not of even positive length";
  if (!is_path(g, p)) return "p is not a path (repeated vertex or interior vertex of degree != 2)";
  if (need_simple && !is_simple_path(g, p)) return "p is not simple (endpoints share a neighbour off p)";
  return {};
}

Exponents embed(const Exponents& a, const SimpleGraph& from, const SimpleGraph& into) {
  Exponents out = Exponents::Zero(static_cast<Eigen::Index>(into.num_edges()));
  for (std::size_t j = 0; j < from.num_edges(); ++j) {
    const Edge& e = from.edges()[j];
    out[static_cast<Eigen::Index>(*into.edge_index(e.a, e.b))] = a[static_cast<Eigen::Index>(j)];
  }
  return out;
}

}  // namespace

const std::vector<Fixture>& fixtures() {
  static const std::vector<Fixture> all = build_fixtures();
  return all;
}

const Fixture& fixture(const std::string& id) {
  for (const Fixture& f : fixtures())
    if (f.id == id) return f;
  throw std::out_of_range("unknown example id '" + id + "'");
}

// -------------------------------------------------------------- reporting

std::string CheckReport::to_json_line() const {
  nlohmann::ordered_json j;
  j["check"] = id;
  j["instance"] = instance;
  if (seed) j["seed"] = *seed;
  j["hypotheses_met"] = hypotheses_met;
  if (!hypotheses_note.empty()) j["hypotheses_note"] = hypotheses_note;
  j["conclusion_holds"] = conclusion_holds;
  j["counterexample"] = is_counterexample();
  nlohmann::ordered_json tabs = nlohmann::ordered_json::object();
  for (const auto& [label, t] : tables) tabs[label] = t;
  j["tables"] = tabs;
  j["notes"] = notes;
  if (graph) j["graph"] = nlohmann::json::parse(graph_to_json(*graph));
  if (reproducer) j["reproducer"] = *reproducer;
  return j.dump();
}

std::string CheckReport::to_text() const {
  std::ostringstream os;
  os << id << ": " << instance << "\n";
  if (!hypotheses_met)
    os << "  hypotheses not met: " << hypotheses_note << "\n";
  else
    os << "  conclusion " << (conclusion_holds ? "holds" : "FAILS") << "\n";
  std::size_t width = 0;
  for (const auto& [label, t] : tables) width = std::max(width, label.size());
  for (const auto& [label, t] : tables)
    os << "  " << label << std::string(width - label.size(), ' ') << "  " << totals_string(t) << "\n";
  for (const auto& n : notes) os << "  " << n << "\n";
  if (reproducer) os << "  reproducer written to " << *reproducer << "\n";
  return os.str();
}

// -------------------------------------------------------------- examples

CheckReport reproduce(const std::string& example_id, const LabOptions& options) {
  const Fixture& fx = fixture(example_id);
  CheckReport r;
  r.id = fx.id;
  r.instance = fx.note;
  r.conclusion_holds = true;
  std::vector<BettiTable> computed;
  for (const ExpectedTable& e : fx.tables) {
    BettiTable t = table_of(e.graph, options);
    add_table(r, e.label, t);
    if (!same_totals(t.totals, e.totals)) {
      r.conclusion_holds = false;
      r.notes.push_back(e.label + ": expected " + totals_string(e.totals) + ", got " + t.totals_string());
    }
    if (e.cm && *e.cm != t.cm) {
      r.conclusion_holds = false;
      r.notes.push_back(e.label + ": expected " + (*e.cm ? "CM" : "not CM") + ", got " + (t.cm ? "CM" : "not CM"));
    }
    computed.push_back(std::move(t));
  }
  auto require = [&](bool ok, const std::string& what) {
    r.notes.push_back(what + (ok ? ": yes" : ": NO"));
    if (!ok) r.conclusion_holds = false;
  };
  const auto& tabs = fx.tables;
  if (fx.id == "ex-2.8") {
    require(isomorphic(tabs[1].graph, contract_edge(tabs[0].graph, Edge(10, 11)).graph), "G' isomorphic to G/{10,11}");
    require(!dominates(computed[0].totals, computed[1].totals) && !dominates(computed[1].totals, computed[0].totals),
            "totals incomparable");
  } else if (fx.id == "ex-2.9") {
    const SimpleGraph& g = tabs[0].graph;
    Walk p(g, {1, 9, 10}), q(g, {1, 9, 10, 4});
    require(path_problem(g, p, true).empty(), "p is an even simple path");
    require(is_path(g, q) && q.length() == p.length() + 1, "q is a path with |q| = |p| + 1");
    require(computed[0].codim == 2 && computed[1].codim == 2, "codim 2 on both sides");
  } else if (fx.id == "ex-2.10") {
    const SimpleGraph& g = tabs[0].graph;
    require(path_problem(g, Walk(g, {1, 9, 4}), true).empty(), "p' is an even simple path");
    const SimpleGraph& g29 = fixture("ex-2.9").tables[0].graph;
    require(isomorphic(g, contract_edge(g29, Edge(9, 10)).graph), "G' isomorphic to G/{9,10} of ex-2.9");
  } else if (fx.id == "ex-2.11") {
    // Reference edge list for the contraction, merged vertex named 1.
    SimpleGraph reference = graph_of({{1, 4}, {4, 5}, {5, 6}, {1, 6}, {1, 5}, {1, 7}, {1, 8}, {7, 9}, {8, 9}, {9, 10},
                                    {9, 11}, {10, 11}});
    require(isomorphic(tabs[1].graph, reference), "G/(1,2,3) matches the reference edge list");
    require(dominates(computed[1].totals, computed[0].totals) && !same_totals(computed[1].totals, computed[0].totals),
            "walk contraction increases the totals");
  } else {
    const SimpleGraph& g = tabs[0].graph;
    require(split_at_bridge(g, Edge(3, 4)).has_value(), "G is connected by e = {3,4}");
    const SimpleGraph& ge = tabs[1].graph;
    VertexId y = contract_edge(g, Edge(3, 4)).new_vertex;
    require(split_at_bridge(ge, Edge(y, 5)).has_value(), "G/e is connected by e' = {y,5}");
    require(computed[0].total(1) == computed[1].total(1), "beta_1(G) = beta_1(G/e)");
  }
  return r;
}

// -------------------------------------------------------------- checks

const std::vector<std::string>& check_ids() {
  static const std::vector<std::string> ids{"thm-2.5", "thm-2.7", "cor-2.6", "lemma-2.3",
                                            "thm-4.2", "prop-4.3", "question-4.5"};
  return ids;
}

CheckReport check(const std::string& check_id, const SimpleGraph& g, const SurgeryArgs& args,
                  const LabOptions& options) {
  if (std::find(check_ids().begin(), check_ids().end(), check_id) == check_ids().end())
    throw std::invalid_argument("unknown check '" + check_id + "'");
  if (!is_connected(g)) throw std::invalid_argument("checks need a connected graph");
  CheckReport r;
  r.id = check_id;
  r.graph = g;
  auto unmet = [&](const std::string& why) {
    r.hypotheses_met = false;
    r.hypotheses_note = why;
    return r;
  };

  const bool path_check = check_id == "thm-2.5" || check_id == "thm-2.7" || check_id == "cor-2.6" ||
                          check_id == "lemma-2.3";
  if (path_check) {
    Walk p = walk_arg(g, args.path, "p");
    r.instance = "p = " + vertices_string(args.path);
    if (auto why = path_problem(g, p, check_id != "thm-2.5"); !why.empty()) return unmet(why);
    if (check_id == "thm-2.7") {
      Walk q = walk_arg(g, args.q, "q");
      r.instance += ", q = " + vertices_string(args.q);
      if (!is_path(g, q)) return unmet("q is not a path");
      if (!contiguous_in(args.path, args.q)) return unmet("p is not contained in q");
      if (q.length() < p.length() + 2) return unmet("|q| < |p| + 2");
    }
    ContractionResult c = contract_path(g, p);
    if (check_id == "lemma-2.3") {
      const std::size_t a = codim(g), b = codim(c.graph);
      const bool parity = is_bipartite(g) == is_bipartite(c.graph);
      r.conclusion_holds = a == b && parity;
      r.notes.push_back("codim " + std::to_string(a) + " vs " + std::to_string(b) + ", bipartite " +
                        (is_bipartite(g) ? "yes" : "no") + " vs " + (is_bipartite(c.graph) ? "yes" : "no"));
      // p plus the edge {x, x'} is an odd cycle, and the contraction deletes it.
      if (g.has_edge(p.front(), p.back())) r.notes.push_back("endpoints of p are adjacent");
      return r;
    }
    BettiTable tg = table_of(g, options), tc = table_of(c.graph, options);
    add_table(r, "G", tg);
    add_table(r, "G/p", tc);
    if (check_id == "thm-2.5") {
      r.conclusion_holds = dominates(tg.totals, tc.totals);
      r.notes.push_back(deltas(tg.totals, tc.totals));
    } else if (check_id == "thm-2.7") {
      const bool eq = same_totals(tg.totals, tc.totals);
      r.conclusion_holds = eq && tg.cm == tc.cm && tg.gorenstein == tc.gorenstein;
      r.notes.push_back(std::string("CM ") + (tg.cm ? "yes" : "no") + " vs " + (tc.cm ? "yes" : "no") +
                        ", Gorenstein " + (tg.gorenstein ? "yes" : "no") + " vs " + (tc.gorenstein ? "yes" : "no"));
    } else {  // cor-2.6
      r.conclusion_holds = tc.cm || !tg.cm;
      r.notes.push_back(std::string("CM(G) ") + (tg.cm ? "yes" : "no") + ", CM(G/p) " + (tc.cm ? "yes" : "no"));
    }
    return r;
  }

  // Bridge checks.
  if (!args.edge) throw std::invalid_argument(check_id + " needs --edge");
  const Edge e = *args.edge;
  r.instance = "e = {" + std::to_string(e.a) + "," + std::to_string(e.b) + "}";
  if (!g.has_edge(e.a, e.b)) throw std::invalid_argument("e is not an edge of the graph");
  auto sides = split_at_bridge(g, e);
  if (!sides) return unmet("G is not connected by e");
  const auto& [g1, g2] = *sides;
  const bool bip1 = is_bipartite(g1), bip2 = is_bipartite(g2);
  if (check_id == "prop-4.3" && !bip1 && !bip2) return unmet("neither side is bipartite");

  SimpleGraph ge = contract_edge(g, e).graph;
  BettiTable tg = table_of(g, options), te = table_of(ge, options);
  add_table(r, "G", tg);
  add_table(r, "G/e", te);

  if (check_id == "thm-4.2") {
    const std::size_t mingens = minimal_generators(toric_ideal(g)).size();
    r.conclusion_holds = tg.total(1) == te.total(1) && tg.total(1) == mingens;
    r.notes.push_back("beta_1 " + std::to_string(tg.total(1)) + " vs " + std::to_string(te.total(1)) +
                      ", minimal generators " + std::to_string(mingens));
  } else if (check_id == "prop-4.3") {
    BettiTable t1 = table_of(g1, options), t2 = table_of(g2, options);
    add_table(r, "G1", t1);
    add_table(r, "G2", t2);
    BinomialIdeal whole = toric_ideal(g);
    TermOrder ord = *whole.gb_order;
    BinomialIdeal sum;
    sum.num_vars = g.num_edges();
    for (const SimpleGraph* side : {&g1, &g2})
      for (const Binomial& b : toric_ideal(*side).generators)
        if (auto f = Binomial::make(embed(b.lead, *side, g), embed(b.trail, *side, g), ord))
          sum.generators.push_back(*f);
    BinomialIdeal sum_gb = buchberger(sum, ord);
    const bool ideals = generators_reduce_to_zero(whole, sum_gb) && generators_reduce_to_zero(sum, whole);
    const auto conv = convolve(t1.totals, t2.totals);
    r.tables.emplace_back("G1 x G2", conv);
    r.conclusion_holds = ideals && same_totals(tg.totals, conv) && same_totals(tg.totals, te.totals);
    r.notes.push_back(std::string("I_G = I_G1 + I_G2: ") + (ideals ? "yes" : "NO"));
  } else {  // question-4.5
    r.conclusion_holds = dominates(tg.totals, te.totals);
    r.notes.push_back(deltas(tg.totals, te.totals));
  }
  return r;
}

std::vector<std::size_t> convolve(const std::vector<std::size_t>& a, const std::vector<std::size_t>& b) {
  if (a.empty() || b.empty()) return {};
  std::vector<std::size_t> out(a.size() + b.size() - 1, 0);
  for (std::size_t i = 0; i < a.size(); ++i)
    for (std::size_t k = 0; k < b.size(); ++k) out[i + k] += a[i] * b[k];
  while (out.size() > 1 && out.back() == 0) out.pop_back();
  return out;
}

// -------------------------------------------------------------- triangles

ConnectedByEdge chained_triangles(int n, int m) {
  SimpleGraph tn = triangle_sequence(n);
  SimpleGraph tm = shift_vertices(triangle_sequence(m), 2 * n + 1);
  return connect_by_edge(tn, 2 * n + 1, tm, 2 * n + 2);
}

TermOrder triangle_listing_lex(const SimpleGraph& tn, int n) {
  std::vector<std::size_t> priority;
  for (int i = 1; i <= n; ++i)
    for (auto [a, b] : {std::pair{2 * i - 1, 2 * i}, std::pair{2 * i, 2 * i + 1}, std::pair{2 * i + 1, 2 * i - 1}})
      priority.push_back(*tn.edge_index(a, b));
  return TermOrder(TermOrder::Kind::lex, std::move(priority));
}

CheckReport triangle_study(int n, std::optional<int> m, const LabOptions& options) {
  CheckReport r;
  r.id = "remark-4.6c";
  if (!m) {
    r.id = "remark-4.6a";
    r.instance = "T_" + std::to_string(n);
    SimpleGraph t = triangle_sequence(n);
    BettiTable bt = table_of(t, options);
    add_table(r, r.instance, bt);
    r.conclusion_holds = bt.cm && bt.codim == static_cast<std::size_t>(n - 1);
    r.notes.push_back("codim " + std::to_string(bt.codim) + ", Krull dimension " + std::to_string(bt.krull_dim) +
                      "; n-1 = " + std::to_string(n - 1) +
                      (bt.krull_dim == static_cast<std::size_t>(n - 1) ? " is the Krull dimension" : " is the codimension, not the Krull dimension"));
    return r;
  }
  r.instance = "T_" + std::to_string(n) + " -e- T_" + std::to_string(*m);
  ConnectedByEdge c = chained_triangles(n, *m);
  r.graph = c.graph;
  BettiTable tg = table_of(c.graph, options);
  BettiTable te = table_of(contract_edge(c.graph, c.bridge).graph, options);
  SimpleGraph t = triangle_sequence(n + *m);
  BettiTable tt = table_of(t, options);
  BinomialIdeal lex_gb = toric_ideal(t, triangle_listing_lex(t, n + *m));
  std::vector<std::size_t> tin = monomial_betti_totals(initial_ideal(lex_gb), options.field);
  add_table(r, "G", tg);
  add_table(r, "G/e", te);
  add_table(r, "T_" + std::to_string(n + *m), tt);
  r.tables.emplace_back("in_lex(T_" + std::to_string(n + *m) + ")", tin);
  r.conclusion_holds = same_totals(tg.totals, te.totals) && same_totals(tg.totals, tt.totals) &&
                       same_totals(tg.totals, tin) && tg.cm;
  r.notes.push_back(std::string("G is ") + (tg.cm ? "CM" : "not CM"));
  return r;
}

// -------------------------------------------------------------- random families

FamilySpec FamilySpec::from_json(const std::string& text) {
  nlohmann::json j = nlohmann::json::parse(text);
  FamilySpec s;
  s.family = j.value("family", s.family);
  s.min_vertices = j.value("min_vertices", s.min_vertices);
  s.max_vertices = j.value("max_vertices", s.max_vertices);
  s.max_edges = j.value("max_edges", s.max_edges);
  s.edge_prob = j.value("edge_prob", s.edge_prob);
  s.bipartite_side = j.value("bipartite_side", s.bipartite_side);
  s.max_triangles = j.value("max_triangles", s.max_triangles);
  s.check = j.value("check", s.check);
  s.out_dir = j.value("out_dir", s.out_dir);
  if (s.min_vertices < 2 || s.max_vertices < s.min_vertices) throw std::invalid_argument("bad vertex range");
  return s;
}

namespace {

int uniform_int(Rng& rng, int lo, int hi) { return std::uniform_int_distribution<int>(lo, hi)(rng); }

constexpr int kMaxAttempts = 100000;

}  // namespace

SimpleGraph random_connected_graph(Rng& rng, int min_vertices, int max_vertices, double p, int max_edges) {
  std::bernoulli_distribution coin(p);
  for (int attempt = 0; attempt < kMaxAttempts; ++attempt) {
    const int r = uniform_int(rng, min_vertices, max_vertices);
    if (r - 1 > max_edges) continue;
    std::vector<Edge> es;
    for (int a = 1; a <= r; ++a)
      for (int b = a + 1; b <= r; ++b)
        if (coin(rng)) es.emplace_back(a, b);
    if (static_cast<int>(es.size()) > max_edges) continue;
    std::vector<VertexId> vs(static_cast<std::size_t>(r));
    std::iota(vs.begin(), vs.end(), 1);
    SimpleGraph g(std::move(vs), std::move(es));
    if (is_connected(g)) return g;
  }
  throw std::runtime_error("could not sample a connected graph with these parameters");
}

SimpleGraph random_connected_bipartite_graph(Rng& rng, int min_vertices, int max_vertices, double p, int max_edges) {
  std::bernoulli_distribution coin(p);
  for (int attempt = 0; attempt < kMaxAttempts; ++attempt) {
    const int r = uniform_int(rng, std::max(2, min_vertices), max_vertices);
    const int left = uniform_int(rng, 1, r - 1);
    std::vector<Edge> es;
    for (int a = 1; a <= left; ++a)
      for (int b = left + 1; b <= r; ++b)
        if (coin(rng)) es.emplace_back(a, b);
    if (static_cast<int>(es.size()) > max_edges) continue;
    std::vector<VertexId> vs(static_cast<std::size_t>(r));
    std::iota(vs.begin(), vs.end(), 1);
    SimpleGraph g(std::move(vs), std::move(es));
    if (is_connected(g)) return g;
  }
  throw std::runtime_error("could not sample a connected bipartite graph with these parameters");
}

std::vector<Walk> even_paths(const SimpleGraph& g, bool simple_only) {
  std::vector<Walk> out;
  std::vector<VertexId> seq;
  auto extend = [&](auto&& self) -> void {
    const VertexId u = seq.back();
    if (seq.size() >= 3 && (seq.size() - 1) % 2 == 0 && seq.front() < u) {
      Walk w(g, seq);
      if (is_path(g, w) && (!simple_only || is_simple_path(g, w))) out.push_back(std::move(w));
    }
    // Only a degree-2 vertex may become interior.
    if (seq.size() >= 2 && degree(g, u) != 2) return;
    for (VertexId v : neighbors(g, u)) {
      if (std::find(seq.begin(), seq.end(), v) != seq.end()) continue;
      seq.push_back(v);
      self(self);
      seq.pop_back();
    }
  };
  for (VertexId x : g.vertices()) {
    seq = {x};
    extend(extend);
  }
  return out;
}

PathInstance random_even_path_instance(Rng& rng, const FamilySpec& spec, bool simple_only) {
  for (int attempt = 0; attempt < kMaxAttempts; ++attempt) {
    SimpleGraph g = random_connected_graph(rng, spec.min_vertices, spec.max_vertices, spec.edge_prob, spec.max_edges);
    if (codim(g) == 0) continue;  // I_G = 0 says nothing
    auto paths = even_paths(g, simple_only);
    if (paths.empty()) continue;
    const Walk& p = paths[static_cast<std::size_t>(uniform_int(rng, 0, static_cast<int>(paths.size()) - 1))];
    return {g, {p.vertices(), {}, std::nullopt}};
  }
  throw std::runtime_error("no graph with an even path found");
}

PathInstance random_nested_path_instance(Rng& rng, const FamilySpec& spec) {
  for (int attempt = 0; attempt < kMaxAttempts; ++attempt) {
    const int len = uniform_int(rng, 4, 6);
    const int base_max_edges = spec.max_edges - len + 1;
    const int base_max_vertices = std::max(3, spec.max_vertices - (len - 1));
    if (base_max_edges < 2) throw std::invalid_argument("max_edges too small for nested paths");
    SimpleGraph h = random_connected_graph(rng, 3, base_max_vertices, std::max(spec.edge_prob, 0.5), base_max_edges);
    if (h.num_edges() == 0) continue;
    const Edge cut = h.edges()[static_cast<std::size_t>(uniform_int(rng, 0, static_cast<int>(h.num_edges()) - 1))];
    // Replace `cut` by the path cut.a - n1 - ... - n_{len-1} - cut.b.
    std::vector<VertexId> vs = h.vertices();
    std::vector<Edge> es;
    for (const Edge& e : h.edges())
      if (e != cut) es.push_back(e);
    std::vector<VertexId> q{cut.a};
    VertexId next = h.max_vertex() + 1;
    for (int i = 1; i < len; ++i) {
      vs.push_back(next);
      es.emplace_back(q.back(), next);
      q.push_back(next++);
    }
    es.emplace_back(q.back(), cut.b);
    q.push_back(cut.b);
    SimpleGraph g(std::move(vs), std::move(es));
    if (!is_connected(g) || codim(g) == 0) continue;
    const int plen = len >= 6 && uniform_int(rng, 0, 1) ? 4 : 2;
    const int start = uniform_int(rng, 0, len - plen);
    std::vector<VertexId> p(q.begin() + start, q.begin() + start + plen + 1);
    Walk pw(g, p);
    if (!is_simple_path(g, pw)) continue;
    if (uniform_int(rng, 0, 1)) std::reverse(p.begin(), p.end());
    return {g, {p, q, std::nullopt}};
  }
  throw std::runtime_error("no nested path instance found");
}

PathInstance random_bridge_instance(Rng& rng, const FamilySpec& spec) {
  const int side_max_vertices = std::max(4, (spec.max_vertices + 1) / 2);
  for (int attempt = 0; attempt < kMaxAttempts; ++attempt) {
    // Split the edge budget unevenly so one side can carry several cycles.
    const int e1 = uniform_int(rng, 3, std::max(3, spec.max_edges - 4));
    const int e2 = std::max(2, spec.max_edges - 1 - e1);
    SimpleGraph g1 = spec.bipartite_side
                         ? random_connected_bipartite_graph(rng, 2, side_max_vertices, 0.6, e1)
                         : random_connected_graph(rng, 3, side_max_vertices, 0.6, e1);
    SimpleGraph g2 =
        shift_vertices(random_connected_graph(rng, 3, side_max_vertices, 0.6, e2), g1.max_vertex());
    const VertexId x = g1.vertices()[static_cast<std::size_t>(uniform_int(rng, 0, static_cast<int>(g1.num_vertices()) - 1))];
    const VertexId y = g2.vertices()[static_cast<std::size_t>(uniform_int(rng, 0, static_cast<int>(g2.num_vertices()) - 1))];
    ConnectedByEdge c = connect_by_edge(g1, x, g2, y);
    if (codim(c.graph) == 0) continue;
    return {c.graph, {{}, {}, c.bridge}};
  }
  throw std::runtime_error("no bridge instance with a nonzero toric ideal found");
}

std::vector<CheckReport> random_search(const FamilySpec& spec, std::uint64_t seed, int budget,
                                       const LabOptions& options) {
  std::vector<CheckReport> out;
  if (spec.check == "remark-4.6c") {
    // Deterministic sweep; the seed is recorded but not needed.
    for (int total = 2; total <= spec.max_triangles && static_cast<int>(out.size()) < budget; ++total)
      for (int n = 1; n < total && static_cast<int>(out.size()) < budget; ++n) {
        out.push_back(triangle_study(n, total - n, options));
        out.back().seed = seed;
      }
    return out;
  }
  if (std::find(check_ids().begin(), check_ids().end(), spec.check) == check_ids().end())
    throw std::invalid_argument("unknown check '" + spec.check + "'");
  const bool bridge = spec.check == "thm-4.2" || spec.check == "prop-4.3" || spec.check == "question-4.5";
  for (int k = 0; k < budget; ++k) {
    std::seed_seq sq{seed, static_cast<std::uint64_t>(k)};
    Rng rng(sq);
    PathInstance inst;
    if (bridge) {
      FamilySpec s = spec;
      s.bipartite_side = spec.bipartite_side || spec.check == "prop-4.3";
      inst = random_bridge_instance(rng, s);
    } else if (spec.check == "thm-2.7") {
      inst = random_nested_path_instance(rng, spec);
    } else {
      inst = random_even_path_instance(rng, spec, spec.check != "thm-2.5");
    }
    CheckReport r = check(spec.check, inst.graph, inst.args, options);
    r.seed = seed;
    r.instance = "#" + std::to_string(k) + " " + r.instance;
    if (r.is_counterexample() && !spec.out_dir.empty()) {
      std::filesystem::create_directories(spec.out_dir);
      auto path = std::filesystem::path(spec.out_dir) /
                  (spec.check + "-seed" + std::to_string(seed) + "-" + std::to_string(k) + ".json");
      std::ofstream(path) << r.to_json_line() << "\n";
      r.reproducer = path.string();
    }
    out.push_back(std::move(r));
  }
  return out;
}

}  // namespace edgering
