// Reproduction harness: worked-example fixtures, statement checks on single
// graphs, seeded random families and the randomized search driver.
#ifndef EDGERING_LAB_HPP
#define EDGERING_LAB_HPP

#include <cstdint>
#include <optional>
#include <random>
#include <string>
#include <utility>
#include <vector>

#include "edgering/betti.hpp"
#include "edgering/graph.hpp"

namespace edgering {

struct ExpectedTable {
  std::string label;  // "G", "G/p", ...
  SimpleGraph graph;
  std::vector<std::size_t> totals;
  std::optional<bool> cm;
};

struct Fixture {
  std::string id;
  std::string note;  // where the edge list comes from
  std::vector<ExpectedTable> tables;
};

const std::vector<Fixture>& fixtures();
/// Throws std::out_of_range for an unknown id.
const Fixture& fixture(const std::string& id);

struct CheckReport {
  std::string id;
  std::string instance;
  bool hypotheses_met = true;
  std::string hypotheses_note;
  bool conclusion_holds = false;
  std::vector<std::string> notes;
  std::vector<std::pair<std::string, std::vector<std::size_t>>> tables;
  std::optional<std::uint64_t> seed;
  std::optional<SimpleGraph> graph;
  std::optional<std::string> reproducer;  // file written for a counterexample

  bool is_counterexample() const { return hypotheses_met && !conclusion_holds; }
  bool passed() const { return hypotheses_met && conclusion_holds; }
  std::string to_json_line() const;
  std::string to_text() const;
};

struct LabOptions {
  FieldSpec field;
  bool shortcuts = true;
};

/// Computes every table of a fixture and compares totals (and CM flags)
/// exactly, plus the structural facts the example states.
CheckReport reproduce(const std::string& example_id, const LabOptions& options = {});

struct SurgeryArgs {
  std::vector<VertexId> path;  // p
  std::vector<VertexId> q;
  std::optional<Edge> edge;
};

/// Check ids: thm-2.5, thm-2.7, cor-2.6, lemma-2.3, thm-4.2, prop-4.3,
/// question-4.5. Malformed arguments (a vertex sequence that is not a walk,
/// an unknown id) throw std::invalid_argument; unmet hypotheses are
/// reported, not thrown.
CheckReport check(const std::string& check_id, const SimpleGraph& g, const SurgeryArgs& args,
                  const LabOptions& options = {});
const std::vector<std::string>& check_ids();

/// Triangle sequences. With m unset: K[T_n] is CM with codim n - 1 (the
/// Krull dimension is reported next to it). With m set: totals of
/// T_n -e- T_m, its contraction by e, T_{n+m} and the lex initial ideal of
/// T_{n+m} agree, and T_n -e- T_m is CM.
CheckReport triangle_study(int n, std::optional<int> m = std::nullopt, const LabOptions& options = {});
/// T_n -e- T_m with e = {x_{2n+1}, x_1 of the shifted T_m}.
ConnectedByEdge chained_triangles(int n, int m);
/// Lex order e_1 > e_2 > ... in the listing order of triangle_sequence.
TermOrder triangle_listing_lex(const SimpleGraph& tn, int n);

// ---------------------------------------------------------- random families

using Rng = std::mt19937_64;

struct FamilySpec {
  std::string family = "er";  // er | subdivided | bridge | triangles
  int min_vertices = 6;
  int max_vertices = 10;
  int max_edges = 12;
  double edge_prob = 0.35;
  bool bipartite_side = false;  // bridge family: force one bipartite side
  int max_triangles = 4;        // triangles family: n + m bound
  std::string check = "thm-2.5";
  std::string out_dir;          // counterexample reproducers go here if set

  static FamilySpec from_json(const std::string& text);
};

/// Erdős–Rényi graph on vertices 1..r conditioned on connectivity and on
/// having at most `max_edges` edges.
SimpleGraph random_connected_graph(Rng& rng, int min_vertices, int max_vertices, double p, int max_edges);
SimpleGraph random_connected_bipartite_graph(Rng& rng, int min_vertices, int max_vertices, double p, int max_edges);
/// Even paths in the strict sense (distinct vertices, interior degree 2).
std::vector<Walk> even_paths(const SimpleGraph& g, bool simple_only);

struct PathInstance {
  SimpleGraph graph;
  SurgeryArgs args;
};

/// (G, p) with p an even path, simple when asked. All generators reject
/// graphs whose toric ideal is zero.
PathInstance random_even_path_instance(Rng& rng, const FamilySpec& spec, bool simple_only);
/// (G, p, q) with p an even simple path inside the path q, |q| >= |p| + 2.
PathInstance random_nested_path_instance(Rng& rng, const FamilySpec& spec);
/// G1 -e- G2, optionally with G1 bipartite.
PathInstance random_bridge_instance(Rng& rng, const FamilySpec& spec);

/// Runs `budget` seeded instances of `spec.check`; a counterexample is
/// written to spec.out_dir when that is set.
std::vector<CheckReport> random_search(const FamilySpec& spec, std::uint64_t seed, int budget,
                                       const LabOptions& options = {});

/// beta_i(A ⊗ B) from the totals of A and B.
std::vector<std::size_t> convolve(const std::vector<std::size_t>& a, const std::vector<std::size_t>& b);

}  // namespace edgering

#endif  // EDGERING_LAB_HPP
