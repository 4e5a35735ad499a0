// Multigraded, graded and total Betti numbers of the edge ring K[G].
//
// The main route computes beta_{i+1,s} = dim H̃_i(Δ_s) where
//   Δ_s = { F ⊆ E : s - φ(e_F) ∈ Im φ }
// is the fiber complex of the vertex multidegree s. Candidate multidegrees
// come from the lcm lattice of a monomial initial ideal (Betti numbers can
// only grow under Gröbner degeneration). betti_via_koszul is an independent
// check that works from a Gröbner basis and standard monomials instead of
// semigroup membership.
#ifndef EDGERING_BETTI_HPP
#define EDGERING_BETTI_HPP

#include <cstddef>
#include <functional>
#include <map>
#include <optional>
#include <string>
#include <unordered_map>
#include <vector>

#include <Eigen/Dense>

#include "edgering/binomial.hpp"
#include "edgering/field.hpp"
#include "edgering/graph.hpp"
#include "edgering/homology.hpp"

namespace edgering {

/// A vector over the vertices (canonical vertex order).
using MultiDegree = Eigen::VectorXi;

struct MultiDegreeLess {
  bool operator()(const MultiDegree& a, const MultiDegree& b) const;
};
struct VectorHash {
  std::size_t operator()(const std::vector<int>& v) const;
};

/// φ_G applied to an edge exponent vector.
MultiDegree vertex_degree(const SimpleGraph& g, const Exponents& edge_exponents);

/// Memoised decision procedure for t ∈ Im φ_G = N·{columns of M_G}.
class SemigroupOracle {
 public:
  explicit SemigroupOracle(const SimpleGraph& g);
  bool contains(const std::vector<int>& t);
  bool contains(const MultiDegree& t);
  void clear() { memo_.clear(); }

 private:
  bool search(std::vector<int>& t);
  std::vector<std::vector<std::size_t>> nbr_;  // vertex index -> neighbour indices
  std::unordered_map<std::vector<int>, bool, VectorHash> memo_;
};

bool semigroup_member(const SimpleGraph& g, const MultiDegree& t);

using MembershipTest = std::function<bool(const std::vector<int>&)>;

struct FiberComplex {
  MultiDegree degree;
  SimplicialComplex complex;
  std::vector<Face> faces;  // every face, downward closed
};

FiberComplex fiber_complex(const SimpleGraph& g, const MultiDegree& s);
FiberComplex fiber_complex(const SimpleGraph& g, const MultiDegree& s, const MembershipTest& member);

struct ShortcutWitness {
  enum class Rule { simple_two_path, three_path } rule;
  std::vector<VertexId> path;
};

/// Acyclicity of Δ_s read off from a degree-2 pattern: a simple path
/// (x1,x2,x3) with w1 < w2, or a path (x1,x2,x3,x4) with w2 != w3.
std::optional<ShortcutWitness> acyclicity_shortcut(const SimpleGraph& g, const MultiDegree& s);

struct MonomialBettiEntry {
  int i;        // homological degree of S/M
  Exponents b;  // fine multidegree
  std::size_t value;
};

/// Nonzero Betti numbers beta_{i,b}(S/M), i >= 1, of the quotient by the
/// monomial ideal with the given minimal generators, via the upper Koszul
/// complexes K^b = { F : x^{b-F} ∈ M } over the lcm lattice.
std::vector<MonomialBettiEntry> monomial_betti(const std::vector<Exponents>& gens, const FieldSpec& field = {});
/// Totals beta_i(S/M) including beta_0 = 1.
std::vector<std::size_t> monomial_betti_totals(const std::vector<Exponents>& gens, const FieldSpec& field = {});

/// Vertex multidegrees φ(b) of the nonzero Betti numbers of K[E]/in(I_G).
std::vector<MultiDegree> candidate_degrees(const SimpleGraph& g, const TermOrder& ord);
std::vector<MultiDegree> candidate_degrees(const SimpleGraph& g);

struct BettiOptions {
  enum class Mode { guided, exhaustive };
  FieldSpec field;
  Mode mode = Mode::guided;
  int max_degree = 0;      // exhaustive mode: all s with |s| <= 2 * max_degree
  bool shortcuts = true;   // use acyclicity_shortcut before building Δ_s
};

struct MultigradedEntry {
  int i;
  MultiDegree s;
  std::size_t beta;
};

struct BettiTable {
  std::vector<MultigradedEntry> multigraded;   // sorted by (i, |s|, s)
  std::map<std::pair<int, int>, std::size_t> graded;  // (i, j) with j = |s|/2
  std::vector<std::size_t> totals;
  std::size_t num_edges = 0;
  std::size_t codim = 0;
  std::size_t pd = 0;
  std::size_t depth = 0;
  std::size_t krull_dim = 0;
  bool cm = false;
  bool gorenstein = false;
  FieldSpec field;
  std::size_t degrees_examined = 0;
  std::vector<std::string> warnings;

  std::size_t total(int i) const {
    return i >= 0 && static_cast<std::size_t>(i) < totals.size() ? totals[static_cast<std::size_t>(i)] : 0;
  }
  std::string totals_string() const;
  std::string to_json() const;
  std::string to_text() const;
};

/// Throws std::invalid_argument on disconnected graphs.
BettiTable betti_table(const SimpleGraph& g, const BettiOptions& options = {});

/// Every s ∈ Im φ_G with 0 < |s| <= 2 * max_degree.
std::vector<MultiDegree> semigroup_degrees_up_to(const SimpleGraph& g, int max_degree);

/// beta_{i,s}(K[G]) for i = 0, 1, ... from the Koszul complex of K[G] in
/// multidegree s, with K[G]_t spanned by the standard monomial of degree t.
std::vector<std::size_t> betti_via_koszul(const SimpleGraph& g, const MultiDegree& s, const BinomialIdeal& gb,
                                          const FieldSpec& field = {});
std::vector<std::size_t> betti_via_koszul(const SimpleGraph& g, const MultiDegree& s, const FieldSpec& field = {});

std::string to_string(const MultiDegree& s);

}  // namespace edgering

#endif  // EDGERING_BETTI_HPP
