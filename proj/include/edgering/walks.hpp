// Primitive even closed walks of a graph and their binomials f_w.
#ifndef EDGERING_WALKS_HPP
#define EDGERING_WALKS_HPP

#include <string>
#include <vector>

#include "edgering/binomial.hpp"
#include "edgering/graph.hpp"

namespace edgering {

/// An even closed walk (x_0, ..., x_{2k} = x_0). The default-constructed
/// value is the empty walk, which stands for a degenerate contraction image.
class ClosedEvenWalk {
 public:
  ClosedEvenWalk() = default;
  /// `vertices` must be closed, of even length and use no edge more than
  /// twice; throws std::invalid_argument otherwise.
  ClosedEvenWalk(const SimpleGraph& g, std::vector<VertexId> vertices);

  const std::vector<VertexId>& vertices() const { return vertices_; }
  const std::vector<std::size_t>& edge_ids() const { return edge_ids_; }
  std::size_t length() const { return edge_ids_.size(); }
  bool empty() const { return edge_ids_.empty(); }

  /// Lexicographically least edge sequence over all rotations and reflections.
  std::vector<std::size_t> canonical_edges() const;

 private:
  std::vector<VertexId> vertices_;
  std::vector<std::size_t> edge_ids_;
};

/// f_w = e_{w+} - e_{w-}: odd positions against even positions.
struct WalkBinomial {
  Exponents plus;
  Exponents minus;

  bool is_zero() const { return same_exponents(plus, minus); }
  std::string to_string() const { return monomial_to_string(plus) + " - " + monomial_to_string(minus); }
};

/// Builds f_w and checks M_G (plus - minus) = 0; throws std::logic_error on
/// a breach.
WalkBinomial walk_binomial(const SimpleGraph& g, const ClosedEvenWalk& w);

/// No other walk v in `all_walks` has e_{v+} | e_{w+} and e_{v-} | e_{w-}
/// (in either orientation of v). Walks carrying the same binomial as w are
/// not counted as "other".
bool is_primitive(const SimpleGraph& g, const ClosedEvenWalk& w, const std::vector<ClosedEvenWalk>& all_walks);

/// Every primitive even closed walk, one per binomial up to sign, sorted by
/// length then canonical edge sequence.
std::vector<ClosedEvenWalk> enumerate_primitive_walks(const SimpleGraph& g);

/// Closed even walks that survive the search pruning (no edge used more than
/// twice, no vertex revisited after an even number of steps), deduplicated
/// by rotation and reflection. Superset of the primitive walks.
std::vector<ClosedEvenWalk> enumerate_candidate_walks(const SimpleGraph& g);

/// w/p in G/p for an even path p. Returns the empty walk when the image
/// degenerates to length 0 or 2; throws std::domain_error if w meets p in a
/// way that is not a union of full traversals of p.
ClosedEvenWalk contract_walk_image(const SimpleGraph& g, const ClosedEvenWalk& w, const Walk& p,
                                   const ContractionResult& c);

/// An even closed walk w of G with w/p = v, for v an even closed walk of G/p.
ClosedEvenWalk lift_walk(const SimpleGraph& g, const ClosedEvenWalk& v, const Walk& p, const ContractionResult& c);

/// Walk binomials of the primitive walks as a binomial ideal (degrevlex).
BinomialIdeal walk_ideal(const SimpleGraph& g);

}  // namespace edgering

#endif  // EDGERING_WALKS_HPP
