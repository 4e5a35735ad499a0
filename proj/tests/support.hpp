// Helpers shared by the unit tests and the acceptance runner.
#ifndef EDGERING_TESTS_SUPPORT_HPP
#define EDGERING_TESTS_SUPPORT_HPP

#include <algorithm>
#include <random>
#include <vector>

#include "edgering/graph.hpp"
#include "edgering/homology.hpp"

namespace edgering::testing {

inline SimpleGraph cycle(int k) {
  std::vector<std::pair<VertexId, VertexId>> es;
  for (int i = 1; i <= k; ++i) es.emplace_back(i, i % k + 1);
  return SimpleGraph::from_edges(es);
}

inline SimpleGraph complete(int k) {
  std::vector<std::pair<VertexId, VertexId>> es;
  for (int a = 1; a <= k; ++a)
    for (int b = a + 1; b <= k; ++b) es.emplace_back(a, b);
  return SimpleGraph::from_edges(es);
}

inline Face random_subset(std::mt19937_64& rng, Face pool, int max_size) {
  std::vector<int> labels = labels_of(pool);
  std::shuffle(labels.begin(), labels.end(), rng);
  const int k = std::uniform_int_distribution<int>(0, std::min<int>(max_size, static_cast<int>(labels.size())))(rng);
  Face f = 0;
  for (int i = 0; i < k; ++i) f |= Face{1} << labels[static_cast<std::size_t>(i)];
  return f;
}

inline Face nonempty_subset(std::mt19937_64& rng, Face pool, int max_size) {
  for (;;)
    if (Face f = random_subset(rng, pool, max_size)) return f;
}

/// A random non-void complex with 1..max_facets facets drawn from `pool`.
inline SimplicialComplex random_complex(std::mt19937_64& rng, Face pool, int max_facets, int max_size) {
  const int k = std::uniform_int_distribution<int>(1, max_facets)(rng);
  std::vector<Face> fs;
  for (int i = 0; i < k; ++i) fs.push_back(random_subset(rng, pool, max_size));
  return SimplicialComplex::from_facets(fs);
}

inline Face range_mask(int lo, int hi) {
  Face f = 0;
  for (int i = lo; i < hi; ++i) f |= Face{1} << i;
  return f;
}

/// dim H̃_i agree for every i > 0.
inline bool same_positive_homology(const SimplicialComplex& a, const SimplicialComplex& b, const FieldSpec& f = {}) {
  HomologyProfile ha = reduced_homology(a, f), hb = reduced_homology(b, f);
  const int top = static_cast<int>(std::max(ha.dims.size(), hb.dims.size()));
  for (int i = 1; i < top; ++i)
    if (ha.at(i) != hb.at(i)) return false;
  return true;
}

// Random instances of the union-of-cones identities. Complexes live on
// labels 0..7; apex sets are drawn from 8..19 unless stated otherwise.
constexpr Face kBase = (Face{1} << 8) - 1;

/// A * Δ is acyclic.
inline bool random_cone_is_acyclic(std::mt19937_64& rng) {
  SimplicialComplex d = random_complex(rng, kBase, 5, 5);
  Face apex = nonempty_subset(rng, range_mask(0, 12), 3);
  return reduced_homology(cone(apex, d)).is_acyclic();
}

/// For acyclic Δ1, Δ2: H̃_i(Δ1 ∪ Δ2) = H̃_{i-1}(Δ1 ∩ Δ2) for i > 0.
inline bool random_union_shift(std::mt19937_64& rng) {
  SimplicialComplex d1 = cone(nonempty_subset(rng, range_mask(0, 12), 2), random_complex(rng, kBase, 5, 5));
  SimplicialComplex d2 = cone(nonempty_subset(rng, range_mask(0, 12), 2), random_complex(rng, kBase, 5, 5));
  HomologyProfile u = reduced_homology(union_of(d1, d2));
  HomologyProfile x = reduced_homology(intersection_of(d1, d2));
  const int top = static_cast<int>(std::max(u.dims.size(), x.dims.size())) + 1;
  for (int i = 1; i < top; ++i)
    if (u.at(i) != x.at(i - 1)) return false;
  return true;
}

/// (A*Δ1) ∪ (B*Δ2) and (A'*Δ1) ∪ (B'*Δ2) with every apex set off Δ1 ∪ Δ2.
inline bool random_apex_swap(std::mt19937_64& rng) {
  SimplicialComplex d1 = random_complex(rng, kBase, 4, 4), d2 = random_complex(rng, kBase, 4, 4);
  Face a = nonempty_subset(rng, range_mask(8, 14), 3);
  Face b = nonempty_subset(rng, range_mask(8, 14) & ~a, 3);
  Face a2 = nonempty_subset(rng, range_mask(14, 20), 3);
  Face b2 = nonempty_subset(rng, range_mask(8, 20) & ~a2, 3);
  return same_positive_homology(union_of(cone(a, d1), cone(b, d2)), union_of(cone(a2, d1), cone(b2, d2)));
}

/// (A*Δ1) ∪ (B*Δ2) and (A'*Δ1) ∪ (B*Δ2) with A, A' off B and off Δ1 ∪ Δ2;
/// B itself may meet the vertices of Δ1 ∪ Δ2.
inline bool random_single_apex_swap(std::mt19937_64& rng) {
  SimplicialComplex d1 = random_complex(rng, kBase, 4, 4), d2 = random_complex(rng, kBase, 4, 4);
  Face b = nonempty_subset(rng, range_mask(4, 12), 3);
  Face a = nonempty_subset(rng, range_mask(8, 20) & ~b, 3);
  Face a2 = nonempty_subset(rng, range_mask(8, 20) & ~b, 3);
  return same_positive_homology(union_of(cone(a, d1), cone(b, d2)), union_of(cone(a2, d1), cone(b, d2)));
}

/// Δ_{A,B} = A*Δ1 ∪ B*Δ2 ∪ (A∪B)*Δ3 depends on (A, B) only through H̃_i, i > 0.
inline bool random_three_piece_union(std::mt19937_64& rng) {
  SimplicialComplex d1 = random_complex(rng, kBase, 3, 4), d2 = random_complex(rng, kBase, 3, 4),
                    d3 = random_complex(rng, kBase, 3, 4);
  auto build = [&](Face a, Face b) {
    return union_of(union_of(cone(a, d1), cone(b, d2)), cone(a | b, d3));
  };
  Face a = nonempty_subset(rng, range_mask(8, 14), 3);
  Face b = nonempty_subset(rng, range_mask(8, 14) & ~a, 3);
  Face a2 = nonempty_subset(rng, range_mask(8, 20), 3);
  Face b2 = nonempty_subset(rng, range_mask(8, 20) & ~a2, 3);
  return same_positive_homology(build(a, b), build(a2, b2));
}

}  // namespace edgering::testing

#endif  // EDGERING_TESTS_SUPPORT_HPP
