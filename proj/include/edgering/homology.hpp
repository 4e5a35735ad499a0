// Simplicial complexes on at most 64 labels and their reduced homology.
#ifndef EDGERING_HOMOLOGY_HPP
#define EDGERING_HOMOLOGY_HPP

#include <cstdint>
#include <optional>
#include <span>
#include <string>
#include <vector>

#include "edgering/field.hpp"

namespace edgering {

/// A face is a bitmask over labels 0..63.
using Face = std::uint64_t;

inline int face_size(Face f) { return __builtin_popcountll(f); }
inline bool is_subface(Face a, Face b) { return (a & ~b) == 0; }
Face face_of(std::initializer_list<int> labels);
std::vector<int> labels_of(Face f);

/// A complex stored by its facets. The void complex (no faces at all) and
/// the complex {∅} are different values: the first has no facets, the
/// second has the single facet 0.
class SimplicialComplex {
 public:
  SimplicialComplex() = default;

  static SimplicialComplex void_complex() { return {}; }
  static SimplicialComplex empty_face() { return from_facets({Face{0}}); }
  /// Keeps only the inclusion-maximal sets.
  static SimplicialComplex from_facets(std::vector<Face> facets);
  static SimplicialComplex simplex(Face f) { return from_facets({f}); }

  const std::vector<Face>& facets() const { return facets_; }
  bool is_void() const { return facets_.empty(); }
  bool contains(Face f) const;
  Face vertex_set() const;
  int dimension() const;

  /// Every face, each exactly once, sorted by size then mask.
  std::vector<Face> faces() const;

  bool operator==(const SimplicialComplex& o) const { return facets_ == o.facets_; }

 private:
  std::vector<Face> facets_;  // sorted antichain
};

/// dim H̃_i for i = -1, 0, 1, ...
struct HomologyProfile {
  FieldSpec field;
  std::vector<std::size_t> dims;  // dims[i + 1] = dim H̃_i

  std::size_t at(int i) const {
    auto k = static_cast<std::size_t>(i + 1);
    return i < -1 || k >= dims.size() ? 0 : dims[k];
  }
  bool is_acyclic() const;
  std::string to_string() const;
};

HomologyProfile reduced_homology(const SimplicialComplex& complex, const FieldSpec& field = {});
/// Same computation from an explicit, downward closed face list.
HomologyProfile homology_from_faces(std::span<const Face> faces, const FieldSpec& field = {});

/// A label lying in every facet (the least one), if any.
std::optional<int> is_cone(const SimplicialComplex& complex);
/// A * Δ; throws std::invalid_argument if A is empty.
SimplicialComplex cone(Face apex, const SimplicialComplex& complex);
SimplicialComplex union_of(const SimplicialComplex& a, const SimplicialComplex& b);
SimplicialComplex intersection_of(const SimplicialComplex& a, const SimplicialComplex& b);

}  // namespace edgering

#endif  // EDGERING_HOMOLOGY_HPP
