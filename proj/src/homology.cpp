#include "edgering/homology.hpp"

#include <algorithm>
#include <sstream>
#include <stdexcept>
#include <unordered_map>
#include <unordered_set>

namespace edgering {

Face face_of(std::initializer_list<int> labels) {
  Face f = 0;
  for (int l : labels) {
    if (l < 0 || l >= 64) throw std::invalid_argument("labels must lie in 0..63");
    f |= Face{1} << l;
  }
  return f;
}

std::vector<int> labels_of(Face f) {
  std::vector<int> out;
  while (f) {
    out.push_back(__builtin_ctzll(f));
    f &= f - 1;
  }
  return out;
}

SimplicialComplex SimplicialComplex::from_facets(std::vector<Face> facets) {
  std::sort(facets.begin(), facets.end(), [](Face a, Face b) {
    if (face_size(a) != face_size(b)) return face_size(a) > face_size(b);
    return a < b;
  });
  facets.erase(std::unique(facets.begin(), facets.end()), facets.end());
  SimplicialComplex out;
  for (Face f : facets) {
    bool covered = std::any_of(out.facets_.begin(), out.facets_.end(), [&](Face g) { return is_subface(f, g); });
    if (!covered) out.facets_.push_back(f);
  }
  std::sort(out.facets_.begin(), out.facets_.end());
  return out;
}

bool SimplicialComplex::contains(Face f) const {
  return std::any_of(facets_.begin(), facets_.end(), [&](Face g) { return is_subface(f, g); });
}

Face SimplicialComplex::vertex_set() const {
  Face all = 0;
  for (Face f : facets_) all |= f;
  return all;
}

int SimplicialComplex::dimension() const {
  int d = -2;
  for (Face f : facets_) d = std::max(d, face_size(f) - 1);
  return d;
}

std::vector<Face> SimplicialComplex::faces() const {
  std::unordered_set<Face> seen;
  std::vector<Face> stack(facets_.begin(), facets_.end());
  for (Face f : facets_) seen.insert(f);
  while (!stack.empty()) {
    Face f = stack.back();
    stack.pop_back();
    for (Face rest = f; rest; rest &= rest - 1) {
      Face sub = f & ~(rest & -rest);
      if (seen.insert(sub).second) stack.push_back(sub);
    }
  }
  std::vector<Face> out(seen.begin(), seen.end());
  std::sort(out.begin(), out.end(), [](Face a, Face b) {
    if (face_size(a) != face_size(b)) return face_size(a) < face_size(b);
    return a < b;
  });
  return out;
}

bool HomologyProfile::is_acyclic() const {
  return std::all_of(dims.begin(), dims.end(), [](std::size_t d) { return d == 0; });
}

std::string HomologyProfile::to_string() const {
  std::ostringstream os;
  os << "[";
  for (std::size_t k = 0; k < dims.size(); ++k) os << (k ? " " : "") << "H" << static_cast<int>(k) - 1 << "=" << dims[k];
  os << "] over " << field.describe();
  return os.str();
}

HomologyProfile homology_from_faces(std::span<const Face> faces, const FieldSpec& field) {
  HomologyProfile out{field, {}};
  if (faces.empty()) return out;
  int top = -1;
  for (Face f : faces) top = std::max(top, face_size(f) - 1);
  // by_dim[k + 1] lists faces of dimension k.
  std::vector<std::vector<Face>> by_dim(static_cast<std::size_t>(top + 2));
  for (Face f : faces) by_dim[static_cast<std::size_t>(face_size(f))].push_back(f);
  std::vector<std::unordered_map<Face, std::size_t>> index(by_dim.size());
  for (std::size_t k = 0; k < by_dim.size(); ++k)
    for (std::size_t i = 0; i < by_dim[k].size(); ++i) index[k][by_dim[k][i]] = i;

  // rank_of[k + 1] = rank of the boundary from dimension k to k - 1.
  std::vector<std::size_t> rank_of(by_dim.size() + 1, 0);
  for (std::size_t k = 1; k < by_dim.size(); ++k) {
    SparseIntMatrix m;
    m.rows = by_dim[k - 1].size();
    m.columns.reserve(by_dim[k].size());
    for (Face f : by_dim[k]) {
      std::vector<std::pair<std::size_t, int>> col;
      int sign = 1;
      for (Face rest = f; rest; rest &= rest - 1) {
        Face sub = f & ~(rest & -rest);
        auto it = index[k - 1].find(sub);
        if (it == index[k - 1].end()) throw std::invalid_argument("face list is not downward closed");
        col.emplace_back(it->second, sign);
        sign = -sign;
      }
      m.columns.push_back(std::move(col));
    }
    rank_of[k] = sparse_rank(m, field);
  }
  out.dims.resize(by_dim.size());
  for (std::size_t k = 0; k < by_dim.size(); ++k) out.dims[k] = by_dim[k].size() - rank_of[k] - rank_of[k + 1];
  while (!out.dims.empty() && out.dims.back() == 0) out.dims.pop_back();
  return out;
}

HomologyProfile reduced_homology(const SimplicialComplex& complex, const FieldSpec& field) {
  auto faces = complex.faces();
  return homology_from_faces(faces, field);
}

std::optional<int> is_cone(const SimplicialComplex& complex) {
  if (complex.is_void()) return std::nullopt;
  Face common = ~Face{0};
  for (Face f : complex.facets()) common &= f;
  if (!common) return std::nullopt;
  return __builtin_ctzll(common);
}

SimplicialComplex cone(Face apex, const SimplicialComplex& complex) {
  if (!apex) throw std::invalid_argument("cone apex set must be nonempty");
  if (complex.is_void()) return SimplicialComplex::simplex(apex);
  std::vector<Face> fs;
  for (Face f : complex.facets()) fs.push_back(f | apex);
  return SimplicialComplex::from_facets(std::move(fs));
}

SimplicialComplex union_of(const SimplicialComplex& a, const SimplicialComplex& b) {
  std::vector<Face> fs = a.facets();
  fs.insert(fs.end(), b.facets().begin(), b.facets().end());
  return SimplicialComplex::from_facets(std::move(fs));
}

SimplicialComplex intersection_of(const SimplicialComplex& a, const SimplicialComplex& b) {
  std::vector<Face> fs;
  for (Face f : a.facets())
    for (Face g : b.facets()) fs.push_back(f & g);
  return SimplicialComplex::from_facets(std::move(fs));
}

}  // namespace edgering
