#include "edgering/betti.hpp"

#include <algorithm>
#include <map>
#include <set>
#include <sstream>
#include <stdexcept>
#include <unordered_set>

#include <json.hpp>

namespace edgering {

namespace {

std::vector<int> to_vec(const Eigen::VectorXi& v) { return std::vector<int>(v.data(), v.data() + v.size()); }

Eigen::VectorXi to_eigen(const std::vector<int>& v) {
  return Eigen::Map<const Eigen::VectorXi>(v.data(), static_cast<Eigen::Index>(v.size()));
}

// Endpoint vertex indices of every edge.
std::vector<std::pair<std::size_t, std::size_t>> edge_ends(const SimpleGraph& g) {
  std::vector<std::pair<std::size_t, std::size_t>> out;
  out.reserve(g.num_edges());
  for (const Edge& e : g.edges()) out.emplace_back(g.vertex_index(e.a), g.vertex_index(e.b));
  return out;
}

// Multidegrees by total degree, then lexicographically.
bool degree_less(const MultiDegree& a, const MultiDegree& b) {
  if (a.sum() != b.sum()) return a.sum() < b.sum();
  return exponents_less(a, b);
}

// Upper Koszul complex of x^b: facets {j : b_j > g_j} over generators g | x^b.
std::optional<SimplicialComplex> upper_koszul(const Exponents& b, const std::vector<Exponents>& gens) {
  std::vector<Face> facets;
  for (const Exponents& g : gens) {
    if (!divides(g, b)) continue;
    Face f = 0;
    for (Eigen::Index j = 0; j < b.size(); ++j)
      if (b[j] > g[j]) f |= Face{1} << j;
    facets.push_back(f);
  }
  if (facets.empty()) return std::nullopt;
  return SimplicialComplex::from_facets(std::move(facets));
}

constexpr std::size_t kLatticeCap = 400000;

}  // namespace

bool MultiDegreeLess::operator()(const MultiDegree& a, const MultiDegree& b) const { return degree_less(a, b); }

std::size_t VectorHash::operator()(const std::vector<int>& v) const {
  std::size_t h = v.size();
  for (int x : v) h ^= static_cast<std::size_t>(x) + 0x9e3779b97f4a7c15ULL + (h << 6) + (h >> 2);
  return h;
}

MultiDegree vertex_degree(const SimpleGraph& g, const Exponents& edge_exponents) {
  return incidence_matrix(g) * edge_exponents;
}

std::string to_string(const MultiDegree& s) {
  std::ostringstream os;
  os << "(";
  for (Eigen::Index i = 0; i < s.size(); ++i) os << (i ? "," : "") << s[i];
  os << ")";
  return os.str();
}

// ---------------------------------------------------------------- membership

SemigroupOracle::SemigroupOracle(const SimpleGraph& g) : nbr_(g.num_vertices()) {
  for (const auto& [a, b] : edge_ends(g)) {
    nbr_[a].push_back(b);
    nbr_[b].push_back(a);
  }
}

bool SemigroupOracle::contains(const MultiDegree& t) { return contains(to_vec(t)); }

bool SemigroupOracle::contains(const std::vector<int>& t) {
  if (t.size() != nbr_.size()) throw std::invalid_argument("degree vector has the wrong length");
  std::vector<int> work = t;
  return search(work);
}

bool SemigroupOracle::search(std::vector<int>& t) {
  long total = 0;
  std::size_t v = t.size();
  for (std::size_t i = 0; i < t.size(); ++i) {
    if (t[i] < 0) return false;
    total += t[i];
    if (t[i] > 0 && v == t.size()) v = i;
  }
  if (total == 0) return true;
  if (total % 2) return false;
  // Every unit of demand at a vertex must be matched by a neighbour.
  for (std::size_t i = 0; i < t.size(); ++i) {
    if (!t[i]) continue;
    long around = 0;
    for (std::size_t u : nbr_[i]) around += t[u];
    if (around < t[i]) return false;
  }
  if (auto it = memo_.find(t); it != memo_.end()) return it->second;
  bool found = false;
  for (std::size_t u : nbr_[v]) {
    if (t[u] <= 0) continue;
    --t[v];
    --t[u];
    found = search(t);
    ++t[v];
    ++t[u];
    if (found) break;
  }
  memo_.emplace(t, found);
  return found;
}

bool semigroup_member(const SimpleGraph& g, const MultiDegree& t) {
  SemigroupOracle oracle(g);
  return oracle.contains(t);
}

// ------------------------------------------------------------ fiber complex

FiberComplex fiber_complex(const SimpleGraph& g, const MultiDegree& s) {
  SemigroupOracle oracle(g);
  return fiber_complex(g, s, [&](const std::vector<int>& t) { return oracle.contains(t); });
}

FiberComplex fiber_complex(const SimpleGraph& g, const MultiDegree& s, const MembershipTest& member) {
  if (static_cast<std::size_t>(s.size()) != g.num_vertices())
    throw std::invalid_argument("multidegree has the wrong length");
  if (g.num_edges() > 64) throw std::invalid_argument("fiber complexes support at most 64 edges");
  FiberComplex out{s, {}, {}};
  std::vector<int> residual = to_vec(s);
  if (!member(residual)) return out;

  const auto ends = edge_ends(g);
  std::vector<Face> maximal;
  // Faces are downward closed, so adding edges in increasing index order
  // reaches every face exactly once.
  auto dfs = [&](auto&& self, std::size_t from, Face f) -> void {
    out.faces.push_back(f);
    bool extended = false;
    for (std::size_t j = from; j < ends.size(); ++j) {
      auto [a, b] = ends[j];
      if (residual[a] <= 0 || residual[b] <= 0) continue;
      --residual[a];
      --residual[b];
      if (member(residual)) {
        extended = true;
        self(self, j + 1, f | (Face{1} << j));
      }
      ++residual[a];
      ++residual[b];
    }
    if (!extended) maximal.push_back(f);
  };
  dfs(dfs, 0, 0);
  // A face that could not be extended by a later edge may still lie in a
  // bigger face through an earlier one; from_facets repairs the antichain.
  out.complex = SimplicialComplex::from_facets(std::move(maximal));
  return out;
}

// ----------------------------------------------------------------- shortcut

namespace {

// The degree-2 path patterns of a graph, found once and tested per degree.
class ShortcutPatterns {
 public:
  explicit ShortcutPatterns(const SimpleGraph& g) : g_(g) {
    for (VertexId x2 : g.vertices()) {
      if (degree(g, x2) != 2) continue;
      auto nb = neighbors(g, x2);
      VertexId a = *nb.begin(), b = *nb.rbegin();
      for (auto [x1, x3] : {std::pair{a, b}, std::pair{b, a}})
        if (is_simple_path(g, Walk(g, {x1, x2, x3}))) two_.push_back({x1, x2, x3});
    }
    for (const Edge& e : g.edges()) {
      VertexId x2 = e.a, x3 = e.b;
      if (degree(g, x2) != 2 || degree(g, x3) != 2) continue;
      VertexId x1 = 0, x4 = 0;
      for (VertexId u : neighbors(g, x2))
        if (u != x3) x1 = u;
      for (VertexId u : neighbors(g, x3))
        if (u != x2) x4 = u;
      if (x1 != x4) three_.push_back({x1, x2, x3, x4});  // x1 == x4 is a triangle
    }
  }

  std::optional<ShortcutWitness> test(const MultiDegree& s) const {
    auto w = [&](VertexId x) { return s[static_cast<Eigen::Index>(g_.vertex_index(x))]; };
    for (const auto& p : two_)
      if (w(p[0]) < w(p[1])) return ShortcutWitness{ShortcutWitness::Rule::simple_two_path, p};
    for (const auto& p : three_)
      if (w(p[1]) != w(p[2])) return ShortcutWitness{ShortcutWitness::Rule::three_path, p};
    return std::nullopt;
  }

 private:
  const SimpleGraph& g_;
  std::vector<std::vector<VertexId>> two_, three_;
};

}  // namespace

std::optional<ShortcutWitness> acyclicity_shortcut(const SimpleGraph& g, const MultiDegree& s) {
  return ShortcutPatterns(g).test(s);
}

// ----------------------------------------------------- monomial Betti numbers

std::vector<MonomialBettiEntry> monomial_betti(const std::vector<Exponents>& gens_in, const FieldSpec& field) {
  std::vector<Exponents> gens = minimalize_monomials(gens_in);
  if (gens.empty()) return {};
  if (gens.front().size() > 64) throw std::invalid_argument("monomial Betti numbers support at most 64 variables");

  std::set<std::vector<int>> lattice;
  for (const Exponents& g : gens) {
    std::vector<std::vector<int>> fresh{to_vec(g)};
    for (const auto& l : lattice) fresh.push_back(to_vec(lcm(to_eigen(l), g)));
    lattice.insert(fresh.begin(), fresh.end());
    if (lattice.size() > kLatticeCap)
      throw std::runtime_error("lcm lattice exceeds " + std::to_string(kLatticeCap) + " elements");
  }

  std::vector<MonomialBettiEntry> out;
  for (const auto& lv : lattice) {
    Exponents b = to_eigen(lv);
    auto k = upper_koszul(b, gens);
    if (!k || is_cone(*k)) continue;
    HomologyProfile h = reduced_homology(*k, field);
    for (int i = -1; i + 1 < static_cast<int>(h.dims.size()); ++i)
      if (std::size_t d = h.at(i)) out.push_back({i + 2, b, d});
  }
  std::sort(out.begin(), out.end(), [](const MonomialBettiEntry& x, const MonomialBettiEntry& y) {
    if (x.i != y.i) return x.i < y.i;
    return degree_less(x.b, y.b);
  });
  return out;
}

std::vector<std::size_t> monomial_betti_totals(const std::vector<Exponents>& gens, const FieldSpec& field) {
  std::vector<std::size_t> totals{1};
  for (const auto& e : monomial_betti(gens, field)) {
    if (totals.size() <= static_cast<std::size_t>(e.i)) totals.resize(static_cast<std::size_t>(e.i) + 1, 0);
    totals[static_cast<std::size_t>(e.i)] += e.value;
  }
  return totals;
}

std::vector<MultiDegree> candidate_degrees(const SimpleGraph& g) {
  return candidate_degrees(g, TermOrder::degrevlex(g.num_edges()));
}

std::vector<MultiDegree> candidate_degrees(const SimpleGraph& g, const TermOrder& ord) {
  BinomialIdeal gb = toric_ideal(g, ord);
  Eigen::MatrixXi m = incidence_matrix(g);
  std::set<MultiDegree, MultiDegreeLess> out;
  for (const auto& e : monomial_betti(initial_ideal(gb))) out.insert(m * e.b);
  return {out.begin(), out.end()};
}

namespace {

// Elements of Im φ up to a degree bound, level by level. Vectors are packed
// into one 64-bit key when they fit, which keeps exhaustive mode in memory.
class LevelSets {
 public:
  LevelSets(const SimpleGraph& g, int max_degree) : r_(g.num_vertices()) {
    bits_ = 1;
    while ((1 << bits_) <= max_degree) ++bits_;
    packed_ = r_ * static_cast<std::size_t>(bits_) <= 64;
    const auto ends = edge_ends(g);
    if (packed_) {
      // Entries never exceed the level, so adding packed edge columns never carries.
      std::vector<std::uint64_t> deltas;
      for (auto [a, b] : ends) deltas.push_back((std::uint64_t{1} << shift(a)) + (std::uint64_t{1} << shift(b)));
      std::vector<std::uint64_t> level{0};
      keys_.insert(0);
      for (int d = 1; d <= max_degree; ++d) {
        std::vector<std::uint64_t> next;
        for (std::uint64_t t : level)
          for (std::uint64_t delta : deltas)
            if (keys_.insert(t + delta).second) next.push_back(t + delta);
        for (std::uint64_t t : next) elements_.push_back(unpack(t));
        level = std::move(next);
      }
    } else {
      std::vector<std::vector<int>> level{std::vector<int>(r_, 0)};
      wide_.insert(level.front());
      for (int d = 1; d <= max_degree; ++d) {
        std::vector<std::vector<int>> next;
        for (const auto& t : level) {
          for (auto [a, b] : ends) {
            std::vector<int> u = t;
            ++u[a];
            ++u[b];
            if (wide_.insert(u).second) next.push_back(std::move(u));
          }
        }
        for (const auto& t : next) elements_.push_back(to_eigen(t));
        level = std::move(next);
      }
    }
    std::sort(elements_.begin(), elements_.end(), degree_less);
  }

  bool contains(const std::vector<int>& t) const {
    if (packed_) return keys_.count(pack(t)) > 0;
    return wide_.count(t) > 0;
  }
  const std::vector<MultiDegree>& elements() const { return elements_; }

 private:
  std::uint64_t pack(const std::vector<int>& t) const {
    std::uint64_t k = 0;
    for (int x : t) {
      if (x < 0 || x >= (1 << bits_)) return ~std::uint64_t{0};
      k = (k << bits_) | static_cast<std::uint64_t>(x);
    }
    return k;
  }
  int shift(std::size_t i) const { return static_cast<int>(r_ - 1 - i) * bits_; }
  MultiDegree unpack(std::uint64_t k) const {
    MultiDegree out(static_cast<Eigen::Index>(r_));
    const std::uint64_t mask = (std::uint64_t{1} << bits_) - 1;
    for (std::size_t i = 0; i < r_; ++i) out[static_cast<Eigen::Index>(i)] = static_cast<int>((k >> shift(i)) & mask);
    return out;
  }

  std::size_t r_;
  int bits_;
  bool packed_;
  std::unordered_set<std::uint64_t> keys_;
  std::unordered_set<std::vector<int>, VectorHash> wide_;
  std::vector<MultiDegree> elements_;
};

}  // namespace

std::vector<MultiDegree> semigroup_degrees_up_to(const SimpleGraph& g, int max_degree) {
  return LevelSets(g, max_degree).elements();
}

// -------------------------------------------------------------- Betti table

std::string BettiTable::totals_string() const {
  std::ostringstream os;
  os << "(";
  for (std::size_t i = 0; i < totals.size(); ++i) os << (i ? "," : "") << totals[i];
  os << ")";
  return os.str();
}

std::string BettiTable::to_json() const {
  nlohmann::ordered_json j;
  j["totals"] = totals;
  nlohmann::ordered_json graded = nlohmann::ordered_json::object();
  for (const auto& [key, v] : this->graded) graded[std::to_string(key.first) + "," + std::to_string(key.second)] = v;
  j["graded"] = graded;
  nlohmann::ordered_json multi = nlohmann::ordered_json::object();
  for (const auto& e : multigraded)
    multi[std::to_string(e.i)].push_back({{"s", to_vec(e.s)}, {"beta", e.beta}});
  j["multigraded"] = multi;
  j["codim"] = codim;
  j["pd"] = pd;
  j["depth"] = depth;
  j["krull_dim"] = krull_dim;
  j["cm"] = cm;
  j["gorenstein"] = gorenstein;
  j["field"] = field.describe();
  j["warnings"] = warnings;
  return j.dump();
}

std::string BettiTable::to_text() const {
  int max_i = static_cast<int>(totals.size()) - 1, min_j = 0, max_j = 0;
  for (const auto& [key, v] : graded) {
    min_j = std::min(min_j, key.second - key.first);
    max_j = std::max(max_j, key.second - key.first);
  }
  std::ostringstream os;
  os << "total:";
  for (std::size_t t : totals) os << " " << t;
  os << "\n";
  // Rows by j - i, the usual Macaulay2 layout.
  for (int r = min_j; r <= max_j; ++r) {
    os << r << ":";
    for (int i = 0; i <= max_i; ++i) {
      auto it = graded.find({i, i + r});
      os << " " << (it == graded.end() ? std::string(".") : std::to_string(it->second));
    }
    os << "\n";
  }
  os << "codim " << codim << ", pd " << pd << ", depth " << depth << ", dim " << krull_dim << ", "
     << (cm ? "Cohen-Macaulay" : "not Cohen-Macaulay") << (gorenstein ? ", Gorenstein" : "") << ", over "
     << field.describe() << "\n";
  for (const auto& w : warnings) os << "warning: " << w << "\n";
  return os.str();
}

BettiTable betti_table(const SimpleGraph& g, const BettiOptions& options) {
  if (!is_connected(g)) throw std::invalid_argument("Betti tables need a connected graph");
  BettiTable t;
  t.field = options.field;
  t.num_edges = g.num_edges();
  t.codim = codim(g);

  SemigroupOracle oracle(g);
  auto member = [&](const std::vector<int>& r) { return oracle.contains(r); };

  MultiDegree zero = MultiDegree::Zero(static_cast<Eigen::Index>(g.num_vertices()));
  FiberComplex f0 = fiber_complex(g, zero, member);
  if (homology_from_faces(f0.faces, options.field).at(-1) != 1)
    throw std::logic_error("fiber complex in degree 0 is not {∅}");
  t.multigraded.push_back({0, zero, 1});

  std::vector<MultiDegree> degrees;
  std::optional<LevelSets> levels;
  if (options.mode == BettiOptions::Mode::guided) {
    degrees = candidate_degrees(g);
  } else {
    // Every s - φ(e_F) has degree at most |s|/2, so the level sets answer
    // membership exactly.
    levels.emplace(g, options.max_degree);
    degrees = levels->elements();
    std::vector<MultiDegree> guided = candidate_degrees(g);
    long top = 0;
    for (const auto& s : guided) top = std::max<long>(top, s.sum() / 2);
    if (top > options.max_degree)
      t.warnings.push_back("exhaustive bound " + std::to_string(options.max_degree) +
                           " is below the candidate support (degree " + std::to_string(top) + ")");
  }

  const ShortcutPatterns shortcuts(g);
  for (const MultiDegree& s : degrees) {
    if (s.sum() == 0) continue;
    ++t.degrees_examined;
    if (options.shortcuts && shortcuts.test(s)) continue;
    oracle.clear();
    FiberComplex fc = levels ? fiber_complex(g, s, [&](const std::vector<int>& r) { return levels->contains(r); })
                             : fiber_complex(g, s, member);
    if (fc.faces.empty() || is_cone(fc.complex)) continue;
    HomologyProfile h = homology_from_faces(fc.faces, options.field);
    if (h.at(-1) != 0) throw std::logic_error("fiber complex {∅} away from degree 0");
    for (int k = 0; k + 1 < static_cast<int>(h.dims.size()); ++k)
      if (std::size_t d = h.at(k)) t.multigraded.push_back({k + 1, s, d});
  }
  std::sort(t.multigraded.begin(), t.multigraded.end(), [](const MultigradedEntry& a, const MultigradedEntry& b) {
    if (a.i != b.i) return a.i < b.i;
    return degree_less(a.s, b.s);
  });

  for (const auto& e : t.multigraded) {
    t.graded[{e.i, e.s.sum() / 2}] += e.beta;
    if (t.totals.size() <= static_cast<std::size_t>(e.i)) t.totals.resize(static_cast<std::size_t>(e.i) + 1, 0);
    t.totals[static_cast<std::size_t>(e.i)] += e.beta;
  }
  t.pd = t.totals.size() - 1;
  t.depth = t.num_edges - t.pd;
  t.krull_dim = t.num_edges - t.codim;
  t.cm = t.pd == t.codim;
  t.gorenstein = t.cm && t.totals.back() == 1;
  return t;
}

// ----------------------------------------------------------- Koszul oracle

namespace {

// Standard monomials of K[G] by vertex degree: one fiber element found by
// walking the edges in order, then reduced by the Gröbner basis.
class StandardMonomials {
 public:
  StandardMonomials(const SimpleGraph& g, const BinomialIdeal& gb) : ends_(edge_ends(g)), gb_(gb) {
    last_edge_.assign(g.num_vertices(), -1);
    for (std::size_t j = 0; j < ends_.size(); ++j) {
      last_edge_[ends_[j].first] = static_cast<int>(j);
      last_edge_[ends_[j].second] = static_cast<int>(j);
    }
  }

  const std::optional<Exponents>& of(const std::vector<int>& t) {
    auto it = cache_.find(t);
    if (it != cache_.end()) return it->second;
    std::optional<Exponents> out;
    Exponents a = Exponents::Zero(static_cast<Eigen::Index>(ends_.size()));
    std::vector<int> r = t;
    failed_.clear();
    if (fill(0, r, a)) out = normal_form(a, gb_);
    return cache_.emplace(t, std::move(out)).first->second;
  }

 private:
  bool fill(std::size_t j, std::vector<int>& r, Exponents& a) {
    bool done = true;
    for (std::size_t v = 0; v < r.size(); ++v) {
      if (r[v] == 0) continue;
      done = false;
      if (last_edge_[v] < static_cast<int>(j)) return false;  // no edge left to serve v
    }
    if (done) return true;
    if (j == ends_.size()) return false;
    std::vector<int> key = r;
    key.push_back(static_cast<int>(j));
    if (failed_.count(key)) return false;
    auto [u, v] = ends_[j];
    const int most = std::min(r[u], r[v]);
    for (int k = most; k >= 0; --k) {
      r[u] -= k;
      r[v] -= k;
      a[static_cast<Eigen::Index>(j)] = k;
      bool ok = fill(j + 1, r, a);
      r[u] += k;
      r[v] += k;
      if (ok) return true;
    }
    a[static_cast<Eigen::Index>(j)] = 0;
    failed_.insert(std::move(key));
    return false;
  }

  std::vector<std::pair<std::size_t, std::size_t>> ends_;
  const BinomialIdeal& gb_;
  std::vector<int> last_edge_;
  std::map<std::vector<int>, std::optional<Exponents>> cache_;
  std::set<std::vector<int>> failed_;
};

}  // namespace

std::vector<std::size_t> betti_via_koszul(const SimpleGraph& g, const MultiDegree& s, const FieldSpec& field) {
  return betti_via_koszul(g, s, toric_ideal(g), field);
}

std::vector<std::size_t> betti_via_koszul(const SimpleGraph& g, const MultiDegree& s, const BinomialIdeal& gb,
                                          const FieldSpec& field) {
  if (!gb.gb_order) throw std::logic_error("Koszul oracle needs a Gröbner basis");
  const auto ends = edge_ends(g);
  const std::size_t n = ends.size();
  StandardMonomials standard(g, gb);

  // Koszul basis: (F, standard monomial of degree s - φ(F)).
  std::vector<std::vector<Face>> basis(n + 1);
  std::map<Face, Exponents> mono;
  std::vector<int> r = to_vec(s);
  auto dfs = [&](auto&& self, std::size_t from, Face f) -> void {
    if (const auto& m = standard.of(r)) {
      basis[static_cast<std::size_t>(face_size(f))].push_back(f);
      mono.emplace(f, *m);
    }
    for (std::size_t j = from; j < n; ++j) {
      auto [a, b] = ends[j];
      if (r[a] <= 0 || r[b] <= 0) continue;
      --r[a];
      --r[b];
      self(self, j + 1, f | (Face{1} << j));
      ++r[a];
      ++r[b];
    }
  };
  dfs(dfs, 0, 0);

  std::vector<std::map<Face, std::size_t>> index(n + 1);
  for (std::size_t k = 0; k <= n; ++k)
    for (std::size_t i = 0; i < basis[k].size(); ++i) index[k][basis[k][i]] = i;

  // rank_of[k] = rank of d_k : K_k -> K_{k-1}.
  std::vector<std::size_t> rank_of(n + 2, 0);
  for (std::size_t k = 1; k <= n; ++k) {
    if (basis[k].empty()) continue;
    SparseIntMatrix m;
    m.rows = basis[k - 1].size();
    for (Face f : basis[k]) {
      std::vector<std::pair<std::size_t, int>> col;
      int sign = 1;
      for (Face rest = f; rest; rest &= rest - 1) {
        const int j = __builtin_ctzll(rest);
        Face sub = f & ~(Face{1} << j);
        auto it = index[k - 1].find(sub);
        if (it == index[k - 1].end()) throw std::logic_error("Koszul basis is not closed under faces");
        Exponents moved = mono.at(f);
        moved[j] += 1;
        if (!same_exponents(normal_form(moved, gb), mono.at(sub)))
          throw std::logic_error("standard monomial of a multidegree is not unique");
        col.emplace_back(it->second, sign);
        sign = -sign;
      }
      m.columns.push_back(std::move(col));
    }
    rank_of[k] = sparse_rank(m, field);
  }
  std::vector<std::size_t> betti(n + 1, 0);
  for (std::size_t k = 0; k <= n; ++k) betti[k] = basis[k].size() - rank_of[k] - rank_of[k + 1];
  while (betti.size() > 1 && betti.back() == 0) betti.pop_back();
  return betti;
}

}  // namespace edgering
