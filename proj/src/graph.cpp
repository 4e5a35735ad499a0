#include "edgering/graph.hpp"

#include <algorithm>
#include <functional>
#include <numeric>
#include <queue>
#include <sstream>
#include <stdexcept>

namespace edgering {

SimpleGraph::SimpleGraph(std::vector<VertexId> vertices, std::vector<Edge> edges)
    : vertices_(std::move(vertices)), edges_(std::move(edges)) {
  std::sort(vertices_.begin(), vertices_.end());
  if (std::adjacent_find(vertices_.begin(), vertices_.end()) != vertices_.end())
    throw std::invalid_argument("duplicate vertex id");
  if (!vertices_.empty() && vertices_.front() <= 0)
    throw std::invalid_argument("vertex ids must be positive integers");
  for (const Edge& e : edges_) {
    if (e.a == e.b) throw std::invalid_argument("self-loop on vertex " + std::to_string(e.a));
    if (!has_vertex(e.a) || !has_vertex(e.b))
      throw std::invalid_argument("edge endpoint is not a declared vertex");
  }
  std::sort(edges_.begin(), edges_.end());
  if (std::adjacent_find(edges_.begin(), edges_.end()) != edges_.end())
    throw std::invalid_argument("duplicate edge");
  incidence_.assign(vertices_.size(), {});
  for (std::size_t j = 0; j < edges_.size(); ++j) {
    incidence_[vertex_index(edges_[j].a)].push_back(j);
    incidence_[vertex_index(edges_[j].b)].push_back(j);
  }
}

SimpleGraph SimpleGraph::from_edges(const std::vector<std::pair<VertexId, VertexId>>& edges) {
  std::set<VertexId> vs;
  std::vector<Edge> es;
  for (auto [x, y] : edges) {
    vs.insert(x);
    vs.insert(y);
    es.emplace_back(x, y);
  }
  return SimpleGraph({vs.begin(), vs.end()}, std::move(es));
}

bool SimpleGraph::has_vertex(VertexId v) const {
  return std::binary_search(vertices_.begin(), vertices_.end(), v);
}

bool SimpleGraph::has_edge(VertexId x, VertexId y) const { return edge_index(x, y).has_value(); }

std::optional<std::size_t> SimpleGraph::edge_index(VertexId x, VertexId y) const {
  if (x == y) return std::nullopt;
  Edge e(x, y);
  auto it = std::lower_bound(edges_.begin(), edges_.end(), e);
  if (it == edges_.end() || *it != e) return std::nullopt;
  return static_cast<std::size_t>(it - edges_.begin());
}

std::size_t SimpleGraph::vertex_index(VertexId v) const {
  auto it = std::lower_bound(vertices_.begin(), vertices_.end(), v);
  if (it == vertices_.end() || *it != v) throw std::invalid_argument("unknown vertex " + std::to_string(v));
  return static_cast<std::size_t>(it - vertices_.begin());
}

// ---------------------------------------------------------------------------

Walk::Walk(const SimpleGraph& g, std::vector<VertexId> vertices) : vertices_(std::move(vertices)) {
  if (vertices_.empty()) throw std::invalid_argument("a walk needs at least one vertex");
  if (!g.has_vertex(vertices_.front())) throw std::invalid_argument("walk vertex not in graph");
  for (std::size_t i = 0; i + 1 < vertices_.size(); ++i) {
    auto j = g.edge_index(vertices_[i], vertices_[i + 1]);
    if (!j)
      throw std::invalid_argument("not a walk: {" + std::to_string(vertices_[i]) + "," +
                                  std::to_string(vertices_[i + 1]) + "} is not an edge");
    edge_ids_.push_back(*j);
  }
}

bool Walk::has_distinct_vertices() const {
  std::set<VertexId> seen(vertices_.begin(), vertices_.end());
  return seen.size() == vertices_.size();
}

Walk Walk::reversed(const SimpleGraph& g) const {
  return Walk(g, {vertices_.rbegin(), vertices_.rend()});
}

Walk Walk::concat(const SimpleGraph& g, const Walk& other) const {
  if (back() != other.front()) throw std::invalid_argument("walks do not meet");
  std::vector<VertexId> vs = vertices_;
  vs.insert(vs.end(), other.vertices_.begin() + 1, other.vertices_.end());
  return Walk(g, std::move(vs));
}

// ---------------------------------------------------------------------------

std::set<VertexId> neighbors(const SimpleGraph& g, VertexId x) {
  std::size_t xi = g.vertex_index(x);
  std::set<VertexId> out;
  for (std::size_t j : g.incident_edges(xi)) out.insert(g.edges()[j].other(x));
  return out;
}

std::size_t degree(const SimpleGraph& g, VertexId x) { return g.incident_edges(g.vertex_index(x)).size(); }

bool is_path(const SimpleGraph& g, const Walk& w) {
  if (!w.has_distinct_vertices()) return false;
  const auto& vs = w.vertices();
  for (std::size_t i = 1; i + 1 < vs.size(); ++i)
    if (degree(g, vs[i]) != 2) return false;
  return true;
}

bool is_simple_path(const SimpleGraph& g, const Walk& p) {
  if (!is_path(g, p)) return false;
  std::set<VertexId> on_path(p.vertices().begin(), p.vertices().end());
  auto nx = neighbors(g, p.front());
  auto ny = neighbors(g, p.back());
  for (VertexId v : nx)
    if (ny.count(v) && !on_path.count(v)) return false;
  return true;
}

namespace {

// Identify every vertex of `merged` with `fresh`; loops are dropped and
// parallel edges collapse through the Edge set.
ContractionResult identify(const SimpleGraph& g, const std::set<VertexId>& merged, VertexId fresh) {
  ContractionResult out;
  out.new_vertex = fresh;
  std::set<VertexId> vs;
  for (VertexId v : g.vertices()) {
    VertexId image = merged.count(v) ? fresh : v;
    out.chi[v] = image;
    vs.insert(image);
  }
  std::set<Edge> es;
  for (const Edge& e : g.edges()) {
    VertexId a = out.chi[e.a], b = out.chi[e.b];
    if (a != b) es.emplace(a, b);
  }
  out.graph = SimpleGraph({vs.begin(), vs.end()}, {es.begin(), es.end()});
  return out;
}

}  // namespace

ContractionResult contract_edge(const SimpleGraph& g, Edge e) {
  if (!g.has_edge(e.a, e.b))
    throw std::invalid_argument("edge {" + std::to_string(e.a) + "," + std::to_string(e.b) + "} not in graph");
  return identify(g, {e.a, e.b}, g.max_vertex() + 1);
}

ContractionResult contract_sequentially(const SimpleGraph& g, const Walk& w, bool reverse_order) {
  ContractionResult acc;
  acc.graph = g;
  for (VertexId v : g.vertices()) acc.chi[v] = v;
  acc.new_vertex = w.front();
  if (w.length() == 0) return acc;

  std::vector<VertexId> seq = w.vertices();
  if (reverse_order) std::reverse(seq.begin(), seq.end());
  for (std::size_t i = 0; i + 1 < seq.size(); ++i) {
    Edge cur(acc.chi[seq[i]], acc.chi[seq[i + 1]]);
    ContractionResult step = contract_edge(acc.graph, cur);
    for (auto& [v, img] : acc.chi) img = step.chi.at(img);
    acc.graph = std::move(step.graph);
    acc.new_vertex = step.new_vertex;
  }
  VertexId wanted = g.max_vertex() + 1;
  if (acc.new_vertex != wanted) {
    std::map<VertexId, VertexId> rename;
    for (VertexId v : acc.graph.vertices()) rename[v] = (v == acc.new_vertex) ? wanted : v;
    acc.graph = relabel(acc.graph, rename);
    for (auto& [v, img] : acc.chi) img = rename.at(img);
    acc.new_vertex = wanted;
  }
  return acc;
}

ContractionResult contract_path(const SimpleGraph& g, const Walk& p) {
  if (!is_path(g, p)) throw std::invalid_argument("not a path of the graph");
  return contract_sequentially(g, p, false);
}

ContractionResult contract_walk(const SimpleGraph& g, const Walk& w) {
  if (!w.has_distinct_vertices()) throw std::invalid_argument("walk repeats a vertex");
  return contract_sequentially(g, w, false);
}

SimpleGraph relabel(const SimpleGraph& g, const std::map<VertexId, VertexId>& map) {
  std::vector<VertexId> vs;
  for (VertexId v : g.vertices()) vs.push_back(map.at(v));
  std::vector<Edge> es;
  for (const Edge& e : g.edges()) es.emplace_back(map.at(e.a), map.at(e.b));
  return SimpleGraph(std::move(vs), std::move(es));
}

SimpleGraph shift_vertices(const SimpleGraph& g, int offset) {
  std::map<VertexId, VertexId> m;
  for (VertexId v : g.vertices()) m[v] = v + offset;
  return relabel(g, m);
}

ConnectedByEdge connect_by_edge(const SimpleGraph& g1, VertexId x, const SimpleGraph& g2, VertexId y) {
  for (VertexId v : g1.vertices())
    if (g2.has_vertex(v)) throw std::invalid_argument("vertex sets overlap");
  if (!g1.has_vertex(x) || !g2.has_vertex(y)) throw std::invalid_argument("connecting vertex missing");
  if (!is_connected(g1) || !is_connected(g2)) throw std::invalid_argument("both sides must be connected");
  std::vector<VertexId> vs = g1.vertices();
  vs.insert(vs.end(), g2.vertices().begin(), g2.vertices().end());
  std::vector<Edge> es = g1.edges();
  es.insert(es.end(), g2.edges().begin(), g2.edges().end());
  es.emplace_back(x, y);
  return {SimpleGraph(std::move(vs), std::move(es)), Edge(x, y)};
}

SimpleGraph triangle_sequence(int n) {
  if (n <= 0) throw std::invalid_argument("triangle sequence needs n >= 1");
  std::vector<VertexId> vs(2 * n + 1);
  std::iota(vs.begin(), vs.end(), 1);
  std::vector<Edge> es;
  for (int i = 1; i <= n; ++i) {
    es.emplace_back(2 * i - 1, 2 * i);
    es.emplace_back(2 * i, 2 * i + 1);
    es.emplace_back(2 * i + 1, 2 * i - 1);
  }
  return SimpleGraph(std::move(vs), std::move(es));
}

namespace {

std::vector<int> component_labels(const SimpleGraph& g, std::optional<std::size_t> skip_edge = std::nullopt) {
  std::vector<int> label(g.num_vertices(), -1);
  int next = 0;
  for (std::size_t s = 0; s < g.num_vertices(); ++s) {
    if (label[s] >= 0) continue;
    std::queue<std::size_t> q;
    q.push(s);
    label[s] = next;
    while (!q.empty()) {
      std::size_t u = q.front();
      q.pop();
      for (std::size_t j : g.incident_edges(u)) {
        if (skip_edge && j == *skip_edge) continue;
        std::size_t v = g.vertex_index(g.edges()[j].other(g.vertices()[u]));
        if (label[v] < 0) {
          label[v] = next;
          q.push(v);
        }
      }
    }
    ++next;
  }
  return label;
}

}  // namespace

bool is_connected(const SimpleGraph& g) {
  auto label = component_labels(g);
  return std::all_of(label.begin(), label.end(), [](int l) { return l == 0; });
}

bool is_bipartite(const SimpleGraph& g) {
  std::vector<int> colour(g.num_vertices(), -1);
  for (std::size_t s = 0; s < g.num_vertices(); ++s) {
    if (colour[s] >= 0) continue;
    colour[s] = 0;
    std::queue<std::size_t> q;
    q.push(s);
    while (!q.empty()) {
      std::size_t u = q.front();
      q.pop();
      for (std::size_t j : g.incident_edges(u)) {
        std::size_t v = g.vertex_index(g.edges()[j].other(g.vertices()[u]));
        if (colour[v] < 0) {
          colour[v] = 1 - colour[u];
          q.push(v);
        } else if (colour[v] == colour[u]) {
          return false;
        }
      }
    }
  }
  return true;
}

std::size_t codim(const SimpleGraph& g) {
  if (!is_connected(g)) throw std::invalid_argument("codim requires a connected graph");
  std::size_t dim = is_bipartite(g) ? g.num_vertices() - 1 : g.num_vertices();
  return g.num_edges() - dim;
}

Eigen::MatrixXi incidence_matrix(const SimpleGraph& g) {
  Eigen::MatrixXi m = Eigen::MatrixXi::Zero(static_cast<Eigen::Index>(g.num_vertices()),
                                            static_cast<Eigen::Index>(g.num_edges()));
  for (std::size_t j = 0; j < g.num_edges(); ++j) {
    m(static_cast<Eigen::Index>(g.vertex_index(g.edges()[j].a)), static_cast<Eigen::Index>(j)) = 1;
    m(static_cast<Eigen::Index>(g.vertex_index(g.edges()[j].b)), static_cast<Eigen::Index>(j)) = 1;
  }
  return m;
}

std::vector<Edge> canonical_form(const SimpleGraph& g) {
  const std::size_t r = g.num_vertices();
  std::vector<std::size_t> deg(r);
  for (std::size_t i = 0; i < r; ++i) deg[i] = g.incident_edges(i).size();
  // Invariant key: own degree, then sorted neighbour degrees.
  std::vector<std::vector<std::size_t>> key(r);
  for (std::size_t i = 0; i < r; ++i) {
    key[i].push_back(deg[i]);
    std::vector<std::size_t> nd;
    for (std::size_t j : g.incident_edges(i)) nd.push_back(deg[g.vertex_index(g.edges()[j].other(g.vertices()[i]))]);
    std::sort(nd.begin(), nd.end());
    key[i].insert(key[i].end(), nd.begin(), nd.end());
  }
  std::vector<std::size_t> order(r);
  std::iota(order.begin(), order.end(), 0);
  std::stable_sort(order.begin(), order.end(), [&](std::size_t a, std::size_t b) { return key[a] < key[b]; });
  std::vector<std::pair<std::size_t, std::size_t>> classes;  // [begin, end) within order
  for (std::size_t i = 0; i < r;) {
    std::size_t j = i;
    while (j < r && key[order[j]] == key[order[i]]) ++j;
    classes.emplace_back(i, j);
    i = j;
  }

  std::vector<Edge> best;
  bool have_best = false;
  std::vector<VertexId> label(r);
  std::function<void(std::size_t)> rec = [&](std::size_t c) {
    if (c == classes.size()) {
      for (std::size_t pos = 0; pos < r; ++pos) label[order[pos]] = static_cast<VertexId>(pos + 1);
      std::vector<Edge> es;
      es.reserve(g.num_edges());
      for (const Edge& e : g.edges()) es.emplace_back(label[g.vertex_index(e.a)], label[g.vertex_index(e.b)]);
      std::sort(es.begin(), es.end());
      if (!have_best || es < best) {
        best = std::move(es);
        have_best = true;
      }
      return;
    }
    auto [b, e] = classes[c];
    std::sort(order.begin() + static_cast<long>(b), order.begin() + static_cast<long>(e));
    do {
      rec(c + 1);
    } while (std::next_permutation(order.begin() + static_cast<long>(b), order.begin() + static_cast<long>(e)));
  };
  rec(0);
  return best;
}

bool isomorphic(const SimpleGraph& g, const SimpleGraph& h) {
  if (g.num_vertices() != h.num_vertices() || g.num_edges() != h.num_edges()) return false;
  return canonical_form(g) == canonical_form(h);
}

std::optional<std::pair<SimpleGraph, SimpleGraph>> split_at_bridge(const SimpleGraph& g, Edge e) {
  auto j = g.edge_index(e.a, e.b);
  if (!j) return std::nullopt;
  auto label = component_labels(g, j);
  int la = label[g.vertex_index(e.a)], lb = label[g.vertex_index(e.b)];
  if (la == lb) return std::nullopt;
  for (int l : label)
    if (l != la && l != lb) return std::nullopt;
  std::vector<VertexId> v1, v2;
  for (std::size_t i = 0; i < g.num_vertices(); ++i) (label[i] == la ? v1 : v2).push_back(g.vertices()[i]);
  std::vector<Edge> e1, e2;
  for (std::size_t k = 0; k < g.num_edges(); ++k) {
    if (k == *j) continue;
    const Edge& f = g.edges()[k];
    (label[g.vertex_index(f.a)] == la ? e1 : e2).push_back(f);
  }
  return std::make_pair(SimpleGraph(v1, e1), SimpleGraph(v2, e2));
}

std::string to_string(const SimpleGraph& g) {
  std::ostringstream os;
  os << "V={";
  for (std::size_t i = 0; i < g.num_vertices(); ++i) os << (i ? "," : "") << g.vertices()[i];
  os << "} E={";
  for (std::size_t i = 0; i < g.num_edges(); ++i) os << (i ? "," : "") << "{" << g.edges()[i].a << "," << g.edges()[i].b << "}";
  os << "}";
  return os.str();
}

}  // namespace edgering
