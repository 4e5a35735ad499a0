#include "edgering/walks.hpp"

#include <algorithm>
#include <functional>
#include <map>
#include <set>
#include <stdexcept>

namespace edgering {

ClosedEvenWalk::ClosedEvenWalk(const SimpleGraph& g, std::vector<VertexId> vertices) {
  Walk w(g, std::move(vertices));
  if (!w.is_closed()) throw std::invalid_argument("walk is not closed");
  if (w.length() % 2 != 0) throw std::invalid_argument("walk has odd length");
  std::map<std::size_t, int> uses;
  for (std::size_t j : w.edge_ids())
    if (++uses[j] > 2) throw std::invalid_argument("walk uses an edge more than twice");
  vertices_ = w.vertices();
  edge_ids_ = w.edge_ids();
}

std::vector<std::size_t> ClosedEvenWalk::canonical_edges() const {
  const std::size_t n = edge_ids_.size();
  std::vector<std::size_t> best = edge_ids_;
  std::vector<std::size_t> cand(n);
  for (int dir = 0; dir < 2; ++dir) {
    for (std::size_t shift = 0; shift < n; ++shift) {
      for (std::size_t i = 0; i < n; ++i)
        cand[i] = dir == 0 ? edge_ids_[(shift + i) % n] : edge_ids_[(shift + n - i) % n];
      if (cand < best) best = cand;
    }
  }
  return best;
}

WalkBinomial walk_binomial(const SimpleGraph& g, const ClosedEvenWalk& w) {
  const auto n = static_cast<Eigen::Index>(g.num_edges());
  WalkBinomial f{Exponents::Zero(n), Exponents::Zero(n)};
  for (std::size_t i = 0; i < w.length(); ++i) {
    auto j = static_cast<Eigen::Index>(w.edge_ids()[i]);
    (i % 2 == 0 ? f.plus : f.minus)[j] += 1;
  }
  if (f.plus.sum() != f.minus.sum()) throw std::logic_error("walk binomial is not homogeneous");
  Eigen::MatrixXi m = incidence_matrix(g);
  if (!(m * (f.plus - f.minus)).isZero()) throw std::logic_error("walk binomial is not in the toric ideal");
  return f;
}

namespace {

bool dominates(const WalkBinomial& v, const WalkBinomial& w) {
  return (divides(v.plus, w.plus) && divides(v.minus, w.minus)) ||
         (divides(v.plus, w.minus) && divides(v.minus, w.plus));
}

bool same_binomial(const WalkBinomial& a, const WalkBinomial& b) {
  return (same_exponents(a.plus, b.plus) && same_exponents(a.minus, b.minus)) ||
         (same_exponents(a.plus, b.minus) && same_exponents(a.minus, b.plus));
}

}  // namespace

bool is_primitive(const SimpleGraph& g, const ClosedEvenWalk& w, const std::vector<ClosedEvenWalk>& all_walks) {
  WalkBinomial fw = walk_binomial(g, w);
  if (fw.is_zero()) return false;
  for (const ClosedEvenWalk& v : all_walks) {
    WalkBinomial fv = walk_binomial(g, v);
    if (fv.is_zero() || same_binomial(fv, fw)) continue;
    if (dominates(fv, fw)) return false;
  }
  return true;
}

std::vector<ClosedEvenWalk> enumerate_candidate_walks(const SimpleGraph& g) {
  const std::size_t n = g.num_edges();
  std::map<std::vector<std::size_t>, ClosedEvenWalk> found;
  std::vector<int> edge_uses(n, 0);
  std::map<VertexId, std::vector<std::size_t>> positions;
  std::vector<VertexId> seq;

  std::function<void(std::size_t)> extend = [&](std::size_t min_edge) {
    const std::size_t len = seq.size() - 1;
    if (len >= 2 * n) return;
    VertexId u = seq.back();
    for (std::size_t j : g.incident_edges(g.vertex_index(u))) {
      if (j < min_edge || edge_uses[j] >= 2) continue;
      VertexId v = g.edges()[j].other(u);
      const std::size_t pos = len + 1;
      if (v == seq.front() && pos % 2 == 0) {
        seq.push_back(v);
        ClosedEvenWalk w(g, seq);
        seq.pop_back();
        if (!walk_binomial(g, w).is_zero()) found.emplace(w.canonical_edges(), std::move(w));
        continue;
      }
      auto& occ = positions[v];
      if (occ.size() >= 2) continue;
      // A revisit after an even number of steps cuts out an even closed
      // sub-walk whose binomial divides this one.
      if (occ.size() == 1 && (pos - occ[0]) % 2 == 0) continue;
      occ.push_back(pos);
      ++edge_uses[j];
      seq.push_back(v);
      extend(min_edge);
      seq.pop_back();
      --edge_uses[j];
      positions[v].pop_back();
    }
  };

  for (std::size_t s = 0; s < n; ++s) {
    for (VertexId start : {g.edges()[s].a, g.edges()[s].b}) {
      VertexId next = g.edges()[s].other(start);
      positions.clear();
      seq = {start, next};
      positions[start].push_back(0);
      positions[next].push_back(1);
      edge_uses[s] = 1;
      extend(s);
      edge_uses[s] = 0;
    }
  }

  std::vector<ClosedEvenWalk> out;
  for (auto& [key, w] : found) out.push_back(std::move(w));
  std::stable_sort(out.begin(), out.end(),
                   [](const ClosedEvenWalk& a, const ClosedEvenWalk& b) { return a.length() < b.length(); });
  return out;
}

std::vector<ClosedEvenWalk> enumerate_primitive_walks(const SimpleGraph& g) {
  std::vector<ClosedEvenWalk> cands = enumerate_candidate_walks(g);
  std::vector<WalkBinomial> fs;
  fs.reserve(cands.size());
  for (const auto& w : cands) fs.push_back(walk_binomial(g, w));

  std::vector<ClosedEvenWalk> out;
  std::vector<WalkBinomial> kept;
  for (std::size_t i = 0; i < cands.size(); ++i) {
    bool primitive = true;
    for (std::size_t k = 0; k < cands.size() && primitive; ++k) {
      if (k == i || same_binomial(fs[k], fs[i])) continue;
      if (dominates(fs[k], fs[i])) primitive = false;
    }
    if (!primitive) continue;
    bool duplicate = std::any_of(kept.begin(), kept.end(), [&](const WalkBinomial& f) { return same_binomial(f, fs[i]); });
    if (duplicate) continue;
    kept.push_back(fs[i]);
    out.push_back(cands[i]);
  }
  return out;
}

ClosedEvenWalk contract_walk_image([[maybe_unused]] const SimpleGraph& g, const ClosedEvenWalk& w, const Walk& p,
                                   const ContractionResult& c) {
  if (p.length() % 2 != 0) throw std::invalid_argument("contracted path must be even");
  if (w.empty()) return {};
  const std::size_t len = w.length();
  std::set<std::size_t> p_edges(p.edge_ids().begin(), p.edge_ids().end());
  const std::vector<std::size_t>& we = w.edge_ids();
  const std::vector<VertexId>& wv = w.vertices();

  // Rotation start: the first edge of a run of p-edges, or 0 if there is none.
  std::size_t start = 0;
  bool touches = false;
  for (std::size_t i = 0; i < len; ++i) {
    if (p_edges.count(we[i]) && !p_edges.count(we[(i + len - 1) % len])) {
      start = i;
      touches = true;
      break;
    }
  }
  if (!touches && std::any_of(we.begin(), we.end(), [&](std::size_t j) { return p_edges.count(j) > 0; }))
    throw std::domain_error("walk runs entirely inside the contracted path");

  auto matches_p = [&](std::size_t at) {
    const std::size_t k = p.length();
    bool fwd = true, bwd = true;
    for (std::size_t t = 0; t < k; ++t) {
      std::size_t j = we[(at + t) % len];
      fwd = fwd && j == p.edge_ids()[t];
      bwd = bwd && j == p.edge_ids()[k - 1 - t];
    }
    return fwd || bwd;
  };

  std::vector<VertexId> out{c.chi.at(wv[start])};
  std::size_t i = 0;
  while (i < len) {
    std::size_t at = (start + i) % len;
    if (p_edges.count(we[at])) {
      if (!matches_p(at)) throw std::domain_error("walk uses only part of the contracted path");
      i += p.length();
      continue;
    }
    VertexId img = c.chi.at(wv[(at + 1) % len]);
    if (img == out.back()) throw std::domain_error("walk image collapses an edge to a loop");
    out.push_back(img);
    ++i;
  }
  if (out.size() <= 3) return {};
  return ClosedEvenWalk(c.graph, std::move(out));
}

ClosedEvenWalk lift_walk(const SimpleGraph& g, const ClosedEvenWalk& v, const Walk& p, const ContractionResult& c) {
  if (v.empty()) return {};
  const VertexId y = c.new_vertex;
  const VertexId x0 = p.front(), xt = p.back();
  auto n0 = neighbors(g, x0), nt = neighbors(g, xt);
  const std::vector<VertexId>& vs = v.vertices();
  const std::size_t len = v.length();

  std::vector<VertexId> out;
  for (std::size_t i = 0; i < len; ++i) {
    if (vs[i] != y) {
      out.push_back(vs[i]);
      continue;
    }
    VertexId before = vs[(i + len - 1) % len], after = vs[i + 1];
    if (n0.count(before) && n0.count(after)) {
      out.push_back(x0);
    } else if (nt.count(before) && nt.count(after)) {
      out.push_back(xt);
    } else if (n0.count(before) && nt.count(after)) {
      out.insert(out.end(), p.vertices().begin(), p.vertices().end());
    } else if (nt.count(before) && n0.count(after)) {
      out.insert(out.end(), p.vertices().rbegin(), p.vertices().rend());
    } else {
      throw std::domain_error("contracted vertex has a neighbour outside the path's endpoints");
    }
  }
  out.push_back(out.front());
  return ClosedEvenWalk(g, std::move(out));
}

BinomialIdeal walk_ideal(const SimpleGraph& g) {
  BinomialIdeal ideal;
  ideal.num_vars = g.num_edges();
  TermOrder ord = TermOrder::degrevlex(g.num_edges());
  for (const auto& w : enumerate_primitive_walks(g)) {
    WalkBinomial f = walk_binomial(g, w);
    if (auto b = Binomial::make(f.plus, f.minus, ord)) ideal.generators.push_back(*b);
  }
  return ideal;
}

}  // namespace edgering
