#include "edgering/binomial.hpp"

#include <algorithm>
#include <numeric>
#include <sstream>
#include <stdexcept>

namespace edgering {

bool same_exponents(const Exponents& a, const Exponents& b) { return a.size() == b.size() && a == b; }

bool exponents_less(const Exponents& a, const Exponents& b) {
  return std::lexicographical_compare(a.data(), a.data() + a.size(), b.data(), b.data() + b.size());
}

TermOrder::TermOrder(Kind kind, std::vector<std::size_t> priority) : kind_(kind), priority_(std::move(priority)) {
  std::vector<std::size_t> check = priority_;
  std::sort(check.begin(), check.end());
  for (std::size_t i = 0; i < check.size(); ++i)
    if (check[i] != i) throw std::invalid_argument("term order priority must be a permutation");
}

TermOrder TermOrder::lex(std::size_t n) {
  std::vector<std::size_t> p(n);
  std::iota(p.begin(), p.end(), 0);
  return TermOrder(Kind::lex, std::move(p));
}

TermOrder TermOrder::degrevlex(std::size_t n) {
  std::vector<std::size_t> p(n);
  std::iota(p.begin(), p.end(), 0);
  return TermOrder(Kind::degrevlex, std::move(p));
}

TermOrder TermOrder::degrevlex_last(std::size_t n, std::size_t last) {
  std::vector<std::size_t> p;
  for (std::size_t i = 0; i < n; ++i)
    if (i != last) p.push_back(i);
  p.push_back(last);
  return TermOrder(Kind::degrevlex, std::move(p));
}

std::strong_ordering TermOrder::compare(const Exponents& a, const Exponents& b) const {
  if (kind_ == Kind::lex) {
    for (std::size_t v : priority_) {
      auto i = static_cast<Eigen::Index>(v);
      if (a[i] != b[i]) return a[i] <=> b[i];
    }
    return std::strong_ordering::equal;
  }
  int da = a.sum(), db = b.sum();
  if (da != db) return da <=> db;
  for (auto it = priority_.rbegin(); it != priority_.rend(); ++it) {
    auto i = static_cast<Eigen::Index>(*it);
    if (a[i] != b[i]) return b[i] <=> a[i];
  }
  return std::strong_ordering::equal;
}

std::string TermOrder::describe() const {
  std::ostringstream os;
  os << (kind_ == Kind::lex ? "lex" : "degrevlex") << " ";
  for (std::size_t i = 0; i < priority_.size(); ++i) os << (i ? ">" : "") << "e" << priority_[i] + 1;
  return os.str();
}

std::optional<Binomial> Binomial::make(const Exponents& a, const Exponents& b, const TermOrder& ord) {
  auto c = ord.compare(a, b);
  if (c == 0) return std::nullopt;
  if (c > 0) return Binomial{a, b};
  return Binomial{b, a};
}

bool Binomial::equivalent(const Binomial& o) const {
  return (same_exponents(lead, o.lead) && same_exponents(trail, o.trail)) ||
         (same_exponents(lead, o.trail) && same_exponents(trail, o.lead));
}

// ---------------------------------------------------------------------------

namespace {

Exponents reduce_monomial(Exponents m, const std::vector<Binomial>& basis) {
  bool changed = true;
  while (changed) {
    changed = false;
    for (const Binomial& g : basis) {
      if (divides(g.lead, m)) {
        m += g.trail - g.lead;
        changed = true;
        break;
      }
    }
  }
  return m;
}

std::optional<Binomial> reduce(const Binomial& f, const std::vector<Binomial>& basis, const TermOrder& ord) {
  return Binomial::make(reduce_monomial(f.lead, basis), reduce_monomial(f.trail, basis), ord);
}

void sort_basis(std::vector<Binomial>& basis, const TermOrder& ord) {
  std::sort(basis.begin(), basis.end(), [&](const Binomial& x, const Binomial& y) {
    auto c = ord.compare(x.lead, y.lead);
    if (c != 0) return c < 0;
    return ord.compare(x.trail, y.trail) < 0;
  });
}

// Minimal leads, fully reduced trails.
std::vector<Binomial> reduce_basis(std::vector<Binomial> basis, const TermOrder& ord) {
  sort_basis(basis, ord);
  std::vector<Binomial> minimal;
  for (std::size_t i = 0; i < basis.size(); ++i) {
    bool redundant = false;
    for (std::size_t k = 0; k < basis.size() && !redundant; ++k) {
      if (k == i) continue;
      if (divides(basis[k].lead, basis[i].lead) && (!same_exponents(basis[k].lead, basis[i].lead) || k < i))
        redundant = true;
    }
    if (!redundant) minimal.push_back(basis[i]);
  }
  for (std::size_t i = 0; i < minimal.size(); ++i) {
    std::vector<Binomial> others;
    for (std::size_t k = 0; k < minimal.size(); ++k)
      if (k != i) others.push_back(minimal[k]);
    minimal[i].trail = reduce_monomial(minimal[i].trail, others);
  }
  sort_basis(minimal, ord);
  return minimal;
}

}  // namespace

Exponents normal_form(const Exponents& m, const BinomialIdeal& gb) {
  if (!gb.gb_order) throw std::logic_error("normal form needs a Gröbner basis");
  return reduce_monomial(m, gb.generators);
}

std::optional<Binomial> normal_form(const Binomial& f, const BinomialIdeal& gb) {
  if (!gb.gb_order) throw std::logic_error("normal form needs a Gröbner basis");
  return reduce(f, gb.generators, *gb.gb_order);
}

bool contains(const BinomialIdeal& gb, const Binomial& f) { return !normal_form(f, gb).has_value(); }

BinomialIdeal buchberger(const BinomialIdeal& ideal, const TermOrder& ord) {
  std::vector<Binomial> basis;
  for (const Binomial& f : ideal.generators)
    if (auto o = Binomial::make(f.lead, f.trail, ord)) basis.push_back(*o);

  struct Pair {
    std::size_t i, j;
    int degree;
  };
  std::vector<Pair> pairs;
  auto add_pairs_for = [&](std::size_t k) {
    for (std::size_t i = 0; i < k; ++i) pairs.push_back({i, k, total_degree(lcm(basis[i].lead, basis[k].lead))});
  };
  for (std::size_t k = 0; k < basis.size(); ++k) add_pairs_for(k);

  while (!pairs.empty()) {
    auto it = std::min_element(pairs.begin(), pairs.end(), [](const Pair& a, const Pair& b) { return a.degree < b.degree; });
    Pair pr = *it;
    *it = pairs.back();
    pairs.pop_back();

    const Binomial& f = basis[pr.i];
    const Binomial& g = basis[pr.j];
    // Coprime leading terms: the S-pair reduces to zero.
    if ((f.lead.array().min(g.lead.array()) == 0).all()) continue;
    Exponents l = lcm(f.lead, g.lead);
    Exponents left = l - f.lead + f.trail;
    Exponents right = l - g.lead + g.trail;
    auto s = Binomial::make(reduce_monomial(left, basis), reduce_monomial(right, basis), ord);
    if (!s) continue;
    basis.push_back(*s);
    add_pairs_for(basis.size() - 1);
  }

  BinomialIdeal out;
  out.num_vars = ideal.num_vars;
  out.generators = reduce_basis(std::move(basis), ord);
  out.gb_order = ord;
  return out;
}

BinomialIdeal saturate_variable(const BinomialIdeal& ideal, std::size_t j) {
  for (const Binomial& f : ideal.generators)
    if (!f.is_homogeneous()) throw std::invalid_argument("saturation expects homogeneous binomials");
  TermOrder ord = TermOrder::degrevlex_last(ideal.num_vars, j);
  BinomialIdeal gb = buchberger(ideal, ord);
  auto jj = static_cast<Eigen::Index>(j);
  for (Binomial& f : gb.generators) {
    int k = std::min(f.lead[jj], f.trail[jj]);
    f.lead[jj] -= k;
    f.trail[jj] -= k;
  }
  return buchberger(gb, ord);
}

Eigen::Matrix<long long, Eigen::Dynamic, Eigen::Dynamic> integer_kernel(const Eigen::MatrixXi& m) {
  using LMat = Eigen::Matrix<long long, Eigen::Dynamic, Eigen::Dynamic>;
  const Eigen::Index rows = m.rows(), cols = m.cols();
  LMat a = m.cast<long long>();
  LMat u = LMat::Identity(cols, cols);
  Eigen::Index pivot = 0;
  for (Eigen::Index i = 0; i < rows && pivot < cols; ++i) {
    while (true) {
      Eigen::Index best = -1;
      for (Eigen::Index k = pivot; k < cols; ++k)
        if (a(i, k) != 0 && (best < 0 || std::llabs(a(i, k)) < std::llabs(a(i, best)))) best = k;
      if (best < 0) break;
      a.col(pivot).swap(a.col(best));
      u.col(pivot).swap(u.col(best));
      bool clean = true;
      for (Eigen::Index k = pivot + 1; k < cols; ++k) {
        if (a(i, k) == 0) continue;
        long long q = a(i, k) / a(i, pivot);
        a.col(k) -= q * a.col(pivot);
        u.col(k) -= q * u.col(pivot);
        if (a(i, k) != 0) clean = false;
      }
      if (clean) {
        ++pivot;
        break;
      }
    }
  }
  return u.rightCols(cols - pivot);
}

BinomialIdeal toric_ideal(const SimpleGraph& g) { return toric_ideal(g, TermOrder::degrevlex(g.num_edges())); }

BinomialIdeal toric_ideal(const SimpleGraph& g, const TermOrder& ord) {
  const std::size_t n = g.num_edges();
  auto kernel = integer_kernel(incidence_matrix(g));
  BinomialIdeal ideal;
  ideal.num_vars = n;
  TermOrder base = TermOrder::degrevlex(n);
  for (Eigen::Index c = 0; c < kernel.cols(); ++c) {
    Exponents plus = Exponents::Zero(static_cast<Eigen::Index>(n));
    Exponents minus = Exponents::Zero(static_cast<Eigen::Index>(n));
    for (Eigen::Index k = 0; k < kernel.rows(); ++k) {
      long long v = kernel(k, c);
      if (v > 0) plus[k] = static_cast<int>(v);
      if (v < 0) minus[k] = static_cast<int>(-v);
    }
    if (auto b = Binomial::make(plus, minus, base)) ideal.generators.push_back(*b);
  }
  for (std::size_t j = 0; j < n && !ideal.generators.empty(); ++j) ideal = saturate_variable(ideal, j);
  return buchberger(ideal, ord);
}

std::vector<Exponents> minimalize_monomials(std::vector<Exponents> gens) {
  std::sort(gens.begin(), gens.end(), [](const Exponents& a, const Exponents& b) {
    if (a.sum() != b.sum()) return a.sum() < b.sum();
    return exponents_less(a, b);
  });
  std::vector<Exponents> out;
  for (const Exponents& m : gens) {
    bool redundant = false;
    for (const Exponents& k : out)
      if (divides(k, m)) {
        redundant = true;
        break;
      }
    if (!redundant) out.push_back(m);
  }
  return out;
}

std::vector<Exponents> initial_ideal(const BinomialIdeal& gb) {
  if (!gb.gb_order) throw std::logic_error("initial ideal needs a Gröbner basis");
  std::vector<Exponents> leads;
  for (const Binomial& f : gb.generators) leads.push_back(f.lead);
  return minimalize_monomials(std::move(leads));
}

std::vector<Binomial> minimal_generators(const BinomialIdeal& ideal) {
  std::vector<Binomial> candidates = ideal.generators;
  std::stable_sort(candidates.begin(), candidates.end(),
                   [](const Binomial& a, const Binomial& b) { return total_degree(a.lead) < total_degree(b.lead); });
  TermOrder ord = TermOrder::degrevlex(ideal.num_vars);
  BinomialIdeal kept;
  kept.num_vars = ideal.num_vars;
  BinomialIdeal kept_gb = buchberger(kept, ord);
  for (const Binomial& f : candidates) {
    if (contains(kept_gb, f)) continue;
    kept.generators.push_back(f);
    kept_gb = buchberger(kept, ord);
  }
  return kept.generators;
}

bool generators_reduce_to_zero(const BinomialIdeal& a, const BinomialIdeal& b_gb) {
  return std::all_of(a.generators.begin(), a.generators.end(), [&](const Binomial& f) { return contains(b_gb, f); });
}

std::string monomial_to_string(const Exponents& m) {
  std::ostringstream os;
  bool first = true;
  for (Eigen::Index i = 0; i < m.size(); ++i) {
    if (m[i] == 0) continue;
    os << (first ? "" : "*") << "e" << i + 1;
    if (m[i] > 1) os << "^" << m[i];
    first = false;
  }
  if (first) os << "1";
  return os.str();
}

std::string to_string(const Binomial& f) { return monomial_to_string(f.lead) + " - " + monomial_to_string(f.trail); }

}  // namespace edgering
