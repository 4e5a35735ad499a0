// Pure-difference binomial ideals in K[e_1, ..., e_n]: Buchberger,
// saturation, the lattice construction of toric ideals, normal forms and
// initial ideals.
//
// Every element is x^a - x^b with coefficients +1/-1. S-polynomials and
// reductions of such binomials are again of that shape (or zero), so the
// whole engine is exact over any field without ever touching coefficients.
#ifndef EDGERING_BINOMIAL_HPP
#define EDGERING_BINOMIAL_HPP

#include <compare>
#include <cstddef>
#include <optional>
#include <string>
#include <vector>

#include <Eigen/Dense>

#include "edgering/graph.hpp"

namespace edgering {

/// Exponent vector of a monomial of K[E], indexed by edge.
using Exponents = Eigen::VectorXi;

inline bool divides(const Exponents& a, const Exponents& b) { return (a.array() <= b.array()).all(); }
inline Exponents lcm(const Exponents& a, const Exponents& b) { return a.cwiseMax(b); }
inline int total_degree(const Exponents& a) { return a.sum(); }
bool same_exponents(const Exponents& a, const Exponents& b);
/// Plain lexicographic comparison of exponent vectors, used for sorting.
bool exponents_less(const Exponents& a, const Exponents& b);

class TermOrder {
 public:
  enum class Kind { lex, degrevlex };

  TermOrder() = default;
  /// `priority[0]` is the most significant variable.
  TermOrder(Kind kind, std::vector<std::size_t> priority);

  static TermOrder lex(std::size_t n);
  static TermOrder degrevlex(std::size_t n);
  /// degrevlex with canonical priority except that `last` is least.
  static TermOrder degrevlex_last(std::size_t n, std::size_t last);

  Kind kind() const { return kind_; }
  const std::vector<std::size_t>& priority() const { return priority_; }
  std::size_t num_vars() const { return priority_.size(); }

  std::strong_ordering compare(const Exponents& a, const Exponents& b) const;
  bool greater(const Exponents& a, const Exponents& b) const { return compare(a, b) > 0; }

  std::string describe() const;

 private:
  Kind kind_ = Kind::degrevlex;
  std::vector<std::size_t> priority_;
};

/// lead - trail with lead > trail in the order it was built for.
struct Binomial {
  Exponents lead;
  Exponents trail;

  /// nullopt when a == b (the zero binomial).
  static std::optional<Binomial> make(const Exponents& a, const Exponents& b, const TermOrder& ord);

  bool is_homogeneous() const { return total_degree(lead) == total_degree(trail); }
  /// Same binomial up to sign.
  bool equivalent(const Binomial& o) const;
};

struct BinomialIdeal {
  std::size_t num_vars = 0;
  std::vector<Binomial> generators;
  /// Set when `generators` is the reduced Gröbner basis for this order.
  std::optional<TermOrder> gb_order;

  bool is_zero() const { return generators.empty(); }
};

/// Reduces a monomial to its standard monomial; throws std::logic_error if
/// `gb` carries no Gröbner basis.
Exponents normal_form(const Exponents& m, const BinomialIdeal& gb);
/// nullopt iff f reduces to zero, i.e. f lies in the ideal.
std::optional<Binomial> normal_form(const Binomial& f, const BinomialIdeal& gb);
bool contains(const BinomialIdeal& gb, const Binomial& f);

/// Reduced Gröbner basis of the ideal generated by `ideal.generators`.
BinomialIdeal buchberger(const BinomialIdeal& ideal, const TermOrder& ord);
/// I : e_j^oo for an ideal generated by homogeneous binomials.
BinomialIdeal saturate_variable(const BinomialIdeal& ideal, std::size_t j);

/// Z-basis of the integer kernel of `m`, one basis vector per column.
Eigen::Matrix<long long, Eigen::Dynamic, Eigen::Dynamic> integer_kernel(const Eigen::MatrixXi& m);

/// I_G as the saturation of the lattice-basis ideal of ker M_G, returned as
/// a reduced Gröbner basis in `ord` (default: degrevlex, canonical priority).
BinomialIdeal toric_ideal(const SimpleGraph& g);
BinomialIdeal toric_ideal(const SimpleGraph& g, const TermOrder& ord);

/// Minimal monomial generators of in(I).
std::vector<Exponents> initial_ideal(const BinomialIdeal& gb);

/// A minimal generating set picked greedily degree by degree from the
/// generators of `ideal`.
std::vector<Binomial> minimal_generators(const BinomialIdeal& ideal);

/// Each generator of `a` lies in `b_gb` (a Gröbner basis).
bool generators_reduce_to_zero(const BinomialIdeal& a, const BinomialIdeal& b_gb);

/// Minimal monomial generating set of the given monomials.
std::vector<Exponents> minimalize_monomials(std::vector<Exponents> gens);

std::string monomial_to_string(const Exponents& m);
std::string to_string(const Binomial& f);

}  // namespace edgering

#endif  // EDGERING_BINOMIAL_HPP
