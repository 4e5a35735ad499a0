// Exact rank of sparse matrices over a prime field or over Q.
#ifndef EDGERING_FIELD_HPP
#define EDGERING_FIELD_HPP

#include <algorithm>
#include <cstdint>
#include <optional>
#include <string>
#include <unordered_map>
#include <utility>
#include <vector>

#include <boost/multiprecision/cpp_int.hpp>

namespace edgering {

/// Which coefficient field homology and Koszul ranks are taken over.
struct FieldSpec {
  /// nullopt selects exact rational arithmetic.
  std::optional<std::uint32_t> prime = 32003;

  static FieldSpec gf(std::uint32_t p) { return FieldSpec{p}; }
  static FieldSpec rationals() { return FieldSpec{std::nullopt}; }
  bool is_exact() const { return !prime.has_value(); }
  std::string describe() const { return prime ? "GF(" + std::to_string(*prime) + ")" : "QQ"; }
  bool operator==(const FieldSpec&) const = default;
};

struct PrimeField {
  using value_type = std::uint32_t;
  std::uint32_t p;

  value_type from_int(long v) const {
    long r = v % static_cast<long>(p);
    return static_cast<value_type>(r < 0 ? r + static_cast<long>(p) : r);
  }
  bool is_zero(value_type a) const { return a == 0; }
  value_type sub(value_type a, value_type b) const { return a >= b ? a - b : a + p - b; }
  value_type mul(value_type a, value_type b) const {
    return static_cast<value_type>(static_cast<std::uint64_t>(a) * b % p);
  }
  value_type inv(value_type a) const {
    // Fermat: a^(p-2).
    std::uint64_t result = 1, base = a, e = p - 2;
    while (e) {
      if (e & 1) result = result * base % p;
      base = base * base % p;
      e >>= 1;
    }
    return static_cast<value_type>(result);
  }
};

struct RationalField {
  using value_type = boost::multiprecision::cpp_rational;

  value_type from_int(long v) const { return value_type(v); }
  bool is_zero(const value_type& a) const { return a == 0; }
  value_type sub(const value_type& a, const value_type& b) const { return a - b; }
  value_type mul(const value_type& a, const value_type& b) const { return a * b; }
  value_type inv(const value_type& a) const { return value_type(1) / a; }
};

/// Column-major sparse integer matrix: each column lists (row, value).
struct SparseIntMatrix {
  std::size_t rows = 0;
  std::vector<std::vector<std::pair<std::size_t, int>>> columns;
};

/// Rank by column reduction on lowest nonzero row ("pivot low"), the way
/// persistence software reduces boundary matrices.
template <class Field>
std::size_t sparse_rank(const SparseIntMatrix& m, const Field& field) {
  using V = typename Field::value_type;
  using Column = std::vector<std::pair<std::size_t, V>>;  // sorted by row
  std::unordered_map<std::size_t, Column> pivots;          // low row -> reduced column
  std::size_t rank = 0;
  Column col, merged;
  for (const auto& raw : m.columns) {
    col.clear();
    for (auto [r, v] : raw) {
      V fv = field.from_int(v);
      if (!field.is_zero(fv)) col.emplace_back(r, fv);
    }
    std::sort(col.begin(), col.end(), [](const auto& a, const auto& b) { return a.first < b.first; });
    while (!col.empty()) {
      auto it = pivots.find(col.back().first);
      if (it == pivots.end()) break;
      const Column& piv = it->second;
      V factor = field.mul(col.back().second, field.inv(piv.back().second));
      merged.clear();
      std::size_t a = 0, b = 0;
      while (a < col.size() || b < piv.size()) {
        if (b == piv.size() || (a < col.size() && col[a].first < piv[b].first)) {
          merged.push_back(col[a++]);
        } else if (a == col.size() || piv[b].first < col[a].first) {
          merged.emplace_back(piv[b].first, field.sub(field.from_int(0), field.mul(factor, piv[b].second)));
          ++b;
        } else {
          V v = field.sub(col[a].second, field.mul(factor, piv[b].second));
          if (!field.is_zero(v)) merged.emplace_back(col[a].first, v);
          ++a;
          ++b;
        }
      }
      std::swap(col, merged);
    }
    if (!col.empty()) {
      ++rank;
      std::size_t low = col.back().first;
      pivots.emplace(low, col);
    }
  }
  return rank;
}

inline std::size_t sparse_rank(const SparseIntMatrix& m, const FieldSpec& spec) {
  if (spec.prime) return sparse_rank(m, PrimeField{*spec.prime});
  return sparse_rank(m, RationalField{});
}

}  // namespace edgering

#endif  // EDGERING_FIELD_HPP
