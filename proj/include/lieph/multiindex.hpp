#pragma once

#include <array>
#include <cstddef>
#include <cstdint>
#include <functional>
#include <initializer_list>
#include <string>
#include <vector>

#include "lieph/rational.hpp"

namespace lieph {

/// Hard ceiling on the number of generators; LieAlgebra enforces a (lower,
/// configurable) working bound on top of this.
inline constexpr std::size_t kMaxDim = 8;

/// K = (k_1, ..., k_n) with non-negative entries. Used both for PBW monomials
/// x^_K and for monomials d^K in the dual generators.
class MultiIndex {
 public:
  MultiIndex() = default;
  explicit MultiIndex(std::size_t n);
  MultiIndex(std::initializer_list<int> entries);
  explicit MultiIndex(const std::vector<int>& entries);

  static MultiIndex unit(std::size_t n, std::size_t i);

  std::size_t size() const { return n_; }
  int degree() const { return degree_; }
  int operator[](std::size_t i) const { return k_[i]; }
  void set(std::size_t i, int value);
  void increment(std::size_t i, int by = 1);

  bool is_zero() const { return degree_ == 0; }
  /// Componentwise K <= J.
  bool divides(const MultiIndex& other) const;

  Integer factorial() const;

  MultiIndex operator+(const MultiIndex& o) const;
  /// Componentwise difference; requires o <= *this.
  MultiIndex operator-(const MultiIndex& o) const;

  /// Letters of the ordered monomial: index i repeated k_i times, ascending.
  std::vector<std::size_t> word() const;

  bool operator==(const MultiIndex& o) const { return n_ == o.n_ && k_ == o.k_; }
  bool operator!=(const MultiIndex& o) const { return !(*this == o); }

  std::size_t hash() const;
  /// "(1,0,2)"
  std::string to_string() const;

 private:
  std::array<std::uint8_t, kMaxDim> k_{};
  std::uint8_t n_ = 0;
  int degree_ = 0;
};

/// Graded order: lower total degree first; inside a degree, larger exponents
/// on earlier variables first (so d1 < d2 < d1^2 < d1 d2 < d2^2).
struct GradedOrder {
  bool operator()(const MultiIndex& a, const MultiIndex& b) const;
};

struct MultiIndexHash {
  std::size_t operator()(const MultiIndex& k) const { return k.hash(); }
};

/// prod_i binom(k_i, k1_i). Throws std::invalid_argument unless k1 <= k.
Integer multiindex_binomial(const MultiIndex& k, const MultiIndex& k1);

/// All multiindices in n variables with |K| <= max_degree, in GradedOrder.
std::vector<MultiIndex> monomials_up_to(std::size_t n, int max_degree);

/// All multiindices with |K| == degree, in GradedOrder.
std::vector<MultiIndex> monomials_of_degree(std::size_t n, int degree);

/// All K1 with K1 <= K componentwise (K2 = K - K1 is the complement).
std::vector<MultiIndex> sub_multiindices(const MultiIndex& k);

}  // namespace lieph

template <>
struct std::hash<lieph::MultiIndex> {
  std::size_t operator()(const lieph::MultiIndex& k) const { return k.hash(); }
};
