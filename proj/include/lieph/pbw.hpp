#pragma once

#include <map>
#include <mutex>
#include <string>
#include <unordered_map>
#include <utility>
#include <vector>

#include "lieph/lie_algebra.hpp"
#include "lieph/multiindex.hpp"
#include "lieph/rational.hpp"

namespace lieph {

/// Element of U(g) in PBW normal form: coefficient of x_1^{j_1} ... x_n^{j_n}
/// keyed by J.
class UEnvElement {
 public:
  using Terms = std::map<MultiIndex, Rational, GradedOrder>;

  UEnvElement() = default;
  explicit UEnvElement(std::size_t n) : n_(n) {}

  static UEnvElement one(std::size_t n) { return monomial(MultiIndex(n)); }
  static UEnvElement monomial(const MultiIndex& j, const Rational& c = 1);
  static UEnvElement generator(std::size_t n, std::size_t mu) { return monomial(MultiIndex::unit(n, mu)); }

  std::size_t nvars() const { return n_; }
  const Terms& terms() const { return terms_; }
  bool is_zero() const { return terms_.empty(); }
  /// Filtered degree; -1 for zero.
  int degree() const { return terms_.empty() ? -1 : terms_.rbegin()->first.degree(); }
  Rational coefficient(const MultiIndex& j) const;
  /// Coefficient of the unit monomial; this is the counit of U(g).
  Rational counit() const { return coefficient(MultiIndex(n_)); }

  void add_term(const MultiIndex& j, const Rational& c);
  UEnvElement& operator+=(const UEnvElement& o);
  UEnvElement& operator-=(const UEnvElement& o);
  UEnvElement& operator*=(const Rational& c);
  UEnvElement operator-() const { return UEnvElement(*this) *= Rational(-1); }
  friend UEnvElement operator+(UEnvElement a, const UEnvElement& b) { return a += b; }
  friend UEnvElement operator-(UEnvElement a, const UEnvElement& b) { return a -= b; }
  friend UEnvElement operator*(UEnvElement a, const Rational& c) { return a *= c; }
  friend UEnvElement operator*(const Rational& c, UEnvElement a) { return a *= c; }

  bool operator==(const UEnvElement& o) const { return terms_ == o.terms_; }
  bool operator!=(const UEnvElement& o) const { return !(*this == o); }

  /// e.g. "x1^2 x3 - 1/2*x2". `prefix` names the generators ("x" or "y").
  std::string render(const std::vector<std::string>& labels = {}, const std::string& prefix = "x") const;

 private:
  std::size_t n_ = 0;
  Terms terms_;
};

/// Text of one ordered monomial, "x1^2 x3"; empty for the unit.
std::string pbw_monomial_text(const MultiIndex& j, const std::vector<std::string>& labels, const std::string& prefix);

/// U(g) for a fixed Lie algebra: normal ordering with a memo of
/// (ordered monomial) * (generator) products. The memo is guarded by a mutex.
class EnvelopingAlgebra {
 public:
  explicit EnvelopingAlgebra(LieAlgebra lie) : lie_(std::move(lie)) {}

  const LieAlgebra& lie() const { return lie_; }
  std::size_t dim() const { return lie_.dim(); }

  /// x_J * x_mu in normal form.
  UEnvElement times_generator(const MultiIndex& j, std::size_t mu) const;
  /// x_J * x_mu for every term, linearly.
  UEnvElement times_generator(const UEnvElement& a, std::size_t mu) const;
  /// Normal form of x_{w_1} x_{w_2} ... x_{w_k}.
  UEnvElement word(const std::vector<std::size_t>& w) const;
  UEnvElement multiply(const UEnvElement& a, const UEnvElement& b) const;

 private:
  LieAlgebra lie_;
  mutable std::mutex memo_mutex_;
  struct KeyHash {
    std::size_t operator()(const std::pair<MultiIndex, std::size_t>& k) const { return k.first.hash() * 31 + k.second; }
  };
  mutable std::unordered_map<std::pair<MultiIndex, std::size_t>, UEnvElement, KeyHash> memo_;
};

UEnvElement u_multiply(const EnvelopingAlgebra& u, const UEnvElement& a, const UEnvElement& b);

struct PairOrder {
  bool operator()(const std::pair<MultiIndex, MultiIndex>& a, const std::pair<MultiIndex, MultiIndex>& b) const {
    GradedOrder lt;
    if (lt(a.first, b.first)) return true;
    if (lt(b.first, a.first)) return false;
    return lt(a.second, b.second);
  }
};

/// Element of U(g) (x) U(g): coefficient per pair of PBW monomials.
using UTensor = std::map<std::pair<MultiIndex, MultiIndex>, Rational, PairOrder>;

void add_to(UTensor& t, const MultiIndex& a, const MultiIndex& b, const Rational& c);

/// Delta(x_I) = sum_{I1 + I2 = I} binom(I, I1) x_{I1} (x) x_{I2}, extended linearly.
UTensor u_coproduct(const UEnvElement& a);
/// Componentwise product in U(g) (x) U(g).
UTensor u_tensor_multiply(const EnvelopingAlgebra& u, const UTensor& s, const UTensor& t);
/// Swaps the two factors.
UTensor u_tensor_flip(const UTensor& t);

/// The symmetrization map: (1/r!) sum over orderings of the letters of x_J.
UEnvElement symmetrize(const EnvelopingAlgebra& u, const MultiIndex& j);

}  // namespace lieph
