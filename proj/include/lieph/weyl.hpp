#pragma once

#include <map>
#include <string>
#include <vector>

#include "lieph/lie_algebra.hpp"
#include "lieph/pbw.hpp"
#include "lieph/report.hpp"
#include "lieph/series.hpp"

namespace lieph {

/// Element of the completed Weyl algebra, normal ordered: sum_J x_J P_J(d)
/// with a common precision for the series P_J.
class WeylElement {
 public:
  using Terms = std::map<MultiIndex, TruncatedSeries, GradedOrder>;

  WeylElement() = default;
  WeylElement(std::size_t n, int prec) : n_(n), prec_(prec) {}

  static WeylElement series(const TruncatedSeries& p);
  /// x_J at precision prec.
  static WeylElement x_monomial(const MultiIndex& j, int prec, const Rational& c = 1);

  std::size_t nvars() const { return n_; }
  int prec() const { return prec_; }
  const Terms& terms() const { return terms_; }
  bool is_zero() const { return terms_.empty(); }
  int x_degree() const { return terms_.empty() ? 0 : terms_.rbegin()->first.degree(); }
  TruncatedSeries coefficient(const MultiIndex& j) const;

  /// Adds x_J * p; p is truncated to the element's precision.
  void add_term(const MultiIndex& j, const TruncatedSeries& p);
  WeylElement truncated(int p) const;

  WeylElement& operator+=(const WeylElement& o);
  WeylElement& operator-=(const WeylElement& o);
  WeylElement& operator*=(const Rational& c);
  friend WeylElement operator+(WeylElement a, const WeylElement& b) { return a += b; }
  friend WeylElement operator-(WeylElement a, const WeylElement& b) { return a -= b; }

  bool equal_at(const WeylElement& o, int p) const;

  /// e.g. "x1^2 x3 * (1/2*d2 + d1*d3)"; `prefix` names the left generators.
  std::string render(const std::vector<std::string>& labels = {}, const std::string& prefix = "x") const;

 private:
  std::size_t n_ = 0;
  int prec_ = -1;
  Terms terms_;
};

/// Normal form of a*b. Moving d-series of a past the x's of b differentiates
/// them, so prec = min(prec a - x_degree b, prec b).
WeylElement weyl_multiply(const WeylElement& a, const WeylElement& b);
WeylElement weyl_commutator(const WeylElement& a, const WeylElement& b);

/// Images of the generators: x_rho phi^rho_nu (or phi~), at precision N.
std::vector<WeylElement> realization_generators(const LieAlgebra& lie, int N, bool tilde,
                                                const BernoulliTable& bern = {});

/// Image of a PBW element under x^_nu -> x_rho phi^rho_nu. Needs N >= deg a;
/// result precision N - deg a.
WeylElement phi_realize(const LieAlgebra& lie, int N, const UEnvElement& a, const BernoulliTable& bern = {});
/// Same with phi~, i.e. the y^-generators.
WeylElement phi_tilde_realize(const LieAlgebra& lie, int N, const UEnvElement& a, const BernoulliTable& bern = {});

/// Action on polynomials in x (x multiplies, d^i differentiates in x_i).
/// Needs prec >= degree of the polynomial.
std::map<MultiIndex, Rational, GradedOrder> fock_action(const WeylElement& w,
                                                        const std::map<MultiIndex, Rational, GradedOrder>& poly);

/// [X_mu, X_nu] = C^la_{mu nu} X_la for the phi-realization, through N-1.
Report check_realization_bracket(const LieAlgebra& lie, int N, const BernoulliTable& bern = {});
/// [X_mu, Y_nu] = 0 for the phi and phi~ realizations, through N-1.
Report check_xy_commute(const LieAlgebra& lie, int N, const BernoulliTable& bern = {});
/// [delta_rho (C^N)^g_mu] C^rho_nu - (delta_rho C^g_nu)(C^N)^rho_mu = C^s_{mu nu} (C^N)^g_s
/// for N = 0..maxN, exactly, as polynomial matrices.
Report check_ccn_identity(const LieAlgebra& lie, int maxN);

}  // namespace lieph
