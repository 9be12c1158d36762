#pragma once

#include <map>
#include <memory>
#include <mutex>
#include <string>
#include <vector>

#include "lieph/pbw.hpp"
#include "lieph/report.hpp"
#include "lieph/series.hpp"
#include "lieph/weyl.hpp"

namespace lieph {

/// Which generators sit on the left of the normal form: X means
/// sum_J x^_J P_J(d) (the H^L picture), Y means sum_J y^_J Q_J(d) with the
/// y^_J ordered PBW monomials of U(g^R) (the H^R picture).
enum class Side { X, Y };

inline Side other(Side s) { return s == Side::X ? Side::Y : Side::X; }

/// Element of the phase space in one of the two normal forms.
class PhaseElement {
 public:
  using Terms = WeylElement::Terms;

  PhaseElement() = default;
  PhaseElement(Side side, std::size_t n, int prec) : side_(side), body_(n, prec) {}
  PhaseElement(Side side, WeylElement body) : side_(side), body_(std::move(body)) {}

  /// Generators-only element (constant series) at precision prec.
  static PhaseElement from_u(Side side, const UEnvElement& u, int prec);
  static PhaseElement from_series(Side side, const TruncatedSeries& p);

  Side side() const { return side_; }
  std::size_t nvars() const { return body_.nvars(); }
  int prec() const { return body_.prec(); }
  const Terms& terms() const { return body_.terms(); }
  const WeylElement& body() const { return body_; }
  bool is_zero() const { return body_.is_zero(); }
  /// Degree in the left generators.
  int gen_degree() const { return body_.x_degree(); }
  TruncatedSeries coefficient(const MultiIndex& j) const { return body_.coefficient(j); }

  void add_term(const MultiIndex& j, const TruncatedSeries& p) { body_.add_term(j, p); }
  PhaseElement truncated(int p) const { return {side_, body_.truncated(p)}; }

  PhaseElement& operator+=(const PhaseElement& o);
  PhaseElement& operator-=(const PhaseElement& o);
  PhaseElement& operator*=(const Rational& c);
  friend PhaseElement operator+(PhaseElement a, const PhaseElement& b) { return a += b; }
  friend PhaseElement operator-(PhaseElement a, const PhaseElement& b) { return a -= b; }
  friend PhaseElement operator*(PhaseElement a, const Rational& c) { return a *= c; }

  /// Same side required.
  bool equal_at(const PhaseElement& o, int p) const;

  /// Sum of eps(P_J) g_J over the left generators g: the d-degree-0 part.
  UEnvElement degree_zero_part() const;

  /// "x1^2 x3 * (1/2*d2 + d1*d3) + ..." (y-prefix on the Y side).
  std::string render(const std::vector<std::string>& labels = {}) const;

 private:
  Side side_ = Side::X;
  WeylElement body_;
};

/// U(g) # S^(g*) for one Lie algebra, with right Hopf action given by the
/// derivations D_mu. The Y normal form is this construction for g^R.
class SmashAlgebra {
 public:
  SmashAlgebra(LieAlgebra lie, BernoulliTable bern = {});

  const LieAlgebra& lie() const { return u_.lie(); }
  std::size_t dim() const { return u_.dim(); }
  const EnvelopingAlgebra& u() const { return u_; }

  /// Derivation table valid for series of precision <= p + 1.
  std::shared_ptr<const DerivationAction> action(int p) const;

  /// x_J x_K in normal form, memoized.
  const UEnvElement& monomial_product(const MultiIndex& j, const MultiIndex& k) const;

  /// (x_J P)(x_K Q) = sum_{K1 + K2 = K} binom(K, K1) x_J x_K1 (P <| x_K2) Q;
  /// prec = min(prec a - deg_x b, prec b).
  WeylElement multiply(const WeylElement& a, const WeylElement& b) const;

 private:
  EnvelopingAlgebra u_;
  BernoulliTable bern_;
  mutable std::mutex mutex_;
  mutable std::shared_ptr<const DerivationAction> action_;
  mutable std::map<std::pair<MultiIndex, MultiIndex>, UEnvElement, PairOrder> products_;
};

/// The phase space H with both normal forms, the dictionary between them,
/// the source/target maps and the black actions.
class PhaseSpace {
 public:
  explicit PhaseSpace(LieAlgebra lie, BernoulliTable bern = {});

  const LieAlgebra& lie() const { return left_.lie(); }
  std::size_t dim() const { return left_.dim(); }
  const std::vector<std::string>& labels() const { return left_.lie().labels(); }
  const SmashAlgebra& algebra(Side s) const { return s == Side::X ? left_ : right_; }
  /// U(g) (generators x^) and U(g^R) (generators y^).
  const EnvelopingAlgebra& u_left() const { return left_.u(); }
  const EnvelopingAlgebra& u_right() const { return right_.u(); }

  MatrixSeries O(int p) const;
  MatrixSeries Oinv(int p) const;

  PhaseElement one(int p, Side s = Side::X) const;
  PhaseElement x(std::size_t mu, int p) const;
  PhaseElement y(std::size_t mu, int p) const;
  PhaseElement d(std::size_t mu, int p, Side s = Side::X) const;
  PhaseElement series(const TruncatedSeries& q, Side s = Side::X) const { return PhaseElement::from_series(s, q); }
  PhaseElement O_entry(std::size_t a, std::size_t b, int p, Side s = Side::X) const;
  PhaseElement Oinv_entry(std::size_t a, std::size_t b, int p, Side s = Side::X) const;
  /// z^_a = O^b_a y^_b.
  PhaseElement z(std::size_t a, int p, Side s = Side::Y) const;

  /// Product; b is converted to a's side first when needed.
  PhaseElement multiply(const PhaseElement& a, const PhaseElement& b) const;
  PhaseElement commutator(const PhaseElement& a, const PhaseElement& b) const;

  /// x^_nu -> y^_s O^s_nu, d -> d.
  PhaseElement x_to_y(const PhaseElement& h) const;
  /// y^_nu -> x^_r (O^-1)^r_nu, d -> d.
  PhaseElement y_to_x(const PhaseElement& h) const;
  PhaseElement to_side(const PhaseElement& h, Side s) const;

  /// Inclusion U(g) -> H (X side).
  PhaseElement alpha_L(const UEnvElement& f, int p) const;
  /// Antihomomorphism with x^_mu -> y^_mu; X side.
  PhaseElement beta_L(const UEnvElement& f, int p) const;
  /// Inclusion U(g^R) -> H (Y side).
  PhaseElement alpha_R(const UEnvElement& u, int p) const;
  /// Antihomomorphism with y^_a -> z^_a; Y side.
  PhaseElement beta_R(const UEnvElement& u, int p) const;

  /// h |> f: multiply by f on the right in X form, keep the d-degree-0 part.
  UEnvElement black_left(const PhaseElement& h, const UEnvElement& f) const;
  /// u <| h in U(g^R): multiply by u on the left, move series to the left,
  /// evaluate them at 0.
  UEnvElement black_right(const UEnvElement& u, const PhaseElement& h) const;
  /// eps_S # id applied to a Y-form element (series moved to the left).
  UEnvElement series_left_counit(const PhaseElement& h) const;

  UEnvElement counit_L(const PhaseElement& h) const;
  UEnvElement counit_R(const PhaseElement& h) const;

 private:
  /// Image in the `target` normal form of the other side's ordered monomial
  /// g_J, at precision p.
  const PhaseElement& monomial_image(Side target, const MultiIndex& j, int p) const;
  PhaseElement convert(const PhaseElement& h, Side target) const;

  struct ImageKeyOrder {
    bool operator()(const std::pair<MultiIndex, int>& a, const std::pair<MultiIndex, int>& b) const {
      if (a.second != b.second) return a.second < b.second;
      return GradedOrder()(a.first, b.first);
    }
  };

  SmashAlgebra left_, right_;
  BernoulliTable bern_;
  mutable std::mutex mutex_;
  mutable std::map<int, MatrixSeries> o_, oinv_;
  mutable std::map<std::pair<MultiIndex, int>, PhaseElement, ImageKeyOrder> images_[2];
};

/// Theorem-1 families: [O, y], [O, x], [O^-1, x], [O^-1, y], the quadratic
/// relations, [x, y] = 0, and the dictionary being an algebra isomorphism.
Report check_theorem1(const PhaseSpace& ps, int N);
/// The |> identities for PBW monomials f, g of degree <= maxdeg.
Report check_theorem2(const PhaseSpace& ps, int N, int maxdeg);
/// The mirrored <| identities on the y^ side.
Report check_theorem3(const PhaseSpace& ps, int N, int maxdeg);
/// beta^L(g) |> f = f g and u <| beta^R(v) = v u.
Report check_beta_black(const PhaseSpace& ps, int N, int maxdeg);

}  // namespace lieph
