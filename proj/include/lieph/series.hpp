#pragma once

#include <map>
#include <string>
#include <vector>

#include "lieph/errors.hpp"
#include "lieph/lie_algebra.hpp"
#include "lieph/multiindex.hpp"
#include "lieph/rational.hpp"

namespace lieph {

/// A power series in the commuting variables d^1..d^n, known exactly through
/// total degree prec. prec == -1 means nothing is known.
class TruncatedSeries {
 public:
  using Terms = std::map<MultiIndex, Rational, GradedOrder>;

  TruncatedSeries() = default;
  TruncatedSeries(std::size_t n, int prec);

  static TruncatedSeries constant(std::size_t n, int prec, const Rational& c);
  static TruncatedSeries monomial(std::size_t n, int prec, const MultiIndex& k, const Rational& c = 1);
  /// d^i.
  static TruncatedSeries variable(std::size_t n, int prec, std::size_t i);

  std::size_t nvars() const { return n_; }
  int prec() const { return prec_; }
  const Terms& terms() const { return terms_; }
  std::size_t term_count() const { return terms_.size(); }
  bool is_zero() const { return terms_.empty(); }

  Rational coefficient(const MultiIndex& k) const;
  /// Adds c * d^K; silently dropped when |K| > prec.
  void add_term(const MultiIndex& k, const Rational& c);

  /// Forgets everything above degree p (p >= prec is a no-op).
  TruncatedSeries truncated(int p) const;
  /// Declares the stored terms exact through degree p. Only valid when the
  /// value is known to have no terms of degree in (prec, p], e.g. polynomials.
  TruncatedSeries with_exact_prec(int p) const;

  /// Lowest / highest degree of a stored term (-1 for the zero series).
  int min_degree() const;
  int max_degree() const;

  TruncatedSeries operator-() const;
  TruncatedSeries& operator+=(const TruncatedSeries& o);
  TruncatedSeries& operator-=(const TruncatedSeries& o);
  TruncatedSeries& operator*=(const Rational& c);

  /// Coefficients agree for all |K| <= p. Both operands must carry prec >= p.
  bool equal_at(const TruncatedSeries& o, int p) const;
  /// Equality at the common precision, which must also agree.
  bool operator==(const TruncatedSeries& o) const { return prec_ == o.prec_ && terms_ == o.terms_; }

  /// d/d(d^i); prec drops by one.
  TruncatedSeries formal_derivative(std::size_t i) const;
  /// d^i -> -d^i for every i.
  TruncatedSeries negate_variables() const;
  /// Constant term. Throws InsufficientPrecision when prec == -1.
  Rational eval_at_zero() const;

  /// Graded order, e.g. "1 + 1/2*d2 - d1^2*d3". Labels default to 1..n.
  std::string render(const std::vector<std::string>& labels = {}) const;

 private:
  void drop_zero(Terms::iterator it);

  std::size_t n_ = 0;
  int prec_ = -1;
  Terms terms_;
};

/// Result precision is min of the operand precisions.
TruncatedSeries operator+(TruncatedSeries a, const TruncatedSeries& b);
TruncatedSeries operator-(TruncatedSeries a, const TruncatedSeries& b);
TruncatedSeries operator*(const TruncatedSeries& a, const TruncatedSeries& b);
TruncatedSeries operator*(TruncatedSeries a, const Rational& c);
TruncatedSeries operator*(const Rational& c, TruncatedSeries a);

/// n x n matrix of series with a common precision. Entry (a, b) carries an
/// upper index a and a lower index b, so products contract lower with upper.
class MatrixSeries {
 public:
  MatrixSeries() = default;
  MatrixSeries(std::size_t n, int prec);

  static MatrixSeries identity(std::size_t n, int prec);

  std::size_t dim() const { return n_; }
  int prec() const { return prec_; }
  const TruncatedSeries& operator()(std::size_t a, std::size_t b) const { return e_[a * n_ + b]; }
  TruncatedSeries& operator()(std::size_t a, std::size_t b) { return e_[a * n_ + b]; }

  bool is_zero() const;
  MatrixSeries truncated(int p) const;

  MatrixSeries& operator+=(const MatrixSeries& o);
  MatrixSeries& operator-=(const MatrixSeries& o);
  MatrixSeries& operator*=(const Rational& c);
  friend MatrixSeries operator+(MatrixSeries a, const MatrixSeries& b) { return a += b; }
  friend MatrixSeries operator-(MatrixSeries a, const MatrixSeries& b) { return a -= b; }
  friend MatrixSeries operator*(MatrixSeries a, const Rational& c) { return a *= c; }
  friend MatrixSeries operator*(const MatrixSeries& a, const MatrixSeries& b);

  bool equal_at(const MatrixSeries& o, int p) const;
  /// First entry (a, b) where the two differ at precision p, if any.
  bool first_difference(const MatrixSeries& o, int p, std::size_t& a, std::size_t& b) const;

  /// One row per line, entries separated by " | ".
  std::string render(const std::vector<std::string>& labels = {}) const;

 private:
  void sync_prec();

  std::size_t n_ = 0;
  int prec_ = -1;
  std::vector<TruncatedSeries> e_;
};

/// C^a_b = C^a_{b g} d^g at precision N.
MatrixSeries c_matrix(const LieAlgebra& lie, int N);

/// phi = sum_m (-1)^m B_m / m! C^m, truncated at N.
MatrixSeries phi_matrix(const LieAlgebra& lie, int N, const BernoulliTable& bern = {});
/// phi~ = C / (e^C - 1): the phi series of the opposite algebra.
MatrixSeries phi_tilde_matrix(const LieAlgebra& lie, int N, const BernoulliTable& bern = {});
/// e^{sign * C}; sign must be +1 or -1.
MatrixSeries exp_c(const LieAlgebra& lie, int N, int sign);

/// sum_m coeff(m) X^m for m = 0..N, stopping early once a power vanishes.
template <class Coeff>
MatrixSeries matrix_power_series(const MatrixSeries& x, int N, Coeff coeff) {
  MatrixSeries out = MatrixSeries::identity(x.dim(), N) * coeff(0u);
  MatrixSeries power = MatrixSeries::identity(x.dim(), N);
  for (unsigned m = 1; m <= static_cast<unsigned>(N); ++m) {
    power = power * x;
    if (power.is_zero()) break;
    out += power * coeff(m);
  }
  return out;
}

/// The derivations D_mu with D_mu(d^b) = phi^b_mu, extended by Leibniz. A word
/// acts from the right: P <| (x_mu x_nu) = D_nu(D_mu(P)).
class DerivationAction {
 public:
  /// phi must be exact through at least the precision of any series acted on.
  explicit DerivationAction(MatrixSeries phi) : phi_(std::move(phi)) {}

  const MatrixSeries& phi() const { return phi_; }

  /// D_mu(P) at prec(P) - 1.
  TruncatedSeries apply(std::size_t mu, const TruncatedSeries& p) const;
  /// Applies the letters of the word left to right.
  TruncatedSeries apply_word(const std::vector<std::size_t>& word, const TruncatedSeries& p) const;

 private:
  MatrixSeries phi_;
};

/// P <| x_w for a word w. Requires prec(P) >= |w|; result prec prec(P) - |w|.
TruncatedSeries hopf_action_on_series(const LieAlgebra& lie, const std::vector<std::size_t>& word,
                                      const TruncatedSeries& p);

struct IdentityFailure {
  std::string identity;
  std::size_t row = 0, col = 0;
};

/// O O^-1 = I, phi~ = phi O^-1 and phi - phi~ = C through precision N. Returns
/// the first failure, if any.
std::vector<IdentityFailure> matrix_identities_check(const LieAlgebra& lie, int N, const BernoulliTable& bern = {});

}  // namespace lieph
