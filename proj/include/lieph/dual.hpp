#pragma once

#include <map>
#include <string>
#include <utility>
#include <vector>

#include "lieph/phase.hpp"

namespace lieph {

using PairMap = std::map<std::pair<MultiIndex, MultiIndex>, Rational, PairOrder>;

/// <u, P> = eps(P <| u). Needs prec(P) >= deg u.
Rational hopf_pairing(const LieAlgebra& lie, const UEnvElement& u, const TruncatedSeries& p,
                      const BernoulliTable& bern = {});

/// <x_M, P> for every PBW monomial with |M| <= max_degree. Needs prec(P) >= max_degree.
std::map<MultiIndex, Rational, GradedOrder> pairing_values(const DerivationAction& act, const TruncatedSeries& p,
                                                            int max_degree);

/// Dual basis d^{K} at level r, with <d^{K}, x_J> = K! delta for |K|, |J| <= r,
/// and the change of basis d^J = sum_{|K| >= |J|} d_{K,J} d^{K}.
struct DualBasisTable {
  std::size_t n = 0;
  int level = 0;
  std::vector<MultiIndex> monomials;
  /// G(I, J) = <x_I, d^J>
  PairMap gram;
  std::map<MultiIndex, TruncatedSeries, GradedOrder> basis;
  PairMap change;

  const TruncatedSeries& operator[](const MultiIndex& k) const { return basis.at(k); }
  Rational d(const MultiIndex& k, const MultiIndex& j) const;
};

DualBasisTable dual_basis(const LieAlgebra& lie, int r, const BernoulliTable& bern = {});

/// Element of S^ (x) S^ in the monomial basis d^A (x) d^B, each slot known
/// through degree prec.
class SeriesTensor {
 public:
  SeriesTensor() = default;
  SeriesTensor(std::size_t n, int prec) : n_(n), prec_(prec) {}

  static SeriesTensor outer(const TruncatedSeries& a, const TruncatedSeries& b);

  std::size_t nvars() const { return n_; }
  int prec() const { return prec_; }
  const PairMap& terms() const { return terms_; }
  bool is_zero() const { return terms_.empty(); }
  Rational coefficient(const MultiIndex& a, const MultiIndex& b) const;

  void add_term(const MultiIndex& a, const MultiIndex& b, const Rational& c);
  SeriesTensor truncated(int p) const;
  SeriesTensor flipped() const;

  SeriesTensor& operator+=(const SeriesTensor& o);
  SeriesTensor& operator-=(const SeriesTensor& o);
  SeriesTensor& operator*=(const Rational& c);
  friend SeriesTensor operator+(SeriesTensor a, const SeriesTensor& b) { return a += b; }
  friend SeriesTensor operator-(SeriesTensor a, const SeriesTensor& b) { return a -= b; }
  friend SeriesTensor operator*(SeriesTensor a, const Rational& c) { return a *= c; }
  /// Slotwise product.
  friend SeriesTensor operator*(const SeriesTensor& a, const SeriesTensor& b);

  bool equal_at(const SeriesTensor& o, int p) const;
  /// (eps (x) id) and (id (x) eps).
  TruncatedSeries counit_left() const;
  TruncatedSeries counit_right() const;

  std::string render(const std::vector<std::string>& labels = {}) const;

 private:
  std::size_t n_ = 0;
  int prec_ = -1;
  PairMap terms_;
};

/// Coproduct of S^(g*) through the pairing: coefficients c_{JK} of
/// d^{J} (x) d^{K} and the expansion in monomials.
struct SeriesCoproduct {
  PairMap slots;
  SeriesTensor tensor;
};

/// Delta(P) = sum_{|J|,|K| <= N} <x_J x_K, P> / (J! K!) d^{J} (x) d^{K}.
/// Needs prec(P) >= 2N; slots are exact through degree N.
SeriesCoproduct s_coproduct(const LieAlgebra& lie, int N, const TruncatedSeries& p, const BernoulliTable& bern = {});
/// Same, reusing a dual basis of level >= N.
SeriesCoproduct s_coproduct(const EnvelopingAlgebra& u, const DualBasisTable& dual, int N, const TruncatedSeries& p,
                            const BernoulliTable& bern = {});

/// Checks at level r: dual basis orthogonality, degree support, level
/// compatibility, change of basis, the Leibniz rule for the Hopf action.
Report check_dual_basis(const LieAlgebra& lie, int r, const BernoulliTable& bern = {});
/// P |> u = sum <u_(2), P> u_(1) for PBW u with deg <= maxdeg and P = d^K, |K| <= maxdeg.
Report check_heisenberg_double(const PhaseSpace& ps, int maxdeg);
/// P |> (f g) = sum (P_(1) |> f)(P_(2) |> g) for P = d^K, |K| <= N, and f, g of degree <= maxdeg.
Report check_coproduct_action(const PhaseSpace& ps, int N, int maxdeg);

}  // namespace lieph
