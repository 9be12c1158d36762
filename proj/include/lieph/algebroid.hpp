#pragma once

#include <array>
#include <map>
#include <mutex>
#include <optional>
#include <string>
#include <utility>
#include <vector>

#include "lieph/dual.hpp"
#include "lieph/phase.hpp"

namespace lieph {

/// Finite sum of pairs h (x) h'. The class in the balanced tensor product is
/// only decided by the ideal tests below.
struct TensorElement {
  std::vector<std::pair<PhaseElement, PhaseElement>> terms;

  void add(PhaseElement a, PhaseElement b) { terms.emplace_back(std::move(a), std::move(b)); }
  TensorElement& operator+=(const TensorElement& o);
  TensorElement& operator-=(const TensorElement& o);
  /// Minimal precision over all slots (large when empty).
  int prec() const;
};

using TripleTensor = std::vector<std::array<PhaseElement, 3>>;

/// Witness of a nonzero evaluation: the test monomials and the value.
struct IdealWitness {
  std::vector<MultiIndex> monomials;
  UEnvElement value;
  std::string describe(const std::vector<std::string>& labels, const std::string& prefix) const;
};

/// sum_i (h_i |> x_J)(h'_i |> x_K) for |J|, |K| <= M. nullopt means zero
/// throughout, i.e. T lies in I to order M. Needs every slot at prec >= M.
std::optional<IdealWitness> ideal_test(const PhaseSpace& ps, const TensorElement& t, int M);
/// Right-handed version: sum_i (y_J <| h_i)(y_K <| h'_i) in U(g^R).
std::optional<IdealWitness> ideal_test_right(const PhaseSpace& ps, const TensorElement& t, int M);
/// Three slots, same criterion.
std::optional<IdealWitness> triple_ideal_test(const PhaseSpace& ps, const TripleTensor& t, int M);
std::optional<IdealWitness> triple_ideal_test_right(const PhaseSpace& ps, const TripleTensor& t, int M);

/// The coproducts, antipode and their helpers for one phase space.
class Algebroid {
 public:
  explicit Algebroid(const PhaseSpace& ps) : ps_(ps) {}

  const PhaseSpace& space() const { return ps_; }

  /// Delta(P) with slots cut at degrees n1 and n2. Needs prec(P) >= n1 + n2.
  SeriesTensor series_coproduct(const TruncatedSeries& p, int n1, int n2) const;

  /// Delta^L(x_J P) = (x_J (x) 1) Delta(P); X-form slots at precisions (n1, n2).
  /// Needs prec(h) >= n1 + n2.
  TensorElement delta_L(const PhaseElement& h, int n1, int n2) const;
  TensorElement delta_L(const PhaseElement& h, int N) const { return delta_L(h, N, N); }
  /// Delta^R(Q y_J) = Delta(Q)(1 (x) y_J) on the series-left form; Y-form
  /// slots. Needs prec(h) >= n1 + n2 + 2 (y-degree of h).
  TensorElement delta_R(const PhaseElement& h, int n1, int n2) const;
  TensorElement delta_R(const PhaseElement& h, int N) const { return delta_R(h, N, N); }

  /// Antihomomorphism with S(d) = -d and S(y) = x. Result in X form, precision
  /// prec(h) - (y-degree of h).
  PhaseElement antipode(const PhaseElement& h) const;
  /// Antihomomorphism with S^-1(d) = -d and S^-1(x) = y. Result in Y form.
  PhaseElement antipode_inv(const PhaseElement& h) const;

  /// Coefficients Q_J with h = sum_J Q_J g_J, g = x (X) or y (Y):
  /// g_J Q = sum binom(J, J1) (Q <| S(g_J1)) g_{J - J1}.
  std::map<MultiIndex, TruncatedSeries, GradedOrder> series_left(const PhaseElement& h, Side s) const;

  /// Scalars s_a with beta^R(y_a) = x_a + s_a, read off from the computed z^_a.
  const std::vector<Rational>& z_shift() const;

 private:
  /// G(K, A) = <x_K, d^A> for |K|, |A| <= level.
  const PairMap& gram(int level) const;

  const PhaseSpace& ps_;
  mutable std::mutex mutex_;
  mutable std::map<int, PairMap> gram_;
  mutable std::optional<std::vector<Rational>> z_shift_;
};

/// Canonical form of a triple in H (x)_{A^R} H (x)_{A^L} H: the outer slots are
/// reduced to series monomials, so the class is the map (A, B) -> middle.
/// Keys are complete for |A|, |B| <= key_prec.
struct CanonicalTriple {
  std::map<std::pair<MultiIndex, MultiIndex>, PhaseElement, PairOrder> entries;
  int key_prec = 0;
};
/// First key (|A|, |B| <= q) where the middles differ at precision q.
std::optional<std::string> canonical_difference(const PhaseSpace& ps, const CanonicalTriple& a,
                                                const CanonicalTriple& b, int q);
CanonicalTriple canonical_RL(const Algebroid& alg, const TripleTensor& t);
/// Same for H (x)_{A^L} H (x)_{A^R} H.
CanonicalTriple canonical_LR(const Algebroid& alg, const TripleTensor& t);

/// b beta^L(x_mu) (x) b' - b (x) b' alpha^L(x_mu) for each mu, run through
/// ideal_test. Reports the first failing mu.
std::optional<std::string> takeuchi_test(const PhaseSpace& ps, const TensorElement& t, int M);
/// alpha^R(y_mu) b (x) b' - b (x) beta^R(y_mu) b' through ideal_test_right.
std::optional<std::string> takeuchi_test_right(const PhaseSpace& ps, const TensorElement& t, int M);

/// Suites. N is the minimal materialization precision; the exact generators
/// are built at whatever precision a check needs beyond that.
Report coring_suite(const Algebroid& alg, int N, int M, unsigned seed = 20261019);
Report bialgebroid_suite(const Algebroid& alg, int N, int M, unsigned seed = 20261019);
Report hopf_suite(const Algebroid& alg, int N, int M, unsigned seed = 20261019);
Report axiom_suite(const Algebroid& alg, int N, int M, unsigned seed = 20261019);

}  // namespace lieph
