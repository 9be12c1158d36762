#include <doctest.h>

#include <random>

#include "lieph/series.hpp"

using namespace lieph;

namespace {

TruncatedSeries d(std::size_t n, int prec, std::initializer_list<int> k, Rational c = 1) {
  return TruncatedSeries::monomial(n, prec, MultiIndex(std::vector<int>(k)), c);
}

TruncatedSeries random_series(std::mt19937& rng, std::size_t n, int prec, int max_terms = 6) {
  std::uniform_int_distribution<int> deg(0, prec), coef(-3, 3), den(1, 3), count(0, max_terms);
  TruncatedSeries s(n, prec);
  int t = count(rng);
  for (int i = 0; i < t; ++i) {
    auto layer = monomials_of_degree(n, deg(rng));
    std::uniform_int_distribution<std::size_t> pick(0, layer.size() - 1);
    s.add_term(layer[pick(rng)], make_rational(coef(rng), den(rng)));
  }
  return s;
}

// phi as f(C) with f the reciprocal of (1 - e^{-z})/z, solved coefficient by coefficient.
MatrixSeries phi_by_reciprocal(const LieAlgebra& lie, int N) {
  std::vector<Rational> y(N + 1), f(N + 1);
  for (int m = 0; m <= N; ++m) y[m] = Rational(m % 2 ? -1 : 1) / Rational(factorial(m + 1));
  for (int k = 0; k <= N; ++k) {
    Rational s = k == 0 ? Rational(1) : Rational(0);
    for (int j = 0; j < k; ++j) s -= f[j] * y[k - j];
    f[k] = s / y[0];
  }
  auto c = c_matrix(lie, N);
  MatrixSeries out = MatrixSeries::identity(lie.dim(), N), power = MatrixSeries::identity(lie.dim(), N);
  for (int k = 1; k <= N; ++k) {
    power = power * c;
    out += power * f[k];
  }
  return out;
}

const std::vector<std::string> kAll = {"abelian:2", "abelian:3", "heisenberg3", "sl2", "solvable2", "kappa:3"};

}  // namespace

TEST_CASE("series arithmetic examples") {
  auto one = TruncatedSeries::constant(1, 3, 1);
  auto x = TruncatedSeries::variable(1, 3, 0);
  auto p = (one + x) * (one - x);
  CHECK(p.prec() == 3);
  CHECK(p == one - d(1, 3, {2}));
  CHECK((x * TruncatedSeries(1, 3)).is_zero());
  CHECK((x * TruncatedSeries(1, 3)).prec() == 3);

  TruncatedSeries g(1, 3);
  for (int k = 0; k <= 3; ++k) g += d(1, 3, {k});
  auto g2 = g * g;
  for (int k = 0; k <= 3; ++k) CHECK(g2.coefficient(MultiIndex{k}) == k + 1);
  CHECK(g2.max_degree() == 3);

  auto low = TruncatedSeries::variable(1, 1, 0);
  CHECK((g * low).prec() == 1);
  CHECK((g + low).prec() == 1);
}

TEST_CASE("series rendering") {
  auto s = d(3, 4, {0, 1, 0}, make_rational(1, 2)) + d(3, 4, {2, 0, 1}) - d(3, 4, {0, 0, 0}, 3);
  CHECK(s.render() == "-3 + 1/2*d2 + d1^2*d3");
  CHECK(TruncatedSeries(2, 2).render() == "0");
  CHECK(d(2, 2, {1, 0}, -1).render({"0", "1"}) == "-d0");
}

TEST_CASE("series operations") {
  auto s = d(2, 3, {2, 1}, 5) + d(2, 3, {0, 1});
  auto ds = s.formal_derivative(0);
  CHECK(ds.prec() == 2);
  CHECK(ds == d(2, 2, {1, 1}, 10));
  CHECK(s.negate_variables() == -d(2, 3, {2, 1}, 5) - d(2, 3, {0, 1}));
  CHECK((TruncatedSeries::constant(2, 0, 7) + s).eval_at_zero() == 7);
  CHECK_THROWS_AS(TruncatedSeries(2, -1).eval_at_zero(), InsufficientPrecision);
  CHECK(s.truncated(2) == d(2, 2, {0, 1}));
  CHECK(s.equal_at(d(2, 1, {0, 1}), 1));
  CHECK(!s.equal_at(d(2, 1, {0, 1}), 3));
}

TEST_CASE("series multiplication is associative and commutative (randomized)") {
  std::mt19937 rng(7);
  for (int trial = 0; trial < 150; ++trial) {
    std::size_t n = 1 + trial % 3;
    int p = trial % 6;
    auto a = random_series(rng, n, p), b = random_series(rng, n, p), c = random_series(rng, n, p);
    CHECK(a * b == b * a);
    CHECK((a * b) * c == a * (b * c));
    CHECK(a * (b + c) == a * b + a * c);
  }
}

TEST_CASE("C matrix") {
  CHECK(c_matrix(builtin("abelian:3"), 4).is_zero());
  auto c = c_matrix(builtin("heisenberg3"), 4);
  CHECK(c(2, 0) == d(3, 4, {0, 1, 0}));
  CHECK(c(2, 1) == d(3, 4, {1, 0, 0}, -1));
  int nonzero = 0;
  for (std::size_t a = 0; a < 3; ++a)
    for (std::size_t b = 0; b < 3; ++b) nonzero += !c(a, b).is_zero();
  CHECK(nonzero == 2);
  auto s = c_matrix(builtin("solvable2"), 3);
  CHECK(s(1, 0) == d(2, 3, {0, 1}));
  CHECK(s(1, 1) == d(2, 3, {1, 0}, -1));
  CHECK(s(0, 0).is_zero());
  CHECK(s(0, 1).is_zero());
}

TEST_CASE("phi, phi~ and exponentials") {
  auto ab = builtin("abelian:2");
  auto id = MatrixSeries::identity(2, 5);
  CHECK(phi_matrix(ab, 5).equal_at(id, 5));
  CHECK(phi_tilde_matrix(ab, 5).equal_at(id, 5));
  CHECK(exp_c(ab, 5, 1).equal_at(id, 5));

  auto h = builtin("heisenberg3");
  auto phi = phi_matrix(h, 5);
  CHECK(phi(2, 0) == d(3, 5, {0, 1, 0}, make_rational(1, 2)));
  CHECK(phi.equal_at(MatrixSeries::identity(3, 5) + c_matrix(h, 5) * make_rational(1, 2), 5));

  for (const auto& name : kAll) {
    CAPTURE(name);
    auto l = builtin(name);
    auto c = c_matrix(l, 8);
    auto c2 = c * c, c4 = c2 * c2;
    auto low = MatrixSeries::identity(l.dim(), 8) + c * make_rational(1, 2) + c2 * make_rational(1, 12) -
               c4 * make_rational(1, 720);
    auto phi8 = phi_matrix(l, 8);
    CHECK(phi8.equal_at(low, 5));
    CHECK(phi8.equal_at(phi_by_reciprocal(l, 8), 8));
    CHECK(phi_tilde_matrix(l, 8).equal_at(phi_by_reciprocal(opposite(l), 8), 8));
    CHECK(matrix_identities_check(l, 6).empty());
  }
}

TEST_CASE("flipped Bernoulli sign breaks the matrix identities") {
  for (const auto& name : {"heisenberg3", "sl2", "solvable2"}) {
    CAPTURE(name);
    auto bad = matrix_identities_check(builtin(name), 5, BernoulliTable::sign_flipped(5));
    CHECK(!bad.empty());
  }
}

TEST_CASE("precision soundness: compute high then truncate equals compute low") {
  for (const auto& name : kAll) {
    auto l = builtin(name);
    for (int hi = 2; hi <= 7; ++hi)
      for (int lo = 0; lo < hi; ++lo) {
        CHECK(phi_matrix(l, hi).truncated(lo).equal_at(phi_matrix(l, lo), lo));
        CHECK(exp_c(l, hi, -1).truncated(lo).equal_at(exp_c(l, lo, -1), lo));
      }
  }
  std::mt19937 rng(11);
  for (int trial = 0; trial < 60; ++trial) {
    auto a = random_series(rng, 2, 6), b = random_series(rng, 2, 6);
    CHECK((a * b).truncated(3) == a.truncated(3) * b.truncated(3));
  }
}

TEST_CASE("Hopf action on series") {
  auto ab = builtin("abelian:3");
  auto p = d(3, 4, {2, 1, 0});
  CHECK(hopf_action_on_series(ab, {0}, p) == d(3, 3, {1, 1, 0}, 2));
  auto h = builtin("heisenberg3");
  auto d3 = d(3, 4, {0, 0, 1});
  CHECK(hopf_action_on_series(h, {0}, d3) == d(3, 3, {0, 1, 0}, make_rational(1, 2)));
  auto twice = hopf_action_on_series(h, {0, 1}, d3);
  CHECK(twice.prec() == 2);
  CHECK(twice.eval_at_zero() == make_rational(1, 2));
  CHECK(twice == TruncatedSeries::constant(3, 2, make_rational(1, 2)));
  CHECK_THROWS_AS(hopf_action_on_series(h, {0, 1}, d(3, 1, {0, 0, 1})), InsufficientPrecision);
}

TEST_CASE("D_mu is a derivation (randomized)") {
  std::mt19937 rng(3);
  for (const auto& name : kAll) {
    auto l = builtin(name);
    DerivationAction act(phi_matrix(l, 6));
    for (int trial = 0; trial < 15; ++trial) {
      auto a = random_series(rng, l.dim(), 5), b = random_series(rng, l.dim(), 5);
      for (std::size_t mu = 0; mu < l.dim(); ++mu)
        CHECK(act.apply(mu, a * b) == act.apply(mu, a) * b.truncated(4) + a.truncated(4) * act.apply(mu, b));
    }
  }
}

TEST_CASE("right action is a Lie homomorphism on monomials") {
  for (const auto& name : kAll) {
    CAPTURE(name);
    auto l = builtin(name);
    std::size_t n = l.dim();
    DerivationAction act(phi_matrix(l, 6));
    for (const auto& k : monomials_up_to(n, 4)) {
      auto p = TruncatedSeries::monomial(n, 6, k);
      for (std::size_t mu = 0; mu < n; ++mu)
        for (std::size_t nu = 0; nu < n; ++nu) {
          auto lhs = act.apply_word({mu, nu}, p) - act.apply_word({nu, mu}, p);
          TruncatedSeries rhs(n, 4);
          for (std::size_t la = 0; la < n; ++la)
            if (l.constant(la, mu, nu) != 0) rhs += act.apply(la, p).truncated(4) * l.constant(la, mu, nu);
          CHECK(lhs.equal_at(rhs, 4));
        }
    }
  }
}
