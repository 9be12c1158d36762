#include <doctest.h>

#include <array>
#include <random>

#include "lieph/dual.hpp"

using namespace lieph;

namespace {

const std::vector<std::string> kAll = {"abelian:3", "heisenberg3", "sl2", "solvable2", "kappa:3"};

TruncatedSeries random_series(std::mt19937& rng, std::size_t n, int prec) {
  std::uniform_int_distribution<int> coef(-3, 3), deg(0, prec), count(1, 4);
  TruncatedSeries s(n, prec);
  int t = count(rng);
  for (int i = 0; i < t; ++i) {
    auto ms = monomials_of_degree(n, deg(rng));
    std::uniform_int_distribution<std::size_t> pick(0, ms.size() - 1);
    s.add_term(ms[pick(rng)], coef(rng));
  }
  return s;
}

// Dense Gauss-Jordan inverse, as an independent solver for the dual basis.
std::vector<std::vector<Rational>> invert(std::vector<std::vector<Rational>> a) {
  const std::size_t m = a.size();
  std::vector<std::vector<Rational>> inv(m, std::vector<Rational>(m, 0));
  for (std::size_t i = 0; i < m; ++i) inv[i][i] = 1;
  for (std::size_t c = 0; c < m; ++c) {
    std::size_t piv = c;
    while (a[piv][c] == 0) ++piv;
    std::swap(a[piv], a[c]);
    std::swap(inv[piv], inv[c]);
    Rational d = a[c][c];
    for (std::size_t k = 0; k < m; ++k) {
      a[c][k] /= d;
      inv[c][k] /= d;
    }
    for (std::size_t r = 0; r < m; ++r) {
      if (r == c || a[r][c] == 0) continue;
      Rational f = a[r][c];
      for (std::size_t k = 0; k < m; ++k) {
        a[r][k] -= f * a[c][k];
        inv[r][k] -= f * inv[c][k];
      }
    }
  }
  return inv;
}

using Triple = std::array<MultiIndex, 3>;
struct TripleOrder {
  bool operator()(const Triple& a, const Triple& b) const {
    GradedOrder g;
    for (int i = 0; i < 3; ++i) {
      if (g(a[i], b[i])) return true;
      if (g(b[i], a[i])) return false;
    }
    return false;
  }
};
using TripleMap = std::map<Triple, Rational, TripleOrder>;

void add(TripleMap& t, const Triple& k, const Rational& c) {
  if (c == 0) return;
  auto [it, ins] = t.try_emplace(k, c);
  if (!ins && (it->second += c) == 0) t.erase(it);
}

}  // namespace

TEST_CASE("pairing examples") {
  auto h = builtin("heisenberg3");
  CHECK(hopf_pairing(h, UEnvElement::one(3), TruncatedSeries::constant(3, 0, 1)) == 1);
  CHECK(hopf_pairing(h, UEnvElement::monomial({1, 1, 0}), TruncatedSeries::variable(3, 2, 2)) == Rational(1, 2));
  for (const auto& name : kAll) {
    auto lie = builtin(name);
    const std::size_t n = lie.dim();
    for (const auto& k : monomials_up_to(n, 3))
      for (const auto& j : monomials_up_to(n, 3)) {
        if (!j.divides(k)) continue;
        Rational want = j == k ? Rational(k.factorial()) : Rational(0);
        CHECK(hopf_pairing(lie, UEnvElement::monomial(j), TruncatedSeries::monomial(n, 3, k)) == want);
      }
  }
}

TEST_CASE("dual basis matches a dense inverse of the Gram matrix") {
  for (const auto& name : kAll) {
    auto lie = builtin(name);
    const std::size_t n = lie.dim();
    const int r = 3;
    DualBasisTable t = dual_basis(lie, r);
    const auto& ms = t.monomials;
    const std::size_t m = ms.size();
    // G(I, J) from the plain pairing, independent of the table's own Gram.
    std::vector<std::vector<Rational>> g(m, std::vector<Rational>(m));
    for (std::size_t i = 0; i < m; ++i)
      for (std::size_t j = 0; j < m; ++j)
        g[i][j] = hopf_pairing(lie, UEnvElement::monomial(ms[i]), TruncatedSeries::monomial(n, r, ms[j]));
    auto ginv = invert(g);
    // d^{K} = sum_M a_{K,M} d^M with sum_M a_{K,M} G(J, M) = K! delta, so a = K! (G^-1)^T.
    for (std::size_t k = 0; k < m; ++k)
      for (std::size_t j = 0; j < m; ++j)
        CHECK_MESSAGE(t[ms[k]].coefficient(ms[j]) == Rational(ms[k].factorial()) * ginv[j][k], name);
  }
}

TEST_CASE("dual basis shapes") {
  DualBasisTable ab = dual_basis(builtin("abelian:3"), 3);
  for (const auto& k : ab.monomials) {
    CHECK(ab[k] == TruncatedSeries::monomial(3, 3, k));
    for (const auto& j : ab.monomials) CHECK(ab.d(k, j) == (k == j ? 1 : 0));
  }
  for (const auto& name : kAll) {
    auto lie = builtin(name);
    DualBasisTable t = dual_basis(lie, 3);
    CHECK(t[MultiIndex(lie.dim())] == TruncatedSeries::constant(lie.dim(), 3, 1));
    for (std::size_t mu = 0; mu < lie.dim(); ++mu) {
      const auto& s = t[MultiIndex::unit(lie.dim(), mu)];
      CHECK(s.equal_at(TruncatedSeries::variable(lie.dim(), 1, mu), 1));
    }
    Report rep = check_dual_basis(lie, 4);
    for (const auto& c : rep.checks()) CHECK_MESSAGE(c.status == Status::pass, name << " " << c.id << " " << c.witness);
  }
}

TEST_CASE("coproduct examples") {
  auto ab = builtin("abelian:2");
  for (std::size_t mu = 0; mu < 2; ++mu) {
    auto c = s_coproduct(ab, 2, TruncatedSeries::variable(2, 4, mu));
    MultiIndex z(2), e = MultiIndex::unit(2, mu);
    CHECK(c.slots.size() == 2);
    CHECK(c.tensor.coefficient(e, z) == 1);
    CHECK(c.tensor.coefficient(z, e) == 1);
  }
  auto h = builtin("heisenberg3");
  auto c = s_coproduct(h, 3, TruncatedSeries::variable(3, 6, 2));
  MultiIndex z{0, 0, 0}, e1{1, 0, 0}, e2{0, 1, 0}, e3{0, 0, 1};
  PairMap want;
  want[{e3, z}] = 1;
  want[{z, e3}] = 1;
  want[{e1, e2}] = Rational(1, 2);
  want[{e2, e1}] = Rational(-1, 2);
  CHECK(c.tensor.terms() == want);
  // In dual-basis slots d3 itself is d^{e3} + 1/2 d^{(1,1,0)}.
  CHECK(c.slots.at({MultiIndex{1, 1, 0}, z}) == Rational(1, 2));
  CHECK(c.slots.at({e1, e2}) == Rational(1, 2));
  CHECK_THROWS_AS(s_coproduct(h, 3, TruncatedSeries::variable(3, 5, 2)), InsufficientPrecision);
}

TEST_CASE("coproduct: counit, multiplicativity, coassociativity") {
  std::mt19937 rng(20261019);
  for (const auto& name : kAll) {
    auto lie = builtin(name);
    const std::size_t n = lie.dim();
    EnvelopingAlgebra u(lie);
    const int N = 3;
    DualBasisTable dual = dual_basis(lie, 2 * N);
    for (int trial = 0; trial < 4; ++trial) {
      TruncatedSeries p = random_series(rng, n, 2 * N), q = random_series(rng, n, 2 * N);
      auto dp = s_coproduct(u, dual, N, p), dq = s_coproduct(u, dual, N, q);
      CHECK(dp.tensor.counit_left().equal_at(p, N));
      CHECK(dp.tensor.counit_right().equal_at(p, N));
      auto dpq = s_coproduct(u, dual, N, p * q);
      CHECK_MESSAGE(dpq.tensor.equal_at(dp.tensor * dq.tensor, N), name);
    }
    // (Delta (x) id) Delta = (id (x) Delta) Delta on monomials, through degree N per slot.
    for (const auto& k : monomials_up_to(n, N)) {
      auto d = s_coproduct(u, dual, N, TruncatedSeries::monomial(n, 2 * N, k));
      TripleMap left, right;
      for (const auto& [ab, c] : d.tensor.terms()) {
        auto da = s_coproduct(u, dual, N, TruncatedSeries::monomial(n, 2 * N, ab.first));
        for (const auto& [xy, c2] : da.tensor.terms()) add(left, {xy.first, xy.second, ab.second}, c * c2);
        auto db = s_coproduct(u, dual, N, TruncatedSeries::monomial(n, 2 * N, ab.second));
        for (const auto& [xy, c2] : db.tensor.terms()) add(right, {ab.first, xy.first, xy.second}, c * c2);
      }
      // Only slot degrees <= N are exact; larger total degree in the middle
      // slot can come from truncated outer slots, so compare where all three
      // slots together stay within N.
      auto cut = [&](const TripleMap& t) {
        TripleMap o;
        for (const auto& [key, c] : t)
          if (key[0].degree() + key[1].degree() + key[2].degree() <= N) o.emplace(key, c);
        return o;
      };
      CHECK_MESSAGE(cut(left) == cut(right), name << " K=" << k.to_string());
    }
  }
}

TEST_CASE("Heisenberg double and defining action") {
  for (const auto& name : kAll) {
    PhaseSpace ps(builtin(name));
    for (const auto& rep : {check_heisenberg_double(ps, 3), check_coproduct_action(ps, 3, 2)})
      for (const auto& c : rep.checks()) CHECK_MESSAGE(c.status == Status::pass, name << " " << c.id << " " << c.witness);
  }
}
