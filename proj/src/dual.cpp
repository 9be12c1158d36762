#include "lieph/dual.hpp"

#include <algorithm>

#include "lieph/errors.hpp"

namespace lieph {

std::map<MultiIndex, Rational, GradedOrder> pairing_values(const DerivationAction& act, const TruncatedSeries& p,
                                                            int max_degree) {
  if (p.prec() < max_degree) throw InsufficientPrecision("pairing", max_degree, p.prec());
  const std::size_t n = p.nvars();
  std::map<MultiIndex, TruncatedSeries, GradedOrder> acted;
  std::map<MultiIndex, Rational, GradedOrder> out;
  for (const auto& m : monomials_up_to(n, max_degree)) {
    TruncatedSeries s;
    if (m.is_zero()) {
      s = p.truncated(max_degree);
    } else {
      // P <| x_M = D_last(P <| x_{M - e_last}); the lower monomial came earlier.
      std::size_t last = n;
      while (m[last - 1] == 0) --last;
      MultiIndex prev = m;
      prev.increment(last - 1, -1);
      s = act.apply(last - 1, acted.at(prev));
    }
    out.emplace(m, s.eval_at_zero());
    // Only series that still have letters to absorb are kept.
    if (m.degree() < max_degree) acted.emplace(m, std::move(s));
  }
  return out;
}

Rational hopf_pairing(const LieAlgebra& lie, const UEnvElement& u, const TruncatedSeries& p,
                      const BernoulliTable& bern) {
  int deg = std::max(u.degree(), 0);
  if (p.prec() < deg) throw InsufficientPrecision("hopf_pairing", deg, p.prec());
  DerivationAction act(phi_matrix(lie, deg, bern));
  Rational out = 0;
  for (const auto& [j, c] : u.terms()) out += c * act.apply_word(j.word(), p.truncated(deg)).eval_at_zero();
  return out;
}

Rational DualBasisTable::d(const MultiIndex& k, const MultiIndex& j) const {
  auto it = change.find({k, j});
  return it == change.end() ? Rational(0) : it->second;
}

DualBasisTable dual_basis(const LieAlgebra& lie, int r, const BernoulliTable& bern) {
  const std::size_t n = lie.dim();
  DualBasisTable t;
  t.n = n;
  t.level = r;
  t.monomials = monomials_up_to(n, r);
  DerivationAction act(phi_matrix(lie, std::max(r, 0), bern));
  for (const auto& j : t.monomials) {
    auto vals = pairing_values(act, TruncatedSeries::monomial(n, r, j), r);
    for (const auto& [i, v] : vals)
      if (v != 0) t.gram.emplace(std::make_pair(i, j), v);
  }
  auto gram = [&](const MultiIndex& i, const MultiIndex& j) -> Rational {
    auto it = t.gram.find({i, j});
    return it == t.gram.end() ? Rational(0) : it->second;
  };
  // <x_J, d^M> vanishes for |M| > |J| and is M! delta for |M| = |J|, so the
  // coefficients a_{K,M} of d^{K} follow degree by degree:
  // a_{K,J} J! = K! delta_{KJ} - sum_{|M| < |J|} a_{K,M} G(J, M).
  for (const auto& k : t.monomials) {
    TruncatedSeries s(n, r);
    for (const auto& j : t.monomials) {
      if (j.degree() < k.degree()) continue;
      Rational rhs = j == k ? Rational(k.factorial()) : Rational(0);
      for (const auto& [m, a] : s.terms())
        if (m.degree() < j.degree()) rhs -= a * gram(j, m);
      s.add_term(j, rhs / Rational(j.factorial()));
    }
    t.basis.emplace(k, std::move(s));
  }
  for (const auto& [key, g] : t.gram) t.change.emplace(key, g / Rational(key.first.factorial()));
  return t;
}

SeriesTensor SeriesTensor::outer(const TruncatedSeries& a, const TruncatedSeries& b) {
  SeriesTensor t(a.nvars(), std::min(a.prec(), b.prec()));
  for (const auto& [ka, ca] : a.terms())
    for (const auto& [kb, cb] : b.terms()) t.add_term(ka, kb, ca * cb);
  return t;
}

Rational SeriesTensor::coefficient(const MultiIndex& a, const MultiIndex& b) const {
  auto it = terms_.find({a, b});
  return it == terms_.end() ? Rational(0) : it->second;
}

void SeriesTensor::add_term(const MultiIndex& a, const MultiIndex& b, const Rational& c) {
  if (a.degree() > prec_ || b.degree() > prec_) return;
  add_to(terms_, a, b, c);
}

SeriesTensor SeriesTensor::truncated(int p) const {
  if (p >= prec_) return *this;
  SeriesTensor t(n_, p);
  for (const auto& [k, c] : terms_) t.add_term(k.first, k.second, c);
  return t;
}

SeriesTensor SeriesTensor::flipped() const {
  SeriesTensor t(n_, prec_);
  for (const auto& [k, c] : terms_) t.add_term(k.second, k.first, c);
  return t;
}

SeriesTensor& SeriesTensor::operator+=(const SeriesTensor& o) {
  if (o.prec_ < prec_) *this = truncated(o.prec_);
  if (n_ == 0) n_ = o.n_;
  for (const auto& [k, c] : o.terms_) add_term(k.first, k.second, c);
  return *this;
}

SeriesTensor& SeriesTensor::operator-=(const SeriesTensor& o) {
  if (o.prec_ < prec_) *this = truncated(o.prec_);
  if (n_ == 0) n_ = o.n_;
  for (const auto& [k, c] : o.terms_) add_term(k.first, k.second, -c);
  return *this;
}

SeriesTensor& SeriesTensor::operator*=(const Rational& c) {
  if (c == 0) terms_.clear();
  for (auto& [k, v] : terms_) v *= c;
  return *this;
}

SeriesTensor operator*(const SeriesTensor& a, const SeriesTensor& b) {
  SeriesTensor t(a.nvars(), std::min(a.prec(), b.prec()));
  for (const auto& [ka, ca] : a.terms())
    for (const auto& [kb, cb] : b.terms()) t.add_term(ka.first + kb.first, ka.second + kb.second, ca * cb);
  return t;
}

bool SeriesTensor::equal_at(const SeriesTensor& o, int p) const {
  auto within = [p](const std::pair<MultiIndex, MultiIndex>& k) { return k.first.degree() <= p && k.second.degree() <= p; };
  for (const auto& [k, c] : terms_)
    if (within(k) && o.coefficient(k.first, k.second) != c) return false;
  for (const auto& [k, c] : o.terms_)
    if (within(k) && coefficient(k.first, k.second) != c) return false;
  return true;
}

TruncatedSeries SeriesTensor::counit_left() const {
  TruncatedSeries s(n_, prec_);
  for (const auto& [k, c] : terms_)
    if (k.first.is_zero()) s.add_term(k.second, c);
  return s;
}

TruncatedSeries SeriesTensor::counit_right() const {
  TruncatedSeries s(n_, prec_);
  for (const auto& [k, c] : terms_)
    if (k.second.is_zero()) s.add_term(k.first, c);
  return s;
}

std::string SeriesTensor::render(const std::vector<std::string>& labels) const {
  if (terms_.empty()) return "0";
  std::string out;
  for (const auto& [k, c] : terms_) {
    if (!out.empty()) out += " + ";
    auto side = [&](const MultiIndex& m) {
      return m.is_zero() ? std::string("1") : TruncatedSeries::monomial(n_, prec_, m).render(labels);
    };
    out += (c == 1 ? std::string() : "(" + c.get_str() + ")*") + side(k.first) + " (x) " + side(k.second);
  }
  return out;
}

}  // namespace lieph

namespace lieph {

SeriesCoproduct s_coproduct(const EnvelopingAlgebra& u, const DualBasisTable& dual, int N, const TruncatedSeries& p,
                            const BernoulliTable& bern) {
  if (p.prec() < 2 * N) throw InsufficientPrecision("s_coproduct", 2 * N, p.prec());
  if (dual.level < N) throw InsufficientPrecision("s_coproduct dual basis", N, dual.level);
  const std::size_t n = u.dim();
  DerivationAction act(phi_matrix(u.lie(), 2 * N, bern));
  auto vals = pairing_values(act, p, 2 * N);
  SeriesCoproduct out;
  out.tensor = SeriesTensor(n, N);
  auto basis = monomials_up_to(n, N);
  for (const auto& j : basis)
    for (const auto& k : basis) {
      Rational c = 0;
      UEnvElement jk = u.multiply(UEnvElement::monomial(j), UEnvElement::monomial(k));
      for (const auto& [m, cm] : jk.terms())
        c += cm * vals.at(m);
      if (c == 0) continue;
      c /= Rational(j.factorial()) * Rational(k.factorial());
      out.slots.emplace(std::make_pair(j, k), c);
      out.tensor += SeriesTensor::outer(dual[j].truncated(N), dual[k].truncated(N)) * c;
    }
  return out;
}

SeriesCoproduct s_coproduct(const LieAlgebra& lie, int N, const TruncatedSeries& p, const BernoulliTable& bern) {
  EnvelopingAlgebra u(lie);
  return s_coproduct(u, dual_basis(lie, N, bern), N, p, bern);
}

namespace {

using Witness = std::optional<std::string>;

}  // namespace

Report check_dual_basis(const LieAlgebra& lie, int r, const BernoulliTable& bern) {
  Report rep;
  const std::size_t n = lie.dim();
  DualBasisTable t = dual_basis(lie, r, bern);
  DerivationAction act(phi_matrix(lie, r, bern));
  run_check(rep, "lemma.dual_basis", "<d^{K}, x_J> = K! delta^K_J", r, [&]() -> Witness {
    for (const auto& k : t.monomials) {
      auto vals = pairing_values(act, t[k], r);
      for (const auto& j : t.monomials) {
        Rational want = j == k ? Rational(k.factorial()) : Rational(0);
        if (vals.at(j) != want) return "K=" + k.to_string() + " J=" + j.to_string() + ": " + vals.at(j).get_str();
      }
    }
    return std::nullopt;
  });
  run_check(rep, "lemma.dual_basis_support", "d^{K} has no terms of degree < |K|", r, [&]() -> Witness {
    for (const auto& [k, s] : t.basis)
      if (!s.is_zero() && s.min_degree() < k.degree()) return "K=" + k.to_string() + ": " + s.render(lie.labels());
    return std::nullopt;
  });
  run_check(rep, "lemma.dual_basis_levels", "projection of d^{K} at level r+1 is d^{K} at level r", r, [&]() -> Witness {
    DualBasisTable up = dual_basis(lie, r + 1, bern);
    for (const auto& [k, s] : t.basis)
      if (!up[k].equal_at(s, r)) return "K=" + k.to_string();
    return std::nullopt;
  });
  run_check(rep, "lemma.change_of_basis", "d^J = sum_{|K| >= |J|} d_{K,J} d^{K}", r, [&]() -> Witness {
    for (const auto& j : t.monomials) {
      TruncatedSeries s(n, r);
      for (const auto& k : t.monomials) {
        Rational c = t.d(k, j);
        if (c == 0) continue;
        if (k.degree() < j.degree()) return "d_{K,J} nonzero below degree, K=" + k.to_string() + " J=" + j.to_string();
        s += t[k] * c;
      }
      if (!s.equal_at(TruncatedSeries::monomial(n, r, j), r)) return "J=" + j.to_string() + ": " + s.render(lie.labels());
    }
    return std::nullopt;
  });
  run_check(rep, "lemma.hopf_action_leibniz",
            "(d^J) <| x_I = sum_{I1+I2=I} I!/(I1! I2!) (d^J1 <| x_I1)(d^J2 <| x_I2) for J1 + J2 = J", r, [&]() -> Witness {
              const int deg = std::min(r, 3);
              for (const auto& i : monomials_up_to(n, deg))
                for (const auto& j : monomials_up_to(n, deg)) {
                  auto lhs = act.apply_word(i.word(), TruncatedSeries::monomial(n, r, j));
                  for (const auto& j1 : sub_multiindices(j)) {
                    TruncatedSeries rhs(n, lhs.prec());
                    for (const auto& i1 : sub_multiindices(i)) {
                      auto a = act.apply_word(i1.word(), TruncatedSeries::monomial(n, r, j1));
                      auto b = act.apply_word((i - i1).word(), TruncatedSeries::monomial(n, r, j - j1));
                      rhs += a * b * Rational(multiindex_binomial(i, i1));
                    }
                    int p = std::min(lhs.prec(), rhs.prec());
                    if (!lhs.equal_at(rhs, p))
                      return "I=" + i.to_string() + " J1=" + j1.to_string() + " J2=" + (j - j1).to_string();
                  }
                }
              return std::nullopt;
            });
  return rep;
}

Report check_heisenberg_double(const PhaseSpace& ps, int maxdeg) {
  Report rep;
  const std::size_t n = ps.dim();
  run_check(rep, "lemma.heisenberg_double", "P |> u = sum <u_(2), P> u_(1)", maxdeg, [&]() -> Witness {
    DerivationAction act(phi_matrix(ps.lie(), maxdeg));
    auto basis = monomials_up_to(n, maxdeg);
    for (const auto& k : basis) {
      TruncatedSeries p = TruncatedSeries::monomial(n, maxdeg, k);
      auto vals = pairing_values(act, p, maxdeg);
      for (const auto& j : basis) {
        UEnvElement u = UEnvElement::monomial(j);
        UEnvElement lhs = ps.black_left(ps.series(p), u), rhs(n);
        for (const auto& [key, c] : u_coproduct(u)) rhs.add_term(key.first, c * vals.at(key.second));
        if (lhs != rhs)
          return "K=" + k.to_string() + " u=" + j.to_string() + ": lhs " + lhs.render(ps.labels()) + " vs rhs " +
                 rhs.render(ps.labels());
      }
    }
    return std::nullopt;
  });
  return rep;
}

Report check_coproduct_action(const PhaseSpace& ps, int N, int maxdeg) {
  Report rep;
  const std::size_t n = ps.dim();
  run_check(rep, "coproduct.defining_action", "P |> (f g) = sum (P_(1) |> f)(P_(2) |> g)", N, [&]() -> Witness {
    const auto& u = ps.u_left();
    DualBasisTable dual = dual_basis(ps.lie(), N);
    auto fs = monomials_up_to(n, maxdeg);
    for (const auto& k : monomials_up_to(n, N)) {
      TruncatedSeries p = TruncatedSeries::monomial(n, 2 * N, k);
      SeriesCoproduct cop = s_coproduct(u, dual, N, p);
      for (const auto& fj : fs)
        for (const auto& gj : fs) {
          UEnvElement f = UEnvElement::monomial(fj), g = UEnvElement::monomial(gj);
          UEnvElement lhs = ps.black_left(ps.series(p), u.multiply(f, g)), rhs(n);
          for (const auto& [key, c] : cop.tensor.terms()) {
            if (key.first.degree() > f.degree() || key.second.degree() > g.degree()) continue;
            UEnvElement a = ps.black_left(ps.series(TruncatedSeries::monomial(n, N, key.first)), f);
            UEnvElement b = ps.black_left(ps.series(TruncatedSeries::monomial(n, N, key.second)), g);
            rhs += u.multiply(a, b) * c;
          }
          if (lhs != rhs)
            return "P=d^" + k.to_string() + " f=" + fj.to_string() + " g=" + gj.to_string() + ": lhs " +
                   lhs.render(ps.labels()) + " vs rhs " + rhs.render(ps.labels());
        }
    }
    return std::nullopt;
  });
  return rep;
}

}  // namespace lieph
