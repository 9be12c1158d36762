#include "lieph/algebroid.hpp"

#include <algorithm>
#include <climits>
#include <functional>
#include <stdexcept>

namespace lieph {

TensorElement& TensorElement::operator+=(const TensorElement& o) {
  terms.insert(terms.end(), o.terms.begin(), o.terms.end());
  return *this;
}

TensorElement& TensorElement::operator-=(const TensorElement& o) {
  for (const auto& [a, b] : o.terms) add(a * Rational(-1), b);
  return *this;
}

int TensorElement::prec() const {
  int p = INT_MAX;
  for (const auto& [a, b] : terms) p = std::min({p, a.prec(), b.prec()});
  return p;
}

std::string IdealWitness::describe(const std::vector<std::string>& labels, const std::string& prefix) const {
  std::string s;
  const char* names[] = {"J", "K", "L"};
  for (std::size_t i = 0; i < monomials.size(); ++i) {
    std::string m = pbw_monomial_text(monomials[i], labels, prefix);
    s += std::string(names[i % 3]) + "=" + (m.empty() ? "1" : m) + " ";
  }
  return s + "value " + value.render(labels, prefix);
}

namespace {

// Slot values v[i][slot][m] = black action of slot on the m-th test monomial;
// sums the products over i for every choice of monomials.
std::optional<IdealWitness> evaluate_products(const EnvelopingAlgebra& u, const std::vector<MultiIndex>& mons,
                                              const std::vector<std::vector<std::vector<UEnvElement>>>& v,
                                              std::size_t arity) {
  const std::size_t n = u.dim();
  const std::size_t m = mons.size();
  std::vector<std::size_t> pick(arity, 0);
  while (true) {
    UEnvElement sum(n);
    for (const auto& term : v) {
      UEnvElement prod = term[0][pick[0]];
      for (std::size_t s = 1; s < arity && !prod.is_zero(); ++s) {
        const UEnvElement& f = term[s][pick[s]];
        prod = f.is_zero() ? UEnvElement(n) : u.multiply(prod, f);
      }
      sum += prod;
    }
    if (!sum.is_zero()) {
      IdealWitness w;
      for (auto p : pick) w.monomials.push_back(mons[p]);
      w.value = sum;
      return w;
    }
    std::size_t s = arity;
    while (s > 0 && ++pick[s - 1] == m) pick[--s] = 0;
    if (s == 0) return std::nullopt;
  }
}

template <class Slots>
std::optional<IdealWitness> left_test(const PhaseSpace& ps, const std::vector<Slots>& terms, std::size_t arity, int M) {
  auto mons = monomials_up_to(ps.dim(), M);
  std::vector<std::vector<std::vector<UEnvElement>>> v;
  for (const auto& t : terms) {
    std::vector<std::vector<UEnvElement>> slots;
    for (std::size_t s = 0; s < arity; ++s) {
      if (t[s].prec() < M) throw InsufficientPrecision("ideal_test", M, t[s].prec());
      PhaseElement hx = ps.to_side(t[s].truncated(M), Side::X);
      std::vector<UEnvElement> vals;
      for (const auto& j : mons) vals.push_back(ps.black_left(hx, UEnvElement::monomial(j)));
      slots.push_back(std::move(vals));
    }
    v.push_back(std::move(slots));
  }
  return evaluate_products(ps.u_left(), mons, v, arity);
}

template <class Slots>
std::optional<IdealWitness> right_test(const PhaseSpace& ps, const std::vector<Slots>& terms, std::size_t arity, int M) {
  auto mons = monomials_up_to(ps.dim(), M);
  std::vector<std::vector<std::vector<UEnvElement>>> v;
  for (const auto& t : terms) {
    std::vector<std::vector<UEnvElement>> slots;
    for (std::size_t s = 0; s < arity; ++s) {
      PhaseElement hy = ps.to_side(t[s], Side::Y);
      std::vector<UEnvElement> vals;
      for (const auto& j : mons) vals.push_back(ps.black_right(UEnvElement::monomial(j), hy));
      slots.push_back(std::move(vals));
    }
    v.push_back(std::move(slots));
  }
  return evaluate_products(ps.u_right(), mons, v, arity);
}

std::vector<std::array<PhaseElement, 2>> as_arrays(const TensorElement& t) {
  std::vector<std::array<PhaseElement, 2>> out;
  for (const auto& [a, b] : t.terms) out.push_back({a, b});
  return out;
}

}  // namespace

std::optional<IdealWitness> ideal_test(const PhaseSpace& ps, const TensorElement& t, int M) {
  return left_test(ps, as_arrays(t), 2, M);
}

std::optional<IdealWitness> ideal_test_right(const PhaseSpace& ps, const TensorElement& t, int M) {
  return right_test(ps, as_arrays(t), 2, M);
}

std::optional<IdealWitness> triple_ideal_test(const PhaseSpace& ps, const TripleTensor& t, int M) {
  return left_test(ps, t, 3, M);
}

std::optional<IdealWitness> triple_ideal_test_right(const PhaseSpace& ps, const TripleTensor& t, int M) {
  return right_test(ps, t, 3, M);
}

// ---- coproduct of the series ----

const PairMap& Algebroid::gram(int level) const {
  {
    std::lock_guard<std::mutex> lock(mutex_);
    auto it = gram_.find(level);
    if (it != gram_.end()) return it->second;
  }
  const std::size_t n = ps_.dim();
  auto act = ps_.algebra(Side::X).action(level);
  PairMap g;
  for (const auto& a : monomials_up_to(n, level)) {
    auto vals = pairing_values(*act, TruncatedSeries::monomial(n, level, a), level);
    for (const auto& [k, v] : vals)
      if (v != 0) g.emplace(std::make_pair(k, a), v);
  }
  std::lock_guard<std::mutex> lock(mutex_);
  return gram_.emplace(level, std::move(g)).first->second;
}

SeriesTensor Algebroid::series_coproduct(const TruncatedSeries& p, int n1, int n2) const {
  const int need = n1 + n2;
  if (p.prec() < need) throw InsufficientPrecision("series_coproduct", need, p.prec());
  const std::size_t n = p.nvars();
  const PairMap& G = gram(n1);
  auto g = [&](const MultiIndex& k, const MultiIndex& a) -> Rational {
    auto it = G.find({k, a});
    return it == G.end() ? Rational(0) : it->second;
  };
  auto mons = monomials_up_to(n, n1);
  // S_J = P <| x_J, known through degree need - |J| >= n2. With
  // <x_J x_K, P> = <x_K, P <| x_J>, the coefficients solve
  // sum_A G(J, A) c_{A,B} = [d^B] S_J, and G is diagonal within a degree.
  auto act = ps_.algebra(Side::X).action(need);
  std::map<MultiIndex, TruncatedSeries, GradedOrder> s;
  for (const auto& j : mons) {
    if (j.is_zero()) {
      s.emplace(j, p.truncated(need));
      continue;
    }
    std::size_t last = n;
    while (j[last - 1] == 0) --last;
    MultiIndex prev = j;
    prev.increment(last - 1, -1);
    s.emplace(j, act->apply(last - 1, s.at(prev)));
  }
  std::map<MultiIndex, std::map<MultiIndex, Rational, GradedOrder>, GradedOrder> c;
  for (const auto& k : mons) {
    auto& row = c[k];
    for (const auto& [b, v] : s.at(k).terms()) {
      if (b.degree() > n2) break;
      row[b] += v;
    }
    for (const auto& a : mons) {
      if (a.degree() >= k.degree()) break;
      Rational gka = g(k, a);
      if (gka == 0) continue;
      for (const auto& [b, v] : c.at(a)) row[b] -= gka * v;
    }
    Rational d = g(k, k);
    for (auto& [b, v] : row) v /= d;
  }
  SeriesTensor t(n, std::max(n1, n2));
  for (const auto& [a, row] : c)
    for (const auto& [b, v] : row)
      if (v != 0) t.add_term(a, b, v);
  return t;
}

}  // namespace lieph

namespace lieph {

TensorElement Algebroid::delta_L(const PhaseElement& h, int n1, int n2) const {
  const std::size_t n = ps_.dim();
  PhaseElement hx = ps_.to_side(h, Side::X);
  if (hx.prec() < n1 + n2) throw InsufficientPrecision("delta_L", n1 + n2, hx.prec());
  // Group by the second slot d^B: first slot sum_J x_J sum_A c d^A.
  std::map<MultiIndex, PhaseElement, GradedOrder> by_b;
  for (const auto& [j, p] : hx.terms()) {
    SeriesTensor t = series_coproduct(p, n1, n2);
    for (const auto& [ab, c] : t.terms()) {
      auto it = by_b.try_emplace(ab.second, Side::X, n, n1).first;
      it->second.add_term(j, TruncatedSeries::monomial(n, n1, ab.first, c));
    }
  }
  TensorElement out;
  for (auto& [b, first] : by_b)
    if (!first.is_zero()) out.add(std::move(first), ps_.series(TruncatedSeries::monomial(n, n2, b), Side::X));
  return out;
}

std::map<MultiIndex, TruncatedSeries, GradedOrder> Algebroid::series_left(const PhaseElement& h, Side s) const {
  const std::size_t n = ps_.dim();
  PhaseElement hs = ps_.to_side(h, s);
  const int p = hs.prec() - hs.gen_degree();
  if (p < 0) throw InsufficientPrecision("series_left", hs.gen_degree(), hs.prec());
  auto act = ps_.algebra(s).action(hs.prec());
  std::map<MultiIndex, TruncatedSeries, GradedOrder> out;
  for (const auto& [m, q] : hs.terms()) {
    for (const auto& m1 : sub_multiindices(m)) {
      auto w = m1.word();
      std::reverse(w.begin(), w.end());
      TruncatedSeries a = act->apply_word(w, q.truncated(p + m1.degree())).truncated(p);
      if (a.is_zero()) continue;
      a *= Rational(multiindex_binomial(m, m1));
      if (m1.degree() % 2) a *= Rational(-1);
      auto it = out.try_emplace(m - m1, n, p).first;
      it->second += a;
    }
  }
  for (auto it = out.begin(); it != out.end();) it = it->second.is_zero() ? out.erase(it) : std::next(it);
  return out;
}

TensorElement Algebroid::delta_R(const PhaseElement& h, int n1, int n2) const {
  const std::size_t n = ps_.dim();
  PhaseElement hy = ps_.to_side(h, Side::Y);
  const int g = hy.gen_degree();
  const int need = n1 + n2 + 2 * g;
  if (hy.prec() < need) throw InsufficientPrecision("delta_R", need, hy.prec());
  // The coproduct dual to <| is the same Delta as on the left; the second slot
  // d^B y_J loses |J| when normal ordered, so B is cut at n2 + g.
  const int nb = n2 + g;
  std::map<MultiIndex, PhaseElement, GradedOrder> by_a;
  for (const auto& [j, q] : series_left(hy, Side::Y)) {
    SeriesTensor t = series_coproduct(q, n1, nb);
    std::map<MultiIndex, TruncatedSeries, GradedOrder> per_a;
    for (const auto& [ab, c] : t.terms()) {
      auto it = per_a.try_emplace(ab.first, n, nb).first;
      it->second.add_term(ab.second, c);
    }
    PhaseElement yj = ps_.alpha_R(UEnvElement::monomial(j), nb);
    for (const auto& [a, s] : per_a) {
      PhaseElement second = ps_.multiply(ps_.series(s, Side::Y), yj).truncated(n2);
      auto it = by_a.try_emplace(a, Side::Y, n, n2).first;
      it->second += second;
    }
  }
  TensorElement out;
  for (auto& [a, second] : by_a)
    if (!second.is_zero()) out.add(ps_.series(TruncatedSeries::monomial(n, n1, a), Side::Y), std::move(second));
  return out;
}

PhaseElement Algebroid::antipode(const PhaseElement& h) const {
  PhaseElement hy = ps_.to_side(h, Side::Y);
  const int p = hy.prec();
  PhaseElement out(Side::X, ps_.dim(), p - hy.gen_degree());
  for (const auto& [j, q] : hy.terms()) {
    // S(y_J Q) = S(Q) x_{w_k} ... x_{w_1}
    auto w = j.word();
    std::reverse(w.begin(), w.end());
    PhaseElement sq = ps_.series(q.negate_variables(), Side::X);
    out += ps_.multiply(sq, ps_.alpha_L(ps_.u_left().word(w), p));
  }
  return out;
}

PhaseElement Algebroid::antipode_inv(const PhaseElement& h) const {
  PhaseElement hx = ps_.to_side(h, Side::X);
  const int p = hx.prec();
  PhaseElement out(Side::Y, ps_.dim(), p - hx.gen_degree());
  for (const auto& [j, q] : hx.terms()) {
    // S^-1(x_J P) = S^-1(P) y_{w_k} ... y_{w_1}
    auto w = j.word();
    std::reverse(w.begin(), w.end());
    PhaseElement sq = ps_.series(q.negate_variables(), Side::Y);
    out += ps_.multiply(sq, ps_.alpha_R(ps_.u_right().word(w), p));
  }
  return out;
}

const std::vector<Rational>& Algebroid::z_shift() const {
  {
    std::lock_guard<std::mutex> lock(mutex_);
    if (z_shift_) return *z_shift_;
  }
  const std::size_t n = ps_.dim();
  const int p = 4;
  std::vector<Rational> out;
  for (std::size_t a = 0; a < n; ++a) {
    PhaseElement diff = ps_.z(a, p, Side::X) - ps_.x(a, p);
    Rational s = 0;
    for (const auto& [j, q] : diff.terms()) {
      if (!j.is_zero() || q.max_degree() > 0) throw std::logic_error("beta^R(y) - x is not a scalar");
      s = q.eval_at_zero();
    }
    out.push_back(s);
  }
  std::lock_guard<std::mutex> lock(mutex_);
  if (!z_shift_) z_shift_ = std::move(out);
  return *z_shift_;
}

}  // namespace lieph

namespace lieph {

namespace {

void accumulate(CanonicalTriple& out, const TruncatedSeries& qa, const TruncatedSeries& qb, const PhaseElement& mid) {
  for (const auto& [a, ca] : qa.terms())
    for (const auto& [b, cb] : qb.terms()) {
      auto key = std::make_pair(a, b);
      auto it = out.entries.find(key);
      if (it == out.entries.end()) out.entries.emplace(key, mid * (ca * cb));
      else it->second += mid * (ca * cb);
    }
}

int min_prec(const std::map<MultiIndex, TruncatedSeries, GradedOrder>& m, int fallback) {
  int p = fallback;
  for (const auto& [j, q] : m) p = std::min(p, q.prec());
  return p;
}

}  // namespace

CanonicalTriple canonical_RL(const Algebroid& alg, const TripleTensor& t) {
  const PhaseSpace& ps = alg.space();
  CanonicalTriple out;
  out.key_prec = INT_MAX;
  for (const auto& [c, d, f] : t) {
    // c = sum Q_J y_J = sum Q_J alpha^R(y_J) moves y_J right as beta^R(y_J);
    // f = sum x_K Q_K = sum alpha^L(x_K) Q_K moves x_K left as beta^L(x_K).
    auto qc = alg.series_left(c, Side::Y);
    PhaseElement fx = ps.to_side(f, Side::X);
    PhaseElement dx = ps.to_side(d, Side::X);
    const int pd = dx.prec();
    out.key_prec = std::min({out.key_prec, min_prec(qc, c.prec()), fx.prec()});
    for (const auto& [k, qf] : fx.terms()) {
      PhaseElement left = ps.multiply(ps.beta_L(UEnvElement::monomial(k), pd + dx.gen_degree()), dx);
      for (const auto& [j, q] : qc) {
        PhaseElement mid = ps.multiply(left, ps.beta_R(UEnvElement::monomial(j), pd));
        accumulate(out, q, qf, mid);
      }
    }
  }
  return out;
}

CanonicalTriple canonical_LR(const Algebroid& alg, const TripleTensor& t) {
  const PhaseSpace& ps = alg.space();
  const std::size_t n = ps.dim();
  const auto& shift = alg.z_shift();
  CanonicalTriple out;
  out.key_prec = INT_MAX;
  for (const auto& [c, d, f] : t) {
    // c = sum y_J Q_J with y_J = beta^L(x_{w_k} ... x_{w_1});
    // f = sum Q_K x_K with x_K = beta^R(prod of (y_v - s_v) in reverse).
    PhaseElement cy = ps.to_side(c, Side::Y);
    auto qf = alg.series_left(f, Side::X);
    PhaseElement dx = ps.to_side(d, Side::X);
    const int pd = dx.prec();
    out.key_prec = std::min({out.key_prec, cy.prec(), min_prec(qf, f.prec())});
    for (const auto& [j, qc] : cy.terms()) {
      auto w = j.word();
      std::reverse(w.begin(), w.end());
      PhaseElement left = ps.multiply(ps.alpha_L(ps.u_left().word(w), pd + dx.gen_degree()), dx);
      for (const auto& [k, q] : qf) {
        auto v = k.word();
        UEnvElement u = UEnvElement::one(n);
        for (auto it = v.rbegin(); it != v.rend(); ++it) {
          UEnvElement g = UEnvElement::generator(n, *it) - UEnvElement::one(n) * shift[*it];
          u = ps.u_right().multiply(u, g);
        }
        PhaseElement mid = ps.multiply(left, ps.alpha_R(u, pd));
        accumulate(out, qc, q, mid);
      }
    }
  }
  return out;
}

std::optional<std::string> canonical_difference(const PhaseSpace& ps, const CanonicalTriple& a,
                                                const CanonicalTriple& b, int q) {
  if (a.key_prec < q) throw InsufficientPrecision("canonical form", q, a.key_prec);
  if (b.key_prec < q) throw InsufficientPrecision("canonical form", q, b.key_prec);
  const std::size_t n = ps.dim();
  auto check = [&](const std::pair<MultiIndex, MultiIndex>& key) -> std::optional<std::string> {
    if (key.first.degree() > q || key.second.degree() > q) return std::nullopt;
    auto ia = a.entries.find(key);
    auto ib = b.entries.find(key);
    PhaseElement za(Side::X, n, q);
    const PhaseElement& ea = ia == a.entries.end() ? za : ia->second;
    const PhaseElement& eb = ib == b.entries.end() ? za : ib->second;
    if (ea.prec() < q) throw InsufficientPrecision("canonical form", q, ea.prec());
    if (eb.prec() < q) throw InsufficientPrecision("canonical form", q, eb.prec());
    if (ea.equal_at(eb, q)) return std::nullopt;
    return "A=" + key.first.to_string() + " B=" + key.second.to_string() + ": lhs " + ea.truncated(q).render(ps.labels()) +
           " vs rhs " + eb.truncated(q).render(ps.labels());
  };
  for (const auto& [key, e] : a.entries)
    if (auto w = check(key)) return w;
  for (const auto& [key, e] : b.entries)
    if (auto w = check(key)) return w;
  return std::nullopt;
}

std::optional<std::string> takeuchi_test(const PhaseSpace& ps, const TensorElement& t, int M) {
  for (std::size_t mu = 0; mu < ps.dim(); ++mu) {
    UEnvElement x = UEnvElement::generator(ps.dim(), mu);
    TensorElement diff;
    for (const auto& [b, b2] : t.terms) {
      PhaseElement bx = ps.to_side(b, Side::X);
      diff.add(ps.multiply(bx, ps.beta_L(x, bx.prec())), b2);
      PhaseElement b2x = ps.to_side(b2, Side::X);
      diff.add(bx * Rational(-1), ps.multiply(b2x, ps.alpha_L(x, b2x.prec())));
    }
    if (auto w = ideal_test(ps, diff, M)) return "mu=" + ps.lie().label(mu) + " " + w->describe(ps.labels(), "x");
  }
  return std::nullopt;
}

std::optional<std::string> takeuchi_test_right(const PhaseSpace& ps, const TensorElement& t, int M) {
  for (std::size_t mu = 0; mu < ps.dim(); ++mu) {
    UEnvElement y = UEnvElement::generator(ps.dim(), mu);
    TensorElement diff;
    for (const auto& [b, b2] : t.terms) {
      PhaseElement by = ps.to_side(b, Side::Y);
      PhaseElement b2y = ps.to_side(b2, Side::Y);
      diff.add(ps.multiply(ps.alpha_R(y, by.prec() + by.gen_degree()), by), b2y);
      diff.add(by * Rational(-1), ps.multiply(ps.beta_R(y, b2y.prec() + b2y.gen_degree()), b2y));
    }
    if (auto w = ideal_test_right(ps, diff, M)) return "mu=" + ps.lie().label(mu) + " " + w->describe(ps.labels(), "y");
  }
  return std::nullopt;
}

}  // namespace lieph
