#include "lieph/weyl.hpp"

#include <algorithm>
#include <sstream>

namespace lieph {

WeylElement WeylElement::series(const TruncatedSeries& p) {
  WeylElement w(p.nvars(), p.prec());
  w.add_term(MultiIndex(p.nvars()), p);
  return w;
}

WeylElement WeylElement::x_monomial(const MultiIndex& j, int prec, const Rational& c) {
  WeylElement w(j.size(), prec);
  w.add_term(j, TruncatedSeries::constant(j.size(), prec, c));
  return w;
}

TruncatedSeries WeylElement::coefficient(const MultiIndex& j) const {
  auto it = terms_.find(j);
  return it == terms_.end() ? TruncatedSeries(n_, prec_) : it->second;
}

void WeylElement::add_term(const MultiIndex& j, const TruncatedSeries& p) {
  if (p.is_zero() && p.prec() >= prec_) return;
  if (p.prec() < prec_) *this = truncated(p.prec());
  auto it = terms_.find(j);
  if (it == terms_.end()) {
    TruncatedSeries s = p.truncated(prec_);
    if (!s.is_zero()) terms_.emplace(j, std::move(s));
    return;
  }
  it->second += p;
  if (it->second.is_zero()) terms_.erase(it);
}

WeylElement WeylElement::truncated(int p) const {
  if (p >= prec_) return *this;
  WeylElement out(n_, p);
  for (const auto& [j, s] : terms_) out.add_term(j, s.truncated(p));
  return out;
}

WeylElement& WeylElement::operator+=(const WeylElement& o) {
  if (o.prec_ < prec_) *this = truncated(o.prec_);
  for (const auto& [j, s] : o.terms_) add_term(j, s);
  return *this;
}

WeylElement& WeylElement::operator-=(const WeylElement& o) {
  if (o.prec_ < prec_) *this = truncated(o.prec_);
  for (const auto& [j, s] : o.terms_) add_term(j, -s);
  return *this;
}

WeylElement& WeylElement::operator*=(const Rational& c) {
  if (c == 0) terms_.clear();
  for (auto& [j, s] : terms_) s *= c;
  return *this;
}

bool WeylElement::equal_at(const WeylElement& o, int p) const {
  for (const auto& [j, s] : terms_)
    if (!s.equal_at(o.coefficient(j), p)) return false;
  for (const auto& [j, s] : o.terms_)
    if (!terms_.count(j) && !s.equal_at(TruncatedSeries(n_, p), p)) return false;
  return true;
}

std::string WeylElement::render(const std::vector<std::string>& labels, const std::string& prefix) const {
  if (terms_.empty()) return "0";
  std::string out;
  for (const auto& [j, s] : terms_) {
    if (!out.empty()) out += " + ";
    std::string mono = pbw_monomial_text(j, labels, prefix);
    if (mono.empty()) out += "(" + s.render(labels) + ")";
    else out += mono + " * (" + s.render(labels) + ")";
  }
  return out;
}

namespace {

// d^{K1} applied K1 times as formal derivatives.
TruncatedSeries derivative(const TruncatedSeries& p, const MultiIndex& k1) {
  TruncatedSeries out = p;
  for (std::size_t i = 0; i < k1.size(); ++i)
    for (int r = 0; r < k1[i]; ++r) out = out.formal_derivative(i);
  return out;
}

}  // namespace

WeylElement weyl_multiply(const WeylElement& a, const WeylElement& b) {
  const std::size_t n = std::max(a.nvars(), b.nvars());
  int prec = std::min(a.prec() - b.x_degree(), b.prec());
  WeylElement out(n, prec);
  if (prec < 0) return out;
  // P(d) x_K = sum_{K1 <= K} binom(K, K1) x_{K - K1} (d/dd)^{K1} P.
  for (const auto& [kb, q] : b.terms()) {
    auto splits = sub_multiindices(kb);
    for (const auto& [ja, p] : a.terms()) {
      for (const auto& k1 : splits) {
        TruncatedSeries dp = derivative(p.truncated(prec + k1.degree()), k1);
        if (dp.is_zero()) continue;
        dp *= Rational(multiindex_binomial(kb, k1));
        out.add_term(ja + (kb - k1), dp * q.truncated(prec));
      }
    }
  }
  return out;
}

WeylElement weyl_commutator(const WeylElement& a, const WeylElement& b) {
  return weyl_multiply(a, b) - weyl_multiply(b, a);
}

std::vector<WeylElement> realization_generators(const LieAlgebra& lie, int N, bool tilde, const BernoulliTable& bern) {
  const std::size_t n = lie.dim();
  MatrixSeries phi = tilde ? phi_tilde_matrix(lie, N, bern) : phi_matrix(lie, N, bern);
  std::vector<WeylElement> gens;
  for (std::size_t nu = 0; nu < n; ++nu) {
    WeylElement g(n, N);
    for (std::size_t rho = 0; rho < n; ++rho) g.add_term(MultiIndex::unit(n, rho), phi(rho, nu));
    gens.push_back(std::move(g));
  }
  return gens;
}

namespace {

WeylElement realize(const LieAlgebra& lie, int N, const UEnvElement& a, bool tilde, const BernoulliTable& bern) {
  const std::size_t n = lie.dim();
  int deg = std::max(a.degree(), 0);
  if (N < deg) throw InsufficientPrecision("phi_realize", deg, N);
  auto gens = realization_generators(lie, N, tilde, bern);
  WeylElement out(n, N - deg);
  for (const auto& [j, c] : a.terms()) {
    WeylElement t = WeylElement::x_monomial(MultiIndex(n), N);
    for (auto mu : j.word()) t = weyl_multiply(t, gens[mu]);
    t *= c;
    out += t;
  }
  return out;
}

}  // namespace

WeylElement phi_realize(const LieAlgebra& lie, int N, const UEnvElement& a, const BernoulliTable& bern) {
  return realize(lie, N, a, false, bern);
}

WeylElement phi_tilde_realize(const LieAlgebra& lie, int N, const UEnvElement& a, const BernoulliTable& bern) {
  return realize(lie, N, a, true, bern);
}

std::map<MultiIndex, Rational, GradedOrder> fock_action(const WeylElement& w,
                                                        const std::map<MultiIndex, Rational, GradedOrder>& poly) {
  int deg = poly.empty() ? 0 : poly.rbegin()->first.degree();
  if (w.prec() < deg) throw InsufficientPrecision("fock_action", deg, w.prec());
  std::map<MultiIndex, Rational, GradedOrder> out;
  auto add = [&](const MultiIndex& k, const Rational& c) {
    if (c == 0) return;
    auto [it, inserted] = out.try_emplace(k, c);
    if (!inserted) {
      it->second += c;
      if (it->second == 0) out.erase(it);
    }
  };
  for (const auto& [j, s] : w.terms())
    for (const auto& [m, pc] : s.terms())
      for (const auto& [k, c] : poly) {
        if (!m.divides(k)) continue;
        // d^M x^K = K!/(K-M)! x^{K-M}
        Rational f = Rational(k.factorial()) / Rational((k - m).factorial());
        add(j + (k - m), f * pc * c);
      }
  return out;
}

namespace {

std::string lab(const LieAlgebra& lie, std::size_t i) { return lie.label(i); }

}  // namespace

Report check_realization_bracket(const LieAlgebra& lie, int N, const BernoulliTable& bern) {
  Report r;
  run_check(r, "appendix.realization_bracket", "[x_r phi^r_mu, x_s phi^s_nu] = C^l_{mu nu} x_t phi^t_l", N,
            [&]() -> std::optional<std::string> {
              const std::size_t n = lie.dim();
              auto g = realization_generators(lie, N, false, bern);
              for (std::size_t mu = 0; mu < n; ++mu)
                for (std::size_t nu = 0; nu < n; ++nu) {
                  WeylElement rhs(n, N);
                  for (std::size_t la = 0; la < n; ++la) {
                    WeylElement t = g[la];
                    t *= lie.constant(la, mu, nu);
                    rhs += t;
                  }
                  if (!weyl_commutator(g[mu], g[nu]).equal_at(rhs, N - 1))
                    return "mu=" + lab(lie, mu) + " nu=" + lab(lie, nu);
                }
              return std::nullopt;
            });
  return r;
}

Report check_xy_commute(const LieAlgebra& lie, int N, const BernoulliTable& bern) {
  Report r;
  run_check(r, "appendix.xy_commute", "[x_r phi^r_mu, x_s phi~^s_nu] = 0", N, [&]() -> std::optional<std::string> {
    const std::size_t n = lie.dim();
    auto x = realization_generators(lie, N, false, bern);
    auto y = realization_generators(lie, N, true, bern);
    for (std::size_t mu = 0; mu < n; ++mu)
      for (std::size_t nu = 0; nu < n; ++nu)
        if (!weyl_commutator(x[mu], y[nu]).equal_at(WeylElement(n, N), N - 1))
          return "mu=" + lab(lie, mu) + " nu=" + lab(lie, nu);
    return std::nullopt;
  });
  return r;
}

Report check_ccn_identity(const LieAlgebra& lie, int maxN) {
  Report r;
  const std::size_t n = lie.dim();
  const int P = maxN + 1;
  MatrixSeries c = c_matrix(lie, P);
  MatrixSeries power = MatrixSeries::identity(n, P);
  for (int N = 0; N <= maxN; ++N) {
    if (N > 0) power = power * c;
    // Everything below is polynomial of degree <= N < P, so precision P is exact.
    std::vector<MatrixSeries> dpow;
    for (std::size_t rho = 0; rho < n; ++rho) {
      MatrixSeries d(n, P);
      for (std::size_t a = 0; a < n; ++a)
        for (std::size_t b = 0; b < n; ++b) d(a, b) = power(a, b).formal_derivative(rho).with_exact_prec(P);
      dpow.push_back(std::move(d));
    }
    run_check(r, "appendix.ccn." + std::to_string(N),
              "[d_r (C^N)^g_mu] C^r_nu - (d_r C^g_nu)(C^N)^r_mu = C^s_{mu nu} (C^N)^g_s, N=" + std::to_string(N), N,
              [&]() -> std::optional<std::string> {
                for (std::size_t g = 0; g < n; ++g)
                  for (std::size_t mu = 0; mu < n; ++mu)
                    for (std::size_t nu = 0; nu < n; ++nu) {
                      TruncatedSeries lhs(n, P), rhs(n, P);
                      for (std::size_t rho = 0; rho < n; ++rho) {
                        lhs += dpow[rho](g, mu) * c(rho, nu);
                        // d_rho C^g_nu = C^g_{nu rho}
                        lhs -= power(rho, mu) * lie.constant(g, nu, rho);
                      }
                      for (std::size_t s = 0; s < n; ++s) rhs += power(g, s) * lie.constant(s, mu, nu);
                      if (!lhs.equal_at(rhs, P))
                        return "gamma=" + lab(lie, g) + " mu=" + lab(lie, mu) + " nu=" + lab(lie, nu) +
                               ": lhs " + lhs.render(lie.labels()) + " vs rhs " + rhs.render(lie.labels());
                    }
                return std::nullopt;
              });
  }
  return r;
}

}  // namespace lieph
