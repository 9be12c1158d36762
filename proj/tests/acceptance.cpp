// Acceptance run: one PASS/FAIL line per criterion, details indented below.

#include <chrono>
#include <cstdio>
#include <functional>
#include <iostream>
#include <map>
#include <random>
#include <sstream>
#include <string>
#include <vector>

#include "lieph/algebroid.hpp"
#include "lieph/dual.hpp"
#include "lieph/errors.hpp"
#include "lieph/weyl.hpp"

using namespace lieph;

namespace {

constexpr unsigned kSeed = 20261019;

struct Outcome {
  bool ok = true;
  std::ostringstream notes;
  void require(bool cond, const std::string& what) {
    if (!cond) {
      ok = false;
      notes << "    failed: " << what << "\n";
    }
  }
  void note(const std::string& what) { notes << "    " << what << "\n"; }
};

bool all_pass(const Report& r, Outcome& out, const std::string& where) {
  bool ok = true;
  for (const auto& c : r.checks())
    if (c.status != Status::pass) {
      ok = false;
      out.require(false, where + " " + c.id + " [" + status_name(c.status) + "] " + c.witness.substr(0, 200));
    }
  return ok;
}

// ---------- criterion 1 ----------

// B_0 = 1, sum_{k<=m} binom(m+1, k) B_k = 0.
std::vector<Rational> bernoulli_by_recurrence(unsigned upto) {
  std::vector<Rational> b(upto + 1);
  b[0] = 1;
  for (unsigned m = 1; m <= upto; ++m) {
    Rational s = 0;
    for (unsigned k = 0; k < m; ++k) s += Rational(binomial(m + 1, k)) * b[k];
    b[m] = -s / Rational(m + 1);
  }
  return b;
}

// phi = sum a_k C^k solves phi (I - e^{-C}) = C. With (I - e^{-C}) = C G and
// G = sum_j (-1)^j C^j / (j+1)!, this is sum_k a_k g_{m-k} = [m == 0].
std::vector<Rational> phi_coefficients(int N) {
  std::vector<Rational> g(N + 1), a(N + 1);
  for (int j = 0; j <= N; ++j) g[j] = Rational(j % 2 ? -1 : 1) / Rational(factorial(j + 1));
  for (int m = 0; m <= N; ++m) {
    Rational s = m == 0 ? Rational(1) : Rational(0);
    for (int k = 0; k < m; ++k) s -= a[k] * g[m - k];
    a[m] = s / g[0];
  }
  return a;
}

void criterion_foundations(Outcome& out) {
  for (const auto& name : builtin_names()) out.require(validate(builtin(name)).ok(), "validate " + name);
  auto b = bernoulli_by_recurrence(20);
  for (unsigned m = 0; m <= 20; ++m) out.require(bernoulli(m) == b[m], "B_" + std::to_string(m));
  const int N = 8;
  auto a = phi_coefficients(N);
  out.require(a[0] == 1 && a[1] == make_rational(1, 2) && a[2] == make_rational(1, 12) && a[3] == 0 &&
                  a[4] == make_rational(-1, 720),
              "leading coefficients 1, 1/2, 1/12, 0, -1/720");
  for (const auto& name : builtin_names()) {
    auto lie = builtin(name);
    const std::size_t n = lie.dim();
    auto c = c_matrix(lie, N);
    MatrixSeries oracle = MatrixSeries::identity(n, N) * a[0], power = MatrixSeries::identity(n, N);
    MatrixSeries e = MatrixSeries::identity(n, N), negc = c * Rational(-1), p2 = MatrixSeries::identity(n, N);
    for (int k = 1; k <= N; ++k) {
      power = power * c;
      oracle += power * a[k];
      p2 = p2 * negc;
      e += p2 * (Rational(1) / Rational(factorial(k)));
    }
    auto phi = phi_matrix(lie, N);
    out.require(phi.equal_at(oracle, N), "phi series on " + name);
    out.require((phi * (MatrixSeries::identity(n, N) - e)).equal_at(c, N), "phi (I - e^{-C}) = C on " + name);
  }
}

// ---------- criteria 2 to 6 ----------

void criterion_appendix(Outcome& out) {
  for (const auto& name : {"abelian:3", "heisenberg3", "sl2", "solvable2"}) {
    auto lie = builtin(name);
    Report r;
    r.append(check_realization_bracket(lie, 6));
    r.append(check_xy_commute(lie, 6));
    all_pass(r, out, name);
    for (const auto& ch : r.checks()) out.require(ch.precision >= 5, std::string(name) + " " + ch.id + " precision");
  }
  for (const auto& name : builtin_names()) all_pass(check_ccn_identity(builtin(name), 5), out, name);
}

void criterion_theorem1(Outcome& out) {
  for (const auto& name : builtin_names()) {
    PhaseSpace ps(builtin(name));
    Report r = check_theorem1(ps, 6);
    all_pass(r, out, name);
    out.require(r.checks().size() >= 6, name + " has all identity families");
  }
}

void criterion_theorems23(Outcome& out) {
  for (const auto& name : builtin_names()) {
    PhaseSpace ps(builtin(name));
    all_pass(check_theorem2(ps, 6, 3), out, name);
    all_pass(check_theorem3(ps, 6, 3), out, name);
  }
}

void criterion_dual(Outcome& out) {
  for (const auto& name : builtin_names()) {
    auto lie = builtin(name);
    PhaseSpace ps(lie);
    all_pass(check_dual_basis(lie, 4), out, name);
    all_pass(check_heisenberg_double(ps, 4), out, name);
  }
}

void criterion_coproduct(Outcome& out) {
  for (const auto& name : builtin_names()) {
    PhaseSpace ps(builtin(name));
    all_pass(check_coproduct_action(ps, 4, 3), out, name);
  }
  // hand value on heisenberg3: d3 is primitive up to the cross term
  // 1/2 (d1 (x) d2 - d2 (x) d1)
  auto lie = builtin("heisenberg3");
  const int N = 3;
  auto d3 = TruncatedSeries::variable(3, 2 * N, 2);
  SeriesTensor got = s_coproduct(lie, N, d3).tensor;
  SeriesTensor want(3, N);
  MultiIndex z(3), e1 = MultiIndex::unit(3, 0), e2 = MultiIndex::unit(3, 1), e3 = MultiIndex::unit(3, 2);
  want.add_term(e3, z, 1);
  want.add_term(z, e3, 1);
  want.add_term(e1, e2, make_rational(1, 2));
  want.add_term(e2, e1, make_rational(-1, 2));
  out.require(got.equal_at(want, N), "heisenberg3 d3 coproduct: " + got.render(lie.labels()));
}

// ---------- criterion 7 ----------

void criterion_hopf(Outcome& out) {
  struct Run {
    std::string name;
    int N, M;
  };
  for (const Run& run : {Run{"abelian:2", 6, 2}, Run{"heisenberg3", 6, 2}, Run{"sl2", 6, 2}, Run{"solvable2", 8, 3}}) {
    PhaseSpace ps(builtin(run.name));
    Algebroid alg(ps);
    Report r = axiom_suite(alg, run.N, run.M);
    if (all_pass(r, out, run.name)) out.note(run.name + ": all " + std::to_string(r.checks().size()) + " checks pass");
    const CheckResult* inv = r.find("hopf.S_inverse");
    out.require(inv && inv->status == Status::pass, run.name + " S S^-1 = id on the generator set");
  }
  // S^2 on solvable2, directly
  PhaseSpace ps(builtin("solvable2"));
  Algebroid alg(ps);
  const int N = 8;
  PhaseElement s0 = alg.antipode(alg.antipode(ps.x(0, N)));
  PhaseElement s1 = alg.antipode(alg.antipode(ps.x(1, N)));
  const int q = std::min(s0.prec(), s1.prec());
  out.require(s0.equal_at(ps.x(0, q) + ps.one(q), q), "S^2(x0) = x0 + 1; computed " + s0.render(ps.labels()));
  out.require(s1.equal_at(ps.x(1, q), q), "S^2(x1) = x1; computed " + s1.render(ps.labels()));
}

// ---------- criterion 8: abelian phase space against a plain Weyl algebra ----------

// sum c x^J d^A, with d-degree <= prec
struct Weyl {
  std::map<std::pair<MultiIndex, MultiIndex>, Rational, std::function<bool(const std::pair<MultiIndex, MultiIndex>&,
                                                                           const std::pair<MultiIndex, MultiIndex>&)>>
      t{[](const auto& a, const auto& b) {
        GradedOrder g;
        if (a.first != b.first) return g(a.first, b.first);
        return g(a.second, b.second);
      }};
  int prec = 0;
  void add(const MultiIndex& j, const MultiIndex& a, const Rational& c) {
    if (a.degree() > prec || c == 0) return;
    auto& v = t[{j, a}];
    v += c;
    if (v == 0) t.erase({j, a});
  }
  int x_degree() const {
    int d = 0;
    for (const auto& [k, c] : t) d = std::max(d, k.first.degree());
    return d;
  }
};

Weyl from_phase(const PhaseElement& h) {
  Weyl w;
  w.prec = h.prec();
  for (const auto& [j, p] : h.terms())
    for (const auto& [a, c] : p.terms()) w.add(j, a, c);
  return w;
}

bool same(const Weyl& a, const Weyl& b, int p) {
  Weyl x, y;
  x.prec = y.prec = p;
  for (const auto& [k, c] : a.t) x.add(k.first, k.second, c);
  for (const auto& [k, c] : b.t) y.add(k.first, k.second, c);
  return x.t == y.t;
}

// lower falling factorial K!/(K-L)!
Rational falling(const MultiIndex& k, const MultiIndex& l) {
  return Rational(k.factorial()) / Rational((k - l).factorial());
}

std::vector<MultiIndex> below(const MultiIndex& a, const MultiIndex& k) {
  std::vector<MultiIndex> out;
  for (const auto& l : monomials_up_to(a.size(), std::min(a.degree(), k.degree())))
    if (l.divides(a) && l.divides(k)) out.push_back(l);
  return out;
}

// (x^J d^A)(x^K d^B) = sum_L binom(A, L) K!/(K-L)! x^{J+K-L} d^{A-L+B}
Weyl weyl_product(const Weyl& a, const Weyl& b) {
  Weyl out;
  out.prec = std::min(a.prec - b.x_degree(), b.prec);
  for (const auto& [ja, ca] : a.t)
    for (const auto& [kb, cb] : b.t)
      for (const auto& l : below(ja.second, kb.first))
        out.add(ja.first + kb.first - l, ja.second - l + kb.second,
                ca * cb * Rational(multiindex_binomial(ja.second, l)) * falling(kb.first, l));
  return out;
}

using Poly = std::map<MultiIndex, Rational, GradedOrder>;

// d^A f
Poly differentiate(const Poly& f, const MultiIndex& a) {
  Poly out;
  for (const auto& [k, c] : f)
    if (a.divides(k)) out[k - a] += c * falling(k, a);
  return out;
}

Poly to_poly(const UEnvElement& u) { return Poly(u.terms().begin(), u.terms().end()); }

Poly clean(Poly p) {
  for (auto it = p.begin(); it != p.end();) it = it->second == 0 ? p.erase(it) : std::next(it);
  return p;
}

// h |> f = sum c x^J (d^A f)
Poly black_left(const Weyl& h, const Poly& f) {
  Poly out;
  for (const auto& [ja, c] : h.t)
    for (const auto& [k, v] : differentiate(f, ja.second)) out[ja.first + k] += c * v;
  return clean(out);
}

// u <| h = sum c (-d)^A (u x^J)
Poly black_right(const Poly& u, const Weyl& h) {
  Poly out;
  for (const auto& [ja, c] : h.t) {
    Poly ux;
    for (const auto& [k, v] : u) ux[k + ja.first] += v;
    Rational sign = ja.second.degree() % 2 ? -1 : 1;
    for (const auto& [k, v] : differentiate(ux, ja.second)) out[k] += sign * c * v;
  }
  return clean(out);
}

// S(x^J d^A) = (-d)^A x^J
Weyl weyl_antipode(const Weyl& h) {
  Weyl out;
  out.prec = h.prec;
  for (const auto& [ja, c] : h.t) {
    Rational sign = ja.second.degree() % 2 ? -1 : 1;
    for (const auto& l : below(ja.second, ja.first))
      out.add(ja.first - l, ja.second - l, sign * c * Rational(multiindex_binomial(ja.second, l)) * falling(ja.first, l));
  }
  return out;
}

PhaseElement random_phase(std::mt19937& rng, std::size_t n, int prec) {
  std::uniform_int_distribution<int> deg(0, 2), coef(-3, 3), count(1, 3);
  PhaseElement h(Side::X, n, prec);
  int t = count(rng);
  for (int i = 0; i < t; ++i) {
    auto xs = monomials_of_degree(n, deg(rng)), ds = monomials_of_degree(n, deg(rng));
    std::uniform_int_distribution<std::size_t> px(0, xs.size() - 1), pd(0, ds.size() - 1);
    h.add_term(xs[px(rng)], TruncatedSeries::monomial(n, prec, ds[pd(rng)], coef(rng)));
  }
  return h;
}

void criterion_degeneration(Outcome& out) {
  std::mt19937 rng(kSeed);
  for (std::size_t n = 1; n <= 3; ++n) {
    const std::string name = "abelian:" + std::to_string(n);
    PhaseSpace ps(builtin(name));
    Algebroid alg(ps);
    const int P = 6, M = 2;
    int mismatches = 0;
    for (int trial = 0; trial < 25; ++trial) {
      PhaseElement a = random_phase(rng, n, P), b = random_phase(rng, n, P);
      PhaseElement ab = ps.multiply(a, b);
      Weyl w = weyl_product(from_phase(a), from_phase(b));
      if (ab.prec() != w.prec || !same(from_phase(ab), w, w.prec)) ++mismatches;
      // black actions on every monomial of degree <= 2
      for (const auto& k : monomials_up_to(n, 2)) {
        UEnvElement f = UEnvElement::monomial(k);
        if (to_poly(ps.black_left(a, f)) != black_left(from_phase(a), to_poly(f))) ++mismatches;
        if (to_poly(ps.black_right(f, a)) != black_right(to_poly(f), from_phase(a))) ++mismatches;
      }
      PhaseElement s = alg.antipode(a);
      if (!same(from_phase(s), weyl_antipode(from_phase(a)), s.prec())) ++mismatches;
    }
    out.require(mismatches == 0, name + ": " + std::to_string(mismatches) + " mismatches against the Weyl oracle");
    for (std::size_t m = 0; m < n; ++m) {
      const std::string g = name + " generator " + std::to_string(m);
      out.require(alg.antipode(ps.x(m, P)).equal_at(ps.x(m, P), P - 1), g + ": S(x) = x");
      out.require(alg.antipode(ps.d(m, P)).equal_at(ps.d(m, P) * Rational(-1), P), g + ": S(d) = -d");
      TensorElement prim;
      prim.add(ps.d(m, M), ps.one(M));
      prim.add(ps.one(M), ps.d(m, M));
      TensorElement tl = alg.delta_L(ps.d(m, 2 * M + 2), M);
      tl -= prim;
      out.require(!ideal_test(ps, tl, M), g + ": Delta^L(d) primitive");
      TensorElement tr = alg.delta_R(ps.d(m, 2 * M + 2), M);
      tr -= prim;
      out.require(!ideal_test_right(ps, tr, M), g + ": Delta^R(d) primitive");
    }
    // series coproduct: binomial splitting of d^A
    for (const auto& a : monomials_up_to(n, 3)) {
      SeriesTensor got = alg.series_coproduct(TruncatedSeries::monomial(n, 8, a), 4, 4);
      SeriesTensor want(n, 4);
      for (const auto& l : monomials_up_to(n, a.degree()))
        if (l.divides(a)) want.add_term(l, a - l, Rational(multiindex_binomial(a, l)));
      out.require(got.equal_at(want, 4), name + ": coproduct of d^" + a.to_string());
    }
  }
}

// ---------- criterion 9 ----------

// brute-force Jacobi: sum over cyclic (mu, nu, rho) of [[x_mu, x_nu], x_rho]
bool violates_jacobi(const LieAlgebra& l) {
  const std::size_t n = l.dim();
  for (std::size_t a = 0; a < n; ++a)
    for (std::size_t b = 0; b < n; ++b)
      for (std::size_t c = 0; c < n; ++c)
        for (std::size_t t = 0; t < n; ++t) {
          Rational s = 0;
          for (std::size_t k = 0; k < n; ++k)
            s += l.constant(k, a, b) * l.constant(t, k, c) + l.constant(k, b, c) * l.constant(t, k, a) +
                 l.constant(k, c, a) * l.constant(t, k, b);
          if (s != 0) return true;
        }
  return false;
}

void criterion_negative(Outcome& out) {
  const int M = 2;
  for (const auto& name : builtin_names()) {
    auto lie = builtin(name);
    if (lie.is_abelian()) continue;
    PhaseSpace ps(lie);
    int witnesses = 0;
    for (std::size_t m = 0; m < ps.dim(); ++m) {
      bool central = true;
      for (const auto& e : lie.nonzero_entries())
        if (e.mu == m || e.nu == m) central = false;
      TensorElement t;
      t.add(ps.x(m, M), ps.one(M));
      t.add(ps.one(M) * Rational(-1), ps.x(m, M));
      auto w = ideal_test(ps, t, M);
      out.require(static_cast<bool>(w) == !central, name + " x" + std::to_string(m) + " (x) 1 - 1 (x) x");
      if (w) {
        ++witnesses;
        out.require(!w->value.is_zero(), name + " witness value is nonzero");
      }
    }
    out.require(witnesses > 0, name + " has a counterexample");
  }

  std::mt19937 rng(kSeed);
  std::uniform_int_distribution<int> coef(-2, 2);
  int rejected = 0, accepted = 0;
  for (int trial = 0; trial < 30; ++trial) {
    LieAlgebra l(3);
    for (std::size_t mu = 0; mu < 3; ++mu)
      for (std::size_t nu = mu + 1; nu < 3; ++nu)
        for (std::size_t lam = 0; lam < 3; ++lam) {
          int c = coef(rng);
          if (c) l.set_bracket(mu, nu, lam, c);
        }
    bool bad = violates_jacobi(l);
    auto v = validate(l);
    out.require(bad == (v.kind == ValidationResult::Kind::jacobi), "random tensor " + std::to_string(trial));
    (bad ? rejected : accepted) += 1;
  }
  out.require(rejected > 0, "some random tensor violates Jacobi");
  out.note(std::to_string(rejected) + " Jacobi-violating random tensors rejected, " + std::to_string(accepted) +
           " valid ones accepted");

  for (const auto& name : {"heisenberg3", "sl2", "solvable2"}) {
    auto lie = builtin(name);
    auto flipped = BernoulliTable::sign_flipped(8);
    Report r;
    r.append(check_realization_bracket(lie, 5, flipped));
    r.append(check_xy_commute(lie, 5, flipped));
    r.append(check_dual_basis(lie, 3, flipped));
    out.require(r.any_failed(), std::string(name) + ": flipped Bernoulli sign is flagged");
    out.require(!matrix_identities_check(lie, 5, flipped).empty(), std::string(name) + ": matrix identities flag it");
  }
}

}  // namespace

int main() {
  struct Criterion {
    const char* title;
    void (*run)(Outcome&);
  };
  const Criterion criteria[] = {
      {"foundations: validation, Bernoulli numbers, phi series", criterion_foundations},
      {"realizations: brackets and the C^N identity", criterion_appendix},
      {"x/y/O commutation identities", criterion_theorem1},
      {"black actions and the deformed Leibniz rules", criterion_theorems23},
      {"dual basis, Heisenberg double, change of basis", criterion_dual},
      {"series coproduct oracle", criterion_coproduct},
      {"Hopf algebroid axiom suite", criterion_hopf},
      {"abelian degeneration to the Weyl algebra", criterion_degeneration},
      {"negative controls", criterion_negative},
  };
  int failed = 0, k = 0;
  for (const auto& c : criteria) {
    ++k;
    Outcome out;
    auto t0 = std::chrono::steady_clock::now();
    try {
      c.run(out);
    } catch (const std::exception& e) {
      out.require(false, std::string("exception: ") + e.what());
    }
    double secs = std::chrono::duration<double>(std::chrono::steady_clock::now() - t0).count();
    std::printf("%s  criterion %d: %s  (%.1f s)\n", out.ok ? "PASS" : "FAIL", k, c.title, secs);
    std::cout << out.notes.str() << std::flush;
    failed += !out.ok;
  }
  std::printf("%d of %d criteria pass\n", k - failed, k);
  return failed ? 1 : 0;
}
