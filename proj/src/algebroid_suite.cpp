#include <functional>
#include <future>
#include <random>

#include "lieph/algebroid.hpp"

namespace lieph {

namespace {

using Witness = std::optional<std::string>;

// Exact generator, materialized at any precision.
struct Gen {
  std::string name;
  std::function<PhaseElement(int)> make;
};

std::vector<Gen> generator_set(const PhaseSpace& ps, unsigned seed) {
  const std::size_t n = ps.dim();
  std::vector<Gen> base;
  for (std::size_t m = 0; m < n; ++m) {
    const std::string l = ps.lie().label(m);
    base.push_back({"x" + l, [&ps, m](int p) { return ps.x(m, p); }});
    base.push_back({"y" + l, [&ps, m](int p) { return ps.y(m, p); }});
    base.push_back({"d" + l, [&ps, m](int p) { return ps.d(m, p); }});
  }
  for (std::size_t a = 0; a < n; ++a)
    for (std::size_t b = 0; b < n; ++b)
      base.push_back({"O^" + ps.lie().label(a) + "_" + ps.lie().label(b),
                      [&ps, a, b](int p) { return ps.O_entry(a, b, p); }});
  std::vector<Gen> out = base;
  // Products of two base generators: x-degree at most 2.
  std::mt19937 rng(seed);
  for (int i = 0; i < 3; ++i) {
    Gen f = base[rng() % base.size()], g = base[rng() % base.size()];
    out.push_back({f.name + "*" + g.name, [&ps, f, g](int p) {
                     return ps.multiply(f.make(p + 2), g.make(p + 2)).truncated(p);
                   }});
  }
  return out;
}

Witness for_gens(const std::vector<Gen>& gens, const std::function<Witness(const Gen&)>& body) {
  for (const auto& g : gens)
    if (auto w = body(g)) return "h=" + g.name + " " + *w;
  return std::nullopt;
}

// Exact comparison at the smaller of the two precisions.
Witness same(const PhaseSpace& ps, const PhaseElement& a, const PhaseElement& b) {
  PhaseElement bb = ps.to_side(b, a.side());
  int q = std::min(a.prec(), bb.prec());
  if (q < 0) throw InsufficientPrecision("comparison", 0, q);
  if (a.equal_at(bb, q)) return std::nullopt;
  return "at prec " + std::to_string(q) + ": lhs " + a.truncated(q).render(ps.labels()) + " vs rhs " +
         bb.truncated(q).render(ps.labels());
}

Witness left_witness(const PhaseSpace& ps, const std::optional<IdealWitness>& w) {
  if (!w) return std::nullopt;
  return w->describe(ps.labels(), "x");
}

Witness right_witness(const PhaseSpace& ps, const std::optional<IdealWitness>& w) {
  if (!w) return std::nullopt;
  return w->describe(ps.labels(), "y");
}

PhaseElement neg(const PhaseElement& h) { return h * Rational(-1); }

// Degree in the y generators of the Y form; sizes the precision a check needs.
int y_degree(const PhaseSpace& ps, const Gen& g) { return ps.to_side(g.make(4), Side::Y).gen_degree(); }

// A check to run: id, identity text, body.
struct Job {
  std::string id, identity;
  std::function<Witness()> body;
};

Report run_jobs(const std::vector<Job>& jobs, int precision) {
  std::vector<std::future<Report>> futures;
  for (const auto& j : jobs)
    futures.push_back(std::async(std::launch::async, [&j, precision]() {
      Report r;
      run_check(r, j.id, j.identity, precision, j.body);
      return r;
    }));
  Report out;
  for (auto& f : futures) out.append(f.get());
  return out;
}

}  // namespace

Report coring_suite(const Algebroid& alg, int N, int M, unsigned seed) {
  const PhaseSpace& ps = alg.space();
  const std::size_t n = ps.dim();
  auto gens = generator_set(ps, seed);
  std::vector<Job> jobs;

  jobs.push_back({"coring.delta_L_values",
                  "Delta^L(x_m) = x_m (x) 1, Delta^L(y_m) = 1 (x) y_m, Delta^L(O^m_n) = O^g_n (x) O^m_g, "
                  "Delta^L((O^-1)^m_n) = (O^-1)^m_g (x) (O^-1)^g_n mod I",
                  [&, n, M]() -> Witness {
                    const int P = 2 * M;
                    auto test = [&](const std::string& what, const PhaseElement& h, TensorElement expect) -> Witness {
                      TensorElement t = alg.delta_L(h, M);
                      t -= expect;
                      if (auto w = ideal_test(ps, t, M)) return what + " " + w->describe(ps.labels(), "x");
                      return std::nullopt;
                    };
                    for (std::size_t m = 0; m < n; ++m) {
                      TensorElement e;
                      e.add(ps.x(m, M), ps.one(M));
                      if (auto w = test("x" + ps.lie().label(m), ps.x(m, P), e)) return w;
                      TensorElement f;
                      f.add(ps.one(M), ps.y(m, M));
                      if (auto w = test("y" + ps.lie().label(m), ps.y(m, P), f)) return w;
                      for (std::size_t k = 0; k < n; ++k) {
                        TensorElement o, oi;
                        for (std::size_t g = 0; g < n; ++g) {
                          o.add(ps.O_entry(g, k, M), ps.O_entry(m, g, M));
                          oi.add(ps.Oinv_entry(m, g, M), ps.Oinv_entry(g, k, M));
                        }
                        std::string tag = ps.lie().label(m) + "_" + ps.lie().label(k);
                        if (auto w = test("O^" + tag, ps.O_entry(m, k, P), o)) return w;
                        if (auto w = test("(O^-1)^" + tag, ps.Oinv_entry(m, k, P), oi)) return w;
                      }
                    }
                    return std::nullopt;
                  }});

  // Values forced by y_J y_K <| Q = sum (y_J <| Q_(1))(y_K <| Q_(2)): on series
  // this is the same Delta as on the left, and beta^R(u) goes to the first slot.
  auto delta_R_values = [&, n, M](bool printed) -> Witness {
    // Second slots have y-degree <= 1: cut at M + 1.
    const int P = 2 * M + 1 + 2;
    const int Q = M + 1;
    auto test = [&](const std::string& what, const PhaseElement& h, TensorElement expect) -> Witness {
      TensorElement t = alg.delta_R(h, M, M + 1);
      t -= expect;
      if (auto w = ideal_test_right(ps, t, M)) return what + " " + w->describe(ps.labels(), "y");
      return std::nullopt;
    };
    for (std::size_t m = 0; m < n; ++m) {
      TensorElement e;
      e.add(ps.one(Q, Side::Y), ps.y(m, Q));
      if (auto w = test("y" + ps.lie().label(m), ps.y(m, P), e)) return w;
      TensorElement f;
      if (printed)
        f.add(ps.one(Q, Side::Y), ps.x(m, Q));
      else
        f.add(ps.to_side(ps.x(m, Q), Side::Y), ps.one(Q, Side::Y));
      if (auto w = test("x" + ps.lie().label(m), ps.x(m, P), f)) return w;
      for (std::size_t k = 0; k < n; ++k) {
        TensorElement o, oi;
        for (std::size_t g = 0; g < n; ++g) {
          if (printed) {
            o.add(ps.O_entry(m, g, Q, Side::Y), ps.O_entry(g, k, Q, Side::Y));
            oi.add(ps.Oinv_entry(g, k, Q, Side::Y), ps.Oinv_entry(m, g, Q, Side::Y));
          } else {
            o.add(ps.O_entry(g, k, Q, Side::Y), ps.O_entry(m, g, Q, Side::Y));
            oi.add(ps.Oinv_entry(m, g, Q, Side::Y), ps.Oinv_entry(g, k, Q, Side::Y));
          }
        }
        std::string tag = ps.lie().label(m) + "_" + ps.lie().label(k);
        if (auto w = test("O^" + tag, ps.O_entry(m, k, P, Side::Y), o)) return w;
        if (auto w = test("(O^-1)^" + tag, ps.Oinv_entry(m, k, P, Side::Y), oi)) return w;
      }
    }
    return std::nullopt;
  };
  jobs.push_back({"coring.delta_R_values",
                  "Delta^R(y_m) = 1 (x) y_m, Delta^R(x_m) = x_m (x) 1, Delta^R(O^m_n) = O^g_n (x) O^m_g, "
                  "Delta^R((O^-1)^m_n) = (O^-1)^m_g (x) (O^-1)^g_n mod I~",
                  [=]() -> Witness { return delta_R_values(false); }});
  jobs.push_back({"coring.delta_R_values_printed",
                  "Delta^R(y_m) = 1 (x) y_m, Delta^R(x_m) = 1 (x) x_m, Delta^R(O^m_n) = O^m_g (x) O^g_n, "
                  "Delta^R((O^-1)^m_n) = (O^-1)^g_n (x) (O^-1)^m_g mod I~",
                  [=]() -> Witness { return delta_R_values(true); }});

  jobs.push_back({"coring.counit_L",
                  "sum alpha^L(eps^L(h_(1))) h_(2) = h = sum beta^L(eps^L(h_(2))) h_(1)", [&, N]() -> Witness {
                    return for_gens(gens, [&](const Gen& g) -> Witness {
                      PhaseElement h = g.make(2 * N);
                      TensorElement t = alg.delta_L(h, N);
                      PhaseElement l1(Side::X, ps.dim(), N), l2(Side::X, ps.dim(), N);
                      for (const auto& [a, b] : t.terms) {
                        l1 += ps.multiply(ps.alpha_L(ps.counit_L(a), N), b);
                        l2 += ps.multiply(ps.beta_L(ps.counit_L(b), N + 4), a);
                      }
                      if (auto w = same(ps, l1, h)) return "first: " + *w;
                      if (auto w = same(ps, l2, h)) return "second: " + *w;
                      return std::nullopt;
                    });
                  }});

  jobs.push_back({"coring.counit_R",
                  "sum h_(1) alpha^R(eps^R(h_(2))) = h = sum h_(2) beta^R(eps^R(h_(1)))", [&, N]() -> Witness {
                    return for_gens(gens, [&](const Gen& g) -> Witness {
                      PhaseElement h = g.make(2 * N + 4);
                      TensorElement t = alg.delta_R(h, N);
                      PhaseElement l1(Side::Y, ps.dim(), N), l2(Side::Y, ps.dim(), N);
                      for (const auto& [a, b] : t.terms) {
                        l1 += ps.multiply(a, ps.alpha_R(ps.counit_R(b), N));
                        l2 += ps.multiply(b, ps.beta_R(ps.counit_R(a), N));
                      }
                      if (auto w = same(ps, l1, h)) return "first: " + *w;
                      if (auto w = same(ps, l2, h)) return "second: " + *w;
                      return std::nullopt;
                    });
                  }});

  jobs.push_back({"coring.coassociativity_L", "(Delta^L (x) id) Delta^L = (id (x) Delta^L) Delta^L mod I^(3)",
                  [&, M]() -> Witness {
                    return for_gens(gens, [&](const Gen& g) -> Witness {
                      PhaseElement h = g.make(3 * M);
                      TripleTensor t;
                      for (const auto& [a, b] : alg.delta_L(h, 2 * M, M).terms)
                        for (const auto& [a1, a2] : alg.delta_L(a, M).terms) t.push_back({a1, a2, b});
                      for (const auto& [a, b] : alg.delta_L(h, M, 2 * M).terms)
                        for (const auto& [b1, b2] : alg.delta_L(b, M).terms) t.push_back({neg(a), b1, b2});
                      return left_witness(ps, triple_ideal_test(ps, t, M));
                    });
                  }});

  jobs.push_back({"coring.coassociativity_R", "(Delta^R (x) id) Delta^R = (id (x) Delta^R) Delta^R mod I~^(3)",
                  [&, M]() -> Witness {
                    return for_gens(gens, [&](const Gen& g) -> Witness {
                      // Right ideal tests need slot prec >= M + y-degree; y-degrees here are <= 2.
                      const int G = 2;
                      const int Pb = 2 * M + 3 * G;
                      PhaseElement h = g.make(M + Pb + 2 * G);
                      TripleTensor t;
                      for (const auto& [a, b] : alg.delta_R(h, 2 * M, M + G).terms)
                        for (const auto& [a1, a2] : alg.delta_R(a, M).terms) t.push_back({a1, a2, b});
                      for (const auto& [a, b] : alg.delta_R(h, M, Pb).terms)
                        for (const auto& [b1, b2] : alg.delta_R(b, M, M + G).terms) t.push_back({neg(a), b1, b2});
                      return right_witness(ps, triple_ideal_test_right(ps, t, M));
                    });
                  }});

  jobs.push_back({"coring.bimodule_L",
                  "Delta^L(alpha^L(a) beta^L(b) h) = alpha^L(a) h_(1) (x) beta^L(b) h_(2) mod I, a, b in {1, x_m}",
                  [&, n, M]() -> Witness {
                    return for_gens(gens, [&](const Gen& g) -> Witness {
                      const int P = 2 * M;
                      PhaseElement h = g.make(P);
                      TensorElement t = alg.delta_L(h, M);
                      for (std::size_t m = 0; m < n; ++m)
                        for (int which = 0; which < 2; ++which) {
                          UEnvElement x = UEnvElement::generator(n, m);
                          PhaseElement e = which == 0 ? ps.multiply(ps.alpha_L(x, P + 4), h)
                                                      : ps.multiply(ps.beta_L(x, P + 4), h);
                          TensorElement d = alg.delta_L(e, M);
                          for (const auto& [a, b] : t.terms) {
                            if (which == 0) d.add(neg(ps.multiply(ps.alpha_L(x, M + 4), a)), b);
                            else d.add(neg(a), ps.multiply(ps.beta_L(x, M + 4), b));
                          }
                          if (auto w = ideal_test(ps, d, M))
                            return std::string(which == 0 ? "a=" : "b=") + "x" + ps.lie().label(m) + " " +
                                   w->describe(ps.labels(), "x");
                        }
                      return std::nullopt;
                    });
                  }});

  jobs.push_back({"coring.bimodule_R",
                  "Delta^R(h beta^R(a) alpha^R(b)) = h_(1) beta^R(a) (x) h_(2) alpha^R(b) mod I~, a, b in {1, y_m}",
                  [&, n, M]() -> Witness {
                    return for_gens(gens, [&](const Gen& g) -> Witness {
                      const int G = y_degree(ps, g);
                      // Slots after the extra factor have y-degree up to G + 1 and lose one.
                      const int n1 = M + 2, n2 = M + G + 2;
                      PhaseElement h = g.make(n1 + n2 + 2 * G + 2);
                      TensorElement t = alg.delta_R(h, n1, n2);
                      for (std::size_t m = 0; m < n; ++m)
                        for (int which = 0; which < 2; ++which) {
                          UEnvElement y = UEnvElement::generator(n, m);
                          PhaseElement hy = ps.to_side(h, Side::Y);
                          PhaseElement e = which == 0 ? ps.multiply(hy, ps.beta_R(y, hy.prec()))
                                                      : ps.multiply(hy, ps.alpha_R(y, hy.prec()));
                          TensorElement d = alg.delta_R(e, M, M + G + 1);
                          for (const auto& [a, b] : t.terms) {
                            if (which == 0) d.add(neg(ps.multiply(a, ps.beta_R(y, n1))), b);
                            else d.add(neg(a), ps.multiply(b, ps.alpha_R(y, n2)));
                          }
                          if (auto w = ideal_test_right(ps, d, M))
                            return std::string(which == 0 ? "a=" : "b=") + "y" + ps.lie().label(m) + " " +
                                   w->describe(ps.labels(), "y");
                        }
                      return std::nullopt;
                    });
                  }});

  return run_jobs(jobs, N);
}

Report bialgebroid_suite(const Algebroid& alg, int N, int M, unsigned seed) {
  const PhaseSpace& ps = alg.space();
  const std::size_t n = ps.dim();
  auto gens = generator_set(ps, seed);
  // Second factors for the multiplicativity checks: the algebra generators.
  std::vector<Gen> small;
  for (const auto& g : gens)
    if (g.name.find('*') == std::string::npos && g.name.rfind("O^", 0) != 0) small.push_back(g);
  small.push_back(gens[3 * n]);
  std::vector<Job> jobs;

  jobs.push_back({"bialgebroid.source_target",
                  "alpha^L eps^L beta^R = beta^R, beta^L eps^L alpha^R = alpha^R, alpha^R eps^R beta^L = beta^L, "
                  "beta^R eps^R alpha^L = alpha^L",
                  [&, n, N]() -> Witness {
                    const int P = N + 4;
                    for (const auto& j : monomials_up_to(n, 2)) {
                      UEnvElement u = UEnvElement::monomial(j);
                      std::string tag = "u=" + j.to_string() + " ";
                      if (auto w = same(ps, ps.alpha_L(ps.counit_L(ps.beta_R(u, P)), N), ps.beta_R(u, N)))
                        return tag + "alpha^L eps^L beta^R " + *w;
                      if (auto w = same(ps, ps.beta_L(ps.counit_L(ps.alpha_R(u, P)), N), ps.alpha_R(u, N)))
                        return tag + "beta^L eps^L alpha^R " + *w;
                      if (auto w = same(ps, ps.alpha_R(ps.counit_R(ps.beta_L(u, P)), N), ps.beta_L(u, N)))
                        return tag + "alpha^R eps^R beta^L " + *w;
                      if (auto w = same(ps, ps.beta_R(ps.counit_R(ps.alpha_L(u, P)), N), ps.alpha_L(u, N)))
                        return tag + "beta^R eps^R alpha^L " + *w;
                    }
                    return std::nullopt;
                  }});

  jobs.push_back({"bialgebroid.counit_L",
                  "eps^L(h alpha^L(f)) = h |> f; eps^L(h h') = eps^L(h alpha^L(eps^L(h'))) = eps^L(h beta^L(eps^L(h')))",
                  [&, n, N, M]() -> Witness {
                    return for_gens(gens, [&](const Gen& g) -> Witness {
                      PhaseElement h = g.make(N + 4);
                      for (const auto& j : monomials_up_to(n, M)) {
                        UEnvElement f = UEnvElement::monomial(j);
                        UEnvElement a = ps.counit_L(ps.multiply(h, ps.alpha_L(f, N + 4)));
                        UEnvElement b = ps.black_left(h, f);
                        if (a != b) return "f=" + j.to_string() + ": " + a.render(ps.labels()) + " vs " + b.render(ps.labels());
                      }
                      for (const auto& g2 : gens) {
                        PhaseElement h2 = g2.make(N);
                        UEnvElement e2 = ps.counit_L(h2);
                        UEnvElement a = ps.counit_L(ps.multiply(h, h2));
                        UEnvElement b = ps.counit_L(ps.multiply(h, ps.alpha_L(e2, N)));
                        UEnvElement c = ps.counit_L(ps.multiply(h, ps.beta_L(e2, N)));
                        if (a != b || a != c)
                          return "h'=" + g2.name + ": " + a.render(ps.labels()) + ", " + b.render(ps.labels()) + ", " +
                                 c.render(ps.labels());
                      }
                      return std::nullopt;
                    });
                  }});

  jobs.push_back({"bialgebroid.counit_R",
                  "eps^R(alpha^R(u) h) = u <| h; eps^R(h h') = eps^R(alpha^R(eps^R(h)) h') = eps^R(beta^R(eps^R(h)) h')",
                  [&, n, N, M]() -> Witness {
                    return for_gens(gens, [&](const Gen& g) -> Witness {
                      PhaseElement h2 = ps.to_side(g.make(N + 4), Side::Y);
                      for (const auto& j : monomials_up_to(n, M)) {
                        UEnvElement u = UEnvElement::monomial(j);
                        UEnvElement a = ps.counit_R(ps.multiply(ps.alpha_R(u, N + 8), h2));
                        UEnvElement b = ps.black_right(u, h2);
                        if (a != b)
                          return "u=" + j.to_string() + ": " + a.render(ps.labels(), "y") + " vs " + b.render(ps.labels(), "y");
                      }
                      for (const auto& g1 : gens) {
                        PhaseElement h = ps.to_side(g1.make(N + 4), Side::Y);
                        UEnvElement e = ps.counit_R(h);
                        UEnvElement a = ps.counit_R(ps.multiply(h, h2));
                        UEnvElement b = ps.counit_R(ps.multiply(ps.alpha_R(e, N + 8), h2));
                        UEnvElement c = ps.counit_R(ps.multiply(ps.beta_R(e, N + 8), h2));
                        if (a != b || a != c)
                          return "h=" + g1.name + ": " + a.render(ps.labels(), "y") + ", " + b.render(ps.labels(), "y") +
                                 ", " + c.render(ps.labels(), "y");
                      }
                      return std::nullopt;
                    });
                  }});

  jobs.push_back({"bialgebroid.delta_L_multiplicative", "Delta^L(h h') = Delta^L(h) Delta^L(h') mod I",
                  [&, M]() -> Witness {
                    return for_gens(gens, [&](const Gen& g) -> Witness {
                      TensorElement t1 = alg.delta_L(g.make(2 * M + 2), M + 1);
                      for (const auto& g2 : small) {
                        TensorElement t2 = alg.delta_L(g2.make(2 * M + 2), M + 1);
                        TensorElement d = alg.delta_L(ps.multiply(g.make(2 * M + 3), g2.make(2 * M + 3)), M);
                        for (const auto& [a1, b1] : t1.terms)
                          for (const auto& [a2, b2] : t2.terms) d.add(neg(ps.multiply(a1, a2)), ps.multiply(b1, b2));
                        if (auto w = ideal_test(ps, d, M)) return "h'=" + g2.name + " " + w->describe(ps.labels(), "x");
                      }
                      return std::nullopt;
                    });
                  }});

  jobs.push_back({"bialgebroid.delta_R_multiplicative", "Delta^R(h h') = Delta^R(h) Delta^R(h') mod I~",
                  [&, M]() -> Witness {
                    return for_gens(gens, [&](const Gen& g) -> Witness {
                      // First slots are series; a second slot of y-degree k
                      // is tested at precision M + k.
                      const int k = y_degree(ps, g);
                      for (const auto& g2 : small) {
                        const int k2 = y_degree(ps, g2);
                        const int c2 = M + k + k2;
                        TensorElement t1 = alg.delta_R(g.make(2 * M + 3 * k + 2 * k2), M, M + k + 2 * k2);
                        TensorElement t2 = alg.delta_R(g2.make(2 * M + k + 3 * k2), M, c2);
                        const int P = 2 * M + 3 * k + 4 * k2;
                        PhaseElement prod = ps.multiply(ps.to_side(g.make(P), Side::Y), g2.make(P));
                        TensorElement d = alg.delta_R(prod, M, c2);
                        for (const auto& [a1, b1] : t1.terms)
                          for (const auto& [a2, b2] : t2.terms) d.add(neg(ps.multiply(a1, a2)), ps.multiply(b1, b2));
                        if (auto w = ideal_test_right(ps, d, M))
                          return "h'=" + g2.name + " " + w->describe(ps.labels(), "y");
                      }
                      return std::nullopt;
                    });
                  }});

  jobs.push_back({"bialgebroid.takeuchi_L",
                  "sum h_(1) beta^L(a) (x) h_(2) = sum h_(1) (x) h_(2) alpha^L(a) mod I, a = x_m", [&, M]() -> Witness {
                    return for_gens(gens, [&](const Gen& g) -> Witness {
                      return takeuchi_test(ps, alg.delta_L(g.make(2 * M + 2), M + 1), M);
                    });
                  }});

  jobs.push_back({"bialgebroid.takeuchi_R",
                  "sum alpha^R(a) h_(1) (x) h_(2) = sum h_(1) (x) beta^R(a) h_(2) mod I~, a = y_m",
                  [&, M]() -> Witness {
                    return for_gens(gens, [&](const Gen& g) -> Witness {
                      return takeuchi_test_right(ps, alg.delta_R(g.make(2 * M + 8), M + 1, M + 3), M);
                    });
                  }});

  return run_jobs(jobs, N);
}

Report hopf_suite(const Algebroid& alg, int N, int M, unsigned seed) {
  const PhaseSpace& ps = alg.space();
  const std::size_t n = ps.dim();
  const auto& lie = ps.lie();
  auto gens = generator_set(ps, seed);
  std::vector<Gen> base;
  for (const auto& g : gens)
    if (g.name.find('*') == std::string::npos) base.push_back(g);
  auto trace = [&lie, n](std::size_t m) {
    Rational t = 0;
    for (std::size_t l = 0; l < n; ++l) t += lie.constant(l, m, l);
    return t;
  };
  auto shifted = [&](const PhaseElement& e, const Rational& c, int p) { return e + ps.one(p, e.side()) * c; };
  std::vector<Job> jobs;

  jobs.push_back({"hopf.S_beta", "S(beta^L(f)) = alpha^L(f), S(beta^R(u)) = alpha^R(u)", [&, n, N]() -> Witness {
                    for (const auto& j : monomials_up_to(n, 2)) {
                      UEnvElement u = UEnvElement::monomial(j);
                      if (auto w = same(ps, alg.antipode(ps.beta_L(u, N + 4)), ps.alpha_L(u, N)))
                        return "f=" + j.to_string() + " " + *w;
                      if (auto w = same(ps, alg.antipode(ps.beta_R(u, N + 4)), ps.alpha_R(u, N)))
                        return "u=" + j.to_string() + " " + *w;
                    }
                    return std::nullopt;
                  }});

  jobs.push_back({"hopf.S_delta_L", "m (S (x) id) Delta^L(h) = alpha^R(eps^R(h))", [&, N]() -> Witness {
                    return for_gens(gens, [&](const Gen& g) -> Witness {
                      PhaseElement h = g.make(2 * N + 4);
                      TensorElement t = alg.delta_L(h, N + 2);
                      PhaseElement l(Side::X, n, N);
                      for (const auto& [a, b] : t.terms) l += ps.multiply(alg.antipode(a), b);
                      return same(ps, l, ps.alpha_R(ps.counit_R(h), N));
                    });
                  }});

  jobs.push_back({"hopf.S_delta_R", "m (id (x) S) Delta^R(h) = alpha^L(eps^L(h))", [&, N]() -> Witness {
                    return for_gens(gens, [&](const Gen& g) -> Witness {
                      PhaseElement h = g.make(2 * N + 8);
                      TensorElement t = alg.delta_R(h, N + 2);
                      PhaseElement l(Side::Y, n, N);
                      for (const auto& [a, b] : t.terms) l += ps.multiply(a, alg.antipode(b));
                      return same(ps, l, ps.alpha_L(ps.counit_L(h), N));
                    });
                  }});

  jobs.push_back({"hopf.S_values", "S(d^m) = -d^m, S(y_m) = x_m, S(x_m) = (O^-1)^r_m x_r, S(O^m_n) = (O^-1)^m_n",
                  [&, n, N]() -> Witness {
                    for (std::size_t m = 0; m < n; ++m) {
                      std::string l = lie.label(m);
                      if (auto w = same(ps, alg.antipode(ps.d(m, N)), neg(ps.d(m, N)))) return "d" + l + " " + *w;
                      if (auto w = same(ps, alg.antipode(ps.y(m, N + 1)), ps.x(m, N))) return "y" + l + " " + *w;
                      PhaseElement sx(Side::X, n, N);
                      for (std::size_t r = 0; r < n; ++r) sx += ps.multiply(ps.Oinv_entry(r, m, N + 1), ps.x(r, N + 1));
                      if (auto w = same(ps, alg.antipode(ps.x(m, N + 1)), sx)) return "x" + l + " " + *w;
                      for (std::size_t k = 0; k < n; ++k)
                        if (auto w = same(ps, alg.antipode(ps.O_entry(m, k, N)), ps.Oinv_entry(m, k, N)))
                          return "O^" + l + "_" + lie.label(k) + " " + *w;
                    }
                    return std::nullopt;
                  }});

  jobs.push_back({"hopf.S_antihomomorphism", "S(h h') = S(h') S(h)", [&, N]() -> Witness {
                    return for_gens(base, [&](const Gen& g) -> Witness {
                      for (const auto& g2 : base) {
                        PhaseElement h = g.make(N + 4), h2 = g2.make(N + 4);
                        PhaseElement lhs = alg.antipode(ps.multiply(h, h2));
                        PhaseElement rhs = ps.multiply(alg.antipode(h2), alg.antipode(h));
                        if (auto w = same(ps, lhs, rhs)) return "h'=" + g2.name + " " + *w;
                      }
                      return std::nullopt;
                    });
                  }});

  jobs.push_back({"hopf.S_inverse", "S(S^-1(h)) = h = S^-1(S(h))", [&, N]() -> Witness {
                    return for_gens(gens, [&](const Gen& g) -> Witness {
                      PhaseElement h = g.make(N + 4);
                      if (auto w = same(ps, alg.antipode(alg.antipode_inv(h)), h)) return "S S^-1 " + *w;
                      if (auto w = same(ps, alg.antipode_inv(alg.antipode(h)), h)) return "S^-1 S " + *w;
                      return std::nullopt;
                    });
                  }});

  // The shift identities, as printed and with the sign the computation gives.
  struct Shift {
    std::string id, identity;
    int sign;
    bool square;
    bool inverse;
  };
  std::vector<Shift> shifts = {
      {"hopf.S_x", "S(x_m) = y_m - C^l_{m l}", -1, false, false},
      {"hopf.Sinv_y", "S^-1(y_m) = x_m - C^l_{m l}", -1, false, true},
      {"hopf.Sinv_y_derived", "S^-1(y_m) = x_m + C^l_{m l}", +1, false, true},
      {"hopf.S2_x", "S^2(x_m) = x_m + C^l_{m l}", +1, true, false},
      {"hopf.S2_x_derived", "S^2(x_m) = x_m - C^l_{m l}", -1, true, false},
      {"hopf.Sinv2_y", "S^-2(y_m) = y_m + C^l_{m l}", +1, true, true},
  };
  for (const auto& s : shifts)
    jobs.push_back({s.id, s.identity, [&, s, n, N]() -> Witness {
                      for (std::size_t m = 0; m < n; ++m) {
                        // Arguments: x for S, y for S^-1. Results: S(x), S^2(x) in X form etc.
                        PhaseElement arg = s.inverse ? ps.y(m, N + 4) : ps.x(m, N + 4);
                        PhaseElement v = s.inverse ? alg.antipode_inv(arg) : alg.antipode(arg);
                        if (s.square) v = s.inverse ? alg.antipode_inv(v) : alg.antipode(v);
                        PhaseElement target = s.square ? arg : (s.inverse ? ps.x(m, N) : ps.y(m, N));
                        PhaseElement expect = shifted(target.truncated(N), trace(m) * s.sign, N);
                        if (auto w = same(ps, v, expect)) {
                          PhaseElement got = ps.to_side(v, target.side()).truncated(N);
                          return "m=" + lie.label(m) + ": computed " + got.render(ps.labels()) + "; " + *w;
                        }
                      }
                      return std::nullopt;
                    }});

  jobs.push_back({"hopf.z_shift", "beta^R(y_m) = z_m = x_m + C^l_{m l}", [&, n, N]() -> Witness {
                    for (std::size_t m = 0; m < n; ++m)
                      if (auto w = same(ps, ps.z(m, N), shifted(ps.x(m, N), trace(m), N))) return "m=" + lie.label(m) + " " + *w;
                    return std::nullopt;
                  }});

  jobs.push_back({"hopf.mixed_coassociativity_LR",
                  "(Delta^R (x)_{A^L} id) Delta^L = (id (x)_{A^R} Delta^L) Delta^R", [&, M]() -> Witness {
                    const int G = 2;
                    return for_gens(gens, [&](const Gen& g) -> Witness {
                      PhaseElement h = g.make(3 * M + 4 * G);
                      TripleTensor l, r;
                      for (const auto& [a, b] : alg.delta_L(h, 2 * M + 2 * G, M).terms)
                        for (const auto& [a1, a2] : alg.delta_R(a, M).terms) l.push_back({a1, a2, b});
                      for (const auto& [a, b] : alg.delta_R(h, M, 2 * M).terms)
                        for (const auto& [b1, b2] : alg.delta_L(b, M).terms) r.push_back({a, b1, b2});
                      return canonical_difference(ps, canonical_RL(alg, l), canonical_RL(alg, r), M);
                    });
                  }});

  jobs.push_back({"hopf.mixed_coassociativity_RL",
                  "(Delta^L (x)_{A^R} id) Delta^R = (id (x)_{A^L} Delta^R) Delta^L", [&, M]() -> Witness {
                    const int G = 2;
                    return for_gens(gens, [&](const Gen& g) -> Witness {
                      PhaseElement h = g.make(3 * M + 4 * G);
                      TripleTensor l, r;
                      for (const auto& [a, b] : alg.delta_R(h, 2 * M + G, M + G).terms)
                        for (const auto& [a1, a2] : alg.delta_L(a, M, M + G).terms) l.push_back({a1, a2, b});
                      for (const auto& [a, b] : alg.delta_L(h, M, 2 * M + 2 * G).terms)
                        for (const auto& [b1, b2] : alg.delta_R(b, M + G, M + G).terms) r.push_back({a, b1, b2});
                      return canonical_difference(ps, canonical_LR(alg, l), canonical_LR(alg, r), M);
                    });
                  }});

  return run_jobs(jobs, N);
}

Report axiom_suite(const Algebroid& alg, int N, int M, unsigned seed) {
  Report r = coring_suite(alg, N, M, seed);
  r.append(bialgebroid_suite(alg, N, M, seed));
  r.append(hopf_suite(alg, N, M, seed));
  return r;
}

}  // namespace lieph
