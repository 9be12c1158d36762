#include <functional>
#include <optional>
#include <string>

#include "lieph/phase.hpp"

namespace lieph {

namespace {

using Witness = std::optional<std::string>;

std::string idx(const PhaseSpace& ps, std::initializer_list<std::pair<const char*, std::size_t>> vals) {
  std::string s;
  for (const auto& [name, v] : vals) {
    if (!s.empty()) s += " ";
    s += std::string(name) + "=" + ps.lie().label(v);
  }
  return s;
}

std::string mismatch(const PhaseSpace& ps, const PhaseElement& a, const PhaseElement& b) {
  return ": lhs " + a.render(ps.labels()) + " vs rhs " + b.render(ps.labels());
}

std::string mismatch(const PhaseSpace& ps, const UEnvElement& a, const UEnvElement& b, const std::string& prefix = "x") {
  return ": lhs " + a.render(ps.labels(), prefix) + " vs rhs " + b.render(ps.labels(), prefix);
}

// Loops over (a, b, c) in [0, n)^3 until body returns a witness.
Witness for3(std::size_t n, const std::function<Witness(std::size_t, std::size_t, std::size_t)>& body) {
  for (std::size_t a = 0; a < n; ++a)
    for (std::size_t b = 0; b < n; ++b)
      for (std::size_t c = 0; c < n; ++c)
        if (auto w = body(a, b, c)) return w;
  return std::nullopt;
}

}  // namespace

Report check_theorem1(const PhaseSpace& ps, int N) {
  Report r;
  const std::size_t n = ps.dim();
  const auto& lie = ps.lie();
  const int P = N - 1;

  for (Side s : {Side::X, Side::Y}) {
    const std::string tag = s == Side::X ? ".xform" : ".yform";
    run_check(r, "theorem1.O_y" + tag, "[O^l_m, y_n] = C^l_{r n} O^r_m", N, [&]() -> Witness {
      return for3(n, [&](std::size_t l, std::size_t m, std::size_t nu) -> Witness {
        PhaseElement lhs = ps.commutator(ps.O_entry(l, m, N, s), ps.to_side(ps.y(nu, N), s));
        PhaseElement rhs(s, n, N);
        for (std::size_t rho = 0; rho < n; ++rho) rhs += ps.O_entry(rho, m, N, s) * lie.constant(l, rho, nu);
        if (lhs.equal_at(rhs, P)) return std::nullopt;
        return idx(ps, {{"l", l}, {"m", m}, {"n", nu}}) + mismatch(ps, lhs, rhs);
      });
    });
    run_check(r, "theorem1.O_x" + tag, "[O^l_m, x_n] = C^r_{m n} O^l_r", N, [&]() -> Witness {
      return for3(n, [&](std::size_t l, std::size_t m, std::size_t nu) -> Witness {
        PhaseElement lhs = ps.commutator(ps.O_entry(l, m, N, s), ps.to_side(ps.x(nu, N), s));
        PhaseElement rhs(s, n, N);
        for (std::size_t rho = 0; rho < n; ++rho) rhs += ps.O_entry(l, rho, N, s) * lie.constant(rho, m, nu);
        if (lhs.equal_at(rhs, P)) return std::nullopt;
        return idx(ps, {{"l", l}, {"m", m}, {"n", nu}}) + mismatch(ps, lhs, rhs);
      });
    });
    run_check(r, "theorem1.Oinv_x" + tag, "[(O^-1)^l_m, x_n] = -C^l_{r n} (O^-1)^r_m", N, [&]() -> Witness {
      return for3(n, [&](std::size_t l, std::size_t m, std::size_t nu) -> Witness {
        PhaseElement lhs = ps.commutator(ps.Oinv_entry(l, m, N, s), ps.to_side(ps.x(nu, N), s));
        PhaseElement rhs(s, n, N);
        for (std::size_t rho = 0; rho < n; ++rho) rhs -= ps.Oinv_entry(rho, m, N, s) * lie.constant(l, rho, nu);
        if (lhs.equal_at(rhs, P)) return std::nullopt;
        return idx(ps, {{"l", l}, {"m", m}, {"n", nu}}) + mismatch(ps, lhs, rhs);
      });
    });
    run_check(r, "theorem1.Oinv_y" + tag, "[(O^-1)^l_m, y_n] = -C^r_{m n} (O^-1)^l_r", N, [&]() -> Witness {
      return for3(n, [&](std::size_t l, std::size_t m, std::size_t nu) -> Witness {
        PhaseElement lhs = ps.commutator(ps.Oinv_entry(l, m, N, s), ps.to_side(ps.y(nu, N), s));
        PhaseElement rhs(s, n, N);
        for (std::size_t rho = 0; rho < n; ++rho) rhs -= ps.Oinv_entry(l, rho, N, s) * lie.constant(rho, m, nu);
        if (lhs.equal_at(rhs, P)) return std::nullopt;
        return idx(ps, {{"l", l}, {"m", m}, {"n", nu}}) + mismatch(ps, lhs, rhs);
      });
    });
    run_check(r, "theorem1.x_y_commute" + tag, "[x_m, y_n] = 0", N, [&]() -> Witness {
      for (std::size_t m = 0; m < n; ++m)
        for (std::size_t nu = 0; nu < n; ++nu) {
          PhaseElement c = ps.commutator(ps.to_side(ps.x(m, N), s), ps.to_side(ps.y(nu, N), s));
          if (!c.equal_at(PhaseElement(s, n, P), P))
            return idx(ps, {{"m", m}, {"n", nu}}) + mismatch(ps, c, PhaseElement(s, n, P));
        }
      return std::nullopt;
    });
  }

  for (int inv = 0; inv < 2; ++inv) {
    MatrixSeries o = inv ? ps.Oinv(N) : ps.O(N);
    const std::string name = inv ? "(O^-1)" : "O";
    run_check(r, inv ? "theorem1.quadratic_Oinv" : "theorem1.quadratic_O",
              "C^t_{m n} " + name + "^l_t = C^l_{r s} " + name + "^r_m " + name + "^s_n", N, [&]() -> Witness {
                return for3(n, [&](std::size_t l, std::size_t m, std::size_t nu) -> Witness {
                  TruncatedSeries lhs(n, N), rhs(n, N);
                  for (std::size_t t = 0; t < n; ++t) lhs += o(l, t) * lie.constant(t, m, nu);
                  for (std::size_t rho = 0; rho < n; ++rho)
                    for (std::size_t sg = 0; sg < n; ++sg) {
                      const Rational& c = lie.constant(l, rho, sg);
                      if (c != 0) rhs += o(rho, m) * o(sg, nu) * c;
                    }
                  if (lhs.equal_at(rhs, N)) return std::nullopt;
                  return idx(ps, {{"l", l}, {"m", m}, {"n", nu}}) + ": lhs " + lhs.render(ps.labels()) + " vs rhs " +
                         rhs.render(ps.labels());
                });
              });
  }

  run_check(r, "theorem1.dictionary_homomorphism", "x -> y O extends to an algebra map with inverse y -> x O^-1", N,
            [&]() -> Witness {
              auto basis = monomials_up_to(n, 2);
              for (const auto& j : basis)
                for (const auto& k : basis) {
                  PhaseElement a = PhaseElement::from_u(Side::X, UEnvElement::monomial(j), N);
                  a = ps.multiply(a, ps.series(TruncatedSeries::monomial(n, N, k), Side::X));
                  PhaseElement ya = ps.x_to_y(a);
                  if (!ps.y_to_x(ya).equal_at(a, N)) return "round trip at x_J d^K, J=" + j.to_string() + " K=" + k.to_string();
                  for (std::size_t mu = 0; mu < n; ++mu) {
                    PhaseElement lhs = ps.x_to_y(ps.multiply(a, ps.x(mu, N)));
                    PhaseElement rhs = ps.multiply(ya, ps.x_to_y(ps.x(mu, N)));
                    if (!lhs.equal_at(rhs, P))
                      return "J=" + j.to_string() + " K=" + k.to_string() + " times x_" + lie.label(mu) + mismatch(ps, lhs, rhs);
                  }
                }
              return std::nullopt;
            });
  return r;
}

namespace {

// Loops over PBW monomials f, g of degree <= maxdeg and generator indices.
Witness for_fg(const PhaseSpace& ps, int maxdeg,
               const std::function<Witness(const UEnvElement&, const UEnvElement&, std::size_t, std::size_t)>& body) {
  const std::size_t n = ps.dim();
  auto basis = monomials_up_to(n, maxdeg);
  for (const auto& j : basis)
    for (const auto& k : basis)
      for (std::size_t a = 0; a < n; ++a)
        for (std::size_t c = 0; c < n; ++c)
          if (auto w = body(UEnvElement::monomial(j), UEnvElement::monomial(k), a, c))
            return "f=" + j.to_string() + " g=" + k.to_string() + " " + *w;
  return std::nullopt;
}

}  // namespace

Report check_theorem2(const PhaseSpace& ps, int N, int maxdeg) {
  Report r;
  const std::size_t n = ps.dim();
  const auto& u = ps.u_left();
  auto gen = [&](std::size_t mu) { return UEnvElement::generator(n, mu); };

  run_check(r, "theorem2.x_past_f", "x_a f = (O^b_a |> f) x_b", N, [&]() -> Witness {
    return for_fg(ps, maxdeg, [&](const UEnvElement& f, const UEnvElement& g, std::size_t a, std::size_t c) -> Witness {
      if (!g.coefficient(MultiIndex(n)) || c) return std::nullopt;
      UEnvElement lhs = u.multiply(gen(a), f), rhs(n);
      for (std::size_t b = 0; b < n; ++b) rhs += u.multiply(ps.black_left(ps.O_entry(b, a, N), f), gen(b));
      if (lhs == rhs) return std::nullopt;
      return idx(ps, {{"a", a}}) + mismatch(ps, lhs, rhs);
    });
  });
  run_check(r, "theorem2.O_multiplicative", "O^c_a |> (g f) = (O^b_a |> g)(O^c_b |> f)", N, [&]() -> Witness {
    return for_fg(ps, maxdeg, [&](const UEnvElement& f, const UEnvElement& g, std::size_t a, std::size_t c) -> Witness {
      UEnvElement lhs = ps.black_left(ps.O_entry(c, a, N), u.multiply(g, f)), rhs(n);
      for (std::size_t b = 0; b < n; ++b)
        rhs += u.multiply(ps.black_left(ps.O_entry(b, a, N), g), ps.black_left(ps.O_entry(c, b, N), f));
      if (lhs == rhs) return std::nullopt;
      return idx(ps, {{"a", a}, {"c", c}}) + mismatch(ps, lhs, rhs);
    });
  });
  run_check(r, "theorem2.Oinv_multiplicative", "(O^-1)^c_a |> (g f) = ((O^-1)^c_b |> g)((O^-1)^b_a |> f)", N,
            [&]() -> Witness {
              return for_fg(ps, maxdeg,
                            [&](const UEnvElement& f, const UEnvElement& g, std::size_t a, std::size_t c) -> Witness {
                              UEnvElement lhs = ps.black_left(ps.Oinv_entry(c, a, N), u.multiply(g, f)), rhs(n);
                              for (std::size_t b = 0; b < n; ++b)
                                rhs += u.multiply(ps.black_left(ps.Oinv_entry(c, b, N), g),
                                                  ps.black_left(ps.Oinv_entry(b, a, N), f));
                              if (lhs == rhs) return std::nullopt;
                              return idx(ps, {{"a", a}, {"c", c}}) + mismatch(ps, lhs, rhs);
                            });
            });
  run_check(r, "theorem2.y_acts_by_right_multiplication", "y_a |> f = f x_a", N, [&]() -> Witness {
    return for_fg(ps, maxdeg, [&](const UEnvElement& f, const UEnvElement& g, std::size_t a, std::size_t c) -> Witness {
      if (!g.coefficient(MultiIndex(n)) || c) return std::nullopt;
      UEnvElement lhs = ps.black_left(ps.y(a, N), f), rhs = u.multiply(f, gen(a));
      if (lhs == rhs) return std::nullopt;
      return idx(ps, {{"a", a}}) + mismatch(ps, lhs, rhs);
    });
  });
  run_check(r, "theorem2.x_leibniz", "(x_a |> f) g = (O^b_a |> f)(x_b |> g)", N, [&]() -> Witness {
    return for_fg(ps, maxdeg, [&](const UEnvElement& f, const UEnvElement& g, std::size_t a, std::size_t c) -> Witness {
      if (c) return std::nullopt;
      UEnvElement lhs = u.multiply(ps.black_left(ps.x(a, N), f), g), rhs(n);
      for (std::size_t b = 0; b < n; ++b)
        rhs += u.multiply(ps.black_left(ps.O_entry(b, a, N), f), ps.black_left(ps.x(b, N), g));
      if (lhs == rhs) return std::nullopt;
      return idx(ps, {{"a", a}}) + mismatch(ps, lhs, rhs);
    });
  });
  return r;
}

Report check_theorem3(const PhaseSpace& ps, int N, int maxdeg) {
  Report r;
  const std::size_t n = ps.dim();
  const auto& u = ps.u_right();
  auto gen = [&](std::size_t mu) { return UEnvElement::generator(n, mu); };
  auto yr = [&](const UEnvElement& a, const UEnvElement& b) { return mismatch(ps, a, b, "y"); };
  const Side Y = Side::Y;

  run_check(r, "theorem3.f_past_y", "f y_a = y_b (f <| (O^-1)^b_a)", N, [&]() -> Witness {
    return for_fg(ps, maxdeg, [&](const UEnvElement& f, const UEnvElement& g, std::size_t a, std::size_t c) -> Witness {
      if (!g.coefficient(MultiIndex(n)) || c) return std::nullopt;
      UEnvElement lhs = u.multiply(f, gen(a)), rhs(n);
      for (std::size_t b = 0; b < n; ++b) rhs += u.multiply(gen(b), ps.black_right(f, ps.Oinv_entry(b, a, N, Y)));
      if (lhs == rhs) return std::nullopt;
      return idx(ps, {{"a", a}}) + yr(lhs, rhs);
    });
  });
  // Index order follows from f_past_y applied twice: (g f) y_a = y_c (g <| (O^-1)^c_b)(f <| (O^-1)^b_a).
  run_check(r, "theorem3.O_multiplicative", "(g f) <| O^c_a = (g <| O^b_a)(f <| O^c_b)", N, [&]() -> Witness {
    return for_fg(ps, maxdeg, [&](const UEnvElement& f, const UEnvElement& g, std::size_t a, std::size_t c) -> Witness {
      UEnvElement lhs = ps.black_right(u.multiply(g, f), ps.O_entry(c, a, N, Y)), rhs(n);
      for (std::size_t b = 0; b < n; ++b)
        rhs += u.multiply(ps.black_right(g, ps.O_entry(b, a, N, Y)), ps.black_right(f, ps.O_entry(c, b, N, Y)));
      if (lhs == rhs) return std::nullopt;
      return idx(ps, {{"a", a}, {"c", c}}) + yr(lhs, rhs);
    });
  });
  run_check(r, "theorem3.Oinv_multiplicative", "(g f) <| (O^-1)^c_a = (g <| (O^-1)^c_b)(f <| (O^-1)^b_a)", N,
            [&]() -> Witness {
              return for_fg(ps, maxdeg,
                            [&](const UEnvElement& f, const UEnvElement& g, std::size_t a, std::size_t c) -> Witness {
                              UEnvElement lhs = ps.black_right(u.multiply(g, f), ps.Oinv_entry(c, a, N, Y)), rhs(n);
                              for (std::size_t b = 0; b < n; ++b)
                                rhs += u.multiply(ps.black_right(g, ps.Oinv_entry(c, b, N, Y)),
                                                  ps.black_right(f, ps.Oinv_entry(b, a, N, Y)));
                              if (lhs == rhs) return std::nullopt;
                              return idx(ps, {{"a", a}, {"c", c}}) + yr(lhs, rhs);
                            });
            });
  run_check(r, "theorem3.z_acts_by_left_multiplication", "f <| z_a = y_a f", N, [&]() -> Witness {
    return for_fg(ps, maxdeg, [&](const UEnvElement& f, const UEnvElement& g, std::size_t a, std::size_t c) -> Witness {
      if (!g.coefficient(MultiIndex(n)) || c) return std::nullopt;
      UEnvElement lhs = ps.black_right(f, ps.z(a, N)), rhs = u.multiply(gen(a), f);
      if (lhs == rhs) return std::nullopt;
      return idx(ps, {{"a", a}}) + yr(lhs, rhs);
    });
  });
  run_check(r, "theorem3.y_leibniz", "g (f <| y_a) = (g <| y_b)(f <| (O^-1)^b_a)", N, [&]() -> Witness {
    return for_fg(ps, maxdeg, [&](const UEnvElement& f, const UEnvElement& g, std::size_t a, std::size_t c) -> Witness {
      if (c) return std::nullopt;
      UEnvElement lhs = u.multiply(g, ps.black_right(f, ps.y(a, N))), rhs(n);
      for (std::size_t b = 0; b < n; ++b)
        rhs += u.multiply(ps.black_right(g, ps.y(b, N)), ps.black_right(f, ps.Oinv_entry(b, a, N, Y)));
      if (lhs == rhs) return std::nullopt;
      return idx(ps, {{"a", a}}) + yr(lhs, rhs);
    });
  });
  return r;
}

Report check_beta_black(const PhaseSpace& ps, int N, int maxdeg) {
  Report r;
  run_check(r, "bimodule.beta_L_black", "beta^L(g) |> f = f g", N, [&]() -> Witness {
    return for_fg(ps, maxdeg, [&](const UEnvElement& f, const UEnvElement& g, std::size_t a, std::size_t c) -> Witness {
      if (a || c) return std::nullopt;
      UEnvElement lhs = ps.black_left(ps.beta_L(g, N), f), rhs = ps.u_left().multiply(f, g);
      if (lhs == rhs) return std::nullopt;
      return mismatch(ps, lhs, rhs);
    });
  });
  run_check(r, "bimodule.beta_R_black", "u <| beta^R(v) = v u", N, [&]() -> Witness {
    return for_fg(ps, maxdeg, [&](const UEnvElement& f, const UEnvElement& g, std::size_t a, std::size_t c) -> Witness {
      if (a || c) return std::nullopt;
      UEnvElement lhs = ps.black_right(f, ps.beta_R(g, N)), rhs = ps.u_right().multiply(g, f);
      if (lhs == rhs) return std::nullopt;
      return mismatch(ps, lhs, rhs, "y");
    });
  });
  return r;
}

}  // namespace lieph
